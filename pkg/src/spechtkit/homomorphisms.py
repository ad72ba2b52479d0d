"""Semistandard homomorphisms, the psi test maps, Carter-Payne maps and brute-force Hom spaces."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Mapping, Sequence

import numpy as np

from .combinatorics import (
    Partition,
    SemistandardSet,
    Tableau,
    enumerate_semistandard_one_box,
    hook_length_col_b,
    one_box_shift,
    removable_set,
    residue,
    tabloid_of_typed,
)
from .errors import (
    InvalidTableauError,
    NotInSpanError,
    ResidueConditionError,
    SpechtError,
    TheoremCheckError,
    require_odd_characteristic,
)
from .exact_algebra import (
    Field,
    ExactMatrix,
    GF,
    field_for,
    inverse,
    is_prime,
    left_kernel,
    rank,
    vec_equal,
    vec_iadd,
    vec_mod,
)
from .specht import (
    Perm,
    SpechtBasis,
    TabloidModule,
    TranspositionSum,
    Vector,
    act_permutation,
    apply_column_antisymmetriser,
    generators,
    insert_largest,
    polytabloid,
    representation_matrix,
    specht_series_restriction,
    standard_basis,
    transposition_sum_matrix,
    vector_type,
)


def check_prime_or_zero(p: int) -> None:
    if p != 0 and not is_prime(p):
        raise SpechtError(f"p must be a prime or 0, got {p}")


# --------------------------------------------------------------------------
# homomorphisms out of a Specht module


@dataclass
class HomMatrix:
    """A homomorphism ``S^domain -> M^codomain`` known through the images of polytabloids.

    ``image_fn(t)`` returns the image of ``e_t`` for any bijective tableau
    ``t`` of the domain shape, already reduced mod ``p``.  ``coordinates``
    (when the image lies in the Specht module) has one row per standard
    basis vector of the domain and one column per standard basis vector of
    ``S^codomain``.
    """

    domain: Partition
    codomain: tuple[int, ...]
    p: int
    image_fn: Callable[[Tableau], Vector] = field(repr=False)
    _coords: np.ndarray | None = field(default=None, repr=False)

    @property
    def domain_basis(self) -> SpechtBasis:
        return standard_basis(self.domain, force=True)

    def image(self, t: Tableau) -> Vector:
        return self.image_fn(t)

    def images(self) -> list[Vector]:
        return [self.image(s) for s in self.domain_basis.tableaux]

    def entries(self) -> ExactMatrix:
        """Matrix in tabloid coordinates; column ``k`` is the image of the ``k``-th standard polytabloid."""
        M = TabloidModule(self.codomain, force=True)
        cols = [M.coordinates(v) for v in self.images()]
        data = np.array(cols, dtype=object).T if cols else np.zeros((M.dim, 0), dtype=object)
        return ExactMatrix(field_for(self.p).array(data), field_for(self.p))

    def coordinates(self) -> np.ndarray:
        """Rows: images of the domain's standard basis in the standard basis of ``S^codomain``.

        Raises ``NotInSpanError`` if some image leaves the Specht module.
        """
        if self._coords is None:
            Bc = standard_basis(Partition(self.codomain), force=True)
            rows = [Bc.expand(v, self.p) for v in self.images()]
            self._coords = field_for(self.p).array(np.array(rows, dtype=object).reshape(len(rows), Bc.dim))
        return self._coords

    def is_zero(self) -> bool:
        return all(not v for v in self.images())

    def is_equivariant(self) -> bool:
        """Check ``(e_s g) f == (e_s f) g`` for every standard ``s`` and both generators."""
        for g in generators(self.domain.n):
            for s in self.domain_basis.tableaux:
                lhs = self.image(s.permute_symbols(g))
                rhs = act_permutation(self.image(s), g)
                if not vec_equal(lhs, rhs, self.p):
                    return False
        return True

    def then_psi(self, i: int, r: int) -> "HomMatrix":
        psi_i_r = PsiMap(i, r, self.codomain)
        return HomMatrix(self.domain, psi_i_r.target, self.p, lambda t: vec_mod(psi_i_r(self.image(t)), self.p))

    def reduce(self, p: int) -> "HomMatrix":
        return HomMatrix(self.domain, self.codomain, p, lambda t: vec_mod(self.image(t), p))


def combine_homs(homs: Sequence[HomMatrix], coeffs: Sequence[int], p: int = 0) -> HomMatrix:
    if not homs:
        raise SpechtError("need at least one homomorphism")
    dom, cod = homs[0].domain, homs[0].codomain

    def fn(t):
        out: Vector = {}
        for h, c in zip(homs, coeffs):
            if c:
                vec_iadd(out, h.image(t), c)
        return vec_mod(out, p)

    return HomMatrix(dom, cod, p, fn)


def hom_from_coordinates(domain: Partition, codomain: Partition, X: np.ndarray, p: int) -> HomMatrix:
    """Wrap a matrix in standard-basis coordinates (rows = domain basis) as a ``HomMatrix``."""
    Bd = standard_basis(domain, force=True)
    Bc = standard_basis(codomain, force=True)

    Xo = np.asarray(X).astype(object)

    def fn(t):
        c = np.array(Bd.expand(polytabloid(t)), dtype=object)
        return Bc.combine(list(c @ Xo), p)

    return HomMatrix(domain, codomain.parts, p, fn, field_for(p).array(X))


# --------------------------------------------------------------------------
# semistandard homomorphisms


def _row_classes(T: Tableau, t: Tableau, nrows: int | None = None) -> Vector:
    """``{t} theta_T``: every filling row-equivalent to ``T``, read through ``t``."""
    out: Vector = {}
    for U in T.row_equivalents():
        key = tabloid_of_typed(U, t, nrows)
        out[key] = out.get(key, 0) + 1
    return out


def theta_image(T: Tableau, t: Tableau, nrows: int | None = None) -> Vector:
    """``e_t theta_T = sum over U row-equivalent to T of U C_t^-`` for any typed filling ``T``.

    ``nrows`` fixes the number of rows of the target type (trailing parts may be zero).
    """
    if T.shape != t.shape:
        raise InvalidTableauError(f"shapes differ: {T.shape} vs {t.shape}")
    return apply_column_antisymmetriser(_row_classes(T, t, nrows), t)


def theta_T(T: Tableau, check: bool = True) -> HomMatrix:
    """The semistandard homomorphism ``S^shape(T) -> M^type(T)``."""
    if check and not T.is_semistandard():
        raise InvalidTableauError(f"{T} is not semistandard")
    alpha = Partition(T.shape)
    if alpha.parts != T.shape:
        raise InvalidTableauError(f"{T} does not have partition shape")
    return HomMatrix(alpha, T.content(), 0, lambda t: theta_image(T, t))


# --------------------------------------------------------------------------
# psi maps


@dataclass(frozen=True)
class PsiMap:
    """``psi_{i,r}: M^source -> M^target``: keep an ``r``-subset of row ``i+1``, move the rest up."""

    i: int
    r: int
    source: tuple[int, ...]
    allow_full: bool = False

    def __post_init__(self):
        src = tuple(self.source)
        object.__setattr__(self, "source", src)
        if not 1 <= self.i < len(src):
            raise SpechtError(f"psi needs 1 <= i < {len(src)} (rows of {src}), got i={self.i}")
        top = src[self.i] if self.allow_full else src[self.i] - 1
        if not 0 <= self.r <= top:
            raise SpechtError(f"psi_{{{self.i},r}} needs 0 <= r <= {top} for type {src}, got r={self.r}")

    @property
    def target(self) -> tuple[int, ...]:
        s = list(self.source)
        i = self.i - 1
        s[i], s[i + 1] = s[i] + s[i + 1] - self.r, self.r
        return tuple(s)

    def __call__(self, v: Mapping) -> Vector:
        typ = vector_type(v)
        if typ is not None and typ != self.source:
            raise SpechtError(f"psi expects a vector of type {self.source}, got type {typ}")
        i = self.i - 1
        out: Vector = {}
        for tab, c in v.items():
            upper, lower = tab[i], tab[i + 1]
            for keep in combinations(lower, self.r):
                moved = tuple(sorted(upper + tuple(x for x in lower if x not in keep)))
                key = tab[:i] + (moved, keep) + tab[i + 2:]
                out[key] = out.get(key, 0) + c
        return {k: x for k, x in out.items() if x}

    def entries(self, p: int = 0) -> ExactMatrix:
        """Dense matrix, rows indexed by tabloids of the source (small degrees only)."""
        src, tgt = TabloidModule(self.source), TabloidModule(self.target)
        rows = [tgt.coordinates(self({tab: 1})) for tab in src.basis]
        return ExactMatrix(field_for(p).array(np.array(rows, dtype=object).reshape(src.dim, tgt.dim)), field_for(p))


def psi(v: Mapping, i: int, r: int, source_type: Sequence[int] | None = None) -> Vector:
    typ = tuple(source_type) if source_type is not None else vector_type(v)
    if typ is None:
        return {}
    return PsiMap(i, r, typ)(v)


def psi_default(v: Mapping, i: int, source_type: Sequence[int] | None = None) -> Vector:
    """The shorthand ``psi_i = psi_{i, beta_{i+1} - 1}`` (move a single symbol ``i+1``)."""
    typ = tuple(source_type) if source_type is not None else vector_type(v)
    if typ is None:
        return {}
    return PsiMap(i, typ[i] - 1, typ)(v)


def admissible_psi(beta: Sequence[int]) -> list[tuple[int, int]]:
    """All ``(i, r)`` with ``1 <= i < rows`` and ``0 <= r < beta_{i+1}``."""
    beta = tuple(beta)
    return [(i, r) for i in range(1, len(beta)) for r in range(beta[i])]


def specht_membership(v: Mapping, beta: Sequence[int] | None = None, p: int = 0, method: str = "kernel") -> bool:
    """Whether ``v`` lies in the Specht module (over ``Z``/``Q`` for ``p = 0``, else mod ``p``).

    ``method="kernel"`` intersects the kernels of the psi maps;
    ``method="basis"`` peels off standard polytabloids.
    """
    typ = tuple(beta) if beta is not None else vector_type(v)
    v = vec_mod(v, p)
    if not v:
        return True
    if typ is None:
        return True
    if vector_type(v) != typ:
        raise SpechtError(f"vector of type {vector_type(v)} does not live in M^{typ}")
    if method == "kernel":
        return all(not vec_mod(psi(v, i, r, typ), p) for i, r in admissible_psi(typ))
    if method == "basis":
        if Partition(typ).parts != typ:
            raise SpechtError(f"{typ} is not a partition")
        try:
            standard_basis(Partition(typ), force=True).expand(v, p)
        except NotInSpanError:
            return False
        return True
    raise SpechtError(f"unknown membership method {method!r}")


# --------------------------------------------------------------------------
# the explicit Carter-Payne map


def hook(alpha: Partition, b: int, i: int) -> int:
    return hook_length_col_b(alpha, b, i)


@dataclass
class CarterPayneMap:
    """``sum_T (-1)^|T| prod_{u in R \\ T} h_u theta_T`` for a one-box shift ``alpha -> beta``."""

    alpha: Partition
    a: int
    b: int
    p: int
    sets: list[SemistandardSet]
    tableaux: list[Tableau]
    coefficients: dict[SemistandardSet, int]  # over Z

    @property
    def beta(self) -> Partition:
        return one_box_shift(self.alpha, self.a, self.b)

    @property
    def hooks(self) -> tuple[int, ...]:
        return tuple(hook(self.alpha, self.b, i) for i in range(1, self.b))

    @property
    def h_a(self) -> int:
        return hook(self.alpha, self.b, self.a)

    @property
    def removable(self) -> SemistandardSet:
        return removable_set(self.alpha, self.a, self.b)

    def image(self, t: Tableau) -> Vector:
        out: Vector = {}
        for S, T in zip(self.sets, self.tableaux):
            c = self.coefficients[S]
            if c:
                vec_iadd(out, theta_image(T, t), c)
        return vec_mod(out, self.p)

    @property
    def hom(self) -> HomMatrix:
        return HomMatrix(self.alpha, self.beta.parts, self.p, self.image)

    def reduce(self, p: int) -> "CarterPayneMap":
        return CarterPayneMap(self.alpha, self.a, self.b, p, self.sets, self.tableaux, self.coefficients)


def explicit_coefficient(alpha: Partition, a: int, b: int, S: SemistandardSet) -> int:
    R = removable_set(alpha, a, b).members
    c = -1 if len(S) % 2 else 1
    for u in sorted(R - S.members):
        c *= hook(alpha, b, u)
    return c


def carter_payne_explicit(alpha: Partition, a: int, b: int, p: int = 0) -> CarterPayneMap:
    """The explicit map over ``Z`` (``p = 0``) or reduced mod an odd prime ``p`` dividing ``h_a``."""
    one_box_shift(alpha, a, b)
    check_prime_or_zero(p)
    if p:
        require_odd_characteristic(p, "carter_payne_explicit")
        h_a = hook(alpha, b, a)
        if h_a % p:
            raise ResidueConditionError(
                f"residue condition fails: p={p} does not divide h_a={h_a} "
                f"(alpha_a - a = {alpha.part(a) - a}, beta_b - b = {alpha.part(b) + 1 - b})"
            )
    pairs = enumerate_semistandard_one_box(alpha, a, b)
    sets = [S for S, _ in pairs]
    coeffs = {S: explicit_coefficient(alpha, a, b, S) for S in sets}
    return CarterPayneMap(alpha, a, b, p, sets, [T for _, T in pairs], coeffs)


# --------------------------------------------------------------------------
# the Jucys-Murphy construction


@dataclass
class JMCarterPayne:
    """Multiplication by ``prod_{w=v+1}^{u} (L_{n+1} - c_w)`` between layers of ``S^lam`` restricted.

    Layers are numbered from the top removable node, so ``S^lam_1`` is the
    bottom of the series and ``v <= u``.
    """

    lam: Partition
    u: int
    v: int
    p: int
    alpha: Partition
    beta: Partition
    contents: tuple[int, ...]  # c_w for the factors (L - c_w)
    matrix: np.ndarray  # rows: standard basis of S^alpha, columns: standard basis of S^beta, mod p
    integral_ok: bool  # S_u maps into S_v over Z
    lower_ok: bool  # S_{u-1} maps into S_{v-1} mod p

    @property
    def hom(self) -> HomMatrix:
        return hom_from_coordinates(self.alpha, self.beta, self.matrix, self.p)

    def a_b(self) -> tuple[int, int]:
        """Rows of the one-box shift ``alpha -> beta``."""
        layers = specht_series_restriction(self.lam, force=True)
        return layers[self.v - 1].node.row, layers[self.u - 1].node.row


def _layer_of(B: SpechtBasis, layers) -> dict[int, int]:
    out = {}
    for L in layers:
        for k in L.members:
            out[k] = L.index
    return out


def carter_payne_jm(lam: Partition, u: int, v: int, p: int, force: bool = False) -> JMCarterPayne:
    check_prime_or_zero(p)
    if p == 0:
        raise SpechtError("carter_payne_jm needs a prime p")
    require_odd_characteristic(p, "carter_payne_jm")
    layers = specht_series_restriction(lam, force)
    t = len(layers)
    if not (1 <= v <= u <= t):
        raise SpechtError(f"need 1 <= v <= u <= {t} (layers counted from the top removable node), got u={u}, v={v}")
    ru, rv = layers[u - 1].content, layers[v - 1].content
    if (ru - rv) % p:
        raise ResidueConditionError(f"residue condition fails: contents {ru} and {rv} differ mod {p}")
    B = standard_basis(lam, force)
    N = lam.n
    L = transposition_sum_matrix(lam, TranspositionSum.jucys_murphy(N))
    contents = tuple(layers[w - 1].content for w in range(v + 1, u + 1))
    I = np.identity(B.dim, dtype=np.int64).astype(object)
    P = I.copy()
    for c in contents:
        P = P @ (L - c * I)
    layer_of = _layer_of(B, layers)
    alpha, beta = layers[u - 1].quotient, layers[v - 1].quotient
    Ba, Bb = standard_basis(alpha, force), standard_basis(beta, force)
    bidx = {T: k for k, T in enumerate(Bb.tableaux)}
    integral_ok, lower_ok = True, True
    for k in range(B.dim):
        row = P[k]
        lk = layer_of[k]
        if lk <= u:
            if any(row[j] for j in range(B.dim) if layer_of[j] > v):
                integral_ok = False
        if lk < u:
            if any(int(row[j]) % p for j in range(B.dim) if layer_of[j] >= v):
                lower_ok = False
    node_u = layers[u - 1].node
    M = np.zeros((Ba.dim, Bb.dim), dtype=object)
    for i, s in enumerate(Ba.tableaux):
        k = B.index_of(insert_largest(s, node_u))
        for j in layers[v - 1].members:
            c = int(P[k, j]) % p
            if c:
                M[i, bidx[B.tableaux[j].without_symbol(N)]] = c
    return JMCarterPayne(lam, u, v, p, alpha, beta, contents, GF(p).array(M), integral_ok, lower_ok)


def proportionality_scalar(A: np.ndarray, B: np.ndarray, p: int) -> int | None:
    """``c`` with ``A == c * B`` mod ``p``, or ``None`` if no such scalar exists (or ``B == 0``)."""
    A = np.asarray(A, dtype=object) % p
    B = np.asarray(B, dtype=object) % p
    nz = np.argwhere(B != 0)
    if nz.size == 0:
        return None
    i, j = nz[0]
    c = int(A[i, j]) * pow(int(B[i, j]), -1, p) % p
    if np.any((A - c * B) % p != 0):
        return None
    return c


def layer_for_node(lam: Partition, row: int) -> int:
    for L in specht_series_restriction(lam, force=True):
        if L.node.row == row:
            return L.index
    raise SpechtError(f"row {row} of {lam} has no removable node")


def jm_layers_for_shift(alpha: Partition, a: int, b: int) -> tuple[Partition, int, int]:
    """``(lam, u, v)`` such that ``lam`` minus layer ``u`` is ``alpha`` and minus layer ``v`` is beta."""
    beta = one_box_shift(alpha, a, b)
    lam = alpha.add_node(b)
    u, v = layer_for_node(lam, b), layer_for_node(lam, a)
    if lam.remove_node(a) != beta:
        raise SpechtError("inconsistent one-box shift")
    return lam, u, v


# --------------------------------------------------------------------------
# brute-force intertwiners by spinning


class _Echelon:
    """Incrementally maintained reduced echelon basis for membership tests."""

    def __init__(self, field: Field, dim: int):
        self.field = field
        self.dim = dim
        self.rows = field.zeros((0, dim))
        self.pivots: list[int] = []

    def reduce(self, x: np.ndarray) -> np.ndarray:
        if not self.pivots:
            return self.field.reduce_array(x.copy())
        coeffs = x[self.pivots]
        return self.field.reduce_array(x - self.field.matmul(coeffs[None, :], self.rows)[0])

    def add(self, x: np.ndarray) -> bool:
        y = self.reduce(x)
        nz = np.nonzero(y != 0)[0]
        if nz.size == 0:
            return False
        pc = int(nz[0])
        y = self.field.reduce_array(y * self.field.inv(y[pc]))
        if self.pivots:
            col = self.rows[:, pc].copy()
            self.rows = self.field.reduce_array(self.rows - np.outer(col, y))
        self.rows = np.vstack([self.rows, y[None, :]])
        self.pivots.append(pc)
        return True


def _mpow(M: np.ndarray, k: int, field: Field) -> np.ndarray:
    R = field.identity(M.shape[0])
    while k:
        if k & 1:
            R = field.matmul(R, M)
        M = field.matmul(M, M)
        k >>= 1
    return R


def intertwining_space(rhoV: Sequence[np.ndarray], rhoW: Sequence[np.ndarray], dV: int, dW: int, field: Field) -> list[np.ndarray]:
    """Basis of ``{X : rhoV[g] X = X rhoW[g] for all g}`` (row-vector convention).

    ``V`` is spun up from unit vectors under the generators; a homomorphism is
    fixed by the images of the seeds, and every relation met while spinning
    gives a linear condition on those images.
    """
    if dV == 0 or dW == 0:
        return []
    if not rhoV:
        out = []
        for i in range(dV):
            for j in range(dW):
                X = field.zeros((dV, dW))
                X[i, j] = field.reduce(1)
                out.append(X)
        return out
    ech = _Echelon(field, dV)
    basis: list[np.ndarray] = []
    seed_of: list[int] = []
    parent: list[tuple[int, int] | None] = []
    defined: set[tuple[int, int]] = set()
    nseeds = 0
    for s in range(dV):
        e = field.zeros((dV,))
        e[s] = field.reduce(1)
        if not ech.add(e):
            continue
        basis.append(e)
        seed_of.append(nseeds)
        parent.append(None)
        nseeds += 1
        j = len(basis) - 1
        while j < len(basis):
            for g, rho in enumerate(rhoV):
                w = field.matmul(basis[j][None, :], rho)[0]
                if ech.add(w):
                    basis.append(w)
                    seed_of.append(seed_of[j])
                    parent.append((j, g))
                    defined.add((j, g))
            j += 1
        if len(basis) == dV:
            break
    Bm = np.vstack(basis)
    Binv = inverse(Bm, field)
    W = []
    for j in range(dV):
        if parent[j] is None:
            W.append(field.identity(dW))
        else:
            pj, g = parent[j]
            W.append(field.matmul(W[pj], rhoW[g]))
    Wst = np.stack(W)  # (dV, dW, dW)
    seeds = [[j for j in range(dV) if seed_of[j] == k] for k in range(nseeds)]
    blocks = []
    for g, rho in enumerate(rhoV):
        rel = [j for j in range(dV) if (j, g) not in defined]
        if not rel:
            continue
        C = field.matmul(field.matmul(Bm[rel], rho), Binv)  # coordinates of b_j g in the spin basis
        A = field.zeros((nseeds * dW, len(rel) * dW))
        for k, idx in enumerate(seeds):
            part = field.matmul(C[:, idx], Wst[idx].reshape(len(idx), dW * dW)).reshape(len(rel), dW, dW)
            for r, j in enumerate(rel):
                blk = -part[r]
                if seed_of[j] == k:
                    blk = blk + field.matmul(W[j], rhoW[g])
                A[k * dW:(k + 1) * dW, r * dW:(r + 1) * dW] = field.reduce_array(blk)
        blocks.append(A)
    A = np.concatenate(blocks, axis=1) if blocks else field.zeros((nseeds * dW, 0))
    Z = left_kernel(A, field)
    out = []
    for z in Z:
        Y = z.reshape(nseeds, dW)
        img = np.vstack([field.matmul(Y[seed_of[j]][None, :], W[j]) for j in range(dV)])
        X = field.matmul(Binv, img)
        for g in range(len(rhoV)):
            if not np.array_equal(field.matmul(rhoV[g], X), field.matmul(X, rhoW[g])):
                raise TheoremCheckError("spinning produced a non-intertwining matrix")
        out.append(X)
    return out


def generator_matrices(shape: Partition, field: Field, degree: int | None = None) -> list[np.ndarray]:
    """Matrices of ``(1 2)`` and ``(1 2 ... m)`` on ``S^shape``, with ``m = degree`` (default ``shape.n``)."""
    N = shape.n
    m = N if degree is None else degree
    out = []
    for g in generators(m):
        full = tuple(list(g) + list(range(m + 1, N + 1)))
        out.append(field.array(representation_matrix(shape, full)))
    return out


@dataclass
class HomSpace:
    alpha: Partition
    beta: Partition
    p: int
    matrices: list[np.ndarray]  # standard-basis coordinates, rows = domain basis

    @property
    def dimension(self) -> int:
        return len(self.matrices)

    def homs(self) -> list[HomMatrix]:
        return [hom_from_coordinates(self.alpha, self.beta, X, self.p) for X in self.matrices]


def hom_space(alpha: Partition, beta: Partition, p: int, force: bool = False) -> HomSpace:
    """Brute-force ``Hom(S^alpha, S^beta)`` over ``GF(p)`` (or ``Q`` for ``p = 0``); ``p = 2`` allowed."""
    check_prime_or_zero(p)
    if alpha.n != beta.n:
        raise SpechtError(f"shapes of different sizes: {alpha} and {beta}")
    F = field_for(p)
    Ba, Bb = standard_basis(alpha, force), standard_basis(beta, force)
    mats = intertwining_space(generator_matrices(alpha, F), generator_matrices(beta, F), Ba.dim, Bb.dim, F)
    return HomSpace(alpha, beta, p, mats)


# --------------------------------------------------------------------------
# endomorphism rings of restricted and induced Specht modules


@dataclass
class EndoBlock:
    residue: int
    multiplicity: int  # number of removable (or addable) nodes of this residue
    nilpotency_index: int  # least k with (eps - r)^k = 0 on the block
    dimension: int  # dimension of the generalised eigenspace
    end_dimension: int  # dimension of End of the block
    generator: np.ndarray  # eps restricted to the block

    @property
    def truncated_polynomial(self) -> bool:
        return self.nilpotency_index == self.multiplicity == self.end_dimension


@dataclass
class EndoRingReport:
    shape: Partition
    p: int
    mode: str  # "restrict" or "induce"
    module_dimension: int
    end_dimension: int
    eps_algebra_dimension: int
    generated_by_eps: bool
    blocks: list[EndoBlock]
    core_check: bool

    @property
    def consistent(self) -> bool:
        return (
            self.generated_by_eps
            and self.core_check
            and self.end_dimension == sum(b.multiplicity for b in self.blocks)
            and all(b.truncated_polynomial for b in self.blocks)
        )


def _span_rank(mats: Sequence[np.ndarray], field: Field) -> int:
    if not mats:
        return 0
    return rank(np.vstack([m.reshape(1, -1) for m in mats]), field)


def analyse_endomorphisms(rho: list[np.ndarray], eps: np.ndarray, expected: Mapping[int, int], field: Field) -> tuple:
    """Shared analysis: End basis, eps-algebra, generalised eigenspaces and their blocks."""
    d = eps.shape[0]
    p = field.characteristic
    ends = intertwining_space(rho, rho, d, d, field)
    powers = [field.identity(d)]
    cur = powers[0]
    while True:
        cur = field.matmul(cur, eps)
        if _span_rank(powers + [cur], field) == len(powers):
            break
        powers.append(cur)
    r_end = len(ends)
    generated = _span_rank(ends + powers, field) == r_end == len(powers)
    bases, keys = [], []
    for r in sorted(expected):
        N = field.reduce_array(eps - r * field.identity(d))
        K = left_kernel(_mpow(N, d, field), field)
        bases.append(K)
        keys.append(r)
    Kall = np.vstack(bases) if bases else field.zeros((0, d))
    blocks = []
    if Kall.shape[0] != d:
        raise TheoremCheckError(f"generalised eigenspaces of eps span {Kall.shape[0]} of {d} dimensions")
    Kinv = inverse(Kall, field)
    start = 0
    for r, K in zip(keys, bases):
        k = K.shape[0]
        sl = slice(start, start + k)
        E = field.matmul(field.matmul(Kall, eps), Kinv)[sl, sl]
        rho_b = [field.matmul(field.matmul(Kall, g), Kinv)[sl, sl] for g in rho]
        Nr = field.reduce_array(E - r * field.identity(k))
        idx, M = 0, field.identity(k)
        while np.any(M != 0):
            M = field.matmul(M, Nr)
            idx += 1
        end_dim = len(intertwining_space(rho_b, rho_b, k, k, field)) if k else 0
        blocks.append(EndoBlock(r % p if p else r, expected[r], idx, k, end_dim, E))
        start += k
    return r_end, len(powers), generated, blocks


def endo_ring_restriction(lam: Partition, p: int, force: bool = False) -> EndoRingReport:
    """End of ``S^lam`` restricted to ``S_n`` (``lam`` a partition of ``n+1``), blocks keyed by residue."""
    from .combinatorics import p_core, removable_nodes

    check_prime_or_zero(p)
    if p == 0:
        raise SpechtError("endo_ring_restriction needs a prime p")
    require_odd_characteristic(p, "endo_ring_restriction")
    F = GF(p)
    N = lam.n
    B = standard_basis(lam, force)
    rho = generator_matrices(lam, F, degree=N - 1)
    eps = F.array(transposition_sum_matrix(lam, TranspositionSum.jucys_murphy(N))) if N > 1 else F.zeros((B.dim, B.dim))
    nodes = removable_nodes(lam)
    expected: dict[int, int] = {}
    for nd in nodes:
        expected[residue(nd, p)] = expected.get(residue(nd, p), 0) + 1
    cores = [(residue(nd, p), p_core(lam.remove_node(nd.row), p)) for nd in nodes]
    core_ok = all((r1 == r2) == (c1 == c2) for r1, c1 in cores for r2, c2 in cores)
    r_end, eps_dim, gen, blocks = analyse_endomorphisms(rho, eps, expected, F)
    return EndoRingReport(lam, p, "restrict", B.dim, r_end, eps_dim, gen, blocks, core_ok)


def induced_generator_matrix(mu: Partition, g: Perm, field: Field) -> np.ndarray:
    """Matrix of ``g`` in ``S_n`` on ``S^mu`` induced from ``S_(n-1)``, basis ``e_j (x) (k n)``."""
    n = len(g)
    d = standard_basis(mu, force=True).dim
    M = field.zeros((n * d, n * d))
    for k in range(1, n + 1):
        ck = _coset_rep(k, n)
        k2 = g[k - 1]
        h = _compose(_compose(ck, g), _coset_rep(k2, n))
        if h[n - 1] != n:
            raise TheoremCheckError("coset bookkeeping failed")
        R = field.array(representation_matrix(mu, h[: n - 1])) if n > 1 else field.identity(d)
        M[(k - 1) * d:k * d, (k2 - 1) * d:k2 * d] = R
    return M


def _coset_rep(k: int, n: int) -> Perm:
    p = list(range(1, n + 1))
    p[k - 1], p[n - 1] = n, k
    return tuple(p)


def _compose(s: Perm, t: Perm) -> Perm:
    return tuple(t[x - 1] for x in s)


def endo_ring_induction(mu: Partition, p: int, force: bool = False) -> EndoRingReport:
    """End of ``S^mu`` induced to ``S_(n+1)``; blocks keyed by residues of addable nodes.

    ``eps`` is the class sum of all transpositions minus the content sum of
    ``mu``, which acts on the layer ``S^(mu + node)`` as the content of the node.
    """
    from .combinatorics import addable_nodes, p_core
    from .specht import transposition

    check_prime_or_zero(p)
    if p == 0:
        raise SpechtError("endo_ring_induction needs a prime p")
    require_odd_characteristic(p, "endo_ring_induction")
    F = GF(p)
    n = mu.n + 1
    d = standard_basis(mu, force).dim
    rho = [induced_generator_matrix(mu, g, F) for g in generators(n)]
    eps = F.zeros((n * d, n * d))
    for j in range(2, n + 1):
        for i in range(1, j):
            eps = F.reduce_array(eps + induced_generator_matrix(mu, transposition(i, j, n), F))
    cmu = sum(residue(nd) for nd in mu.nodes())
    eps = F.reduce_array(eps - cmu * F.identity(n * d))
    nodes = addable_nodes(mu)
    expected: dict[int, int] = {}
    for nd in nodes:
        expected[residue(nd, p)] = expected.get(residue(nd, p), 0) + 1
    cores = [(residue(nd, p), p_core(mu.add_node(nd.row), p)) for nd in nodes]
    core_ok = all((r1 == r2) == (c1 == c2) for r1, c1 in cores for r2, c2 in cores)
    r_end, eps_dim, gen, blocks = analyse_endomorphisms(rho, eps, expected, F)
    return EndoRingReport(mu, p, "induce", n * d, r_end, eps_dim, gen, blocks, core_ok)


# --------------------------------------------------------------------------
# chains of Carter-Payne maps inside one residue class


@dataclass
class CompositeMap:
    lam: Partition
    i: int
    j: int
    p: int
    chain: list[int]  # layer indices from i down to j
    matrix: np.ndarray  # S^{lam_i} -> S^{lam_j}, standard coordinates
    hom_dimension: int

    @property
    def nonzero(self) -> bool:
        return bool(np.any(self.matrix != 0))

    @property
    def spans(self) -> bool:
        return self.nonzero and self.hom_dimension == 1


def compose_cp_chain(lam: Partition, i: int, j: int, p: int, force: bool = False) -> CompositeMap:
    """Compose explicit Carter-Payne maps along the same-residue layers between ``i`` and ``j < i``."""
    check_prime_or_zero(p)
    require_odd_characteristic(p, "compose_cp_chain")
    layers = specht_series_restriction(lam, force)
    if not (1 <= j <= i <= len(layers)):
        raise SpechtError(f"need 1 <= j <= i <= {len(layers)}, got i={i}, j={j}")
    r = layers[i - 1].residue(p)
    if layers[j - 1].residue(p) != r:
        raise ResidueConditionError(f"residue condition fails: layers {i} and {j} have residues {r} and {layers[j - 1].residue(p)}")
    chain = [k for k in range(i, j - 1, -1) if layers[k - 1].residue(p) == r]
    F = GF(p)
    M = F.identity(standard_basis(layers[i - 1].quotient, force).dim)
    for lo, hi in zip(chain[1:], chain[:-1]):
        alpha = layers[hi - 1].quotient
        a, b = layers[lo - 1].node.row, layers[hi - 1].node.row
        cp = carter_payne_explicit(alpha, a, b, p)
        M = F.matmul(M, cp.hom.coordinates())
    hd = hom_space(layers[i - 1].quotient, layers[j - 1].quotient, p, force).dimension
    return CompositeMap(lam, i, j, p, chain, M, hd)
