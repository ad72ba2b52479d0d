"""The tabloid bilinear form, Gram matrices, Jantzen submodules and the error term of the explicit map."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .combinatorics import (
    Partition,
    Tableau,
    enumerate_semistandard_one_box,
    one_box_shift,
    row_reading_tableau,
    tabloid_of_typed,
)
from .errors import DomainMismatchError, SpechtError, require_odd_characteristic
from .exact_algebra import (
    GF,
    SmithForm,
    int_matmul,
    p_valuation,
    rank,
    smith_normal_form,
    vec_add,
    vec_dot,
    vec_iadd,
    vec_mod,
)
from .homomorphisms import PsiMap, admissible_psi, carter_payne_explicit, check_prime_or_zero, explicit_coefficient, hook
from .specht import TabloidModule, Vector, apply_column_antisymmetriser, standard_basis, vector_type


def bilinear_form(u: Mapping, v: Mapping) -> int:
    """The form making tabloids orthonormal."""
    tu, tv = vector_type(u), vector_type(v)
    if tu is not None and tv is not None and tu != tv:
        raise DomainMismatchError(f"vectors live in M^{tu} and M^{tv}")
    return vec_dot(u, v)


@dataclass(frozen=True)
class GramMatrix:
    shape: Partition
    entries: tuple[tuple[int, ...], ...]  # <e_s, e_t> on the standard basis

    @property
    def dim(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=object).reshape(self.dim, self.dim)


@lru_cache(maxsize=128)
def _gram(parts: tuple[int, ...]) -> GramMatrix:
    B = standard_basis(Partition(parts), force=True)
    vs = B.vectors
    G = tuple(tuple(vec_dot(vs[i], vs[j]) for j in range(B.dim)) for i in range(B.dim))
    return GramMatrix(Partition(parts), G)


def gram_matrix(beta: Partition) -> GramMatrix:
    return _gram(beta.parts)


@lru_cache(maxsize=128)
def _gram_snf(parts: tuple[int, ...]) -> SmithForm:
    return smith_normal_form(_gram(parts).entries)


@dataclass(frozen=True)
class JantzenLevel:
    i: int
    dimension: int
    basis: tuple[tuple[int, ...], ...]  # standard-basis coordinates mod p


@dataclass
class JantzenFiltration:
    shape: Partition
    p: int
    elementary_divisors: tuple[int, ...]
    levels: list[JantzenLevel]
    gram: GramMatrix = field(repr=False)
    smith: SmithForm = field(repr=False)

    @property
    def max_valuation(self) -> int:
        return max((int(p_valuation(d, self.p)) for d in self.elementary_divisors), default=0)

    def dimensions(self) -> list[int]:
        return [lv.dimension for lv in self.levels]

    def level(self, i: int) -> JantzenLevel:
        if i < len(self.levels):
            return self.levels[i]
        return JantzenLevel(i, 0, ())

    def contains_integral(self, coords: Sequence[int], i: int) -> bool:
        """``x = sum coords_k e_k`` lies in ``J^i`` iff ``<x, e_s>`` is divisible by ``p^i`` for all ``s``."""
        if i == 0:
            return True
        q = self.p ** i
        G = self.gram.entries
        return all(sum(c * G[k][j] for k, c in enumerate(coords)) % q == 0 for j in range(self.gram.dim))

    def contains_mod_p(self, coords: Sequence[int], i: int) -> bool:
        """Whether the reduction mod ``p`` of a vector lies in the image of ``J^i``."""
        F = GF(self.p)
        x = F.array(np.array(list(coords), dtype=object).reshape(1, -1))
        if not np.any(x):
            return True
        lv = self.level(i)
        if not lv.basis:
            return False
        Bm = F.array(np.array(lv.basis, dtype=object))
        return rank(np.vstack([Bm, x]), F) == rank(Bm, F)


def jantzen_filtration(beta: Partition, p: int) -> JantzenFiltration:
    """Jantzen submodules of ``S^beta`` from the Smith form ``U G V = D`` of the Gram matrix.

    ``J^i`` mod ``p`` is spanned by the rows ``U_k`` with ``v_p(d_k) >= i``.
    """
    check_prime_or_zero(p)
    if p == 0:
        raise SpechtError("jantzen_filtration needs a prime p")
    G = gram_matrix(beta)
    snf = _gram_snf(beta.parts)
    vals = [p_valuation(d, p) for d in snf.d]
    top = max((int(v) for v in vals), default=0)
    levels = []
    for i in range(top + 1):
        rows = tuple(tuple(x % p for x in snf.U[k]) for k, v in enumerate(vals) if v >= i)
        levels.append(JantzenLevel(i, len(rows), rows))
    return JantzenFiltration(beta, p, snf.d, levels, G, snf)


@lru_cache(maxsize=64)
def _polytabloid_lattice(parts: tuple[int, ...]):
    """Smith form of ``E^T`` where the rows of ``E`` are standard polytabloids in tabloid coordinates."""
    B = standard_basis(Partition(parts), force=True)
    M = TabloidModule(parts, force=True)
    E = [M.coordinates(v) for v in B.vectors]
    Et = [list(col) for col in zip(*E)]
    return E, smith_normal_form(Et)


def in_jantzen_by_decomposition(beta: Partition, coords: Sequence[int], p: int, i: int) -> bool:
    """Membership ``x in S cap (p^i M + S-perp)`` solved through a Smith form of the polytabloid matrix.

    With ``x = c E``: ``x - p^i m`` is orthogonal to ``S`` iff ``c E E^T = p^i m E^T``,
    so ``x`` qualifies iff ``c E E^T`` lies in ``p^i`` times the row lattice of ``E^T``.
    """
    E, snf = _polytabloid_lattice(beta.parts)
    d = len(E)
    cG = int_matmul([list(coords)], int_matmul(E, [list(r) for r in zip(*E)]))[0]
    # row lattice of E^T = {y D V^-1}; test z = cG V against p^i d_k
    z = int_matmul([cG], snf.V)[0]
    q = p ** i
    for k in range(d):
        dk = snf.d[k] if k < len(snf.d) else 0
        if dk == 0:
            if z[k] != 0:
                return False
        elif z[k] % (q * dk):
            return False
    return True


# --------------------------------------------------------------------------
# right-justified sums and the error term


def is_right_justified(U: Tableau, a: int, cutoff: int) -> bool:
    """All nodes ``(a, c)`` with ``c > cutoff`` contain ``a``."""
    row = U.rows[a - 1] if a <= len(U.rows) else ()
    return all(x == a for x in row[cutoff:])


def theta_tilde(V: Tableau, t: Tableau, a: int, cutoff: int, nrows: int | None = None) -> Vector:
    """Sum of ``U C_t^-`` over right-justified ``U`` row-equivalent to ``V``."""
    out: Vector = {}
    for U in V.row_equivalents():
        if is_right_justified(U, a, cutoff):
            key = tabloid_of_typed(U, t, nrows)
            out[key] = out.get(key, 0) + 1
    return apply_column_antisymmetriser(out, t)


def error_term(alpha: Partition, a: int, b: int, t: Tableau | None = None) -> Vector:
    """``sum over T with T(a) = a+1 of Lambda_T theta~_T``, an element of ``M^beta`` over ``Z``."""
    beta = one_box_shift(alpha, a, b)
    t = t or row_reading_tableau(alpha.parts)
    cutoff = beta.part(a + 1)
    out: Vector = {}
    for S, T in enumerate_semistandard_one_box(alpha, a, b):
        if S.bijection()[a] == a + 1:
            vec_iadd(out, theta_tilde(T, t, a, cutoff, len(beta)), explicit_coefficient(alpha, a, b, S))
    return out


def adjusted_image(alpha: Partition, a: int, b: int, t: Tableau | None = None) -> Vector:
    """``e_t theta - h_a E_t``, which lies in the integral Specht module."""
    t = t or row_reading_tableau(alpha.parts)
    cp = carter_payne_explicit(alpha, a, b)
    return vec_add(cp.image(t), error_term(alpha, a, b, t), -cp.h_a)


def check_exception_identity(alpha: Partition, a: int, b: int) -> list[bool]:
    """``theta~_T psi_a == theta~_W`` whenever ``T(a) = a+1``, ``W`` having that ``a+1`` changed to ``a``."""
    beta = one_box_shift(alpha, a, b)
    t = row_reading_tableau(alpha.parts)
    cutoff = beta.part(a + 1)
    m = PsiMap(a, beta.part(a + 1) - 1, beta.parts)
    out = []
    for S, T in enumerate_semistandard_one_box(alpha, a, b):
        if S.bijection()[a] != a + 1:
            continue
        W = T.replace((a, alpha.part(a)), a)
        lhs = m(theta_tilde(T, t, a, cutoff, len(beta)))
        rhs = theta_tilde(W, t, a, cutoff, len(beta))
        out.append(vec_mod(vec_add(lhs, rhs, -1), 0) == {})
    return out


def check_core_identity(alpha: Partition, a: int, b: int) -> bool:
    """``(e_t theta - h_a E_t) psi_{i,r} = 0`` for every admissible ``(i, r)``."""
    beta = one_box_shift(alpha, a, b)
    x = adjusted_image(alpha, a, b)
    return all(not PsiMap(i, r, beta.parts)(x) for i, r in admissible_psi(beta.parts))


def image_orthogonal(alpha: Partition, a: int, b: int) -> bool:
    """Over ``Z``, ``<e_t theta, e_s> = 0`` for every standard ``s`` of ``beta``."""
    beta = one_box_shift(alpha, a, b)
    img = carter_payne_explicit(alpha, a, b).image(row_reading_tableau(alpha.parts))
    return all(vec_dot(img, v) == 0 for v in standard_basis(beta, force=True).vectors)


# --------------------------------------------------------------------------
# containment of the image in a Jantzen submodule


@dataclass
class JantzenContainment:
    alpha: Partition
    beta: Partition
    a: int
    b: int
    p: int
    h_a: int
    vacuous: bool
    i_guaranteed: int
    i_observed: int | None
    adjusted_in_level: bool | None  # e_t theta - h_a E_t lies in J^{i_guaranteed} over Z

    @property
    def ok(self) -> bool:
        if self.vacuous:
            return True
        return self.i_observed is not None and self.i_observed >= self.i_guaranteed and bool(self.adjusted_in_level)


def shift_rows(alpha: Partition, beta: Partition) -> tuple[int, int]:
    """Rows ``(a, b)`` such that ``beta`` is ``alpha`` with a node moved from row ``a`` to row ``b``."""
    k = max(len(alpha), len(beta))
    diff = [beta.part(i) - alpha.part(i) for i in range(1, k + 1)]
    down = [i + 1 for i, x in enumerate(diff) if x == -1]
    up = [i + 1 for i, x in enumerate(diff) if x == 1]
    if len(down) != 1 or len(up) != 1 or sum(1 for x in diff if x) != 2 or not down[0] < up[0]:
        raise SpechtError(f"{beta} is not a one-box shift of {alpha}")
    a, b = down[0], up[0]
    one_box_shift(alpha, a, b)
    return a, b


def verify_jantzen_containment(alpha: Partition, beta: Partition, p: int) -> JantzenContainment:
    check_prime_or_zero(p)
    require_odd_characteristic(p, "verify_jantzen_containment")
    a, b = shift_rows(alpha, beta)
    h_a = hook(alpha, b, a)
    if h_a % p:
        return JantzenContainment(alpha, beta, a, b, p, h_a, True, 0, None, None)
    i_g = int(p_valuation(h_a, p))
    J = jantzen_filtration(beta, p)
    rows = carter_payne_explicit(alpha, a, b, p).hom.coordinates()
    i_obs = 0
    for i in range(1, J.max_valuation + 1):
        if all(J.contains_mod_p([int(x) for x in row], i) for row in rows):
            i_obs = i
        else:
            break
    if all(not np.any(row) for row in rows):
        i_obs = J.max_valuation
    Bb = standard_basis(beta, force=True)
    coords = Bb.expand(adjusted_image(alpha, a, b))
    adj_ok = J.contains_integral(coords, i_g)
    return JantzenContainment(alpha, beta, a, b, p, h_a, False, i_g, i_obs, adj_ok)
