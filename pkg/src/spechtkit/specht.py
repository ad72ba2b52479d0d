"""Permutation modules M^beta, polytabloids, Specht modules and group-algebra actions.

Permutations act on the right.  A permutation of degree n is a tuple whose
``k-1`` entry is the image of ``k``; ``compose(s, t)`` means "first s, then t".
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

import numpy as np

from .combinatorics import (
    Node,
    Partition,
    Tableau,
    Tabloid,
    num_tabloids,
    removable_nodes,
    residue,
    standard_tableaux,
    tabloid_of_typed,
)
from .errors import DegreeTooLargeError, InvalidTableauError, NotInSpanError, SpechtError
from .exact_algebra import vec_iadd, vec_mod

Perm = tuple[int, ...]
Vector = dict  # Tabloid -> coefficient

DEFAULT_MAX_DEGREE = 12


def max_degree() -> int:
    env = os.environ.get("SPECHT_MAX_N")
    return int(env) if env else DEFAULT_MAX_DEGREE


def check_degree(n: int, force: bool = False) -> None:
    if not force and n > max_degree():
        raise DegreeTooLargeError(
            f"degree {n} exceeds the cap {max_degree()} (M^beta can have n! tabloids); "
            "pass force=True / --force or raise SPECHT_MAX_N"
        )


# --------------------------------------------------------------------------
# permutations


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def transposition(i: int, j: int, n: int) -> Perm:
    p = list(range(1, n + 1))
    p[i - 1], p[j - 1] = j, i
    return tuple(p)


def long_cycle(n: int) -> Perm:
    """The cycle ``(1 2 ... n)``."""
    return tuple(list(range(2, n + 1)) + [1]) if n else ()


def perm_from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Perm:
    p = list(range(1, n + 1))
    for cyc in cycles:
        for x, y in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            p[x - 1] = y
    return tuple(p)


def compose(s: Perm, t: Perm) -> Perm:
    """Right-action product: apply ``s`` first, then ``t``."""
    return tuple(t[x - 1] for x in s)


def inverse_perm(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, x in enumerate(s, start=1):
        out[x - 1] = i
    return tuple(out)


def perm_sign(s: Perm) -> int:
    seen, sign = set(), 1
    for i in range(1, len(s) + 1):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = s[j - 1]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def generators(n: int) -> list[Perm]:
    """``(1 2)`` and ``(1 2 ... n)``, which generate the symmetric group."""
    if n < 2:
        return []
    if n == 2:
        return [transposition(1, 2, 2)]
    return [transposition(1, 2, n), long_cycle(n)]


# --------------------------------------------------------------------------
# tabloids and M^beta


def act_tabloid(tab: Tabloid, perm: Perm) -> Tabloid:
    return tuple(tuple(sorted(perm[x - 1] for x in row)) for row in tab)


def tabloid_degree(tab: Tabloid) -> int:
    return sum(len(r) for r in tab)


def act_permutation(v: Mapping[Tabloid, object], perm: Perm) -> Vector:
    out: Vector = {}
    for tab, c in v.items():
        if tabloid_degree(tab) != len(perm):
            raise SpechtError(f"degree mismatch: tabloid of degree {tabloid_degree(tab)}, permutation of degree {len(perm)}")
        key = act_tabloid(tab, perm)
        out[key] = out.get(key, 0) + c
    return {k: x for k, x in out.items() if x}


def vector_degree(v: Mapping[Tabloid, object]) -> int | None:
    for tab in v:
        return tabloid_degree(tab)
    return None


def vector_type(v: Mapping[Tabloid, object]) -> tuple[int, ...] | None:
    for tab in v:
        return tuple(len(r) for r in tab)
    return None


@dataclass
class TabloidModule:
    """M^shape with its tabloid basis in lexicographic order of the sorted rows.

    ``shape`` may be any composition; the basis is built on first use.
    """

    shape: tuple[int, ...]
    force: bool = False
    _basis: list[Tabloid] | None = field(default=None, repr=False)
    _index: dict[Tabloid, int] | None = field(default=None, repr=False)

    def __post_init__(self):
        self.shape = tuple(self.shape)
        check_degree(self.n, self.force)

    @property
    def n(self) -> int:
        return sum(self.shape)

    @property
    def dim(self) -> int:
        return num_tabloids(self.shape)

    @property
    def basis(self) -> list[Tabloid]:
        if self._basis is None:
            self._basis = sorted(_all_tabloids(self.shape))
            self._index = {t: i for i, t in enumerate(self._basis)}
        return self._basis

    @property
    def index(self) -> dict[Tabloid, int]:
        self.basis
        return self._index

    def coordinates(self, v: Mapping[Tabloid, object]) -> list:
        out = [0] * self.dim
        for tab, c in v.items():
            out[self.index[tab]] = c
        return out


def _all_tabloids(shape: tuple[int, ...]):
    n = sum(shape)

    def rec(remaining: tuple[int, ...], k: int):
        if k == len(shape):
            yield ()
            return
        for row in combinations(remaining, shape[k]):
            rest = tuple(x for x in remaining if x not in row)
            for tail in rec(rest, k + 1):
                yield (row,) + tail

    yield from rec(tuple(range(1, n + 1)), 0)


# --------------------------------------------------------------------------
# column stabilisers and polytabloids


@lru_cache(maxsize=4096)
def _signed_perms(symbols: tuple[int, ...]) -> tuple[tuple[dict, int], ...]:
    out = []
    for img in permutations(symbols):
        mapping = dict(zip(symbols, img))
        # sign of the permutation symbols -> img
        idx = [symbols.index(x) for x in img]
        out.append((mapping, perm_sign(tuple(i + 1 for i in idx))))
    return tuple(out)


def apply_column_antisymmetriser(v: Mapping[Tabloid, object], t: Tableau) -> Vector:
    """``v`` times the signed column-stabiliser sum of the bijective tableau ``t``."""
    cur: Vector = dict(v)
    for col in t.columns():
        if len(col) < 2:
            continue
        perms = _signed_perms(tuple(col))
        nxt: Vector = {}
        for tab, c in cur.items():
            for mapping, sgn in perms:
                key = tuple(tuple(sorted(mapping.get(x, x) for x in row)) for row in tab)
                nxt[key] = nxt.get(key, 0) + sgn * c
        cur = {k: x for k, x in nxt.items() if x}
    return cur


def polytabloid(t: Tableau) -> Vector:
    if not t.is_bijective():
        raise InvalidTableauError(f"polytabloid needs a bijective tableau, got {t}")
    return apply_column_antisymmetriser({t.tabloid(): 1}, t)


def typed_tableau_vector(U: Tableau, t: Tableau) -> Vector:
    """The single tabloid identified with a typed filling ``U`` through ``t``."""
    return {tabloid_of_typed(U, t): 1}


def antisymmetrised_typed(U: Tableau, t: Tableau) -> Vector:
    """``U C_t^-`` for a typed filling ``U`` (an element of M^type(U))."""
    return apply_column_antisymmetriser({tabloid_of_typed(U, t): 1}, t)


# --------------------------------------------------------------------------
# Jucys-Murphy elements and transposition sums


@dataclass(frozen=True)
class TranspositionSum:
    """Sum of the transpositions of S_n that do not lie in S_excluded.

    ``excluded = 0`` gives the class sum of all transpositions; ``excluded = n-1``
    gives the Jucys-Murphy element ``sum_i (i, n)``.
    """

    n: int
    excluded: int = 0

    def __post_init__(self):
        if not 0 <= self.excluded < max(self.n, 1):
            raise SpechtError(f"need 0 <= excluded < n, got excluded={self.excluded}, n={self.n}")

    def transpositions(self) -> list[Perm]:
        return [transposition(i, j, self.n) for j in range(2, self.n + 1) for i in range(1, j) if j > self.excluded]

    @classmethod
    def jucys_murphy(cls, n: int) -> "TranspositionSum":
        return cls(n, n - 1)


def act_jm(v: Mapping[Tabloid, object], L: TranspositionSum) -> Vector:
    deg = vector_degree(v)
    if deg is not None and deg != L.n:
        raise SpechtError(f"degree mismatch: vector of degree {deg}, transposition sum of degree {L.n}")
    out: Vector = {}
    for tau in L.transpositions():
        vec_iadd(out, act_permutation(v, tau))
    return out


def murphy_closed_form(t: Tableau) -> Vector:
    """``e_t L_N`` computed from where the largest symbol ``N`` sits in ``t``.

    If ``N`` lies in a column of length ``r``, and ``(r, c)`` is the removable
    node of that row, the result is ``(c - r) e_t + sum_i e_{t (N, i)}`` over the
    symbols ``i`` whose columns are shorter than ``r``.
    """
    N = t.n
    cols = t.columns()
    col_of = {x: j for j, col in enumerate(cols) for x in col}
    r = len(cols[col_of[N]])
    c = len(t.rows[r - 1])
    out = {k: (c - r) * x for k, x in polytabloid(t).items()}
    for i in range(1, N):
        if len(cols[col_of[i]]) < r:
            vec_iadd(out, polytabloid(t.permute_symbols(transposition(N, i, N))))
    return {k: x for k, x in out.items() if x}


# --------------------------------------------------------------------------
# standard basis


def _tabloid_key(tab: Tabloid) -> tuple[int, ...]:
    row_of = {}
    for i, row in enumerate(tab):
        for x in row:
            row_of[x] = i
    return tuple(row_of[x] for x in sorted(row_of))


@dataclass
class SpechtBasis:
    """Standard polytabloids of a shape, with a leading-term expansion routine.

    ``e_s`` contains ``{s}`` with coefficient 1 and otherwise only tabloids
    strictly below it in dominance, so peeling off the dominance-largest
    standard tabloid expands any vector exactly (and detects vectors outside
    the span).
    """

    shape: Partition
    tableaux: list[Tableau]
    vectors: list[Vector]
    _order: list[int] = field(default_factory=list, repr=False)
    _lead: dict[Tabloid, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        lead = {t.tabloid(): k for k, t in enumerate(self.tableaux)}
        self._lead = lead
        self._order = sorted(range(len(self.tableaux)), key=lambda k: _tabloid_key(self.tableaux[k].tabloid()))

    @property
    def dim(self) -> int:
        return len(self.tableaux)

    @property
    def n(self) -> int:
        return self.shape.n

    def index_of(self, t: Tableau) -> int:
        return self.tableaux.index(t)

    def expand(self, v: Mapping[Tabloid, object], p: int = 0) -> list:
        """Coefficients ``c`` with ``sum c_k e_k == v`` (mod ``p`` if ``p > 0``)."""
        rem = vec_mod(v, p)
        coeffs = [0] * self.dim
        for k in self._order:
            lead = self.tableaux[k].tabloid()
            c = rem.get(lead, 0)
            if c:
                coeffs[k] = c
                vec_iadd(rem, self.vectors[k], -c)
                if p:
                    rem = vec_mod(rem, p)
        if rem:
            raise NotInSpanError(f"vector is not in the Specht module S^({self.shape})")
        return coeffs

    def combine(self, coeffs: Sequence, p: int = 0) -> Vector:
        out: Vector = {}
        for c, v in zip(coeffs, self.vectors):
            if c:
                vec_iadd(out, v, c)
        return vec_mod(out, p)


@lru_cache(maxsize=256)
def _standard_basis(parts: tuple[int, ...]) -> SpechtBasis:
    lam = Partition(parts)
    tabs = standard_tableaux(lam)
    return SpechtBasis(lam, tabs, [polytabloid(t) for t in tabs])


def standard_basis(shape: Partition, force: bool = False) -> SpechtBasis:
    check_degree(shape.n, force)
    return _standard_basis(shape.parts)


def expand_in_standard(v: Mapping[Tabloid, object], B: SpechtBasis, p: int = 0) -> list:
    return B.expand(v, p)


def in_specht_span(v: Mapping[Tabloid, object], B: SpechtBasis, p: int = 0) -> bool:
    try:
        B.expand(v, p)
    except NotInSpanError:
        return False
    return True


@lru_cache(maxsize=1024)
def _representation_matrix(parts: tuple[int, ...], perm: Perm) -> np.ndarray:
    B = _standard_basis(parts)
    rows = [B.expand(polytabloid(t.permute_symbols(perm))) for t in B.tableaux]
    return np.array(rows, dtype=object).reshape(B.dim, B.dim)


def representation_matrix(shape: Partition, perm: Perm) -> np.ndarray:
    """Integer matrix of ``perm`` on the standard basis (row ``k`` is the image of ``e_k``)."""
    return _representation_matrix(shape.parts, tuple(perm))


@lru_cache(maxsize=256)
def _transposition_sum_matrix(parts: tuple[int, ...], n: int, excluded: int) -> np.ndarray:
    B = _standard_basis(parts)
    L = TranspositionSum(n, excluded)
    mats = [_representation_matrix(parts, tuple(list(tau) + list(range(n + 1, B.n + 1)))) for tau in L.transpositions()]
    if not mats:
        return np.zeros((B.dim, B.dim), dtype=object)
    return sum(mats[1:], mats[0].copy())


def transposition_sum_matrix(shape: Partition, L: TranspositionSum) -> np.ndarray:
    """Matrix of a transposition sum of degree ``L.n <= shape.n`` on the standard basis."""
    if L.n > shape.n:
        raise SpechtError(f"transposition sum of degree {L.n} does not act on S^({shape})")
    return _transposition_sum_matrix(shape.parts, L.n, L.excluded)


# --------------------------------------------------------------------------
# the Specht series of a restriction


@dataclass(frozen=True)
class SpechtLayer:
    index: int  # 1-based, counted from the top removable node
    node: Node
    quotient: Partition
    content: int
    members: tuple[int, ...]  # standard-basis indices with the largest symbol in ``node``
    submodule: tuple[int, ...]  # indices spanning S_index (largest symbol in one of nodes 1..index)

    def residue(self, p: int) -> int:
        return residue(self.node, p)


def specht_series_restriction(lam: Partition, force: bool = False) -> list[SpechtLayer]:
    """Layers of ``0 = S_0 < S_1 < ... < S_t = S^lam`` restricted to S_(n-1).

    ``S_i`` is spanned by the standard polytabloids whose largest symbol sits
    in one of the first ``i`` removable nodes, counted from the top, and
    ``S_i / S_(i-1)`` is isomorphic to the Specht module of ``lam`` minus node ``i``.
    """
    B = standard_basis(lam, force)
    N = lam.n
    nodes = removable_nodes(lam)
    pos = {}
    for k, t in enumerate(B.tableaux):
        for r, row in enumerate(t.rows):
            if row and row[-1] == N:
                pos[k] = Node(r + 1, len(row))
    layers = []
    acc: list[int] = []
    for i, node in enumerate(nodes, start=1):
        members = tuple(k for k in range(B.dim) if pos[k] == node)
        acc.extend(members)
        layers.append(SpechtLayer(i, node, lam.remove_node(node.row), residue(node), members, tuple(sorted(acc))))
    return layers


def delete_largest(t: Tableau) -> Tableau:
    return t.without_symbol(t.n)


def insert_largest(t: Tableau, node: Node) -> Tableau:
    """Put the symbol ``n + 1`` at ``node`` (which must extend the diagram)."""
    rows = [list(r) for r in t.rows]
    while len(rows) < node.row:
        rows.append([])
    if len(rows[node.row - 1]) != node.col - 1:
        raise SpechtError(f"node {node} is not addable to the shape {t.shape}")
    rows[node.row - 1].append(t.n + 1)
    return Tableau(tuple(tuple(r) for r in rows))
