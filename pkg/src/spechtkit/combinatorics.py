"""Partitions, nodes, tableaux, tabloids and one-box-shift combinatorics.

Rows and columns are 1-based throughout, matching the usual English
convention for Young diagrams (row 1 on top, column 1 on the left).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidShapeError, InvalidTableauError, SpechtError

# A tabloid is stored canonically as a tuple of ascending rows.
Tabloid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, init=False, order=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int] = ()):
        ps = tuple(int(x) for x in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        if any(x <= 0 for x in ps):
            raise InvalidShapeError(f"partition parts must be positive: {tuple(parts)}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise InvalidShapeError(f"partition parts must be weakly decreasing: {tuple(parts)}")
        object.__setattr__(self, "parts", ps)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,3,1"`` (brackets and spaces tolerated; ``""`` is the empty partition)."""
        body = text.strip().strip("()[]").replace(" ", "")
        if not body:
            return cls(())
        try:
            parts = [int(x) for x in body.split(",") if x != ""]
        except ValueError as exc:
            raise InvalidShapeError(f"cannot parse partition {text!r}") from exc
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def part(self, i: int) -> int:
        """1-based part; zero beyond the last row."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition([sum(1 for x in self.parts if x >= j) for j in range(1, self.parts[0] + 1)])

    def nodes(self) -> list["Node"]:
        return [Node(i + 1, j + 1) for i, row in enumerate(self.parts) for j in range(row)]

    def remove_node(self, row: int) -> "Partition":
        ps = list(self.parts)
        ps[row - 1] -= 1
        return Partition(ps)

    def add_node(self, row: int) -> "Partition":
        ps = list(self.parts) + [0]
        ps[row - 1] += 1
        return Partition(ps)

    def multiplicity(self, k: int) -> int:
        return sum(1 for x in self.parts if x == k)


class Node(NamedTuple):
    row: int
    col: int

    @classmethod
    def parse(cls, text: str) -> "Node":
        body = text.strip().strip("()")
        r, c = (int(x) for x in body.split(","))
        if r < 1 or c < 1:
            raise SpechtError(f"node coordinates must be >= 1: {text!r}")
        return cls(r, c)

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


def residue(node: Node, p: int = 0) -> int:
    """Content ``col - row``, reduced into ``{0..p-1}`` when ``p > 0``."""
    r, c = node
    if r < 1 or c < 1:
        raise SpechtError(f"invalid node {node}")
    res = c - r
    return res % p if p > 0 else res


def removable_nodes(lam: Partition) -> list[Node]:
    out = []
    for i in range(1, len(lam) + 1):
        if lam.part(i) > lam.part(i + 1):
            out.append(Node(i, lam.part(i)))
    return out


def addable_nodes(lam: Partition) -> list[Node]:
    out = []
    for i in range(1, len(lam) + 2):
        if i == 1 or lam.part(i - 1) > lam.part(i):
            out.append(Node(i, lam.part(i) + 1))
    return out


def dominates(a: Partition, b: Partition) -> bool:
    if a.n != b.n:
        raise SpechtError(f"dominance needs partitions of the same n: {a} vs {b}")
    sa = sb = 0
    for i in range(1, max(len(a), len(b)) + 1):
        sa += a.part(i)
        sb += b.part(i)
        if sa < sb:
            return False
    return True


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(rem: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for k in range(min(rem, cap), 0, -1):
            for rest in rec(rem - k, k):
                yield (k,) + rest

    for ps in rec(n, n):
        yield Partition(ps)


# --------------------------------------------------------------------------
# one-box shifts


def one_box_shift(alpha: Partition, a: int, b: int) -> Partition:
    """Move the last node of row ``a`` to the end of row ``b > a``."""
    if not 1 <= a < b:
        raise SpechtError(f"one-box shift needs 1 <= a < b, got a={a}, b={b}")
    if b > len(alpha) + 1:
        raise SpechtError(f"row b={b} is beyond the first empty row {len(alpha) + 1}")
    if not alpha.part(a) > alpha.part(a + 1):
        raise SpechtError(f"alpha_a > alpha_(a+1) fails: alpha_{a}={alpha.part(a)}, alpha_{a + 1}={alpha.part(a + 1)}")
    if not alpha.part(b - 1) > alpha.part(b):
        raise SpechtError(f"alpha_(b-1) > alpha_b fails: alpha_{b - 1}={alpha.part(b - 1)}, alpha_{b}={alpha.part(b)}")
    ps = [alpha.part(i) for i in range(1, max(len(alpha), b) + 1)]
    ps[a - 1] -= 1
    ps[b - 1] += 1
    if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
        raise SpechtError(f"shifting a node from row {a} to row {b} of {alpha} gives {tuple(ps)}, not a partition")
    return Partition(ps)


def one_box_shifts(alpha: Partition) -> Iterator[tuple[int, int, Partition]]:
    """Yield every ``(a, b, beta)`` with ``beta`` a one-box shift of ``alpha``."""
    for a in range(1, len(alpha) + 1):
        if alpha.part(a) <= alpha.part(a + 1):
            continue
        for b in range(a + 1, len(alpha) + 2):
            if alpha.part(b - 1) <= alpha.part(b):
                continue
            try:
                yield a, b, one_box_shift(alpha, a, b)
            except SpechtError:
                continue


def one_box_shift_pairs(n: int) -> Iterator[tuple[Partition, int, int, Partition]]:
    for alpha in partitions(n):
        for a, b, beta in one_box_shifts(alpha):
            yield alpha, a, b, beta


def hook_length_col_b(alpha: Partition, b: int, i: int) -> int:
    """Hook length of node ``(i, alpha_b + 1)``; zero for ``i >= b``."""
    if i >= b:
        return 0
    return alpha.part(i) - alpha.part(b) + b - i - 1


def hook_lengths_column_b(alpha: Partition, b: int) -> tuple[int, ...]:
    return tuple(hook_length_col_b(alpha, b, i) for i in range(1, b))


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = lam.conjugate()
    return [[lam.part(i) - j + conj.part(j) - i + 1 for j in range(1, lam.part(i) + 1)] for i in range(1, len(lam) + 1)]


def num_standard_tableaux(lam: Partition) -> int:
    return factorial(lam.n) // prod(h for row in hook_lengths(lam) for h in row)


# --------------------------------------------------------------------------
# tableaux and tabloids


@dataclass(frozen=True)
class Tableau:
    """A filling of a (possibly composition-shaped) diagram, stored row by row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        """``"1234/567/8"`` (one digit per symbol) or ``"1,2,10/3,4"``."""
        rows = []
        for chunk in text.strip().split("/"):
            chunk = chunk.strip()
            if "," in chunk or " " in chunk:
                rows.append(tuple(int(x) for x in chunk.replace(",", " ").split()))
            else:
                rows.append(tuple(int(ch) for ch in chunk))
        return cls(tuple(rows))

    def __str__(self) -> str:
        wide = any(x >= 10 for r in self.rows for x in r)
        sep = "," if wide else ""
        return "/".join(sep.join(map(str, r)) for r in self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def __getitem__(self, node: tuple[int, int]) -> int:
        r, c = node
        return self.rows[r - 1][c - 1]

    def nodes(self) -> Iterator[Node]:
        for i, r in enumerate(self.rows):
            for j in range(len(r)):
                yield Node(i + 1, j + 1)

    def columns(self) -> list[tuple[int, ...]]:
        width = max(self.shape, default=0)
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(width)]

    def content(self) -> tuple[int, ...]:
        """The type: entry ``k-1`` counts the symbols equal to ``k``."""
        cnt = Counter(x for r in self.rows for x in r)
        top = max(cnt, default=0)
        return tuple(cnt.get(k, 0) for k in range(1, top + 1))

    def is_bijective(self) -> bool:
        flat = sorted(x for r in self.rows for x in r)
        return flat == list(range(1, len(flat) + 1))

    def is_standard(self) -> bool:
        return self.is_bijective() and self.is_semistandard() and all(
            r[j] < r[j + 1] for r in self.rows for j in range(len(r) - 1)
        )

    def is_semistandard(self) -> bool:
        if any(r[j] > r[j + 1] for r in self.rows for j in range(len(r) - 1)):
            return False
        return all(col[i] < col[i + 1] for col in self.columns() for i in range(len(col) - 1))

    def replace(self, node: tuple[int, int], symbol: int) -> "Tableau":
        r, c = node
        rows = [list(x) for x in self.rows]
        rows[r - 1][c - 1] = symbol
        return Tableau(tuple(tuple(x) for x in rows))

    def permute_symbols(self, perm: Sequence[int]) -> "Tableau":
        """Apply ``perm`` (``perm[k-1]`` is the image of ``k``) to every entry."""
        return Tableau(tuple(tuple(perm[x - 1] for x in r) for r in self.rows))

    def tabloid(self) -> Tabloid:
        if not self.is_bijective():
            raise InvalidTableauError(f"tableau {self} is not bijective")
        return tuple(tuple(sorted(r)) for r in self.rows)

    def row_equivalents(self) -> Iterator["Tableau"]:
        """Distinct tableaux obtained by permuting entries within each row."""

        def row_perms(row):
            return sorted(set(permutations(row)))

        def rec(i):
            if i == len(self.rows):
                yield ()
                return
            for r in row_perms(self.rows[i]):
                for rest in rec(i + 1):
                    yield (r,) + rest

        for rows in rec(0):
            yield Tableau(rows)

    def without_symbol(self, symbol: int) -> "Tableau":
        return Tableau(tuple(tuple(x for x in r if x != symbol) for r in self.rows if any(x != symbol for x in r)))


def canonical_tabloid(rows: Sequence[Sequence[int]]) -> Tabloid:
    return tuple(tuple(sorted(r)) for r in rows)


def tabloid_of_typed(T: Tableau, t: Tableau, nrows: int | None = None) -> Tabloid:
    """Identify a type-``beta`` filling ``T`` with a ``beta``-tabloid via the bijection ``t``.

    Row ``k`` of the result holds the symbols of ``t`` sitting in nodes where
    ``T`` has the value ``k``.  ``nrows`` pads the result with empty rows.
    """
    if T.shape != t.shape:
        raise InvalidTableauError(f"shapes differ: {T.shape} vs {t.shape}")
    k = max((x for r in T.rows for x in r), default=0)
    if nrows is not None:
        if nrows < k:
            raise InvalidTableauError(f"{T} uses symbol {k} but only {nrows} rows were requested")
        k = nrows
    out: list[list[int]] = [[] for _ in range(k)]
    for rT, rt in zip(T.rows, t.rows):
        for x, s in zip(rT, rt):
            out[x - 1].append(s)
    return canonical_tabloid(out)


def num_tabloids(shape: Sequence[int]) -> int:
    return factorial(sum(shape)) // prod(factorial(x) for x in shape)


def row_reading_tableau(shape: Sequence[int]) -> Tableau:
    rows, k = [], 1
    for m in shape:
        rows.append(tuple(range(k, k + m)))
        k += m
    return Tableau(tuple(rows))


@lru_cache(maxsize=None)
def _standard_rows(parts: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = sum(parts)
    if n == 0:
        return ((),) if not parts else (tuple(() for _ in parts),)
    out = []
    lam = Partition(parts)
    for node in removable_nodes(lam):
        smaller = lam.remove_node(node.row)
        for rows in _standard_rows(smaller.parts):
            rows = list(rows) + [()] * (len(parts) - len(rows))
            rows[node.row - 1] = tuple(rows[node.row - 1]) + (n,)
            out.append(tuple(rows))
    out.sort(key=lambda rs: tuple(x for r in rs for x in r))
    return tuple(out)


def standard_tableaux(lam: Partition) -> list[Tableau]:
    """Standard tableaux ordered lexicographically by their row reading word."""
    return [Tableau(rows) for rows in _standard_rows(lam.parts)]


def semistandard_tableaux(shape: Sequence[int], content: Sequence[int]) -> list[Tableau]:
    """All semistandard fillings of ``shape`` whose type is the composition ``content``.

    Brute-force backtracking; used both as an enumerator for general types
    and as an oracle for the one-box-shift enumeration.
    """
    shape = tuple(shape)
    if sum(shape) != sum(content):
        return []
    cells = [(i, j) for i, m in enumerate(shape) for j in range(m)]
    grid: dict[tuple[int, int], int] = {}
    remaining = list(content)
    out = []

    def rec(idx):
        if idx == len(cells):
            out.append(Tableau(tuple(tuple(grid[(i, j)] for j in range(m)) for i, m in enumerate(shape))))
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, grid[(i, j - 1)])
        if i > 0:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[(i, j)] = v
            rec(idx + 1)
            remaining[v - 1] += 1
        grid.pop((i, j), None)

    rec(0)
    return out


# --------------------------------------------------------------------------
# semistandard alpha-sets of type beta


@dataclass(frozen=True)
class SemistandardSet:
    """A subset of ``{a, ..., b-1}`` encoding one semistandard alpha-tableau of type beta.

    The encoded bijection sends each member to the next member (the last one
    to ``b``) and fixes every non-member.
    """

    alpha: Partition
    a: int
    b: int
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        one_box_shift(self.alpha, self.a, self.b)
        m = self.members
        if self.a not in m:
            raise SpechtError(f"{sorted(m)} does not contain a={self.a}")
        if any(u < self.a or u >= self.b for u in m):
            raise SpechtError(f"{sorted(m)} is not inside {{{self.a},...,{self.b - 1}}}")
        for u in m:
            if u + 1 < self.b and self.alpha.part(u) == self.alpha.part(u + 1) and u + 1 not in m:
                raise SpechtError(f"{sorted(m)}: {u} is a member and alpha_{u} = alpha_{u + 1} but {u + 1} is not")

    @property
    def beta(self) -> Partition:
        return one_box_shift(self.alpha, self.a, self.b)

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.sorted())) + "}"

    def bijection(self) -> dict[int, int]:
        chain = self.sorted() + (self.b,)
        hat = {u: u for u in range(self.a, self.b)}
        for x, y in zip(chain, chain[1:]):
            hat[x] = y
        return hat

    def inverse_bijection(self) -> dict[int, int]:
        return {v: u for u, v in self.bijection().items()}

    def tableau(self) -> Tableau:
        """Rebuild the tableau: row ``i`` is all ``i`` except the row ends ``(u, alpha_u)``, ``a <= u < b``."""
        hat = self.bijection()
        nrows = max(len(self.alpha), self.b - 1)
        rows = []
        for i in range(1, nrows + 1):
            row = [i] * self.alpha.part(i)
            if self.a <= i < self.b and row:
                row[-1] = hat[i]
            rows.append(tuple(row))
        return Tableau(tuple(r for r in rows if r))

    @classmethod
    def from_tableau(cls, T: Tableau, alpha: Partition, a: int, b: int) -> "SemistandardSet":
        hat = {u: T[(u, alpha.part(u))] for u in range(a, b)}
        members, u = [], a
        while u < b:
            members.append(u)
            u = hat[u]
            if u <= members[-1]:
                raise InvalidTableauError(f"{T} is not a semistandard alpha-tableau of type beta")
        return cls(alpha, a, b, frozenset(members))

    def with_members(self, members) -> "SemistandardSet":
        return SemistandardSet(self.alpha, self.a, self.b, frozenset(members))


def _sets_key(S: SemistandardSet):
    hat = S.bijection()
    return tuple(hat[u] for u in range(S.a, S.b))


def enumerate_semistandard_one_box(alpha: Partition, a: int, b: int) -> list[tuple[SemistandardSet, Tableau]]:
    """All semistandard alpha-tableaux of type ``one_box_shift(alpha, a, b)`` with their sets.

    Ordered by the bijection values read from row ``a`` downwards, largest first.
    """
    one_box_shift(alpha, a, b)
    free = list(range(a + 1, b))
    out = []
    for mask in range(1 << len(free)):
        members = {a} | {u for k, u in enumerate(free) if mask >> k & 1}
        try:
            S = SemistandardSet(alpha, a, b, frozenset(members))
        except SpechtError:
            continue
        out.append(S)
    out.sort(key=_sets_key, reverse=True)
    return [(S, S.tableau()) for S in out]


def semistandard_count_formula(alpha: Partition, a: int, b: int) -> int:
    """Product of ``(m_i + 1)`` over part sizes strictly between ``alpha_b`` and ``alpha_a``."""
    lo, hi = alpha.part(b), alpha.part(a)
    return prod(alpha.multiplicity(i) + 1 for i in range(lo + 1, hi))


def removable_set(alpha: Partition, a: int, b: int) -> SemistandardSet:
    members = {i for i in range(a, b) if alpha.part(i) > alpha.part(i + 1)}
    return SemistandardSet(alpha, a, b, frozenset(members))


def join_vee(T: SemistandardSet, i: int) -> SemistandardSet:
    """Smallest semistandard set containing ``T`` and ``i + 1``."""
    if not T.a <= i < T.b:
        raise SpechtError(f"i={i} outside {{{T.a},...,{T.b - 1}}}")
    hat = T.bijection()
    if hat[i] == i:
        raise SpechtError(f"the bijection of {T} fixes {i}")
    if hat[i] == i + 1:
        return T
    alpha = T.alpha
    k = 1
    while alpha.part(i + k + 1) == alpha.part(i + 1):
        k += 1
    return T.with_members(T.members | set(range(i + 1, i + k + 1)))


# --------------------------------------------------------------------------
# p-cores


def beta_numbers(lam: Partition, length: int | None = None) -> list[int]:
    k = len(lam) if length is None else length
    return [lam.part(i) + k - i for i in range(1, k + 1)]


def p_core(lam: Partition, p: int) -> Partition:
    """Remove rim ``p``-hooks until none remain (done on beta-numbers)."""
    if p < 2:
        raise SpechtError(f"p-core needs p >= 2, got {p}")
    beta = set(beta_numbers(lam))
    changed = True
    while changed:
        changed = False
        for x in sorted(beta):
            if x - p >= 0 and x - p not in beta:
                beta.remove(x)
                beta.add(x - p)
                changed = True
                break
    bs = sorted(beta, reverse=True)
    k = len(bs)
    return Partition([bs[i] - (k - 1 - i) for i in range(k)])


def residue_multiset(lam: Partition, p: int) -> Counter:
    return Counter(residue(nd, p) for nd in lam.nodes())
