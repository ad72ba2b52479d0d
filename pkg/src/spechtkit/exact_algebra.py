"""Exact linear algebra over GF(p) and Q, Smith normal form over Z.

Dense matrices are numpy arrays: ``int64`` holding residues for GF(p),
``object`` holding :class:`fractions.Fraction` for Q.  Sparse vectors are
plain dicts mapping a basis key to a nonzero scalar.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from .errors import DomainMismatchError, SpechtError

_FLOAT_EXACT = 2**52
_INT64_SAFE = 2**62


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Scalar domain for dense elimination; subclasses are GF(p) and Q."""

    characteristic: int

    def array(self, data) -> np.ndarray:
        raise NotImplementedError

    def reduce(self, x):
        raise NotImplementedError

    def reduce_array(self, A: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def zeros(self, shape) -> np.ndarray:
        return self.array(np.zeros(shape, dtype=np.int64))

    def identity(self, n: int) -> np.ndarray:
        return self.array(np.eye(n, dtype=np.int64))

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        return self.reduce_array(A @ B)


class _Rationals(Field):
    characteristic = 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, _Rationals)

    def __hash__(self):
        return hash("QQ")

    def array(self, data) -> np.ndarray:
        A = np.array(data, dtype=object)
        flat = A.reshape(-1)
        for k, x in enumerate(flat):
            if not isinstance(x, Fraction):
                flat[k] = Fraction(int(x)) if isinstance(x, (int, np.integer)) else Fraction(x)
        return A

    def reduce(self, x):
        return Fraction(x)

    def reduce_array(self, A):
        return A

    def inv(self, x):
        return 1 / Fraction(x)


QQ = _Rationals()


class GF(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise SpechtError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def _dtype(self):
        return np.int64 if self.p < 2**31 else object

    def array(self, data) -> np.ndarray:
        A = np.asarray(data)
        if A.dtype.kind in "iu":
            return (A.astype(object) % self.p).astype(self._dtype())
        A = np.array(A, dtype=object)
        if A.size and any(isinstance(x, Fraction) for x in A.flat):
            A = np.vectorize(lambda x: _mod_scalar(x, self.p), otypes=[object])(A)
        else:
            A = A % self.p
        return A.astype(self._dtype())

    def reduce(self, x):
        return _mod_scalar(x, self.p)

    def reduce_array(self, A):
        return A % self.p

    def inv(self, x):
        return pow(int(x), -1, self.p)

    def matmul(self, A, B):
        inner = A.shape[-1] if A.ndim else 1
        if self._dtype() is np.int64 and self.p * self.p * max(inner, 1) < _FLOAT_EXACT:
            C = np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64)
            return C % self.p
        if self._dtype() is np.int64 and self.p * self.p * max(inner, 1) < _INT64_SAFE:
            return (A @ B) % self.p
        return (A.astype(object) @ B.astype(object)) % self.p


def _mod_scalar(x, p):
    if isinstance(x, Fraction):
        return (x.numerator * pow(x.denominator, -1, p)) % p
    return int(x) % p


def field_for(p: int) -> Field:
    """``GF(p)`` for a prime ``p``, ``QQ`` for ``p == 0``."""
    return QQ if p == 0 else GF(p)


# --------------------------------------------------------------------------
# dense elimination


def rref(A: np.ndarray, field: Field) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    A = field.reduce_array(np.array(A, copy=True))
    m, n = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c] != 0)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = field.inv(A[r, c])
        A[r] = field.reduce_array(A[r] * inv)
        col = A[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col != 0)[0]
        if rows.size:
            A[rows] = field.reduce_array(A[rows] - np.outer(col[rows], A[r]))
        pivots.append(c)
        r += 1
    return A, pivots


def rank(A: np.ndarray, field: Field) -> int:
    if A.size == 0:
        return 0
    return len(rref(A, field)[1])


def kernel(A: np.ndarray, field: Field) -> np.ndarray:
    """Rows ``x`` with ``A @ x == 0``; a basis of the right null space."""
    m, n = A.shape
    if m == 0:
        return field.identity(n)
    R, pivots = rref(A, field)
    free = [c for c in range(n) if c not in set(pivots)]
    K = field.zeros((len(free), n))
    for k, f in enumerate(free):
        K[k, f] = field.reduce(1)
        for row, pc in enumerate(pivots):
            K[k, pc] = field.reduce(-R[row, f])
    return K


def left_kernel(A: np.ndarray, field: Field, chunk: int | None = None) -> np.ndarray:
    """Rows ``z`` with ``z @ A == 0``.

    Columns are consumed in chunks, shrinking the candidate space each time,
    so very wide constraint matrices never need a full elimination.
    """
    m, n = A.shape
    Z = None
    step = chunk or max(2 * m, 64)
    for start in range(0, n, step):
        block = A[:, start:start + step]
        if Z is None:
            Z = kernel(block.T, field)
        else:
            Z = field.matmul(kernel(field.matmul(Z, block).T, field), Z)
        if Z.shape[0] == 0:
            break
    return field.identity(m) if Z is None else Z


def solve(A: np.ndarray, b: np.ndarray, field: Field) -> np.ndarray | None:
    """Some ``x`` with ``A @ x == b``, or ``None`` if the system is inconsistent."""
    m, n = A.shape
    aug = np.concatenate([field.reduce_array(A), field.reduce_array(np.asarray(b).reshape(m, 1))], axis=1)
    R, pivots = rref(aug, field)
    if pivots and pivots[-1] == n:
        return None
    x = field.zeros((n,))
    for row, pc in enumerate(pivots):
        x[pc] = R[row, n]
    return x


def inverse(A: np.ndarray, field: Field) -> np.ndarray:
    n = A.shape[0]
    if A.shape != (n, n):
        raise SpechtError(f"inverse of a non-square {A.shape} matrix")
    aug = np.concatenate([field.reduce_array(A), field.identity(n)], axis=1)
    R, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        raise SpechtError("matrix is singular")
    return R[:, n:]


def is_zero(A: np.ndarray) -> bool:
    return not np.any(A != 0)


# --------------------------------------------------------------------------
# matrix wrapper with a fixed scalar domain


@dataclass(frozen=True)
class ExactMatrix:
    data: np.ndarray
    field: Field

    @classmethod
    def from_rows(cls, rows, field: Field) -> "ExactMatrix":
        return cls(field.array(rows), field)

    @classmethod
    def from_sparse(cls, nrows: int, ncols: int, entries: Mapping[tuple[int, int], object], field: Field) -> "ExactMatrix":
        A = field.zeros((nrows, ncols))
        for (i, j), x in entries.items():
            A[i, j] = field.reduce(x)
        return cls(A, field)

    @property
    def shape(self):
        return self.data.shape

    def entries(self) -> dict[tuple[int, int], object]:
        return {(int(i), int(j)): self.data[i, j] for i, j in zip(*np.nonzero(self.data != 0))}

    def _check(self, other: "ExactMatrix"):
        if self.field != other.field:
            raise DomainMismatchError(f"mixed scalar domains {self.field} and {other.field}")

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        return ExactMatrix(self.field.matmul(self.data, other.data), self.field)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        return ExactMatrix(self.field.reduce_array(self.data + other.data), self.field)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        return ExactMatrix(self.field.reduce_array(self.data - other.data), self.field)

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.field == other.field and self.shape == other.shape and not np.any(self.data != other.data)

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix(self.field.reduce_array(self.data * self.field.reduce(c)), self.field)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.data.T.copy(), self.field)

    def rank(self) -> int:
        return rank(self.data, self.field)

    def kernel_basis(self) -> list[np.ndarray]:
        return list(kernel(self.data, self.field))

    def solve(self, b) -> np.ndarray | None:
        b = self.field.array(b)
        if b.shape[0] != self.shape[0]:
            raise SpechtError(f"right-hand side has length {b.shape[0]}, expected {self.shape[0]}")
        return solve(self.data, b, self.field)

    def is_zero(self) -> bool:
        return is_zero(self.data)


def reduce_integer_matrix(A, p: int) -> ExactMatrix:
    return ExactMatrix(GF(p).array(A), GF(p))


# --------------------------------------------------------------------------
# sparse vectors


def vec_add(u: Mapping, v: Mapping, c=1) -> dict:
    out = dict(u)
    vec_iadd(out, v, c)
    return out


def vec_iadd(acc: dict, v: Mapping, c=1) -> dict:
    if c == 0:
        return acc
    for k, x in v.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def vec_scale(v: Mapping, c) -> dict:
    return {k: c * x for k, x in v.items() if c * x}


def vec_mod(v: Mapping, p: int) -> dict:
    """Reduce coefficients mod ``p``; ``p == 0`` leaves them as they are."""
    if p == 0:
        return {k: x for k, x in v.items() if x}
    out = {}
    for k, x in v.items():
        y = _mod_scalar(x, p)
        if y:
            out[k] = y
    return out


def vec_equal(u: Mapping, v: Mapping, p: int = 0) -> bool:
    return vec_mod(vec_add(u, v, -1), p) == {}


def vec_dot(u: Mapping, v: Mapping):
    if len(v) < len(u):
        u, v = v, u
    return sum(x * v[k] for k, x in u.items() if k in v)


def vec_sum(vectors: Iterable[tuple[Mapping, object]]) -> dict:
    acc: dict = {}
    for v, c in vectors:
        vec_iadd(acc, v, c)
    return acc


def vectors_to_matrix(vectors: Sequence[Mapping], keys: Sequence[Hashable], field: Field) -> np.ndarray:
    """Stack sparse vectors as rows over the ordered ``keys``."""
    index = {k: i for i, k in enumerate(keys)}
    A = field.zeros((len(vectors), len(keys)))
    for r, v in enumerate(vectors):
        for k, x in v.items():
            A[r, index[k]] = field.reduce(x)
    return A


# --------------------------------------------------------------------------
# Smith normal form over Z


@dataclass(frozen=True)
class SmithForm:
    d: tuple[int, ...]
    U: list[list[int]]
    V: list[list[int]]


def int_matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> list[list[int]]:
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    cols = len(B[0])
    Bt = [[B[k][j] for k in range(len(B))] for j in range(cols)]
    return [[sum(x * y for x, y in zip(row, col)) for col in Bt] for row in A]


def smith_normal_form(M: Sequence[Sequence[int]]) -> SmithForm:
    """``U @ M @ V == diag(d)`` with unimodular ``U``, ``V`` and ``d[i] | d[i+1]``.

    Pivot on the smallest nonzero magnitude; Python integers keep everything exact.
    """
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst -= q * row src
        if q:
            ra, rs = A[dst], A[src]
            for k in range(n):
                if rs[k]:
                    ra[k] -= q * rs[k]
            ua, us = U[dst], U[src]
            for k in range(m):
                if us[k]:
                    ua[k] -= q * us[k]

    def add_col(dst, src, q):  # col dst -= q * col src
        if q:
            for row in A:
                if row[src]:
                    row[dst] -= q * row[src]
            for row in V:
                if row[src]:
                    row[dst] -= q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            piv = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, A[i][t] // piv)
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, A[t][j] // piv)
            # a leftover in row/column t is smaller than the pivot: bring it in and repeat
            small = None
            for i in range(t + 1, m):
                if A[i][t] and (small is None or abs(A[i][t]) < small[0]):
                    small = (abs(A[i][t]), "r", i)
            for j in range(t + 1, n):
                if A[t][j] and (small is None or abs(A[t][j]) < small[0]):
                    small = (abs(A[t][j]), "c", j)
            if small is not None:
                if small[1] == "r":
                    swap_rows(t, small[2])
                else:
                    swap_cols(t, small[2])
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    d = tuple(A[i][i] for i in range(min(m, n)))
    return SmithForm(d, U, V)


def p_valuation(x: int, p: int) -> float:
    """Exponent of ``p`` in ``x``; ``inf`` for ``x == 0``."""
    if x == 0:
        return float("inf")
    v = 0
    x = abs(x)
    while x % p == 0:
        x //= p
        v += 1
    return v


def int_det(M: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]
