"""Predicted effect of the psi maps on semistandard homomorphisms, and coefficient recursions.

Every identity here is between homomorphisms out of ``S^alpha``.  Since
``S^alpha`` is generated by a single polytabloid ``e_t``, each identity is
checked on ``e_t`` with ``t`` the row-reading tableau.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .combinatorics import (
    Partition,
    SemistandardSet,
    Tableau,
    enumerate_semistandard_one_box,
    join_vee,
    one_box_shift,
    one_box_shift_pairs,
    removable_set,
    row_reading_tableau,
)
from .errors import SpechtError
from .exact_algebra import QQ, field_for, left_kernel, solve, vec_equal, vec_mod
from .homomorphisms import (
    PsiMap,
    admissible_psi,
    carter_payne_explicit,
    hom_space,
    hook,
    theta_image,
)
from .specht import standard_basis


@dataclass(frozen=True)
class PsiPrediction:
    coefficient: int
    W: Tableau | None  # typed filling whose theta the result is a multiple of
    rule: str


def _change_row_end(T: Tableau, alpha: Partition, row: int, old: int, new: int) -> Tableau:
    node = (row, alpha.part(row))
    if T[node] != old:
        raise SpechtError(f"row {row} of {T} does not end in {old}")
    return T.replace(node, new)


def predict_psi(S: SemistandardSet, i: int, r: int) -> PsiPrediction:
    """What ``theta_S psi_{i,r}`` should be, as ``coefficient * theta_W``."""
    alpha, a, b = S.alpha, S.a, S.b
    beta = S.beta
    T = S.tableau()
    if not (a <= i < b and r == beta.part(i + 1) - 1):
        return PsiPrediction(0, None, "outside")
    hat = S.bijection()
    inv = S.inverse_bijection()
    if i not in S.members:
        j0 = inv.get(i + 1, i + 1)
        if j0 == i + 1:
            return PsiPrediction(0, None, "i-not-in-T/zero")
        return PsiPrediction(1, _change_row_end(T, alpha, j0, i + 1, i), "i-not-in-T")
    if i != a and alpha.part(inv[i]) == alpha.part(i):
        return PsiPrediction(0, None, "equal-rows")
    if hat[i] == i + 1:
        c = hook(alpha, b, i) - hook(alpha, b, i + 1)
        return PsiPrediction(c, _change_row_end(T, alpha, i, i + 1, i), "good/adjacent")
    V = join_vee(S, i)
    sign = -1 if len(V.members - S.members) % 2 else 1
    return PsiPrediction(sign, _change_row_end(V.tableau(), alpha, i, i + 1, i), "good/join")


@dataclass(frozen=True)
class RelationResult:
    alpha: Partition
    a: int
    b: int
    label: str  # set, or "theta" for the full map
    i: int
    r: int
    rule: str
    ok: bool


def check_semistandard_relations(alpha: Partition, a: int, b: int) -> Iterator[RelationResult]:
    """Compare ``e_t theta_T psi_{i,r}`` with its predicted value for every ``T`` and ``(i, r)``."""
    beta = one_box_shift(alpha, a, b)
    t = row_reading_tableau(alpha.parts)
    for S, T in enumerate_semistandard_one_box(alpha, a, b):
        img = theta_image(T, t)
        for i, r in admissible_psi(beta.parts):
            lhs = PsiMap(i, r, beta.parts)(img)
            pred = predict_psi(S, i, r)
            rhs = {} if pred.W is None else {k: pred.coefficient * x for k, x in theta_image(pred.W, t, len(beta)).items()}
            yield RelationResult(alpha, a, b, str(S), i, r, pred.rule, vec_equal(lhs, rhs))


def check_explicit_relations(alpha: Partition, a: int, b: int) -> Iterator[RelationResult]:
    """Over ``Z``: the explicit map is killed by every psi except ``psi_a``, whose image lies in ``h_a M``."""
    beta = one_box_shift(alpha, a, b)
    cp = carter_payne_explicit(alpha, a, b)
    t = row_reading_tableau(alpha.parts)
    img = cp.image(t)
    h_a = cp.h_a
    for i, r in admissible_psi(beta.parts):
        out = PsiMap(i, r, beta.parts)(img)
        if (i, r) == (a, beta.part(a + 1) - 1):
            ok = all(x % h_a == 0 for x in out.values())
            yield RelationResult(alpha, a, b, "theta", i, r, "psi_a image divisible by h_a", ok)
        else:
            yield RelationResult(alpha, a, b, "theta", i, r, "killed", not out)


def relation_suite(max_n: int) -> list[RelationResult]:
    out = []
    for n in range(2, max_n + 1):
        for alpha, a, b, _ in one_box_shift_pairs(n):
            out.extend(check_semistandard_relations(alpha, a, b))
            out.extend(check_explicit_relations(alpha, a, b))
    return out


# --------------------------------------------------------------------------
# the coefficients Lambda_T


def _set_vectors(alpha: Partition, a: int, b: int, p: int):
    t = row_reading_tableau(alpha.parts)
    pairs = enumerate_semistandard_one_box(alpha, a, b)
    return t, [S for S, _ in pairs], [vec_mod(theta_image(T, t), p) for _, T in pairs]


def lambda_kernel(alpha: Partition, a: int, b: int) -> list[dict[SemistandardSet, object]]:
    """Over ``Q``: all ``Lambda`` with ``sum Lambda_T theta_T psi_{i,r} = 0`` for every ``(i, r)`` but ``psi_a``."""
    beta = one_box_shift(alpha, a, b)
    t, sets, vecs = _set_vectors(alpha, a, b, 0)
    cols: dict = {}
    for i, r in admissible_psi(beta.parts):
        if (i, r) == (a, beta.part(a + 1) - 1):
            continue
        m = PsiMap(i, r, beta.parts)
        for k, v in enumerate(vecs):
            for tab, x in m(v).items():
                cols.setdefault((i, r, tab), {})[k] = x
    keys = sorted(cols)
    A = QQ.zeros((len(sets), len(keys)))
    for c, key in enumerate(keys):
        for k, x in cols[key].items():
            A[k, c] = x
    Z = left_kernel(A, QQ) if keys else QQ.identity(len(sets))
    return [{S: z[k] for k, S in enumerate(sets)} for z in Z]


def lambda_from_hom(alpha: Partition, a: int, b: int, p: int) -> list[dict[SemistandardSet, int]]:
    """Decompose each brute-force homomorphism ``S^alpha -> S^beta`` (mod ``p``) in the ``theta_T`` basis."""
    beta = one_box_shift(alpha, a, b)
    t, sets, vecs = _set_vectors(alpha, a, b, p)
    Ba, Bb = standard_basis(alpha, force=True), standard_basis(beta, force=True)
    k_t = Ba.index_of(t)
    keys = sorted({tab for v in vecs for tab in v})
    F = field_for(p)
    out = []
    for X in hom_space(alpha, beta, p).matrices:
        w = Bb.combine([int(x) for x in X[k_t]], p)
        allkeys = sorted(set(keys) | set(w))
        A = F.zeros((len(allkeys), len(sets)))
        idx = {key: n for n, key in enumerate(allkeys)}
        for k, v in enumerate(vecs):
            for tab, x in v.items():
                A[idx[tab], k] = x
        rhs = F.zeros((len(allkeys),))
        for tab, x in w.items():
            rhs[idx[tab]] = x
        sol = solve(A, rhs, F)
        if sol is None:
            raise SpechtError("homomorphism is not a combination of semistandard homomorphisms")
        out.append({S: int(sol[k]) for k, S in enumerate(sets)})
    return out


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _eq(x, y, p: int) -> bool:
    return (x - y) % p == 0 if p else x == y


def check_removable_reduction(lam: dict[SemistandardSet, object], p: int = 0) -> bool:
    """``(-1)^|T| Lambda_T == (-1)^|T meet R| Lambda_{T meet R}`` for every set ``T``."""
    any_set = next(iter(lam))
    R = removable_set(any_set.alpha, any_set.a, any_set.b).members
    for S, x in lam.items():
        N = S.with_members(S.members & R)
        if not _eq(_sign(len(S)) * x, _sign(len(N)) * lam[N], p):
            return False
    return True


def check_adjacent_relation(lam: dict[SemistandardSet, object], p: int = 0) -> tuple[bool, int]:
    """The two-term recursion between adjacent removable nodes; returns ``(ok, cases checked)``."""
    any_set = next(iter(lam))
    alpha, a, b = any_set.alpha, any_set.a, any_set.b
    R = removable_set(alpha, a, b).members
    checked = 0
    for N, x in lam.items():
        if not N.members <= R:
            continue
        hat = N.bijection()
        for i in sorted(N.members):
            j = hat[i]
            if any(i < u < j for u in R):
                continue
            lhs = hook(alpha, b, i) * x + (lam[N.with_members(N.members - {i})] if i != a else 0)
            rhs = hook(alpha, b, j) * x + (lam[N.with_members(N.members - {j})] if j != b else 0)
            checked += 1
            if not _eq(lhs, rhs, p):
                return False, checked
    return True, checked


def check_closed_form(lam: dict[SemistandardSet, object], p: int = 0) -> bool:
    """``(-1)^|N| Lambda_N == (-1)^|R| prod_{u in R \\ N} h_u Lambda_R`` for removable sets ``N``."""
    any_set = next(iter(lam))
    alpha, a, b = any_set.alpha, any_set.a, any_set.b
    Rset = removable_set(alpha, a, b)
    R = Rset.members
    for N, x in lam.items():
        if not N.members <= R:
            continue
        prod = 1
        for u in R - N.members:
            prod *= hook(alpha, b, u)
        if not _eq(_sign(len(N)) * x, _sign(len(R)) * prod * lam[Rset], p):
            return False
    return True


def proportional(u: dict, v: dict, p: int = 0) -> bool:
    """Whether two coefficient vectors over the same sets span the same line."""
    keys = list(u)
    A = np.array([[u[k] for k in keys], [v[k] for k in keys]], dtype=object)
    if p:
        A = A % p
    F = field_for(p)
    from .exact_algebra import rank

    return rank(F.array(A), F) == 1
