"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) for just the summary lines.
"""
from __future__ import annotations

import random
import time

import pytest

from spechtkit.combinatorics import (
    Partition,
    Tableau,
    enumerate_semistandard_one_box,
    one_box_shifts,
    partitions,
    row_reading_tableau,
    semistandard_count_formula,
    semistandard_tableaux,
)
from spechtkit.exact_algebra import vec_add, vec_equal, vec_scale, vec_sum
from spechtkit.homomorphisms import (
    carter_payne_explicit,
    carter_payne_jm,
    specht_membership,
    theta_image,
)
from spechtkit.jantzen import (
    adjusted_image,
    error_term,
    in_jantzen_by_decomposition,
    jantzen_filtration,
    verify_jantzen_containment,
)
from spechtkit.specht import (
    TabloidModule,
    TranspositionSum,
    act_jm,
    act_permutation,
    polytabloid,
    standard_basis,
)
from spechtkit.verify import endo_checks, failures, jantzen_checks, relation_checks, uniqueness_sweep

RESULTS: dict[int, str] = {}


def report(k: int, ok: bool, detail: str) -> None:
    line = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[k] = line
    print(line)


def poly_sum(terms) -> dict:
    return vec_sum((polytabloid(Tableau.parse(s)), c) for s, c in terms)


def first_failures(checks, k: int = 3) -> str:
    return "; ".join(f"{c.suite} {c.instance} {c.detail}" for c in failures(checks)[:k])


# --------------------------------------------------------------------------


def test_criterion_01_jm_action_example():
    start = time.perf_counter()
    t = Tableau.parse("1234/567/8")
    e = polytabloid(t)
    lhs = vec_add(act_jm(e, TranspositionSum.jucys_murphy(8)), e, 2)
    rhs = poly_sum([("1834/567/2", 1), ("1234/587/6", 1), ("1284/567/3", 1), ("1234/568/7", 1), ("1238/567/4", 1)])
    elapsed = time.perf_counter() - start
    ok = vec_equal(lhs, rhs) and elapsed < 1.0
    report(1, ok, f"e_t(L_8+2) equals the five-term sum over Z ({elapsed:.3f}s)")
    assert vec_equal(lhs, rhs)
    assert elapsed < 1.0


def test_criterion_02_carter_payne_worked_example():
    start = time.perf_counter()
    t = Tableau.parse("1234/567")
    expected = poly_sum([("143/567/2", 1), ("123/547/6", 1), ("124/567/3", 1), ("123/564/7", 1), ("123/567/4", 2)])
    jm = carter_payne_jm(Partition((4, 3, 1)), 3, 1, 5)
    explicit = carter_payne_explicit(Partition((4, 3)), 1, 3, 5)
    scalars = {}
    for name, img in (("jm", jm.hom.image(t)), ("explicit", explicit.image(t))):
        scalars[name] = next((c for c in range(1, 5) if vec_equal(img, vec_scale(expected, c), 5)), None)
    elapsed = time.perf_counter() - start
    ok = all(c is not None for c in scalars.values()) and jm.integral_ok and jm.lower_ok and elapsed < 5.0
    report(2, ok, f"GF(5) image matches via JM (scalar {scalars['jm']}) and explicit (scalar {scalars['explicit']}) ({elapsed:.2f}s)")
    assert scalars["jm"] is not None and scalars["explicit"] is not None
    assert jm.integral_ok and jm.lower_ok
    assert elapsed < 5.0


def test_criterion_03_explicit_coefficients():
    alpha = Partition((4, 3))
    cp = carter_payne_explicit(alpha, 1, 3)
    coeffs = {tuple(sorted(S.members)): c for S, c in cp.coefficients.items()}
    t = row_reading_tableau(alpha.parts)
    tabs = {tuple(sorted(S.members)): T for S, T in enumerate_semistandard_one_box(alpha, 1, 3)}
    combo = vec_add(theta_image(tabs[(1, 2)], t), theta_image(tabs[(1,)], t), -3)
    ok = cp.hooks == (5, 3) and coeffs == {(1,): -3, (1, 2): 1} and vec_equal(cp.image(t), combo)
    report(3, ok, f"hooks {cp.hooks}, Lambda {{1}}={coeffs.get((1,))}, Lambda {{1,2}}={coeffs.get((1, 2))}")
    assert ok


def test_criterion_04_error_term_identity():
    start = time.perf_counter()
    alpha = Partition((4, 3))
    adj = adjusted_image(alpha, 1, 3)
    expected = poly_sum([("123/564/7", 1), ("124/567/3", 1), ("132/574/6", 1), ("134/576/2", 1), ("123/567/4", -3)])
    direct = vec_add(carter_payne_explicit(alpha, 1, 3).image(Tableau.parse("1234/567")), error_term(alpha, 1, 3), -5)
    in_s = specht_membership(adj, (3, 3, 1), 0) and specht_membership(adj, (3, 3, 1), 0, method="basis")
    elapsed = time.perf_counter() - start
    ok = vec_equal(adj, expected) and vec_equal(direct, expected) and in_s and elapsed < 5.0
    report(4, ok, f"e_t theta - 5 E_t matches and lies in S^(3,3,1) over Z ({elapsed:.2f}s)")
    assert vec_equal(adj, expected) and vec_equal(direct, expected)
    assert in_s
    assert elapsed < 5.0


def test_criterion_05_uniqueness_sweep():
    start = time.perf_counter()
    checks = uniqueness_sweep(7, (3, 5, 7))
    elapsed = time.perf_counter() - start
    bad = failures(checks)
    ok = not bad and elapsed < 600
    report(5, ok, f"{len(checks)} (pair, p) cases, {len(bad)} exceptions ({elapsed:.1f}s) {first_failures(checks)}")
    assert not bad
    assert elapsed < 600


def test_criterion_06_relation_suite():
    checks = relation_checks(7)
    bad = failures(checks)
    explicit = [c for c in checks if "theta" in c.instance]
    report(6, not bad, f"{len(checks)} identities ({len(explicit)} on the full map), {len(bad)} exceptions {first_failures(checks)}")
    assert not bad


def test_criterion_07_endomorphism_rings():
    start = time.perf_counter()
    checks = endo_checks(8, (3, 5, 7))
    elapsed = time.perf_counter() - start
    bad = failures(checks)
    ok = not bad and elapsed < 900
    report(7, ok, f"{len(checks)} (lambda, p) cases with |lambda| <= 8, {len(bad)} exceptions ({elapsed:.1f}s) {first_failures(checks)}")
    assert not bad
    assert elapsed < 900


def test_criterion_08_jantzen_containment():
    checks = [c for c in jantzen_checks(7, (3, 5, 7)) if c.suite == "jantzen/containment"]
    bad = failures(checks)
    res = verify_jantzen_containment(Partition((4, 3)), Partition((3, 3, 1)), 5)
    J = jantzen_filtration(Partition((3, 3, 1)), 5)
    concrete = res.ok and res.i_guaranteed == 1 and res.adjusted_in_level and J.dimensions() == [21, 13]
    ok = not bad and concrete
    report(8, ok, f"{len(checks)} containments, {len(bad)} exceptions; (3,3,1) p=5 image in J^{res.i_observed} of dims {J.dimensions()}")
    assert not bad
    assert concrete


# the twelve sets, in the listed order, with the row of each non-dot symbol
LISTED = [
    ({1}, "6/2/3/4/5"),
    ({1, 5}, "5/2/3/4/6"),
    ({1, 4}, "4/2/3/6/5"),
    ({1, 4, 5}, "4/2/3/5/6"),
    ({1, 3}, "3/2/6/4/5"),
    ({1, 3, 5}, "3/2/5/4/6"),
    ({1, 3, 4}, "3/2/4/6/5"),
    ({1, 3, 4, 5}, "3/2/4/5/6"),
    ({1, 2, 3}, "2/3/6/4/5"),
    ({1, 2, 3, 5}, "2/3/5/4/6"),
    ({1, 2, 3, 4}, "2/3/4/6/5"),
    ({1, 2, 3, 4, 5}, "2/3/4/5/6"),
]


def listed_tableau(alpha: Partition, ends: str) -> Tableau:
    last = [int(x) for x in ends.split("/")]
    return Tableau(tuple(tuple([i + 1] * (m - 1) + [last[i]]) for i, m in enumerate(alpha.parts)))


def random_instances(rng: random.Random, k: int):
    out = []
    while len(out) < k:
        n = rng.randint(3, 11)
        alpha = rng.choice(list(partitions(n)))
        shifts = list(one_box_shifts(alpha))
        if shifts:
            a, b, beta = rng.choice(shifts)
            out.append((alpha, a, b, beta))
    return out


def test_criterion_09_semistandard_enumeration():
    alpha = Partition((4, 3, 3, 2, 1))
    pairs = enumerate_semistandard_one_box(alpha, 1, 6)
    got = [(set(S.members), T) for S, T in pairs]
    want = [(s, listed_tableau(alpha, e)) for s, e in LISTED]
    listed_ok = sorted(got, key=lambda x: sorted(x[0])) == sorted(want, key=lambda x: sorted(x[0])) and len(got) == 12
    rng = random.Random(20240901)
    mismatches = []
    for alpha, a, b, beta in random_instances(rng, 200):
        enum = len(enumerate_semistandard_one_box(alpha, a, b))
        brute = len(semistandard_tableaux(alpha.parts, beta.parts))
        formula = semistandard_count_formula(alpha, a, b)
        if not enum == brute == formula:
            mismatches.append((alpha, a, b, enum, brute, formula))
    ok = listed_ok and not mismatches
    report(9, ok, f"12 listed sets {'reproduced' if listed_ok else 'DIFFER'}; 200 random counts, {len(mismatches)} mismatches")
    assert listed_ok
    assert not mismatches, mismatches[:3]


def random_membership_vector(rng: random.Random, shape: Partition) -> dict:
    """Half the time an element of the Specht module, otherwise a perturbed one or a random vector."""
    n = shape.n
    B = standard_basis(shape)
    M = TabloidModule(shape.parts)
    v: dict = {}
    for _ in range(rng.randint(1, 3)):
        perm = tuple(rng.sample(range(1, n + 1), n))
        e = act_permutation(B.vectors[rng.randrange(B.dim)], perm)
        v = vec_add(v, e, rng.randint(-4, 4))
    kind = rng.random()
    if kind < 0.5:
        return v
    if kind < 0.8:
        return vec_add(v, {M.basis[rng.randrange(M.dim)]: 1}, rng.randint(1, 4))
    return {M.basis[rng.randrange(M.dim)]: rng.randint(-3, 3) for _ in range(rng.randint(1, 4))}


def test_criterion_10_oracle_cross_checks():
    rng = random.Random(7)
    shapes = [lam for n in range(2, 7) for lam in partitions(n) if len(lam) > 1 and lam.part(1) > 1]
    member_disagree, counts = 0, [0, 0]
    for _ in range(500):
        shape = rng.choice(shapes)
        p = rng.choice((0, 3, 5, 7))
        v = random_membership_vector(rng, shape)
        a = specht_membership(v, shape.parts, p, method="kernel")
        b = specht_membership(v, shape.parts, p, method="basis")
        counts[a] += 1
        member_disagree += a != b

    jantzen_disagree, jcounts = 0, [0, 0]
    for _ in range(200):
        shape = rng.choice(shapes)
        p = rng.choice((3, 5, 7))
        J = jantzen_filtration(shape, p)
        i = rng.randint(1, J.max_valuation + 1)
        d = J.gram.dim
        coords = [0] * d
        # mostly vectors built from deep Smith rows, so both outcomes occur
        for k, dk in enumerate(J.elementary_divisors):
            if rng.random() < 0.5:
                y = rng.randint(-3, 3)
                coords = [c + y * u for c, u in zip(coords, J.smith.U[k])]
        if rng.random() < 0.5:
            coords = [c * p ** rng.randint(0, i) for c in coords]
        if rng.random() < 0.3:
            coords[rng.randrange(d)] += rng.randint(1, 3)
        g = J.contains_integral(coords, i)
        s = in_jantzen_by_decomposition(shape, coords, p, i)
        jcounts[g] += 1
        jantzen_disagree += g != s

    ok = member_disagree == 0 and jantzen_disagree == 0 and min(counts) > 0 and min(jcounts) > 0
    report(
        10,
        ok,
        f"membership 500 vectors ({counts[1]} in, {counts[0]} out), {member_disagree} disagreements; "
        f"Jantzen 200 vectors ({jcounts[1]} in, {jcounts[0]} out), {jantzen_disagree} disagreements",
    )
    assert member_disagree == 0 and jantzen_disagree == 0
    assert min(counts) > 0 and min(jcounts) > 0


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
