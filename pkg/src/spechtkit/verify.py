"""Sweeps that check the theory on every small instance.

Each sweep returns a list of ``Check`` records; ``failures(checks)`` picks out
the ones that did not hold.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .combinatorics import one_box_shift_pairs, partitions
from .homomorphisms import (
    carter_payne_explicit,
    carter_payne_jm,
    endo_ring_induction,
    endo_ring_restriction,
    hom_space,
    hook,
    jm_layers_for_shift,
    proportionality_scalar,
)
from .jantzen import check_core_identity, check_exception_identity, image_orthogonal, verify_jantzen_containment
from .relations import (
    check_adjacent_relation,
    check_closed_form,
    check_removable_reduction,
    lambda_from_hom,
    lambda_kernel,
    proportional,
    relation_suite,
)


@dataclass(frozen=True)
class Check:
    suite: str
    instance: str
    ok: bool
    detail: str = ""


def failures(checks: Iterable[Check]) -> list[Check]:
    return [c for c in checks if not c.ok]


def _shift_label(alpha, a, b, beta, p=None) -> str:
    s = f"({alpha})->({beta}) a={a} b={b}"
    return s if p is None else f"{s} p={p}"


def uniqueness_sweep(max_n: int, primes: Sequence[int] = (3, 5, 7)) -> list[Check]:
    """Brute-force ``dim Hom(S^alpha, S^beta)`` is 1 exactly when ``p`` divides ``h_a``."""
    out = []
    for n in range(2, max_n + 1):
        for alpha, a, b, beta in one_box_shift_pairs(n):
            h = hook(alpha, b, a)
            for p in primes:
                d = hom_space(alpha, beta, p).dimension
                want = 1 if h % p == 0 else 0
                out.append(Check("uniqueness", _shift_label(alpha, a, b, beta, p), d == want, f"dim={d} h_a={h}"))
    return out


def relation_checks(max_n: int) -> list[Check]:
    return [
        Check("relations", f"{_shift_label(r.alpha, r.a, r.b, '')} T={r.label} i={r.i} r={r.r}", r.ok, r.rule)
        for r in relation_suite(max_n)
    ]


def lambda_checks(max_n: int, primes: Sequence[int] = (3, 5, 7)) -> list[Check]:
    """Coefficient recursions on the rational kernel and on brute-force homomorphisms."""
    out = []
    for n in range(2, max_n + 1):
        for alpha, a, b, beta in one_box_shift_pairs(n):
            label = _shift_label(alpha, a, b, beta)
            cp = carter_payne_explicit(alpha, a, b)
            K = lambda_kernel(alpha, a, b)
            ok = len(K) == 1 and proportional(K[0], cp.coefficients)
            out.append(Check("lambda/Q-kernel", label, ok, f"kernel dim {len(K)}"))
            h = cp.h_a
            for p in primes:
                if h % p:
                    continue
                for lam in lambda_from_hom(alpha, a, b, p):
                    adj, _ = check_adjacent_relation(lam, p)
                    ok = check_removable_reduction(lam, p) and adj and check_closed_form(lam, p) and proportional(lam, cp.coefficients, p)
                    out.append(Check("lambda/hom", f"{label} p={p}", ok))
    return out


def jm_checks(max_n: int, primes: Sequence[int] = (3, 5, 7)) -> list[Check]:
    """The JM construction is well defined, nonzero and proportional to the explicit map."""
    out = []
    for n in range(2, max_n + 1):
        for alpha, a, b, beta in one_box_shift_pairs(n):
            h = hook(alpha, b, a)
            lam, u, v = jm_layers_for_shift(alpha, a, b)
            for p in primes:
                if h % p:
                    continue
                jm = carter_payne_jm(lam, u, v, p)
                ex = carter_payne_explicit(alpha, a, b, p).hom.coordinates()
                c = proportionality_scalar(jm.matrix, ex, p)
                ok = jm.integral_ok and jm.lower_ok and c is not None and c != 0
                out.append(Check("jm", _shift_label(alpha, a, b, beta, p), ok, f"scalar={c}"))
    return out


def endo_checks(max_m: int, primes: Sequence[int] = (3, 5, 7), induce_max: int = 0) -> list[Check]:
    out = []
    for m in range(1, max_m + 1):
        for lam in partitions(m):
            for p in primes:
                R = endo_ring_restriction(lam, p)
                out.append(Check("endo/restrict", f"({lam}) p={p}", R.consistent, f"dim End={R.end_dimension}"))
    for m in range(1, induce_max + 1):
        for mu in partitions(m):
            for p in primes:
                R = endo_ring_induction(mu, p)
                out.append(Check("endo/induce", f"({mu}) p={p}", R.consistent, f"dim End={R.end_dimension}"))
    return out


def jantzen_checks(max_n: int, primes: Sequence[int] = (3, 5, 7)) -> list[Check]:
    out = []
    for n in range(2, max_n + 1):
        for alpha, a, b, beta in one_box_shift_pairs(n):
            label = _shift_label(alpha, a, b, beta)
            out.append(Check("jantzen/core-identity", label, check_core_identity(alpha, a, b)))
            out.append(Check("jantzen/exception", label, all(check_exception_identity(alpha, a, b))))
            out.append(Check("jantzen/orthogonal", label, image_orthogonal(alpha, a, b)))
            for p in primes:
                if hook(alpha, b, a) % p:
                    continue
                res = verify_jantzen_containment(alpha, beta, p)
                out.append(Check("jantzen/containment", f"{label} p={p}", res.ok, f"guaranteed={res.i_guaranteed} observed={res.i_observed}"))
    return out


SUITES = {
    "relations": lambda n, ps: relation_checks(n),
    "uniqueness": uniqueness_sweep,
    "lambda": lambda_checks,
    "jm": jm_checks,
    "jantzen": jantzen_checks,
    "endo": lambda n, ps: endo_checks(n + 1, ps),
}


def run_suites(max_n: int, primes: Sequence[int], names: Sequence[str] | None = None) -> list[Check]:
    out = []
    for name in names or SUITES:
        out.extend(SUITES[name](max_n, primes))
    return out
