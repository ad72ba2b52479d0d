"""Command-line front end.

Exit codes: 0 success, 2 invalid request, 3 a check that theory guarantees failed.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import serialize as ser
from .combinatorics import (
    Partition,
    Tableau,
    enumerate_semistandard_one_box,
    one_box_shift,
    row_reading_tableau,
    semistandard_count_formula,
)
from .errors import CharacteristicTwoError, SpechtError, TheoremCheckError
from .exact_algebra import is_prime
from .homomorphisms import (
    carter_payne_explicit,
    carter_payne_jm,
    endo_ring_induction,
    endo_ring_restriction,
    hom_space,
    jm_layers_for_shift,
    proportionality_scalar,
)
from .jantzen import jantzen_filtration, shift_rows, verify_jantzen_containment
from .specht import check_degree, insert_largest, specht_series_restriction, standard_basis
from .verify import SUITES, failures, run_suites

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 2, 3


@dataclass
class Report:
    data: dict
    lines: list[str] = field(default_factory=list)
    failed: bool = False


# --------------------------------------------------------------------------
# text helpers


def tableau_block(t: Tableau, mark: int | None = None) -> list[str]:
    """Aligned rows; the symbol ``mark`` is printed as a bullet."""
    width = max((len(str(x)) for r in t.rows for x in r), default=1)
    return [" ".join(("•" if x == mark else str(x)).rjust(width) for x in r) for r in t.rows]


def expansion_text(coeffs: Sequence[int], tabs: Sequence[Tableau], mark: int | None = None) -> str:
    terms = []
    for c, t in zip(coeffs, tabs):
        c = int(c)
        if not c:
            continue
        name = str(t) if mark is None else str(t).replace(str(mark), "•")
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{abs(c)}"
        terms.append(f"{sign} {mag}e_{{{name}}}")
    if not terms:
        return "0"
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def matrix_lines(M) -> list[str]:
    A = np.asarray(M)
    if A.size == 0:
        return ["[]"]
    width = max(len(str(int(x))) for x in A.flat)
    return ["[" + " ".join(str(int(x)).rjust(width) for x in row) + "]" for row in A]


# --------------------------------------------------------------------------
# argument validation


def parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except (ValueError, TypeError) as e:
        raise SpechtError(f"invalid partition {text!r}: {e}") from None


def check_p(p: int, theorem: bool, allow_p2: bool = False, allow_zero: bool = False) -> None:
    if p == 0 and allow_zero:
        return
    if not is_prime(p):
        raise SpechtError(f"p must be prime, got {p}")
    if p == 2 and theorem:
        raise CharacteristicTwoError("theorem-backed command")
    if p == 2 and not allow_p2:
        raise SpechtError("p=2 is only available for brute-force commands with --allow-p2")


def resolve_shift(args) -> tuple[Partition, int, int, Partition]:
    alpha = parse_partition(args.alpha)
    if args.beta:
        beta = parse_partition(args.beta)
        a, b = shift_rows(alpha, beta)
    elif args.a is not None and args.b is not None:
        a, b = args.a, args.b
        beta = one_box_shift(alpha, a, b)
    else:
        raise SpechtError("give --beta or both -a and -b")
    return alpha, a, b, beta


# --------------------------------------------------------------------------
# commands


def cmd_tableaux(args) -> Report:
    alpha, a, b, beta = resolve_shift(args)
    pairs = enumerate_semistandard_one_box(alpha, a, b)
    formula = semistandard_count_formula(alpha, a, b)
    data = {
        "command": "tableaux",
        "alpha": ser.encode_partition(alpha),
        "beta": ser.encode_partition(beta),
        "a": a,
        "b": b,
        "count": len(pairs),
        "formula": formula,
        "sets": [sorted(S.members) for S, _ in pairs],
        "tableaux": [ser.encode_tableau(T) for _, T in pairs],
    }
    lines = [f"alpha = ({alpha}), beta = ({beta}), a = {a}, b = {b}", f"{len(pairs)} semistandard tableaux (product formula: {formula})", ""]
    for S, T in pairs:
        lines.append(str(S))
        lines.extend("  " + r for r in tableau_block(T))
    return Report(data, lines, failed=len(pairs) != formula)


def cmd_hom(args) -> Report:
    alpha, beta = parse_partition(args.alpha), parse_partition(args.beta)
    check_p(args.p, theorem=False, allow_p2=args.allow_p2, allow_zero=True)
    H = hom_space(alpha, beta, args.p, force=args.force)
    data = {
        "command": "hom",
        "alpha": ser.encode_partition(alpha),
        "beta": ser.encode_partition(beta),
        "p": args.p,
        "dimension": H.dimension,
        "basis": [ser.encode_matrix(X) for X in H.matrices],
    }
    lines = [f"dim Hom = {H.dimension}"]
    for k, X in enumerate(H.matrices, 1):
        lines.append(f"basis matrix {k} (rows: standard basis of S^({alpha}), columns: S^({beta})):")
        lines.extend(matrix_lines(X))
    return Report(data, lines)


def _image_tableau(spec: str, alpha: Partition) -> Tableau:
    if spec == "row-reading":
        return row_reading_tableau(alpha.parts)
    t = Tableau.parse(spec)
    if t.shape != alpha.parts or not t.is_bijective():
        raise SpechtError(f"{spec} is not a bijective tableau of shape ({alpha})")
    return t


def cmd_cp_map(args) -> Report:
    alpha, a, b, beta = resolve_shift(args)
    check_degree(alpha.n, args.force)
    if args.p:
        check_p(args.p, theorem=True)
    cp = carter_payne_explicit(alpha, a, b, args.p)
    data = {
        "command": "cp-map",
        "alpha": ser.encode_partition(alpha),
        "beta": ser.encode_partition(beta),
        "a": a,
        "b": b,
        "p": args.p,
        "hooks": list(cp.hooks),
        "coefficients": [{"set": sorted(S.members), "tableau": ser.encode_tableau(T), "coefficient": cp.coefficients[S]} for S, T in zip(cp.sets, cp.tableaux)],
    }
    lines = [f"alpha = ({alpha}), beta = ({beta}), a = {a}, b = {b}", "hook lengths h_1..h_{b-1}: " + ", ".join(map(str, cp.hooks))]
    for S, T in zip(cp.sets, cp.tableaux):
        lines.append(f"  Lambda_{S} = {cp.coefficients[S]}   ({T})")
    failed = False
    if args.image_of:
        t = _image_tableau(args.image_of, alpha)
        img = cp.image(t)
        data["image_of"] = ser.encode_tableau(t)
        data["image_tabloids"] = ser.encode_vector(img, beta.parts)
        Bb = standard_basis(beta, force=args.force)
        try:
            coeffs = Bb.expand(img, args.p)
            data["image_standard"] = [{"tableau": ser.encode_tableau(s), "coefficient": int(c)} for s, c in zip(Bb.tableaux, coeffs) if c]
            lines.append(f"e_{{{t}}} theta = " + expansion_text(coeffs, Bb.tableaux) + (f"  (mod {args.p})" if args.p else ""))
        except SpechtError:
            if args.p:
                failed = True
            data["image_standard"] = None
            lines.append(f"e_{{{t}}} theta has {len(img)} tabloid terms and lies outside S^({beta}) over Z")
    return Report(data, lines, failed)


def cmd_jm_map(args) -> Report:
    check_p(args.p, theorem=True)
    if args.lam:
        lam = parse_partition(args.lam)
        if args.u is None or args.v is None:
            raise SpechtError("--lambda needs -u and -v (layers counted from the top removable node)")
        u, v = args.u, args.v
    else:
        alpha, a, b, _ = resolve_shift(args)
        lam, u, v = jm_layers_for_shift(alpha, a, b)
    check_degree(lam.n, args.force)
    jm = carter_payne_jm(lam, u, v, args.p, force=args.force)
    a, b = jm.a_b()
    explicit = carter_payne_explicit(jm.alpha, a, b, args.p).hom.coordinates() if u != v else None
    scalar = proportionality_scalar(jm.matrix, explicit, args.p) if explicit is not None else 1
    N = lam.n
    layers = specht_series_restriction(lam, force=args.force)
    data = {
        "command": "jm-map",
        "lambda": ser.encode_partition(lam),
        "u": u,
        "v": v,
        "p": args.p,
        "alpha": ser.encode_partition(jm.alpha),
        "beta": ser.encode_partition(jm.beta),
        "factor_contents": list(jm.contents),
        "layer_contents": [L.content for L in layers],
        "integral_ok": jm.integral_ok,
        "lower_ok": jm.lower_ok,
        "scalar": scalar,
        "matrix": ser.encode_matrix(jm.matrix),
    }
    poly = "".join(f"(L_{N}{'-' if c >= 0 else '+'}{abs(c)})" for c in jm.contents) or "1"
    lines = [
        f"lambda = ({lam}), layers (top removable node first): " + ", ".join(f"{L.index}:({L.quotient}) content {L.content}" for L in layers),
        f"map S^({jm.alpha}) -> S^({jm.beta}) by {poly}, mod {args.p}",
        f"S_{u} maps into S_{v} over Z: {jm.integral_ok}; S_{u - 1} maps into S_{v - 1} mod {args.p}: {jm.lower_ok}",
        f"scalar relative to the explicit map: {scalar}",
    ]
    if args.image_of:
        t = _image_tableau(args.image_of, jm.alpha)
        Bb = standard_basis(jm.beta, force=args.force)
        img = jm.hom.image(t)
        coeffs = Bb.expand(img, args.p)
        lines.append("lifted generator:")
        lines.extend("  " + r for r in tableau_block(insert_largest(t, layers[u - 1].node), mark=N))
        lines.append(f"e_{{{t}}} -> " + expansion_text(coeffs, Bb.tableaux) + f"  (mod {args.p})")
        data["image_standard"] = [{"tableau": ser.encode_tableau(s), "coefficient": int(c)} for s, c in zip(Bb.tableaux, coeffs) if c]
    failed = not (jm.integral_ok and jm.lower_ok) or not scalar
    return Report(data, lines, failed)


def _block_data(R) -> list[dict]:
    return [
        {
            "residue": b.residue,
            "multiplicity": b.multiplicity,
            "nilpotency_index": b.nilpotency_index,
            "block_dimension": b.dimension,
            "end_dimension": b.end_dimension,
        }
        for b in R.blocks
    ]


def cmd_endo(args) -> Report:
    check_p(args.p, theorem=True)
    lam = parse_partition(args.lam)
    check_degree(lam.n + (1 if args.induce else 0), args.force)
    R = endo_ring_induction(lam, args.p, args.force) if args.induce else endo_ring_restriction(lam, args.p, args.force)
    data = {
        "command": "endo",
        "mode": R.mode,
        "lambda": ser.encode_partition(lam),
        "p": args.p,
        "module_dimension": R.module_dimension,
        "end_dimension": R.end_dimension,
        "generated_by_eps": R.generated_by_eps,
        "core_check": R.core_check,
        "blocks": _block_data(R),
    }
    which = "induced" if args.induce else "restricted"
    lines = [f"End of S^({lam}) {which}, p = {args.p}: dimension {R.end_dimension} (module dimension {R.module_dimension})"]
    for b in R.blocks:
        lines.append(f"  res {b.residue}: dim {b.end_dimension}  (nodes {b.multiplicity}, (eps-{b.residue})^{b.nilpotency_index} = 0, block of dimension {b.dimension})")
    lines.append(f"generated by eps and 1: {R.generated_by_eps}")
    return Report(data, lines, failed=not R.consistent)


def cmd_jantzen(args) -> Report:
    check_p(args.p, theorem=bool(args.contain))
    beta = parse_partition(args.beta)
    check_degree(beta.n, args.force)
    J = jantzen_filtration(beta, args.p)
    data = {
        "command": "jantzen",
        "beta": ser.encode_partition(beta),
        "p": args.p,
        "elementary_divisors": list(J.elementary_divisors),
        "dimensions": J.dimensions(),
    }
    lines = [f"S^({beta}), p = {args.p}, dim {J.gram.dim}", "dim J^i: " + ", ".join(f"J^{lv.i}={lv.dimension}" for lv in J.levels)]
    failed = False
    if args.contain:
        alpha = parse_partition(args.contain)
        res = verify_jantzen_containment(alpha, beta, args.p)
        data["containment"] = {
            "alpha": ser.encode_partition(alpha),
            "h_a": res.h_a,
            "vacuous": res.vacuous,
            "i_guaranteed": res.i_guaranteed,
            "i_observed": res.i_observed,
            "adjusted_in_level": res.adjusted_in_level,
        }
        if res.vacuous:
            lines.append(f"Hom(S^({alpha}), S^({beta})) = 0 mod {args.p} (h_a = {res.h_a}); containment is vacuous")
        else:
            lines.append(f"image of S^({alpha}) lies in J^{res.i_observed} (guaranteed J^{res.i_guaranteed}, h_a = {res.h_a})")
        failed = not res.ok
    return Report(data, lines, failed)


def cmd_verify(args) -> Report:
    primes = [int(x) for x in args.primes.split(",")]
    for p in primes:
        check_p(p, theorem=True)
    names = args.suite or list(SUITES)
    for name in names:
        if name not in SUITES:
            raise SpechtError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    checks = run_suites(args.max_n, primes, names)
    bad = failures(checks)
    summary = {}
    for c in checks:
        s = summary.setdefault(c.suite, [0, 0])
        s[0] += 1
        s[1] += 0 if c.ok else 1
    data = {
        "command": "verify",
        "max_n": args.max_n,
        "primes": primes,
        "suites": {k: {"checked": v[0], "failed": v[1]} for k, v in sorted(summary.items())},
        "failures": [{"suite": c.suite, "instance": c.instance, "detail": c.detail} for c in bad],
    }
    lines = [f"{k}: {v[0]} checked, {v[1]} failed" for k, v in sorted(summary.items())]
    lines.extend(f"FAILED {c.suite}: {c.instance} {c.detail}" for c in bad)
    return Report(data, lines, failed=bool(bad))


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spechtkit", description="Carter-Payne homomorphisms and related Specht module computations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--force", action="store_true", help="allow degrees above the guard (SPECHT_MAX_N, default 12)")
    sub = ap.add_subparsers(dest="command", required=True)

    def shift_args(p):
        p.add_argument("--alpha", required=True)
        p.add_argument("--beta")
        p.add_argument("-a", type=int)
        p.add_argument("-b", type=int)

    p = sub.add_parser("tableaux", parents=[common], help="semistandard tableaux of a one-box shift")
    shift_args(p)
    p = sub.add_parser("hom", parents=[common], help="brute-force Hom between Specht modules")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("-p", type=int, required=True, help="prime, or 0 for the rationals")
    p.add_argument("--allow-p2", action="store_true")
    p = sub.add_parser("cp-map", parents=[common], help="the explicit Carter-Payne map")
    shift_args(p)
    p.add_argument("-p", type=int, default=0, help="odd prime dividing h_a, or 0 for the integers")
    p.add_argument("--image-of", help="'row-reading' or a tableau such as 1234/567")
    p = sub.add_parser("jm-map", parents=[common], help="Carter-Payne map from a Jucys-Murphy polynomial")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("-u", type=int)
    p.add_argument("-v", type=int)
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("-a", type=int)
    p.add_argument("-b", type=int)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--image-of")
    p = sub.add_parser("endo", parents=[common], help="endomorphism ring of a restricted or induced Specht module")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("-p", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--restrict", action="store_true", default=True)
    g.add_argument("--induce", action="store_true")
    p = sub.add_parser("jantzen", parents=[common], help="Jantzen filtration of a Specht module")
    p.add_argument("--beta", required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--contain", metavar="ALPHA", help="check the image of the map from S^ALPHA")
    p = sub.add_parser("verify", parents=[common], help="run the verification sweeps")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--primes", default="3,5,7")
    p.add_argument("--suite", action="append", help=f"one of {', '.join(SUITES)} (repeatable)")
    return ap


COMMANDS = {
    "tableaux": cmd_tableaux,
    "hom": cmd_hom,
    "cp-map": cmd_cp_map,
    "jm-map": cmd_jm_map,
    "endo": cmd_endo,
    "jantzen": cmd_jantzen,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    try:
        rep = COMMANDS[args.command](args)
    except TheoremCheckError as e:
        print(f"check failed: {e}", file=err)
        return EXIT_FAILED
    except SpechtError as e:
        print(f"error: {e}", file=err)
        return EXIT_INVALID
    if args.format == "json":
        rep.data["status"] = "failed" if rep.failed else "ok"
        print(ser.dumps(rep.data), file=out)
    else:
        print("\n".join(rep.lines), file=out)
        if rep.failed:
            print("CHECK FAILED", file=out)
    return EXIT_FAILED if rep.failed else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
