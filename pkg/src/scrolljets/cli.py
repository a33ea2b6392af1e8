"""Command-line front end.

Verbs: class, degree, verify-theorem3, classify, scan, wronskian,
cross-validate, ranks.  Output is aligned text by default; --json emits a
single document with a schema marker, the inputs and the result, plus a
certificate where one exists.  Identical inputs and seed give identical
output.  Invalid input exits nonzero with a one-line diagnostic, and so
does a cross-validate MISMATCH, which is a correctness alarm.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .chern import rank_profile, segre_closed_form, segre_term
from .formulas import (
    ScrollParams,
    classify_uninflected,
    inflectional_class,
    inflectional_degree,
)
from .scanner import (
    DEFAULT_SEED,
    MISMATCH,
    cross_validate,
    rank_scan,
    wronskian_weights,
)
from .scrollmodel import DecomposableScroll


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r} ({exc})")


def _scroll(text: str) -> DecomposableScroll:
    try:
        return DecomposableScroll.from_text(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _document(verb: str, inputs: dict, result: dict, certificate: Optional[dict] = None) -> dict:
    doc = {"schema": 1, "verb": verb, "inputs": inputs, "result": result}
    if certificate is not None:
        doc["certificate"] = certificate
    return doc


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _params(args) -> ScrollParams:
    return ScrollParams(n=args.n, ambient=args.ambient, d=args.d, g=args.g)


def _cmd_class(args) -> int:
    params = _params(args)
    cls = inflectional_class(params)
    inputs = {
        "n": args.n,
        "ambient": args.ambient,
        "d": None if args.d is None else str(args.d),
        "g": None if args.g is None else str(args.g),
    }
    result = {
        "class": str(cls),
        "codimension": params.ell,
        "jet_order": params.k,
        "source": "segre-closed-form",
    }
    lines = [
        f"scroll: n={args.n} in P^{args.ambient} (k={params.k}, ell={params.ell})",
        f"inflectional locus class: {cls}",
    ]
    _emit(args, _document("class", inputs, result), lines)
    return 0


def _cmd_degree(args) -> int:
    params = _params(args)
    value = inflectional_degree(params)
    inputs = {
        "n": args.n,
        "ambient": args.ambient,
        "d": None if args.d is None else str(args.d),
        "g": None if args.g is None else str(args.g),
    }
    result = {"degree": str(value), "source": "inflectional-degree-closed-form"}
    lines = [
        f"scroll: n={args.n} in P^{args.ambient} (k={params.k}, ell={params.ell})",
        f"inflectional locus degree: {value}",
    ]
    _emit(args, _document("degree", inputs, result), lines)
    return 0


def _cmd_verify(args) -> int:
    failures = []
    checked = 0
    lines = []
    for n in range(1, args.max_n + 1):
        for k in range(1, args.max_k + 1):
            for j in range(1, n + 1):
                checked += 1
                ok = segre_term(n, k, j) == segre_closed_form(n, k, j)
                lines.append(
                    f"n={n} k={k} j={j}: {'PASS' if ok else 'FAIL'}"
                )
                if not ok:
                    failures.append({"n": n, "k": k, "j": j})
    lines.append(
        f"{checked} identities checked, {len(failures)} failed"
    )
    inputs = {"max_n": args.max_n, "max_k": args.max_k}
    result = {
        "identities": checked,
        "failures": failures,
        "all_pass": not failures,
        "source": "segre-pipeline-vs-closed-form",
    }
    _emit(args, _document("verify-theorem3", inputs, result), lines)
    return 1 if failures else 0


def _cmd_classify(args) -> int:
    descriptor = classify_uninflected(args.n, args.k, args.ell)
    inputs = {"n": args.n, "k": args.k, "ell": args.ell}
    if descriptor is None:
        result = {"verdict": "necessarily inflected", "source": "uninflected-classification"}
        lines = [f"n={args.n} k={args.k} ell={args.ell}: necessarily inflected"]
    else:
        result = {
            "verdict": "balanced",
            "genus": descriptor.genus,
            "degree": descriptor.degree,
            "splitting_degrees": list(descriptor.splitting_degrees),
            "ambient_dim": descriptor.ambient_dim,
            "source": "uninflected-classification",
        }
        lines = [
            f"n={args.n} k={args.k} ell={args.ell}: only the balanced scroll is uninflected",
            f"  genus 0, degree {descriptor.degree}, splitting "
            f"({','.join(str(a) for a in descriptor.splitting_degrees)}), "
            f"in P^{descriptor.ambient_dim}",
        ]
    _emit(args, _document("classify", inputs, result), lines)
    return 0


def _cmd_scan(args) -> int:
    report = rank_scan(args.scroll, k=args.k, samples=args.samples, seed=args.seed)
    inputs = {
        "scroll": list(args.scroll.degrees),
        "k": report.k,
        "samples": args.samples,
        "seed": args.seed,
    }
    payload = report.to_dict()
    certificate = {"inflected": payload.pop("inflected")}
    payload["source"] = "rank-scan"
    lines = [
        f"scan scroll={args.scroll} k={report.k} seed={report.seed}",
        f"  points examined: {report.points_examined}",
        f"  full rank: {report.full_rank}",
        f"  inflected: {len(report.inflected)}  clean: {report.clean_count}",
    ]
    for sample in report.inflected[:20]:
        p = sample.point
        lines.append(
            f"    rank {sample.rank} (corank {sample.corank}) at "
            f"base={p.base_chart} u={p.u} chart={p.fiber_chart} v=({','.join(map(str, p.v))})"
        )
    if len(report.inflected) > 20:
        lines.append(f"    ... {len(report.inflected) - 20} more")
    for note in report.notes:
        lines.append(f"  note: {note}")
    _emit(args, _document("scan", inputs, payload, certificate), lines)
    return 0


def _read_basis(path: str) -> list[list[int]]:
    rows = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rows.append([int(tok) for tok in line.replace(",", " ").split()])
    if not rows:
        raise ValueError(f"basis file {path!r} contains no polynomials")
    return rows


def _cmd_wronskian(args) -> int:
    if (args.degrees is None) == (args.basis is None):
        raise ValueError("provide exactly one of --degrees or --basis")
    if args.degrees is not None:
        curve = args.degrees
        inputs = {"degrees": list(curve.degrees), "k": args.k}
    else:
        curve = _read_basis(args.basis)
        inputs = {"basis": curve, "k": args.k}
    report = wronskian_weights(curve, args.k)
    payload = report.to_dict()
    payload["source"] = "wronskian"
    lines = [
        f"wronskian oracle, k={args.k}, basis degree {report.degree}",
        f"  wronskian: {report.wronskian}",
        f"  at infinity: {report.wronskian_at_infinity}",
    ]
    if report.degenerate:
        lines.append("  degenerate basis (linearly dependent)")
    else:
        for root, mult in report.rational_points:
            lines.append(f"  weight {mult} at u = {root}")
        lines.append(f"  weight {report.infinity_weight} at infinity")
        lines.append(f"  finite total: {report.finite_total}")
        lines.append(f"  total weight: {report.total}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    _emit(args, _document("wronskian", inputs, payload), lines)
    return 0


def _cmd_cross_validate(args) -> int:
    report = cross_validate(
        args.scroll, k=args.k, samples=args.samples, seed=args.seed
    )
    inputs = {
        "scroll": list(args.scroll.degrees),
        "k": report.k,
        "samples": args.samples,
        "seed": args.seed,
    }
    payload = report.to_dict()
    payload["source"] = report.oracle
    lines = [
        f"cross-validate scroll={args.scroll} (n={args.scroll.n}, d={args.scroll.d}, "
        f"N={args.scroll.N}, g=0)",
        f"  jet order k={report.k}, expected codim ell={report.ell}",
        f"  oracle: {report.oracle}",
    ]
    if report.formula_class is not None:
        lines.append(f"  formula class: {report.formula_class}")
    if report.formula_degree is not None:
        lines.append(f"  formula degree: {report.formula_degree}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    lines.append(f"  verdict: {report.verdict}")
    _emit(args, _document("cross-validate", inputs, payload), lines)
    return 1 if report.verdict == MISMATCH else 0


def _cmd_ranks(args) -> int:
    profile = rank_profile(args.n, args.k)
    inputs = {"n": args.n, "k": args.k}
    result = {
        "rank_jet": profile.rank_jet,
        "rank_osculating": profile.rank_osculating,
        "rank_cokernel": profile.rank_cokernel,
        "rank_order_step": profile.rank_order_step,
        "source": "rank-profile",
    }
    lines = [
        f"ranks for n={args.n}, k={args.k}",
        f"  jet bundle:        {profile.rank_jet}",
        f"  osculating bundle: {profile.rank_osculating}",
        f"  cokernel dual:     {profile.rank_cokernel}",
        f"  order step:        {profile.rank_order_step}",
    ]
    _emit(args, _document("ranks", inputs, result), lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scrolljets",
        description="Exact inflectional-locus calculator for scrolls over curves",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("class", parents=[common], help="inflectional locus class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ambient", type=int, required=True)
    p.add_argument("--d", type=_fraction, default=None)
    p.add_argument("--g", type=_fraction, default=None)
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("degree", parents=[common], help="inflectional locus degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ambient", type=int, required=True)
    p.add_argument("--d", type=_fraction, default=None)
    p.add_argument("--g", type=_fraction, default=None)
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser(
        "verify-theorem3",
        parents=[common],
        help="check the closed graded Segre terms against the product pipeline",
    )
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-k", type=int, default=6)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", parents=[common], help="uninflected classification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("scan", parents=[common], help="exact-rank scan of a scroll")
    p.add_argument("--scroll", type=_scroll, required=True, help='degrees, e.g. "1,3"')
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("wronskian", parents=[common], help="curve inflection weights")
    p.add_argument("--degrees", type=_scroll, default=None, help='curve degree, e.g. "4"')
    p.add_argument(
        "--basis",
        default=None,
        help="file with one polynomial per line, integer coefficients, constant first",
    )
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_wronskian)

    p = sub.add_parser(
        "cross-validate", parents=[common], help="oracle vs formula for one scroll"
    )
    p.add_argument("--scroll", type=_scroll, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_cross_validate)

    p = sub.add_parser("ranks", parents=[common], help="rank bookkeeping for (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_ranks)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
