"""Command-line surface: eval, weights, quasipoly, verify.

All numeric output is exact; rationals are printed as canonical
"num/den" strings with the denominator omitted when it equals 1.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from .bernoulli import GeneratorSet
from .partition import quasipolynomial, wave_decomposition
from .verify import run_all
from .waves import split_generators, weights_bruteforce, weights_recursive

__all__ = ["main", "format_rational"]


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _parse_parts(parser: argparse.ArgumentParser, text: str) -> GeneratorSet:
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip() != ""]
        if not parts or any(p < 1 for p in parts):
            raise ValueError
    except ValueError:
        parser.error(f"--parts must be a comma-separated list of positive integers, got {text!r}")
    return GeneratorSet(parts)


def _parse_s_range(parser: argparse.ArgumentParser, text: str) -> Tuple[int, int, bool]:
    """Returns (lo, hi, is_range); `a..b` is inclusive on both ends."""
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if lo < 0 or hi < lo:
                raise ValueError
            return lo, hi, True
        s = int(text)
        if s < 0:
            raise ValueError
        return s, s, False
    except ValueError:
        parser.error(f"--s must be a nonnegative integer or inclusive range a..b, got {text!r}")


def _cmd_eval(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    d = _parse_parts(parser, args.parts)
    lo, hi, is_range = _parse_s_range(parser, args.s)
    records = []
    for s in range(lo, hi + 1):
        dec = wave_decomposition(d, s)
        rec = {"parts": list(d.d), "s": s, "total": str(dec.total)}
        if args.waves:
            rec["waves"] = [
                {"j": j, "value": format_rational(v)} for j, v in dec.terms
            ]
        records.append(rec)
    if args.json:
        print(json.dumps(records if is_range else records[0], indent=None))
        return 0
    for rec in records:
        cols = []
        if is_range:
            cols.append(f"s={rec['s']}")
        cols.append(rec["total"])
        if args.waves:
            cols.extend(f"j={w['j']}:{w['value']}" for w in rec["waves"])
        print(" ".join(cols))
    return 0


def _cmd_weights(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    d = _parse_parts(parser, args.parts)
    if args.j < 2:
        parser.error(f"--j must be >= 2, got {args.j}")
    ms = split_generators(args.j, d)
    if not ms.divisible and not args.allow_trivial:
        parser.error(
            f"--j {args.j} divides no part of {list(d.d)}; pass --allow-trivial to proceed"
        )
    vectors = {}
    if args.method in ("bruteforce", "both"):
        vectors["bruteforce"] = weights_bruteforce(args.j, d)
    if args.method in ("recursive", "both"):
        vectors["recursive"] = weights_recursive(args.j, d)
    shown = vectors.get("recursive") or vectors["bruteforce"]
    agree = None
    if args.method == "both":
        agree = vectors["bruteforce"].weights == vectors["recursive"].weights
    if args.json:
        rec = {
            "parts": list(d.d),
            "j": args.j,
            "l_max": shown.l_max,
            "weights": list(shown.weights),
            "method": args.method,
        }
        if agree is not None:
            rec["agree"] = agree
        print(json.dumps(rec))
        return 0 if agree in (None, True) else 1
    body = "[" + ",".join(str(a) for a in shown.weights) + "]"
    if agree is not None:
        body += " AGREE" if agree else " DISAGREE"
    print(f"l_max={shown.l_max}")
    print(body)
    return 0 if agree in (None, True) else 1


def _cmd_quasipoly(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    d = _parse_parts(parser, args.parts)
    q = quasipolynomial(d)
    coeff_lists = [
        [format_rational(c) for c in (p.coeffs or (Fraction(0),))]
        for p in q.residue_polys
    ]
    if args.format == "json":
        print(json.dumps({
            "parts": list(d.d),
            "period": q.period,
            "residue_polys": coeff_lists,
        }))
        return 0
    chunks = [f"L={q.period}"]
    for c, coeffs in enumerate(coeff_lists):
        chunks.append(f"c={c}: [" + ", ".join(coeffs) + "]")
    print("; ".join(chunks))
    return 0


def _cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    results = run_all(
        max_m=args.max_m,
        max_d=args.max_d,
        s_max=args.max_s,
        seed=args.seed,
        random_sets=args.random_sets,
    )
    ok = True
    for res in results:
        print(res.summary())
        if not res.passed:
            ok = False
            for line in res.failures[:5]:
                print(f"  counterexample: {line}")
    total = sum(r.checks for r in results)
    print(("PASS" if ok else "FAIL") + f" ({total} checks)")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylwaves",
        description="Exact Sylvester-wave engine for restricted partition counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate W(s, parts), optionally per wave")
    p_eval.add_argument("--parts", required=True, help="comma-separated positive integers")
    p_eval.add_argument("--s", required=True, help="nonnegative integer or inclusive range a..b")
    p_eval.add_argument("--waves", action="store_true", help="include per-wave breakdown")
    p_eval.add_argument("--json", action="store_true", help="machine-readable output")
    p_eval.set_defaults(func=_cmd_eval)

    p_w = sub.add_parser("weights", help="integer wave weights A_l for a given j")
    p_w.add_argument("--parts", required=True)
    p_w.add_argument("--j", type=int, required=True, help="wave period, >= 2")
    p_w.add_argument("--method", choices=("recursive", "bruteforce", "both"),
                     default="recursive")
    p_w.add_argument("--allow-trivial", action="store_true",
                     help="permit j that divides no part")
    p_w.add_argument("--json", action="store_true")
    p_w.set_defaults(func=_cmd_weights)

    p_q = sub.add_parser("quasipoly", help="closed-form quasipolynomial of W")
    p_q.add_argument("--parts", required=True)
    p_q.add_argument("--format", choices=("text", "json"), default="text")
    p_q.set_defaults(func=_cmd_quasipoly)

    p_v = sub.add_parser("verify", help="run the self-verification sweeps")
    p_v.add_argument("--max-m", type=int, default=3)
    p_v.add_argument("--max-d", type=int, default=6)
    p_v.add_argument("--max-s", type=int, default=100)
    p_v.add_argument("--seed", type=int, default=0)
    p_v.add_argument("--random-sets", type=int, default=0)
    p_v.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
