"""Command line front end.

    siladic verify TARGET   run identity or theorem checks; exit 0/1/2
    siladic counts TARGET   dump a count table
    siladic series TARGET   dump a truncated series

Exit codes: 0 all checks pass, 1 some check fails, 2 inconclusive or over
the memory budget, 64 usage error, 74 output error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import dilation, replay
from .colored import Color, ColoredInt
from .enumerator import (
    enumerate_D,
    enumerate_distinct_odd,
    enumerate_dk,
    enumerate_ek,
    enumerate_residue_rule,
    enumerate_two_residue_distinct,
)
from .qseries import CountTable, DilationSpec, TriSeries, schur_product, two_color_product
from .recurrences import build_ladder
from .rules import load_rules, siladic_rules

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 64, 74

BUDGET_ENV = "SILADIC_BUDGET_MB"
DEFAULT_BUDGET_MB = 1024
BYTES_PER_TERM = 200  # dict entry plus tuple key, rough

VERIFY_TARGETS = (
    "initials", "ladder", "qdiff", "keyprop", "proof-steps", "product-limit",
    "refdilat", "comp", "newschur", "refinement", "rr", "schur", "schur-product", "siladic",
)
COUNT_TARGETS = ("D", "d", "e", "distinct-odd", "refdilat", "comp", "newschur", "siladic",
                 "C-refdilat", "C-comp", "C-newschur")
SERIES_TARGETS = ("G", "D", "product", "schur-product", "dilated-D")

DEFAULT_N = {
    "initials": 12, "ladder": 30, "qdiff": 30, "keyprop": 30, "proof-steps": 30, "product-limit": 25,
    "refdilat": 60, "comp": 60, "newschur": 40, "refinement": 60,
    "rr": 40, "schur": 40, "schur-product": 40, "siladic": 40,
}


class UsageError(Exception):
    pass


class BudgetExceeded(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_k(text: str | None, default=(1, 4)):
    """'2_b' -> ColoredInt; '1..4' -> range; '3' -> range(3, 4)."""
    if text is None:
        return range(default[0], default[1] + 1)
    text = text.strip()
    if "_" in text:
        try:
            return ColoredInt.parse(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"--k must be an integer, a range like 1..4, or a colored integer like 2_b; got {text!r}") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"empty or negative k range {text!r}")
    return range(lo, hi + 1)


def _int_k(args, default=(1, 4)) -> range:
    k = parse_k(args.k, default)
    if isinstance(k, ColoredInt):
        raise UsageError(f"target {args.target!r} takes an integer k or range, not {k}")
    return k


def _colored_k(args) -> ColoredInt:
    if args.k is None:
        raise UsageError(f"target {args.target!r} needs --k with a colored integer such as 2_b")
    k = parse_k(args.k)
    if isinstance(k, ColoredInt):
        return k
    if len(k) == 1 and k[0] >= 1:
        # plain integer n: n_b is the last colored integer of value n
        return ColoredInt(k[0], Color.b)
    raise UsageError(f"target {args.target!r} needs a single colored integer for --k")


def _caps(args, default_N: int) -> tuple[int, int, int]:
    N = default_N if args.N is None else args.N
    U = N if args.U is None else args.U
    V = N if args.V is None else args.V
    if min(U, V, N) < 0:
        raise UsageError("caps must be non-negative")
    return U, V, N


def check_budget(caps, budget_mb: float):
    U, V, N = caps
    terms = (U + 1) * (V + 1) * (N + 1)
    need_mb = terms * BYTES_PER_TERM / 2**20
    if need_mb > budget_mb:
        # largest square caps that fit
        fit = int((budget_mb * 2**20 / BYTES_PER_TERM) ** (1 / 3)) - 1
        raise BudgetExceeded(
            f"caps ({U}, {V}, {N}) need about {need_mb:.0f} MB, over the {budget_mb:g} MB budget; "
            f"use caps of at most ({fit}, {fit}, {fit}) or raise --budget-mb"
        )


def _budget(args) -> float:
    if args.budget_mb is not None:
        return args.budget_mb
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return float(env)
        except ValueError:
            raise UsageError(f"{BUDGET_ENV}={env!r} is not a number") from None
    return DEFAULT_BUDGET_MB


# -- verify ---------------------------------------------------------------


def run_verify(args) -> list[replay.ReplayReport]:
    t = args.target
    caps = _caps(args, DEFAULT_N[t])
    check_budget(caps, _budget(args))
    N = caps[2]
    if t == "initials":
        return replay.verify_initials(caps)
    if t == "ladder":
        return replay.verify_ladder(_colored_k(args) if args.k else ColoredInt(12, Color.b), caps)
    if t in ("qdiff", "keyprop", "proof-steps"):
        out = []
        for k in _int_k(args, (1, 4) if t != "proof-steps" else (1, 8)):
            if k < 1:
                raise UsageError("k starts at 1")
            if t == "qdiff":
                out += replay.verify_qdiff(k, caps)
            elif t == "keyprop":
                out += replay.verify_keyprop(k, caps, source=args.source)
            else:
                out += replay.verify_eqd(k, caps) + replay.verify_proof_steps(k, caps)
        return out
    if t == "product-limit":
        return [replay.verify_product_limit(caps)]
    if t in ("refdilat", "comp", "newschur"):
        return [dilation.verify_dilated_theorem(t, N), dilation.verify_partition_map(t, N)]
    if t == "refinement":
        return [dilation.verify_dilated_theorem(t, N)]
    if t == "rr":
        return [dilation.verify_classical("rr0", N), dilation.verify_classical("rr1", N)]
    return [dilation.verify_classical(t, N)]


def _emit_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return "".join(r.to_json() + "\n" for r in reports)
    if fmt == "text":
        return replay.summarize(reports) + "\n"
    raise UsageError(f"verify supports --format text or json, not {fmt}")


# -- counts / series ------------------------------------------------------


def run_counts(args) -> CountTable:
    t = args.target
    caps = _caps(args, 20)
    check_budget(caps, _budget(args))
    if t == "D":
        return enumerate_D(caps)
    if t in ("d", "e"):
        k = _colored_k(args)
        return enumerate_dk(k, caps) if t == "d" else enumerate_ek(k, caps)
    if t == "distinct-odd":
        return enumerate_distinct_odd(caps)
    if t == "siladic":
        return enumerate_residue_rule(siladic_rules(), caps)
    if t.startswith("C-"):
        m, ra, rb = dilation.THEOREMS[t[2:]].residues
        return enumerate_two_residue_distinct(m, ra, rb, caps)
    return enumerate_residue_rule(load_rules(t), caps)


def run_series(args) -> TriSeries:
    t = args.target
    caps = _caps(args, 20)
    check_budget(caps, _budget(args))
    if t == "G":
        k = _colored_k(args)
        return build_ladder(k, caps)[k]
    if t == "D":
        return enumerate_D(caps).to_series()
    if t == "product":
        return two_color_product(caps)
    if t == "schur-product":
        return schur_product(caps)
    if args.dilation is None:
        raise UsageError("dilated-D needs --dilation M,m_a,m_b")
    try:
        spec = DilationSpec.parse(args.dilation)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    bad = dilation.horizon_soundness(spec, caps[2])
    horizon = caps[2] if not bad else None
    return enumerate_D(caps).to_series().dilate(spec, horizon=horizon)


def _emit_table(table: CountTable, fmt: str) -> str:
    if fmt == "csv":
        return table.to_csv()
    if fmt == "json":
        return table.to_json() + "\n"
    if fmt == "text":
        return table.to_lines()
    raise UsageError(f"counts supports --format text, json or csv, not {fmt}")


def _emit_series(s: TriSeries, fmt: str) -> str:
    if fmt in ("text", "poly"):
        return s.to_poly() + "\n"
    if fmt == "json":
        return s.to_json() + "\n"
    if fmt == "lines":
        return s.to_lines()
    if fmt == "csv":
        return CountTable(s.caps, s.terms).to_csv() if all(c >= 0 for c in s.terms.values()) else _signed_csv(s)
    raise UsageError(f"series supports --format text, poly, json, lines or csv, not {fmt}")


def _signed_csv(s: TriSeries) -> str:
    return "u,v,n,coeff\n" + "".join(f"{u},{v},{n},{c}\n" for (u, v, n), c in s.items())


# -- driver ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="siladic", description="Colored partitions, their generating functions and dilations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--N", type=int, help="cap on the q-exponent (size n)")
        sp.add_argument("--U", type=int, help="cap on the a-exponent (defaults to N)")
        sp.add_argument("--V", type=int, help="cap on the b-exponent (defaults to N)")
        sp.add_argument("--k", help="colored integer (2_b), integer, or range (1..4)")
        sp.add_argument("--format", default="text")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--budget-mb", type=float, help=f"memory budget (default ${BUDGET_ENV} or {DEFAULT_BUDGET_MB})")

    v = sub.add_parser("verify", help="run checks")
    v.add_argument("target", choices=VERIFY_TARGETS)
    v.add_argument("--source", choices=("ladder", "enum"), default="ladder", help="where keyprop takes its G's from")
    common(v)
    c = sub.add_parser("counts", help="dump a count table")
    c.add_argument("target", choices=COUNT_TARGETS)
    common(c)
    s = sub.add_parser("series", help="dump a truncated series")
    s.add_argument("target", choices=SERIES_TARGETS)
    s.add_argument("--dilation", help="M,m_a,m_b for dilated-D")
    common(s)
    return p


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            reports = run_verify(args)
            text = _emit_reports(reports, args.format)
            status = replay.exit_status(reports)
        elif args.command == "counts":
            text = _emit_table(run_counts(args), args.format)
            status = EXIT_OK
        else:
            text = _emit_series(run_series(args), args.format)
            status = EXIT_OK
    except UsageError as exc:
        print(f"siladic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"siladic: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (ValueError, KeyError) as exc:
        print(f"siladic: error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _write(text, args.out)
    except OSError as exc:
        print(f"siladic: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return status


if __name__ == "__main__":
    sys.exit(main())
