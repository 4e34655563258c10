"""Command-line front end: ``k3calc <command> ...``.

Every command can print a plain-text table, CSV, or a JSON envelope.  Big
integers are always written as decimal strings in JSON.  Exit status is 0 on
success, 1 when a verification or cross-check fails, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field

from . import admissible as adm
from . import chow
from .bounds import appendix_conjectural_bound, severi_lower_bound
from .checks import SUITES, run_suite
from .qseries import eta_product

FORMAT_VERSION = "1"
FORMATS = ("table", "json", "csv")
DEFAULT_ORDER = 256
ENV_FORMAT = "K3CALC_FORMAT"
# enumerating 1-admissible sequences is exponential; keep --list-sequences small
LIST_SEQUENCES_MAX_R = 26

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Section:
    columns: list[str]
    rows: list[list]


@dataclass
class Output:
    result: object
    sections: list[Section]
    exit_code: int = EXIT_OK
    notes: list[str] = field(default_factory=list)


def _series_order(args, needed: int) -> int:
    """Series order for ``needed`` coefficients; explicit --order must cover it."""
    given = getattr(args, "order", None)
    if given is not None:
        if given < needed:
            raise UsageError(f"--order {given} is too small; this request needs at least {needed}")
        return given
    return max(DEFAULT_ORDER, math.ceil(needed * 1.1))


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def cmd_yau_zaslow(args) -> Output:
    order = _series_order(args, args.max_g + 1)
    ns = eta_product(-24, order).coeffs[: args.max_g + 1]
    rows = [[g, n] for g, n in enumerate(ns)]
    result = {"order": order, "rows": [{"g": g, "N_g": str(n)} for g, n in rows]}
    return Output(result, [Section(["g", "N_g"], rows)])


def cmd_partitions(args) -> Output:
    order = _series_order(args, args.max_n + 1)
    ps = eta_product(-1, order).coeffs[: args.max_n + 1]
    rows = [[n, p] for n, p in enumerate(ps)]
    result = {"order": order, "rows": [{"n": n, "p": str(p)} for n, p in rows]}
    return Output(result, [Section(["n", "p"], rows)])


def cmd_bl_count(args) -> Output:
    r = args.r
    order = _series_order(args, r)
    count = eta_product(-48, order)[r - 1]
    result = {"r": r, "order": order, "bl_count": str(count)}
    sections = [Section(["quantity", "value"], [["r", r], ["bl_count", count]])]
    if args.list_sequences:
        if r > LIST_SEQUENCES_MAX_R:
            raise UsageError(f"--list-sequences is limited to r <= {LIST_SEQUENCES_MAX_R}")
        # weight-0 fibers contribute the single empty sequence
        counts = [1] + [len(adm.enumerate_one_admissible(a)) for a in range(1, r)]
        result["one_admissible_counts"] = [{"a": a, "count": str(c)} for a, c in enumerate(counts)]
        sections.append(Section(["a", "one_admissible_count"], [[a, c] for a, c in enumerate(counts)]))
    return Output(result, sections)


def cmd_severi_bound(args) -> Output:
    g = args.g
    order = _series_order(args, max((g - 1) // 2, 1))
    rep = severi_lower_bound(g, order)
    d = rep.to_dict()
    rows = [[k, d[k]] for k in ("g", "r", "bl_count", "omega_genus_lb", "severi_genus_lb")]
    return Output(d, [Section(["quantity", "value"], rows)])


def cmd_appendix_genus(args) -> Output:
    r = args.r
    value = appendix_conjectural_bound(2 * r + 1)
    result = {
        "r": r,
        "g": 2 * r + 1,
        "p_a": str(value),
        "status": "conjectural lower bound",
    }
    rows = [["r", r], ["g", 2 * r + 1], ["p_a", value], ["status", "conjectural lower bound"]]
    code = EXIT_OK
    if args.cross_check:
        other = chow.degeneracy_genus(chow.BundleData(9, 2 * r, 4 * r + 4))
        match = other == value
        result["degeneracy_genus"] = str(other)
        result["cross_check"] = "MATCH" if match else "MISMATCH"
        rows += [["degeneracy_genus", other], ["cross_check", result["cross_check"]]]
        if not match:
            code = EXIT_FAIL
    return Output(result, [Section(["quantity", "value"], rows)], exit_code=code)


def cmd_admissible_list(args) -> Output:
    seqs = adm.enumerate_one_admissible(args.a)
    entries = []
    rows = []
    for s in seqs:
        lam = adm.sequence_to_partition(s)
        entries.append({**s.to_dict(), "partition": list(lam.parts)})
        rows.append([s.left, " ".join(map(str, s.values)), " ".join(map(str, lam.parts))])
    result = {"a": args.a, "count": len(seqs), "sequences": entries}
    return Output(result, [Section(["left", "values", "partition"], rows)])


def cmd_verify(args) -> Output:
    results = run_suite(args.suite, args.max_n)
    ok = all(r.passed for r in results)
    rows = [["PASS" if r.passed else "FAIL", r.suite, r.name, r.detail] for r in results]
    result = {"suite": args.suite, "all_passed": ok, "checks": [r.to_dict() for r in results]}
    out = Output(result, [Section(["status", "suite", "check", "detail"], rows)],
                 exit_code=EXIT_OK if ok else EXIT_FAIL)
    out.notes = [r.line() for r in results]
    out.notes.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return out


def _cell(v) -> str:
    return str(v)


def render_table(out: Output, command: str) -> str:
    if command == "verify":
        return "\n".join(out.notes) + "\n"
    blocks = []
    for sec in out.sections:
        cells = [sec.columns] + [[_cell(v) for v in row] for row in sec.rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(sec.columns))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
        lines.insert(1, "  ".join("-" * w for w in widths))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def render_csv(out: Output) -> str:
    buf = io.StringIO()
    for i, sec in enumerate(out.sections):
        if i:
            buf.write("\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(sec.columns)
        for row in sec.rows:
            w.writerow([_cell(v) for v in row])
    return buf.getvalue()


def render_json(out: Output, command: str, params: dict) -> str:
    env = {
        "command": command,
        "params": params,
        "result": out.result,
        "format_version": FORMAT_VERSION,
    }
    return json.dumps(env, sort_keys=True, indent=2) + "\n"


COMMANDS = {
    "yau-zaslow": cmd_yau_zaslow,
    "bl-count": cmd_bl_count,
    "severi-bound": cmd_severi_bound,
    "appendix-genus": cmd_appendix_genus,
    "partitions": cmd_partitions,
    "admissible-list": cmd_admissible_list,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help=f"output format (default: ${ENV_FORMAT} or table)")
    common.add_argument("--order", type=_positive, default=argparse.SUPPRESS,
                        help=f"q-series truncation order (default: max({DEFAULT_ORDER}, 1.1 x needed))")

    parser = argparse.ArgumentParser(
        prog="k3calc",
        description="Exact curve counts and genus bounds for nodal curves on K3 surfaces.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("yau-zaslow", parents=[common], help="rational curve counts N_0..N_max_g")
    p.add_argument("max_g", type=_non_negative)

    p = sub.add_parser("bl-count", parents=[common], help="fixed-fiber count [prod (1-q^m)^-48]_{q^(r-1)}")
    p.add_argument("r", type=_positive)
    p.add_argument("--list-sequences", action="store_true",
                   help="also count the 1-admissible sequences of each weight a < r")

    p = sub.add_parser("severi-bound", parents=[common], help="genus lower bound for odd g")
    p.add_argument("g", type=int)

    p = sub.add_parser("appendix-genus", parents=[common], help="arithmetic genus of the degeneracy curve, r >= 5")
    p.add_argument("r", type=int)
    p.add_argument("--cross-check", action="store_true",
                   help="recompute through the Chern class calculus and compare")

    p = sub.add_parser("partitions", parents=[common], help="partition numbers p(0)..p(max_n)")
    p.add_argument("max_n", type=_non_negative)

    p = sub.add_parser("admissible-list", parents=[common], help="list 1-admissible sequences of weight a")
    p.add_argument("a", type=_positive)

    p = sub.add_parser("verify", parents=[common], help="run the oracle cross-check suites")
    p.add_argument("suite", nargs="?", default="all", choices=SUITES + ("all",))
    p.add_argument("--max-n", type=_positive, default=None, help="size parameter for the suites")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", None) or os.environ.get(ENV_FORMAT) or "table"
    if fmt not in FORMATS:
        parser.error(f"{ENV_FORMAT}={fmt!r} is not one of {', '.join(FORMATS)}")
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "format")}
    try:
        out = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"k3calc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if fmt == "json":
        text = render_json(out, args.command, params)
    elif fmt == "csv":
        text = render_csv(out)
    else:
        text = render_table(out, args.command)
    sys.stdout.write(text)
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
