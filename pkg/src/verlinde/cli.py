"""Command-line front end: ``verlinde image``, ``verlinde subalgebras`` and ``verlinde verify``."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from verlinde.liealg import LieAlgError
from verlinde.principal import ImageError
from verlinde.rootsys import (
    RootSystemError,
    build_root_datum,
    fundamental_weight,
    in_alcove,
    paper_to_bourbaki,
)
from verlinde.verp import VerpError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


_TERM = re.compile(r"^(\d*)\s*\*?\s*w(\d+)$")


def parse_weight(datum, text: str, labels: str = "bourbaki") -> tuple[int, ...]:
    """Weight from 'adjoint', 'w1', '3w1+w2', '1,0,2' or any of these prefixed by 'paper:'."""
    text = text.strip()
    if text.startswith("paper:"):
        labels, text = "paper", text[len("paper:") :]
    elif text.startswith("bourbaki:"):
        labels, text = "bourbaki", text[len("bourbaki:") :]
    r = datum.rank

    def node(i: int) -> int:
        if not 1 <= i <= r:
            raise UsageError(f"node {i} is not in 1..{r} for {datum.name}")
        return paper_to_bourbaki(datum, i) if labels == "paper" else i

    if text == "adjoint":
        return datum.highest_long_root
    if re.fullmatch(r"-?\d+(\s*,\s*-?\d+)*", text):
        coords = [int(x) for x in text.split(",")]
        if len(coords) != r:
            raise UsageError(f"{datum.name} needs {r} coordinates, got {len(coords)}")
        out = [0] * r
        for i, c in enumerate(coords, start=1):
            out[node(i) - 1] = c
        return tuple(out)
    out = [0] * r
    for term in text.replace(" ", "").split("+"):
        m = _TERM.match(term)
        if not m:
            raise UsageError(f"cannot parse weight term {term!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        w = fundamental_weight(datum, node(int(m.group(2))))
        out = [a + coeff * b for a, b in zip(out, w)]
    return tuple(out)


def _datum(args):
    try:
        return build_root_datum(args.type.upper(), args.rank)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc


def _display_weight(datum, weight, labels):
    if labels != "paper":
        return list(weight)
    return [weight[paper_to_bourbaki(datum, i) - 1] for i in range(1, datum.rank + 1)]


def _emit_json(path: str, payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------


def cmd_image(args) -> int:
    from verlinde.suites import image_both

    datum = _datum(args)
    weight = parse_weight(datum, args.weight, args.labels)
    if not in_alcove(datum, weight, args.p):
        raise UsageError(f"weight {list(weight)} is not in the fundamental alcove of Ver_{args.p}({datum.name})")
    strings, image, agree = image_both(datum, weight, args.p)
    if not agree:
        print("error: the two image computations disagree", file=sys.stderr)
        return EXIT_FAIL
    shown = _display_weight(datum, weight, args.labels)
    print(f"group:  {datum.name}")
    print(f"weight: {shown} ({args.labels} labels)")
    print(f"weyl:   {strings}")
    print(f"image:  {image}")
    if args.json:
        _emit_json(
            args.json,
            {
                "group": datum.name,
                "p": args.p,
                "weight": shown,
                "labels": args.labels,
                "weyl": strings,
                "image": {str(c): m for c, m in image.as_dict().items()},
            },
        )
    return EXIT_OK


def cmd_subalgebras(args) -> int:
    from verlinde.liealg import classify_mask, enumerate_subalgebras, normalise_n
    from verlinde.suites import sweep

    if args.sweep:
        if args.p_max < 5:
            raise UsageError("--p-max must be at least 5")
        cells = sweep(args.p_max, args.threads or os.cpu_count() or 1)
        bad = 0
        for cell in cells:
            marks = " ".join(f"{m}:{','.join(lab) or '?'}" for m, lab in cell["masks"])
            verdict = "ok" if cell["conforms"] else "DEVIATES"
            bad += not cell["conforms"]
            print(f"p={cell['p']:<4d} n={cell['n']:<3d} {verdict:8s} {marks}")
        print("all cells conform" if not bad else f"{bad} cell(s) deviate")
        if args.json:
            _emit_json(args.json, {"cells": cells, "deviations": bad})
        return EXIT_FAIL if bad else EXIT_OK
    if args.n is None or args.p is None:
        raise UsageError("give --n and --p, or --sweep")
    try:
        n = normalise_n(args.n, args.p)
    except LieAlgError as exc:
        raise UsageError(str(exc)) from exc
    if n != args.n:
        print(f"n={args.n} replaced by its level-rank dual n={n}")
    rows = []
    status = EXIT_OK
    for mask in enumerate_subalgebras(n, args.p):
        try:
            labels = classify_mask(mask)
        except AssertionError:
            labels, status = ["?"], EXIT_FAIL
        rows.append([str(mask), labels])
        print(f"{mask}:{','.join(labels)}")
    if args.json:
        _emit_json(args.json, {"n": n, "p": args.p, "masks": rows})
    return status


def _print_report(report: dict) -> None:
    for c in report["checks"]:
        w = c["witness"]
        extra = ""
        for key in ("image", "factors", "found", "common", "profile"):
            if key in w:
                extra = f"  {key}={w[key]}"
                break
        print(f"{c['status'].upper():4s} {c['id']}{extra}")
    s = report["summary"]
    line = f"{report['suite']}: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped"
    if report["elapsed_ms"] is not None:
        line += f" in {report['elapsed_ms']} ms"
    print(line)


def _print_markdown_tables(report: dict) -> None:
    print("| group | representation | Weyl factors |")
    print("|---|---|---|")
    for c in report["checks"]:
        if c["id"].startswith("tables/"):
            _, group, role = c["id"].split("/")
            print(f"| {group} | {role} | {', '.join(map(str, c['witness']['factors']))} |")


def cmd_verify(args) -> int:
    from verlinde.suites import SUITES, run_suite

    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    params = {"p_max": args.p_max, "threads": args.threads, "max_rank": args.max_rank}
    report = run_suite(args.suite, params, timing=not args.no_timing)
    if args.markdown and args.suite == "tables":
        _print_markdown_tables(report)
    else:
        _print_report(report)
    if args.json:
        _emit_json(args.json, report)
    return EXIT_FAIL if report["summary"]["fail"] else EXIT_OK


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="verlinde", description="Exact computations in Verlinde categories Ver_p(G).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    img = sub.add_parser("image", help="Weyl factors and Ver_p image of a simple module")
    img.add_argument("--type", required=True, help="A, B, C, D, E6, E7, E8, F4 or G2")
    img.add_argument("--rank", type=int, default=None)
    img.add_argument("--weight", required=True, help="adjoint, w1, 3w1+w2, paper:w1 or 1,0,0")
    img.add_argument("--p", type=int, required=True)
    img.add_argument("--labels", choices=("paper", "bourbaki"), default="bourbaki")
    img.add_argument("--json", metavar="PATH")
    img.set_defaults(func=cmd_image)

    sa = sub.add_parser("subalgebras", help="Lie subalgebras of sl(L_{n-1}) containing L_2")
    sa.add_argument("--n", type=int)
    sa.add_argument("--p", type=int)
    sa.add_argument("--sweep", action="store_true")
    sa.add_argument("--p-max", type=int, default=101)
    sa.add_argument("--threads", type=int, default=None)
    sa.add_argument("--json", metavar="PATH")
    sa.set_defaults(func=cmd_subalgebras)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", help="all, tables, examples, typeD, invertibles, minuscule, thm-main, "
                                   "equivalences, dims, subalgebras, identities, oracles")
    ver.add_argument("--p-max", type=int, default=None)
    ver.add_argument("--max-rank", type=int, default=None)
    ver.add_argument("--threads", type=int, default=None)
    ver.add_argument("--json", metavar="PATH")
    ver.add_argument("--markdown", action="store_true", help="print the tables suite as a Markdown table")
    ver.add_argument("--no-timing", action="store_true", help="omit elapsed time so reports are byte-identical")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RootSystemError, LieAlgError, VerpError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ImageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
