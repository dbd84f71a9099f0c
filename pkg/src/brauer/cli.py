"""Command-line front end.

Exit status is 0 on success, 1 when ``verify`` finds a failing check and 2 for
usage errors and violated preconditions. Errors are reported on stderr as a
single JSON object. Pass negative parameters as ``--delta=-3`` or ``-d -3``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import checks
from .caps import cap_diagram, decomposition_matrix
from .geometry import count_walks, degree, embed, in_A_delta, is_delta_regular
from .leduc_ram import RadicandError, evaluate_at, generic_matrices, simple_matrices
from .oracle import gram_rank
from .partitions import Partition, labels
from .polynomials import PoleError
from .render import ascii_cap, ascii_weight, svg_cap, svg_figure, svg_weight
from .restriction import restrict_simple
from .weights import same_block, weight_diagram


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _key(p: Partition):
    return (p.size, tuple(p))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _table(header, rows, fmt) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    cells = [[str(c) for c in header]] + [[("" if c is None else str(c)) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


# subcommands ------------------------------------------------------------------

def cmd_embed(args):
    lam, delta = args.partition, args.delta
    e = embed(lam, delta)
    length = args.length or len(e.doubled) + 3
    prefix = e.prefix(length)
    if args.format == "json":
        return _dump({"partition": str(lam), "delta": delta, "prefix": [str(v) for v in prefix],
                      "degree": degree(lam, delta), "regular": is_delta_regular(lam, delta),
                      "restricted": in_A_delta(lam, delta)})
    return "(" + ", ".join(str(v) for v in prefix) + ", …)"


def cmd_weight(args):
    x = weight_diagram(args.partition, args.delta)
    if args.format == "json":
        return _dump({"partition": str(args.partition), "delta": args.delta, "labels": list(x.labels),
                      "zero_flag": x.zero_flag, "vertices": [str(x.vertex(k)) for k in range(len(x))]})
    if args.format == "svg":
        return svg_weight(x, args.width).rstrip("\n")
    if args.ascii:
        return ascii_weight(x, args.width)
    return x.text(args.width)


def cmd_cap(args):
    c = cap_diagram(args.partition, args.delta)
    if args.format == "json":
        return _dump({"partition": str(args.partition), "delta": args.delta, "labels": list(c.base.labels),
                      **c.arcs()})
    if args.format == "svg":
        return svg_cap(c, args.width).rstrip("\n")
    return ascii_cap(c, args.width)


def _blocks(n, delta):
    out = []
    for lam in sorted(labels(n), key=_key):
        for block in out:
            if same_block(block[0], lam, delta):
                block.append(lam)
                break
        else:
            out.append([lam])
    return out


def cmd_blocks(args):
    blocks = _blocks(args.n, args.delta)
    if args.format == "json":
        return _dump([[str(p) for p in b] for b in blocks])
    rows = [(k, str(p)) for k, b in enumerate(blocks) for p in b]
    if args.format == "csv":
        return _table(["block", "partition"], rows, "csv")
    return "\n".join(f"{k}: " + "  ".join(str(p) for p in b) for k, b in enumerate(blocks))


def cmd_decomp(args):
    blocks = _blocks(args.n, args.delta)
    if args.partition is not None:
        if args.partition not in labels(args.n):
            raise ValueError(f"{args.partition} is not a label for n={args.n}")
        blocks = [b for b in blocks if args.partition in b]
    out = []
    for b in blocks:
        out.append({"block": [str(p) for p in b], "matrix": decomposition_matrix(b, args.delta)})
    if args.format == "json":
        return _dump(out)
    parts = []
    for item in out:
        header = ["L \\ Delta"] + item["block"]
        rows = [[lam] + row for lam, row in zip(item["block"], item["matrix"])]
        parts.append(_table(header, rows, args.format))
    return "\n\n".join(parts)


def cmd_restrict(args):
    comps = restrict_simple(args.partition, args.n, args.delta)
    items = [comps[k] for k in sorted(comps, key=_key)]
    if args.format == "json":
        return _dump([dict(c.to_dict(), case=c.case) for c in items])
    lines = []
    for c in items:
        lines.append(f"block of {c.block} (case {c.case}):" + (" zero" if c.is_zero else ""))
        for k, layer in enumerate(c.layers):
            lines.append(f"  layer {k}: " + " + ".join(str(m) for m in layer))
    return "\n".join(lines)


def cmd_dims(args):
    rows = []
    for lam in sorted(labels(args.n), key=_key):
        simple = gram_rank(lam, args.n, args.delta) if args.delta != 0 else None
        restricted = in_A_delta(lam, args.delta)
        walks = count_walks(lam, args.n, args.delta, restricted=True) if restricted else None
        rows.append((str(lam), count_walks(lam, args.n), simple, restricted, walks))
    header = ["partition", "dim_standard", "dim_simple", "restricted", "restricted_walks"]
    if args.format == "json":
        return _dump([dict(zip(header, r)) for r in rows])
    return _table(header, rows, args.format)


def cmd_matrices(args):
    lam, n = args.partition, args.n
    if args.simple:
        if args.delta is None:
            raise UsageError("--simple needs --delta")
        return simple_matrices(lam, n, args.delta).to_json()
    mats = generic_matrices(lam, n)
    point = args.at if args.at is not None else (Fraction(args.delta) if args.delta is not None else None)
    if point is not None:
        mats = evaluate_at(mats, point)
    return mats.to_json()


def cmd_verify(args):
    results = checks.verify_suite(args.n, args.delta, args.tol, args.seed)
    ok = all(r.passed for r in results)
    if args.format == "json":
        text = _dump({"n": args.n, "delta": args.delta, "passed": ok, "checks": [r.to_dict() for r in results]})
    else:
        passed = sum(r.passed for r in results)
        text = "\n".join(r.line() for r in results) + f"\n{passed}/{len(results)} checks passed"
    return text, (0 if ok else 1)


def cmd_render(args):
    lam = args.partition
    svg = svg_figure(lam, cap_diagram(lam, args.delta), args.width)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
        return _dump({"written": args.output})
    return svg.rstrip("\n")


# parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="brauer", description="Brauer algebra combinatorics over the complex numbers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help, partition=False, n=False, delta=True, formats=("text", "json"), default=None):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        if partition:
            sp.add_argument("-p", "--partition", type=_partition, required=partition == "required",
                            help='parts separated by commas, "-" for the empty partition')
        if n:
            sp.add_argument("-n", type=int, required=True, help="rank of the algebra")
        if delta:
            sp.add_argument("-d", "--delta", type=int, required=delta == "required", help="the parameter delta")
        sp.add_argument("--format", choices=formats, default=default or formats[0])
        return sp

    sp = add("embed", cmd_embed, "coordinates of e_delta(lam)", partition="required", delta="required")
    sp.add_argument("--length", type=int, help="number of coordinates to print")
    sp = add("weight", cmd_weight, "weight diagram", partition="required", delta="required",
             formats=("text", "json", "svg"))
    sp.add_argument("--width", type=int)
    sp.add_argument("--ascii", action="store_true", help="draw with the wall instead of a plain label list")
    sp = add("cap", cmd_cap, "cap diagram", partition="required", delta="required", formats=("text", "json", "svg"))
    sp.add_argument("--width", type=int)
    add("blocks", cmd_blocks, "blocks of the labels of B_n", n=True, delta="required", formats=("text", "json", "csv"))
    add("decomp", cmd_decomp, "decomposition matrices", partition="optional", n=True, delta="required",
        formats=("text", "json", "csv"))
    add("restrict", cmd_restrict, "restriction of a simple module", partition="required", n=True,
        delta="required", formats=("json", "text"))
    add("dims", cmd_dims, "dimensions of standard and simple modules", n=True, delta="required",
        formats=("text", "json", "csv"))
    sp = add("matrices", cmd_matrices, "representing matrices on walks", partition="required", n=True,
             delta="optional", formats=("json",))
    sp.add_argument("--simple", action="store_true", help="simple module on delta-restricted walks")
    sp.add_argument("--at", type=_fraction, help="evaluate generic matrices at this rational u")
    sp = add("verify", cmd_verify, "run every check at (n, delta)", n=True, delta="required")
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--seed", type=int, default=0)
    sp = add("render", cmd_render, "figure: Young diagram and cap diagram as SVG", partition="required",
             delta="required", formats=("svg",))
    sp.add_argument("--width", type=int)
    sp.add_argument("-o", "--output", help="write the SVG here")
    return p


def _error(kind, message, code):
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "tol", 1) <= 0:
            raise UsageError("--tol must be positive")
        if getattr(args, "n", 1) < 0:
            raise UsageError("-n must be non-negative")
        out = args.func(args)
    except UsageError as exc:
        return _error("usage", str(exc), 2)
    except (PoleError, RadicandError) as exc:
        return _error("evaluation", str(exc), 2)
    except ValueError as exc:
        return _error("precondition", str(exc), 2)
    code = 0
    if isinstance(out, tuple):
        out, code = out
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
