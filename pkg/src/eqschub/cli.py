"""Command line front end.

    eqschub pieri     --n 4 --k 2 --h 1 --index 1,3 --basis mu
    eqschub multiply  --n 4 --k 2 --index 1,3 --other 1,3
    eqschub matrix    --n 4 --k 2 --index 1,3 --basis mu --format latex
    eqschub relations --n 4 --k 2
    eqschub gkm-check --n 4 --k 2 [--index 1,3 | --fixtures FILE]
    eqschub giambelli --n 4 --k 2 --index 2,3
    eqschub table     --n 4 --k 2 --mode classical

Exit status: 0 on success, 2 on usage errors, 1 when a check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import core, oracle, torus
from .combinatorics import format_index, parse_index, weight
from .core import SchubertOp, WedgeElement, make_context

DEFAULT_MAX_N = 8


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


# -- formatting ----------------------------------------------------------------

def _sym(basis):
    return "e" if basis == "epsilon" else "mu"


def _latex_poly(p) -> str:
    s = str(p)
    out = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch in "yc" and i + 1 < len(s) and s[i + 1].isdigit():
            j = i + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append(f"{ch}_{{{s[i + 1:j]}}}")
            i = j
        elif ch == "^":
            j = i + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append(f"^{{{s[i + 1:j]}}}")
            i = j
        elif ch == "*":
            i += 1
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def _latex_wedge(I, basis) -> str:
    name = r"\epsilon" if basis == "epsilon" else r"\mu"
    return r"\wedge ".join(f"{name}^{{{i}}}" for i in I)


def render_wedge(w: WedgeElement, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(w.to_json())
    items = w.sorted_items()
    if fmt == "latex":
        if not items:
            return "0"
        parts = []
        for I, c in items:
            cs = _latex_poly(c)
            wedge = _latex_wedge(I, w.basis)
            if cs == "1":
                parts.append(wedge)
            else:
                parts.append(f"({cs})\\,{wedge}")
        return " + ".join(parts)
    if not items:
        return "0"
    labels = [f"{_sym(w.basis)}[{format_index(I)}]" for I, _ in items]
    width = max(map(len, labels))
    return "\n".join(f"{lab.ljust(width)}  {c}" for lab, (_, c) in zip(labels, items))


def render_terms(ctx, terms: dict, basis: str, fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        data = dict(extra or {})
        data["basis"] = basis
        data["terms"] = [{"index": list(K), "coeff": str(c)} for K, c in terms.items()]
        return json.dumps(data)
    return render_wedge(WedgeElement(ctx, terms, basis), fmt)


def render_matrix(op: SchubertOp, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(op.to_json())
    if fmt == "latex":
        rows = [" & ".join(_latex_poly(a) for a in row) + r" \\" for row in op.matrix]
        head = "% rows/columns: " + ", ".join(format_index(I) for I in op.index)
        return "\n".join([head, r"\begin{pmatrix}"] + rows + [r"\end{pmatrix}"])
    cells = [[str(a) for a in row] for row in op.matrix]
    labels = [format_index(I) for I in op.index]
    widths = [max(len(labels[c]), *(len(r[c]) for r in cells)) for c in range(len(labels))]
    lw = max(map(len, labels))
    lines = [" " * lw + "  " + "  ".join(lab.rjust(w) for lab, w in zip(labels, widths))]
    for lab, row in zip(labels, cells):
        lines.append(lab.rjust(lw) + "  " + "  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines)


# -- argument handling -----------------------------------------------------------

def _index_arg(text: str):
    try:
        return parse_index(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid index sequence {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="rank of M(p)")
    common.add_argument("--k", type=int, required=True, help="exterior power")
    common.add_argument("--mode", choices=core.MODES, default="torus")
    common.add_argument("--basis", choices=("eps", "mu"), default=None,
                        help="wedge basis (default: mu in torus mode, eps otherwise)")
    common.add_argument("--format", choices=("json", "text", "latex"), default="text")
    common.add_argument("--verify", action="store_true",
                        help="recompute through an independent path and compare")

    parser = argparse.ArgumentParser(prog="eqschub", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pieri", parents=[common], help="D_h applied to a wedge basis element")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--index", type=_index_arg, required=True)

    p = sub.add_parser("multiply", parents=[common], help="structure constants C^K_IJ")
    p.add_argument("--index", type=_index_arg, required=True)
    p.add_argument("--other", type=_index_arg, required=True)

    p = sub.add_parser("matrix", parents=[common], help="operator matrix of a Schubert class")
    p.add_argument("--index", type=_index_arg, required=True)

    sub.add_parser("relations", parents=[common], help="check the presentation relations vanish")

    p = sub.add_parser("gkm-check", parents=[common], help="GKM divisibility of operator diagonals")
    p.add_argument("--index", type=_index_arg)
    p.add_argument("--fixtures", help="JSON fixture file with mu-basis operator matrices")

    p = sub.add_parser("giambelli", parents=[common], help="evaluate a Schur operator at e^1..e^k")
    p.add_argument("--index", type=_index_arg, required=True)

    p = sub.add_parser("table", parents=[common], help="all structure constants as JSON lines")
    p.add_argument("--force", action="store_true", help="ignore the size limit")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _resolve(args):
    if args.n < 1:
        raise UsageError(f"--n {args.n}: n must be at least 1")
    if not 1 <= args.k <= args.n:
        raise UsageError(f"--k {args.k}: need 1 <= k <= n={args.n}")
    basis = args.basis or ("mu" if args.mode == "torus" else "eps")
    if basis == "mu" and args.mode != "torus":
        raise UsageError("--basis mu requires --mode torus")
    args.basis = "mu" if basis == "mu" else "epsilon"
    ctx = make_context(args.n, args.k, args.mode)
    for name in ("index", "other"):
        I = getattr(args, name, None)
        if I is None:
            continue
        if len(I) != args.k:
            raise UsageError(f"--{name} {format_index(I)}: expected {args.k} entries")
        if I[-1] > args.n:
            raise UsageError(f"--{name} {format_index(I)}: entry {I[-1]} outside 1..{args.n}")
    return ctx


# -- commands ----------------------------------------------------------------------

def cmd_pieri(args, ctx, out):
    if args.h < 0:
        raise UsageError(f"--h {args.h}: must be nonnegative")
    if args.basis == "mu":
        res = torus.equivariant_pieri(args.h, args.index, ctx)
        check = (lambda: torus.equivariant_pieri(args.h, args.index, ctx, method="epsilon"))
    else:
        w = WedgeElement.basis_element(ctx, args.index)
        res = core.d_pieri(args.h, w)
        check = (lambda: oracle.leibniz_oracle(args.h, w))
    out(render_wedge(res, args.format))
    if args.verify and check() != res:
        raise CheckFailed("pieri: independent recomputation disagrees")


def _products(ctx, basis, I, J):
    if basis == "mu":
        return torus.multiply_mu(I, J, ctx)
    return core.multiply(I, J, ctx)


def _verify_product(ctx, basis, I, J, res):
    if basis == "mu":
        return torus.multiply_mu(J, I, ctx) == res
    if core.multiply(I, J, ctx, derivation=oracle.leibniz_oracle) != res:
        return False
    if ctx.mode == "classical" and weight(I) + weight(J) <= ctx.k * (ctx.n - ctx.k):
        lr = oracle.lr_constants(I, J, ctx.k, ctx.n)
        return {K: c.constant_value() for K, c in res.items()} == lr
    return True


def cmd_multiply(args, ctx, out):
    res = _products(ctx, args.basis, args.index, args.other)
    out(render_terms(ctx, res, args.basis, args.format,
                     {"I": list(args.index), "J": list(args.other)}))
    if args.verify and not _verify_product(ctx, args.basis, args.index, args.other, res):
        raise CheckFailed("multiply: independent recomputation disagrees")


def cmd_matrix(args, ctx, out):
    if args.basis == "mu":
        op = torus.operator_matrix_mu(args.index, ctx)
    else:
        op = core.schur_op(args.index, ctx)
    out(render_matrix(op, args.format))
    if args.verify:
        if args.basis == "mu":
            ok = (core.poincare(op) == torus.mu_wedge(ctx, args.index)
                  and torus.gkm_check_diagonal(op).passed)
        else:
            ok = core.schur_op(args.index, ctx, derivation=oracle.leibniz_oracle) == op
        if not ok:
            raise CheckFailed("matrix: verification failed")


def cmd_relations(args, ctx, out):
    rels = core.presentation_relations(ctx)
    nonzero = [j for j, r in enumerate(rels, start=1) if not r.is_zero()]
    if args.verify:
        series = core.relation_series(ctx)
        if any(series[i] != core.d_matrix(i, ctx) for i in range(len(series))):
            nonzero = nonzero or [0]
    if args.format == "json":
        out(json.dumps({"relations": len(rels), "all_zero": not nonzero, "nonzero": nonzero}))
    elif nonzero:
        out(f"{len(rels)} relations, nonzero: {', '.join(map(str, nonzero))}")
    else:
        out(f"{len(rels)} relations, all zero")
    if nonzero:
        raise CheckFailed("relations: a relation does not vanish")


def _load_fixture_ops(path, ctx):
    with open(path) as fh:
        data = json.load(fh)
    if data.get("n") != ctx.n or data.get("k") != ctx.k:
        raise UsageError(f"--fixtures {path}: fixture is for n={data.get('n')}, k={data.get('k')}")
    ops = {}
    for key, m in data["operators"].items():
        ops[parse_index(key)] = core.op_from_json(
            {"basis": data.get("basis", "mu"), "index": data["index"], "matrix": m}, ctx)
    return ops


def cmd_gkm(args, ctx, out):
    if ctx.mode != "torus":
        raise UsageError("gkm-check requires --mode torus")
    if args.fixtures:
        ops = _load_fixture_ops(args.fixtures, ctx)
    elif args.index:
        ops = {args.index: torus.operator_matrix_mu(args.index, ctx)}
    else:
        ops = {I: torus.operator_matrix_mu(I, ctx) for I in ctx.basis}
    failed = False
    records = []
    for I, op in ops.items():
        rep = torus.gkm_check_diagonal(op, ctx)
        failed |= not rep.passed
        for e in rep.edges:
            records.append({"operator": list(I), "edge": [list(e.source), list(e.target)],
                            "weight": f"y{e.a} - y{e.b}", "passed": e.passed})
    if args.format == "json":
        out(json.dumps({"passed": not failed, "edges": records}))
    else:
        for r in records:
            status = "pass" if r["passed"] else "FAIL"
            src, dst = (format_index(x) for x in r["edge"])
            out(f"G[{format_index(r['operator'])}]  {src} -- {dst}  ({r['weight']})  {status}")
        out(f"{len(records)} edges, {'all pass' if not failed else 'failures present'}")
    if failed:
        raise CheckFailed("gkm-check: divisibility fails on some edge")


def cmd_giambelli(args, ctx, out):
    if args.basis == "mu":
        op = torus.operator_matrix_mu(args.index, ctx)
    else:
        op = core.schur_op(args.index, ctx)
    res = core.poincare(op)
    out(render_wedge(res, args.format))
    expected = WedgeElement.basis_element(ctx, args.index, args.basis)
    if res != expected:
        raise CheckFailed("giambelli: operator does not map the base wedge to the class")
    if args.verify and args.basis == "epsilon":
        alt = core.apply_schur(args.index, core.base_wedge(ctx), oracle.leibniz_oracle)
        if alt != expected:
            raise CheckFailed("giambelli: oracle recomputation disagrees")


def _table_row(payload):
    n, k, mode, basis, I, J, verify = payload
    ctx = make_context(n, k, mode)
    res = _products(ctx, basis, I, J)
    ok = _verify_product(ctx, basis, I, J, res) if verify else True
    return _row_lines(ctx, I, J, res), ok


def _row_lines(ctx, I, J, res):
    """One JSON line per K in basis order, zero coefficients included."""
    zero = ctx.zero()
    return [json.dumps({"I": list(I), "J": list(J), "K": list(K),
                        "coeff": str(res.get(K, zero))}) for K in ctx.basis]


def cmd_table(args, ctx, out):
    limit = int(os.environ.get("SCHUBERT_MAX_N", DEFAULT_MAX_N))
    if args.n > limit and not args.force:
        raise UsageError(f"--n {args.n}: exceeds the size limit {limit} (use --force)")
    basis = ctx.basis
    pairs = [(I, J) for r, I in enumerate(basis) for J in basis[r:]]
    payloads = [(args.n, args.k, args.mode, args.basis, I, J, args.verify) for I, J in pairs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_table_row, payloads, chunksize=4))
    else:
        # share one context so the operator caches are reused
        results = []
        for I, J in pairs:
            res = _products(ctx, args.basis, I, J)
            ok = _verify_product(ctx, args.basis, I, J, res) if args.verify else True
            results.append((_row_lines(ctx, I, J, res), ok))
    bad = False
    for lines, ok in results:
        for line in lines:
            out(line)
        bad |= not ok
    if bad:
        raise CheckFailed("table: verification failed")


COMMANDS = {
    "pieri": cmd_pieri,
    "multiply": cmd_multiply,
    "matrix": cmd_matrix,
    "relations": cmd_relations,
    "gkm-check": cmd_gkm,
    "giambelli": cmd_giambelli,
    "table": cmd_table,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def out(line):
        print(line, file=stdout)

    try:
        ctx = _resolve(args)
        COMMANDS[args.command](args, ctx, out)
    except UsageError as exc:
        print(f"eqschub: error: {exc}", file=stderr)
        return 2
    except CheckFailed as exc:
        print(f"eqschub: check failed: {exc}", file=stderr)
        return 1
    return 0


def main():
    sys.exit(run())
