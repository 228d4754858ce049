"""Loaders for the bundled G(2,4) data files."""

from __future__ import annotations

import json
from importlib import resources

from .combinatorics import parse_index
from .core import Context, SchubertOp, make_context, op_from_json
from .polyring import parse_poly

FILES = {
    "printed": "g24_printed.json",
    "corrected": "g24_corrected.json",
    "divisorial": "g24_divisorial.json",
}


def path(name: str):
    return resources.files("eqschub") / "data" / FILES[name]


def load_raw(name: str) -> dict:
    return json.loads(path(name).read_text())


def load_operators(name: str, ctx: Context | None = None) -> dict[tuple, SchubertOp]:
    """Operator matrices of a fixture file, keyed by index sequence."""
    data = load_raw(name)
    ctx = ctx or make_context(data["n"], data["k"], data["mode"])
    return {parse_index(key): op_from_json({"basis": data["basis"], "index": data["index"],
                                            "matrix": m}, ctx)
            for key, m in data["operators"].items()}


def discrepancies() -> list[dict]:
    return load_raw("corrected")["discrepancies"]


def divisorial_rules(ctx: Context | None = None) -> dict[str, dict]:
    """Bitstring -> {bitstring: coefficient} for every class of G(2,4)."""
    data = load_raw("divisorial")
    ctx = ctx or make_context(data["n"], data["k"], "torus")
    return {lam: {s: parse_poly(c, ctx.spec) for s, c in rule.items()}
            for lam, rule in data["rules"].items()}
