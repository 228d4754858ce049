"""Equivariant Schubert calculus on Grassmannians through derivations on exterior powers."""

from .core import (
    Context,
    SchubertOp,
    WedgeElement,
    d_matrix,
    d_pieri,
    make_context,
    multiply,
    poincare,
    poincare_inv,
    presentation_relations,
    reduce_epsilon,
    schur_op,
)
from .polyring import Poly, generic_vars, parse_poly, torus_vars

__version__ = "0.1.0"

__all__ = [
    "Context",
    "Poly",
    "SchubertOp",
    "WedgeElement",
    "d_matrix",
    "d_pieri",
    "generic_vars",
    "make_context",
    "multiply",
    "parse_poly",
    "poincare",
    "poincare_inv",
    "presentation_relations",
    "reduce_epsilon",
    "schur_op",
    "torus_vars",
]
