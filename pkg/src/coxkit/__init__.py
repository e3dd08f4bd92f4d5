"""Exact computation in finitely generated Coxeter groups.

The package works over the real cyclotomic field Q(2*cos(pi/N)) chosen
from the edge labels of a Coxeter diagram, represents group elements by
their matrices in the natural reflection representation, and builds the
usual combinatorial machinery on top: lengths and reduced words,
inversion sets, reflection factorizations with the Hurwitz action, the
parabolic conjugacy graph, and bounded certification that the
centralizer of a Coxeter element is the cyclic group it generates.
"""

from __future__ import annotations

from . import corpus, diagram, field, group, parabolic, refl, roots, verify
from .errors import (
    CoxkitError,
    DiagramParseError,
    FieldMismatchError,
    InvariantViolation,
    ResourceLimitError,
)

__all__ = [
    "CoxkitError",
    "DiagramParseError",
    "FieldMismatchError",
    "InvariantViolation",
    "ResourceLimitError",
    "corpus",
    "diagram",
    "field",
    "group",
    "parabolic",
    "refl",
    "roots",
    "verify",
]

__version__ = "0.1.0"
