"""Binary tri-Hermitian forms over a cubic algebra: exact arithmetic, orbits, invariants and zeta constants."""

from .cubealg import AlgebraElement, CubicAlgebra, make_algebra
from .errors import TriHermError
from .invariant import discriminant, pair, quad_form
from .scalars import GF, QQ
from .space import GroupElement, Point, act
from .strata import Label, classify

__all__ = [
    "AlgebraElement",
    "CubicAlgebra",
    "GF",
    "GroupElement",
    "Label",
    "Point",
    "QQ",
    "TriHermError",
    "act",
    "classify",
    "discriminant",
    "make_algebra",
    "pair",
    "quad_form",
]

__version__ = "0.1.0"
