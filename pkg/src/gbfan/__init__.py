"""Exact Gröbner bases, Gröbner fans, and ideals of points over QQ and GF(p)."""

from .errors import GbfanError, ParseError, DomainError, InvariantViolation
from .field import GF, QQ, GFElement, arith, nat_embed, parse_field
from .orderings import (
    TermOrder,
    deglex,
    degrevlex,
    elimination_order,
    lex,
    matrix_order,
    parse_order,
    weight_order,
)
from .ring import LinearShift, Polynomial, PolyRing
from .monomials import MonomialIdeal
from .groebner import Ideal, ReducedGB, divide_exact, normal_form
from .cones import Cone
from .fan import (
    GroebnerFan,
    MarkedBasis,
    cone_of,
    cone_of_marked,
    enumerate_basic_sets,
    enumerate_fan,
    fan_equal,
    fan_oracle_zerodim,
    gbasic_sets,
    gfan_number,
    minimal_models,
    unique_gb_fast_check,
)
from .points import (
    ComplementCertificate,
    GridSpec,
    PointSet,
    complementary_pair,
    distraction_ideal,
    distraction_term,
    field_equation_grid,
    grid_primary_components,
    ideal_of_points,
    maximal_grid,
    natural_distraction,
    shift_ideal,
    staircase,
    subset_complement_ideals,
    vanishing_ideal,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "GFElement",
    "arith",
    "nat_embed",
    "parse_field",
    "TermOrder",
    "lex",
    "deglex",
    "degrevlex",
    "weight_order",
    "matrix_order",
    "elimination_order",
    "parse_order",
    "PolyRing",
    "Polynomial",
    "LinearShift",
    "MonomialIdeal",
    "Ideal",
    "ReducedGB",
    "normal_form",
    "divide_exact",
    "Cone",
    "GroebnerFan",
    "MarkedBasis",
    "cone_of",
    "cone_of_marked",
    "enumerate_fan",
    "enumerate_basic_sets",
    "fan_equal",
    "fan_oracle_zerodim",
    "gbasic_sets",
    "gfan_number",
    "minimal_models",
    "unique_gb_fast_check",
    "PointSet",
    "GridSpec",
    "ComplementCertificate",
    "ideal_of_points",
    "vanishing_ideal",
    "maximal_grid",
    "field_equation_grid",
    "grid_primary_components",
    "distraction_term",
    "distraction_ideal",
    "natural_distraction",
    "staircase",
    "shift_ideal",
    "complementary_pair",
    "subset_complement_ideals",
    "GbfanError",
    "ParseError",
    "DomainError",
    "InvariantViolation",
    "__version__",
]
