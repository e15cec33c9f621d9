"""Componentwise linearity of graph cover ideals via exact Betti numbers."""

from .errors import CapacityError, DimensionError, NotEquigeneratedError
from .monomials import (
    Monomial,
    MonomialIdeal,
    deglex_compare,
    format_ideal,
    format_monomial,
    load_ideal,
    minimalize,
    parse_ideal,
    parse_monomial,
    set_exponent_cap,
    unit_monomial,
    variable,
)
from .graphs import (
    SimpleGraph,
    complete_graph,
    counterexample_graph,
    cover_ideal,
    edge_ideal,
    format_graph,
    knt_closed_form,
    load_graph,
    minimal_t_covers,
    minimal_vertex_covers,
    parse_graph,
    theorem_order,
)
from .resolution import (
    RATIONALS,
    BettiTable,
    CwlReport,
    FieldChoice,
    betti_table,
    find_linear_quotient_order,
    first_syzygy_degrees,
    has_linear_resolution,
    is_componentwise_linear,
    koszul_betti,
    lcm_lattice,
    linear_quotients_check,
    parse_field,
    polymatroidal_check,
    simplicial_homology_ranks,
    taylor_strand_betti,
)
from .search import SweepConfig, SweepRecord, enumerate_graphs, sweep

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DimensionError",
    "NotEquigeneratedError",
    "Monomial",
    "MonomialIdeal",
    "deglex_compare",
    "format_ideal",
    "format_monomial",
    "load_ideal",
    "minimalize",
    "parse_ideal",
    "parse_monomial",
    "set_exponent_cap",
    "unit_monomial",
    "variable",
    "SimpleGraph",
    "complete_graph",
    "counterexample_graph",
    "cover_ideal",
    "edge_ideal",
    "format_graph",
    "knt_closed_form",
    "load_graph",
    "minimal_t_covers",
    "minimal_vertex_covers",
    "parse_graph",
    "theorem_order",
    "RATIONALS",
    "BettiTable",
    "CwlReport",
    "FieldChoice",
    "betti_table",
    "find_linear_quotient_order",
    "first_syzygy_degrees",
    "has_linear_resolution",
    "is_componentwise_linear",
    "koszul_betti",
    "lcm_lattice",
    "linear_quotients_check",
    "parse_field",
    "polymatroidal_check",
    "simplicial_homology_ranks",
    "taylor_strand_betti",
    "SweepConfig",
    "SweepRecord",
    "enumerate_graphs",
    "sweep",
]
