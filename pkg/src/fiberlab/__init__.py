"""fiberlab: exact homological invariants of monomial ideals and fiber products."""

from .config import Caps, DEFAULT_CAPS, DEFAULT_PRIME
from .core import Monomial, Ring, parse_monomial, parse_ring, tensor_ring
from .errors import CapError, DomainError, FiberlabError, GrammarError, RingMismatchError
from .ideals import (
    MonomialIdeal,
    component_ideal,
    maxideal_power,
    minimalize,
    star_derivative,
    tensor_embed,
)
from .hilbert import HilbertSlice, finite_length_reg, hilbert_function, hilbert_slice
from .betti import BettiTable, LcmLattice, betti_table, lcm_lattice, upper_koszul
from .koszul import GradedTor, tor_dimensions, tor_map, tor_vanishing
from .invariants import (
    Invariants,
    RstabReport,
    has_linear_resolution,
    invariants_of,
    is_componentwise_linear,
    reg_bound_linear_forms,
    reg_of,
    rstab_search,
)
from .fiber import (
    FiberSetup,
    Filtration,
    check_componentwise,
    check_depth_formula,
    check_reg_formula,
    check_reg_formula_equigenerated,
    check_reg_increasing,
    fiber_product,
    filtration,
    verify_betti_splitting,
    verify_tor_vanishing_lemma,
)
from .graphs import Graph, detect_bipartite_join, edge_ideal, join_fiber_setup
from .reports import Report

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
