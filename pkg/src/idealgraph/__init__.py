"""Intersection graphs of ideals of finite commutative rings.

Rings are products of local blocks (fields, chain rings, and local rings
with square-zero maximal ideal); the package builds the graph on their
nontrivial ideals, checks classification predicates against brute-force
graph oracles, and constructs Hamiltonian cycles and pancyclic families.
"""

from .caps import CapExceededError
from .classify import (
    ClassificationReport,
    ReportEntry,
    c4_free_criterion,
    check_pendant_implies_star,
    check_regular_implies_complete,
    claw_criterion_reduced,
    classify_report,
    cn_free_criterion_reduced,
    consecutive_pair_structure,
    predict_complete,
    predict_triangle_free_shape,
)
from .graph import (
    CycleWitness,
    IntersectionGraph,
    PropertyRecord,
    build_intersection_graph,
    compute_properties,
    cycle_spectrum_oracle,
    export_dot,
    find_induced_claw,
    find_induced_cycle,
    hamiltonian_oracle,
    validate_cycle,
)
from .hamcycle import (
    ConstructionOutcome,
    GridCycle,
    construct_hamiltonian,
    grid_snake_cycle,
    lift_path_to_cycle,
    pancyclic_family,
    predict_hamiltonian,
    splice_boundary,
)
from .rings import (
    BlockSpec,
    Ideal,
    IndependentFamily,
    RingSpec,
    RingSpecError,
    enumerate_ideals,
    is_independent_family,
    is_reduced,
    join,
    max_independent_family,
    meet,
    parse_ring_spec,
    product_ideal,
)

__version__ = "0.1.0"
