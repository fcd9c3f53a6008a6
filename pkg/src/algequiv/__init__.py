"""Randomized algebraic constraint, inclusion and equivalence tests for linear SEMs on mixed graphs."""

from .constraints import (
    Constraint,
    PatternMatrixConstraint,
    PolynomialConstraint,
    build_correlation,
    build_minor,
    build_partial_correlation,
    degree as constraint_degree,
    evaluate,
    expand_pattern,
)
from .criteria import PairClassification, Status, classify_pair, dag_markov_equivalent, first_inequivalent_subset
from .decision import (
    AVector,
    Decision,
    Diagnostics,
    a_values,
    decide_constraint,
    decide_equivalence,
    decide_inclusion,
    decide_with_repeats,
    error_bound_constraint,
    error_bound_generic,
    error_bound_inclusion,
    render_decimal,
    repeats_for_confidence,
)
from .errors import *  # noqa: F401,F403
from .field import M31, M127, P63, PRESETS, FieldElement, PrimeModulus, derive_seed, make_stream
from .fileformats import format_constraint, format_graph, parse_constraint, parse_graph
from .graph import (
    GraphClassReport,
    MixedGraph,
    classify,
    collider_triples,
    half_trek_reachable,
    longest_directed_path,
    skeleton,
    topological_order,
    v_structures,
)
from .harness import (
    EquivalenceClassReport,
    Family,
    GraphFamilySpec,
    build_extremal_pair,
    enumerate_graphs,
    extremal_family,
    partition_classes,
    extremal_timing_experiment,
)
from .linalg import FieldMatrix, all_column_deleted_minors, determinant, mat_inverse
from .lsem import ParamAssignment, phi, sample_params, sigma_via_trek_rule

__version__ = "0.1.0"
