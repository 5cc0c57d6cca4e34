from transversals.core import (
    LatinSquare,
    OrderedTriple,
    SteinerTripleSystem,
    Transversal,
    TransversalFamily,
    validate_latin_square,
    validate_sts,
    is_transversal,
    extract_subsquare,
)
from transversals.constructions import (
    cyclic_square,
    half_sum_square,
    shifted_diagonal_family,
    bose_sts,
    steiner_square,
    lift_transversal,
    prolongation,
    square_with_transversal,
)
from transversals.engine import (
    CountResult,
    count_transversals,
    enumerate_transversals,
    count_avoiding,
    find_disjoint_family,
    brute_force_count,
)
from transversals.bounds import (
    BoundReport,
    s_p,
    p0,
    theorem1_bound,
    verify_prop2,
    steiner_transversal_family,
    greedy_step_counts,
    bound_report,
)

__all__ = [
    'LatinSquare',
    'OrderedTriple',
    'SteinerTripleSystem',
    'Transversal',
    'TransversalFamily',
    'validate_latin_square',
    'validate_sts',
    'is_transversal',
    'extract_subsquare',
    'cyclic_square',
    'half_sum_square',
    'shifted_diagonal_family',
    'bose_sts',
    'steiner_square',
    'lift_transversal',
    'prolongation',
    'square_with_transversal',
    'CountResult',
    'count_transversals',
    'enumerate_transversals',
    'count_avoiding',
    'find_disjoint_family',
    'brute_force_count',
    'BoundReport',
    's_p',
    'p0',
    'theorem1_bound',
    'verify_prop2',
    'steiner_transversal_family',
    'greedy_step_counts',
    'bound_report',
]
