"""Spanning rooted forests, the matrix F = (I + L)^-1 and its Fibonacci closed forms."""

from .closed_forms import (
    classify_vertices,
    cycle_counts,
    cycle_counts_lucas,
    cycle_row_numerators,
    golden_ratio_gap,
    path_counts,
    tcaterpillar_counts,
)
from .dissemination import estimate_source_probabilities, sample_rooted_forest
from .exact import (
    ForestConstraint,
    ForestCountMatrix,
    ProximityMatrix,
    RootedForest,
    count_forests_constrained,
    count_spanning_trees,
    enumerate_rooted_forests,
    forest_matrix_exact,
    proximity_matrix,
)
from .fibonacci import fib, fib_even, fib_odd, golden_ratio, lucas
from .graph import (
    Graph,
    augment_with_hub,
    laplacian,
    make_complete,
    make_cycle,
    make_path,
    make_tcaterpillar,
)
from .random_walk import (
    WalkConfig,
    exact_q_matrix,
    expected_steps,
    simulate_walks,
    transition_matrix,
)

__version__ = "0.1.0"
