"""Sternfeld arrays, basic decompositions and the norm blow-up experiment."""

from basiclab._core import (  # noqa: F401
    BudgetExceeded,
    DegenerateInput,
    InvalidInput,
    PreconditionFailed,
    ScheduleInvariantViolated,
    SolverError,
    SternfeldArray,
    abc_sizes,
    blowup_experiment,
    bump_values,
    check_conditions,
    choose_next_m,
    detect_grid_array,
    detect_plane_bolt,
    e_iterate,
    e_step,
    extend,
    gen_hypercube,
    gen_plane_zigzag,
    gen_product,
    is_forest,
    lemma_witness,
    lex_rank,
    lex_unrank,
    min_pairwise_distance,
    min_supnorm,
    parity_sign,
    project,
    render_plane_figure_svg,
    solve_exact,
    tail_audit,
    validate_array,
    voxel_adjacency,
    xi,
)

__version__ = "0.1.0"
