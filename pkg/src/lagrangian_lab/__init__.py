"""Graph-Lagrangians and weighted polynomial programs of non-uniform
hypergraphs over the standard simplex, with numerical verification of the
associated clique-driven closed forms."""

__version__ = "0.1.0"

from .cliques import CliqueResult, contains_complete, max_complete_subgraph
from .compression import (
    compress_edge,
    compress_hypergraph,
    compression_potential,
    is_left_compressed,
    left_compress_fixpoint,
)
from .generators import FAMILIES, GenerationError, gen_planted, gen_random, with_singletons
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    complete,
    dump,
    from_json,
    from_text,
    is_complete_on,
    level,
    load,
    loads,
    relabel,
    to_json,
    to_text,
    validate,
    vertex_support,
)
from .objective import (
    Coefficients,
    MissingCoefficientError,
    PairQuantities,
    check_feasible,
    check_rational_feasible,
    eval_exact,
    eval_L,
    eval_lambda_prime,
    gradient,
    lambda_prime_exact,
    pair_quantities,
    rational_uniform,
    uniform_weights,
)
from .optimizer import (
    GridTooLargeError,
    OptimizationResult,
    SolverConfig,
    grid_oracle,
    kkt_residual,
    maximize,
    polish,
    project_to_simplex,
    support_pair_cover,
)
from .theorems import (
    ConditionCheck,
    HypothesisReport,
    TheoremId,
    TheoremVerdict,
    check_hypotheses,
    closed_form,
    closed_form_exact,
    complete_value_exact,
    lambda_prime_closed,
    lambda_prime_complete,
    theorem_ids,
    verify,
)
