"""Binary codes acting on additive integer triples.

The package walks the tree of states (a, b, c) with c = a + b generated
from (1, 2, 3) by the two steps (a, b, c) -> (a, c, a+c) and
(a, b, c) -> (b, c, b+c), and studies the integer sequence read off the
third entries: reflection invariance, cluster metrics, two-term
Fibonacci expansions, fraction labels on paths, and the three-player
sum-configuration dialogue the same tree solves.
"""

from .engine import (
    ROOT,
    State,
    apply_step,
    as_code,
    as_root,
    as_state,
    decode_state,
    enumerate_codes,
    enumerate_states,
    evaluate,
    reduce_state,
    reflect,
    trace,
    value,
)
from .errors import DivergenceError, DomainError
from .expansion import (
    Expansion,
    ExpansionTree,
    Leaf,
    SumNode,
    decode_expansion,
    encode_expansion,
    expand_recursive,
    fib,
    flatten_products,
    pure_fibonacci,
    tree_to_jsonable,
    tree_value,
)
from .metrics import (
    ClusterProfile,
    cluster_average,
    cluster_profile,
    cluster_variance,
    weight,
)
from .scans import (
    BlockAlternatingVerdict,
    RootScanReport,
    ScanReport,
    ValueClass,
    build_value_tables,
    check_block_alternating,
    iter_conjecture_violations,
    scan_conjecture,
    scan_converse,
    scan_reflection,
    scan_roots,
)
from .sternbrocot import GenerationVerdict, apply_path, check_generation, f_L, f_R, u, v
from .threehat import (
    ChainTreeVerdict,
    CriteriaReport,
    DivergenceReport,
    LemmaReport,
    PuzzleQuery,
    Solution,
    SolveResult,
    Transcript,
    TurnRecord,
    apply_criteria,
    bounds,
    brute_solve,
    chain,
    chain_length,
    chains_equal_tree,
    dialogue_simulate,
    divergence_sweep,
    first_announcement,
    is_base,
    lemma_report,
    normalize,
    reference_announcement,
    sigma_reduce,
    solve_puzzle,
    validate_config,
)

__version__ = "0.1.0"

__all__ = [
    "ROOT",
    "State",
    "DomainError",
    "DivergenceError",
    "apply_step",
    "as_code",
    "as_root",
    "as_state",
    "decode_state",
    "enumerate_codes",
    "enumerate_states",
    "evaluate",
    "reduce_state",
    "reflect",
    "trace",
    "value",
    "ClusterProfile",
    "cluster_average",
    "cluster_profile",
    "cluster_variance",
    "weight",
    "Expansion",
    "ExpansionTree",
    "Leaf",
    "SumNode",
    "decode_expansion",
    "encode_expansion",
    "expand_recursive",
    "fib",
    "flatten_products",
    "pure_fibonacci",
    "tree_to_jsonable",
    "tree_value",
    "BlockAlternatingVerdict",
    "RootScanReport",
    "ScanReport",
    "ValueClass",
    "build_value_tables",
    "check_block_alternating",
    "iter_conjecture_violations",
    "scan_conjecture",
    "scan_converse",
    "scan_reflection",
    "scan_roots",
    "GenerationVerdict",
    "apply_path",
    "check_generation",
    "f_L",
    "f_R",
    "u",
    "v",
    "ChainTreeVerdict",
    "CriteriaReport",
    "DivergenceReport",
    "LemmaReport",
    "PuzzleQuery",
    "Solution",
    "SolveResult",
    "Transcript",
    "TurnRecord",
    "apply_criteria",
    "bounds",
    "brute_solve",
    "chain",
    "chain_length",
    "chains_equal_tree",
    "dialogue_simulate",
    "divergence_sweep",
    "first_announcement",
    "is_base",
    "lemma_report",
    "normalize",
    "reference_announcement",
    "sigma_reduce",
    "solve_puzzle",
    "validate_config",
]
