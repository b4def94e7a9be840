"""Brush cleaning on graphs: parallel and sequential runs, continual cleaning,
and recursive 1-clique configurations for complete graphs."""

from .bounds import (
    BoundsRow,
    brush_number_clique,
    envelope,
    envelope_coefficient,
    prior_bounds_clique,
    ratio_table,
    summarize,
)
from .constructions import (
    CliqueChain,
    ConstructionError,
    base_config,
    build_chain,
    construct,
    decompose,
    lemma_lift,
    lift_cost,
    phase_profile,
    theorem_config,
    theorem_final_config,
)
from .engine import (
    BrushConfig,
    CleaningTrace,
    Step,
    clean,
    clique_parallel_clean,
    dirty_degree,
    parallel_clean,
    parallel_step,
    sequential_clean,
)
from .graph import Graph, GraphError, GraphParseError, make_clique, make_cycle, parse_graph
from .orbit import OneCliqueReport, OrbitReport, Verdict, clique_orbit, is_one_clique_config, orbit_analyze
from .search import (
    SearchBudgetExhausted,
    SearchResult,
    enumerate_canonical,
    exact_brush_number,
    exact_cpb_clique,
    min_one_clique,
)

__version__ = "0.1.0"
