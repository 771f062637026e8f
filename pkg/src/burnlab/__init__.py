"""Graph burning: simulation, exact oracle, and approximation drivers.

The burning process spreads fire in rounds: every round, fire first
creeps from burned vertices to their neighbors (out-neighbors on
directed graphs), then one new source ignites.  The burning number of a
graph is the fewest rounds that leave nothing unburned.  Computing it is
NP-hard even on trees, so this package pairs a small exact oracle with
polynomial drivers carrying worst-case factors: 2.75 on cacti, 3 on
polytrees, 2 and 1.905 on arborescences, plus a radius-based 3-factor
baseline for comparison benchmarks.

Hot loops run through a compiled extension when it is importable and a
pure-Python twin otherwise; set BURNLAB_KERNELS=py or =c to force one
(see `burnlab.kernels.backend`).
"""

from .cactus import approx_cactus, articulation_on_path, burn_guess_cactus
from .ditree import (CutTree, SCertificate, approx_arborescence,
                     approx_polytree, b_cutting, burn_guess_arborescence,
                     centers_multirooted, centers_singlerooted, lca_length,
                     merge_and_burn, s_certificate)
from .engine import (BadGuess, BurningSchedule, CenterGroup, CenterSets,
                     RangeBudget, SimulationResult, Verdict, assemble,
                     ceil_range, load_schedule, save_schedule, simulate,
                     validate)
from .errors import (AssemblyError, BurnlabError, GraphClassError,
                     GraphFormatError, OracleBudgetError, ScheduleError)
from .generators import (GenSpec, SplitMix64, generate, random_arborescence,
                         random_cactus, random_polytree)
from .graphs import (DirectedTree, UndirectedGraph, articulation_points,
                     bfs_distances, classify_ditree, is_cactus, is_connected,
                     lca, load_graph, save_graph)
from .kernels import backend
from .oracles import (ExactResult, baseline_3approx, baseline_guess,
                      cycle_formula, exact_burning_number)

__version__ = "0.1.0"

__all__ = [
    "AssemblyError", "BadGuess", "BurnlabError", "BurningSchedule",
    "CenterGroup", "CenterSets", "CutTree", "DirectedTree", "ExactResult",
    "GenSpec", "GraphClassError", "GraphFormatError", "OracleBudgetError",
    "RangeBudget", "SCertificate", "ScheduleError", "SimulationResult",
    "SplitMix64", "UndirectedGraph", "Verdict", "approx_arborescence",
    "approx_cactus", "approx_polytree", "articulation_on_path",
    "articulation_points", "assemble", "b_cutting", "backend",
    "baseline_3approx", "baseline_guess", "bfs_distances",
    "burn_guess_arborescence", "burn_guess_cactus", "ceil_range",
    "centers_multirooted", "centers_singlerooted", "classify_ditree",
    "cycle_formula", "exact_burning_number", "generate", "is_cactus",
    "is_connected", "lca", "lca_length", "load_graph", "load_schedule",
    "merge_and_burn", "random_arborescence", "random_cactus",
    "random_polytree", "s_certificate", "save_graph", "save_schedule",
    "simulate", "validate",
]
