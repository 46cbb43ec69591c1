"""zwalk: Z-normal forms of walk label sequences, in linear time, online.

Given the edge labels seen along an end-to-end walk of a path graph, the
unique irreducible string under the rewrite  x y y_reversed y z -> x y z
(the Z-normal form) is exactly the label sequence of the smallest path graph
realizing that walk.  This package computes it with an online Manacher-style
reducer whose work is linear in the input, plus the slow definitional
oracles used to cross-check it, graph construction/serialization, corpus
generators, and a benchmark harness.
"""

from ._backend import active_backend, set_backend
from .core import (
    Alphabet,
    LabeledString,
    Symbol,
    ZOccurrence,
    contract,
    find_z_shapes,
    from_text,
    naive_radii,
    naive_radius,
)
from .detector import DetectOutcome, detect_first_z, is_irreducible
from .gen import SplitMix64, adversarial, random_string
from .graph import PathGraph, build_path_graph, to_dot, to_json
from .oracle import (
    Strategy,
    check_confluence,
    frontier_naive,
    is_stable_naive,
    normal_form_naive,
    originator_naive,
)
from .reducer import (
    ContractionEvent,
    Counters,
    DebugValidationError,
    Reducer,
    reduce,
    reduce_with_stats,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "LabeledString",
    "Symbol",
    "ZOccurrence",
    "contract",
    "find_z_shapes",
    "from_text",
    "naive_radii",
    "naive_radius",
    "DetectOutcome",
    "detect_first_z",
    "is_irreducible",
    "Strategy",
    "check_confluence",
    "normal_form_naive",
    "frontier_naive",
    "originator_naive",
    "is_stable_naive",
    "Counters",
    "ContractionEvent",
    "Reducer",
    "DebugValidationError",
    "reduce",
    "reduce_with_stats",
    "PathGraph",
    "build_path_graph",
    "to_dot",
    "to_json",
    "SplitMix64",
    "adversarial",
    "random_string",
    "active_backend",
    "set_backend",
    "__version__",
]
