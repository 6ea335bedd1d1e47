"""Shortest paths in the Tower of Hanoi graph via the Sierpinski gasket automaton."""

from .core import (
    Decision,
    HanoiError,
    IllegalMove,
    InvalidSymbol,
    LengthMismatch,
    Move,
    MovePath,
    TooLarge,
    Verdict,
    parse_gasket_word,
    parse_hanoi_word,
    replay,
)
from .gasket import PqrFunction, f_alpha, pqr_eval, pqr_recurse, sg_distance_reference, sg_neighbors
from .machine import decide, decide_hanoi, distance, distance_hanoi, run_machine
from .pathfinder import both_alternative_costs, p1_path, p2_path
from .transducer import hanoi_to_sg, sg_to_hanoi

__version__ = "0.1.0"
