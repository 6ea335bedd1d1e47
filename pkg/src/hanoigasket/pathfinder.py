"""Explicit shortest paths in the Hanoi graph, and the both-alternatives baseline."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import HanoiError, HanoiWord, Move, MovePath, Verdict, check_lengths
from .gasket import f_alpha
from .machine import decide_hanoi
from .transducer import STEP, corner_symbol


def transfer_moves(k: int, src: int, dst: int, out: list[Move] | None = None) -> list[Move]:
    """The classic ``2**k - 1`` moves taking discs ``k..1`` from ``src`` to ``dst``."""
    if out is None:
        out = []
    if k <= 0:
        return out
    aux = 3 - src - dst
    transfer_moves(k - 1, src, aux, out)
    out.append(Move(k, src, dst))
    transfer_moves(k - 1, aux, dst, out)
    return out


def _p1(x: Sequence[int], start: int, target: int, out: list[Move]) -> list[Move]:
    # bring discs x[start:] (disc numbers len(x)-start .. 1) onto ``target``
    n = len(x)
    i = start
    while i < n and x[i] == target:
        i += 1
    if i == n:
        return out
    disc = n - i
    src = x[i]
    other = 3 - src - target
    _p1(x, i + 1, other, out)
    out.append(Move(disc, src, target))
    transfer_moves(disc - 1, other, target, out)
    return out


def p1_moves(x: Sequence[int], target: int) -> list[Move]:
    return _p1(x, 0, target, [])


def p1_path(x: Sequence[int], target: int) -> MovePath:
    """Shortest path from ``x`` to the perfect state with every disc on ``target``."""
    if target not in (0, 1, 2):
        raise HanoiError(f"target peg must be 0, 1 or 2, got {target}")
    return MovePath(tuple(x), tuple(p1_moves(x, target)))


def _reverse_into(moves: list[Move], out: list[Move]) -> None:
    out.extend(Move(d, t, s) for d, s, t in reversed(moves))


def _largest_differing(x: Sequence[int], y: Sequence[int]) -> int:
    n = check_lengths(x, y)
    i = 0
    while i < n and x[i] == y[i]:
        i += 1
    return i


def p2_moves(x: Sequence[int], y: Sequence[int], verdict: Verdict | None = None) -> list[Move]:
    n = check_lengths(x, y)
    i = _largest_differing(x, y)
    if i == n:
        return []
    if verdict is None:
        verdict = decide_hanoi(x, y).verdict
    m = n - i
    s, t = x[i], y[i]
    o = 3 - s - t
    out: list[Move] = []
    if verdict is Verdict.TWICE:
        _p1(x, i + 1, t, out)
        out.append(Move(m, s, o))
        transfer_moves(m - 1, t, s, out)
        out.append(Move(m, o, t))
        _reverse_into(_p1(y, i + 1, s, []), out)
    else:
        _p1(x, i + 1, o, out)
        out.append(Move(m, s, t))
        _reverse_into(_p1(y, i + 1, o, []), out)
    return out


def p2_path(x: Sequence[int], y: Sequence[int]) -> MovePath:
    """Shortest path between two arbitrary states.

    The largest differing disc moves once for a ``once`` or ``draw`` verdict
    and twice (via the third peg) for ``twice``.
    """
    return MovePath(tuple(x), tuple(p2_moves(x, y)))


def p2_path_variant(x: Sequence[int], y: Sequence[int], verdict: Verdict) -> MovePath:
    """Path assembled for a forced alternative, ignoring the decision."""
    return MovePath(tuple(x), tuple(p2_moves(x, y, verdict)))


@dataclass(frozen=True)
class AlternativeCosts:
    alt1: int
    alt2: int
    symbols_read: int = 0

    @property
    def minimum(self) -> int:
        return min(self.alt1, self.alt2)

    @property
    def verdict(self) -> Verdict:
        if self.alt1 < self.alt2:
            return Verdict.ONCE
        if self.alt2 < self.alt1:
            return Verdict.TWICE
        return Verdict.DRAW


class SymbolCounter:
    """Counts disc symbols read by the baseline."""

    def __init__(self):
        self.count = 0


def _dist_to_perfect(word: Sequence[int], start: int, peg: int, counter: SymbolCounter) -> int:
    # translate discs word[start:] through the transducer and measure to the
    # image of the perfect state, which is the constant word of corner_symbol(peg)
    state = "TLR"
    symbols = []
    for p in word[start:]:
        sym, state = STEP[state][p]
        symbols.append(sym)
    counter.count += len(word) - start
    return f_alpha("".join(symbols), corner_symbol(peg))


def both_alternative_costs(
    x: Sequence[int], y: Sequence[int], counter: SymbolCounter | None = None
) -> AlternativeCosts:
    """Cost of moving the largest differing disc once and twice, computed in full.

    This is the comparison baseline: no early termination, every disc below
    the largest differing one is read once per alternative.
    """
    n = check_lengths(x, y)
    if counter is None:
        counter = SymbolCounter()
    i = 0
    while i < n and x[i] == y[i]:
        i += 1
    counter.count += 2 * min(i + 1, n)
    if i == n:
        raise HanoiError("IdenticalStates: the two states are equal")
    m = n - i
    s, t = x[i], y[i]
    o = 3 - s - t
    alt1 = 1 + _dist_to_perfect(x, i + 1, o, counter) + _dist_to_perfect(y, i + 1, o, counter)
    alt2 = (1 << (m - 1)) + 1 + _dist_to_perfect(x, i + 1, t, counter) + _dist_to_perfect(y, i + 1, s, counter)
    return AlternativeCosts(alt1, alt2, counter.count)


def both_alternative_costs_sg(x: str, y: str, counter: SymbolCounter | None = None) -> AlternativeCosts:
    """:func:`both_alternative_costs` for gasket words."""
    from .transducer import sg_to_hanoi

    return both_alternative_costs(sg_to_hanoi(x), sg_to_hanoi(y), counter)
