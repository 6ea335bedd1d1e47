"""The decision / distance automaton for shortest paths in SG_n and H_n.

The core automaton works in a canonical alphabet where the first differing
pair of symbols is ``(T, R)``.  A general pair of words is handled by first
discarding equal leading pairs and then renaming symbols so that the first
differing pair becomes ``(T, R)``.  Hanoi words are fed through the peg
transducer one disc at a time, so the automaton never reads further than it
needs to.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .core import (
    Decision,
    GasketWord,
    HanoiError,
    SYMBOLS,
    Verdict,
    check_lengths,
)
from .gasket import f_alpha
from .transducer import STEP


class CoreState(enum.Enum):
    START_P = "StartP"
    MIDDLE_R = "MiddleR"
    RIGHT_Q = "RightQ"
    STOP_ALT1 = "StopAlt1"
    STOP_ALT2 = "StopAlt2"

    @property
    def terminal(self) -> bool:
        return self in (CoreState.STOP_ALT1, CoreState.STOP_ALT2)


class TerminalSum(enum.Enum):
    """Marker returned by :func:`core_step` instead of a weight on termination."""

    ALT1 = "f_R(x)+f_T(y)"
    ALT2 = "f_L(x)+f_L(y)"


P, R, Q = CoreState.START_P, CoreState.MIDDLE_R, CoreState.RIGHT_Q
STOP1, STOP2 = CoreState.STOP_ALT1, CoreState.STOP_ALT2

# Verdict when the input runs out in a transient state.
EXHAUSTED = {P: Verdict.ONCE, R: Verdict.DRAW, Q: Verdict.TWICE}

CoreTable = dict[CoreState, dict[str, tuple[CoreState, int]]]


def _table(spec: dict[CoreState, list[tuple[str, CoreState, int]]]) -> CoreTable:
    table: CoreTable = {}
    for state, rows in spec.items():
        entries = {}
        for pairs, nxt, shift in rows:
            for pair in pairs.split():
                entries[pair] = (nxt, shift)
        assert sorted(entries) == sorted(a + b for a in SYMBOLS for b in SYMBOLS), state
        table[state] = entries
    return table


# state -> canonical pair "xy" -> (next state, shift); a transient transition
# adds 2**(m + shift) where m counts the remaining pairs including this one.
CORE_TABLE: CoreTable = _table(
    {
        P: [
            ("RT RL RR LT TT TR", STOP1, 0),
            ("TL LR", P, 0),
            ("LL", R, 0),
        ],
        R: [
            ("RT", STOP1, 0),
            ("LL", STOP2, 0),
            ("LT RL", R, -1),
            ("TR", R, 0),
            ("RR TT", P, -1),
            ("TL LR", Q, -1),
        ],
        Q: [
            ("LL LT LR RL TL TR", STOP2, 0),
            ("TT RR", Q, 0),
            ("RT", R, 0),
        ],
    }
)


def core_step(
    state: CoreState, pair: tuple[str, str] | str, m: int, table: CoreTable = CORE_TABLE
) -> tuple[CoreState, int | TerminalSum]:
    """One transition of the core automaton on a canonical pair."""
    if state.terminal:
        raise HanoiError(f"TerminalStateStepped: {state.value} is terminal")
    if m < 1:
        raise HanoiError("m counts the remaining pairs and must be >= 1")
    nxt, shift = table[state]["".join(pair)]
    if nxt is STOP1:
        return nxt, TerminalSum.ALT1
    if nxt is STOP2:
        return nxt, TerminalSum.ALT2
    return nxt, 1 << (m + shift)


def canonical_permutation(a: str, b: str) -> dict[str, str]:
    """Renaming with a -> T, b -> R and the third symbol -> L."""
    (third,) = set(SYMBOLS) - {a, b}
    return {a: "T", b: "R", third: "L"}


_PERMS = {(a, b): canonical_permutation(a, b) for a in SYMBOLS for b in SYMBOLS if a != b}


@dataclass(frozen=True)
class TraceEntry:
    pair: str
    state: CoreState
    weight: int | None


@dataclass(frozen=True)
class MachineRun:
    decision: Decision
    distance: int | None
    trace: tuple[TraceEntry, ...] = ()
    # pairs pulled from the input, including those consumed by a terminal sum
    pairs_read: int = 0
    permutation: dict[str, str] = field(default_factory=dict, compare=False)

    @property
    def verdict(self) -> Verdict:
        return self.decision.verdict

    @property
    def symbols_read(self) -> int:
        return 2 * self.pairs_read


def _run(
    pairs: Iterator[tuple[str, str]],
    n: int,
    *,
    with_distance: bool = True,
    trace: bool = False,
    table: CoreTable = CORE_TABLE,
) -> MachineRun:
    discarded = 0
    for a, b in pairs:
        if a != b:
            break
        discarded += 1
    else:
        return MachineRun(Decision(Verdict.IDENTICAL, 0, discarded, False), 0, (), discarded)

    perm = _PERMS[a, b]
    steps = [] if trace else None
    state = P
    d = 1
    m = n - discarded - 1
    reads = 0
    for c, e in pairs:
        reads += 1
        key = perm[c] + perm[e]
        nxt, shift = table[state][key]
        if nxt is STOP1 or nxt is STOP2:
            pulled = discarded + 1 + reads
            total = None
            if with_distance:
                rest = list(pairs)
                pulled += len(rest)
                xs = c + "".join(p[0] for p in rest)
                ys = e + "".join(p[1] for p in rest)
                # f over the renamed suffix equals f over the raw suffix with
                # the preimage of the corner symbol
                if nxt is STOP1:
                    tsum = f_alpha(xs, b) + f_alpha(ys, a)
                else:
                    (third,) = set(SYMBOLS) - {a, b}
                    tsum = f_alpha(xs, third) + f_alpha(ys, third)
                total = d + tsum
                if steps is not None:
                    steps.append(TraceEntry(key, nxt, tsum))
            elif steps is not None:
                steps.append(TraceEntry(key, nxt, None))
            verdict = Verdict.ONCE if nxt is STOP1 else Verdict.TWICE
            decision = Decision(verdict, reads, discarded, True)
            return MachineRun(decision, total, tuple(steps or ()), pulled, perm)
        w = 1 << (m + shift)
        d += w
        m -= 1
        state = nxt
        if steps is not None:
            steps.append(TraceEntry(key, nxt, w))

    decision = Decision(EXHAUSTED[state], reads, discarded, True)
    return MachineRun(
        decision, d if with_distance else None, tuple(steps or ()), discarded + 1 + reads, perm
    )


def run_machine(
    x: GasketWord, y: GasketWord, *, trace: bool = False, table: CoreTable = CORE_TABLE
) -> MachineRun:
    n = check_lengths(x, y)
    return _run(zip(x, y), n, trace=trace, table=table)


def decide(x: GasketWord, y: GasketWord, *, table: CoreTable = CORE_TABLE) -> Decision:
    """Does the largest differing level get crossed once or twice?  Stops
    reading as soon as the automaton reaches a terminal state."""
    n = check_lengths(x, y)
    return _run(zip(x, y), n, with_distance=False, table=table).decision


def distance(x: GasketWord, y: GasketWord, *, table: CoreTable = CORE_TABLE) -> int:
    n = check_lengths(x, y)
    return _run(zip(x, y), n, table=table).distance


def _hanoi_pairs(x: Sequence[int], y: Sequence[int]) -> Iterator[tuple[str, str]]:
    # both transducers advance together, one disc per pair pulled
    sx = sy = "TLR"
    for p, q in zip(x, y):
        cx, sx = STEP[sx][p]
        cy, sy = STEP[sy][q]
        yield cx, cy


def run_machine_hanoi(
    x: Sequence[int],
    y: Sequence[int],
    *,
    with_distance: bool = True,
    trace: bool = False,
    table: CoreTable = CORE_TABLE,
) -> MachineRun:
    """Transducer and automaton advancing together, one disc per step."""
    n = check_lengths(x, y)
    return _run(_hanoi_pairs(x, y), n, with_distance=with_distance, trace=trace, table=table)


def decide_hanoi(x: Sequence[int], y: Sequence[int], *, table: CoreTable = CORE_TABLE) -> Decision:
    return run_machine_hanoi(x, y, with_distance=False, table=table).decision


def distance_hanoi(x: Sequence[int], y: Sequence[int], *, table: CoreTable = CORE_TABLE) -> int:
    return run_machine_hanoi(x, y, table=table).distance


def tally(table: CoreTable = CORE_TABLE) -> dict[CoreState, dict[CoreState, int]]:
    """Number of the nine input pairs leading from each transient state to each state."""
    out = {}
    for state, entries in table.items():
        counts = {s: 0 for s in CoreState}
        for nxt, _ in entries.values():
            counts[nxt] += 1
        out[state] = counts
    return out


def corrupt_table(state: CoreState = R, pair: str = "TR", to: tuple[CoreState, int] = (R, -1)) -> CoreTable:
    """A copy of the core table with one entry replaced (for fault-injection checks)."""
    table = {s: dict(entries) for s, entries in CORE_TABLE.items()}
    table[state][pair] = to
    return table


def run_pairs(pairs: Iterable[tuple[str, str]], *, table: CoreTable = CORE_TABLE) -> tuple[CoreState, int]:
    """Feed canonical pairs straight into the core automaton from START.

    Returns the final state and the number of pairs read; used to study the
    stopping time without the discard phase.
    """
    state = P
    reads = 0
    for c, e in pairs:
        reads += 1
        state = table[state][c + e][0]
        if state.terminal:
            break
    return state, reads
