"""Shared vocabulary: words, moves, paths and decisions.

Gasket words are plain ``str`` over ``"TLR"`` and Hanoi words are tuples of
peg ids in ``{0, 1, 2}``.  In both cases the leftmost entry belongs to the
largest disc (the most significant gasket symbol).  Disc ``n`` is the largest
disc and sits at index 0 of a Hanoi word of length ``n``.

Exact rationals are :class:`fractions.Fraction`; distances are Python ints.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, NamedTuple, Sequence

GasketSymbol = Literal["T", "L", "R"]
GasketWord = str
PegId = int
HanoiWord = tuple[int, ...]
Rational = Fraction
Distance = int

SYMBOLS: str = "TLR"
PEGS: tuple[int, int, int] = (0, 1, 2)


class HanoiError(ValueError):
    """Base class for input errors raised by this package."""


class InvalidSymbol(HanoiError):
    def __init__(self, position: int, char: str = ""):
        super().__init__(f"invalid symbol {char!r} at position {position}")
        self.position = position
        self.char = char


class LengthMismatch(HanoiError):
    def __init__(self, left: int, right: int):
        super().__init__(f"word lengths differ: {left} != {right}")
        self.left = left
        self.right = right


class IllegalMove(HanoiError):
    DISC_NOT_TOP = "DiscNotTop"
    SMALLER_DISC_AT_DESTINATION = "SmallerDiscAtDestination"

    def __init__(self, index: int, reason: str):
        super().__init__(f"illegal move at index {index}: {reason}")
        self.index = index
        self.reason = reason


class TooLarge(HanoiError):
    pass


def check_lengths(x: Sequence, y: Sequence) -> int:
    if len(x) != len(y):
        raise LengthMismatch(len(x), len(y))
    return len(x)


def parse_gasket_word(text: str) -> GasketWord:
    for i, ch in enumerate(text):
        if ch not in SYMBOLS:
            raise InvalidSymbol(i, ch)
    return text


def parse_hanoi_word(text: str) -> HanoiWord:
    pegs = []
    for i, ch in enumerate(text):
        if ch not in "012":
            raise InvalidSymbol(i, ch)
        pegs.append(ord(ch) - 48)
    return tuple(pegs)


def render_gasket_word(word: GasketWord) -> str:
    return word


def render_hanoi_word(word: Sequence[int]) -> str:
    return "".join(map(str, word))


class Move(NamedTuple):
    """Move the top disc ``disc`` from peg ``src`` to peg ``dst``."""

    disc: int
    src: int
    dst: int

    def __str__(self) -> str:
        return f"{self.disc}:{self.src}->{self.dst}"

    def reversed(self) -> Move:
        return Move(self.disc, self.dst, self.src)

    def to_json(self) -> dict:
        return {"disc": self.disc, "from": self.src, "to": self.dst}

    @classmethod
    def from_json(cls, obj: dict) -> Move:
        return make_move(int(obj["disc"]), int(obj["from"]), int(obj["to"]))


def make_move(disc: int, src: int, dst: int) -> Move:
    """Build a move, validating the peg ids and ``src != dst``."""
    if disc < 1:
        raise HanoiError(f"disc must be >= 1, got {disc}")
    if src not in PEGS or dst not in PEGS:
        raise HanoiError(f"peg ids must be 0, 1 or 2, got {src}->{dst}")
    if src == dst:
        raise HanoiError(f"move of disc {disc} has identical source and destination")
    return Move(disc, src, dst)


def parse_move(text: str) -> Move:
    """Parse the ``"disc:from->to"`` form."""
    try:
        disc, rest = text.strip().split(":")
        src, dst = rest.split("->")
        return make_move(int(disc), int(src), int(dst))
    except ValueError as exc:
        if isinstance(exc, HanoiError):
            raise
        raise HanoiError(f"cannot parse move {text!r}") from exc


@dataclass(frozen=True)
class MovePath:
    start: HanoiWord
    moves: tuple[Move, ...]

    def __len__(self) -> int:
        return len(self.moves)

    @property
    def end(self) -> HanoiWord:
        return replay(self)

    def reversed(self, end: HanoiWord | None = None) -> MovePath:
        """The same path walked backwards, starting from its end state."""
        if end is None:
            end = self.end
        return MovePath(end, tuple(m.reversed() for m in reversed(self.moves)))

    def render_text(self) -> str:
        return "\n".join(str(m) for m in self.moves)

    def to_json(self) -> dict:
        return {
            "start": render_hanoi_word(self.start),
            "moves": [m.to_json() for m in self.moves],
        }

    @classmethod
    def from_json(cls, obj: dict | str) -> MovePath:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            parse_hanoi_word(obj["start"]),
            tuple(Move.from_json(m) for m in obj["moves"]),
        )


def _stacks(start: Sequence[int]) -> list[list[int]]:
    n = len(start)
    stacks: list[list[int]] = [[], [], []]
    for i, peg in enumerate(start):
        stacks[peg].append(n - i)
    return stacks


def replay(path: MovePath) -> HanoiWord:
    """Apply ``path.moves`` to ``path.start`` and return the final state.

    Raises :class:`IllegalMove` at the first move that is not permitted.
    """
    start = path.start
    n = len(start)
    stacks = _stacks(start)
    for index, (disc, src, dst) in enumerate(path.moves):
        if src == dst or not 1 <= disc <= n:
            raise HanoiError(f"malformed move {disc}:{src}->{dst} at index {index}")
        from_stack = stacks[src]
        if not from_stack or from_stack[-1] != disc:
            raise IllegalMove(index, IllegalMove.DISC_NOT_TOP)
        to_stack = stacks[dst]
        if to_stack and to_stack[-1] < disc:
            raise IllegalMove(index, IllegalMove.SMALLER_DISC_AT_DESTINATION)
        to_stack.append(from_stack.pop())
    end = [0] * n
    for peg, stack in enumerate(stacks):
        for disc in stack:
            end[n - disc] = peg
    return tuple(end)


def replay_states(path: MovePath) -> list[HanoiWord]:
    """All states visited by ``path``, start and end included."""
    states = [tuple(path.start)]
    for index, move in enumerate(path.moves):
        try:
            nxt = replay(MovePath(states[-1], (move,)))
        except IllegalMove as exc:
            raise IllegalMove(index, exc.reason) from None
        states.append(nxt)
    return states


def hanoi_neighbors(state: Sequence[int]) -> list[HanoiWord]:
    """States reachable from ``state`` by one permissible move."""
    n = len(state)
    # top[p] is the index of the smallest disc on peg p (largest index), -1 if empty
    top = [-1, -1, -1]
    for i, peg in enumerate(state):
        top[peg] = i
    out = []
    for p in PEGS:
        i = top[p]
        if i < 0:
            continue
        for q in PEGS:
            if q != p and top[q] < i:
                nxt = list(state)
                nxt[i] = q
                out.append(tuple(nxt))
    return out


class Verdict(str, enum.Enum):
    ONCE = "once"
    TWICE = "twice"
    DRAW = "draw"
    IDENTICAL = "identical"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Decision:
    """Outcome of the once-vs-twice problem for the largest differing disc.

    ``core_pairs_read`` counts pairs consumed by the core automaton only; the
    equal leading pairs (``prefix_discarded``) and the first differing pair,
    which fixes the symbol permutation (``permutation_pair_read``), are
    reported separately.
    """

    verdict: Verdict
    core_pairs_read: int = 0
    prefix_discarded: int = 0
    permutation_pair_read: bool = False

    @property
    def symbols_read(self) -> int:
        pairs = self.prefix_discarded + self.permutation_pair_read + self.core_pairs_read
        return 2 * pairs

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "core_pairs_read": self.core_pairs_read,
            "prefix_discarded": self.prefix_discarded,
            "permutation_pair_read": self.permutation_pair_read,
        }


def format_rational(value: Fraction) -> str:
    """Render as ``"p/q"`` (always with a denominator)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def words(n: int, alphabet: Iterable = SYMBOLS) -> list:
    """All words of length ``n`` in lexicographic (base-3) order."""
    from itertools import product

    alphabet = tuple(alphabet)
    if alphabet and isinstance(alphabet[0], str):
        return ["".join(w) for w in product(alphabet, repeat=n)]
    return list(product(alphabet, repeat=n))
