"""Finite-state transducer between Hanoi states and gasket vertices.

The internal state is a bijection pegs -> {T, L, R}.  Reading peg ``p`` emits
its current image and then swaps the images of the two other pegs.  Every
transition is therefore an involution and the machine has six states.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .core import GasketWord, HanoiWord, SYMBOLS


@dataclass(frozen=True)
class PegPermutation:
    """``images[p]`` is the gasket symbol currently identified with peg ``p``."""

    images: str = "TLR"

    def __post_init__(self):
        if sorted(self.images) != sorted(SYMBOLS):
            raise ValueError(f"not a bijection onto TLR: {self.images!r}")

    def image(self, peg: int) -> str:
        return self.images[peg]

    def peg_of(self, symbol: str) -> int:
        return self.images.index(symbol)

    def __str__(self) -> str:
        return ", ".join(f"{p}={s}" for p, s in enumerate(self.images))


START = PegPermutation("TLR")
ALL_PERMUTATIONS = tuple(PegPermutation("".join(p)) for p in permutations(SYMBOLS))


def _next_images(images: str, peg: int) -> str:
    a, b = (q for q in range(3) if q != peg)
    out = list(images)
    out[a], out[b] = out[b], out[a]
    return "".join(out)


# images -> peg -> (output symbol, next images); used by the hot loops
STEP: dict[str, tuple[tuple[str, str], ...]] = {
    p.images: tuple((p.images[peg], _next_images(p.images, peg)) for peg in range(3))
    for p in ALL_PERMUTATIONS
}
# images -> symbol -> (peg, next images)
INVERSE_STEP: dict[str, dict[str, tuple[int, str]]] = {
    p.images: {p.images[peg]: (peg, _next_images(p.images, peg)) for peg in range(3)}
    for p in ALL_PERMUTATIONS
}


def transducer_step(state: PegPermutation, peg: int) -> tuple[str, PegPermutation]:
    out, nxt = STEP[state.images][peg]
    return out, PegPermutation(nxt)


def iter_hanoi_to_sg(h: Sequence[int], state: str = "TLR") -> Iterator[str]:
    """Lazily translate pegs to gasket symbols, one disc at a time."""
    for peg in h:
        out, state = STEP[state][peg]
        yield out


def hanoi_to_sg(h: Sequence[int]) -> GasketWord:
    return "".join(iter_hanoi_to_sg(h))


def sg_to_hanoi(g: GasketWord) -> HanoiWord:
    state = "TLR"
    out = []
    for sym in g:
        peg, state = INVERSE_STEP[state][sym]
        out.append(peg)
    return tuple(out)


def corner_symbol(peg: int) -> str:
    """The symbol of the constant gasket word that the perfect state ``peg^n`` maps to."""
    return START.images[peg]
