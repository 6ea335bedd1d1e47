"""Random-input analysis of the decision automaton.

Exact results use :class:`fractions.Fraction` throughout; floats only appear
in simulation summaries.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import HanoiError, SYMBOLS, TooLarge, format_rational
from .machine import CORE_TABLE, CoreState, CoreTable, P, Q, R, STOP1, STOP2, distance, tally

F = Fraction


class SingularMatrix(HanoiError):
    pass


@dataclass(frozen=True)
class LinearSystem:
    coefficients: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.rhs)
        if len(self.coefficients) != n or any(len(row) != n for row in self.coefficients):
            raise ValueError("linear system must be square and match the rhs length")

    @classmethod
    def of(cls, coefficients, rhs) -> LinearSystem:
        return cls(
            tuple(tuple(F(a) for a in row) for row in coefficients),
            tuple(F(b) for b in rhs),
        )

    def residual(self, solution: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(
            sum((a * s for a, s in zip(row, solution)), F(0)) - b
            for row, b in zip(self.coefficients, self.rhs)
        )


def solve_exact(system: LinearSystem) -> tuple[Fraction, ...]:
    """Gauss-Jordan elimination over the rationals."""
    n = len(system.rhs)
    rows = [list(row) + [b] for row, b in zip(system.coefficients, system.rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"no pivot in column {col}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        prow = rows[col]
        inv = 1 / prow[col]
        prow[:] = [a * inv for a in prow]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], prow)]
    solution = tuple(row[n] for row in rows)
    assert all(v == 0 for v in system.residual(solution))
    return solution


@dataclass(frozen=True)
class TransitionMatrix:
    labels: tuple[str, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for label, row in zip(self.labels, self.entries):
            if any(p < 0 for p in row) or sum(row) != 1:
                raise ValueError(f"row {label} is not a probability distribution")

    @classmethod
    def of(cls, labels, rows) -> TransitionMatrix:
        return cls(tuple(labels), tuple(tuple(F(p) for p in row) for row in rows))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def as_strings(self) -> list[list[str]]:
        return [[format_rational(p) for p in row] for row in self.entries]


CHAIN_LABELS = ("start", "draw", "alt2-pending", "stop-alt1", "stop-alt2")
REDUCED_LABELS = ("start", "draw", "alt2-pending", "stop")


def decision_chain() -> TransitionMatrix:
    """The five-state chain of the decision automaton on uniform input pairs."""
    return TransitionMatrix.of(
        CHAIN_LABELS,
        [
            [F(2, 9), F(1, 9), 0, F(2, 3), 0],
            [F(2, 9), F(1, 3), F(2, 9), F(1, 9), F(1, 9)],
            [0, F(1, 9), F(2, 9), 0, F(2, 3)],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
        ],
    )


def reduced_chain() -> TransitionMatrix:
    """:func:`decision_chain` with the two stopping states merged."""
    return TransitionMatrix.of(
        REDUCED_LABELS,
        [
            [F(2, 9), F(1, 9), 0, F(2, 3)],
            [F(2, 9), F(1, 3), F(2, 9), F(2, 9)],
            [0, F(1, 9), F(2, 9), F(2, 3)],
            [0, 0, 0, 1],
        ],
    )


_CHAIN_ORDER = (P, R, Q, STOP1, STOP2)


def derive_decision_chain(table: CoreTable = CORE_TABLE) -> TransitionMatrix:
    """Rebuild the five-state chain by counting the automaton's transitions."""
    counts = tally(table)
    rows = []
    for state in _CHAIN_ORDER:
        if state in counts:
            rows.append([F(counts[state][s], 9) for s in _CHAIN_ORDER])
        else:
            rows.append([F(int(s is state)) for s in _CHAIN_ORDER])
    return TransitionMatrix.of(CHAIN_LABELS, rows)


def derive_reduced_chain(table: CoreTable = CORE_TABLE) -> TransitionMatrix:
    full = derive_decision_chain(table)
    rows = [list(row[:3]) + [row[3] + row[4]] for row in full.entries[:3]]
    rows.append([0, 0, 0, 1])
    return TransitionMatrix.of(REDUCED_LABELS, rows)


def _transient_block(chain: TransitionMatrix) -> list[list[Fraction]]:
    return [list(row[:3]) for row in chain.entries[:3]]


def absorption_times(chain: TransitionMatrix | None = None) -> tuple[Fraction, Fraction, Fraction]:
    """Expected number of pairs read before stopping, from each transient state."""
    block = _transient_block(chain or reduced_chain())
    coeffs = [[int(i == j) - block[i][j] for j in range(3)] for i in range(3)]
    return solve_exact(LinearSystem.of(coeffs, [1, 1, 1]))


def expected_reads_finite(n: int, chain: TransitionMatrix | None = None) -> Fraction:
    """Expected pairs read from START when the input holds only ``n`` pairs."""
    if n < 1:
        raise HanoiError("n must be >= 1")
    block = _transient_block(chain or reduced_chain())
    mass = [F(1), F(0), F(0)]
    total = F(0)
    for _ in range(n):
        total += sum(mass)
        mass = [sum((mass[i] * block[i][j] for i in range(3)), F(0)) for j in range(3)]
    return total


def stopping_time_counts(n: int, table: CoreTable = CORE_TABLE) -> dict[int, int]:
    """Exact number of the ``9**n`` canonical suffix-pair sequences of length ``n``
    on which the automaton reads exactly ``k`` pairs, for each ``k``.

    Sequences sharing a prefix up to the stopping point are counted together,
    so this enumerates all ``9**n`` inputs without listing them.
    """
    live = {P: 1, R: 0, Q: 0}
    counts: dict[int, int] = {}
    for k in range(1, n + 1):
        nxt = {P: 0, R: 0, Q: 0}
        stopped = 0
        for state, c in live.items():
            if not c:
                continue
            for target, _ in table[state].values():
                if target.terminal:
                    stopped += c
                else:
                    nxt[target] += c
        if stopped:
            counts[k] = stopped * 9 ** (n - k)
        live = nxt
    remaining = sum(live.values())
    if remaining:
        counts[n] = counts.get(n, 0) + remaining
    return counts


def tail_fractions(n: int, kmax: int, table: CoreTable = CORE_TABLE) -> dict[int, Fraction]:
    """Fraction of all length-``n`` suffix pairs with more than ``k`` reads."""
    counts = stopping_time_counts(n, table)
    total = 9**n
    return {k: F(sum(c for r, c in counts.items() if r > k), total) for k in range(1, kmax + 1)}


# Expected accumulated distance on the infinite gasket.  The weight of the
# current level is 1 and every step halves the scale of what follows.

TAIL_MISMATCH = F(2, 3)


def tail_expectation() -> Fraction:
    """Expected contribution to one corner distance from the levels below the current one."""
    # sum_{j>=2} (2/3) 2^-j
    return TAIL_MISMATCH * F(1, 4) / (1 - F(1, 2))


def terminal_expectation(pairs: Sequence[str], corner_x: str, corner_y: str) -> Fraction:
    """Mean of f_{corner_x}(x) + f_{corner_y}(y) given the first pair is uniform on ``pairs``."""
    k = len(pairs)
    mismatch_x = F(sum(p[0] != corner_x for p in pairs), k)
    mismatch_y = F(sum(p[1] != corner_y for p in pairs), k)
    return mismatch_x * F(1, 2) + mismatch_y * F(1, 2) + 2 * tail_expectation()


P_TERMINAL_PAIRS = ("RT", "RL", "RR", "LT", "TT", "TR")
Q_TERMINAL_PAIRS = ("LL", "LT", "LR", "RL", "TL", "TR")


def terminal_sum_expectation() -> Fraction:
    """Expected terminal sum when leaving START on one of its six stopping pairs."""
    value = terminal_expectation(P_TERMINAL_PAIRS, "R", "T")
    assert value == terminal_expectation(Q_TERMINAL_PAIRS, "L", "L")
    return value


def _expectation_system(rows: list[list[tuple[Fraction, Fraction, int | None]]]) -> LinearSystem:
    # each row lists (probability, added constant, next unknown or None); a
    # transition to unknown j contributes prob * (const + d_j / 2)
    n = len(rows)
    coeffs = [[F(int(i == j)) for j in range(n)] for i in range(n)]
    rhs = [F(0)] * n
    for i, terms in enumerate(rows):
        for prob, const, j in terms:
            rhs[i] += prob * const
            if j is not None:
                coeffs[i][j] -= prob * F(1, 2)
    return LinearSystem.of(coeffs, rhs)


def distance_system() -> LinearSystem:
    """The four expected-distance equations, one per non-terminal state."""
    K = terminal_sum_expectation()
    half = F(1, 2)
    rows = [
        [(F(1, 3), 0, 0), (F(2, 3), 0, 1)],
        [(F(2, 9), 1, 1), (F(1, 9), 1, 2), (F(2, 3), K, None)],
        [
            (F(2, 9), half, 1),
            (F(2, 9), half, 2),
            (F(1, 9), 1, 2),
            (F(2, 9), half, 3),
            (F(2, 9), F(2, 3), None),
        ],
        [(F(1, 9), 1, 2), (F(2, 9), 1, 3), (F(2, 3), K, None)],
    ]
    return _expectation_system([[(F(p), F(c), j) for p, c, j in r] for r in rows])


_UNKNOWN = {P: 1, R: 2, Q: 3}
_CORNERS = {STOP1: ("R", "T"), STOP2: ("L", "L")}


def derive_distance_system(table: CoreTable = CORE_TABLE) -> LinearSystem:
    """The same equations built pair by pair from the automaton's table."""
    ninth = F(1, 9)
    rows = [[(F(1, 3), F(0), 0), (F(2, 3), F(0), 1)]]
    for state in (P, R, Q):
        terms = []
        for pair, (nxt, shift) in table[state].items():
            if nxt.terminal:
                cx, cy = _CORNERS[nxt]
                terms.append((ninth, terminal_expectation([pair], cx, cy), None))
            else:
                terms.append((ninth, F(2) ** shift, _UNKNOWN[nxt]))
        rows.append(terms)
    return _expectation_system(rows)


def expected_distance_constants() -> tuple[Fraction, Fraction, Fraction, Fraction]:
    return solve_exact(distance_system())


def exact_constants() -> dict[str, str]:
    t1, t2, t3 = absorption_times()
    d1, d2, d3, d4 = expected_distance_constants()
    values = {"t1": t1, "t2": t2, "t3": t3, "d1": d1, "d2": d2, "d3": d3, "d4": d4}
    return {k: format_rational(v) for k, v in values.items()}


# Simulation

CHUNK = 100_000
_PAIR_INDEX = {a + b: 3 * SYMBOLS.index(a) + SYMBOLS.index(b) for a in SYMBOLS for b in SYMBOLS}
_STATE_INDEX = {P: 0, R: 1, Q: 2, STOP1: 3, STOP2: 4}


def transition_array(table: CoreTable = CORE_TABLE) -> np.ndarray:
    """``next[state, pair]`` with terminal states absorbing."""
    out = np.zeros((5, 9), dtype=np.int8)
    out[3, :] = 3
    out[4, :] = 4
    for state, entries in table.items():
        for pair, (nxt, _) in entries.items():
            out[_STATE_INDEX[state], _PAIR_INDEX[pair]] = _STATE_INDEX[nxt]
    return out


def chunk_rng(seed: int, index: int) -> np.random.Generator:
    """Generator for partition ``index``; independent of how partitions are scheduled."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def _chunk_sizes(samples: int) -> list[int]:
    full, rest = divmod(samples, CHUNK)
    return [CHUNK] * full + ([rest] if rest else [])


def _stopping_chunk(args) -> np.ndarray:
    n, size, seed, index, table = args
    rng = chunk_rng(seed, index)
    nxt = transition_array(table)
    pairs = rng.integers(0, 9, size=(size, n), dtype=np.int8)
    state = np.zeros(size, dtype=np.int8)
    reads = np.zeros(size, dtype=np.int64)
    for j in range(n):
        active = state < 3
        if not active.any():
            break
        reads += active
        state = np.where(active, nxt[state, pairs[:, j]], state)
    return reads


@dataclass
class StoppingStats:
    n: int
    samples: int
    seed: int
    mean: float
    stddev: float
    histogram: dict[int, int] = field(default_factory=dict)

    @property
    def stderr(self) -> float:
        return self.stddev / math.sqrt(self.samples)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "estimate": self.mean,
            "stddev": self.stddev,
            "stderr": self.stderr,
            "samples": self.samples,
            "seed": self.seed,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "limit": "63/38",
        }


def _map(fn, jobs, workers: int):
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(job) for job in jobs]


def simulate_stopping_time(
    n: int, samples: int, seed: int, *, workers: int = 1, table: CoreTable = CORE_TABLE
) -> StoppingStats:
    """Pairs read by the core automaton on uniform random suffix pairs of length ``n``."""
    if samples < 1:
        raise HanoiError("samples must be >= 1")
    if n < 1:
        raise HanoiError("n must be >= 1")
    jobs = [(n, size, seed, i, table) for i, size in enumerate(_chunk_sizes(samples))]
    reads = np.concatenate(_map(_stopping_chunk, jobs, workers))
    values, counts = np.unique(reads, return_counts=True)
    return StoppingStats(
        n,
        samples,
        seed,
        float(reads.mean()),
        float(reads.std(ddof=1)) if samples > 1 else 0.0,
        {int(v): int(c) for v, c in zip(values, counts)},
    )


def random_gasket_words(rng: np.random.Generator, count: int, n: int) -> list[str]:
    lut = np.frombuffer(SYMBOLS.encode(), dtype=np.uint8)
    raw = lut[rng.integers(0, 3, size=(count, n))].tobytes().decode()
    return [raw[i * n : (i + 1) * n] for i in range(count)]


def _distance_chunk(args) -> tuple[int, int]:
    n, size, seed, index = args
    rng = chunk_rng(seed, index)
    xs = random_gasket_words(rng, size, n)
    ys = random_gasket_words(rng, size, n)
    total = 0
    total_sq = 0
    for x, y in zip(xs, ys):
        d = distance(x, y)
        total += d
        total_sq += d * d
    return total, total_sq


@dataclass
class AverageDistance:
    n: int
    mode: str
    value: Fraction | float
    samples: int
    seed: int | None = None
    stderr: float | None = None

    @property
    def ratio(self) -> Fraction | float:
        return self.value / 2**self.n

    def to_json(self) -> dict:
        exact = isinstance(self.value, Fraction)
        out = {
            "n": self.n,
            "mode": self.mode,
            "estimate": format_rational(self.value) if exact else self.value,
            "ratio": format_rational(self.ratio) if exact else self.ratio,
            "samples": self.samples,
        }
        if not exact:
            out["stderr"] = self.stderr
            out["ratio_stderr"] = self.stderr / 2**self.n
            out["seed"] = self.seed
            out["limit_ratio"] = "466/885"
        return out


def average_pair_distance(
    n: int, mode: str = "exact", samples: int = 0, seed: int = 0, *, workers: int = 1
) -> AverageDistance:
    """Mean distance over ordered pairs of SG_n vertices (identical pairs included)."""
    if mode == "exact":
        from .oracle import GraphKind, bfs_from_index, build_graph

        if n > 7:
            raise TooLarge("exact averaging is limited to n <= 7")
        g = build_graph(n, GraphKind.GASKET)
        total = sum(sum(bfs_from_index(g, s)) for s in range(g.vertex_count))
        return AverageDistance(n, mode, F(total, 9**n), 9**n)
    if mode != "sampled":
        raise HanoiError(f"unknown mode {mode!r}")
    if samples < 1:
        raise HanoiError("samples must be >= 1")
    jobs = [(n, size, seed, i) for i, size in enumerate(_chunk_sizes(samples))]
    parts = _map(_distance_chunk, jobs, workers)
    total = sum(p[0] for p in parts)
    total_sq = sum(p[1] for p in parts)
    mean = total / samples
    var = (total_sq - total * total / samples) / (samples - 1) if samples > 1 else 0.0
    return AverageDistance(n, mode, mean, samples, seed, math.sqrt(max(var, 0.0) / samples))
