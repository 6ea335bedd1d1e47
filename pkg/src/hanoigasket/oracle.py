"""Brute-force ground truth: explicit H_n and SG_n, BFS, and cross-checks."""

from __future__ import annotations

import enum
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .core import (
    HanoiError,
    MovePath,
    SYMBOLS,
    TooLarge,
    Verdict,
    hanoi_neighbors,
    render_hanoi_word,
    replay,
    words,
)
from .gasket import f_alpha, sg_distance_reference, sg_neighbors
from .machine import CORE_TABLE, CoreTable, run_machine, run_machine_hanoi
from .pathfinder import p1_moves, p2_moves
from .transducer import hanoi_to_sg, sg_to_hanoi

MAX_GRAPH_N = 12
MAX_DOT_N = 6
MAX_VERIFY_N = 8


class GraphKind(enum.Enum):
    HANOI = "hanoi"
    GASKET = "sg"


_SG_DIGIT = {"T": 0, "L": 1, "R": 2}


def word_index(word) -> int:
    """Base-3 index of a word, most significant symbol first."""
    idx = 0
    for ch in word:
        idx = 3 * idx + (_SG_DIGIT[ch] if isinstance(ch, str) else ch)
    return idx


def index_word(idx: int, n: int, kind: GraphKind):
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        idx, digits[i] = divmod(idx, 3)
    if kind is GraphKind.HANOI:
        return tuple(digits)
    return "".join(SYMBOLS[d] for d in digits)


@dataclass(frozen=True)
class ExplicitGraph:
    n: int
    kind: GraphKind
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple = field(repr=False, default=())

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterable[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def label(self, idx: int) -> str:
        word = self.labels[idx]
        return word if isinstance(word, str) else render_hanoi_word(word)

    def index(self, word) -> int:
        idx = word_index(word)
        if len(word) != self.n or not 0 <= idx < len(self.adjacency):
            raise HanoiError(f"UnknownVertex: {word!r} is not a vertex of this graph")
        return idx


def build_graph(n: int, kind: GraphKind | str) -> ExplicitGraph:
    kind = GraphKind(kind)
    if n > MAX_GRAPH_N:
        raise TooLarge(f"n={n} exceeds the cap of {MAX_GRAPH_N}")
    if n < 0:
        raise HanoiError("n must be non-negative")
    if kind is GraphKind.HANOI:
        labels = words(n, (0, 1, 2))
        neighbors = hanoi_neighbors
    else:
        labels = words(n)
        neighbors = sg_neighbors if n > 0 else (lambda w: ())
    adjacency = tuple(tuple(sorted(word_index(v) for v in neighbors(w))) for w in labels)
    return ExplicitGraph(n, kind, adjacency, tuple(labels))


def bfs_from_index(g: ExplicitGraph, source: int) -> list[int]:
    dist = [-1] * len(g.adjacency)
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def bfs_distances(g: ExplicitGraph, source) -> list[int]:
    """Single-source shortest-path lengths, indexed by base-3 vertex index."""
    return bfs_from_index(g, g.index(source))


def bfs_implicit(source: Hashable, target: Hashable, neighbors: Callable) -> int:
    """BFS distance over a neighbour function, without building the graph."""
    if source == target:
        return 0
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                if v == target:
                    return dist[v]
                queue.append(v)
    raise HanoiError("target unreachable")


def export_dot(g: ExplicitGraph) -> str:
    if g.n > MAX_DOT_N:
        raise TooLarge(f"DOT export is limited to n <= {MAX_DOT_N}")
    name = "H" if g.kind is GraphKind.HANOI else "SG"
    lines = [f"graph {name}_{g.n} {{"]
    for idx in range(g.vertex_count):
        lines.append(f'  "{g.label(idx)}";')
    for u, v in g.edges():
        lines.append(f'  "{g.label(u)}" -- "{g.label(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.checked} checked)"
        if self.counterexample:
            text += f": first failure {self.counterexample}"
        return text


@dataclass
class VerifyReport:
    max_n: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        return "\n".join(c.line() for c in self.checks)


# exhaustive pair checks up to this n; larger n are sampled
EXHAUSTIVE_PAIR_N = 6
EXHAUSTIVE_PATH_N = 5
SAMPLED_PAIRS = 20_000


def _pair_sources(n: int, rng: random.Random):
    """Yield (source index, target indices) blocks covering the pairs to check."""
    size = 3**n
    if n <= EXHAUSTIVE_PAIR_N:
        for s in range(size):
            yield s, range(size)
    else:
        for _ in range(SAMPLED_PAIRS // 100):
            yield rng.randrange(size), [rng.randrange(size) for _ in range(100)]


def check_distances(n: int, table: CoreTable = CORE_TABLE, seed: int = 0) -> CheckResult:
    """Automaton distance == closed form == BFS distance on SG_n."""
    g = build_graph(n, GraphKind.GASKET)
    labels = g.labels
    res = CheckResult(f"distance n={n}", True)
    for s, targets in _pair_sources(n, random.Random(seed)):
        dist = bfs_from_index(g, s)
        x = labels[s]
        for t in targets:
            y = labels[t]
            got = run_machine(x, y, table=table).distance
            ref = sg_distance_reference(x, y)
            res.checked += 1
            if not got == ref == dist[t]:
                res.passed = False
                res.counterexample = f"({x}, {y}): machine={got} closed-form={ref} bfs={dist[t]}"
                return res
    return res


def check_isomorphism(n: int) -> CheckResult:
    """The transducer maps H_n edges onto SG_n edges bijectively."""
    res = CheckResult(f"isomorphism n={n}", True)
    hanoi = build_graph(n, GraphKind.HANOI)
    gasket = build_graph(n, GraphKind.GASKET)
    image = [word_index(hanoi_to_sg(w)) for w in hanoi.labels]
    if sorted(image) != list(range(gasket.vertex_count)):
        res.passed = False
        res.counterexample = "vertex map is not a bijection"
        return res
    sg_edges = set(gasket.edges())
    mapped = set()
    for u, v in hanoi.edges():
        res.checked += 1
        e = (min(image[u], image[v]), max(image[u], image[v]))
        if e not in sg_edges:
            res.passed = False
            res.counterexample = (
                f"H edge {hanoi.label(u)}-{hanoi.label(v)} maps to non-edge "
                f"{gasket.label(e[0])}-{gasket.label(e[1])}"
            )
            return res
        mapped.add(e)
    if mapped != sg_edges:
        res.passed = False
        res.counterexample = "some SG edge has no preimage"
    for peg in range(3):
        img = hanoi_to_sg((peg,) * n)
        if len(set(img)) > 1:
            res.passed = False
            res.counterexample = f"perfect state {peg}^{n} maps to non-corner {img}"
    return res


def check_paths(n: int, table: CoreTable = CORE_TABLE, seed: int = 0) -> CheckResult:
    """p1 paths are optimal and p2 paths are legal with automaton length.

    Pairs are exhaustive for n <= 6 and sampled above, like check_distances.
    """
    res = CheckResult(f"paths n={n}", True)
    g = build_graph(n, GraphKind.HANOI)
    labels = g.labels
    perfect = [bfs_from_index(g, word_index((p,) * n)) for p in range(3)]
    for idx, x in enumerate(labels):
        for p in range(3):
            res.checked += 1
            if len(p1_moves(x, p)) != perfect[p][idx]:
                res.passed = False
                res.counterexample = f"p1 from {render_hanoi_word(x)} to peg {p}"
                return res
    for s, targets in _pair_sources(n, random.Random(seed)):
        x = labels[s]
        dist = bfs_from_index(g, s)
        for t in targets:
            y = labels[t]
            res.checked += 1
            run = run_machine_hanoi(x, y, table=table)
            moves = p2_moves(x, y, run.verdict)
            try:
                end = replay(MovePath(x, tuple(moves)))
            except HanoiError as exc:
                end = exc
            if end != y or len(moves) != run.distance or run.distance != dist[t]:
                res.passed = False
                res.counterexample = (
                    f"({render_hanoi_word(x)}, {render_hanoi_word(y)}): "
                    f"path length {len(moves)}, machine {run.distance}, bfs {dist[t]}"
                )
                return res
    return res


def verify_suite(max_n: int, table: CoreTable = CORE_TABLE, seed: int = 0) -> VerifyReport:
    """Run all cross-checks for n = 1..max_n.

    Pairs are checked exhaustively for n <= 6 and on a fixed-seed sample
    above that; paths are checked exhaustively for n <= 5.
    """
    if max_n > MAX_VERIFY_N:
        raise TooLarge(f"max_n={max_n} exceeds the cap of {MAX_VERIFY_N}")
    report = VerifyReport(max_n)
    for n in range(1, max_n + 1):
        report.checks.append(check_distances(n, table, seed))
        report.checks.append(check_isomorphism(n))
        if n <= EXHAUSTIVE_PATH_N:
            report.checks.append(check_paths(n, table, seed))
    return report


def perfect_state_mean(n: int) -> tuple[int, int]:
    """(sum, count) of the distance to the corner ``T^n`` over all vertices, via f_alpha."""
    total = sum(f_alpha(w, "T") for w in words(n))
    return total, 3**n
