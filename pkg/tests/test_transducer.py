import itertools

import pytest
from hypothesis import given

from hanoigasket.core import hanoi_neighbors, words
from hanoigasket.gasket import sg_neighbors
from hanoigasket.oracle import GraphKind, bfs_from_index, build_graph, check_isomorphism, word_index
from hanoigasket.transducer import (
    ALL_PERMUTATIONS,
    START,
    PegPermutation,
    hanoi_to_sg,
    sg_to_hanoi,
    transducer_step,
)

from conftest import bfs, hanoi_words


def test_start_state():
    assert START == PegPermutation("TLR")
    assert [START.image(p) for p in range(3)] == ["T", "L", "R"]
    assert len(set(ALL_PERMUTATIONS)) == 6


def test_not_a_bijection():
    with pytest.raises(ValueError):
        PegPermutation("TTR")


@pytest.mark.parametrize(
    "peg, out, nxt",
    [(0, "T", "TRL"), (1, "L", "RLT"), (2, "R", "LTR")],
)
def test_steps_from_start(peg, out, nxt):
    assert transducer_step(START, peg) == (out, PegPermutation(nxt))


@pytest.mark.parametrize("state", ALL_PERMUTATIONS)
@pytest.mark.parametrize("peg", [0, 1, 2])
def test_step_is_involution(state, peg):
    out, nxt = transducer_step(state, peg)
    assert out == state.image(peg)
    assert nxt.image(peg) == state.image(peg)
    assert transducer_step(nxt, peg)[1] == state


def test_examples():
    assert hanoi_to_sg((0, 0, 0)) == "TTT"
    assert hanoi_to_sg((0, 1, 2)) == "TRT"
    assert hanoi_to_sg(()) == ""
    assert sg_to_hanoi("TRT") == (0, 1, 2)
    assert sg_to_hanoi("TTT") == (0, 0, 0)
    assert sg_to_hanoi("") == ()


@pytest.mark.parametrize("n", range(0, 9))
def test_bijection(n):
    images = set()
    for h in words(n, (0, 1, 2)):
        g = hanoi_to_sg(h)
        assert sg_to_hanoi(g) == h
        images.add(g)
    assert len(images) == 3**n


@given(hanoi_words(max_size=40))
def test_roundtrip_random(h):
    assert sg_to_hanoi(hanoi_to_sg(h)) == h


@pytest.mark.parametrize("n", range(1, 8))
def test_perfect_states_map_to_corners(n):
    corners = {hanoi_to_sg((p,) * n) for p in range(3)}
    assert corners == {"T" * n, "L" * n, "R" * n}


@pytest.mark.parametrize("n", range(1, 6))
def test_edges_preserved(n):
    for h in words(n, (0, 1, 2)):
        assert {hanoi_to_sg(v) for v in hanoi_neighbors(h)} == sg_neighbors(hanoi_to_sg(h))


@pytest.mark.parametrize("n", [6, 7])
def test_isomorphism_large(n):
    assert check_isomorphism(n).passed


@pytest.mark.parametrize("n", range(1, 3))
def test_distance_transport_small(n):
    ws = words(n, (0, 1, 2))
    for x, y in itertools.product(ws, ws):
        assert bfs(x, y, hanoi_neighbors) == bfs(hanoi_to_sg(x), hanoi_to_sg(y), sg_neighbors)


@pytest.mark.parametrize("n", range(1, 6))
def test_distance_transport(n):
    hanoi = build_graph(n, GraphKind.HANOI)
    gasket = build_graph(n, GraphKind.GASKET)
    image = [word_index(hanoi_to_sg(h)) for h in hanoi.labels]
    for s in range(hanoi.vertex_count):
        dh = bfs_from_index(hanoi, s)
        dg = bfs_from_index(gasket, image[s])
        assert all(dh[t] == dg[image[t]] for t in range(hanoi.vertex_count))
