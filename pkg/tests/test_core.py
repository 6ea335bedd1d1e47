import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hanoigasket.core import (
    Decision,
    HanoiError,
    IllegalMove,
    InvalidSymbol,
    Move,
    MovePath,
    Verdict,
    format_rational,
    hanoi_neighbors,
    make_move,
    parse_gasket_word,
    parse_hanoi_word,
    parse_move,
    render_hanoi_word,
    replay,
    replay_states,
)
from hanoigasket.pathfinder import p2_path

from conftest import gasket_words, hanoi_pairs, hanoi_words


def test_parse_gasket_word():
    assert parse_gasket_word("TRL") == "TRL"
    assert parse_gasket_word("") == ""
    with pytest.raises(InvalidSymbol) as exc:
        parse_gasket_word("TXL")
    assert exc.value.position == 1


@pytest.mark.parametrize("bad", ["trl", "T L", "0"])
def test_gasket_parser_is_case_sensitive(bad):
    with pytest.raises(InvalidSymbol):
        parse_gasket_word(bad)


def test_parse_hanoi_word():
    assert parse_hanoi_word("012") == (0, 1, 2)
    assert parse_hanoi_word("") == ()
    with pytest.raises(InvalidSymbol) as exc:
        parse_hanoi_word("013")
    assert exc.value.position == 2


@given(gasket_words(max_size=30))
def test_gasket_parse_roundtrip(text):
    assert parse_gasket_word(text) == text


@given(hanoi_words(max_size=30))
def test_hanoi_parse_roundtrip(word):
    assert parse_hanoi_word(render_hanoi_word(word)) == word


def test_replay_classic_transfer():
    path = MovePath((0, 0), (Move(1, 0, 2), Move(2, 0, 1), Move(1, 2, 1)))
    assert replay(path) == (1, 1)


def test_replay_empty():
    assert replay(MovePath((0, 1, 2), ())) == (0, 1, 2)


def test_replay_disc_not_top():
    with pytest.raises(IllegalMove) as exc:
        replay(MovePath((0, 0), (Move(2, 0, 1),)))
    assert exc.value.index == 0
    assert exc.value.reason == "DiscNotTop"


def test_replay_smaller_disc_at_destination():
    # disc 1 on peg 1, disc 2 alone on peg 0
    with pytest.raises(IllegalMove) as exc:
        replay(MovePath((0, 1), (Move(1, 1, 2), Move(2, 0, 2))))
    assert exc.value.index == 1
    assert exc.value.reason == "SmallerDiscAtDestination"


def test_replay_wrong_source_peg():
    with pytest.raises(IllegalMove):
        replay(MovePath((0,), (Move(1, 1, 2),)))


@given(hanoi_pairs(max_size=6))
def test_replayed_states_are_adjacent(pair):
    x, y = pair
    states = replay_states(p2_path(x, y))
    assert states[-1] == y
    assert len(set(states)) == len(states)
    for a, b in zip(states, states[1:]):
        assert b in hanoi_neighbors(a)


def test_move_text_and_json():
    m = Move(2, 0, 1)
    assert str(m) == "2:0->1"
    assert parse_move("2:0->1") == m
    assert m.to_json() == {"disc": 2, "from": 0, "to": 1}
    assert Move.from_json(m.to_json()) == m


@pytest.mark.parametrize("text", ["1:0->0", "0:1->2", "1:0->3", "nonsense"])
def test_bad_moves_rejected(text):
    with pytest.raises(HanoiError):
        parse_move(text)


def test_make_move_requires_distinct_pegs():
    with pytest.raises(HanoiError):
        make_move(1, 2, 2)


def test_movepath_json_roundtrip():
    path = p2_path((0, 2, 2), (2, 0, 0))
    again = MovePath.from_json(json.dumps(path.to_json()))
    assert again == path


def test_decision_json():
    d = Decision(Verdict.TWICE, 2, 1, True)
    assert d.to_json() == {
        "verdict": "twice",
        "core_pairs_read": 2,
        "prefix_discarded": 1,
        "permutation_pair_read": True,
    }


rationals = st.fractions(max_denominator=10**6)


@given(rationals, rationals)
def test_rational_addition_is_exact(p, q):
    a, b = p.numerator, p.denominator
    c, d = q.numerator, q.denominator
    assert (p + q) * (b * d) == a * d + c * b
    assert (p * q) * (b * d) == a * c


@given(rationals, rationals.filter(lambda v: v != 0))
def test_rational_division_is_exact(p, q):
    assert (p / q) * q == p


def test_format_rational():
    assert format_rational(Fraction(126, 76)) == "63/38"
    assert format_rational(Fraction(2)) == "2/1"
