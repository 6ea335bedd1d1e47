import json
import subprocess
import sys

import pytest

from hanoigasket.cli import main
from hanoigasket.core import MovePath, replay


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_distance_hanoi(capsys):
    assert run(capsys, "distance", "--from", "0000", "--to", "2222", "--coords", "hanoi")[:2] == (0, "15\n")


def test_distance_sg(capsys):
    assert run(capsys, "distance", "--from", "TLL", "--to", "RLL", "--coords", "sg")[:2] == (0, "5\n")


def test_distance_json(capsys):
    code, out, _ = run(capsys, "distance", "--from", "TL", "--to", "RL", "--coords", "sg", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"distance": 3, "verdict": "draw"}


@pytest.mark.parametrize(
    "argv",
    [
        ["distance", "--from", "TL", "--to", "T", "--coords", "sg"],
        ["distance", "--from", "TX", "--to", "TT", "--coords", "sg"],
        ["distance", "--from", "TL", "--to", "RL", "--coords", "hanoi"],
        ["distance", "--from", "01", "--to", "21"],
        ["decide", "--from", "01", "--to", "21", "--coords", "cube"],
    ],
)
def test_input_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_decide_text(capsys):
    code, out, _ = run(capsys, "decide", "--from", "022", "--to", "200", "--coords", "hanoi")
    assert code == 0
    assert out.startswith("twice") and "core_pairs_read=2" in out


def test_decide_draw_json(capsys):
    code, out, _ = run(capsys, "decide", "--from", "TL", "--to", "RL", "--coords", "sg", "--format", "json")
    assert json.loads(out) == {
        "verdict": "draw",
        "core_pairs_read": 1,
        "prefix_discarded": 0,
        "permutation_pair_read": True,
    }


def test_decide_identical(capsys):
    code, out, _ = run(capsys, "decide", "--from", "01", "--to", "01", "--coords", "hanoi")
    assert out.split()[0] == "identical"


def test_path_single_move(capsys):
    assert run(capsys, "path", "--from", "01", "--to", "21")[:2] == (0, "2:0->2\n")


def test_path_perfect_transfer(capsys):
    code, out, _ = run(capsys, "path", "--from", "00", "--to", "11")
    assert out.splitlines() == ["1:0->2", "2:0->1", "1:2->1"]


def test_path_json_schema(capsys):
    code, out, _ = run(capsys, "path", "--from", "022", "--to", "200", "--format", "json")
    obj = json.loads(out)
    path = MovePath.from_json(obj)
    assert replay(path) == (2, 0, 0)
    assert obj["length"] == 5 and "draw" not in obj


def test_path_draw_flag(capsys):
    # hanoi image of the draw pair (TL, RL)
    from hanoigasket.transducer import sg_to_hanoi
    from hanoigasket.core import render_hanoi_word

    x, y = (render_hanoi_word(sg_to_hanoi(w)) for w in ("TL", "RL"))
    code, out, _ = run(capsys, "path", "--from", x, "--to", y, "--format", "json")
    obj = json.loads(out)
    assert obj["draw"] is True and obj["length"] == 3 and obj["verdict"] == "draw"


def test_path_refuses_large_n(capsys):
    code, out, err = run(capsys, "path", "--from", "0" * 31, "--to", "1" * 31)
    assert code == 1 and out == "" and "refused" in err


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 0
    assert "FAIL" not in out


def test_verify_cap(capsys):
    assert run(capsys, "verify", "--max-n", "9")[0] == 1


def test_verify_fault_injection(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--inject-fault")
    assert code == 2
    assert "first failure" in out


def test_stats_constants(capsys):
    code, out, _ = run(capsys, "stats", "--constants")
    assert json.loads(out) == {
        "t1": "63/38", "t2": "99/38", "t3": "63/38",
        "d1": "466/885", "d2": "233/177", "d3": "188/177", "d4": "233/177",
    }


def test_stats_finite_reads(capsys):
    code, out, _ = run(capsys, "stats", "--finite-reads", "--n", "2")
    assert json.loads(out)["expected_reads"] == "4/3"


def test_stats_simulate(capsys):
    code, out, _ = run(capsys, "stats", "--simulate", "--n", "30", "--samples", "20000", "--seed", "7")
    obj = json.loads(out)
    assert obj["seed"] == 7 and obj["samples"] == 20000
    assert abs(obj["estimate"] - 63 / 38) < 5 * obj["stderr"]


def test_stats_needs_a_mode(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["stats"])
    assert exc.value.code == 1


def test_bench_small(capsys):
    code, out, err = run(capsys, "bench", "--n", "1", "--samples", "100", "--format", "json")
    obj = json.loads(out)
    assert obj["machine_symbol_reads"] > 0 and obj["baseline_symbol_reads"] > 0
    assert "machine" in err


def test_bench_zero_samples(capsys):
    assert run(capsys, "bench", "--n", "5", "--samples", "0")[0] == 1


def test_export(capsys):
    code, out, _ = run(capsys, "export", "--n", "2", "--kind", "hanoi")
    assert out.count(" -- ") == 12
    code, out, _ = run(capsys, "export", "--n", "1", "--kind", "sg")
    assert out.count(" -- ") == 3
    assert run(capsys, "export", "--n", "7", "--kind", "sg")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["bench", "--n", "20", "--samples", "200", "--seed", "4"],
        ["stats", "--simulate", "--n", "10", "--samples", "1000", "--seed", "1"],
        ["path", "--from", "0120", "--to", "2101", "--format", "json"],
        ["decide", "--from", "RLT", "--to", "LLT", "--coords", "sg", "--format", "json"],
    ],
)
def test_deterministic_output(capsys, argv):
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hanoigasket", "distance", "--from", "00", "--to", "11", "--coords", "hanoi"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "3\n"
