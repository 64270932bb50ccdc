import json
import math
from pathlib import Path

import numpy as np
import pytest

from numrange.cli import main
from numrange.matrixio import write_matrix
from numrange.samples import NILPOTENT, NORMAL_DIAG, SAMPLE_B_TEXT

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def mfile(tmp_path):
    def make(t, name="m.json"):
        p = tmp_path / name
        write_matrix(p, t)
        return str(p)

    return make


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bounds_nilpotent(capsys, mfile):
    code, out, _ = run(capsys, "bounds", mfile(NILPOTENT))
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"spectral_norm", "classical", "kittaneh_power", "kittaneh_mean", "corollary", "ratios"}
    assert doc["kittaneh_power"] == 0.5
    assert doc["corollary"] == pytest.approx(0.541196, abs=1e-6)
    # 12 significant digits
    assert doc["kittaneh_mean"] == float(f"{math.sqrt(0.5):.12g}")


def test_bounds_identity(capsys, mfile):
    code, out, _ = run(capsys, "bounds", mfile(np.eye(2)))
    doc = json.loads(out)
    assert code == 0
    assert [doc[k] for k in ("classical", "kittaneh_power", "kittaneh_mean", "corollary")] == [1, 1, 1, 1]


def test_bounds_exit_codes(capsys, mfile, tmp_path):
    assert run(capsys, "bounds", mfile(np.zeros((2, 2))))[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "entries": [[1, 0]]}')
    code, _, err = run(capsys, "bounds", str(bad))
    assert code == 2 and "entries" in err
    assert run(capsys, "bounds", str(tmp_path / "missing.json"))[0] == 2


def test_text_grid_input(capsys, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text(SAMPLE_B_TEXT)
    code, out, _ = run(capsys, "bounds", str(p))
    assert code == 0 and json.loads(out)["classical"] > 0


@pytest.mark.parametrize("t, kind, count", [(NILPOTENT, "octagon", 8), (NORMAL_DIAG, "hexagon", 6)])
def test_octagon(capsys, mfile, t, kind, count):
    code, out, _ = run(capsys, "octagon", mfile(t))
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == kind and len(doc["vertices"]) == count


def test_octagon_segment_and_norm_flag(capsys, mfile):
    code, out, _ = run(capsys, "octagon", mfile(np.eye(2)))
    doc = json.loads(out)
    assert doc["kind"] == "segment" and doc["endpoint"] == [1, 0]
    for norm in ("one", "inf", "frobenius"):
        code, out, _ = run(capsys, "octagon", mfile(NILPOTENT), "--norm", norm)
        assert code == 0 and json.loads(out)["norm"] == norm


def test_check(capsys, mfile):
    code, out, _ = run(capsys, "check", mfile(NILPOTENT), "--angles", "360", "--samples", "50")
    doc = json.loads(out)
    assert code == 0 and doc["contained"]
    assert all(v["tangent"] and v["plus"] and v["minus"] for v in doc["tangency"].values())


def test_check_negative_control(capsys, mfile):
    code, out, _ = run(capsys, "check", mfile(NILPOTENT), "--debug-scale", "0.5")
    assert code == 4 and not json.loads(out)["contained"]


def test_check_segment_and_other_norms(capsys, mfile):
    code, out, _ = run(capsys, "check", mfile(np.diag([1.0, -2.0])))
    assert code == 0 and json.loads(out)["kind"] == "segment"
    code, out, _ = run(capsys, "check", mfile(NILPOTENT), "--norm", "one")
    assert code == 0 and json.loads(out)["tangency"] is None


def test_plot(capsys, mfile, tmp_path):
    out = tmp_path / "a.svg"
    assert run(capsys, "plot", mfile(NILPOTENT), str(out))[0] == 0
    first = out.read_bytes()
    assert first.startswith(b"<svg")
    assert run(capsys, "plot", mfile(NILPOTENT), str(out))[0] == 0
    assert out.read_bytes() == first
    assert run(capsys, "plot", mfile(NILPOTENT), str(tmp_path / "no" / "dir" / "x.svg"))[0] == 5


def test_ensemble_is_byte_deterministic(capsys):
    argv = ["ensemble", "--sizes", "4", "7", "--trials", "1", "--seed", "5"]
    code, first, _ = run(capsys, *argv)
    assert code == 0
    assert run(capsys, *argv)[1] == first
    doc = json.loads(first)
    assert [r["m"] for r in doc["rows"]] == [4, 7]
    code, csv_text, _ = run(capsys, *argv, "--format", "csv")
    assert csv_text.count("\n") == 3


def test_ensemble_invalid_flags(capsys):
    assert run(capsys, "ensemble", "--trials", "0")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["ensemble", "--trials", "many"])
    assert info.value.code == 2


def test_shipped_fixtures(capsys):
    for name in ("sample_a.json", "sample_b.txt"):
        assert run(capsys, "bounds", str(FIXTURES / name))[0] == 0
