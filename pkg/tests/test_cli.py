"""End-to-end CLI tests with golden-file comparison.

Set UPDATE_GOLDENS=1 in the environment to regenerate the golden files
after an intentional output change.
"""

import json
import os

import pytest

from linsyz.cli import main

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")

GOLDEN_CASES = [
    ("strand_rnc3", ["strand", "rnc3"]),
    ("strand_rnc3_json", ["strand", "rnc3", "--format", "json"]),
    ("gensyz_2_0", ["gensyz", "--g", "2", "--k", "0"]),
    ("gensyz_4_2", ["gensyz", "--g", "4", "--k", "2"]),
    ("syzygies_rnc4_step1", ["syzygies", "rnc4", "--step", "1"]),
    ("syzscheme_rnc3", ["syzscheme", "rnc3", "--step", "1", "--index", "0"]),
    ("hilbert_rnc4", ["hilbert", "rnc4", "--max-degree", "5"]),
    ("verify_decomp_k0_g2", ["verify-decomposition", "--k", "0", "--g", "2"]),
    ("verify_decomp_k1_g3", ["verify-decomposition", "--k", "1", "--g", "3"]),
    ("verify_decomp_k2_g3", ["verify-decomposition", "--k", "2", "--g", "3",
                             "--max-degree", "4"]),
    ("verify_cone_rnc3_all", ["verify-cone", "rnc3", "--all"]),
    ("verify_cone_rnc4_single", ["verify-cone", "rnc4", "--step", "1",
                                 "--index", "0"]),
]


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden(capsys, name, argv):
    code, out = run_cli(capsys, argv)
    assert code == 0
    path = os.path.join(GOLDEN_DIR, name + ".txt")
    if os.environ.get("UPDATE_GOLDENS"):
        os.makedirs(GOLDEN_DIR, exist_ok=True)
        with open(path, "w") as fh:
            fh.write(out)
    with open(path) as fh:
        assert out == fh.read()


def test_json_and_text_carry_same_data(capsys):
    _, text_out = run_cli(capsys, ["strand", "rnc3"])
    _, json_out = run_cli(capsys, ["strand", "rnc3", "--format", "json"])
    data = json.loads(json_out)
    assert data["dims"] == {"0": "3", "1": "2", "2": "0"} or \
        data["dims"] == {"0": 3, "1": 2, "2": 0}
    for p, d in data["dims"].items():
        assert "%s: %s" % (p, d) in text_out


def test_second_prime_same_dimensions(capsys):
    _, a = run_cli(capsys, ["strand", "rnc5", "--field", "65537",
                            "--format", "json"])
    _, b = run_cli(capsys, ["strand", "rnc5", "--format", "json"])
    assert json.loads(a) == json.loads(b)


def test_qq_field(capsys):
    code, out = run_cli(capsys, ["hilbert", "rnc3", "--field", "QQ",
                                 "--format", "json"])
    assert code == 0
    assert json.loads(out)["hilbert"]["3"] == 10


def test_unknown_ideal_errors():
    with pytest.raises(SystemExit) as exc:
        main(["strand", "no_such_ideal"])
    assert "error" in str(exc.value)


def test_out_of_range_step_errors():
    with pytest.raises(SystemExit):
        main(["syzscheme", "rnc3", "--step", "9", "--index", "0"])


def test_bad_k_exits_nonzero(capsys):
    assert main(["gensyz", "--g", "2", "--k", "5"]) == 2


def test_ideal_file_input(tmp_path, capsys):
    p = tmp_path / "red.ideal"
    p.write_text("vars: x0 x1 y\nx0*y\nx1*y\n")
    code, out = run_cli(capsys, ["strand", str(p), "--format", "json"])
    assert code == 0
    assert json.loads(out)["dims"] == {"0": 2, "1": 1, "2": 0}
