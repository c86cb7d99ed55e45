"""CLI contract tests: golden outputs, exit codes, determinism.

Golden files live in tests/golden/, one JSON document per case holding the
argv tail, the input document, the expected exit code and the expected
output.  Regenerate after an intentional output change with:

    python tests/test_cli.py --regen
"""

import json
import math
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from ncframe.cli import main

GOLDEN_DIR = Path(__file__).parent / "golden"


def golden_cases():
    cosh1, sinh1 = math.cosh(1.0), math.sinh(1.0)
    phase = complex(math.cos(math.pi / 6), math.sin(math.pi / 6))
    K_reduce = 2.0 * phase * np.array([cosh1, 1j * sinh1, 0.0])
    return {
        "classify_real_axis": (
            ["classify"],
            {"nm": [1, 0, 0, 0, 0, 0]},
        ),
        "classify_theta_matrix": (
            ["classify"],
            {"theta": [[0, 0.3, 0, 0], [-0.3, 0, 0, 0], [0, 0, 0, 1.0], [0, 0, -1.0, 0]]},
        ),
        "classify_isotropic": (
            ["classify"],
            {"nm": [1, 0, 0, 0, 1, 0]},
        ),
        "classify_commutative": (
            ["classify"],
            {"nm": [0, 0, 0, 0, 0, 0]},
        ),
        "stabilizer_z_axis": (
            ["stabilizer", "--gamma", "1,0.5"],
            {"nm": [0, 0, 1, 0, 0, 0]},
        ),
        "stabilizer_isotropic": (
            ["stabilizer", "--z", "2,-1"],
            {"nm": [1, 0, 0, 0, 1, 0]},
        ),
        "stabilizer_sampled": (
            ["stabilizer", "--count", "2", "--seed", "7"],
            {"nm": [0.3, -0.2, 1.1, 0.1, 0.4, -0.5]},
        ),
        "reduce_real": (
            ["reduce"],
            {"nm": [1, 0, 0, 0, 0, 0]},
        ),
        "reduce_scaled_plane": (
            ["reduce"],
            {"nm": list(K_reduce.real) + list(K_reduce.imag)},
        ),
        "factor_pure_boost": (
            ["factor"],
            {"spinor": [math.cosh(0.6), 0, 0, 0, 0, 0, 0, math.sinh(0.6)]},
        ),
        "factor_generic": (
            ["factor"],
            # rotation(0.8, z) composed with boost(1.0, x), written out as reals
            {"spinor": _generic_spinor_reals()},
        ),
        "factor_isotropic": (
            ["factor"],
            {"spinor": [1, 0, 0, 0.5, 0, 0.5, 0, 0]},
        ),
        "constitutive_basic": (
            [
                "constitutive",
                "--dual-check", repr(math.pi / 2),
                "--dual-check", repr(math.pi / 4),
            ],
            {"E": [1, 0, 0], "B": [0, 0, 0], "nm": [0.1, 0, 0, 0, 0, 0]},
        ),
        "dual_scan_4": (
            ["dual-scan", "--steps", "4"],
            {"E": [1, 0, 0], "B": [0, 0.2, 0.1], "nm": [0.1, 0, 0, 0, 0.05, 0]},
        ),
    }


def _generic_spinor_reals():
    from ncframe.group import spinor_compose, spinor_from_boost, spinor_from_rotation

    b = spinor_compose(spinor_from_rotation(0.8, [0, 0, 1.0]), spinor_from_boost(1.0, [1.0, 0, 0]))
    return [b.n0, b.m0, *b.n, *b.m]


def run_cli(argv, doc, tmp_path, capsys):
    infile = tmp_path / "input.json"
    infile.write_text(json.dumps(doc))
    code = main([*argv, "--in", str(infile)])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def assert_json_close(got, want, path=""):
    if isinstance(want, dict):
        assert isinstance(got, dict) and set(got) == set(want), f"{path}: keys differ"
        for k in want:
            assert_json_close(got[k], want[k], f"{path}.{k}")
    elif isinstance(want, list):
        assert isinstance(got, list) and len(got) == len(want), f"{path}: length differs"
        for i, (g, w) in enumerate(zip(got, want)):
            assert_json_close(g, w, f"{path}[{i}]")
    elif isinstance(want, bool) or want is None or isinstance(want, str):
        assert got == want, f"{path}: {got!r} != {want!r}"
    else:
        assert abs(got - want) <= 1e-12 + 1e-9 * abs(want), f"{path}: {got!r} != {want!r}"


@pytest.mark.parametrize("name", sorted(golden_cases()))
def test_golden(name, tmp_path, capsys):
    golden_file = GOLDEN_DIR / f"{name}.json"
    golden = json.loads(golden_file.read_text())
    code, out = run_cli(golden["argv"], golden["input"], tmp_path, capsys)
    assert code == golden["exit_code"]
    assert_json_close(out, golden["output"], name)


class TestExitCodes:
    def test_malformed_json(self, tmp_path, capsys):
        infile = tmp_path / "bad.json"
        infile.write_text("{not json")
        assert main(["classify", "--in", str(infile)]) == 2

    def test_missing_field(self, tmp_path, capsys):
        code, _ = run_cli(["classify"], {"wrong": 1}, tmp_path, capsys)
        assert code == 2

    def test_non_finite_input(self, tmp_path, capsys):
        infile = tmp_path / "inf.json"
        infile.write_text('{"nm": [1e999, 0, 0, 0, 0, 0]}')
        assert main(["classify", "--in", str(infile)]) == 2

    def test_not_antisymmetric(self, tmp_path, capsys):
        theta = np.eye(4).tolist()
        code, _ = run_cli(["classify"], {"theta": theta}, tmp_path, capsys)
        assert code == 3

    def test_stabilizer_zero_k(self, tmp_path, capsys):
        code, _ = run_cli(["stabilizer"], {"nm": [0, 0, 0, 0, 0, 0]}, tmp_path, capsys)
        assert code == 4

    def test_reduce_isotropic(self, tmp_path, capsys):
        code, _ = run_cli(["reduce"], {"nm": [1, 0, 0, 0, 1, 0]}, tmp_path, capsys)
        assert code == 5

    def test_reduce_commutative(self, tmp_path, capsys):
        code, _ = run_cli(["reduce"], {"nm": [0, 0, 0, 0, 0, 0]}, tmp_path, capsys)
        assert code == 5

    def test_factor_constraint_violation(self, tmp_path, capsys):
        code, _ = run_cli(["factor"], {"spinor": [2, 0, 0, 0, 0, 0, 0, 0]}, tmp_path, capsys)
        assert code == 6

    def test_dual_scan_too_few_steps(self, tmp_path, capsys):
        doc = {"E": [1, 0, 0], "B": [0, 0, 0], "nm": [0.1, 0, 0, 0, 0, 0]}
        code, _ = run_cli(["dual-scan", "--steps", "3"], doc, tmp_path, capsys)
        assert code == 2

    def test_stabilizer_parameter_family_mismatch(self, tmp_path, capsys):
        code, _ = run_cli(["stabilizer", "--z", "1,0"], {"nm": [0, 0, 1, 0, 0, 0]}, tmp_path, capsys)
        assert code == 2
        code, _ = run_cli(["stabilizer", "--gamma", "1,0"], {"nm": [1, 0, 0, 0, 1, 0]}, tmp_path, capsys)
        assert code == 2


class TestBehavior:
    def test_dual_scan_32_has_exactly_four_minima(self, tmp_path, capsys):
        doc = {"E": [1, 0.2, 0], "B": [0, 0.3, 0.1], "nm": [0.08, 0, 0.02, 0, 0.05, 0.01]}
        code, out = run_cli(["dual-scan", "--steps", "32"], doc, tmp_path, capsys)
        assert code == 0
        small = [row for row in out["scan"] if row["residual"] < 1e-10]
        assert len(small) == 4
        assert all(row["expected_invariant"] for row in small)

    def test_stabilizer_sampling_deterministic(self, tmp_path, capsys):
        doc = {"nm": [0.3, -0.2, 1.1, 0.1, 0.4, -0.5]}
        code1, out1 = run_cli(["stabilizer", "--count", "3", "--seed", "11"], doc, tmp_path, capsys)
        code2, out2 = run_cli(["stabilizer", "--count", "3", "--seed", "11"], doc, tmp_path, capsys)
        assert code1 == code2 == 0
        assert out1 == out2
        _, out3 = run_cli(["stabilizer", "--count", "3", "--seed", "12"], doc, tmp_path, capsys)
        assert out3["elements"][0]["gamma"] != out1["elements"][0]["gamma"]

    def test_text_format(self, tmp_path, capsys):
        infile = tmp_path / "input.json"
        infile.write_text(json.dumps({"nm": [1, 0, 0, 0, 0, 0]}))
        code = main(["classify", "--in", str(infile), "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        assert "class = " in out and '"NonIsotropic"' in out

    def test_stdin_input(self, tmp_path):
        result = subprocess.run(
            [sys.executable, "-m", "ncframe.cli", "classify"],
            input='{"nm": [1, 0, 0, 0, 0, 0]}',
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert json.loads(result.stdout)["class"] == "NonIsotropic"

    def test_float_precision_roundtrip(self, tmp_path, capsys):
        # serialized doubles parse back bit-identically
        doc = {"nm": [0.1, 0.2, 0.30000000000000004, -1.0 / 3.0, 7e-13, 0]}
        _, out = run_cli(["classify"], doc, tmp_path, capsys)
        got = [re for re, im in out["K"]] + [im for re, im in out["K"]]
        assert got == doc["nm"]


def _regen():
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, (argv, doc) in golden_cases().items():
        proc = subprocess.run(
            [sys.executable, "-m", "ncframe.cli", *argv],
            input=json.dumps(doc),
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            raise SystemExit(f"{name}: exit {proc.returncode}\n{proc.stderr}")
        golden = {
            "argv": argv,
            "input": doc,
            "exit_code": proc.returncode,
            "output": json.loads(proc.stdout),
        }
        (GOLDEN_DIR / f"{name}.json").write_text(json.dumps(golden, indent=1) + "\n")
        print(f"wrote golden/{name}.json")


if __name__ == "__main__":
    if "--regen" in sys.argv:
        _regen()
    else:
        raise SystemExit("usage: python tests/test_cli.py --regen")
