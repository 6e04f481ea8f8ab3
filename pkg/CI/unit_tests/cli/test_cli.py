"""
QSDSuite: A Zincwarecode package.

License
-------
This program and the accompanying materials are made available under the terms
of the Eclipse Public License v2.0 which accompanies this distribution, and is
available at https://www.eclipse.org/legal/epl-v20.html

SPDX-License-Identifier: EPL-2.0

Copyright Contributors to the Zincwarecode Project.

Contact Information
-------------------
email: zincwarecode@gmail.com
github: https://github.com/zincware
web: https://zincwarecode.com/

Summary
-------
Test the command line.
"""
import io
import logging
import pathlib
import sys
from typing import Dict

import numpy as np
import pytest

from qsdsuite.circuit import parse_text
from qsdsuite.cli.main import build_parser, main
from qsdsuite.file_io import MatrixFile, StateFile
from qsdsuite.simulation import circuit_to_unitary, state_fidelity
from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import SynthesisFailure
from qsdsuite.utils.linalg import random_state, random_unitary


def values(text: str) -> Dict[str, str]:
    """key=value pairs of the printed report."""
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line)


@pytest.fixture
def matrix_path(tmp_path) -> pathlib.Path:
    """Random three-qubit unitary on disk."""
    path = tmp_path / "u.txt"
    MatrixFile(path).write(random_unitary(3, seed=8))
    return path


class TestSynth:
    """Test the synth command."""

    def test_default(self, matrix_path, tmp_path, capsys):
        """
        Test the optimized decomposition of an 8x8 unitary.
        """
        out = tmp_path / "c.txt"
        assert main(["synth", str(matrix_path), "--out", str(out)]) == 0
        report = values(capsys.readouterr().out)
        assert report["method"] == "qsd"
        assert report["n"] == "3"
        assert report["cnot"] == "20"
        assert float(report["recon_err"]) < 1e-6
        circuit = parse_text(out.read_text())
        u = MatrixFile(matrix_path).read()
        assert np.max(np.abs(circuit_to_unitary(circuit) - u)) < 1e-8

    @pytest.mark.parametrize(
        "flags, cnots",
        [
            (["--base", "1"], "36"),
            (["--no-a1", "--no-a2"], "24"),
            (["--no-a1"], "21"),
            (["--method", "qr"], "78"),
        ],
    )
    def test_variants(self, matrix_path, capsys, flags, cnots):
        """
        Test the method and option flags.

        Parameters
        ----------
        flags : list
                Extra arguments.
        cnots : str
                Expected CNOT count.
        """
        assert main(["synth", str(matrix_path), "--quiet"] + flags) == 0
        assert values(capsys.readouterr().out)["cnot"] == cnots

    def test_simplify_and_qasm(self, matrix_path, capsys):
        """
        Test the peephole flag with QASM output on stdout.
        """
        assert main(["synth", str(matrix_path), "--simplify", "--format", "qasm"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("OPENQASM 2.0;")
        assert int(values(out)["cnot"]) <= 20

    def test_identity(self, tmp_path, capsys):
        """
        Test that the two-qubit identity needs no CNOT.
        """
        path = tmp_path / "eye.txt"
        MatrixFile(path).write(np.eye(4))
        assert main(["synth", str(path)]) == 0
        assert values(capsys.readouterr().out)["cnot"] == "0"

    def test_one_qubit(self, tmp_path, capsys):
        """
        Test that a single qubit falls back to the one-qubit base.
        """
        path = tmp_path / "one.txt"
        MatrixFile(path).write(random_unitary(1, seed=2))
        assert main(["synth", str(path)]) == 0
        assert values(capsys.readouterr().out)["cnot"] == "0"

    def test_nearest_neighbor(self, matrix_path, tmp_path):
        """
        Test that the nn flag only emits adjacent entanglers.
        """
        out = tmp_path / "nn.txt"
        assert main(["synth", str(matrix_path), "--nn", "--out", str(out)]) == 0
        for gate in parse_text(out.read_text()).gates:
            if gate.is_entangler:
                assert abs(gate.control - gate.target) == 1


class TestExitCodes:
    """Test the mapping of errors to exit codes."""

    def test_not_unitary(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("dim 2\n1,0 1,0\n0,0 1,0\n")
        assert main(["synth", str(path)]) == 3

    def test_malformed(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("dim 2\n1,0 0,0\n")
        assert main(["synth", str(path)]) == 2

    def test_missing_file(self, tmp_path):
        assert main(["synth", str(tmp_path / "missing.txt")]) == 2

    def test_bad_bench_range(self):
        assert main(["bench", "--n-min", "1", "--n-max", "2"]) == 2

    def test_not_normalized(self, tmp_path):
        path = tmp_path / "psi.txt"
        path.write_text("dim 2\n1,0\n1,0\n")
        assert main(["prep", str(path)]) == 3

    def test_synthesis_failure(self, matrix_path, monkeypatch):
        def fail(*args, **kwargs):
            raise SynthesisFailure("recon_err=nan")

        monkeypatch.setattr(sys.modules["qsdsuite.cli.main"], "synth_qsd", fail)
        assert main(["synth", str(matrix_path)]) == 4


class TestVerify:
    """Test the verify command."""

    def test_match_and_phase(self, matrix_path, tmp_path, capsys):
        """
        Test an exact match, then the same circuit against a phase shifted matrix.
        """
        circuit_path = tmp_path / "c.txt"
        main(["synth", str(matrix_path), "--out", str(circuit_path)])
        capsys.readouterr()

        assert main(["verify", str(circuit_path), str(matrix_path)]) == 0
        report = values(capsys.readouterr().out)
        assert report["equal_exact"] == "true"

        shifted = tmp_path / "shifted.txt"
        MatrixFile(shifted).write(np.exp(0.5j) * MatrixFile(matrix_path).read())
        assert main(["verify", str(circuit_path), str(shifted)]) == 1
        report = values(capsys.readouterr().out)
        assert report["equal_exact"] == "false"
        assert report["equal_up_to_phase"] == "true"
        assert float(report["phase"]) == pytest.approx(-0.5, abs=1e-8)

    def test_width_mismatch(self, tmp_path):
        circuit_path = tmp_path / "c.txt"
        circuit_path.write_text("qubits 1\nry 0 0.5\n")
        matrix_path = tmp_path / "eye.txt"
        MatrixFile(matrix_path).write(np.eye(4))
        assert main(["verify", str(circuit_path), str(matrix_path)]) == 3

    def test_parse_error(self, tmp_path):
        circuit_path = tmp_path / "c.txt"
        circuit_path.write_text("qubits 1\nfoo 0\n")
        matrix_path = tmp_path / "eye.txt"
        MatrixFile(matrix_path).write(np.eye(2))
        assert main(["verify", str(circuit_path), str(matrix_path)]) == 2


def test_prep(tmp_path, capsys):
    """
    Test the prep command from a non-zero basis state.
    """
    path = tmp_path / "psi.txt"
    StateFile(path).write(random_state(3, seed=5))
    assert main(["prep", str(path), "--target", "110", "--out", str(tmp_path / "c")]) == 0
    report = values(capsys.readouterr().out)
    assert report["method"] == "prep"
    assert report["cnot"] == "8"
    assert float(report["fidelity"]) > 1 - 1e-8


def test_bench(capsys):
    """
    Test a small count table.
    """
    assert main(["bench", "--n-min", "2", "--n-max", "3", "--trials", "2"]) == 0
    out = capsys.readouterr().out
    assert "qsd_opt" in out
    assert "recursion" in out
    assert "fail" not in out


def test_report(capsys):
    """
    Test the environment report.
    """
    assert main(["report"]) == 0
    assert "numpy" in capsys.readouterr().out


def test_parser_choices():
    """
    Test that unknown methods are refused by argparse.
    """
    with pytest.raises(SystemExit):
        build_parser().parse_args(["synth", "u.txt", "--method", "csd"])


class TestLogging:
    """Test the log flags and the stderr handler."""

    @staticmethod
    def handlers():
        return [
            h
            for h in logging.getLogger("qsdsuite").handlers
            if h.get_name() == "qsdsuite-cli"
        ]

    def test_closed_stream(self, matrix_path, monkeypatch):
        """
        Test that a closed stderr of an earlier run does not break the next one.
        """
        first = io.StringIO()
        monkeypatch.setattr("sys.stderr", first)
        assert main(["synth", str(matrix_path)]) == 0
        first.close()

        second = io.StringIO()
        monkeypatch.setattr("sys.stderr", second)
        assert main(["synth", str(matrix_path), "--verbose"]) == 0
        assert second.getvalue()
        assert len(self.handlers()) == 1
        assert self.handlers()[0].stream is second

    @pytest.mark.parametrize(
        "argv, verbose, quiet",
        [
            (["synth", "u.txt"], False, False),
            (["--verbose", "synth", "u.txt"], True, False),
            (["synth", "u.txt", "--verbose"], True, False),
            (["--quiet", "synth", "u.txt"], False, True),
            (["synth", "u.txt", "--quiet"], False, True),
            (["prep", "psi.txt", "--quiet"], False, True),
            (["bench", "--verbose"], True, False),
        ],
    )
    def test_flag_position(self, argv, verbose, quiet):
        """
        Test the log flags before and after the subcommand.

        Parameters
        ----------
        argv : list
                Command line.
        verbose, quiet : bool
                Expected flags.
        """
        args = build_parser().parse_args(argv)
        assert args.verbose is verbose
        assert args.quiet is quiet

    def test_quiet_after_subcommand(self, matrix_path, capsys):
        """
        Test that --quiet after the subcommand silences the info logs.
        """
        assert main(["synth", str(matrix_path), "--quiet"]) == 0
        assert self.handlers()[0].level == logging.WARNING


def test_synth_seed(matrix_path, capsys, monkeypatch):
    """
    Test that --seed reaches the sampled verification.
    """
    monkeypatch.setattr(config, "verify_seed", 0)
    assert build_parser().parse_args(["synth", "u.txt", "--seed", "3"]).seed == 3
    assert main(["synth", str(matrix_path), "--seed", "3"]) == 0
    assert config.verify_seed == 3
    assert float(values(capsys.readouterr().out)["recon_err"]) < 1e-6


def test_prep_fidelity_matches_helper(tmp_path, capsys):
    """
    Test that prep prints the fidelity of the written circuit.
    """
    path = tmp_path / "psi.txt"
    psi = random_state(2, seed=6)
    StateFile(path).write(psi)
    out = tmp_path / "c.txt"
    assert main(["prep", str(path), "--target", "01", "--out", str(out)]) == 0
    printed = float(values(capsys.readouterr().out)["fidelity"])
    expected = state_fidelity(parse_text(out.read_text()), psi, [0, 1])
    assert printed == pytest.approx(expected, abs=1e-11)
