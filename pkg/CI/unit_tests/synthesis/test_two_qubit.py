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
Test the two-qubit synthesis module.
"""
import numpy as np
import pytest

from qsdsuite.simulation import circuit_to_unitary
from qsdsuite.synthesis import kak, synth_two_qubit, two_qubit_up_to_diagonal
from qsdsuite.synthesis import two_qubit
from qsdsuite.synthesis.two_qubit import canonical_matrix
from qsdsuite.utils.exceptions import DimensionError, SynthesisFailure
from qsdsuite.utils.linalg import check_unitary, kron, kron_factor, random_unitary
from qsdsuite.utils.meta_functions import int_to_bits
from qsdsuite.utils.testing import circuit_error


def cnot_matrix() -> np.ndarray:
    return np.eye(4, dtype=complex)[[0, 1, 3, 2]]


def swap_matrix() -> np.ndarray:
    return np.eye(4, dtype=complex)[[0, 2, 1, 3]]


def dressed(core: np.ndarray, seed: int) -> np.ndarray:
    """core between random one-qubit layers."""
    before = kron(random_unitary(1, seed), random_unitary(1, seed + 1))
    after = kron(random_unitary(1, seed + 2), random_unitary(1, seed + 3))
    return after @ core @ before


class TestKak:
    """Test the canonical decomposition."""

    @pytest.mark.parametrize("seed", range(5))
    def test_random(self, seed):
        """
        Test that random unitaries are rebuilt with local outer factors.

        Parameters
        ----------
        seed : int
                Seed of the random unitary.
        """
        u = random_unitary(2, seed)
        decomposition = kak(u)
        np.testing.assert_allclose(decomposition.matrix(), u, atol=1e-9)
        for outer in (decomposition.left, decomposition.right):
            a, b = kron_factor(outer)
            np.testing.assert_allclose(kron(a, b), outer, atol=1e-9)
            assert check_unitary(outer)

    def test_shape(self):
        """
        Test that only 4x4 matrices are accepted.
        """
        with pytest.raises(DimensionError):
            kak(np.eye(2))


class TestSynthTwoQubit:
    """Test the exact two-qubit circuits."""

    @pytest.mark.parametrize("seed", range(10))
    def test_random(self, seed):
        """
        Test count and exactness, phase included.
        """
        u = random_unitary(2, 20 + seed)
        circuit = synth_two_qubit(u)
        assert circuit.counts().cnot == 3
        assert circuit_error(circuit, u) < 1e-9

    def test_product(self):
        """
        Test that a tensor product needs no CNOT.
        """
        u = kron(random_unitary(1, 1), random_unitary(1, 2))
        circuit = synth_two_qubit(u)
        assert circuit.counts().cnot == 0
        assert circuit_error(circuit, u) < 1e-9
        # P = -I in the magic basis
        circuit = synth_two_qubit(1j * u)
        assert circuit.counts().cnot == 0
        assert circuit_error(circuit, 1j * u) < 1e-9

    def test_cnot(self):
        """
        Test that a CNOT costs one CNOT and is rebuilt exactly.
        """
        circuit = synth_two_qubit(cnot_matrix())
        assert circuit.counts().cnot == 1
        assert circuit_error(circuit, cnot_matrix()) < 1e-9

    @pytest.mark.parametrize("seed", range(5))
    def test_cnot_class(self, seed):
        """
        Test CZ and CNOTs between one-qubit layers.

        Parameters
        ----------
        seed : int
                Seed of the one-qubit layers.
        """
        for core in (cnot_matrix(), np.diag([1, 1, 1, -1]).astype(complex)):
            u = dressed(core, 10 * seed)
            circuit = synth_two_qubit(u)
            assert circuit.counts().cnot == 1
            assert circuit_error(circuit, u) < 1e-9

    @pytest.mark.parametrize("seed", range(5))
    def test_two_cnot_class(self, seed):
        """
        Test an interaction without ZZ part, which needs two CNOTs.

        Parameters
        ----------
        seed : int
                Seed of the one-qubit layers.
        """
        u = dressed(canonical_matrix(0.3, 0.2, 0.0), 10 * seed)
        circuit = synth_two_qubit(u)
        assert circuit.counts().cnot == 2
        assert circuit_error(circuit, u) < 1e-9

    @pytest.mark.parametrize("seed", [None, 0, 1, 2])
    def test_swap(self, seed):
        """
        Test SWAP, alone and between one-qubit layers.

        Returns
        -------
        Three CNOTs, finite angles and an exact circuit. SWAP is the class where
        P = +-iI, which a test on |tr P| alone would take for a tensor product.
        """
        u = swap_matrix() if seed is None else dressed(swap_matrix(), 10 * seed)
        circuit = synth_two_qubit(u)
        assert circuit.counts().cnot == 3
        angles = [gate.angle for gate in circuit.gates if gate.angle is not None]
        assert np.all(np.isfinite(angles))
        assert circuit_error(circuit, u) < 1e-9

    def test_nan_residual(self, monkeypatch):
        """
        Test that a NaN residual is a failure rather than a match.
        """
        monkeypatch.setattr(
            two_qubit, "_with_phase", lambda u, gates: (gates, float("nan"))
        )
        with pytest.raises(SynthesisFailure):
            synth_two_qubit(random_unitary(2, 3))

    def test_relabel(self):
        """
        Test placing the operator on wires (2, 0) of a three wire circuit.

        Returns
        -------
        Wire 2 takes the role of the more significant qubit of u.
        """
        u = random_unitary(2, 7)
        circuit = synth_two_qubit(u, qubits=(2, 0), width=3)
        expected = np.zeros((8, 8), dtype=complex)
        for out in range(8):
            o0, o1, o2 = int_to_bits(out, 3)
            for inp in range(8):
                i0, i1, i2 = int_to_bits(inp, 3)
                if o1 == i1:
                    expected[out, inp] = u[2 * o2 + o0, 2 * i2 + i0]
        assert circuit_error(circuit, expected) < 1e-9

    def test_shape(self):
        with pytest.raises(DimensionError):
            synth_two_qubit(np.eye(8))


class TestUpToDiagonal:
    """Test the two-CNOT circuit up to a diagonal."""

    @pytest.mark.parametrize("seed", range(10))
    def test_random(self, seed):
        """
        Test that u = D . C with two CNOTs in C.
        """
        u = random_unitary(2, 40 + seed)
        circuit, diagonal = two_qubit_up_to_diagonal(u)
        assert circuit.counts().cnot == 2
        assert circuit.counts().phase == 0
        assert diagonal.qubits == (0, 1)
        rebuilt = diagonal.matrix() @ circuit_to_unitary(circuit)
        np.testing.assert_allclose(rebuilt, u, atol=1e-9)

    def test_wires(self):
        """
        Test the wire arguments.
        """
        circuit, diagonal = two_qubit_up_to_diagonal(random_unitary(2, 3), (1, 2), 3)
        assert circuit.width == 3
        assert diagonal.qubits == (1, 2)
        assert all(0 not in gate.qubits for gate in circuit.gates)
