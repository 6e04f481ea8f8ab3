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
Test the state preparation module.
"""
import numpy as np
import pytest

from qsdsuite.simulation import simulate, state_fidelity
from qsdsuite.synthesis import disentangle_lsb, prepare_state
from qsdsuite.synthesis import reference_counts
from qsdsuite.utils.exceptions import NotNormalizedError
from qsdsuite.utils.linalg import random_state
from qsdsuite.utils.meta_functions import bits_to_int


def basis(bits) -> np.ndarray:
    """Basis state of a bit list, qubit 0 first."""
    state = np.zeros(2 ** len(bits), dtype=complex)
    state[bits_to_int(bits)] = 1.0
    return state


class TestPrepareState:
    """Test prepare_state."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_random_state(self, n):
        """
        Test count and exactness on random states.

        Parameters
        ----------
        n : int
                Number of qubits.

        Returns
        -------
        2**(n+1) - 2n - 2 CNOTs, two below the state preparation bound, and the
        state prepared exactly including its global phase.
        """
        psi = random_state(n, seed=n)
        circuit = prepare_state(psi)
        assert circuit.counts().cnot == 2 ** (n + 1) - 2 * n - 2
        assert circuit.counts().cnot == reference_counts.state_prep_bound(n) - 2
        np.testing.assert_allclose(simulate(circuit, basis([0] * n)), psi, atol=1e-10)

    def test_target_bits(self):
        """
        Test a start from another basis state, as a string and as a list.
        """
        psi = random_state(3, seed=11)
        for target in ("101", [1, 0, 1]):
            circuit = prepare_state(psi, target)
            prepared = simulate(circuit, basis([1, 0, 1]))
            np.testing.assert_allclose(prepared, psi, atol=1e-10)
            assert state_fidelity(circuit, psi, [1, 0, 1]) == pytest.approx(1.0)

    def test_basis_state(self):
        """
        Test that a basis state needs no entangler.
        """
        psi = basis([0, 1, 1])
        circuit = prepare_state(psi)
        assert circuit.counts().cnot == 0
        np.testing.assert_allclose(simulate(circuit, basis([0, 0, 0])), psi, atol=1e-12)

    def test_product_state(self):
        """
        Test that a product state needs no entangler.
        """
        psi = np.kron(random_state(1, seed=3), np.array([0, 1]))
        circuit = prepare_state(psi)
        assert circuit.counts().cnot == 0
        np.testing.assert_allclose(simulate(circuit, basis([0, 0])), psi, atol=1e-12)

    def test_errors(self):
        """
        Test invalid states and target bits.
        """
        with pytest.raises(NotNormalizedError):
            prepare_state(np.array([1.0, 1.0]))
        with pytest.raises(ValueError):
            prepare_state(basis([0, 0]), [0])
        with pytest.raises(ValueError):
            prepare_state(basis([0, 0]), "0a")


class TestDisentangle:
    """Test disentangle_lsb."""

    @pytest.mark.parametrize("target", [0, 1])
    def test_residual(self, target):
        """
        Test that the last qubit ends up in the requested basis state.

        Parameters
        ----------
        target : int
                Basis state of the last qubit.
        """
        psi = random_state(3, seed=5)
        circuit, residual = disentangle_lsb(psi, target)
        assert circuit.counts().cnot == 2 ** 3 - 2
        expected = np.kron(residual, basis([target]))
        np.testing.assert_allclose(simulate(circuit, psi), expected, atol=1e-10)
        assert np.linalg.norm(residual) == pytest.approx(1.0)

    def test_wider_circuit(self):
        """
        Test the width argument.
        """
        circuit, _ = disentangle_lsb(random_state(2, seed=6), width=4)
        assert circuit.width == 4

    def test_no_qubits(self):
        """
        Test that a scalar cannot be disentangled.
        """
        with pytest.raises(ValueError):
            disentangle_lsb(np.array([1.0]))
