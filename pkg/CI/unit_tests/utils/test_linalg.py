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
Test the linear algebra helpers.
"""
import numpy as np
import pytest

from qsdsuite.utils.exceptions import DimensionError, NotNormalizedError, NotUnitaryError
from qsdsuite.utils.linalg import (
    as_state,
    as_unitary,
    check_unitary,
    cosine_sine_decompose,
    direct_sum,
    eig_unitary,
    kron,
    kron_factor,
    num_qubits,
    phase_aligned_distance,
    random_state,
    random_unitary,
)


class TestValidation:
    """Test dimension, unitarity and normalization checks."""

    def test_num_qubits(self):
        """
        Test num_qubits on powers of two and other dimensions.

        Returns
        -------
        Powers of two give their exponent, anything else raises.
        """
        assert num_qubits(1) == 0
        assert num_qubits(8) == 3
        with pytest.raises(DimensionError):
            num_qubits(6)
        with pytest.raises(DimensionError):
            num_qubits(0)

    def test_check_unitary(self):
        """
        Test the unitarity check on a random unitary and a scaled identity.
        """
        assert check_unitary(random_unitary(3, seed=1))
        assert not check_unitary(2 * np.eye(4))

    def test_as_unitary(self):
        """
        Test that as_unitary rejects bad shapes and non-unitary matrices.
        """
        u = random_unitary(2, seed=2)
        np.testing.assert_array_equal(as_unitary(u), u)
        with pytest.raises(NotUnitaryError):
            as_unitary(2 * np.eye(2))
        with pytest.raises(DimensionError):
            as_unitary(np.eye(3))
        with pytest.raises(DimensionError):
            as_unitary(np.ones((2, 4)))

    def test_as_state(self):
        """
        Test that as_state rejects unnormalized vectors and odd lengths.
        """
        psi = random_state(3, seed=0)
        np.testing.assert_allclose(as_state(psi), psi)
        with pytest.raises(NotNormalizedError):
            as_state([1, 1])
        with pytest.raises(DimensionError):
            as_state([1, 0, 0])


class TestProducts:
    """Test the tensor product conventions."""

    def test_kron_order(self):
        """
        Test that the first factor acts on qubit 0, the most significant one.

        Returns
        -------
        X on qubit 0 maps |00> (index 0) to |10> (index 2).
        """
        x = np.array([[0, 1], [1, 0]])
        state = np.zeros(4)
        state[0] = 1
        result = kron(x, np.eye(2)) @ state
        assert result[2] == 1

    def test_direct_sum(self):
        """
        Test that the direct sum is block diagonal.
        """
        a = random_unitary(1, seed=3)
        b = random_unitary(1, seed=4)
        m = direct_sum(a, b)
        np.testing.assert_array_equal(m[:2, :2], a)
        np.testing.assert_array_equal(m[2:, 2:], b)
        np.testing.assert_array_equal(m[:2, 2:], np.zeros((2, 2)))

    def test_kron_factor(self):
        """
        Test splitting a tensor product back into its factors.
        """
        a = random_unitary(1, seed=5)
        b = random_unitary(1, seed=6)
        first, second = kron_factor(kron(a, b))
        np.testing.assert_allclose(kron(first, second), kron(a, b), atol=1e-12)
        with pytest.raises(DimensionError):
            kron_factor(np.eye(8))


class TestDecompositions:
    """Test the matrix decompositions."""

    def test_eig_unitary_degenerate(self):
        """
        Test diagonalization of a unitary with doubly degenerate eigenvalues.

        Returns
        -------
        The eigenvectors are unitary and rebuild the matrix.
        """
        v = random_unitary(2, seed=7)
        u = v @ np.diag([1, 1, -1, -1]) @ v.conj().T
        eigenvalues, vectors = eig_unitary(u)
        assert check_unitary(vectors)
        np.testing.assert_allclose(np.abs(eigenvalues), 1, atol=1e-12)
        rebuilt = vectors @ np.diag(eigenvalues) @ vectors.conj().T
        np.testing.assert_allclose(rebuilt, u, atol=1e-10)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_cosine_sine_decompose(self, n):
        """
        Test the cosine-sine decomposition of random unitaries.

        Parameters
        ----------
        n : int
                Number of qubits.
        """
        u = random_unitary(n, seed=n)
        result = cosine_sine_decompose(u)
        np.testing.assert_allclose(result.reassemble(), u, atol=1e-10)
        for block in (result.a1, result.b1, result.a2, result.b2):
            assert check_unitary(block)
        assert result.thetas.shape == (2 ** (n - 1),)

    def test_cosine_sine_odd_dimension(self):
        """
        Test that odd dimensions are rejected.
        """
        with pytest.raises(DimensionError):
            cosine_sine_decompose(np.eye(3))


class TestRandomAndDistance:
    """Test the random generators and the phase aligned distance."""

    def test_random_unitary_seeded(self):
        """
        Test that equal seeds give equal unitaries.
        """
        first = random_unitary(2, seed=3)
        np.testing.assert_array_equal(first, random_unitary(2, seed=3))
        assert check_unitary(random_unitary(3, seed=11))

    def test_phase_aligned_distance(self):
        """
        Test that a global phase is found and removed.
        """
        u = random_unitary(2, seed=1)
        phase, err = phase_aligned_distance(np.exp(0.3j) * u, u)
        assert phase == pytest.approx(0.3)
        assert err < 1e-12
