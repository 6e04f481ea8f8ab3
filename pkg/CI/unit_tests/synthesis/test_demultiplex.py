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
Test the demultiplexing module.
"""
import numpy as np
import pytest

from qsdsuite.synthesis import demultiplex
from qsdsuite.utils.exceptions import DimensionError
from qsdsuite.utils.linalg import check_unitary, direct_sum, kron, random_unitary


def reassemble(u0: np.ndarray, u1: np.ndarray) -> np.ndarray:
    """(I ⊗ v) (D ⊕ D^dag) (I ⊗ w) from the demultiplexed factors."""
    v, rz_angles, w = demultiplex(u0, u1)
    assert check_unitary(v)
    assert check_unitary(w)
    d = np.diag(np.exp(-0.5j * rz_angles))
    eye = np.eye(2)
    return kron(eye, v) @ direct_sum(d, d.conj()) @ kron(eye, w)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_reassemble(n):
    """
    Test u0 ⊕ u1 = (I ⊗ v) (D ⊕ D^dag) (I ⊗ w).

    Parameters
    ----------
    n : int
            Qubits of each cofactor.
    """
    u0 = random_unitary(n, seed=2 * n)
    u1 = random_unitary(n, seed=2 * n + 1)
    np.testing.assert_allclose(reassemble(u0, u1), direct_sum(u0, u1), atol=1e-10)


def test_identity_and_pauli_x():
    """
    Test the cofactors (I, X), where u0 u1^dag = X has the spectrum +-1.
    """
    eye = np.eye(2, dtype=complex)
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    np.testing.assert_allclose(reassemble(eye, x), direct_sum(eye, x), atol=1e-10)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_degenerate_spectra(n):
    """
    Test u0 u1^dag = I and a doubly degenerate +-1 spectrum.

    Parameters
    ----------
    n : int
            Qubits of each cofactor.
    """
    u1 = random_unitary(n, seed=10 + n)
    basis = random_unitary(n, seed=20 + n)
    signs = np.where(np.arange(2**n) % 2 == 0, 1.0, -1.0)
    reflection = basis @ np.diag(signs) @ basis.conj().T
    for u0 in (u1, reflection @ u1):
        np.testing.assert_allclose(reassemble(u0, u1), direct_sum(u0, u1), atol=1e-9)


def test_equal_cofactors():
    """
    Test that equal cofactors give a vanishing multiplexed Rz.
    """
    u = random_unitary(2, seed=9)
    _, rz_angles, _ = demultiplex(u, u)
    np.testing.assert_allclose(rz_angles, 0.0, atol=1e-10)


def test_shape_mismatch():
    """
    Test that cofactors of different size are rejected.
    """
    with pytest.raises(DimensionError):
        demultiplex(np.eye(2), np.eye(4))
