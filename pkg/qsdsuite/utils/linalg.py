"""
QSDSuite: A Zincwarecode package.

License
-------
This program and the accompanying materials are made available under the terms
of the Eclipse Public License v2.0 which accompanies this distribution, and is
available at https://www.eclipse.org/legal/epl-v20.html

SPDX-License-Identifier: EPL-2.0

Copyright Contributors to the Zincwarecode Project.

Summary
-------
Dense complex linear algebra used by the synthesis algorithms.

Matrices are plain complex numpy arrays. Qubit 0 is the most significant bit of a
basis index, so the matrix of a block multiplexor selected by qubit 0 is a direct
sum of contiguous blocks.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import scipy.linalg

from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import (
    DimensionError,
    NotNormalizedError,
    NotUnitaryError,
    NumericalFailure,
)

log = logging.getLogger(__name__)


def num_qubits(dim: int) -> int:
    """
    Number of qubits spanned by a dimension.

    Parameters
    ----------
    dim : int
            Dimension of the Hilbert space.

    Returns
    -------
    n : int
            The n with 2**n == dim.
    """
    if dim < 1 or dim & (dim - 1):
        raise DimensionError(f"Dimension {dim} is not a power of two")
    return dim.bit_length() - 1


def unitary_deviation(m: np.ndarray) -> float:
    """Max-entry magnitude of m^dag m - I."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"Expected a square matrix, got shape {m.shape}")
    return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))


def check_unitary(m: np.ndarray, tol: Optional[float] = None) -> bool:
    """
    Check whether a matrix is unitary.

    Parameters
    ----------
    m : np.ndarray
            Square complex matrix.
    tol : float
            Max-entry tolerance on m^dag m - I, defaults to config.tol_unitary.

    Returns
    -------
    bool
    """
    if tol is None:
        tol = config.tol_unitary
    return unitary_deviation(m) <= tol


def as_unitary(m: np.ndarray, tol: Optional[float] = None) -> np.ndarray:
    """
    Validate an operator and return it as a complex array.

    The dimension must be a power of two and the matrix must pass check_unitary.
    """
    if tol is None:
        tol = config.tol_unitary
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"Expected a square matrix, got shape {m.shape}")
    num_qubits(m.shape[0])
    if not np.all(np.isfinite(m)):
        raise ValueError("Matrix contains NaN or Inf entries")
    deviation = unitary_deviation(m)
    if not deviation <= tol:
        raise NotUnitaryError(deviation, tol)
    return m


def as_state(psi: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Validate a state vector of power-of-two length and unit norm."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    num_qubits(psi.shape[0])
    norm = np.linalg.norm(psi)
    if not abs(norm**2 - 1.0) <= tol:
        raise NotNormalizedError(f"State has squared norm {norm**2:.12f}")
    return psi


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Tensor product with a on the more significant qubits.

    Entry (r * dim_b + r', c * dim_b + c') of the result is a[r, c] * b[r', c'].
    """
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def direct_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Block diagonal a ⊕ b, i.e. a multiplexor selected by the leading qubit."""
    return scipy.linalg.block_diag(a, b).astype(complex)


def kron_factor(m: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Split a 4x4 operator into the nearest a ⊗ b.

    Realigns m so that a tensor product becomes a rank one matrix and keeps the
    leading singular triplet.

    Returns
    -------
    a, b : np.ndarray
            2x2 factors with m ≈ kron(a, b). For a unitary input each factor is
            unitary up to a scalar of modulus one.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise DimensionError(f"Expected a 4x4 matrix, got shape {m.shape}")
    realigned = m.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    left, values, right = np.linalg.svd(realigned)
    scale = np.sqrt(values[0])
    a = scale * left[:, 0].reshape(2, 2)
    b = scale * right[0, :].reshape(2, 2)
    return a, b


def eig_unitary(u: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Diagonalize a unitary matrix.

    The complex Schur form of a normal matrix is diagonal, so the Schur vectors
    are an orthonormal eigenbasis even inside degenerate clusters.

    Parameters
    ----------
    u : np.ndarray
            Unitary matrix.

    Returns
    -------
    eigenvalues : np.ndarray
            Unit-modulus eigenvalues.
    eigenvectors : np.ndarray
            Unitary V with u = V diag(eigenvalues) V^dag.
    """
    u = np.asarray(u, dtype=complex)
    t, z = scipy.linalg.schur(u, output="complex")
    eigenvalues = np.diag(t).copy()
    # project back onto the unit circle, Schur is exact up to rounding
    eigenvalues /= np.abs(eigenvalues)
    residual = float(np.max(np.abs(z @ np.diag(eigenvalues) @ z.conj().T - u)))
    if not residual <= config.tol_recon:
        raise NumericalFailure("Unitary diagonalization", residual)
    return eigenvalues, z


@dataclass(frozen=True)
class CsdResult:
    """
    Cosine-sine decomposition u = (a1 ⊕ b1) · center(thetas) · (a2 ⊕ b2).

    center(thetas) is [[C, -S], [S, C]] with C = diag(cos(theta / 2)) and
    S = diag(sin(theta / 2)).
    """

    a1: np.ndarray
    b1: np.ndarray
    a2: np.ndarray
    b2: np.ndarray
    thetas: np.ndarray

    def center(self) -> np.ndarray:
        """Return the cosine-sine center matrix."""
        c = np.diag(np.cos(self.thetas / 2))
        s = np.diag(np.sin(self.thetas / 2))
        return np.block([[c, -s], [s, c]]).astype(complex)

    def reassemble(self) -> np.ndarray:
        """Return the product of the three factors."""
        return direct_sum(self.a1, self.b1) @ self.center() @ direct_sum(self.a2, self.b2)


def cosine_sine_decompose(u: np.ndarray) -> CsdResult:
    """
    Cosine-sine decomposition of an even dimensional unitary.

    Uses LAPACK's CS decomposition through scipy.linalg.cossin, whose center block
    carries -S in the upper right corner. scipy's angles are half of the ones
    stored here.

    Parameters
    ----------
    u : np.ndarray
            Unitary on n >= 1 qubits.

    Returns
    -------
    CsdResult
    """
    u = np.asarray(u, dtype=complex)
    dim = u.shape[0]
    if dim < 2 or dim % 2:
        raise DimensionError(f"CSD needs an even dimension, got {dim}")
    half = dim // 2
    (a1, b1), theta, (a2, b2) = scipy.linalg.cossin(u, p=half, q=half, separate=True)
    thetas = 2 * np.asarray(theta, dtype=float)
    result = CsdResult(a1=a1, b1=b1, a2=a2, b2=b2, thetas=thetas)
    residual = float(np.max(np.abs(result.reassemble() - u)))
    if not residual <= config.tol_recon:
        raise NumericalFailure("Cosine-sine decomposition", residual)
    return result


def random_unitary(n: int, seed: int) -> np.ndarray:
    """
    Haar-random unitary on n qubits.

    The QR factor of a complex Ginibre matrix, with column phases fixed so that
    the triangular factor has a real positive diagonal.
    """
    if n < 1:
        raise ValueError("random_unitary needs at least one qubit")
    rng = np.random.default_rng(seed)
    dim = 2**n
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    z /= np.sqrt(2)
    q, r = scipy.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_state(n: int, seed: int) -> np.ndarray:
    """Random n-qubit state, a normalized complex Gaussian vector."""
    rng = np.random.default_rng(seed)
    dim = 2**n
    psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return psi / np.linalg.norm(psi)


def phase_aligned_distance(a: np.ndarray, b: np.ndarray) -> Tuple[float, float]:
    """
    Distance between two operators after removing the best global phase.

    Parameters
    ----------
    a, b : np.ndarray
            Arrays of equal shape.

    Returns
    -------
    phase : float
            arg(tr(b^dag a)), 0 when the overlap vanishes.
    err : float
            Max-entry magnitude of a - exp(i phase) b.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionError(f"Shape mismatch {a.shape} vs {b.shape}")
    overlap = np.vdot(b, a)
    phase = float(np.angle(overlap)) if abs(overlap) > 1e-300 else 0.0
    err = float(np.max(np.abs(a - np.exp(1j * phase) * b))) if a.size else 0.0
    return phase, err
