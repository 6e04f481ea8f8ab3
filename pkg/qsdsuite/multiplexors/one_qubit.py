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
One-qubit analysis: Euler angles and Bloch sphere rotations.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import Gate
from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import DimensionError


@dataclass(frozen=True)
class ZyzAngles:
    """
    Angles of u = exp(i phi) Rz(alpha) Ry(beta) Rz(gamma).

    Attributes
    ----------
    phi : float
            Global phase.
    alpha : float
            Last z rotation in time.
    beta : float
            y rotation, in [0, pi].
    gamma : float
            First z rotation in time, 0 whenever beta is 0 or pi.
    """

    phi: float
    alpha: float
    beta: float
    gamma: float

    def matrix(self) -> np.ndarray:
        """Rebuild the 2x2 unitary."""
        rz_a = np.diag([np.exp(-0.5j * self.alpha), np.exp(0.5j * self.alpha)])
        c, s = np.cos(self.beta / 2), np.sin(self.beta / 2)
        ry_b = np.array([[c, s], [-s, c]], dtype=complex)
        rz_g = np.diag([np.exp(-0.5j * self.gamma), np.exp(0.5j * self.gamma)])
        return np.exp(1j * self.phi) * rz_a @ ry_b @ rz_g


def zyz_angles(u: np.ndarray, tol: Optional[float] = None) -> ZyzAngles:
    """
    Euler decomposition of a one-qubit unitary.

    Parameters
    ----------
    u : np.ndarray
            2x2 unitary.
    tol : float
            Magnitude below which a matrix entry is treated as zero when deciding
            whether beta is degenerate, defaults to config.tol_zero.

    Returns
    -------
    ZyzAngles
    """
    if tol is None:
        tol = config.tol_zero
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise DimensionError(f"Expected a 2x2 matrix, got shape {u.shape}")
    phi = float(np.angle(np.linalg.det(u))) / 2
    v = u * np.exp(-1j * phi)
    x, y = v[0, 0], v[0, 1]
    beta = 2 * float(np.arctan2(abs(y), abs(x)))
    if abs(y) <= tol:
        return ZyzAngles(phi=phi, alpha=-2 * float(np.angle(x)), beta=0.0, gamma=0.0)
    if abs(x) <= tol:
        return ZyzAngles(phi=phi, alpha=-2 * float(np.angle(y)), beta=np.pi, gamma=0.0)
    alpha = -float(np.angle(x)) - float(np.angle(y))
    gamma = -float(np.angle(x)) + float(np.angle(y))
    return ZyzAngles(phi=phi, alpha=alpha, beta=beta, gamma=gamma)


def zyz_gates(u: np.ndarray, qubit: int, with_phase: bool = True) -> List[Gate]:
    """
    Gates implementing a one-qubit unitary on a wire.

    Rotations with a zero angle are left out.

    Parameters
    ----------
    u : np.ndarray
            2x2 unitary, a unit modulus multiple of a unitary is accepted when
            with_phase is False.
    qubit : int
            Wire to act on.
    with_phase : bool
            Emit the global phase as a PHASE gate.
    """
    angles = zyz_angles(u)
    gates = []
    for gate in (
        Gate.rz(qubit, angles.gamma),
        Gate.ry(qubit, angles.beta),
        Gate.rz(qubit, angles.alpha),
    ):
        if gate.angle != 0.0:
            gates.append(gate)
    if with_phase and angles.phi != 0.0:
        gates.append(Gate.phase(angles.phi))
    return gates


def zyz_circuit(u: np.ndarray, qubit: int = 0, width: int = 1) -> Circuit:
    """Circuit of a one-qubit unitary, global phase included."""
    return Circuit(width, tuple(zyz_gates(u, qubit)))


def bloch_to_zero(
    psi: np.ndarray, target: int = 0, tol: Optional[float] = None
) -> Tuple[float, float, complex]:
    """
    Angles that rotate a two-amplitude block onto a basis state.

    Ry(-theta) Rz(-phi) psi = residual |target>. The block may be a scaled
    sub-vector of a larger state, in which case |residual| is its norm.

    Parameters
    ----------
    psi : np.ndarray
            Two amplitudes (a, b).
    target : int
            Basis state 0 or 1 to rotate onto.
    tol : float
            Amplitudes at most this large count as zero, defaults to
            config.tol_zero.

    Returns
    -------
    phi : float
            Relative phase arg(b) - arg(a), 0 if either amplitude vanishes.
    theta : float
            Polar angle in (-pi, pi].
    residual : complex
            Amplitude left on |target>. A vanishing block gives (0, 0, 0).
    """
    if tol is None:
        tol = config.tol_zero
    if target not in (0, 1):
        raise ValueError(f"target must be 0 or 1, got {target}")
    a, b = np.asarray(psi, dtype=complex).reshape(2)
    if abs(a) <= tol and abs(b) <= tol:
        return 0.0, 0.0, 0j
    if abs(a) > tol and abs(b) > tol:
        phi = float(np.angle(b) - np.angle(a))
    else:
        phi = 0.0
    if target == 0:
        theta = -2 * float(np.arctan2(abs(b), abs(a)))
        if theta <= -np.pi:
            theta = np.pi
    else:
        theta = 2 * float(np.arctan2(abs(a), abs(b)))

    rotated_a = a * np.exp(0.5j * phi)
    rotated_b = b * np.exp(-0.5j * phi)
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    # Ry(-theta) = [[c, -s], [s, c]]
    out = (c * rotated_a - s * rotated_b, s * rotated_a + c * rotated_b)
    return phi, theta, complex(out[target])
