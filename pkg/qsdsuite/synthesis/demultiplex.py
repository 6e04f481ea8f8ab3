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
Splitting a block multiplexor u0 ⊕ u1 into two generic operators around a
multiplexed Rz.
"""
import logging
from typing import Tuple

import numpy as np

from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import DimensionError, NumericalFailure
from qsdsuite.utils.linalg import direct_sum, eig_unitary, kron

log = logging.getLogger(__name__)


def demultiplex(
    u0: np.ndarray, u1: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Demultiplex u0 ⊕ u1 = (I ⊗ v) (D ⊕ D^dag) (I ⊗ w).

    From u0 u1^dag = v D^2 v^dag with D the principal square root of the
    spectrum, and w = D v^dag u1. D ⊕ D^dag is a multiplexed Rz on the leading
    wire with the remaining wires as selects.

    Parameters
    ----------
    u0, u1 : np.ndarray
            Unitaries of equal dimension.

    Returns
    -------
    v : np.ndarray
            Applied last.
    rz_angles : np.ndarray
            Angles -2 arg(d_j) of the multiplexed Rz.
    w : np.ndarray
            Applied first.
    """
    u0 = np.asarray(u0, dtype=complex)
    u1 = np.asarray(u1, dtype=complex)
    if u0.shape != u1.shape:
        raise DimensionError(f"Cofactors differ in shape: {u0.shape} vs {u1.shape}")
    eigenvalues, v = eig_unitary(u0 @ u1.conj().T)
    d = np.exp(0.5j * np.angle(eigenvalues))
    w = d[:, None] * (v.conj().T @ u1)
    rz_angles = -2 * np.angle(d)

    eye = np.eye(2, dtype=complex)
    rebuilt = kron(eye, v) @ direct_sum(np.diag(d), np.diag(d.conj())) @ kron(eye, w)
    residual = float(np.max(np.abs(rebuilt - direct_sum(u0, u1))))
    if not residual <= config.tol_recon:
        raise NumericalFailure("Demultiplexing", residual)
    return v, rz_angles, w
