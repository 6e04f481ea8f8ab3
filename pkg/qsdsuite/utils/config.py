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
Package wide numerical settings.
"""
from dataclasses import dataclass


@dataclass
class Config:
    """Collection of QSDSuite configurations.

    None of the tolerances below are dictated by the underlying theory, they are
    engineering choices that hold comfortably for up to ten qubits in double
    precision.

    Attributes
    ----------
    tol_unitary : float
            Max-entry deviation of M^dag M from the identity accepted as unitary.
    tol_recon : float
            Reassembly tolerance of the matrix decompositions.
    tol_zero : float
            Amplitude magnitude below which an entry counts as zero when computing
            Bloch rotations.
    tol_angle : float
            Rotations and phases with a smaller magnitude are dropped by the
            peephole pass.
    tol_template : float
            Residual allowed when matching the two-CNOT template.
    tol_load : float
            Tolerance used when validating matrices and states read from files.
    max_verify_width : int
            Largest width for which a dense unitary is reconstructed.
    verify_samples : int
            Number of random states used for verification above max_verify_width.
    verify_seed : int
            Seed of the first of those states, the others follow consecutively.
    kak_trials : int
            Random mixings tried when simultaneously diagonalizing in the magic basis.
    """

    tol_unitary: float = 1e-9
    tol_recon: float = 1e-9
    tol_zero: float = 1e-13
    tol_angle: float = 1e-12
    tol_template: float = 1e-8
    tol_load: float = 1e-6
    max_verify_width: int = 10
    verify_samples: int = 8
    verify_seed: int = 0
    kak_trials: int = 16


config = Config()
