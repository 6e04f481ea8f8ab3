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
Synthesis of unitaries and states.
"""
from qsdsuite.synthesis import reference_counts
from qsdsuite.synthesis.demultiplex import demultiplex
from qsdsuite.synthesis.options import Method, QsdOptions
from qsdsuite.synthesis.qr import qr_cnot_count, synth_qr
from qsdsuite.synthesis.shannon import synth_qsd
from qsdsuite.synthesis.state_preparation import disentangle_lsb, prepare_state
from qsdsuite.synthesis.two_qubit import (
    KakDecomposition,
    kak,
    synth_two_qubit,
    two_qubit_up_to_diagonal,
)

__all__ = [
    "reference_counts",
    KakDecomposition.__name__,
    Method.__name__,
    QsdOptions.__name__,
    demultiplex.__name__,
    disentangle_lsb.__name__,
    kak.__name__,
    prepare_state.__name__,
    qr_cnot_count.__name__,
    synth_qr.__name__,
    synth_qsd.__name__,
    synth_two_qubit.__name__,
    two_qubit_up_to_diagonal.__name__,
]
