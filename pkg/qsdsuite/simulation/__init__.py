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
Simulation and verification.
"""
from .statevector import apply_circuit, apply_gate, circuit_to_unitary, simulate
from .verification import (
    EquivalenceReport,
    SynthesisReport,
    equivalence,
    require_exact,
    state_fidelity,
    verify_synthesis,
)

__all__ = [
    apply_gate.__name__,
    apply_circuit.__name__,
    circuit_to_unitary.__name__,
    simulate.__name__,
    EquivalenceReport.__name__,
    SynthesisReport.__name__,
    equivalence.__name__,
    require_exact.__name__,
    state_fidelity.__name__,
    verify_synthesis.__name__,
]
