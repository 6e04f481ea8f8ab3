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
Gate level intermediate representation.
"""
from .circuit import Circuit, GateCounts, gate_counts
from .gates import Gate, GateKind, gate_matrix
from .peephole import peephole_simplify
from .text_format import emit_qasm, emit_text, parse_text

__all__ = [
    Circuit.__name__,
    GateCounts.__name__,
    Gate.__name__,
    GateKind.__name__,
    gate_counts.__name__,
    gate_matrix.__name__,
    peephole_simplify.__name__,
    emit_text.__name__,
    parse_text.__name__,
    emit_qasm.__name__,
]
