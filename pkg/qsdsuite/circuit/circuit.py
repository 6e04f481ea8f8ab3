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
Circuits as immutable gate sequences.

The first gate of a circuit is applied first, so the matrix of a circuit is the
product of its gate matrices in reverse list order.
"""
from dataclasses import dataclass
from typing import Iterable, Tuple

from qsdsuite.circuit.gates import Gate, GateKind


@dataclass(frozen=True)
class Circuit:
    """
    Gate sequence on a fixed number of wires.

    Attributes
    ----------
    width : int
            Number of qubits.
    gates : tuple
            Gates in time order.
    """

    width: int
    gates: Tuple[Gate, ...] = ()

    def __post_init__(self):
        """Freeze the gate list and check every index."""
        if self.width < 0:
            raise ValueError(f"Circuit width must be non-negative, got {self.width}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            gate.check_width(self.width)

    @classmethod
    def from_gates(cls, width: int, gates: Iterable[Gate]) -> "Circuit":
        return cls(width=width, gates=tuple(gates))

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        """Run self, then other."""
        if not isinstance(other, Circuit):
            return NotImplemented
        if other.width != self.width:
            raise ValueError(
                f"Cannot join circuits of width {self.width} and {other.width}"
            )
        return Circuit(self.width, self.gates + other.gates)

    def inverse(self) -> "Circuit":
        """Circuit of the adjoint: reversed order, negated angles."""
        return Circuit(self.width, tuple(g.inverse() for g in reversed(self.gates)))

    def counts(self) -> "GateCounts":
        return gate_counts(self)


@dataclass(frozen=True)
class GateCounts:
    """
    Gate tallies of a circuit.

    cnot_equivalent counts a CZ as one CNOT since it costs a single CNOT plus
    one-qubit gates.
    """

    rx: int = 0
    ry: int = 0
    rz: int = 0
    cnot: int = 0
    cz: int = 0
    phase: int = 0

    @property
    def cnot_equivalent(self) -> int:
        return self.cnot + self.cz

    @property
    def total(self) -> int:
        return self.rx + self.ry + self.rz + self.cnot + self.cz + self.phase


_COUNT_FIELDS = {
    GateKind.RX: "rx",
    GateKind.RY: "ry",
    GateKind.RZ: "rz",
    GateKind.CNOT: "cnot",
    GateKind.CZ: "cz",
    GateKind.PHASE: "phase",
}


def gate_counts(circuit: Circuit) -> GateCounts:
    """
    Count the gates of each kind.

    Parameters
    ----------
    circuit : Circuit

    Returns
    -------
    GateCounts
    """
    tally = {name: 0 for name in _COUNT_FIELDS.values()}
    for gate in circuit.gates:
        tally[_COUNT_FIELDS[gate.kind]] += 1
    return GateCounts(**tally)
