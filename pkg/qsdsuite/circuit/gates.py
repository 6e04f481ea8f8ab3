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
Elementary gates and their matrices.

Rotation conventions::

    Rx(t) = [[cos(t/2), i sin(t/2)], [i sin(t/2), cos(t/2)]]
    Ry(t) = [[cos(t/2), sin(t/2)], [-sin(t/2), cos(t/2)]]
    Rz(t) = diag(exp(-i t/2), exp(i t/2))

so Ry and Rx turn the opposite way to the textbook matrices while Rz agrees.
"""
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Dict, Optional, Tuple

import numpy as np

from qsdsuite.utils.exceptions import GateIndexError


class GateKind(Enum):
    """The gate kinds of the intermediate representation."""

    RX = "rx"
    RY = "ry"
    RZ = "rz"
    CNOT = "cx"
    CZ = "cz"
    PHASE = "ph"


ROTATIONS = (GateKind.RX, GateKind.RY, GateKind.RZ)
ENTANGLERS = (GateKind.CNOT, GateKind.CZ)
DIAGONAL = (GateKind.RZ, GateKind.CZ, GateKind.PHASE)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PROJECT_0 = np.array([[1, 0], [0, 0]], dtype=complex)
PROJECT_1 = np.array([[0, 0], [0, 1]], dtype=complex)


@dataclass(frozen=True)
class Gate:
    """
    A single elementary gate.

    Attributes
    ----------
    kind : GateKind
            Gate kind.
    target : int
            Wire acted on, None for PHASE.
    control : int
            Control wire of CNOT, first wire of CZ, None otherwise.
    angle : float
            Rotation angle or global phase in radians, None for entanglers.
    """

    kind: GateKind
    target: Optional[int] = None
    control: Optional[int] = None
    angle: Optional[float] = None

    def __post_init__(self):
        """Check the field combination."""
        if self.kind in ROTATIONS:
            if self.target is None or self.control is not None or self.angle is None:
                raise ValueError(f"{self.kind.value} needs a target and an angle only")
        elif self.kind in ENTANGLERS:
            if self.target is None or self.control is None or self.angle is not None:
                raise ValueError(f"{self.kind.value} needs a control and a target only")
            if self.control == self.target:
                raise GateIndexError(
                    f"{self.kind.value} with control = target = {self.target}"
                )
        elif self.target is not None or self.control is not None or self.angle is None:
            raise ValueError("ph needs an angle only")
        for index in (self.target, self.control):
            if index is not None and index < 0:
                raise GateIndexError(f"Negative wire index {index}")

    @classmethod
    def rx(cls, target: int, angle: float) -> "Gate":
        return cls(GateKind.RX, target=target, angle=float(angle))

    @classmethod
    def ry(cls, target: int, angle: float) -> "Gate":
        return cls(GateKind.RY, target=target, angle=float(angle))

    @classmethod
    def rz(cls, target: int, angle: float) -> "Gate":
        return cls(GateKind.RZ, target=target, angle=float(angle))

    @classmethod
    def rotation(cls, kind: GateKind, target: int, angle: float) -> "Gate":
        return cls(kind, target=target, angle=float(angle))

    @classmethod
    def cx(cls, control: int, target: int) -> "Gate":
        return cls(GateKind.CNOT, target=target, control=control)

    @classmethod
    def cz(cls, control: int, target: int) -> "Gate":
        return cls(GateKind.CZ, target=target, control=control)

    @classmethod
    def phase(cls, angle: float) -> "Gate":
        return cls(GateKind.PHASE, angle=float(angle))

    @property
    def qubits(self) -> Tuple[int, ...]:
        """Wires touched by the gate."""
        return tuple(q for q in (self.control, self.target) if q is not None)

    @property
    def is_rotation(self) -> bool:
        return self.kind in ROTATIONS

    @property
    def is_entangler(self) -> bool:
        return self.kind in ENTANGLERS

    def inverse(self) -> "Gate":
        """Inverse gate; entanglers are self-inverse."""
        if self.angle is None:
            return self
        return Gate(
            self.kind, target=self.target, control=self.control, angle=-self.angle
        )

    def check_width(self, width: int):
        """Raise GateIndexError when the gate does not fit on width wires."""
        for index in self.qubits:
            if index >= width:
                raise GateIndexError(
                    f"{self.kind.value} acts on wire {index} but the circuit has {width}"
                )


def rotation_matrix(kind: GateKind, angle: float) -> np.ndarray:
    """2x2 matrix of a rotation."""
    c = np.cos(angle / 2)
    s = np.sin(angle / 2)
    if kind == GateKind.RX:
        return np.array([[c, 1j * s], [1j * s, c]], dtype=complex)
    if kind == GateKind.RY:
        return np.array([[c, s], [-s, c]], dtype=complex)
    if kind == GateKind.RZ:
        return np.diag([np.exp(-0.5j * angle), np.exp(0.5j * angle)])
    raise ValueError(f"{kind} is not a rotation")


def embed(operators: Dict[int, np.ndarray], width: int) -> np.ndarray:
    """Tensor product of 2x2 operators placed on wires, identity elsewhere."""
    factors = [operators.get(q, np.eye(2, dtype=complex)) for q in range(width)]
    return reduce(np.kron, factors, np.eye(1, dtype=complex))


def gate_matrix(gate: Gate, width: int) -> np.ndarray:
    """
    Dense 2**width x 2**width matrix of a gate.

    Parameters
    ----------
    gate : Gate
            Gate to embed.
    width : int
            Number of wires.

    Returns
    -------
    np.ndarray
    """
    gate.check_width(width)
    if gate.kind == GateKind.PHASE:
        return np.exp(1j * gate.angle) * np.eye(2**width, dtype=complex)
    if gate.is_rotation:
        return embed({gate.target: rotation_matrix(gate.kind, gate.angle)}, width)
    flip = PAULI_X if gate.kind == GateKind.CNOT else PAULI_Z
    return embed({gate.control: PROJECT_0}, width) + embed(
        {gate.control: PROJECT_1, gate.target: flip}, width
    )
