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
Options of the synthesis methods.
"""
from dataclasses import dataclass
from enum import Enum

from qsdsuite.utils.exceptions import OptionConflict


class Method(Enum):
    """Synthesis methods."""

    QSD = "qsd"
    QR = "qr"
    PREP = "prep"


@dataclass(frozen=True)
class QsdOptions:
    """
    Options of the Shannon decomposition.

    Attributes
    ----------
    base_size : int
            Width at which the recursion stops: 1 for Euler angles, 2 for the
            three-CNOT two-qubit circuit.
    opt_a1 : bool
            Lower the central Ry multiplexor with CZ gates and fold one of them
            into the neighbouring block multiplexor.
    opt_a2 : bool
            Split off a diagonal from every two-qubit leaf but the last and push
            it into the next leaf. Needs base_size 2.
    nn : bool
            Map the result onto a line of nearest-neighbour wires.
    """

    base_size: int = 2
    opt_a1: bool = True
    opt_a2: bool = True
    nn: bool = False

    def __post_init__(self):
        """Check the option combination."""
        if self.base_size not in (1, 2):
            raise ValueError(f"base_size must be 1 or 2, got {self.base_size}")
        if self.opt_a2 and self.base_size != 2:
            raise OptionConflict(
                "Diagonal migration needs two-qubit leaves (base_size 2)"
            )

    @classmethod
    def defaults_for(cls, base_size: int, nn: bool = False) -> "QsdOptions":
        """Both optimizations on for base_size 2, off for base_size 1."""
        optimized = base_size == 2
        return cls(base_size=base_size, opt_a1=optimized, opt_a2=optimized, nn=nn)

    @property
    def label(self) -> str:
        """Short description such as 'l=2,a1,a2'."""
        parts = [f"l={self.base_size}"]
        if self.opt_a1:
            parts.append("a1")
        if self.opt_a2:
            parts.append("a2")
        if self.nn:
            parts.append("nn")
        return ",".join(parts)
