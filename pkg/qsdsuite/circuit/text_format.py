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
Reading and writing circuits as text.

The native format is line based::

    qubits 3
    ry 0 1.5707963267948966
    cx 0 2      # comment
    ph 0.25

Angles are written with repr so that parsing recovers them bit for bit.
"""
import logging
from typing import List, Optional

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import Gate, GateKind
from qsdsuite.utils.exceptions import CircuitParseError, GateIndexError

log = logging.getLogger(__name__)

_BY_NAME = {kind.value: kind for kind in GateKind}


def _angle(value: float) -> str:
    return repr(float(value))


def format_gate(gate: Gate) -> str:
    """One line of the text format."""
    name = gate.kind.value
    if gate.kind == GateKind.PHASE:
        return f"{name} {_angle(gate.angle)}"
    if gate.is_rotation:
        return f"{name} {gate.target} {_angle(gate.angle)}"
    return f"{name} {gate.control} {gate.target}"


def emit_text(circuit: Circuit) -> str:
    """
    Serialize a circuit.

    Parameters
    ----------
    circuit : Circuit

    Returns
    -------
    str
            Header line followed by one gate per line, newline terminated.
    """
    lines = [f"qubits {circuit.width}"]
    lines += [format_gate(g) for g in circuit.gates]
    return "\n".join(lines) + "\n"


def _parse_int(token: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise CircuitParseError(line, f"'{token}' is not a wire index")
    if value < 0:
        raise CircuitParseError(line, f"negative wire index {value}")
    return value


def _parse_float(token: str, line: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise CircuitParseError(line, f"'{token}' is not an angle")


def _parse_gate(tokens: List[str], width: int, line: int) -> Gate:
    name = tokens[0].lower()
    if name not in _BY_NAME:
        raise CircuitParseError(line, f"unknown gate '{tokens[0]}'")
    kind = _BY_NAME[name]
    expected = 2 if kind == GateKind.PHASE else 3
    if len(tokens) != expected:
        raise CircuitParseError(line, f"'{name}' takes {expected - 1} arguments")
    try:
        if kind == GateKind.PHASE:
            gate = Gate.phase(_parse_float(tokens[1], line))
        elif kind in (GateKind.RX, GateKind.RY, GateKind.RZ):
            gate = Gate.rotation(
                kind, _parse_int(tokens[1], line), _parse_float(tokens[2], line)
            )
        else:
            gate = Gate(
                kind,
                control=_parse_int(tokens[1], line),
                target=_parse_int(tokens[2], line),
            )
        gate.check_width(width)
    except (GateIndexError, ValueError) as err:
        raise CircuitParseError(line, str(err))
    return gate


def parse_text(text: str) -> Circuit:
    """
    Parse the native text format.

    Parameters
    ----------
    text : str
            Document produced by emit_text or written by hand.

    Returns
    -------
    Circuit

    Raises
    ------
    CircuitParseError
            With the 1-based line number of the first offending line.
    """
    width: Optional[int] = None
    gates: List[Gate] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if tokens[0].lower() == "qubits":
            if width is not None:
                raise CircuitParseError(number, "duplicate 'qubits' header")
            if len(tokens) != 2:
                raise CircuitParseError(number, "'qubits' takes one argument")
            width = _parse_int(tokens[1], number)
            continue
        if width is None:
            raise CircuitParseError(number, "expected 'qubits <n>' before the first gate")
        gates.append(_parse_gate(tokens, width, number))
    if width is None:
        raise CircuitParseError(1, "missing 'qubits <n>' header")
    log.debug(f"parsed {len(gates)} gates on {width} qubits")
    return Circuit(width, tuple(gates))


def emit_qasm(circuit: Circuit) -> str:
    """
    Export a circuit as OpenQASM 2.0.

    QASM rotates Ry and Rx the other way round, so their angles are negated. A
    global phase has no QASM statement and is kept as a comment.
    """
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{circuit.width}];"]
    for gate in circuit.gates:
        if gate.kind == GateKind.PHASE:
            lines.append(f"// global phase {_angle(gate.angle)}")
        elif gate.kind in (GateKind.RX, GateKind.RY):
            lines.append(f"{gate.kind.value}({_angle(-gate.angle)}) q[{gate.target}];")
        elif gate.kind == GateKind.RZ:
            lines.append(f"rz({_angle(gate.angle)}) q[{gate.target}];")
        else:
            lines.append(f"{gate.kind.value} q[{gate.control}],q[{gate.target}];")
    return "\n".join(lines) + "\n"
