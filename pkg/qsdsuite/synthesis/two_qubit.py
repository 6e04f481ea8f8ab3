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
Two-qubit synthesis through the canonical (KAK) decomposition.

Every u in U(4) factors as exp(i phase) (l0 ⊗ l1) K(a, b, c) (r0 ⊗ r1) with
K(a, b, c) = exp(i (a XX + b YY + c ZZ)). In the magic basis local operators are
real orthogonal and K is diagonal, so the factors follow from diagonalizing
P = Up^T Up with a real orthogonal matrix, Up being u in the magic basis.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import Gate
from qsdsuite.multiplexors.diagonal import DiagonalSpec
from qsdsuite.multiplexors.one_qubit import zyz_gates
from qsdsuite.simulation.statevector import circuit_to_unitary
from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import DimensionError, NumericalFailure, SynthesisFailure
from qsdsuite.utils.linalg import as_unitary, kron, kron_factor

log = logging.getLogger(__name__)

MAGIC = np.array(
    [[1, 1j, 0, 0], [0, 0, 1j, 1], [0, 0, 1j, -1], [1, -1j, 0, 0]], dtype=complex
) / np.sqrt(2)

_S = np.diag([1, 1j])
_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]])
_Z = np.diag([1.0 + 0j, -1.0])
# conjugation with SH sends Y to X and Z to Y
_W0 = _S @ _H
# Q with Q Z Q^dag = X, Y, Z
_TO_PAULI = (_H, _S @ _H, np.eye(2))


def canonical_matrix(a: float, b: float, c: float) -> np.ndarray:
    """exp(i (a XX + b YY + c ZZ))."""
    phases = np.array([a - b + c, -a + b + c, a + b - c, -a - b - c])
    return MAGIC @ np.diag(np.exp(1j * phases)) @ MAGIC.conj().T


@dataclass(frozen=True)
class KakDecomposition:
    """
    u = exp(i phase) left K(a, b, c) right.

    Attributes
    ----------
    phase : float
            Global phase.
    left, right : np.ndarray
            4x4 tensor products of one-qubit unitaries.
    coefficients : tuple
            (a, b, c).
    """

    phase: float
    left: np.ndarray
    right: np.ndarray
    coefficients: Tuple[float, float, float]

    def matrix(self) -> np.ndarray:
        """Rebuild u."""
        return (
            np.exp(1j * self.phase)
            * self.left
            @ canonical_matrix(*self.coefficients)
            @ self.right
        )


def _real_eigenbasis(p: np.ndarray) -> np.ndarray:
    """
    Real orthogonal V with det +1 and V^T p V diagonal.

    Re p and Im p commute for a symmetric unitary p, so a generic real
    combination of them has the common eigenvectors.
    """
    rng = np.random.default_rng(0)
    residual = np.inf
    for _ in range(config.kak_trials):
        mix = rng.uniform(-1, 1)
        _, vectors = np.linalg.eigh(p.real + mix * p.imag)
        rotated = vectors.T @ p @ vectors
        residual = float(np.max(np.abs(rotated - np.diag(np.diag(rotated)))))
        if residual <= config.tol_recon:
            break
    else:
        raise NumericalFailure("Magic basis diagonalization", residual)
    if np.linalg.det(vectors) < 0:
        vectors[:, 0] *= -1
    return vectors


def _assemble(
    up: np.ndarray, p: np.ndarray, v: np.ndarray, phase: float
) -> KakDecomposition:
    """Factors from a real eigenbasis v of p."""
    d = np.sqrt(np.diag(v.T @ p @ v))
    if np.prod(d).real < 0:
        d[0] = -d[0]
    o1 = up @ v @ np.diag(d.conj())
    left = MAGIC @ o1 @ MAGIC.conj().T
    right = MAGIC @ v.T @ MAGIC.conj().T
    phi = np.angle(d)
    coefficients = (
        float(phi[0] + phi[2]) / 2,
        float(phi[1] + phi[2]) / 2,
        float(phi[0] + phi[1]) / 2,
    )
    return KakDecomposition(
        phase=phase, left=left, right=right, coefficients=coefficients
    )


def kak(u: np.ndarray, two_cnot_pairing: bool = False) -> KakDecomposition:
    """
    Canonical decomposition of a two-qubit unitary.

    Parameters
    ----------
    u : np.ndarray
            4x4 unitary.
    two_cnot_pairing : bool
            Order the magic basis so that c is a multiple of pi/2 whenever the
            spectrum of P allows it, i.e. when u needs only two CNOTs.

    Returns
    -------
    KakDecomposition
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4):
        raise DimensionError(f"Expected a 4x4 matrix, got shape {u.shape}")
    phase = float(np.angle(np.linalg.det(u))) / 4
    up = MAGIC.conj().T @ (u * np.exp(-1j * phase)) @ MAGIC
    p = up.T @ up
    v = _real_eigenbasis(p)
    if two_cnot_pairing:
        eigenvalues = np.diag(v.T @ p @ v)
        pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
        i, j = min(pairs, key=lambda ij: abs(eigenvalues[ij[0]] * eigenvalues[ij[1]] - 1))
        order = [i, j] + [k for k in range(4) if k not in (i, j)]
        v = v[:, order]
        if np.linalg.det(v) < 0:
            v[:, 2] *= -1
    result = _assemble(up, p, v, phase)
    residual = float(np.max(np.abs(result.matrix() - u)))
    if not residual <= config.tol_recon:
        raise NumericalFailure("KAK decomposition", residual)
    return result


def _local_pair(m: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Factors of a 4x4 tensor product, each unitary up to a phase."""
    a, b = kron_factor(m)
    return a / np.sqrt(abs(np.linalg.det(a))), b / np.sqrt(abs(np.linalg.det(b)))


def _locals(first: np.ndarray, second: np.ndarray) -> List[Gate]:
    """Rotations of a one-qubit layer on wires 0 and 1, phases dropped."""
    return zyz_gates(first, 0, with_phase=False) + zyz_gates(second, 1, with_phase=False)


def _relabel(gates: Sequence[Gate], qubits: Tuple[int, int]) -> List[Gate]:
    """Move gates from wires (0, 1) onto the given pair."""
    mapping = {0: qubits[0], 1: qubits[1]}
    out = []
    for gate in gates:
        out.append(
            Gate(
                gate.kind,
                target=None if gate.target is None else mapping[gate.target],
                control=None if gate.control is None else mapping[gate.control],
                angle=gate.angle,
            )
        )
    return out


def _with_phase(u: np.ndarray, gates: List[Gate]) -> Tuple[List[Gate], float]:
    """Append the global phase that best matches u and return the residual."""
    m = circuit_to_unitary(Circuit(2, tuple(gates)))
    phase = float(np.angle(np.trace(m.conj().T @ u)))
    if phase != 0.0:
        gates = gates + [Gate.phase(phase)]
    return gates, float(np.max(np.abs(np.exp(1j * phase) * m - u)))


def _exp_x(t: float) -> np.ndarray:
    return np.cos(t) * np.eye(2) + 1j * np.sin(t) * _X


def _is_multiple(x: float, step: float) -> bool:
    return abs(x - np.round(x / step) * step) <= config.tol_template


def _one_cnot_gates(decomposition: KakDecomposition) -> Optional[List[Gate]]:
    """
    Rotations and one CNOT, None unless u is locally equivalent to a CNOT.

    That is the case when one coefficient is pi/4 and the other two vanish, all
    modulo pi/2. exp(i pi/4 PP) = (Q ⊗ Q) exp(i pi/4 ZZ) (Q^dag ⊗ Q^dag) with
    Q Z Q^dag = P, and exp(i pi/4 ZZ) ~ (S^dag ⊗ S^dag)(I ⊗ H) C (I ⊗ H).
    """
    coefficients = np.asarray(decomposition.coefficients)
    quarter = [_is_multiple(x - np.pi / 4, np.pi / 2) for x in coefficients]
    zero = [_is_multiple(x, np.pi / 2) for x in coefficients]
    if sum(quarter) != 1 or sum(zero) != 2:
        return None
    axis = quarter.index(True)
    shifted = coefficients.copy()
    shifted[axis] -= np.pi / 4
    # a product of Paulis, hence local
    rest = canonical_matrix(*shifted)
    q = _TO_PAULI[axis]
    inverse = kron(q.conj().T, q.conj().T)
    before = kron(np.eye(2), _H) @ inverse @ rest @ decomposition.right
    after = decomposition.left @ kron(q @ _S.conj().T, q @ _S.conj().T @ _H)

    gates = _locals(*_local_pair(before))
    gates.append(Gate.cx(0, 1))
    gates += _locals(*_local_pair(after))
    return gates


def _two_cnot_template(decomposition: KakDecomposition) -> Optional[List[Gate]]:
    """
    Rotations and two CNOTs for left K(a, b, c) right, None unless c is a
    multiple of pi/2.

    K(a, b, 0) is (W ⊗ I) CX (Ry(2a) ⊗ Ry(2b)) CX (W^dag ⊗ I) with W = S H and
    K(a, b, c) differs from it by the local exp(i c ZZ).
    """
    a, b, c = decomposition.coefficients
    c_round = np.round(c / (np.pi / 2)) * (np.pi / 2)
    if not abs(c - c_round) <= config.tol_template:
        return None
    zz = kron(_Z, _Z)
    fold = np.cos(c_round) * np.eye(4) + 1j * np.sin(c_round) * zz
    right = fold @ decomposition.right
    l0, l1 = _local_pair(decomposition.left)
    r0, r1 = _local_pair(right)

    gates = _locals(_W0.conj().T @ r0, r1)
    gates.append(Gate.cx(0, 1))
    gates += [Gate.ry(0, 2 * a), Gate.ry(1, 2 * b)]
    gates.append(Gate.cx(0, 1))
    gates += _locals(l0 @ _W0, l1)
    return gates


def _three_cnot_gates(decomposition: KakDecomposition) -> List[Gate]:
    """
    Rotations and three CNOTs matching u up to a global phase.

    K(a, b, c) = C [e^{iaX} ⊗ e^{icZ} H] C [e^{-ibX} S ⊗ H S] C [I ⊗ S^dag] with
    C the CNOT from wire 0 to wire 1.
    """
    a, b, c = decomposition.coefficients
    l0, l1 = _local_pair(decomposition.left)
    r0, r1 = _local_pair(decomposition.right)
    exp_z = np.diag([np.exp(1j * c), np.exp(-1j * c)])

    gates = _locals(r0, _S.conj().T @ r1)
    gates.append(Gate.cx(0, 1))
    gates += _locals(_exp_x(-b) @ _S, _H @ _S)
    gates.append(Gate.cx(0, 1))
    gates += _locals(_exp_x(a), exp_z @ _H)
    gates.append(Gate.cx(0, 1))
    gates += _locals(l0, l1)
    return gates


def _candidates(u: np.ndarray) -> Iterator[List[Gate]]:
    """Circuits of u up to a global phase, cheapest first."""
    phase = float(np.angle(np.linalg.det(u))) / 4
    up = MAGIC.conj().T @ (u * np.exp(-1j * phase)) @ MAGIC
    # P = +-I exactly for tensor products; +-iI is the SWAP class
    trace = np.trace(up.T @ up)
    if abs(abs(trace.real) - 4) <= config.tol_template and abs(trace.imag) <= (
        config.tol_template
    ):
        yield _locals(*_local_pair(u))

    decomposition = kak(u)
    gates = _one_cnot_gates(decomposition)
    if gates is not None:
        yield gates
    if any(_is_multiple(x, np.pi / 2) for x in decomposition.coefficients):
        gates = _two_cnot_template(kak(u, two_cnot_pairing=True))
        if gates is not None:
            yield gates
    yield _three_cnot_gates(decomposition)


def synth_two_qubit(
    u: np.ndarray, qubits: Tuple[int, int] = (0, 1), width: Optional[int] = None
) -> Circuit:
    """
    Exact circuit of a two-qubit unitary with at most three CNOTs.

    Parameters
    ----------
    u : np.ndarray
            4x4 unitary, the first wire is the more significant one.
    qubits : tuple
            Wires the circuit acts on.
    width : int
            Circuit width, defaults to max(qubits) + 1.

    Returns
    -------
    Circuit
            As few CNOTs as the canonical class of u allows: none for a tensor
            product, one for the CNOT class, two when a canonical coefficient
            vanishes and three otherwise. The global phase is carried by a
            PHASE gate.
    """
    u = as_unitary(u)
    if u.shape != (4, 4):
        raise DimensionError(f"Expected a 4x4 matrix, got shape {u.shape}")
    if width is None:
        width = max(qubits) + 1

    residual = np.nan
    for candidate in _candidates(u):
        gates, residual = _with_phase(u, candidate)
        if residual <= config.tol_template:
            return Circuit(width, tuple(_relabel(gates, qubits)))
        log.debug(f"two-qubit candidate rejected, residual {residual:.3e}")
    raise SynthesisFailure(f"Two-qubit circuit misses its target by {residual:.3e}")


def two_qubit_up_to_diagonal(
    u: np.ndarray, qubits: Tuple[int, int] = (0, 1), width: Optional[int] = None
) -> Tuple[Circuit, DiagonalSpec]:
    """
    Two-CNOT circuit C and diagonal D with u = D . C.

    Multiplying u by exp(i theta ZZ) with the right theta makes the trace of
    u (YY) u^T (YY) real, which is the condition for two CNOTs.

    Parameters
    ----------
    u : np.ndarray
            4x4 unitary.
    qubits : tuple
            Wires of the circuit and of the diagonal.
    width : int
            Circuit width, defaults to max(qubits) + 1.

    Returns
    -------
    circuit : Circuit
            Rotations and exactly two CNOTs, no PHASE gate.
    diagonal : DiagonalSpec
            Phases on the two wires, the global phase included.
    """
    u = as_unitary(u)
    if u.shape != (4, 4):
        raise DimensionError(f"Expected a 4x4 matrix, got shape {u.shape}")
    if width is None:
        width = max(qubits) + 1

    u_s = u * np.exp(-0.25j * np.angle(np.linalg.det(u)))
    yy = kron(_Y, _Y)
    gamma = u_s @ yy @ u_s.T @ yy
    p = gamma[0, 0] + gamma[3, 3]
    q = gamma[1, 1] + gamma[2, 2]
    big_a = p.real - q.real
    big_b = p.imag + q.imag
    t = min(np.arctan2(-big_b, big_a), np.arctan2(big_b, -big_a), key=abs)
    theta = t / 2
    delta = np.exp(1j * theta * np.array([1, -1, -1, 1]))

    decomposition = kak(delta[:, None] * u_s, two_cnot_pairing=True)
    gates = _two_cnot_template(decomposition)
    if gates is None:
        raise SynthesisFailure(
            f"Two-CNOT template does not fit, c = {decomposition.coefficients[2]:.12f}"
        )

    m = circuit_to_unitary(Circuit(2, tuple(gates)))
    rest = u @ m.conj().T
    off_diagonal = float(np.max(np.abs(rest - np.diag(np.diag(rest)))))
    if not off_diagonal <= config.tol_template:
        raise SynthesisFailure(
            f"Two-CNOT template leaves off-diagonal {off_diagonal:.3e}"
        )
    diagonal = DiagonalSpec(tuple(qubits), tuple(np.angle(np.diag(rest))))
    circuit = Circuit(width, tuple(_relabel(gates, qubits)))
    return circuit, diagonal
