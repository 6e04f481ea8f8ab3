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
Equivalence checks between circuits, matrices and states.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from time import perf_counter
from typing import TYPE_CHECKING, Optional, Sequence

import numpy as np

from qsdsuite.circuit.circuit import Circuit, GateCounts, gate_counts
from qsdsuite.simulation.statevector import apply_circuit, circuit_to_unitary
from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import DimensionError, SynthesisFailure
from qsdsuite.utils.linalg import num_qubits, phase_aligned_distance, random_state

if TYPE_CHECKING:
    from qsdsuite.synthesis.options import QsdOptions

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquivalenceReport:
    """
    Outcome of comparing two operators.

    Attributes
    ----------
    equal_exact : bool
            max |a - b| <= tol.
    equal_up_to_phase : bool
            max |a - exp(i phase) b| <= tol.
    phase : float
            Best aligning global phase.
    max_err : float
            max |a - b|, phase included.
    phase_err : float
            max |a - exp(i phase) b|.
    """

    equal_exact: bool
    equal_up_to_phase: bool
    phase: float
    max_err: float
    phase_err: float


@dataclass(frozen=True)
class SynthesisReport:
    """
    Summary of one synthesis run.

    Attributes
    ----------
    method : str
            Name of the synthesis method.
    counts : GateCounts
            Gate tallies of the emitted circuit.
    recon_err : float
            Max-entry reconstruction error with the global phase included. Above
            config.max_verify_width it is the max amplitude error over random
            input states.
    options : QsdOptions
            Options of a QSD run, None for other methods.
    elapsed : float
            Wall time in seconds.
    sampled : bool
            Whether recon_err comes from random states rather than the dense matrix.
    """

    method: str
    counts: GateCounts
    recon_err: float
    options: Optional["QsdOptions"] = None
    elapsed: float = 0.0
    sampled: bool = False


def equivalence(
    a: np.ndarray, b: np.ndarray, tol: Optional[float] = None
) -> EquivalenceReport:
    """
    Compare two operators exactly and up to a global phase.

    Parameters
    ----------
    a, b : np.ndarray
            Matrices (or vectors) of equal shape.
    tol : float
            Max-entry tolerance, defaults to config.tol_recon.

    Returns
    -------
    EquivalenceReport
    """
    if tol is None:
        tol = config.tol_recon
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionError(f"Cannot compare shapes {a.shape} and {b.shape}")
    max_err = float(np.max(np.abs(a - b))) if a.size else 0.0
    phase, phase_err = phase_aligned_distance(a, b)
    return EquivalenceReport(
        equal_exact=max_err <= tol,
        equal_up_to_phase=phase_err <= tol,
        phase=phase,
        max_err=max_err,
        phase_err=phase_err,
    )


def sampled_error(
    u: np.ndarray, circuit: Circuit, samples: Optional[int] = None
) -> float:
    """
    Max amplitude error of the circuit against u on random input states.

    The states are seeded from config.verify_seed so repeated calls agree.
    """
    if samples is None:
        samples = config.verify_samples
    seeds = range(config.verify_seed, config.verify_seed + samples)
    states = [random_state(circuit.width, seed) for seed in seeds]
    states = np.stack(states, axis=1)
    return float(np.max(np.abs(apply_circuit(circuit, states) - u @ states)))


def verify_synthesis(
    u: np.ndarray,
    circuit: Circuit,
    method: str = "",
    options: Optional["QsdOptions"] = None,
    elapsed: Optional[float] = None,
) -> SynthesisReport:
    """
    Check a circuit against the unitary it was synthesized from.

    Parameters
    ----------
    u : np.ndarray
            Target unitary.
    circuit : Circuit
            Candidate circuit.
    method : str
            Method label stored in the report.
    options : QsdOptions
            Options stored in the report.
    elapsed : float
            Synthesis wall time. If None, the verification time is reported.

    Returns
    -------
    SynthesisReport
    """
    start = perf_counter()
    u = np.asarray(u, dtype=complex)
    if num_qubits(u.shape[0]) != circuit.width:
        raise DimensionError(
            f"Circuit on {circuit.width} qubits cannot implement dimension {u.shape[0]}"
        )
    sampled = circuit.width > config.max_verify_width
    if sampled:
        recon_err = sampled_error(u, circuit)
    else:
        recon_err = float(np.max(np.abs(circuit_to_unitary(circuit) - u)))
    if elapsed is None:
        elapsed = perf_counter() - start
    log.debug(
        f"verified {method or 'circuit'} on {circuit.width} qubits: err {recon_err:.3e}"
    )
    return SynthesisReport(
        method=method,
        counts=gate_counts(circuit),
        recon_err=recon_err,
        options=options,
        elapsed=elapsed,
        sampled=sampled,
    )


def require_exact(
    report: SynthesisReport, tol: Optional[float] = None
) -> SynthesisReport:
    """
    Raise SynthesisFailure unless the reconstruction error is within tol.

    A NaN error fails the check.

    Parameters
    ----------
    report : SynthesisReport
            Report of a synthesis run.
    tol : float
            Accepted error, defaults to config.tol_template.

    Returns
    -------
    SynthesisReport
            The report, unchanged.
    """
    if tol is None:
        tol = config.tol_template
    if not report.recon_err <= tol:
        raise SynthesisFailure(
            f"{report.method or 'Circuit'} misses its target by {report.recon_err:.3e}"
        )
    return report


def state_fidelity(circuit: Circuit, psi: np.ndarray, bits: Sequence[int]) -> float:
    """
    Overlap |<psi| C |bits>| of the prepared state with the requested one.

    Parameters
    ----------
    circuit : Circuit
            Preparation circuit.
    psi : np.ndarray
            Requested state.
    bits : sequence of int
            Starting basis state, qubit 0 first.
    """
    start = np.zeros(2**circuit.width, dtype=complex)
    start[int("".join(str(b) for b in bits) or "0", 2)] = 1.0
    prepared = apply_circuit(circuit, start)
    return float(abs(np.vdot(np.asarray(psi, dtype=complex), prepared)))
