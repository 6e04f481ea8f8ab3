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
CNOT count table of the synthesis methods on Haar-random unitaries.
"""
import logging
from typing import Callable, Dict, List, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from qsdsuite.simulation.verification import SynthesisReport, verify_synthesis
from qsdsuite.synthesis import reference_counts
from qsdsuite.synthesis.options import Method, QsdOptions
from qsdsuite.synthesis.qr import synth_qr
from qsdsuite.synthesis.shannon import synth_qsd
from qsdsuite.utils.exceptions import SynthesisFailure
from qsdsuite.utils.linalg import random_unitary

log = logging.getLogger(__name__)


def _qr(u: np.ndarray) -> SynthesisReport:
    return verify_synthesis(u, synth_qr(u), method=Method.QR.value)


def _qsd(options: QsdOptions) -> Callable[[np.ndarray], SynthesisReport]:
    def run(u: np.ndarray) -> SynthesisReport:
        _, report = synth_qsd(u, options)
        return report

    return run


METHODS: Dict[str, Callable[[np.ndarray], SynthesisReport]] = {
    "qr": _qr,
    "qsd_l1": _qsd(QsdOptions.defaults_for(1)),
    "qsd_l2": _qsd(QsdOptions(base_size=2, opt_a1=False, opt_a2=False)),
    "qsd_opt": _qsd(QsdOptions()),
}


def measure(method: str, n: int, seed: int, trials: int) -> Tuple[int, float]:
    """
    CNOT count and worst reconstruction error of a method over random unitaries.

    Trial t uses the unitary seeded with seed + t.

    Raises
    ------
    SynthesisFailure
            If the trials do not all emit the same number of CNOTs.
    """
    counts = set()
    worst = 0.0
    for trial in range(trials):
        report = METHODS[method](random_unitary(n, seed + trial))
        counts.add(report.counts.cnot_equivalent)
        worst = max(worst, report.recon_err)
    if len(counts) != 1:
        raise SynthesisFailure(
            f"{method} on {n} qubits gave varying counts {sorted(counts)}"
        )
    return counts.pop(), worst


def _recursion_flag(rows: List[dict], row: dict) -> str:
    """Check c_n = 4 c_(n-1) + 3 2**(n-1) for both unoptimized QSD columns."""
    n = row["n"]
    previous = {r["n"]: r for r in rows}.get(n - 1)
    checks = [
        reference_counts.recursion_holds(
            previous["qsd_l1"] if previous else reference_counts.qsd_base_one(n - 1),
            row["qsd_l1"],
            n,
        )
    ]
    if n >= 3:
        checks.append(
            reference_counts.recursion_holds(
                previous["qsd_l2"] if previous else reference_counts.qsd_base_two(n - 1),
                row["qsd_l2"],
                n,
            )
        )
    return "ok" if all(checks) else "fail"


def run_benchmark(
    n_min: int = 2, n_max: int = 5, seed: int = 0, trials: int = 20
) -> pd.DataFrame:
    """
    Build the count table.

    Parameters
    ----------
    n_min, n_max : int
            Range of qubit numbers, n_min >= 2.
    seed : int
            Seed of the first random unitary of every cell.
    trials : int
            Random unitaries per cell.

    Returns
    -------
    pd.DataFrame
            One row per n with the measured counts, the worst reconstruction
            error, the closed-form reference columns and the recursion check.
    """
    if n_min < 2 or n_max < n_min:
        raise ValueError(f"Need 2 <= n_min <= n_max, got {n_min}..{n_max}")
    if trials < 1:
        raise ValueError(f"Need at least one trial, got {trials}")

    cells = [(n, method) for n in range(n_min, n_max + 1) for method in METHODS]
    measured = {}
    for n, method in tqdm(cells, ncols=70, desc="Benchmark"):
        measured[n, method] = measure(method, n, seed, trials)
        log.debug(f"n={n} {method}: {measured[n, method][0]} CNOTs")

    rows: List[dict] = []
    for n in range(n_min, n_max + 1):
        row = {"n": n}
        row.update({method: measured[n, method][0] for method in METHODS})
        row["max_err"] = max(measured[n, method][1] for method in METHODS)
        row["qr_table"] = reference_counts.qr_reference(n)
        row["csd_ref"] = reference_counts.csd_reference(n)
        row["lower_bound"] = reference_counts.lower_bound(n)
        row["recursion"] = _recursion_flag(rows, row)
        rows.append(row)
    return pd.DataFrame(rows)


def format_table(table: pd.DataFrame) -> str:
    return table.to_string(index=False, formatters={"max_err": "{:.1e}".format})
