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
Closed-form CNOT counts of the synthesis methods and of related constructions.
"""
from qsdsuite.synthesis.qr import qr_cnot_count

__all__ = [
    "csd_reference",
    "lower_bound",
    "qr_cnot_count",
    "qr_reference",
    "qsd_base_one",
    "qsd_base_two",
    "qsd_optimized",
    "recursion_holds",
    "state_prep_bound",
]


def _check(n: int, minimum: int = 1):
    if n < minimum:
        raise ValueError(f"Count formula needs n >= {minimum}, got {n}")


def qsd_base_one(n: int) -> int:
    """(3/4) 4**n - (3/2) 2**n, recursion down to one qubit."""
    _check(n)
    return (3 * 4**n - 6 * 2**n) // 4


def qsd_base_two(n: int) -> int:
    """(9/16) 4**n - (3/2) 2**n, recursion down to two qubits."""
    _check(n, 2)
    return (9 * 4**n - 24 * 2**n) // 16


def qsd_optimized(n: int) -> int:
    """(23/48) 4**n - (3/2) 2**n + 4/3, both optimizations on."""
    _check(n, 2)
    return (23 * 4**n - 72 * 2**n + 64) // 48


def qr_reference(n: int) -> int:
    """2 4**n - (2n + 3) 2**n + 2n, the published column-by-column count."""
    _check(n)
    return 2 * 4**n - (2 * n + 3) * 2**n + 2 * n


def csd_reference(n: int) -> int:
    """4**n - 2 2**n for the plain cosine-sine recursion."""
    _check(n)
    return 4**n - 2 * 2**n


def lower_bound(n: int) -> int:
    """ceil((4**n - 3n - 1) / 4), the dimension counting bound."""
    _check(n)
    return -(-(4**n - 3 * n - 1) // 4)


def state_prep_bound(n: int) -> int:
    """2**(n+1) - 2n."""
    _check(n)
    return 2 ** (n + 1) - 2 * n


def recursion_holds(previous: int, current: int, n: int) -> bool:
    """Whether c_n = 4 c_(n-1) + 3 2**(n-1) for unoptimized QSD counts."""
    return current == 4 * previous + 3 * 2 ** (n - 1)
