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
Small helpers used across the package.
"""
import logging
from functools import wraps
from time import perf_counter
from typing import Callable, List, Sequence

log = logging.getLogger(__name__)


def timeit(f: Callable) -> Callable:
    """
    Decorator to time the execution of a method.

    Parameters
    ----------
    f : Callable
            Function to be wrapped.

    Returns
    -------
    wrap : Callable
            Method wrapper for timing the method.
    """

    @wraps(f)
    def wrap(*args, **kw):
        """Function to wrap a method and time its execution."""
        ts = perf_counter()
        result = f(*args, **kw)
        te = perf_counter()
        log.debug(f"function '{f.__name__}' took {(te - ts):.4f} s")

        return result

    return wrap


def int_to_bits(value: int, width: int) -> List[int]:
    """Bits of value, most significant first."""
    if value < 0 or value >= 2**width:
        raise ValueError(f"{value} does not fit in {width} bits")
    return [(value >> (width - 1 - i)) & 1 for i in range(width)]


def bits_to_int(bits: Sequence[int]) -> int:
    """Inverse of int_to_bits."""
    value = 0
    for bit in bits:
        value = (value << 1) | int(bit)
    return value


def parse_bitstring(text: str, width: int) -> List[int]:
    """
    Read a bitstring such as '0110'.

    An empty string means all zeros.
    """
    if text == "":
        return [0] * width
    if len(text) != width or set(text) - {"0", "1"}:
        raise ValueError(f"'{text}' is not a bitstring of length {width}")
    return [int(c) for c in text]
