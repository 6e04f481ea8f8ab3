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
Helpers shared by the test suite.
"""
import dataclasses

import numpy as np

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.simulation.statevector import circuit_to_unitary
from qsdsuite.utils.linalg import phase_aligned_distance


def assertDeepAlmostEqual(expected, actual, *args, **kwargs):
    """
    Assert that two nested structures have almost equal contents.

    Lists, tuples, dicts and dataclasses are compared recursively, numbers and
    arrays with :py:func:`numpy.testing.assert_array_almost_equal`, all other
    values with ==. Extra arguments are passed on to numpy (e.g. ``decimal``).
    """
    if isinstance(expected, (int, float, complex, np.ndarray, np.number)):
        np.testing.assert_array_almost_equal(expected, actual, *args, **kwargs)
    elif isinstance(expected, (list, tuple)):
        assert len(expected) == len(actual)
        for exp_item, act_item in zip(expected, actual):
            assertDeepAlmostEqual(exp_item, act_item, *args, **kwargs)
    elif isinstance(expected, dict):
        assert set(expected) == set(actual)
        for key in expected:
            assertDeepAlmostEqual(expected[key], actual[key], *args, **kwargs)
    elif dataclasses.is_dataclass(expected) and not isinstance(expected, type):
        assert type(expected) is type(actual)
        assertDeepAlmostEqual(
            dataclasses.asdict(expected), dataclasses.asdict(actual), *args, **kwargs
        )
    else:
        assert expected == actual


def circuit_error(circuit: Circuit, target: np.ndarray) -> float:
    """Max-entry error between a circuit's matrix and a target, phase included."""
    return float(np.max(np.abs(circuit_to_unitary(circuit) - target)))


def circuit_phase_error(circuit: Circuit, target: np.ndarray) -> float:
    """Max-entry error between a circuit's matrix and a target up to global phase."""
    return phase_aligned_distance(circuit_to_unitary(circuit), target)[1]
