"""
QSDSuite: A Zincwarecode package.

License
-------
This program and the accompanying materials are made available under the terms
of the Eclipse Public License v2.0 which accompanies this distribution, and is
available at https://www.eclipse.org/legal/epl-v20.html

SPDX-License-Identifier: EPL-2.0

Copyright Contributors to the Zincwarecode Project.

Contact Information
-------------------
email: zincwarecode@gmail.com
github: https://github.com/zincware
web: https://zincwarecode.com/

Summary
-------
Test the generic one-data-wire multiplexor module.
"""
import numpy as np
import pytest
import scipy.linalg

from qsdsuite.multiplexors import synth_mux_1q
from qsdsuite.utils.exceptions import DimensionError, NotUnitaryError
from qsdsuite.utils.linalg import random_unitary
from qsdsuite.utils.testing import circuit_error


class TestGenericMultiplexor:
    """Test synth_mux_1q."""

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_block_diagonal(self, k):
        """
        Test that the circuit is the block diagonal of the cases.

        Parameters
        ----------
        k : int
                Number of select wires.
        """
        cases = [random_unitary(1, seed) for seed in range(2**k)]
        circuit = synth_mux_1q(k, tuple(range(k)), cases)
        assert circuit.width == k + 1
        assert circuit_error(circuit, scipy.linalg.block_diag(*cases)) < 1e-10

    def test_two_select_count(self):
        """
        Test the CNOT count with two select wires.

        Returns
        -------
        Three ladders of four plus a two-wire diagonal. The equal CNOTs where two
        ladders meet cancel, 4 + 4 - 2 + 4 + 2 = 12.
        """
        cases = [random_unitary(1, 40 + seed) for seed in range(4)]
        assert synth_mux_1q(2, (0, 1), cases).counts().cnot == 12

    def test_equal_cases(self):
        """
        Test that equal cases need no entanglers.
        """
        u = random_unitary(1, 3)
        circuit = synth_mux_1q(2, (0, 1), [u] * 4)
        assert circuit.counts().cnot == 0
        assert circuit_error(circuit, np.kron(np.eye(4), u)) < 1e-10

    def test_errors(self):
        """
        Test that bad case lists are rejected.
        """
        with pytest.raises(DimensionError):
            synth_mux_1q(1, (0,), [np.eye(2)])
        with pytest.raises(NotUnitaryError):
            synth_mux_1q(1, (0,), [np.eye(2), 2 * np.eye(2)])
