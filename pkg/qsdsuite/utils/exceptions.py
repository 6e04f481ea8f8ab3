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
Exceptions raised throughout QSDSuite.
"""


class DimensionError(Exception):
    """Thrown when a matrix or vector does not have the required shape."""

    pass


class NotUnitaryError(Exception):
    """Thrown when a matrix fails the unitarity check."""

    def __init__(self, deviation: float, tol: float):
        """Constructor method."""
        self.deviation = deviation
        self.tol = tol
        self.message = (
            f"Matrix is not unitary: max |M^dag M - I| = {deviation:.3e} > {tol:.1e}"
        )
        super().__init__(self.message)


class NotNormalizedError(Exception):
    """Thrown when a state vector does not have unit norm."""

    pass


class NumericalFailure(Exception):
    """Thrown when a decomposition does not reassemble its input."""

    def __init__(self, what: str, residual: float):
        """Constructor method."""
        self.residual = residual
        self.message = f"{what} failed, reassembly residual {residual:.3e}"
        super().__init__(self.message)


class SynthesisFailure(Exception):
    """Thrown when a synthesized circuit does not match its target."""

    pass


class GateIndexError(Exception):
    """Thrown when a gate refers to a wire outside the circuit."""

    pass


class CircuitParseError(Exception):
    """Thrown when a circuit text document is malformed."""

    def __init__(self, line: int, reason: str):
        """Constructor method."""
        self.line = line
        self.reason = reason
        self.message = f"line {line}: {reason}"
        super().__init__(self.message)


class MatrixFileError(CircuitParseError):
    """Thrown when a matrix or state file is malformed."""

    pass


class OptionConflict(Exception):
    """Thrown when synthesis options cannot be combined."""

    pass


class WidthTooLarge(Exception):
    """Thrown when a dense reconstruction is requested beyond the configured width."""

    pass
