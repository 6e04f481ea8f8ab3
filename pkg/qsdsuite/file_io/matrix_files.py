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
Plain-text matrix and state files.

Both start with a line 'dim <d>'. A matrix file then has d rows of d
whitespace separated 're,im' tokens, a state file d lines with one token each.
"""
from __future__ import annotations

import abc
import logging
import pathlib
from typing import List, Tuple, Union

import numpy as np
import scipy.linalg

from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import MatrixFileError, NotNormalizedError, NotUnitaryError
from qsdsuite.utils.linalg import unitary_deviation

log = logging.getLogger(__name__)


def _parse_complex(token: str, line: int) -> complex:
    parts = token.split(",")
    if len(parts) != 2:
        raise MatrixFileError(line, f"'{token}' is not of the form re,im")
    try:
        value = complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise MatrixFileError(line, f"'{token}' is not of the form re,im")
    if not np.isfinite(value):
        raise MatrixFileError(line, f"'{token}' is not finite")
    return value


def _format_complex(value: complex) -> str:
    return f"{float(np.real(value))!r},{float(np.imag(value))!r}"


def _numbered_lines(text: str) -> List[Tuple[int, str]]:
    """Non-blank lines with their 1-based line numbers."""
    lines = enumerate(text.splitlines(), start=1)
    return [(number, line.strip()) for number, line in lines if line.strip()]


def _parse_rows(text: str, columns: int) -> np.ndarray:
    """Header plus rows of `columns` tokens, columns = 0 meaning d tokens per row."""
    lines = _numbered_lines(text)
    if not lines:
        raise MatrixFileError(1, "empty file")
    number, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] != "dim":
        raise MatrixFileError(number, "expected header 'dim <d>'")
    try:
        dim = int(tokens[1])
    except ValueError:
        raise MatrixFileError(number, f"'{tokens[1]}' is not an integer dimension")
    if dim < 1 or dim & (dim - 1):
        raise MatrixFileError(number, f"dimension {dim} is not a power of two")

    rows = lines[1:]
    if len(rows) != dim:
        last = rows[-1][0] if rows else number
        raise MatrixFileError(last, f"expected {dim} rows, found {len(rows)}")
    width = columns or dim
    data = np.zeros((dim, width), dtype=complex)
    for r, (number, line) in enumerate(rows):
        tokens = line.split()
        if len(tokens) != width:
            raise MatrixFileError(
                number, f"expected {width} entries, found {len(tokens)}"
            )
        data[r] = [_parse_complex(token, number) for token in tokens]
    return data


def parse_matrix(text: str) -> np.ndarray:
    """
    Read and validate a matrix document.

    The matrix must be unitary within config.tol_load. A matrix that passes
    that check but not config.tol_unitary is replaced by the unitary factor of
    its polar decomposition, the nearest unitary matrix.

    Raises
    ------
    MatrixFileError
            For a malformed document.
    NotUnitaryError
            If the matrix is not unitary at the load tolerance.
    """
    m = _parse_rows(text, 0)
    deviation = unitary_deviation(m)
    if deviation > config.tol_load:
        raise NotUnitaryError(deviation, config.tol_load)
    if deviation > config.tol_unitary:
        log.info(f"Projecting matrix with deviation {deviation:.2e} onto the unitaries")
        m, _ = scipy.linalg.polar(m)
    return m


def parse_state(text: str) -> np.ndarray:
    """
    Read and validate a state document.

    The squared norm must be within config.tol_load of one; the state is
    renormalized afterwards.
    """
    psi = _parse_rows(text, 1)[:, 0]
    norm = float(np.linalg.norm(psi))
    if abs(norm**2 - 1.0) > config.tol_load:
        raise NotNormalizedError(f"State has squared norm {norm**2:.12f}")
    return psi / norm


def format_matrix(m: np.ndarray) -> str:
    m = np.asarray(m, dtype=complex)
    lines = [f"dim {m.shape[0]}"]
    lines += [" ".join(_format_complex(value) for value in row) for row in m]
    return "\n".join(lines) + "\n"


def format_state(psi: np.ndarray) -> str:
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    lines = [f"dim {psi.shape[0]}"] + [_format_complex(value) for value in psi]
    return "\n".join(lines) + "\n"


class TextFile(abc.ABC):
    """
    Parent class of the text files read and written by the command line.

    Attributes
    ----------
    file_path : pathlib.Path
            Location of the file.
    """

    def __init__(self, file_path: Union[str, pathlib.Path]):
        """
        Constructor method.

        Parameters
        ----------
        file_path : str or pathlib.Path
                Location of the file.
        """
        self.file_path = pathlib.Path(file_path)

    def __str__(self):
        return str(self.file_path)

    @abc.abstractmethod
    def parse(self, text: str) -> np.ndarray:
        raise NotImplementedError("Text files must implement parsing")

    @abc.abstractmethod
    def format(self, data: np.ndarray) -> str:
        raise NotImplementedError("Text files must implement formatting")

    def read(self) -> np.ndarray:
        """Parse the file content."""
        log.debug(f"reading {self}")
        return self.parse(self.file_path.read_text())

    def write(self, data: np.ndarray):
        """Overwrite the file with data."""
        self.file_path.write_text(self.format(data))


class MatrixFile(TextFile):
    """Unitary matrix stored as text."""

    def parse(self, text: str) -> np.ndarray:
        return parse_matrix(text)

    def format(self, data: np.ndarray) -> str:
        return format_matrix(data)


class StateFile(TextFile):
    """State vector stored as text."""

    def parse(self, text: str) -> np.ndarray:
        return parse_state(text)

    def format(self, data: np.ndarray) -> str:
        return format_state(data)
