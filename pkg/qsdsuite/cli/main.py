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
Command line front end.

Exit codes: 0 success, 1 verification failed, 2 malformed input or options,
3 invalid matrix or state, 4 synthesis failure.
"""
import argparse
import logging
import pathlib
import sys
from time import perf_counter
from typing import List, Optional

import numpy as np

from qsdsuite import channel, formatter
from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.peephole import peephole_simplify
from qsdsuite.circuit.text_format import emit_qasm, emit_text, parse_text
from qsdsuite.cli.benchmark import format_table, run_benchmark
from qsdsuite.file_io.matrix_files import MatrixFile, StateFile
from qsdsuite.simulation.statevector import circuit_to_unitary, simulate
from qsdsuite.simulation.verification import (
    SynthesisReport,
    equivalence,
    state_fidelity,
    verify_synthesis,
)
from qsdsuite.synthesis.options import Method, QsdOptions
from qsdsuite.synthesis.qr import synth_qr
from qsdsuite.synthesis.shannon import synth_qsd
from qsdsuite.synthesis.state_preparation import prepare_state
from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import (
    CircuitParseError,
    DimensionError,
    GateIndexError,
    NotNormalizedError,
    NotUnitaryError,
    NumericalFailure,
    OptionConflict,
    SynthesisFailure,
    WidthTooLarge,
)
from qsdsuite.utils.linalg import num_qubits
from qsdsuite.utils.meta_functions import bits_to_int, parse_bitstring
from qsdsuite.utils.report_computer_characteristics import Report

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_FAILURE = 4

ACCEPT_ERR = 1e-6
ACCEPT_FIDELITY = 1 - 1e-8

_HANDLER_NAME = "qsdsuite-cli"


def _configure_logging(verbose: bool, quiet: bool):
    """
    Send package logs to stderr so stdout only carries circuits and reports.

    The package stdout channel is detached without being flushed. A stderr
    handler bound to the current sys.stderr replaces the one of an earlier call.
    """
    package_logger = logging.getLogger("qsdsuite")
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    for handler in list(package_logger.handlers):
        if handler is channel or handler.get_name() == _HANDLER_NAME:
            package_logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(_HANDLER_NAME)
    handler.setLevel(level)
    handler.setFormatter(formatter)
    package_logger.addHandler(handler)


def report_lines(report: SynthesisReport, n: int) -> List[str]:
    """key=value lines of a synthesis report."""
    counts = report.counts
    return [
        f"method={report.method}",
        f"n={n}",
        f"cnot={counts.cnot_equivalent}",
        f"cz={counts.cz}",
        f"ry={counts.ry}",
        f"rz={counts.rz}",
        f"ph={counts.phase}",
        f"recon_err={report.recon_err:.3e}",
        f"elapsed_s={report.elapsed:.4f}",
    ]


def _write_circuit(circuit: Circuit, args: argparse.Namespace):
    text = emit_qasm(circuit) if args.format == "qasm" else emit_text(circuit)
    if args.out is None:
        sys.stdout.write(text)
    else:
        pathlib.Path(args.out).write_text(text)
        log.info(f"circuit written to {args.out}")


def _options(args: argparse.Namespace, n: int) -> QsdOptions:
    base = args.base if args.base is not None else min(2, n)
    optimized = base == 2
    return QsdOptions(
        base_size=base,
        opt_a1=optimized and not args.no_a1,
        opt_a2=optimized and not args.no_a2,
        nn=args.nn,
    )


def cmd_synth(args: argparse.Namespace) -> int:
    config.verify_seed = args.seed
    u = MatrixFile(args.input).read()
    n = num_qubits(u.shape[0])
    if args.method == Method.QSD.value:
        circuit, report = synth_qsd(u, _options(args, n))
    else:
        start = perf_counter()
        circuit = synth_qr(u)
        report = verify_synthesis(
            u, circuit, method=Method.QR.value, elapsed=perf_counter() - start
        )
    if args.simplify:
        circuit = peephole_simplify(circuit)
        report = verify_synthesis(
            u, circuit, report.method, report.options, elapsed=report.elapsed
        )
    _write_circuit(circuit, args)
    print("\n".join(report_lines(report, n)))
    return EXIT_OK if report.recon_err <= ACCEPT_ERR else EXIT_MISMATCH


def cmd_prep(args: argparse.Namespace) -> int:
    psi = StateFile(args.input).read()
    n = num_qubits(psi.shape[0])
    bits = parse_bitstring(args.target, n)
    start = perf_counter()
    circuit = prepare_state(psi, bits)
    elapsed = perf_counter() - start

    basis = np.zeros(2**n, dtype=complex)
    basis[bits_to_int(bits)] = 1.0
    prepared = simulate(circuit, basis)
    fidelity = state_fidelity(circuit, psi, bits)
    report = SynthesisReport(
        method=Method.PREP.value,
        counts=circuit.counts(),
        recon_err=float(np.max(np.abs(prepared - psi))),
        elapsed=elapsed,
    )
    _write_circuit(circuit, args)
    print("\n".join(report_lines(report, n) + [f"fidelity={fidelity:.12f}"]))
    return EXIT_OK if fidelity >= ACCEPT_FIDELITY else EXIT_MISMATCH


def cmd_verify(args: argparse.Namespace) -> int:
    circuit = parse_text(pathlib.Path(args.circuit).read_text())
    u = MatrixFile(args.matrix).read()
    if num_qubits(u.shape[0]) != circuit.width:
        raise DimensionError(
            f"Circuit on {circuit.width} qubits against a {u.shape[0]}-dimensional matrix"
        )
    result = equivalence(circuit_to_unitary(circuit), u, tol=ACCEPT_ERR)
    print(f"equal_exact={str(result.equal_exact).lower()}")
    print(f"equal_up_to_phase={str(result.equal_up_to_phase).lower()}")
    print(f"phase={result.phase:.12f}")
    print(f"max_err={result.max_err:.3e}")
    return EXIT_OK if result.equal_exact else EXIT_MISMATCH


def cmd_bench(args: argparse.Namespace) -> int:
    table = run_benchmark(args.n_min, args.n_max, args.seed, args.trials)
    print(format_table(table))
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    print(Report())
    return EXIT_OK


def _add_output_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--out", default=None, help="Circuit file, stdout if omitted")
    parser.add_argument("--format", choices=["text", "qasm"], default="text")


def _logging_parent() -> argparse.ArgumentParser:
    """--verbose and --quiet for the subcommands, left unset when not given."""
    parent = argparse.ArgumentParser(add_help=False)
    flag = dict(action="store_true", default=argparse.SUPPRESS)
    parent.add_argument("--verbose", help="Show debug logs", **flag)
    parent.add_argument("--quiet", help="Only show warnings", **flag)
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsdsuite",
        description="Quantum circuit synthesis from unitaries and states.",
    )
    parser.add_argument("--verbose", action="store_true", help="Show debug logs")
    parser.add_argument("--quiet", action="store_true", help="Only show warnings")
    commands = parser.add_subparsers(dest="command", required=True)
    parents = [_logging_parent()]

    synth = commands.add_parser(
        "synth", parents=parents, help="Synthesize a unitary matrix file"
    )
    synth.add_argument("input", help="Matrix file")
    synth.add_argument("--method", choices=["qsd", "qr"], default="qsd")
    synth.add_argument("--base", type=int, choices=[1, 2], default=None)
    synth.add_argument("--no-a1", action="store_true", help="Plain CNOT Ry multiplexors")
    synth.add_argument("--no-a2", action="store_true", help="No diagonal migration")
    synth.add_argument("--nn", action="store_true", help="Nearest-neighbour gates only")
    synth.add_argument("--simplify", action="store_true", help="Run the peephole pass")
    synth.add_argument(
        "--seed", type=int, default=0, help="Seed of the sampled verification states"
    )
    _add_output_arguments(synth)
    synth.set_defaults(func=cmd_synth)

    prep = commands.add_parser("prep", parents=parents, help="Prepare a state file")
    prep.add_argument("input", help="State file")
    prep.add_argument("--target", default="", help="Starting basis state, e.g. 000")
    _add_output_arguments(prep)
    prep.set_defaults(func=cmd_prep)

    verify = commands.add_parser(
        "verify", parents=parents, help="Compare a circuit with a matrix"
    )
    verify.add_argument("circuit", help="Circuit text file")
    verify.add_argument("matrix", help="Matrix file")
    verify.set_defaults(func=cmd_verify)

    bench = commands.add_parser(
        "bench", parents=parents, help="Print the CNOT count table"
    )
    bench.add_argument("--n-min", type=int, default=2)
    bench.add_argument("--n-max", type=int, default=5)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--trials", type=int, default=20)
    bench.set_defaults(func=cmd_bench)

    report = commands.add_parser(
        "report", parents=parents, help="Print the environment report"
    )
    report.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Parameters
    ----------
    argv : list of str
            Arguments without the program name, sys.argv[1:] if None.

    Returns
    -------
    int
            Exit code.
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose, args.quiet)
    try:
        return args.func(args)
    except (CircuitParseError, OptionConflict, ValueError, OSError) as error:
        log.error(str(error))
        return EXIT_USAGE
    except (
        NotUnitaryError,
        NotNormalizedError,
        DimensionError,
        GateIndexError,
        WidthTooLarge,
    ) as error:
        log.error(str(error))
        return EXIT_INVALID
    except (SynthesisFailure, NumericalFailure) as error:
        log.error(str(error))
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
