# Copyright 2026 The hausdorffpy developers
#
# This file is part of hausdorffpy.
#
# hausdorffpy is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# hausdorffpy is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with hausdorffpy.  If not, see <https://www.gnu.org/licenses/>.
"""
Command-line interface: apply operators to spectrum files, transform
Dirichlet coefficient files, and run the verification suites.

Exit codes: 0 success, 1 a verification check failed, 2 bad input,
3 incompatible inputs (group, family or dimension mismatch).
"""

from __future__ import annotations

import argparse
import logging
import os
import pathlib
import sys
from typing import Callable, Sequence

from . import VERSION, IncompatibilityError, ValidationError
from . import _common
from . import dirichlet
from . import hausdorff
from . import verification
from .hausdorff import HausdorffOperator
from .spectrum import Spectrum


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_INCOMPATIBLE = 3


def _guarded(action: Callable[[], int]) -> int:
    """
    Run action, turning hausdorffpy's exceptions into exit codes and
    one-line diagnostics.
    """
    try:
        return action()
    except IncompatibilityError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_INCOMPATIBLE
    except ValidationError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f'error: cannot write "{e.filename}": {e.strerror}', file=sys.stderr)
        return EXIT_INVALID


def cmdApply(configPath: str | os.PathLike, spectrumPath: str | os.PathLike,
        outputPath: str | os.PathLike) -> int:
    """
    Apply the operator in configPath to the spectrum in spectrumPath,
    and write the result to outputPath.
    """
    def action():
        H = HausdorffOperator.fromFile(configPath)
        s = Spectrum.fromFile(spectrumPath)
        result = hausdorff.apply(H, s)
        result.saveToFile(outputPath)
        print(f'{H} -> {len(result)} terms written to {outputPath}')
        return EXIT_OK
    return _guarded(action)


def cmdVerify(suite: str, seed: int = 0, reportPath: str | os.PathLike | None = None) -> int:
    """
    Run a verification suite and optionally save its report. Returns 0
    if every check passed.
    """
    def action():
        report = verification.runSuite(suite, seed)
        for check in report.checks:
            print(check)
        if reportPath is not None:
            report.saveToFile(reportPath)
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED
    return _guarded(action)


def cmdDirichlet(op: str, configPath: str | os.PathLike, coeffsPath: str | os.PathLike,
        outputPath: str | os.PathLike, nMax: int = dirichlet.N_MAX) -> int:
    """
    Transform a Dirichlet coefficient file with the sigma_u operator
    (op='sigma') or the root-rescaling operator (op='rootscale').
    """
    def action():
        config = _common.loadJsonFile(configPath)
        D = dirichlet.DirichletPolynomial.fromFile(coeffsPath, nMax)
        if op == 'sigma':
            weights = dirichlet.sigmaWeightsFromJsonData(config, str(configPath))
            result = dirichlet.sigmaOperator(weights, D)
        elif op == 'rootscale':
            weights = dirichlet.rootScaleWeightsFromJsonData(config, str(configPath))
            result = dirichlet.rootRescaleOperator(weights, D)
        else:
            raise ValidationError(f'Unknown Dirichlet operator {op!r}')
        result.saveToFile(outputPath)
        print(f'{len(result)} coefficients written to {outputPath}')
        return EXIT_OK
    return _guarded(action)


def main(args: Sequence[str] | None = None) -> int:
    """
    Main function for the CLI
    """
    parser = argparse.ArgumentParser(
        description='hausdorffpy CLI: apply discrete Hausdorff operators and verify their properties.')
    parser.add_argument('--version', action='version',
        version='hausdorffpy ' + '.'.join(str(x) for x in VERSION))
    parser.add_argument('-v', '--verbose', action='count', default=0,
        help='log more details (repeat for debug output)')
    subparsers = parser.add_subparsers(title='commands',
        description='(run a command with -h for additional help)')

    def handleApply(pArgs):
        """
        Handle the "apply" command.
        """
        return cmdApply(pArgs.config, pArgs.input_file, pArgs.output_file)

    parser_apply = subparsers.add_parser('apply',
        help='apply a Hausdorff operator to a spectrum file')
    parser_apply.add_argument('config', type=pathlib.Path,
        help='operator config (JSON)')
    parser_apply.add_argument('input_file', type=pathlib.Path,
        help='spectrum to apply the operator to')
    parser_apply.add_argument('output_file', type=pathlib.Path,
        help='where to save the resulting spectrum')
    parser_apply.set_defaults(func=handleApply)

    def handleVerify(pArgs):
        """
        Handle the "verify" command.
        """
        return cmdVerify(pArgs.suite, pArgs.seed, pArgs.report)

    parser_verify = subparsers.add_parser('verify',
        help='run a verification suite')
    parser_verify.add_argument('--suite', choices=list(verification.SUITES), default='all',
        help='which suite to run (default: all)')
    parser_verify.add_argument('--seed', type=int, default=0,
        help='seed for the random instances (default: 0)')
    parser_verify.add_argument('--report', type=pathlib.Path,
        help='where to save the JSON report')
    parser_verify.set_defaults(func=handleVerify)

    def handleDirichlet(pArgs):
        """
        Handle the "dirichlet" command.
        """
        return cmdDirichlet(pArgs.op, pArgs.config, pArgs.coeffs_file, pArgs.output_file,
                            pArgs.n_max)

    parser_dirichlet = subparsers.add_parser('dirichlet',
        help='transform a Dirichlet coefficient file')
    parser_dirichlet.add_argument('--op', choices=['sigma', 'rootscale'], required=True,
        help='which operator to apply')
    parser_dirichlet.add_argument('config', type=pathlib.Path,
        help='operator weights (JSON)')
    parser_dirichlet.add_argument('coeffs_file', type=pathlib.Path,
        help='Dirichlet coefficients to transform')
    parser_dirichlet.add_argument('output_file', type=pathlib.Path,
        help='where to save the resulting coefficients')
    parser_dirichlet.add_argument('--n-max', type=int, default=dirichlet.N_MAX,
        help=f'largest allowed coefficient index (default: {dirichlet.N_MAX})')
    parser_dirichlet.set_defaults(func=handleDirichlet)

    # Parse args and run appropriate function
    pArgs = parser.parse_args(args)
    logging.basicConfig(level=max(logging.DEBUG, logging.WARNING - 10 * pArgs.verbose),
                        format='%(levelname)s %(name)s: %(message)s')
    if hasattr(pArgs, 'func'):
        return pArgs.func(pArgs)
    else:  # this happens if no arguments were specified at all
        parser.print_usage()
        return EXIT_INVALID


if __name__ == '__main__':
    sys.exit(main())
