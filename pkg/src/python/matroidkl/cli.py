# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command line interface.

Three sub-commands are provided:

* ``compute SPEC``: the KL polynomial of one matroid
* ``check``: conjecture sweeps over a corpus
* ``solve NAME``: order by order solutions of the functional equations

Exit codes are ``0`` when every check passes, ``2`` when a conjecture is
falsified, ``3`` when a resource budget ran out without a falsification
and ``1`` for invalid input or internal disagreement.
"""

import argparse
import csv
import io
import json
import logging
import sys

from matroidkl import __config__
from matroidkl import equivariant
from matroidkl import kl as _kl
from matroidkl import matroid as _matroid
from matroidkl import sweep
from matroidkl.hazmat import helpers


_LOGGER = logging.getLogger(__name__)
EXIT_ERROR = 1
SOLVE_NAMES = (
    "uniform",
    "uniform-eq",
    "thag",
    "thag-eq",
    "braid",
    "braid-eq",
)
DEFAULT_THAGOMIZER_ORDER = 10
DEFAULT_EQUIVARIANT_THAGOMIZER_ORDER = 8
DEFAULT_UNIFORM_SIZE = 8


def _comma_list(text):
    return [piece.strip() for piece in text.split(",") if piece.strip()]


def _int_list(text):
    try:
        return [int(piece) for piece in _comma_list(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma separated integers, got {text!r}"
        ) from None


def _linear_spec(text):
    path, sep, prime = text.rpartition(":")
    if not sep or not path or not prime.isdigit():
        raise argparse.ArgumentTypeError(f"expected PATH:p, got {text!r}")
    return f"linear:{text}"


def build_parser():
    """The :class:`argparse.ArgumentParser` for ``matroidkl``."""
    parser = argparse.ArgumentParser(
        prog="matroidkl",
        description="Kazhdan-Lusztig polynomials of matroids.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log INFO (once) or DEBUG (twice) messages to stderr.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_output(sub):
        sub.add_argument("--format", choices=("json", "csv"), default="json")
        sub.add_argument("--out", metavar="PATH", help="Write to a file.")

    compute = subparsers.add_parser("compute", help="Compute one polynomial.")
    compute.add_argument("spec", help="Matroid description, e.g. uniform:1,6")
    compute.add_argument(
        "--equivariant",
        action="store_true",
        help="Also report the symmetric group character.",
    )
    compute.add_argument(
        "--lattice",
        action="store_true",
        help="Force the lattice recursion.",
    )
    add_output(compute)

    check = subparsers.add_parser("check", help="Run a conjecture sweep.")
    check.add_argument(
        "--families",
        type=_comma_list,
        default=["uniform"],
        help=f"Comma separated subset of {', '.join(sweep.FAMILIES)}.",
    )
    check.add_argument("--max", type=int, default=8, dest="max_size")
    check.add_argument(
        "--checks",
        type=_comma_list,
        default=list(sweep.CHECKS),
        help=f"Comma separated subset of {', '.join(sweep.CHECKS)}.",
    )
    check.add_argument("--edges", type=int, default=8)
    check.add_argument(
        "--linear",
        type=_linear_spec,
        action="append",
        default=[],
        metavar="PATH:p",
    )
    check.add_argument("--jobs", type=int, default=1)
    check.add_argument(
        "--budget", type=int, default=None, help="Root refinement step budget."
    )
    add_output(check)

    solve = subparsers.add_parser("solve", help="Solve a functional equation.")
    solve.add_argument("name", choices=SOLVE_NAMES)
    solve.add_argument("--max", type=int, default=None, dest="max_size")
    solve.add_argument(
        "--orders",
        type=_int_list,
        default=None,
        help="Uniform only: X,U truncation orders.",
    )
    solve.add_argument(
        "--check-gf",
        type=_int_list,
        default=[],
        help="Braid only: compare coefficient generating functions.",
    )
    solve.add_argument(
        "--leading",
        type=int,
        default=None,
        metavar="K",
        help="Braid only: leading coefficient table up to k = K.",
    )
    add_output(solve)
    return parser


def _write(args, payload, rows):
    if args.format == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        buffer = io.StringIO()
        csv.writer(buffer, lineterminator="\n").writerows(rows)
        text = buffer.getvalue()
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as file_obj:
            file_obj.write(text)


def _equivariant_for(matroid):
    family = matroid.family
    kind = None if family is None else family.kind
    if kind == "uniform":
        return equivariant.uniform_equivariant(*family.params)
    if kind == "thagomizer":
        (n,) = family.params
        return equivariant.solve_thagomizer_fe(n, equivariant=True)[n]
    if kind == "complete":
        (n,) = family.params
        return equivariant.solve_braid_fe(max(n, 1), equivariant=True)[
            max(n, 1)
        ]
    raise ValueError(
        "Equivariant data is available for uniform, thagomizer and "
        "complete matroids only",
        kind,
    )


def cmd_compute(args):
    matroid = _matroid.build_matroid(_matroid.parse_matroid_spec(args.spec))
    method = _kl.Method.LATTICE if args.lattice else None
    result = _kl.kl_polynomial(matroid, method)
    payload = dict(result.to_json(), spec=args.spec)
    if _matroid.simplify(matroid) is not matroid:
        # Loops and parallel copies do not change the lattice of flats.
        payload["simplified"] = True
        _LOGGER.info("%s has loops or parallel elements", args.spec)
    rows = [
        ["spec", "rank", "method", "kl"],
        [
            args.spec,
            str(result.matroid_rank),
            result.method.value,
            ";".join(str(value) for value in result.coefficients),
        ],
    ]
    if args.equivariant:
        character = _equivariant_for(matroid)
        payload["equivariant"] = character.to_json()
    _write(args, payload, rows)
    return sweep.EXIT_PASS


def cmd_check(args):
    specs = sweep.corpus_specs(
        args.families, args.max_size, args.edges, args.linear
    )
    corpus = {
        "families": args.families,
        "max": args.max_size,
        "edges": args.edges,
        "linear": args.linear,
    }
    report = sweep.run_sweep(
        specs, args.checks, args.jobs, args.budget, corpus
    )
    _write(args, report.to_json(), report.csv_rows())
    for line in report.falsifications:
        _LOGGER.warning("Falsification: %s", line)
    return report.exit_code


def _equivariant_rows(label, ekl):
    rows = []
    for index, character in enumerate(ekl.coefficients):
        for shape, value in sorted(character.schur_terms().items()):
            rows.append(
                [
                    label,
                    str(index),
                    ".".join(str(part) for part in shape),
                    str(helpers.exact_integer(value.coefficient(0))),
                ]
            )
    return rows


def _solve_table(args):
    name = args.name
    equivariant_mode = name.endswith("-eq")
    if name.startswith("uniform"):
        size = args.max_size or DEFAULT_UNIFORM_SIZE
        x_order, u_order = size, size + 1
        if args.orders is not None:
            if len(args.orders) != 2:
                raise ValueError("--orders expects X,U", args.orders)
            x_order, u_order = args.orders
        table = equivariant.solve_uniform_fe(
            x_order, u_order, equivariant_mode, max_size=args.max_size
        )
        return "uniform", table
    if name.startswith("thag"):
        default = (
            DEFAULT_EQUIVARIANT_THAGOMIZER_ORDER
            if equivariant_mode
            else DEFAULT_THAGOMIZER_ORDER
        )
        n_max = default if args.max_size is None else args.max_size
        return "thagomizer", equivariant.solve_thagomizer_fe(
            n_max, equivariant_mode
        )
    return "braid", equivariant.solve_braid_fe(
        args.max_size, equivariant_mode
    )


def _label(key):
    if isinstance(key, tuple):
        return ",".join(str(part) for part in key)
    return str(key)


def cmd_solve(args):
    family, table = _solve_table(args)
    mismatches = equivariant.cross_check(family, table)
    exit_code = sweep.EXIT_PASS
    entries = []
    rows = []
    for key, value in table.items():
        label = _label(key)
        if isinstance(value, equivariant.EquivariantKL):
            positive = equivariant.equivariant_positivity_check(value)
            failures = equivariant.strong_log_concavity_failures(value)
            if not positive or failures:
                exit_code = sweep.EXIT_FALSIFIED
            entries.append(
                {
                    "key": label,
                    "equivariant": value.to_json(),
                    "schur_positive": positive,
                    "strong_log_concave_failures": [
                        list(quad) for quad in failures
                    ],
                }
            )
            rows.extend(_equivariant_rows(label, value))
        else:
            coefficients = list(value.coefficients)
            entries.append({"key": label, "kl": coefficients})
            rows.append([label, ";".join(str(c) for c in coefficients)])
    payload = {
        "family": family,
        "equivariant": args.name.endswith("-eq"),
        "table": entries,
        "cross_check": {
            "status": "fail" if mismatches else "pass",
            "mismatches": [_label(key) for key in mismatches],
        },
    }
    if family == "braid":
        reports = [
            equivariant.braid_coefficient_gf_check(index)
            for index in args.check_gf
        ]
        payload["generating_functions"] = [
            {
                "index": report.index,
                "match": report.match,
                "first_mismatch": report.first_mismatch,
            }
            for report in reports
        ]
        if not all(report.match for report in reports):
            _LOGGER.error("Generating function check failed")
            exit_code = EXIT_ERROR
        if args.leading is not None:
            leading = equivariant.braid_leading_coeff_check(args.leading)
            payload["leading"] = [
                {
                    "k": row.k,
                    "computed": row.computed,
                    "conjectured": row.conjectured,
                    "match": row.match,
                }
                for row in leading
            ]
            if not all(row.match for row in leading):
                exit_code = sweep.EXIT_FALSIFIED
    _write(args, payload, rows)
    if mismatches:
        _LOGGER.error("Cross-check failed: %s", payload["cross_check"])
        return EXIT_ERROR
    return exit_code


_COMMANDS = {"compute": cmd_compute, "check": cmd_check, "solve": cmd_solve}


def main(argv=None):
    """Entry point for the ``matroidkl`` console script.

    Args:
        argv (Optional[List[str]]): Arguments, defaults to ``sys.argv``.

    Returns:
        int: The exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    __config__.configure_logging(args.verbose, sys.stderr)
    try:
        return _COMMANDS[args.command](args)
    except _matroid.SpecParseError as exc:
        _LOGGER.error("%s", exc)
    except (
        ValueError,
        helpers.InconsistentRecursion,
        helpers.NonIntegralCoefficient,
        helpers.ResourceCapExceeded,
    ) as exc:
        _LOGGER.error("%s: %s", type(exc).__name__, exc)
    return EXIT_ERROR
