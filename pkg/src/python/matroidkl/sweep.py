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

"""Conjecture sweeps over corpora of matroids.

Each corpus item is a matroid description (see
:func:`~matroidkl.matroid.parse_matroid_spec`), so items can be farmed
out to worker processes and the report is the same for any number of
workers.

.. testsetup:: sweep-intro

   from matroidkl.sweep import run_sweep

.. doctest:: sweep-intro

   >>> report = run_sweep(["uniform:1,3"], ("nonneg", "negrealroots"))
   >>> report.items[0].kl
   [1, 2]
   >>> report.items[0].checks
   {'negrealroots': 'pass', 'nonneg': 'pass'}
   >>> report.exit_code
   0
"""

import collections
import concurrent.futures
import dataclasses
import functools
import logging

from matroidkl import kl as _kl
from matroidkl import matroid as _matroid
from matroidkl.hazmat import helpers
from matroidkl.hazmat import real_roots


_LOGGER = logging.getLogger(__name__)
CHECKS = (
    "nonneg",
    "logconcave",
    "negrealroots",
    "nondegenerate",
    "interlace",
)
FAMILIES = ("uniform", "thagomizer", "k2n", "braid", "graphic", "linear")
PASS = "pass"
FAIL = "fail"
SKIP = "skip"
BUDGET = "budget-exceeded"
EXIT_PASS = 0
EXIT_FALSIFIED = 2
EXIT_BUDGET = 3
_FAMILY_KINDS = ("uniform", "complete", "thagomizer", "k2n")


def corpus_specs(families, max_size, edges=8, linear=()):
    """Matroid descriptions for a corpus.

    Args:
        families (Iterable[str]): Members of :data:`FAMILIES`.
        max_size (int): Bound ``N``: uniform matroids with
            ``m + d <= N`` and ``d >= 1``, thagomizers ``T_n`` with
            ``n <= N``, ``K_{2,n}`` with ``2 <= n <= N`` and braid
            matroids ``B_n`` with ``2 <= n <= N``.
        edges (int): Largest edge count for the bundled graphs.
        linear (Iterable[str]): ``linear:PATH:p`` descriptions.

    Returns:
        List[str]: The descriptions, grouped by family in the order
        given.

    Raises:
        ValueError: If a family is unknown.
    """
    specs = []
    for family in families:
        if family == "uniform":
            for total in range(1, max_size + 1):
                for d in range(1, total + 1):
                    specs.append(f"uniform:{total - d},{d}")
        elif family == "thagomizer":
            specs.extend(f"thagomizer:{n}" for n in range(max_size + 1))
        elif family == "k2n":
            specs.extend(f"k2n:{n}" for n in range(2, max_size + 1))
        elif family == "braid":
            specs.extend(f"complete:{n}" for n in range(2, max_size + 1))
        elif family == "graphic":
            for name, graph in _matroid.bundled_graphs().items():
                if len(graph) <= edges:
                    specs.append(f"graph:@{name}")
        elif family == "linear":
            specs.extend(linear)
        else:
            raise ValueError("Unknown corpus family", family)
    return specs


@dataclasses.dataclass(frozen=True)
class ItemResult:
    """Checks for a single matroid.

    Attributes:
        spec (str): The matroid description.
        rank (Optional[int]): Its rank (``None`` if it was never built).
        kl (List[int]): Coefficients of its KL polynomial.
        checks (Dict[str, str]): Check name to ``pass`` / ``fail`` /
            ``skip`` / ``budget-exceeded``.
        notes (List[str]): Explanations for skips and budget overruns.
        interlacing (List[dict]): ``parent`` / ``child`` / ``verdict``
            records for each contraction tested.
    """

    spec: str
    rank: object
    kl: list
    checks: dict
    notes: list = dataclasses.field(default_factory=list)
    interlacing: list = dataclasses.field(default_factory=list)

    def to_json(self):
        return {
            "spec": self.spec,
            "rank": self.rank,
            "kl": self.kl,
            "checks": self.checks,
            "notes": self.notes,
        }


def _is_regular(matroid):
    """Graphic matroids, plus uniform ones that are graphic."""
    if matroid.backing == "graphic":
        return True
    family = matroid.family
    return (
        family is not None
        and family.kind == "uniform"
        and min(family.params) <= 1
    )


def _contraction_elements(matroid):
    family = matroid.family
    if family is not None and family.kind in _FAMILY_KINDS:
        return [0]
    loops = matroid.loops()
    return [
        element
        for element in range(matroid.size)
        if not (loops >> element) & 1
    ]


_VERDICTS = {
    _kl.InterlacingStatus.PASS: PASS,
    _kl.InterlacingStatus.FAIL: FAIL,
    _kl.InterlacingStatus.HYPOTHESIS_NOT_MET: SKIP,
    _kl.InterlacingStatus.DEGENERATE: SKIP,
    _kl.InterlacingStatus.BUDGET_EXCEEDED: BUDGET,
}


def _combine(verdicts):
    for status in (FAIL, BUDGET, PASS):
        if status in verdicts:
            return status
    return SKIP


def _interlacing(spec, matroid, budget, notes):
    records = []
    verdicts = set()
    for element in _contraction_elements(matroid):
        report = _kl.check_contraction_interlacing(matroid, element, budget)
        verdicts.add(_VERDICTS[report.status])
        records.append(
            {
                "parent": spec,
                "child": f"{spec}/{element}",
                "verdict": report.status.value,
            }
        )
        if report.note:
            notes.append(f"interlace/{element}: {report.note}")
    return _combine(verdicts), records


def check_item(spec, checks, budget=None):
    """Run the requested checks on one matroid.

    Resource overruns are recorded in the result, never raised.

    Args:
        spec (str): A matroid description.
        checks (Iterable[str]): Members of :data:`CHECKS`.
        budget (Optional[int]): Root refinement budget for interlacing.

    Returns:
        ItemResult: The outcome.

    Raises:
        ~matroidkl.matroid.SpecParseError: If ``spec`` is malformed.
        ValueError: If a check name is unknown.
    """
    checks = sorted(set(checks))
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError("Unknown checks", sorted(unknown))
    matroid = _matroid.build_matroid(spec)
    notes = []
    try:
        poly = _kl.kl_polynomial(matroid).polynomial
    except helpers.ResourceCapExceeded as exc:
        _LOGGER.warning("%s: %s", spec, exc)
        statuses = {name: BUDGET for name in checks}
        return ItemResult(spec, matroid.rank, [], statuses, [str(exc)])
    results = {}
    records = []
    for name in checks:
        if name == "nonneg":
            passed = all(value >= 0 for value in poly.coefficients)
            results[name] = PASS if passed else FAIL
        elif name == "logconcave":
            passed = real_roots.is_log_concave_no_internal_zeros(poly)
            results[name] = PASS if passed else FAIL
        elif name == "negrealroots":
            passed = real_roots.all_roots_negative_real(poly)
            results[name] = PASS if passed else FAIL
        elif name == "nondegenerate":
            if matroid.rank == 0:
                results[name] = SKIP
                notes.append("nondegenerate: rank zero")
            elif not _is_regular(matroid):
                results[name] = SKIP
                notes.append("nondegenerate: not known to be regular")
            elif not _matroid.is_connected(matroid):
                results[name] = SKIP
                notes.append("nondegenerate: not connected")
            else:
                passed = poly.degree == (matroid.rank - 1) // 2
                results[name] = PASS if passed else FAIL
        else:
            try:
                results[name], records = _interlacing(
                    spec, matroid, budget, notes
                )
            except helpers.ResourceCapExceeded as exc:
                results[name] = BUDGET
                notes.append(f"interlace: {exc}")
    for name, status in results.items():
        if status == FAIL:
            _LOGGER.warning("%s fails %s", spec, name)
    return ItemResult(
        spec, matroid.rank, list(poly.coefficients), results, notes, records
    )


@dataclasses.dataclass(frozen=True)
class SweepReport:
    """The outcome of a sweep.

    Attributes:
        corpus (dict): Description of the corpus.
        items (List[ItemResult]): Per matroid results, in corpus order.
    """

    corpus: dict
    items: list

    @property
    def interlacing(self):
        """List[dict]: Every contraction pair tested."""
        return [record for item in self.items for record in item.interlacing]

    @property
    def falsifications(self):
        """List[str]: ``spec: check`` for every failed check."""
        return [
            f"{item.spec}: {name}"
            for item in self.items
            for name, status in item.checks.items()
            if status == FAIL
        ]

    @property
    def summary(self):
        """Dict[str, Dict[str, int]]: Status counts per check."""
        counts = collections.defaultdict(collections.Counter)
        for item in self.items:
            for name, status in item.checks.items():
                counts[name][status] += 1
        return {name: dict(counter) for name, counter in counts.items()}

    @property
    def exit_code(self):
        """int: ``0`` if everything passed, ``2`` for a falsification and
        ``3`` for a budget overrun without falsification."""
        if self.falsifications:
            return EXIT_FALSIFIED
        if any(
            status == BUDGET
            for item in self.items
            for status in item.checks.values()
        ):
            return EXIT_BUDGET
        return EXIT_PASS

    def to_json(self):
        return {
            "corpus": self.corpus,
            "items": [item.to_json() for item in self.items],
            "interlacing": self.interlacing,
            "summary": self.summary,
            "falsifications": self.falsifications,
        }

    def csv_rows(self, checks=CHECKS):
        """Header plus one flat row per item."""
        rows = [["spec", "rank", "kl", *checks, "notes"]]
        for item in self.items:
            rows.append(
                [
                    item.spec,
                    "" if item.rank is None else str(item.rank),
                    ";".join(str(value) for value in item.kl),
                    *(item.checks.get(name, "") for name in checks),
                    ";".join(item.notes),
                ]
            )
        return rows


def run_sweep(specs, checks, jobs=1, budget=None, corpus=None):
    """Run checks over a list of matroid descriptions.

    Args:
        specs (Sequence[str]): The corpus.
        checks (Iterable[str]): Members of :data:`CHECKS`.
        jobs (int): Worker processes; ``1`` runs in process.
        budget (Optional[int]): Root refinement budget for interlacing.
        corpus (Optional[dict]): Description stored in the report.

    Returns:
        SweepReport: The results, in ``specs`` order.
    """
    checks = tuple(sorted(set(checks)))
    task = functools.partial(check_item, checks=checks, budget=budget)
    _LOGGER.info("Sweeping %d matroids with %d job(s)", len(specs), jobs)
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(jobs) as executor:
            items = list(executor.map(task, specs))
    else:
        items = []
        for index, spec in enumerate(specs, start=1):
            items.append(task(spec))
            _LOGGER.info("[%d/%d] %s", index, len(specs), spec)
    if corpus is None:
        corpus = {"specs": len(specs)}
    corpus = dict(corpus, checks=list(checks))
    return SweepReport(corpus, items)
