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

r"""Kazhdan-Lusztig polynomials of matroids.

The Kazhdan-Lusztig polynomial :math:`P_M(t)` of a matroid depends only on
its lattice of flats. It is the unique assignment with :math:`P_M = 1` in
rank zero, :math:`\deg P_M < \operatorname{rk} M / 2` in positive rank and

.. math::

   t^{\operatorname{rk} M} P_M(t^{-1}) =
       \sum_F \chi_{M_F}(t) P_{M^F}(t).

.. doctest:: kl-intro

   >>> from matroidkl import kl
   >>> from matroidkl import matroid
   >>> result = kl.kl_polynomial(matroid.uniform(1, 3))
   >>> result.coefficients
   [1, 2]
   >>> result.method
   <Method.CLOSED_FORM: 'closed_form'>
"""

import dataclasses
import enum
import logging

import numpy as np

from matroidkl import matroid as _matroid
from matroidkl.hazmat import helpers
from matroidkl.hazmat import kl_helpers
from matroidkl.hazmat import polynomial
from matroidkl.hazmat import real_roots


_LOGGER = logging.getLogger(__name__)
MAX_BRAID = 25
_ONE = polynomial.Polynomial.constant(1)
_T = polynomial.Polynomial.monomial(1)


class Method(enum.Enum):
    """How a Kazhdan-Lusztig polynomial was computed."""

    LATTICE = "lattice"
    UNIFORM_TYPE = "uniform_type"
    BRAID_TYPE = "braid_type"
    THAGOMIZER_TYPE = "thagomizer_type"
    CLOSED_FORM = "closed_form"
    FUNCTIONAL_EQUATION = "functional_equation"
    DIRECT_SUM = "direct_sum"


@dataclasses.dataclass(frozen=True)
class KLResult:
    """A Kazhdan-Lusztig polynomial with its provenance.

    Args:
        polynomial (~matroidkl.hazmat.polynomial.Polynomial): The
            polynomial.
        matroid_rank (int): The rank of the matroid.
        method (Method): The method used.

    Raises:
        ~matroidkl.hazmat.helpers.InconsistentRecursion: If the constant
            term is not one or the degree bound fails.
    """

    polynomial: polynomial.Polynomial
    matroid_rank: int
    method: Method

    def __post_init__(self):
        poly = self.polynomial
        if poly.coefficient(0) != 1:
            raise helpers.InconsistentRecursion(
                "Constant term must be one", poly
            )
        if self.matroid_rank == 0 and poly != _ONE:
            raise helpers.InconsistentRecursion(
                "Rank zero polynomial must be one", poly
            )
        if self.matroid_rank > 0 and 2 * poly.degree >= self.matroid_rank:
            raise helpers.InconsistentRecursion(
                "Degree bound violated", poly.degree, self.matroid_rank
            )
        if not poly.is_integral():
            raise helpers.NonIntegralCoefficient(
                "Kazhdan-Lusztig coefficients are integers", poly
            )

    @property
    def coefficients(self):
        """List[int]: Coefficients, lowest degree first."""
        return list(self.polynomial.coefficients)

    def to_json(self):
        """Dictionary with ``rank``, ``method`` and ``kl`` keys."""
        return {
            "rank": self.matroid_rank,
            "method": self.method.value,
            "kl": self.coefficients,
        }


def upper_interval_polynomials(lattice):
    r"""Kazhdan-Lusztig polynomials of every upper interval of a lattice.

    Works top down. Let :math:`\rho` be the rank function and
    :math:`Z_F(t) = \sum_{G \geq F} t^{\rho(G) - \rho(F)} P_G(t)`. The
    defining recursion on every interval is equivalent to :math:`Z_F`
    being palindromic of degree :math:`r_F`, the rank of
    :math:`[F, \hat{1}]`. Splitting off :math:`P_F` leaves
    :math:`S_F = Z_F - P_F` and

    .. math::

       t^{r_F} P_F(t^{-1}) - P_F(t) = S_F(t) - t^{r_F} S_F(t^{-1}).

    Args:
        lattice (~matroidkl.lattice.FlatLattice): The lattice.

    Returns:
        List[~matroidkl.hazmat.polynomial.Polynomial]: The polynomial of
        ``[F, top]`` for every flat ``F``, in lattice order.
    """
    masks = lattice.masks
    ranks = [int(rank) for rank in lattice.ranks]
    top_rank = lattice.rank
    width = top_rank + 1
    # rows[G] holds the coefficients of t^{rk G} P_G
    rows = np.zeros((len(masks), width), dtype=object)
    result = [None] * len(masks)
    for index in range(len(masks) - 1, -1, -1):
        flat = int(masks[index])
        rank = ranks[index]
        interval_rank = top_rank - rank
        upper = lattice.upper_set(flat)
        upper = upper[upper != index]
        if upper.size:
            total = rows[upper].sum(axis=0)
        else:
            total = np.zeros(width, dtype=object)
        above = polynomial.Polynomial(int(value) for value in total[rank:])
        rhs = above - above.reflect(interval_rank)
        poly = kl_helpers.degree_split(interval_rank, rhs, expect_constant=1)
        result[index] = poly
        for offset, value in enumerate(poly.coefficients):
            rows[index, rank + offset] = value
    return result


def _lattice_kl(lattice):
    polys = upper_interval_polynomials(lattice)
    rank = lattice.rank
    if rank == 0:
        return polys[0]
    rhs = polynomial.Polynomial()
    for index, mask in enumerate(lattice.masks[1:], start=1):
        rhs = rhs + lattice.lower_characteristic_polynomial(int(mask)) * (
            polys[index]
        )
    literal = kl_helpers.degree_split(rank, rhs, expect_constant=1)
    if literal != polys[0]:
        raise helpers.InconsistentRecursion(
            "Interval recursion disagrees with the defining sum",
            literal,
            polys[0],
        )
    return literal


def _family_kl(family, rank):
    kind = family.kind
    if kind == "uniform":
        m, d = family.params
        if m == 0:
            return _ONE, Method.CLOSED_FORM
        if m == 1:
            return kl_helpers.uniform_one_closed(d), Method.CLOSED_FORM
        return kl_helpers.kl_uniform_type(m, d), Method.UNIFORM_TYPE
    if kind == "complete":
        (n,) = family.params
        if n <= MAX_BRAID:
            return kl_helpers.kl_braid_type(max(n, 1)), Method.BRAID_TYPE
    if kind == "thagomizer":
        (n,) = family.params
        return kl_helpers.thagomizer_closed(n), Method.CLOSED_FORM
    if kind == "k2n":
        (n,) = family.params
        return kl_helpers.k2n_closed(n), Method.CLOSED_FORM
    return None


def kl_polynomial(matroid, method=None):
    """Compute the Kazhdan-Lusztig polynomial of a matroid.

    Named families use a closed form when one exists, then a
    family-specialised recursion. Direct sums multiply their parts.
    Everything else runs the lattice recursion.

    Args:
        matroid (~matroidkl.matroid.Matroid): The matroid.
        method (Optional[Method]): Pass :attr:`Method.LATTICE` to force the
            lattice recursion.

    Returns:
        KLResult: The polynomial.

    Raises:
        ValueError: If ``method`` is neither ``None`` nor
            :attr:`Method.LATTICE`.
        ~matroidkl.hazmat.helpers.ResourceCapExceeded: If the lattice is
            too large.
    """
    if method not in (None, Method.LATTICE):
        raise ValueError("Only the lattice method can be forced", method)
    rank = matroid.rank
    if rank == 0:
        return KLResult(_ONE, 0, Method.CLOSED_FORM)
    if method is None:
        if matroid.family is not None:
            found = _family_kl(matroid.family, rank)
            if found is not None:
                poly, chosen = found
                _LOGGER.debug("%s: %s", matroid.family, chosen.value)
                return KLResult(poly, rank, chosen)
        if matroid.parts is not None:
            left, right = matroid.parts
            poly = (
                kl_polynomial(left).polynomial
                * kl_polynomial(right).polynomial
            )
            return KLResult(poly, rank, Method.DIRECT_SUM)
    lattice = _matroid.simplify(matroid).lattice()
    _LOGGER.debug("Lattice recursion over %d flats", lattice.num_flats)
    return KLResult(_lattice_kl(lattice), rank, Method.LATTICE)


def kl_uniform_type(m, d):
    """:math:`P_{U_{m,d}}` from the uniform recursion."""
    return KLResult(kl_helpers.kl_uniform_type(m, d), d, Method.UNIFORM_TYPE)


def kl_braid_type(n):
    """:math:`P_{B_n}` from the recursion over set partition types.

    Raises:
        ValueError: Unless ``1 <= n <= 25``.
    """
    if not 1 <= n <= MAX_BRAID:
        raise ValueError(f"Braid index must be in [1, {MAX_BRAID}]", n)
    return KLResult(kl_helpers.kl_braid_type(n), n - 1, Method.BRAID_TYPE)


def kl_thagomizer_type(n):
    """:math:`P_{T_n}` from the thagomizer recursion."""
    return KLResult(
        kl_helpers.kl_thagomizer_type(n), n + 1, Method.THAGOMIZER_TYPE
    )


def kl_uniform_1d_closed(d):
    """Closed form for :math:`P_{U_{1,d}}`, ``d >= 1``."""
    if d < 1:
        raise ValueError("Rank must be positive", d)
    return kl_helpers.uniform_one_closed(d)


def kl_thagomizer_closed(n):
    """Closed form for :math:`P_{T_n}` (Dyck paths with long ascents)."""
    return kl_helpers.thagomizer_closed(n)


def kl_k2n(n):
    """:math:`P_{K_{2,n}} = P_{T_n} + t`.

    Raises:
        ValueError: If ``n < 2``.
    """
    if n < 2:
        raise ValueError("The formula needs n >= 2", n)
    return kl_helpers.thagomizer_closed(n) + _T


degree_split = kl_helpers.degree_split
q_transform = kl_helpers.q_transform
gamma_multiplier_identity = kl_helpers.gamma_multiplier_identity
k2n_difference_identity = kl_helpers.k2n_difference_identity


def is_non_degenerate(matroid):
    r"""Check if the degree bound is attained.

    True for rank zero; otherwise true iff
    :math:`\deg P_M = \lfloor (\operatorname{rk} M - 1) / 2 \rfloor`.
    """
    rank = matroid.rank
    if rank == 0:
        return True
    return kl_polynomial(matroid).polynomial.degree == (rank - 1) // 2


class InterlacingStatus(enum.Enum):
    """Outcome of a contraction interlacing check."""

    PASS = "pass"
    FAIL = "fail"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"
    DEGENERATE = "degenerate"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclasses.dataclass(frozen=True)
class InterlacingReport:
    """Result of :func:`check_contraction_interlacing`.

    Attributes:
        rank (int): Rank of the matroid.
        element (int): The contracted element.
        status (InterlacingStatus): The verdict.
        parent_kl (List[int]): Coefficients of :math:`P_M`.
        child_kl (List[int]): Coefficients of :math:`P_{M/e}`.
        p_form (Optional[bool]): Verdict of the test on ``P`` directly.
        q_form (Optional[bool]): Verdict of the test on the ``Q``
            transforms.
        note (str): Free form explanation for non-verdicts.
    """

    rank: int
    element: int
    status: InterlacingStatus
    parent_kl: list
    child_kl: list
    p_form: object = None
    q_form: object = None
    note: str = ""

    def to_json(self):
        """Dictionary form, with the status as a string."""
        result = dataclasses.asdict(self)
        result["status"] = self.status.value
        return result


def interlacing_verdicts(parent, child, rank, budget=None):
    r"""Run both forms of the contraction interlacing test.

    For odd rank :math:`P_M` must interlace :math:`P_{M/e}`; for even rank
    :math:`t P_{M/e}` must interlace :math:`P_M`. The second form checks
    that :math:`Q_M` interlaces :math:`Q_{M/e}`.

    Args:
        parent (~matroidkl.hazmat.polynomial.Polynomial): :math:`P_M`.
        child (~matroidkl.hazmat.polynomial.Polynomial): :math:`P_{M/e}`.
        rank (int): :math:`\operatorname{rk} M \geq 2`.
        budget (Optional[int]): Root refinement step budget.

    Returns:
        Tuple[bool, bool]: The ``P`` form and ``Q`` form verdicts.

    Raises:
        ~matroidkl.hazmat.helpers.InconsistentRecursion: If the verdicts
            disagree.
        ~matroidkl.hazmat.helpers.DegenerateRoots: For repeated or shared
            roots.
    """
    if rank % 2 == 1:
        p_form = real_roots.interlaces(parent, child, budget)
    else:
        p_form = real_roots.interlaces(child.shift(1), parent, budget)
    q_form = real_roots.interlaces(
        kl_helpers.q_transform(parent, rank),
        kl_helpers.q_transform(child, rank - 1),
        budget,
    )
    if p_form != q_form:
        raise helpers.InconsistentRecursion(
            "Interlacing verdicts disagree", p_form, q_form
        )
    return p_form, q_form


def check_contraction_interlacing(matroid, element, budget=None):
    """Test interlacing of :math:`P_M` against :math:`P_{M/e}`.

    Both matroids must be non-degenerate; otherwise the report says the
    hypothesis is not met.

    Args:
        matroid (~matroidkl.matroid.Matroid): The matroid ``M``.
        element (int): A non-loop element ``e``.
        budget (Optional[int]): Step budget for root isolation.

    Returns:
        InterlacingReport: The report.

    Raises:
        ValueError: If ``element`` is a loop.
    """
    child_matroid = _matroid.contract_element(matroid, element)
    rank = matroid.rank
    parent = kl_polynomial(matroid).polynomial
    child = kl_polynomial(child_matroid).polynomial
    report = dict(
        rank=rank,
        element=element,
        parent_kl=list(parent.coefficients),
        child_kl=list(child.coefficients),
    )
    if rank <= 1:
        return InterlacingReport(
            status=InterlacingStatus.HYPOTHESIS_NOT_MET,
            note="rank at most one",
            **report,
        )
    if parent.degree != (rank - 1) // 2 or child.degree != (rank - 2) // 2:
        return InterlacingReport(
            status=InterlacingStatus.HYPOTHESIS_NOT_MET,
            note="degenerate matroid",
            **report,
        )
    try:
        p_form, q_form = interlacing_verdicts(parent, child, rank, budget)
    except helpers.DegenerateRoots as exc:
        _LOGGER.warning("Degenerate interlacing input: %s", exc)
        return InterlacingReport(
            status=InterlacingStatus.DEGENERATE, note=str(exc), **report
        )
    except helpers.RefinementBudgetExceeded as exc:
        _LOGGER.warning("Interlacing refinement budget exceeded: %s", exc)
        return InterlacingReport(
            status=InterlacingStatus.BUDGET_EXCEEDED, note=str(exc), **report
        )
    status = InterlacingStatus.PASS if p_form else InterlacingStatus.FAIL
    return InterlacingReport(
        status=status, p_form=p_form, q_form=q_form, **report
    )
