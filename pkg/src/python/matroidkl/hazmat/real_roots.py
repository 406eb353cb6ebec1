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

"""Exact real root analysis of polynomials.

Square-free decompositions, Sturm sequences, root counts and isolating
intervals all come from SymPy's polynomials over :math:`\\mathbb{Q}`;
roots are never approximated in floating point. This module converts
between :class:`~matroidkl.hazmat.polynomial.Polynomial` and
:class:`sympy.Poly` and keeps a step budget on interval refinement.

Isolating intervals are closed, ``[lower, upper]``, with
:class:`~fractions.Fraction` endpoints. A rational root may come back as
a degenerate interval with ``lower == upper``.
"""

import fractions
import logging

import sympy

from matroidkl import __config__
from matroidkl.hazmat import helpers
from matroidkl.hazmat import polynomial


_LOGGER = logging.getLogger(__name__)
_T = sympy.Symbol("t")


def _to_sympy(poly):
    return sympy.Poly(
        [sympy.Rational(value) for value in reversed(poly.coefficients)],
        _T,
        domain=sympy.QQ,
    )


def _fraction(value):
    value = sympy.Rational(value)
    return fractions.Fraction(int(value.p), int(value.q))


def _from_sympy(value):
    return polynomial.Polynomial(
        _fraction(coefficient) for coefficient in reversed(value.all_coeffs())
    )


def _sympy_bound(value):
    if value is None:
        return None
    return sympy.Rational(value)


def is_log_concave_no_internal_zeros(poly):
    r"""Check log-concavity of the coefficient sequence.

    The sequence runs up to the actual degree. It must satisfy
    :math:`c_i^2 \geq c_{i-1} c_{i+1}` and its non-zero entries must be
    consecutive.

    .. testsetup:: log-concave

       from matroidkl.hazmat import polynomial
       from matroidkl.hazmat.real_roots import is_log_concave_no_internal_zeros

    .. doctest:: log-concave

       >>> is_log_concave_no_internal_zeros(polynomial.Polynomial((1, 4)))
       True
       >>> is_log_concave_no_internal_zeros(polynomial.Polynomial((1, 0, 1)))
       False

    Args:
        poly (~matroidkl.hazmat.polynomial.Polynomial): The polynomial.

    Returns:
        bool: Whether the coefficients are log-concave with no internal
        zeros.
    """
    values = poly.coefficients
    support = [index for index, value in enumerate(values) if value != 0]
    if support and support[-1] - support[0] + 1 != len(support):
        return False
    for index in range(1, len(values) - 1):
        if values[index] ** 2 < values[index - 1] * values[index + 1]:
            return False
    return True


def square_free_part(poly):
    """The monic square-free part ``f / gcd(f, f')``.

    Raises:
        ValueError: If ``poly`` is zero.
    """
    if poly.is_zero():
        raise ValueError("The zero polynomial has no square-free part")
    if poly.degree == 0:
        return polynomial.Polynomial.constant(1)
    return _from_sympy(_to_sympy(poly).sqf_part().monic())


def square_free_decomposition(poly):
    """Square-free decomposition (Yun's algorithm, as run by SymPy).

    .. testsetup:: yun

       from matroidkl.hazmat import polynomial
       from matroidkl.hazmat.real_roots import square_free_decomposition

    .. doctest:: yun

       >>> poly = polynomial.Polynomial((2, 5, 4, 1))  # (t + 1)^2 (t + 2)
       >>> for factor, multiplicity in square_free_decomposition(poly):
       ...     print(factor.coefficients, multiplicity)
       (2, 1) 1
       (1, 1) 2

    Args:
        poly (~matroidkl.hazmat.polynomial.Polynomial): A non-zero
            polynomial.

    Returns:
        List[Tuple[~matroidkl.hazmat.polynomial.Polynomial, int]]: Monic
        square-free, pairwise coprime factors of positive degree with their
        multiplicities, in increasing multiplicity. The product of
        ``factor ** multiplicity`` is ``poly`` up to a constant.

    Raises:
        ValueError: If ``poly`` is zero.
    """
    if poly.is_zero():
        raise ValueError("Cannot decompose the zero polynomial")
    if poly.degree < 1:
        return []
    _, factors = _to_sympy(poly).sqf_list()
    return [
        (_from_sympy(factor.monic()), multiplicity)
        for factor, multiplicity in sorted(factors, key=lambda pair: pair[1])
        if factor.degree() > 0
    ]


def sturm_chain(poly):
    """The Sturm sequence of the square-free part of ``poly``.

    For a square-free ``f`` this is ``f, f', -rem(f, f'), ...`` with ``f``
    made monic; the last entry is a non-zero constant.

    Args:
        poly (~matroidkl.hazmat.polynomial.Polynomial): A non-zero
            polynomial.

    Returns:
        Tuple[~matroidkl.hazmat.polynomial.Polynomial, ...]: The chain.

    Raises:
        ValueError: If ``poly`` is zero.
    """
    if poly.is_zero():
        raise ValueError("The zero polynomial has no Sturm chain")
    return tuple(_from_sympy(entry) for entry in _to_sympy(poly).sturm())


def count_real_roots(poly, lower=None, upper=None):
    """Count distinct real roots in ``(lower, upper]``.

    .. testsetup:: count-real-roots

       from matroidkl.hazmat import polynomial
       from matroidkl.hazmat.real_roots import count_real_roots

    .. doctest:: count-real-roots

       >>> poly = polynomial.Polynomial((-2, 0, 1))
       >>> count_real_roots(poly, upper=0)
       1
       >>> count_real_roots(poly)
       2

    Args:
        poly (~matroidkl.hazmat.polynomial.Polynomial): A non-zero
            polynomial.
        lower (Optional[numbers.Rational]): Open lower end, ``None`` for
            :math:`-\\infty`.
        upper (Optional[numbers.Rational]): Closed upper end, ``None`` for
            :math:`+\\infty`.

    Returns:
        int: The number of distinct real roots in the interval.

    Raises:
        ValueError: If ``poly`` is zero or the interval is reversed.
    """
    if poly.is_zero():
        raise ValueError("The zero polynomial has infinitely many roots")
    if lower is not None and upper is not None and lower > upper:
        raise ValueError("Interval ends are reversed", lower, upper)
    if poly.degree == 0:
        return 0
    square_free = _to_sympy(poly).sqf_part()
    # SymPy counts over the closed interval.
    count = square_free.count_roots(_sympy_bound(lower), _sympy_bound(upper))
    if lower is not None and poly(lower) == 0:
        count -= 1
    return count


def all_roots_negative_real(poly):
    """Check that every root (with multiplicity) is a negative real.

    Constants pass vacuously.

    Raises:
        ValueError: If ``poly`` is zero.
    """
    if poly.is_zero():
        raise ValueError("The zero polynomial has every number as a root")
    if poly.degree == 0:
        return True
    if poly(0) == 0:
        return False
    _, factors = _to_sympy(poly).sqf_list()
    return all(
        factor.count_roots(None, 0) == factor.degree()
        for factor, _ in factors
    )


class IsolatingIntervals:
    """Disjoint closed intervals, one per distinct real root.

    Args:
        poly (~matroidkl.hazmat.polynomial.Polynomial): The polynomial whose
            roots are isolated.
        intervals (Sequence[Tuple[fractions.Fraction, fractions.Fraction]]):
            The ``[lower, upper]`` intervals, sorted ascending.
        multiplicities (Sequence[int]): Root multiplicity per interval.
        steps (int): Budget steps spent so far.
    """

    __slots__ = (
        "_poly",
        "_square_free",
        "_intervals",
        "_multiplicities",
        "_steps",
    )

    def __init__(self, poly, intervals, multiplicities, steps=0):
        self._poly = poly
        self._square_free = None
        if poly.degree > 0:
            self._square_free = _to_sympy(poly).sqf_part()
        self._intervals = tuple(intervals)
        self._multiplicities = tuple(multiplicities)
        self._steps = steps

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} "
            f"(degree={self._poly.degree:d}, roots={len(self._intervals)})>"
        )

    def __len__(self):
        return len(self._intervals)

    def __iter__(self):
        return iter(self._intervals)

    @property
    def polynomial(self):
        """~matroidkl.hazmat.polynomial.Polynomial: The source polynomial."""
        return self._poly

    @property
    def intervals(self):
        """Tuple[Tuple[fractions.Fraction, fractions.Fraction], ...]"""
        return self._intervals

    @property
    def multiplicities(self):
        """Tuple[int, ...]: Multiplicity of the root in each interval."""
        return self._multiplicities

    @property
    def steps(self):
        """int: Budget steps spent producing these intervals."""
        return self._steps

    def _narrow_one(self, interval):
        lower, upper = interval
        if lower == upper:
            return interval
        lower, upper = self._square_free.refine_root(
            sympy.Rational(lower), sympy.Rational(upper), steps=1
        )
        return _fraction(lower), _fraction(upper)

    def narrow(self, budget=None):
        """Narrow every interval by one SymPy refinement step.

        Each interval costs one step of the budget.

        Raises:
            ~matroidkl.hazmat.helpers.RefinementBudgetExceeded: If the
                total step count would exceed ``budget``.
        """
        if budget is None:
            budget = __config__.limits().refine_budget
        steps = self._steps + len(self._intervals)
        if steps > budget:
            raise helpers.RefinementBudgetExceeded(
                "Root refinement budget exhausted", budget
            )
        return IsolatingIntervals(
            self._poly,
            [self._narrow_one(interval) for interval in self._intervals],
            self._multiplicities,
            steps,
        )

    def refine(self, width, budget=None):
        """Narrow until every interval is shorter than ``width``.

        Args:
            width (numbers.Rational): Positive target width.
            budget (Optional[int]): Cap on total steps; defaults to
                ``MATROIDKL_REFINE_BUDGET``.

        Returns:
            IsolatingIntervals: The refined intervals.

        Raises:
            ValueError: If ``width`` is not positive.
            ~matroidkl.hazmat.helpers.RefinementBudgetExceeded: If the
                budget runs out.
        """
        if width <= 0:
            raise ValueError("Width must be positive", width)
        result = self
        while any(upper - lower >= width for lower, upper in result):
            result = result.narrow(budget)
        return result


def isolate_roots(poly, budget=None):
    """Isolate the distinct real roots of ``poly``.

    Each isolated root costs one step of the budget.

    .. testsetup:: isolate-roots

       from matroidkl.hazmat import polynomial
       from matroidkl.hazmat.real_roots import isolate_roots

    .. doctest:: isolate-roots

       >>> poly = polynomial.Polynomial((-3, 0, 1))
       >>> isolated = isolate_roots(poly)
       >>> isolated
       <IsolatingIntervals (degree=2, roots=2)>
       >>> [(float(a), float(b)) for a, b in isolated]
       [(-2.0, -1.0), (1.0, 2.0)]

    Args:
        poly (~matroidkl.hazmat.polynomial.Polynomial): A non-zero
            polynomial.
        budget (Optional[int]): Cap on steps; defaults to
            ``MATROIDKL_REFINE_BUDGET``.

    Returns:
        IsolatingIntervals: Sorted, disjoint intervals.

    Raises:
        ValueError: If ``poly`` is zero.
        ~matroidkl.hazmat.helpers.RefinementBudgetExceeded: If there are
            more roots than ``budget``.
    """
    if poly.is_zero():
        raise ValueError("The zero polynomial has every number as a root")
    if budget is None:
        budget = __config__.limits().refine_budget
    if poly.degree == 0:
        return IsolatingIntervals(poly, (), ())
    found = sorted(
        ((_fraction(lower), _fraction(upper)), multiplicity)
        for (lower, upper), multiplicity in _to_sympy(poly).intervals()
    )
    if len(found) > budget:
        raise helpers.RefinementBudgetExceeded(
            "Root isolation budget exhausted", budget
        )
    _LOGGER.debug(
        "Isolated %d real roots of a degree %d polynomial",
        len(found),
        poly.degree,
    )
    return IsolatingIntervals(
        poly,
        [interval for interval, _ in found],
        [multiplicity for _, multiplicity in found],
        len(found),
    )


def _overlapping(labelled):
    for (_, left_upper, _), (right_lower, _, _) in zip(
        labelled, labelled[1:]
    ):
        if left_upper > right_lower:
            return True
    return False


def interlaces(f, g, budget=None):
    """Check that the roots of ``f`` and ``g`` alternate.

    Both polynomials must be real-rooted with simple roots, and in
    ascending order the roots must run ``f, g, f, ..., g, f``.

    .. testsetup:: interlaces

       from matroidkl.hazmat import polynomial
       from matroidkl.hazmat.real_roots import interlaces

    .. doctest:: interlaces

       >>> f = polynomial.Polynomial((3, 4, 1))  # (t + 1)(t + 3)
       >>> interlaces(f, polynomial.Polynomial((2, 1)))
       True
       >>> interlaces(f, polynomial.Polynomial((-1, 1)))
       False

    Args:
        f (~matroidkl.hazmat.polynomial.Polynomial): The polynomial of
            larger degree.
        g (~matroidkl.hazmat.polynomial.Polynomial): A polynomial of degree
            one less.
        budget (Optional[int]): Step budget for each polynomial.

    Returns:
        bool: The interlacing verdict. Polynomials with non-real roots do
        not interlace.

    Raises:
        ValueError: If ``deg f != deg g + 1`` or ``deg f < 1``.
        ~matroidkl.hazmat.helpers.DegenerateRoots: If either polynomial has
            a repeated root or the two share a root.
        ~matroidkl.hazmat.helpers.RefinementBudgetExceeded: If separation
            runs out of budget.
    """
    if f.degree < 1 or f.degree != g.degree + 1:
        raise ValueError(
            "Interlacing needs deg f = deg g + 1 >= 1", f.degree, g.degree
        )
    left_poly = _to_sympy(f)
    right_poly = _to_sympy(g)
    for poly, value in ((f, left_poly), (g, right_poly)):
        if poly.degree > 0 and not value.is_sqf:
            raise helpers.DegenerateRoots("Repeated root", poly)
    if g.degree > 0 and left_poly.gcd(right_poly).degree() > 0:
        raise helpers.DegenerateRoots("Shared root", f, g)
    if count_real_roots(f) != f.degree:
        return False
    if g.degree > 0 and count_real_roots(g) != g.degree:
        return False
    left = isolate_roots(f, budget)
    right = isolate_roots(g, budget)
    while True:
        labelled = sorted(
            [(lower, upper, "f") for lower, upper in left]
            + [(lower, upper, "g") for lower, upper in right]
        )
        if not _overlapping(labelled):
            break
        left = left.narrow(budget)
        right = right.narrow(budget)
    pattern = "".join(label for _, _, label in labelled)
    return pattern == "fg" * g.degree + "f"
