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

r"""Equivariant Kazhdan-Lusztig polynomials and functional equations.

When a group :math:`W` acts on a matroid, every coefficient of
:math:`P_M(t)` is a virtual representation of :math:`W`. For the
symmetric groups acting on uniform, thagomizer and braid matroids the
Frobenius characteristic turns these into symmetric functions; taking
graded dimensions recovers the ordinary polynomial.

The three families are governed by generating function identities of the
form :math:`\overline{F} = K + M F`, where the bar substitutes
:math:`t \mapsto t^{-1}` and :math:`u \mapsto t u`. Comparing
coefficients of :math:`u^n` gives one :func:`.degree_split` problem per
order, which is how the solvers below proceed. After solving, the whole
identity is checked again to the truncation order.

.. testsetup:: equivariant-intro

   from matroidkl.equivariant import uniform_equivariant_closed

.. doctest:: equivariant-intro

   >>> character = uniform_equivariant_closed(2, 4, 1)
   >>> sorted(character.schur_terms())
   [(3, 3), (4, 2)]
   >>> character.dimension()
   TPoly(14*t^0)
"""

import dataclasses
import fractions
import logging
import math

import sympy

from matroidkl import kl as _kl
from matroidkl import matroid as _matroid
from matroidkl import symfunc
from matroidkl.hazmat import helpers
from matroidkl.hazmat import kl_helpers
from matroidkl.hazmat import polynomial
from matroidkl.hazmat import series as series_mod


_LOGGER = logging.getLogger(__name__)
FAMILIES = ("uniform", "thagomizer", "braid")
DEFAULT_BRAID_ORDER = 20
DEFAULT_EQUIVARIANT_BRAID_ORDER = 6
MAX_FE_BRAID = 22
MAX_EQUIVARIANT_BRAID = 8
_T = polynomial.TPoly.monomial(1)


@dataclasses.dataclass(frozen=True)
class EquivariantKL:
    """The Frobenius characteristic of an equivariant KL polynomial.

    Attributes:
        family (str): One of :data:`FAMILIES`.
        params (Tuple[int, ...]): Family parameters, e.g. ``(m, d)``.
        size (int): Degree ``n`` of the acting symmetric group.
        rank (int): Rank of the matroid.
        character (~matroidkl.symfunc.SymFunc): Degree ``size`` symmetric
            function with coefficients graded by ``t``.

    Raises:
        ValueError: If the character is not homogeneous of degree ``size``.
        ~matroidkl.hazmat.helpers.InconsistentRecursion: If the degree
            bound in ``t`` fails.
    """

    family: str
    params: tuple
    size: int
    rank: int
    character: symfunc.SymFunc

    def __post_init__(self):
        character = self.character
        if not character.is_homogeneous() or character.degree not in (
            None,
            self.size,
        ):
            raise ValueError(
                "Character must be homogeneous of the group degree",
                character.degree,
                self.size,
            )
        degrees = character.t_degrees()
        if degrees and self.rank > 0 and 2 * degrees[-1] >= self.rank:
            raise helpers.InconsistentRecursion(
                "Degree bound violated", degrees[-1], self.rank
            )

    @property
    def coefficients(self):
        """List[~matroidkl.symfunc.SymFunc]: Characters by power of ``t``."""
        degrees = self.character.t_degrees()
        top = degrees[-1] if degrees else -1
        return [
            self.character.t_coefficient(index).convert("schur")
            for index in range(top + 1)
        ]

    def dimension(self):
        """The graded dimension, an ordinary KL polynomial."""
        return self.character.dimension().to_polynomial()

    def to_json(self):
        """The Schur expansion wrapped with its family metadata."""
        degrees = self.character.t_degrees()
        return {
            "family": self.family,
            "params": list(self.params),
            "n": self.size,
            "t_degree": degrees[-1] if degrees else None,
            "character": self.character.to_json(),
        }


def uniform_equivariant_closed(m, d, i):
    r"""The character of the :math:`t^i` coefficient of
    :math:`P_{U_{m,d}}`.

    For :math:`i \geq 1` this is the sum over
    :math:`1 \leq b \leq \min(m, d - 2i)` of the Schur functions indexed by
    :math:`(d + m - 2i - b + 1, b + 1, 2^{i-1})`. The constant term is the
    trivial representation :math:`s_{(m+d)}`.

    Args:
        m (int): Corank, ``m >= 0``.
        d (int): Rank, ``d >= 1``.
        i (int): Power of ``t``, ``i >= 0``.

    Returns:
        ~matroidkl.symfunc.SymFunc: The character, in the Schur basis.

    Raises:
        ValueError: If a parameter is out of range.
    """
    if m < 0 or d < 1 or i < 0:
        raise ValueError("Need m >= 0, d >= 1 and i >= 0", m, d, i)
    if i == 0:
        return symfunc.SymFunc.schur((m + d,))
    terms = {}
    for b in range(1, min(m, d - 2 * i) + 1):
        shape = (d + m - 2 * i - b + 1, b + 1) + (2,) * (i - 1)
        terms[shape] = 1
    return symfunc.SymFunc(terms, basis="schur")


def uniform_equivariant(m, d):
    """The full closed form character of :math:`P_{U_{m,d}}`.

    Returns:
        EquivariantKL: The graded character.
    """
    character = symfunc.SymFunc.complete(m + d).convert("schur")
    if d == 0:
        return EquivariantKL("uniform", (m, d), m, 0, character)
    for index in range(1, (d + 1) // 2):
        character = character + uniform_equivariant_closed(
            m, d, index
        ).shift(index)
    return EquivariantKL("uniform", (m, d), m + d, d, character)


def _split(rank, value):
    if isinstance(value, symfunc.SymFunc):
        return value.map_coefficients(
            lambda coefficient: kl_helpers.split_laurent(rank, coefficient)
        )
    return kl_helpers.split_laurent(rank, polynomial.TPoly.lift(value))


def _shift_t(value, amount):
    if isinstance(value, symfunc.SymFunc):
        return value.shift(amount)
    return polynomial.TPoly.lift(value).shift(amount)


def _solve_linear(kernel, multiplier):
    r"""Solve :math:`\overline{F} = K + M F` with :math:`F(0) = 0`.

    The coefficient of :math:`u^n` in :math:`F` is found from a rank ``n``
    degree split; ``multiplier`` must have constant term one.

    Raises:
        ~matroidkl.hazmat.helpers.InconsistentRecursion: If a split fails
            or the identity does not hold after solving.
    """
    order = kernel.order
    values = [0] * order
    for n in range(1, order):
        rhs = kernel.coefficient(n)
        for k in range(1, n):
            factor = multiplier.coefficient(k)
            if factor and values[n - k]:
                rhs = rhs + factor * values[n - k]
        values[n] = _split(n, rhs)
    solution = series_mod.TruncatedSeries(values, order, kernel.variable)
    residual = solution.bar() - kernel - multiplier * solution
    if residual:
        raise helpers.InconsistentRecursion(
            "Functional equation residual is non-zero"
        )
    return solution


def _integral(value, scale):
    result = (polynomial.TPoly.lift(value) * scale).to_polynomial()
    if not result.is_integral():
        raise helpers.NonIntegralCoefficient(
            "Solved polynomial is not integral", result
        )
    return result


def _uniform_kernels(m, order, equivariant):
    r"""The kernel :math:`\mathcal{H}_m` and multiplier for fixed corank.

    Equivariantly the multiplier is :math:`s(tu)/s(u)` and the kernel is
    :math:`s(u)^{-1} \sum_{j \geq 1} s_{(m+j)} (t^j - 1) u^j`; the
    exponential specialization replaces :math:`s(u)` by :math:`e^u`.
    """
    numerator = [0] * order
    for j in range(1, order):
        weight = _T.power_substitute(j) - 1
        if equivariant:
            numerator[j] = symfunc.SymFunc.complete(m + j) * weight
        else:
            numerator[j] = weight * fractions.Fraction(
                1, math.factorial(m + j)
            )
    numerator = series_mod.TruncatedSeries(numerator, order)
    if equivariant:
        complete = symfunc.complete_series(order)
        inverse = complete.reciprocal()
        multiplier = complete.rescale(_T) * inverse
    else:
        inverse = series_mod.exponential_series(-1, order)
        multiplier = series_mod.exponential_series(_T - 1, order)
    return numerator * inverse, multiplier


def solve_uniform_fe(
    x_order=series_mod.DEFAULT_X_ORDER,
    u_order=series_mod.DEFAULT_ORDER,
    equivariant=False,
    max_size=None,
):
    """Solve the uniform matroid functional equation order by order.

    The coefficient of :math:`x^m u^d` is :math:`P_{U_{m,d}}`, solved
    from a rank ``d`` degree split.

    The unknown enters the two variable equation linearly and its
    multiplier does not involve :math:`x`, so the equation splits into
    one equation per power of :math:`x`. Each :math:`x^m` slice is a
    series in :math:`u` alone, built by :func:`_uniform_kernels` and
    solved on its own; the nested series in :math:`x` is never formed.

    Args:
        x_order (int): Solve for ``m < x_order``.
        u_order (int): Solve for ``1 <= d < u_order``.
        equivariant (bool): Solve for characters instead of polynomials.
        max_size (Optional[int]): If given, skip pairs with
            ``m + d > max_size``.

    Returns:
        Dict[Tuple[int, int], Union[Polynomial, EquivariantKL]]: The
        solutions keyed by ``(m, d)``.

    Raises:
        ~matroidkl.hazmat.helpers.InconsistentRecursion: If the equation
            is inconsistent.
        ~matroidkl.hazmat.helpers.ResourceCapExceeded: If a character
            degree exceeds the symmetric function cap.
    """
    table = {}
    for m in range(x_order):
        order = u_order
        if max_size is not None:
            order = min(order, max_size - m + 1)
        if order < 2:
            continue
        kernel, multiplier = _uniform_kernels(m, order, equivariant)
        solution = _solve_linear(kernel, multiplier)
        _LOGGER.debug("Uniform m=%d solved to u^%d", m, order - 1)
        for d in range(1, order):
            value = solution.coefficient(d)
            if equivariant:
                table[(m, d)] = EquivariantKL(
                    "uniform", (m, d), m + d, d, value
                )
            else:
                table[(m, d)] = _integral(value, math.factorial(m + d))
    return table


def _thagomizer_kernels(order, equivariant):
    t_minus_one = _T - 1
    if equivariant:
        inner = symfunc.SymFunc.power((1,), _T - 2)
        blades = series_mod.TruncatedSeries.from_function(
            lambda n: symfunc.SymFunc.complete(n).plethysm(inner), order
        )
        complete = symfunc.complete_series(order)
        inverse = complete.reciprocal()
        ratio = complete.rescale(_T) * inverse
        multiplier = ratio * ratio
        kernel = (complete * blades).shift(1).scale(t_minus_one)
    else:
        multiplier = series_mod.exponential_series(2 * t_minus_one, order)
        growth = series_mod.exponential_series(t_minus_one, order)
        kernel = growth.shift(1).scale(t_minus_one)
    return kernel, multiplier


def solve_thagomizer_fe(n_max, equivariant=False):
    r"""Solve the thagomizer functional equation for :math:`n \leq n_{max}`.

    The generating function is
    :math:`\sum_n P_{T_n} u^{n+1}` (divided by :math:`n!` in the
    non-equivariant case), so :math:`P_{T_n}` comes from a rank
    :math:`n + 1` split. The equivariant kernel uses
    :math:`v(t, u) = \sum_n s_{(n)}[(t - 2) p_1] u^n`.

    Returns:
        Dict[int, Union[Polynomial, EquivariantKL]]: Solutions keyed by ``n``.

    Raises:
        ValueError: If ``n_max`` is negative.
    """
    if n_max < 0:
        raise ValueError("Order must be non-negative", n_max)
    kernel, multiplier = _thagomizer_kernels(n_max + 2, equivariant)
    solution = _solve_linear(kernel, multiplier)
    _LOGGER.debug("Thagomizer solved to n=%d", n_max)
    table = {}
    for n in range(n_max + 1):
        value = solution.coefficient(n + 1)
        if equivariant:
            table[n] = EquivariantKL("thagomizer", (n,), n, n + 1, value)
        else:
            table[n] = _integral(value, math.factorial(n))
    return table


def braid_kernel(order):
    r"""The plethystic braid kernel :math:`\mathcal{K}(t, u)`.

    .. math::

       \mathcal{K} = t^{-1} \left(
           \exp \sum_{k \geq 1} M_k(t) \log(1 + u^k p_k) - 1 \right),
       \qquad
       M_k(t) = \frac{1}{k} \sum_{d \mid k} \mu(k / d) t^d.

    Here :math:`u` marks symmetric function degree.

    Raises:
        ~matroidkl.hazmat.helpers.LaurentResidue: If the division by ``t``
            is not exact.
    """
    total = series_mod.TruncatedSeries.constant(0, order)
    for k in range(1, order):
        weight = polynomial.TPoly(
            {
                d: fractions.Fraction(int(sympy.mobius(k // d)), k)
                for d in range(1, k + 1)
                if k % d == 0
            }
        )
        values = [0] * order
        for j in range(1, (order - 1) // k + 1):
            values[k * j] = symfunc.SymFunc.power(
                (k,) * j, fractions.Fraction((-1) ** (j + 1), j)
            )
        total = total + series_mod.TruncatedSeries(values, order).scale(
            weight
        )
    kernel = (total.exp() - 1).map_coefficients(
        lambda value: _shift_t(value, -1)
    )
    if not kernel.is_polynomial():
        raise helpers.LaurentResidue("Braid kernel is not divisible by t")
    return kernel


def _braid_residual(solution, total):
    residual = (
        solution.bar().map_coefficients(lambda value: _shift_t(value, -1))
        - total
    )
    if residual:
        raise helpers.InconsistentRecursion(
            "Braid functional equation residual is non-zero"
        )


def _solve_braid_equivariant(order):
    kernel = braid_kernel(order)
    values = [0] * order
    total = series_mod.TruncatedSeries.constant(0, order)
    for n in range(1, order):
        if n == 1:
            character = symfunc.SymFunc.power((1,))
        else:
            character = _split(n - 1, total.coefficient(n))
        values[n] = character
        total = total + symfunc.plethysm_series(character, kernel)
        _LOGGER.debug("Equivariant braid n=%d solved", n)
    solution = series_mod.TruncatedSeries(values, order)
    _braid_residual(solution, total)
    return solution


def _solve_braid_plain(order):
    kernel = series_mod.binomial_power_t(order)
    values = [0] * order
    total = series_mod.TruncatedSeries.constant(0, order, "z")
    power = series_mod.TruncatedSeries.constant(1, order, "z")
    for n in range(1, order):
        if n == 1:
            value = polynomial.TPoly.constant(1)
        else:
            rhs = total.coefficient(n) * math.factorial(n)
            value = _split(n - 1, rhs) * fractions.Fraction(
                1, math.factorial(n)
            )
        values[n] = value
        power = power * kernel
        total = total + power.scale(value)
    solution = series_mod.TruncatedSeries(values, order, "z")
    _braid_residual(solution, total)
    return solution


def solve_braid_fe(n_max=None, equivariant=False):
    r"""Solve the braid functional equation for :math:`1 \leq n \leq n_{max}`.

    Non-equivariantly,
    :math:`t^{n-1} P_{B_n}(t^{-1}) - P_{B_n}(t) =
    n! \sum_{m < n} \frac{P_{B_m}(t)}{m!} [z^n] K(t, z)^m` with
    :math:`K = t^{-1}((1 + z)^t - 1)`. Equivariantly the powers of
    :math:`K` become plethysms into :func:`braid_kernel`.

    Args:
        n_max (Optional[int]): Largest ``n``; defaults to 20, or 6 when
            ``equivariant``.
        equivariant (bool): Solve for characters of :math:`S_n`.

    Returns:
        Dict[int, Union[Polynomial, EquivariantKL]]: Solutions keyed by ``n``.

    Raises:
        ValueError: If ``n_max`` is outside ``[1, 22]`` (``[1, 8]`` when
            ``equivariant``).
    """
    if n_max is None:
        n_max = (
            DEFAULT_EQUIVARIANT_BRAID_ORDER
            if equivariant
            else DEFAULT_BRAID_ORDER
        )
    limit = MAX_EQUIVARIANT_BRAID if equivariant else MAX_FE_BRAID
    if not 1 <= n_max <= limit:
        raise ValueError(f"Braid order must be in [1, {limit}]", n_max)
    table = {}
    if equivariant:
        solution = _solve_braid_equivariant(n_max + 1)
        for n in range(1, n_max + 1):
            table[n] = EquivariantKL(
                "braid", (n,), n, n - 1, solution.coefficient(n)
            )
    else:
        solution = _solve_braid_plain(n_max + 1)
        for n in range(1, n_max + 1):
            table[n] = _integral(solution.coefficient(n), math.factorial(n))
    return table


def independent_polynomial(family, params):
    """The ordinary KL polynomial from the family's own recursion.

    Raises:
        ValueError: If ``family`` is unknown.
    """
    if family == "uniform":
        return kl_helpers.kl_uniform_type(*params)
    if family == "thagomizer":
        return kl_helpers.thagomizer_closed(*params)
    if family == "braid":
        return kl_helpers.kl_braid_type(*params)
    raise ValueError("Unknown family", family)


def cross_check(family, table):
    """Compare a solved table against independent computations.

    Polynomials are compared with the family recursion; characters are
    compared through their graded dimension, and uniform characters also
    with :func:`uniform_equivariant`.

    Returns:
        List: The keys whose entries disagree, in table order.
    """
    mismatches = []
    for key, value in table.items():
        params = key if isinstance(key, tuple) else (key,)
        expected = independent_polynomial(family, params)
        if isinstance(value, EquivariantKL):
            same = value.dimension() == expected
            if same and family == "uniform":
                closed = uniform_equivariant(*params)
                same = value.character == closed.character
        else:
            same = value == expected
        if not same:
            _LOGGER.warning("%s %s disagrees with %s", family, key, expected)
            mismatches.append(key)
    return mismatches


def equivariant_positivity_check(ekl):
    """Check that every ``t`` coefficient is an honest representation.

    Args:
        ekl (Union[EquivariantKL, ~matroidkl.symfunc.SymFunc]): The
            character.

    Returns:
        bool: Whether every Schur multiplicity is non-negative.
    """
    if isinstance(ekl, EquivariantKL):
        ekl = ekl.character
    return ekl.is_schur_positive()


def strong_log_concavity_failures(ekl):
    """Quadruples where the coefficient sequence is not strongly log
    concave (see :func:`~matroidkl.symfunc.strong_log_concave_check`)."""
    return symfunc.strong_log_concave_check(ekl.coefficients)


@dataclasses.dataclass(frozen=True)
class LeadingCoefficientRow:
    """One row of :func:`braid_leading_coeff_check`."""

    k: int
    computed: int
    conjectured: int

    @property
    def match(self):
        return self.computed == self.conjectured


def braid_leading_coeff_check(k_max):
    r"""Compare the top coefficient of :math:`P_{B_{2k}}` with the number
    of labelled triangular cacti.

    Args:
        k_max (int): Largest ``k``; :math:`2 \leq k` and
            :math:`2 k_{max} \leq 25`.

    Returns:
        List[LeadingCoefficientRow]: One row per ``k``.

    Raises:
        ValueError: If ``k_max`` is out of range.
    """
    if k_max < 2 or 2 * k_max > _kl.MAX_BRAID:
        raise ValueError("Need 2 <= k_max and 2 k_max <= 25", k_max)
    rows = []
    for k in range(2, k_max + 1):
        poly = kl_helpers.kl_braid_type(2 * k)
        row = LeadingCoefficientRow(
            k, poly.coefficient(k - 1), kl_helpers.cactus_count(k)
        )
        if not row.match:
            _LOGGER.warning("Leading coefficient mismatch at k=%d", k)
        rows.append(row)
    return rows


_BRAID_GENERATING_FUNCTIONS = {
    1: ((0, 0, 0, 0, 1), ((1, 3), (2, 1))),
    2: ((0, 0, 0, 0, 0, 0, 15, -50, 40, 4), ((1, 5), (2, 3), (4, 1))),
}


@dataclasses.dataclass(frozen=True)
class GeneratingFunctionReport:
    """Result of :func:`braid_coefficient_gf_check`.

    Attributes:
        index (int): The coefficient index ``i``.
        computed (List[int]): :math:`[t^i] P_{B_n}` for ``n <= n_max``.
        expected (List[int]): Taylor coefficients of the rational function.
        first_mismatch (Optional[int]): Smallest differing ``n``.
    """

    index: int
    computed: list
    expected: list
    first_mismatch: object = None

    @property
    def match(self):
        return self.first_mismatch is None


def braid_coefficient_series(index, n_max):
    r"""Taylor coefficients of the rational generating function of
    :math:`[t^i] P_{B_n}`, for ``i`` in ``{1, 2}``.

    The denominators are products of :math:`(1 - a z)^e`.
    """
    if index not in _BRAID_GENERATING_FUNCTIONS:
        raise ValueError("Generating functions are known for i = 1, 2", index)
    numerator, factors = _BRAID_GENERATING_FUNCTIONS[index]
    order = n_max + 1
    result = series_mod.TruncatedSeries(numerator, order, "z")
    for root, exponent in factors:
        factor = series_mod.TruncatedSeries((1, -root), order, "z")
        result = result * (factor**exponent).reciprocal()
    return [helpers.exact_integer(value) for value in result.coefficients]


def braid_coefficient_gf_check(index, n_max=14):
    """Match computed braid coefficients against their generating function.

    Args:
        index (int): The coefficient index, ``1`` or ``2``.
        n_max (int): Compare :math:`z^0, \\ldots, z^{n_{max}}`.

    Returns:
        GeneratingFunctionReport: The comparison.

    Raises:
        ValueError: If ``index`` is unsupported or ``n_max`` exceeds 25.
    """
    if not 0 <= n_max <= _kl.MAX_BRAID:
        raise ValueError("Order out of range", n_max)
    expected = braid_coefficient_series(index, n_max)
    computed = [
        kl_helpers.kl_braid_type(max(n, 1)).coefficient(index)
        for n in range(n_max + 1)
    ]
    first = next(
        (
            n
            for n, (left, right) in enumerate(zip(computed, expected))
            if left != right
        ),
        None,
    )
    if first is not None:
        _LOGGER.warning("H_%d differs first at z^%d", index, first)
    return GeneratingFunctionReport(index, computed, expected, first)


def first_row_stability_check(m, i, d):
    r"""Check that :math:`C_{m,d+1,i}` is :math:`C_{m,d,i}` with one more
    box in the first row of every Schur shape.

    Raises:
        ValueError: If ``d < m + 2 i``.
    """
    if d < m + 2 * i:
        raise ValueError("Stability needs d >= m + 2i", m, i, d)
    current = uniform_equivariant_closed(m, d, i).schur_terms()
    following = uniform_equivariant_closed(m, d + 1, i).schur_terms()
    grown = {
        (shape[0] + 1,) + shape[1:]: value for shape, value in current.items()
    }
    return grown == following


def uniform_interlacing_chain(m, d_max):
    """Contraction interlacing reports along :math:`U_{m,2}, \\ldots,
    U_{m,d_{max}}`.

    Returns:
        List[~matroidkl.kl.InterlacingReport]: One report per rank.
    """
    return [
        _kl.check_contraction_interlacing(_matroid.uniform(m, d), 0)
        for d in range(2, d_max + 1)
    ]


def thagomizer_catalan_check(n_max):
    r"""Check :math:`P_{T_n}(1) = C_n` for :math:`n \leq n_{max}`.

    Returns:
        List[int]: Values of ``n`` where the identity fails.
    """
    return [
        n
        for n in range(n_max + 1)
        if kl_helpers.thagomizer_closed(n)(1) != helpers.catalan(n)
    ]


def uniform_top_catalan_check(n_max):
    r"""Check that the top coefficient of :math:`P_{U_{1,2n-1}}` is
    :math:`C_n` for :math:`1 \leq n \leq n_{max}`.

    Returns:
        List[int]: Values of ``n`` where the identity fails.
    """
    return [
        n
        for n in range(1, n_max + 1)
        if kl_helpers.uniform_one_closed(2 * n - 1).coefficient(n - 1)
        != helpers.catalan(n)
    ]
