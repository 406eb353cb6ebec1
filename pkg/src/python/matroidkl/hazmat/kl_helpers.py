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

r"""Pure Python helpers for Kazhdan-Lusztig polynomials of matroids.

Every recursion here has the same shape: for a loopless matroid of rank
:math:`r \geq 1`,

.. math::

   t^r P(t^{-1}) - P(t) = R(t),

where :math:`R` is known from smaller matroids. Since
:math:`\deg P < r / 2`, the two sides do not overlap and :math:`P` is read
off from the top half of :math:`R` (see :func:`degree_split`).
"""

import fractions
import functools
import math

from matroidkl.hazmat import helpers
from matroidkl.hazmat import partitions
from matroidkl.hazmat import polynomial


_T_MINUS_ONE = polynomial.Polynomial((-1, 1))
_T = polynomial.Polynomial((0, 1))
_ONE = polynomial.Polynomial((1,))


def _split_coefficients(rank, lookup):
    for index in range(rank + 1):
        if lookup(index) + lookup(rank - index) != 0:
            raise helpers.InconsistentRecursion(
                "Right-hand side is not antisymmetric", rank, index
            )
    return [lookup(rank - index) for index in range((rank + 1) // 2)]


def degree_split(rank, rhs, expect_constant=None):
    r"""Solve :math:`t^r P(t^{-1}) - P(t) = R(t)` with :math:`\deg P < r/2`.

    The coefficient of :math:`t^i` in :math:`P` is the coefficient of
    :math:`t^{r - i}` in :math:`R`. For rank zero the equation is vacuous
    and :math:`P = 1`.

    .. testsetup:: degree-split

       from matroidkl.hazmat import polynomial
       from matroidkl.hazmat.kl_helpers import degree_split

    .. doctest:: degree-split

       >>> rhs = polynomial.Polynomial((-1, -2, 2, 1))
       >>> degree_split(3, rhs)
       <Polynomial (degree=1, coefficients=(1, 2))>

    Args:
        rank (int): The rank :math:`r \geq 0`.
        rhs (~matroidkl.hazmat.polynomial.Polynomial): The right-hand side.
        expect_constant (Optional[numbers.Rational]): If given, the constant
            term that must come out.

    Returns:
        ~matroidkl.hazmat.polynomial.Polynomial: The solution :math:`P`.

    Raises:
        ValueError: If ``rank`` is negative.
        ~matroidkl.hazmat.helpers.InconsistentRecursion: If ``rhs`` has
            degree above ``rank``, is not antisymmetric
            (:math:`R(t) = -t^r R(t^{-1})`), or the constant term differs
            from ``expect_constant``.
    """
    if rank < 0:
        raise ValueError("Rank must be non-negative", rank)
    if rhs.degree > rank:
        raise helpers.InconsistentRecursion(
            "Right-hand side degree exceeds the rank", rhs.degree, rank
        )
    if rank == 0:
        if not rhs.is_zero():
            raise helpers.InconsistentRecursion(
                "Rank zero needs a zero right-hand side"
            )
        return _ONE
    result = polynomial.Polynomial(_split_coefficients(rank, rhs.coefficient))
    constant = result.coefficient(0)
    if expect_constant is not None and constant != expect_constant:
        raise helpers.InconsistentRecursion(
            "Unexpected constant term", constant, expect_constant
        )
    return result


def split_laurent(rank, rhs):
    """Variant of :func:`degree_split` for :class:`.TPoly` right-hand sides.

    Rank zero returns the zero Laurent polynomial; callers seed that case.

    Raises:
        ~matroidkl.hazmat.helpers.LaurentResidue: If ``rhs`` has negative
            powers.
        ~matroidkl.hazmat.helpers.InconsistentRecursion: As for
            :func:`degree_split`.
    """
    if not rhs.is_polynomial():
        raise helpers.LaurentResidue("Right-hand side has negative powers")
    if not rhs.is_zero() and rhs.degree > rank:
        raise helpers.InconsistentRecursion(
            "Right-hand side degree exceeds the rank", rhs.degree, rank
        )
    if rank == 0:
        if not rhs.is_zero():
            raise helpers.InconsistentRecursion(
                "Rank zero needs a zero right-hand side"
            )
        return polynomial.TPoly()
    values = _split_coefficients(rank, rhs.coefficient)
    return polynomial.TPoly(dict(enumerate(values)))


def uniform_characteristic(m, d):
    """Characteristic polynomial of :math:`U_{m,d}`."""
    n = m + d
    if d == 0:
        return _ONE
    coefficients = [0] * (d + 1)
    top = 0
    for size in range(d):
        value = (-1) ** size * math.comb(n, size)
        coefficients[d - size] = value
        top -= value
    coefficients[0] = top
    return polynomial.Polynomial(coefficients)


@functools.lru_cache(maxsize=None)
def kl_uniform_type(m, d):
    r"""Kazhdan-Lusztig polynomial of :math:`U_{m,d}` by its own recursion.

    Flats of size :math:`k < d` have Boolean localizations and restriction
    :math:`U_{m,d-k}`, so

    .. math::

       R(t) = \chi_{U_{m,d}}(t) +
           \sum_{k=1}^{d-1} \binom{m+d}{k} (t-1)^k P_{U_{m,d-k}}(t).

    Raises:
        ValueError: If ``m`` or ``d`` is negative.
    """
    if m < 0 or d < 0:
        raise ValueError("Uniform parameters must be non-negative", m, d)
    if d == 0:
        return _ONE
    rhs = uniform_characteristic(m, d)
    for size in range(1, d):
        rhs = rhs + (
            _T_MINUS_ONE**size
            * kl_uniform_type(m, d - size)
            * math.comb(m + d, size)
        )
    return degree_split(d, rhs, expect_constant=1)


@functools.lru_cache(maxsize=None)
def braid_characteristic(n):
    r"""Characteristic polynomial :math:`(t-1)(t-2)\cdots(t-n+1)` of
    :math:`B_n`."""
    if n < 1:
        raise ValueError("Braid matroids start at n = 1", n)
    result = _ONE
    for shift in range(1, n):
        result = result * polynomial.Polynomial((-shift, 1))
    return result


@functools.lru_cache(maxsize=None)
def kl_braid_type(n):
    r"""Kazhdan-Lusztig polynomial of the braid matroid :math:`B_n`.

    Flats are set partitions; one of type :math:`\lambda` has localization
    :math:`\bigoplus_i B_{\lambda_i}` and restriction
    :math:`B_{\ell(\lambda)}`. Grouping by type,

    .. math::

       R(t) = \sum_{\lambda \neq 1^n} N(\lambda)
           \prod_i \chi_{B_{\lambda_i}}(t) \, P_{B_{\ell(\lambda)}}(t).

    Raises:
        ValueError: If ``n`` is not positive.
    """
    if n < 1:
        raise ValueError("Braid matroids start at n = 1", n)
    if n == 1:
        return _ONE
    rhs = polynomial.Polynomial()
    for shape in partitions.partitions(n):
        if len(shape) == n:
            continue
        term = kl_braid_type(len(shape)) * partitions.set_partition_count(
            shape
        )
        for part in shape:
            term = term * braid_characteristic(part)
        rhs = rhs + term
    return degree_split(n - 1, rhs, expect_constant=1)


def _thagomizer_sum(n):
    """The shared sum over thagomizer restrictions."""
    total = polynomial.Polynomial()
    for index in range(n):
        total = total + (
            kl_thagomizer_type(index)
            * _T_MINUS_ONE ** (n - index)
            * (math.comb(n, index) * 2 ** (n - index))
        )
    return total


@functools.lru_cache(maxsize=None)
def kl_thagomizer_type(n):
    r"""Kazhdan-Lusztig polynomial of the thagomizer matroid :math:`T_n`.

    .. math::

       t^{n+1} P(t^{-1}) - P(t) = (t-1)^{n+1} +
           \sum_{i=0}^{n-1} \binom{n}{i} 2^{n-i} (t-1)^{n-i} P_{T_i}(t)

    Raises:
        ValueError: If ``n`` is negative.
    """
    if n < 0:
        raise ValueError("Thagomizer index must be non-negative", n)
    rhs = _T_MINUS_ONE ** (n + 1) + _thagomizer_sum(n)
    return degree_split(n + 1, rhs, expect_constant=1)


@functools.lru_cache(maxsize=None)
def kl_k2n_type(n):
    r"""Kazhdan-Lusztig polynomial of :math:`K_{2,n}` by its recursion.

    .. math::

       t^{n+1} P(t^{-1}) - P(t) =
           \sum_{i=0}^{n-1} \binom{n}{i} 2^{n-i} (t-1)^{n-i} P_{T_i}(t) +
           \sum_{j=1}^{n} \binom{n}{j} \left((t-1)^j + (t-1)(t-2)^j\right)

    :math:`K_{2,0}` has no edges, hence rank zero.

    Raises:
        ValueError: If ``n`` is negative.
    """
    if n < 0:
        raise ValueError("Bipartite index must be non-negative", n)
    if n == 0:
        return _ONE
    rhs = _thagomizer_sum(n)
    t_minus_two = polynomial.Polynomial((-2, 1))
    for size in range(1, n + 1):
        rhs = rhs + (
            _T_MINUS_ONE**size + _T_MINUS_ONE * t_minus_two**size
        ) * math.comb(n, size)
    return degree_split(n + 1, rhs, expect_constant=1)


def uniform_one_closed(d):
    r"""Closed form for :math:`P_{U_{1,d}}`.

    .. math::

       [t^i] P_{U_{1,d}} = \frac{1}{i+1} \binom{d-i-1}{i} \binom{d+1}{i}

    Raises:
        ValueError: If ``d`` is negative.
        ~matroidkl.hazmat.helpers.NonIntegralCoefficient: Never, unless the
            closed form were wrong.
    """
    if d < 0:
        raise ValueError("Rank must be non-negative", d)
    if d == 0:
        return _ONE
    coefficients = []
    for index in range((d + 1) // 2):
        value = fractions.Fraction(
            helpers.binomial(d - index - 1, index)
            * helpers.binomial(d + 1, index),
            index + 1,
        )
        coefficients.append(helpers.exact_integer(value))
    return polynomial.Polynomial(coefficients)


def thagomizer_closed(n):
    r"""Closed form for :math:`P_{T_n}`.

    The coefficient of :math:`t^k` (for :math:`k \geq 1`) counts Dyck paths
    of semilength ``n`` with ``k`` long ascents:

    .. math::

       \frac{1}{n+1} \binom{n+1}{k}
       \sum_{j=2k}^{n} \binom{j-k-1}{k-1} \binom{n+1-k}{n-j}.

    Raises:
        ValueError: If ``n`` is negative.
    """
    if n < 0:
        raise ValueError("Thagomizer index must be non-negative", n)
    coefficients = [1]
    for k in range(1, n // 2 + 1):
        inner = sum(
            helpers.binomial(j - k - 1, k - 1)
            * helpers.binomial(n + 1 - k, n - j)
            for j in range(2 * k, n + 1)
        )
        value = fractions.Fraction(math.comb(n + 1, k) * inner, n + 1)
        coefficients.append(helpers.exact_integer(value))
    return polynomial.Polynomial(coefficients)


def k2n_closed(n):
    r""":math:`P_{K_{2,n}} = P_{T_n} + t` for :math:`n \geq 2`.

    :math:`K_{2,0}` and :math:`K_{2,1}` are Boolean, with polynomial ``1``.
    """
    if n < 0:
        raise ValueError("Bipartite index must be non-negative", n)
    if n < 2:
        return _ONE
    return thagomizer_closed(n) + _T


def k2n_difference_identity(n):
    r"""Check the identity linking the bipartite and thagomizer recursions.

    .. math::

       t^{n+1} P_{K_{2,n}}(t^{-1}) - t^{n+1} P_{T_n}(t^{-1}) =
           P_{K_{2,n}}(t) - P_{T_n}(t) + t^n - t

    Both polynomials come from their own recursions.

    Raises:
        ValueError: If ``n < 2``.
    """
    if n < 2:
        raise ValueError("The identity needs n >= 2", n)
    bipartite = kl_k2n_type(n)
    thagomizer = kl_thagomizer_type(n)
    left = bipartite.reflect(n + 1) - thagomizer.reflect(n + 1)
    right = bipartite - thagomizer + polynomial.Polynomial.monomial(n) - _T
    return left == right


def cactus_count(k):
    r"""The number :math:`(2k-3)!! (2k-1)^{k-2}` of labelled triangular
    cacti on :math:`2k - 1` nodes.

    Raises:
        ValueError: If ``k < 2``.
    """
    if k < 2:
        raise ValueError("Cactus counts start at k = 2", k)
    return helpers.double_factorial(2 * k - 3) * (2 * k - 1) ** (k - 2)


def q_transform(kl_poly, rank):
    r"""The inverse Kazhdan-Lusztig polynomial
    :math:`Q(t) = t^{r-1} P(-t^{-2})`.

    Args:
        kl_poly (~matroidkl.hazmat.polynomial.Polynomial): :math:`P`.
        rank (int): The rank :math:`r \geq 1`.

    Returns:
        ~matroidkl.hazmat.polynomial.Polynomial: :math:`Q`, of degree
        :math:`r - 1` with only every other coefficient non-zero.

    Raises:
        ValueError: If ``rank < 1`` or :math:`2 \deg P > r - 1`.
    """
    if rank < 1:
        raise ValueError("Rank must be positive", rank)
    if 2 * kl_poly.degree > rank - 1:
        raise ValueError("Degree too large for the rank", kl_poly.degree, rank)
    coefficients = [0] * rank
    for index, value in enumerate(kl_poly.coefficients):
        coefficients[rank - 1 - 2 * index] = (-1) ** index * value
    return polynomial.Polynomial(coefficients)


def chord_weights(d):
    r"""The polynomial :math:`\sum_i \binom{d-i-1}{i} t^i`."""
    return polynomial.Polynomial(
        helpers.binomial(d - index - 1, index) for index in range((d + 1) // 2)
    )


def gamma_multiplier(d):
    r"""The multiplier :math:`\Gamma_i = 1 / ((i+1)! (d+1-i)!)`."""
    return [
        fractions.Fraction(
            1, math.factorial(index + 1) * math.factorial(d + 1 - index)
        )
        for index in range((d + 1) // 2)
    ]


def gamma_multiplier_identity(d):
    r"""Check :math:`(d+1)! \, \Gamma(d)[h_d] = P_{U_{1,d}}`.

    Here :math:`\Gamma(d)` multiplies the coefficients of
    :math:`h_d = \sum_i \binom{d-i-1}{i} t^i` termwise.

    Raises:
        ValueError: If ``d`` is not positive.
    """
    if d < 1:
        raise ValueError("Rank must be positive", d)
    weights = chord_weights(d)
    scale = math.factorial(d + 1)
    product = polynomial.Polynomial(
        scale * weights.coefficient(index) * gamma
        for index, gamma in enumerate(gamma_multiplier(d))
    )
    return product == uniform_one_closed(d)
