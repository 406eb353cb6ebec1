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

r"""Truncated formal power series in one auxiliary variable.

A :class:`TruncatedSeries` of order :math:`N` stores the coefficients of
:math:`v^0, \ldots, v^{N-1}`. Coefficients are exact: rationals,
:class:`.TPoly` Laurent polynomials in ``t``, symmetric functions, or
further truncated series in a different variable (two variable series are
nested, the outer variable first).

.. testsetup:: series-basics

   from matroidkl.hazmat.series import TruncatedSeries

.. doctest:: series-basics

   >>> u = TruncatedSeries.variable_series(5)
   >>> (1 + u) * (1 - u)
   <TruncatedSeries (variable=u, order=5, coefficients=(1, 0, -1, 0, 0))>
"""

import fractions
import numbers

from matroidkl.hazmat import helpers
from matroidkl.hazmat import polynomial


VARIABLES = ("u", "x", "z")
DEFAULT_ORDER = 21
DEFAULT_X_ORDER = 12
_NUMBER_LIKE = frozenset(("scalar", "tpoly"))


def coefficient_kind(value):
    """Classify a coefficient.

    Returns:
        str: One of ``"scalar"``, ``"tpoly"``, ``"symfunc"`` or
        ``"series"``.

    Raises:
        TypeError: If ``value`` is not a supported coefficient.
    """
    if isinstance(value, TruncatedSeries):
        return "series"
    kind = getattr(value, "coefficient_kind", None)
    if kind is not None:
        return kind
    if isinstance(value, numbers.Rational):
        return "scalar"
    if isinstance(value, (polynomial.Polynomial, polynomial.TPoly)):
        return "tpoly"
    raise TypeError("Unsupported series coefficient", value)


def _merge_kinds(left, right):
    kinds = {left, right} - _NUMBER_LIKE
    if len(kinds) > 1:
        raise TypeError("Incompatible coefficient kinds", left, right)
    if kinds:
        return kinds.pop()
    if "tpoly" in (left, right):
        return "tpoly"
    return "scalar"


def _invert_t(value):
    if isinstance(value, numbers.Rational):
        return value
    if isinstance(value, polynomial.Polynomial):
        value = polynomial.TPoly.from_polynomial(value)
    if isinstance(value, polynomial.TPoly):
        return value.invert()
    return value.map_coefficients(_invert_t)


def _shift_t(value, amount):
    if isinstance(value, (numbers.Rational, polynomial.Polynomial)):
        value = polynomial.TPoly.lift(value)
    if isinstance(value, polynomial.TPoly):
        return value.shift(amount)
    return value.map_coefficients(lambda entry: _shift_t(entry, amount))


def _scalar_part(value):
    power_terms = getattr(value, "power_terms", None)
    if power_terms is not None and power_terms.keys() <= {()}:
        value = power_terms.get((), polynomial.TPoly())
    if isinstance(value, polynomial.TPoly) and value.terms.keys() <= {0}:
        value = value.coefficient(0)
    return value


def _is_laurent_free(value):
    if isinstance(value, (numbers.Rational, polynomial.Polynomial)):
        return True
    return value.is_polynomial()


class TruncatedSeries:
    """A power series truncated after a fixed number of coefficients.

    Args:
        coefficients (Iterable): Coefficients of :math:`v^0, v^1, \\ldots`.
        order (Optional[int]): Number of stored coefficients. Defaults to
            the number given; extra coefficients are dropped and missing
            ones are zero.
        variable (str): One of ``u``, ``x`` or ``z``.

    Raises:
        ValueError: If ``variable`` is unknown or ``order`` is not
            positive.
        TypeError: If the coefficients mix symmetric functions with
            nested series.
    """

    __slots__ = ("_coefficients", "_variable", "_kind")

    def __init__(self, coefficients, order=None, variable="u"):
        if variable not in VARIABLES:
            raise ValueError("Unknown series variable", variable)
        values = list(coefficients)
        if order is None:
            order = len(values)
        if order < 1:
            raise ValueError("Series order must be positive", order)
        values = values[:order] + [0] * (order - len(values))
        kind = "scalar"
        for value in values:
            kind = _merge_kinds(kind, coefficient_kind(value))
        self._coefficients = tuple(values)
        self._variable = variable
        self._kind = kind

    coefficient_kind = "series"

    @classmethod
    def constant(cls, value, order, variable="u"):
        """The series with a single constant coefficient."""
        return cls((value,), order, variable)

    @classmethod
    def variable_series(cls, order, variable="u"):
        """The series :math:`v` itself."""
        return cls((0, 1), order, variable)

    @classmethod
    def from_function(cls, function, order, variable="u"):
        """The series whose :math:`n`-th coefficient is ``function(n)``."""
        return cls([function(n) for n in range(order)], order, variable)

    @property
    def order(self):
        """int: The number of stored coefficients."""
        return len(self._coefficients)

    @property
    def variable(self):
        """str: The series variable."""
        return self._variable

    @property
    def kind(self):
        """str: The coefficient kind (see :func:`coefficient_kind`)."""
        return self._kind

    @property
    def coefficients(self):
        """tuple: The stored coefficients, lowest power first."""
        return self._coefficients

    def coefficient(self, index):
        """The coefficient of :math:`v^n`.

        Raises:
            ValueError: If ``index`` is at or past the truncation order.
        """
        if index < 0:
            return 0
        if index >= len(self._coefficients):
            raise ValueError(
                "Coefficient lies beyond the truncation order",
                index,
                len(self._coefficients),
            )
        return self._coefficients[index]

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} (variable={self._variable}, "
            f"order={self.order:d}, coefficients={self._coefficients!r})>"
        )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other._variable != self._variable:
            return False
        order = min(self.order, other.order)
        return all(
            self._coefficients[n] == other._coefficients[n]
            for n in range(order)
        )

    __hash__ = None

    def __bool__(self):
        return any(bool(value) for value in self._coefficients)

    def is_zero(self):
        return not self

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            if other._variable != self._variable:
                raise ValueError(
                    "Series variables differ", self._variable, other._variable
                )
            _merge_kinds(self._kind, other._kind)
            return other
        coefficient_kind(other)
        return TruncatedSeries.constant(other, self.order, self._variable)

    def __neg__(self):
        return self.map_coefficients(lambda value: -value)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries(
            [
                self._coefficients[n] + other._coefficients[n]
                for n in range(order)
            ],
            order,
            self._variable,
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            coefficient_kind(other)
            return self.scale(other)
        other = self._coerce(other)
        order = min(self.order, other.order)
        left = self._coefficients
        right = other._coefficients
        product = []
        for n in range(order):
            total = 0
            for k in range(n + 1):
                if left[k] and right[n - k]:
                    total = total + left[k] * right[n - k]
            product.append(total)
        return TruncatedSeries(product, order, self._variable)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Only non-negative integer powers", exponent)
        result = TruncatedSeries.constant(1, self.order, self._variable)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, value):
        """Multiply every coefficient by ``value``."""
        return self.map_coefficients(lambda entry: entry * value)

    def map_coefficients(self, function):
        """Apply ``function`` to each coefficient."""
        return TruncatedSeries(
            [function(value) for value in self._coefficients],
            self.order,
            self._variable,
        )

    def truncate(self, order):
        """Drop every coefficient of index ``order`` or above."""
        if order > self.order:
            raise ValueError("Cannot raise the truncation order", order)
        return TruncatedSeries(self._coefficients, order, self._variable)

    def shift(self, amount):
        r"""Multiply by :math:`v^k`.

        Negative ``k`` divides, which needs the low coefficients to vanish;
        the order then drops by :math:`|k|`.

        Raises:
            ValueError: If a negative shift would discard a non-zero
                coefficient.
        """
        if amount >= 0:
            values = [0] * amount + list(self._coefficients)
            return TruncatedSeries(values, self.order, self._variable)
        drop = -amount
        if any(bool(value) for value in self._coefficients[:drop]):
            raise ValueError("Division by the variable leaves a pole", amount)
        return TruncatedSeries(
            self._coefficients[drop:], self.order - drop, self._variable
        )

    def rescale(self, factor):
        r"""Substitute :math:`v \mapsto c v` (``c`` commutes with
        coefficients, e.g. a power of ``t``)."""
        values = []
        power = 1
        for value in self._coefficients:
            values.append(value * power)
            power = power * factor
        return TruncatedSeries(values, self.order, self._variable)

    def is_polynomial(self):
        """Check that no coefficient carries a negative power of ``t``."""
        return all(_is_laurent_free(value) for value in self._coefficients)

    def exp(self):
        r"""Exponential, using :math:`n E_n = \sum_k k a_k E_{n-k}`.

        Raises:
            ValueError: If the constant term is non-zero.
        """
        if self._coefficients[0]:
            raise ValueError("exp needs a zero constant term")
        values = [1]
        for n in range(1, self.order):
            total = 0
            for k in range(1, n + 1):
                if self._coefficients[k] and values[n - k]:
                    total = total + self._coefficients[k] * values[n - k] * k
            values.append(total * fractions.Fraction(1, n))
        return TruncatedSeries(values, self.order, self._variable)

    def log(self):
        r"""Logarithm, using :math:`n L_n = n a_n - \sum_k k L_k a_{n-k}`.

        Raises:
            ValueError: If the constant term is not one.
        """
        if self._coefficients[0] != 1:
            raise ValueError("log needs a constant term of one")
        values = [0]
        for n in range(1, self.order):
            total = self._coefficients[n] * n
            for k in range(1, n):
                if values[k] and self._coefficients[n - k]:
                    total = total - values[k] * self._coefficients[n - k] * k
            values.append(total * fractions.Fraction(1, n))
        return TruncatedSeries(values, self.order, self._variable)

    def reciprocal(self):
        """Multiplicative inverse.

        Raises:
            ValueError: If the constant term is not a non-zero constant.
        """
        lead = _scalar_part(self._coefficients[0])
        if not isinstance(lead, numbers.Rational) or lead == 0:
            raise ValueError("Reciprocal needs an invertible constant term")
        inverse = 1 / fractions.Fraction(lead)
        values = [inverse]
        for n in range(1, self.order):
            total = 0
            for k in range(1, n + 1):
                if self._coefficients[k] and values[n - k]:
                    total = total + self._coefficients[k] * values[n - k]
            values.append(-total * inverse)
        return TruncatedSeries(values, self.order, self._variable)

    def compose(self, inner):
        """Substitute ``inner`` for the variable of ``self``.

        Raises:
            ValueError: If ``inner`` has a non-zero constant term.
        """
        if inner._coefficients[0]:
            raise ValueError("Composition needs a zero constant term")
        _merge_kinds(self._kind, inner._kind)
        order = min(self.order, inner.order)
        result = TruncatedSeries.constant(
            self._coefficients[order - 1], order, inner._variable
        )
        truncated = inner.truncate(order)
        for index in range(order - 2, -1, -1):
            result = result * truncated + TruncatedSeries.constant(
                self._coefficients[index], order, inner._variable
            )
        return result

    def bar(self, check=True):
        r"""The substitution :math:`t \mapsto t^{-1}, v \mapsto t v`.

        The coefficient :math:`c_n(t)` of :math:`v^n` becomes
        :math:`t^n c_n(t^{-1})`.

        Raises:
            ~matroidkl.hazmat.helpers.LaurentResidue: If ``check`` is set
                and negative powers of ``t`` remain.
        """
        values = [
            _shift_t(_invert_t(value), n)
            for n, value in enumerate(self._coefficients)
        ]
        result = TruncatedSeries(values, self.order, self._variable)
        if check and not result.is_polynomial():
            raise helpers.LaurentResidue(
                "Bar substitution left negative powers of t"
            )
        return result


def series_arith(left, right, op):
    """Add or multiply two truncated series.

    Args:
        left (TruncatedSeries): First operand.
        right (TruncatedSeries): Second operand.
        op (str): ``"add"`` or ``"mul"``.

    Returns:
        TruncatedSeries: The result, at the smaller of the two orders.

    Raises:
        ValueError: If ``op`` is unknown or the variables differ.
        TypeError: If the coefficient kinds are incompatible.
    """
    if op == "add":
        return left + right
    if op == "mul":
        return left * right
    raise ValueError("Unknown series operation", op)


def exp_log(value, op):
    """Exponential (``op="exp"``) or logarithm (``op="log"``)."""
    if op == "exp":
        return value.exp()
    if op == "log":
        return value.log()
    raise ValueError("Unknown series operation", op)


def compose(outer, inner):
    """Substitute ``inner`` into the one variable series ``outer``."""
    return outer.compose(inner)


def bar_substitute(value, variable, check=True):
    r"""Apply :math:`t \mapsto t^{-1}` and ``variable`` :math:`\mapsto t`
    ``variable``.

    Other variables of a nested series are left alone; their coefficients
    are inverted in ``t`` only through the targeted layer.

    Raises:
        ValueError: If ``variable`` does not occur.
        ~matroidkl.hazmat.helpers.LaurentResidue: As for
            :meth:`TruncatedSeries.bar`.
    """
    if not isinstance(value, TruncatedSeries):
        raise ValueError("Series variable does not occur", variable)
    if value.variable == variable:
        return value.bar(check)
    return value.map_coefficients(
        lambda entry: bar_substitute(entry, variable, check)
    )


def exponential_series(scale, order, variable="u"):
    r"""The series :math:`e^{c v} = \sum_n c^n v^n / n!`."""
    values = []
    power = 1
    factorial = 1
    for n in range(order):
        if n > 0:
            factorial *= n
            power = power * scale
        values.append(power * fractions.Fraction(1, factorial))
    return TruncatedSeries(values, order, variable)


def binomial_power_t(z_order):
    r"""The kernel :math:`K(t, z) = t^{-1}((1 + z)^t - 1)`.

    Computed as :math:`t^{-1}(\exp(t \log(1 + z)) - 1)`; the coefficient of
    :math:`z^n` is :math:`(t-1)(t-2)\cdots(t-n+1)/n!` for
    :math:`n \geq 1`.

    .. testsetup:: binomial-power

       from matroidkl.hazmat.series import binomial_power_t

    .. doctest:: binomial-power

       >>> kernel = binomial_power_t(3)
       >>> kernel.coefficient(1)
       TPoly(1*t^0)
       >>> kernel.coefficient(2)
       TPoly(-1/2*t^0 + 1/2*t^1)

    Args:
        z_order (int): Number of coefficients, at least one.

    Returns:
        TruncatedSeries: The kernel in the variable ``z``.

    Raises:
        ValueError: If ``z_order`` is not positive.
        ~matroidkl.hazmat.helpers.LaurentResidue: If a coefficient keeps
            a negative power of ``t``.
    """
    if z_order < 1:
        raise ValueError("Order must be positive", z_order)
    log_one_plus = TruncatedSeries(
        [0]
        + [fractions.Fraction((-1) ** (n + 1), n) for n in range(1, z_order)],
        z_order,
        "z",
    )
    t_value = polynomial.TPoly.monomial(1)
    raised = log_one_plus.scale(t_value).exp() - 1
    result = raised.map_coefficients(
        lambda value: polynomial.TPoly.lift(value).shift(-1)
    )
    if not result.is_polynomial():
        raise helpers.LaurentResidue("Binomial kernel is not Laurent-free")
    return result
