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

r"""Symmetric functions with ``t``-graded coefficients.

A :class:`SymFunc` is stored in the power sum basis, where products,
Kronecker products and plethysm are all simple. The Schur basis is used
for input and output: via the Frobenius characteristic, a Schur positive
symmetric function of degree :math:`n` is an honest representation of the
symmetric group :math:`S_n`.

Coefficients are :class:`~matroidkl.hazmat.polynomial.TPoly` values, so
a whole graded representation (for example an equivariant
Kazhdan-Lusztig polynomial) is a single object.

.. testsetup:: symfunc-intro

   from matroidkl.symfunc import SymFunc

.. doctest:: symfunc-intro

   >>> h2 = SymFunc.schur((2,))
   >>> h2.convert("power").terms
   {(2,): TPoly(1/2*t^0), (1, 1): TPoly(1/2*t^0)}
   >>> (SymFunc.schur((1,)) * SymFunc.schur((1,))).terms
   {(2,): TPoly(1*t^0), (1, 1): TPoly(1*t^0)}
"""

import fractions
import itertools
import numbers

from matroidkl import __config__
from matroidkl.hazmat import helpers
from matroidkl.hazmat import partitions
from matroidkl.hazmat import polynomial
from matroidkl.hazmat import series as series_mod


BASES = ("schur", "power")
_ZERO = polynomial.TPoly()


def _check_degree(degree):
    cap = __config__.limits().symfunc_degree_cap
    if degree > cap:
        raise helpers.ResourceCapExceeded(
            "symmetric function degree", cap, degree
        )


def _accumulate(target, key, value):
    total = target.get(key, _ZERO) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def _schur_to_power(terms):
    result = {}
    for shape, value in terms.items():
        size = sum(shape)
        _check_degree(size)
        for cycles in partitions.partitions(size):
            weight = partitions.character(shape, cycles)
            if weight:
                scale = fractions.Fraction(
                    weight, partitions.z_factor(cycles)
                )
                _accumulate(result, cycles, value * scale)
    return result


def _power_to_schur(terms):
    result = {}
    for cycles, value in terms.items():
        size = sum(cycles)
        _check_degree(size)
        for shape in partitions.partitions(size):
            weight = partitions.character(shape, cycles)
            if weight:
                _accumulate(result, shape, value * weight)
    ordered = {}
    for size in sorted({sum(shape) for shape in result}, reverse=True):
        for shape in partitions.partitions(size):
            if shape in result:
                ordered[shape] = result[shape]
    return ordered


class SymFunc:
    r"""A symmetric function with ``t``-graded coefficients.

    .. testsetup:: symfunc-constructor

       from matroidkl.symfunc import SymFunc

    .. doctest:: symfunc-constructor

       >>> f = SymFunc({(2, 2): 1}, basis="schur")
       >>> f
       <SymFunc (basis=schur, degree=4, terms=1)>
       >>> f.dimension()
       TPoly(2*t^0)

    Args:
        terms (Optional[Mapping[Tuple[int, ...], Any]]): Partition to
            coefficient mapping in ``basis``. Coefficients may be rationals,
            :class:`~matroidkl.hazmat.polynomial.Polynomial` or
            :class:`~matroidkl.hazmat.polynomial.TPoly` values.
        basis (str): Either ``"schur"`` or ``"power"``. Only affects how
            ``terms`` are read and reported.

    Raises:
        ValueError: If ``basis`` is unknown or a key is not a partition.
        ~matroidkl.hazmat.helpers.ResourceCapExceeded: If a Schur degree is
            above ``MATROIDKL_SYMFUNC_DEGREE_CAP``.
    """

    __slots__ = ("_power", "_basis")

    coefficient_kind = "symfunc"

    def __init__(self, terms=None, basis="power"):
        if basis not in BASES:
            raise ValueError("Unknown symmetric function basis", basis)
        clean = {}
        for shape, value in (terms or {}).items():
            shape = tuple(shape)
            if any(part < 1 for part in shape) or list(shape) != sorted(
                shape, reverse=True
            ):
                raise ValueError("Not a partition", shape)
            _accumulate(clean, shape, polynomial.TPoly.lift(value))
        if basis == "schur":
            clean = _schur_to_power(clean)
        self._power = clean
        self._basis = basis

    @classmethod
    def _from_power(cls, terms, basis="power"):
        result = cls.__new__(cls)
        result._power = terms
        result._basis = basis
        return result

    @classmethod
    def schur(cls, shape, coefficient=1):
        """The Schur function :math:`c \\cdot s_\\lambda`."""
        return cls({tuple(shape): coefficient}, basis="schur")

    @classmethod
    def power(cls, shape, coefficient=1):
        """The power sum :math:`c \\cdot p_\\lambda`."""
        return cls({tuple(shape): coefficient}, basis="power")

    @classmethod
    def complete(cls, degree):
        """The complete homogeneous function :math:`h_n = s_{(n)}`."""
        if degree < 0:
            raise ValueError("Degree must be non-negative", degree)
        if degree == 0:
            return cls.constant(1)
        return cls.schur((degree,))

    @classmethod
    def constant(cls, value):
        """A degree zero symmetric function."""
        return cls({(): value})

    @property
    def basis(self):
        """str: The basis used by :attr:`terms`."""
        return self._basis

    @property
    def power_terms(self):
        """Dict[Tuple[int, ...], TPoly]: Power sum expansion."""
        return dict(self._power)

    @property
    def terms(self):
        """Dict[Tuple[int, ...], TPoly]: Expansion in :attr:`basis`."""
        if self._basis == "schur":
            return _power_to_schur(self._power)
        return dict(self._power)

    def schur_terms(self):
        """Schur expansion regardless of :attr:`basis`."""
        return _power_to_schur(self._power)

    @property
    def degree(self):
        """Optional[int]: Largest degree present (``None`` for zero)."""
        if not self._power:
            return None
        return max(sum(shape) for shape in self._power)

    def is_homogeneous(self):
        """Check that every term has the same degree."""
        return len({sum(shape) for shape in self._power}) <= 1

    def convert(self, basis):
        """The same symmetric function reported in ``basis``."""
        if basis not in BASES:
            raise ValueError("Unknown symmetric function basis", basis)
        return SymFunc._from_power(self._power, basis)

    def __repr__(self):
        degree = self.degree
        degree = "None" if degree is None else f"{degree:d}"
        return (
            f"<{self.__class__.__name__} (basis={self._basis}, "
            f"degree={degree}, terms={len(self.terms):d})>"
        )

    def __eq__(self, other):
        if isinstance(other, (numbers.Rational, polynomial.TPoly)):
            other = SymFunc.constant(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self._power == other._power

    __hash__ = None

    def __bool__(self):
        return bool(self._power)

    def _lift(self, other):
        if isinstance(other, SymFunc):
            return other
        if isinstance(
            other,
            (numbers.Rational, polynomial.Polynomial, polynomial.TPoly),
        ):
            return SymFunc.constant(other)
        return None

    def __neg__(self):
        return self.map_coefficients(lambda value: -value)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        result = dict(self._power)
        for shape, value in other._power.items():
            _accumulate(result, shape, value)
        return SymFunc._from_power(result, self._basis)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(
            other,
            (numbers.Rational, polynomial.Polynomial, polynomial.TPoly),
        ):
            scale = polynomial.TPoly.lift(other)
            return self.map_coefficients(lambda value: value * scale)
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self._power or not other._power:
            return SymFunc._from_power({}, self._basis)
        _check_degree(self.degree + other.degree)
        result = {}
        for (left, left_value), (right, right_value) in itertools.product(
            self._power.items(), other._power.items()
        ):
            _accumulate(
                result,
                partitions.merge(left, right),
                left_value * right_value,
            )
        return SymFunc._from_power(result, self._basis)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Only non-negative integer powers", exponent)
        result = SymFunc.constant(1)
        for _ in range(exponent):
            result = result * self
        return result.convert(self._basis)

    def map_coefficients(self, function):
        """Apply ``function`` to every power sum coefficient."""
        result = {}
        for shape, value in self._power.items():
            _accumulate(
                result, shape, polynomial.TPoly.lift(function(value))
            )
        return SymFunc._from_power(result, self._basis)

    def invert(self):
        r"""Substitute :math:`t \mapsto t^{-1}` in the coefficients."""
        return self.map_coefficients(lambda value: value.invert())

    def shift(self, amount):
        r"""Multiply by :math:`t^k`."""
        return self.map_coefficients(lambda value: value.shift(amount))

    def is_polynomial(self):
        """Check that no coefficient has a negative power of ``t``."""
        return all(value.is_polynomial() for value in self._power.values())

    def t_degrees(self):
        """Sorted powers of ``t`` that occur."""
        return sorted(
            {
                exponent
                for value in self._power.values()
                for exponent in value.terms
            }
        )

    def t_coefficient(self, exponent):
        """The rational symmetric function multiplying :math:`t^i`."""
        return self.map_coefficients(
            lambda value: value.coefficient(exponent)
        )

    def kronecker(self, other):
        r"""Kronecker (internal) product.

        In the power sum basis :math:`p_\lambda * p_\mu =
        \delta_{\lambda\mu} z_\lambda p_\lambda`.

        Raises:
            ValueError: If either factor is not homogeneous or the degrees
                differ.
        """
        if not self._power or not other._power:
            return SymFunc._from_power({}, self._basis)
        if not (self.is_homogeneous() and other.is_homogeneous()):
            raise ValueError("Kronecker product needs homogeneous factors")
        if self.degree != other.degree:
            raise ValueError(
                "Kronecker product needs equal degrees",
                self.degree,
                other.degree,
            )
        result = {}
        for shape, value in self._power.items():
            partner = other._power.get(shape)
            if partner is not None:
                _accumulate(
                    result,
                    shape,
                    value * partner * partitions.z_factor(shape),
                )
        return SymFunc._from_power(result, self._basis)

    def adams(self, power):
        r"""The plethysm :math:`p_k[f]`.

        Every :math:`p_j` becomes :math:`p_{jk}` and every coefficient
        :math:`c(t)` becomes :math:`c(t^k)`.
        """
        if power < 1:
            raise ValueError("Adams operation index must be positive", power)
        if self._power:
            _check_degree(self.degree * power)
        result = {}
        for shape, value in self._power.items():
            _accumulate(
                result,
                tuple(part * power for part in shape),
                value.power_substitute(power),
            )
        return SymFunc._from_power(result, self._basis)

    def plethysm(self, inner):
        r"""The plethysm :math:`f[g]`.

        Uses :math:`p_k[tX] = t^k p_k[X]`; the ``t``-coefficients of the
        outer function ``self`` are treated as scalars.

        .. testsetup:: plethysm

           from matroidkl.hazmat import polynomial
           from matroidkl.symfunc import SymFunc

        .. doctest:: plethysm

           >>> t = polynomial.TPoly.monomial(1)
           >>> inner = SymFunc.power((1,), t - 2)
           >>> SymFunc.power((2,)).plethysm(inner).terms
           {(2,): TPoly(-2*t^0 + 1*t^2)}

        Args:
            inner (Union[SymFunc, ~matroidkl.hazmat.series.TruncatedSeries]):
                The argument; a series is treated as in
                :func:`plethysm_series`.

        Returns:
            Union[SymFunc, ~matroidkl.hazmat.series.TruncatedSeries]: The
            substituted value.
        """
        return _plethysm(self, inner)

    def dimension(self):
        """Graded dimension: Schur multiplicities times hook dimensions."""
        total = _ZERO
        for shape, value in _power_to_schur(self._power).items():
            total = total + value * partitions.hook_length_dimension(shape)
        return total

    def exponential_specialization(self):
        r"""Image under :math:`p_1 \mapsto 1, p_k \mapsto 0 \; (k > 1)`.

        For a degree :math:`n` function this is the dimension divided by
        :math:`n!`.
        """
        total = _ZERO
        for shape, value in self._power.items():
            if all(part == 1 for part in shape):
                total = total + value
        return total

    def is_schur_positive(self):
        """Check every ``t``-coefficient of every Schur multiplicity."""
        return all(
            coefficient >= 0
            for value in _power_to_schur(self._power).values()
            for coefficient in value.terms.values()
        )

    def is_schur_integral(self):
        """Check that every Schur multiplicity has integer coefficients."""
        return all(
            isinstance(coefficient, int)
            for value in _power_to_schur(self._power).values()
            for coefficient in value.terms.values()
        )

    def to_json(self):
        """Schur expansion as ``[{"partition": [...], "multiplicity":
        {"t_degree": int}}]``.

        Raises:
            ~matroidkl.hazmat.helpers.NonIntegralCoefficient: If a
                multiplicity is not integral.
        """
        return [
            {
                "partition": list(shape),
                "multiplicity": {
                    str(exponent): helpers.exact_integer(
                        coefficient, "Schur multiplicity"
                    )
                    for exponent, coefficient in sorted(value.terms.items())
                },
            }
            for shape, value in _power_to_schur(self._power).items()
        ]


def _adams(value, power):
    if isinstance(value, SymFunc):
        return value.adams(power)
    if isinstance(value, series_mod.TruncatedSeries):
        order = value.order
        values = [0] * order
        for index, entry in enumerate(value.coefficients):
            if index * power >= order:
                break
            values[index * power] = _adams(entry, power)
        return series_mod.TruncatedSeries(values, order, value.variable)
    if isinstance(value, polynomial.TPoly):
        return value.power_substitute(power)
    if isinstance(value, polynomial.Polynomial):
        return polynomial.TPoly.from_polynomial(value).power_substitute(power)
    if isinstance(value, numbers.Rational):
        return value
    raise TypeError("Cannot apply an Adams operation to", value)


def _unit_like(value):
    if isinstance(value, series_mod.TruncatedSeries):
        return series_mod.TruncatedSeries.constant(
            SymFunc.constant(1), value.order, value.variable
        )
    return SymFunc.constant(1)


def _plethysm(outer, inner):
    unit = _unit_like(inner)
    cache = {}
    total = None
    for shape, coefficient in outer._power.items():
        product = unit
        for part in shape:
            if part not in cache:
                cache[part] = _adams(inner, part)
            product = product * cache[part]
        term = product * coefficient
        total = term if total is None else total + term
    if total is None:
        return unit * 0
    return total


def basis_convert(value, basis):
    """Report ``value`` in ``basis`` (``"schur"`` or ``"power"``)."""
    return value.convert(basis)


def multiply(left, right):
    """Ordinary (induction) product."""
    return left * right


def kronecker(left, right):
    """Kronecker product, see :meth:`SymFunc.kronecker`."""
    return left.kronecker(right)


def plethysm(outer, inner):
    """Plethysm, see :meth:`SymFunc.plethysm`."""
    return outer.plethysm(inner)


def plethysm_series(outer, inner):
    r"""Plethystic substitution into a series.

    The series variable :math:`u` is plethystic: :math:`p_k[u] = u^k`, so
    :math:`p_k[G]` moves the coefficient of :math:`u^n` to
    :math:`u^{nk}` and applies :math:`p_k` to it.

    Args:
        outer (SymFunc): The outer function.
        inner (~matroidkl.hazmat.series.TruncatedSeries): A series whose
            coefficients are symmetric functions.

    Returns:
        ~matroidkl.hazmat.series.TruncatedSeries: :math:`f[G]`.
    """
    if not isinstance(inner, series_mod.TruncatedSeries):
        raise TypeError("Expected a truncated series", inner)
    return _plethysm(outer, inner)


def dimension(value):
    """Graded dimension, see :meth:`SymFunc.dimension`."""
    return value.dimension()


def is_schur_positive(value):
    """Check Schur positivity, see :meth:`SymFunc.is_schur_positive`."""
    return value.is_schur_positive()


def complete_series(order, variable="u"):
    r"""The series :math:`s(u) = \sum_n s[n] u^n`."""
    return series_mod.TruncatedSeries.from_function(
        SymFunc.complete, order, variable
    )


def exponential_specialization(value):
    """Specialize a symmetric function or series of them coefficientwise.

    See :meth:`SymFunc.exponential_specialization`.
    """
    if isinstance(value, series_mod.TruncatedSeries):
        return value.map_coefficients(exponential_specialization)
    if isinstance(value, SymFunc):
        return value.exponential_specialization()
    return polynomial.TPoly.lift(value)


def strong_log_concave_check(sequence):
    r"""Find the quadruples where strong log-concavity fails.

    For every :math:`i \leq j \leq k \leq l` with :math:`i + l = j + k` the
    difference :math:`C_j * C_k - C_i * C_l` of Kronecker products must be
    Schur positive.

    .. testsetup:: strong-log-concave

       from matroidkl.symfunc import SymFunc
       from matroidkl.symfunc import strong_log_concave_check

    .. doctest:: strong-log-concave

       >>> c = SymFunc.schur((2,))
       >>> strong_log_concave_check([c, c, c])
       []
       >>> strong_log_concave_check([c, SymFunc(), c])
       [(0, 1, 1, 2)]

    Args:
        sequence (Sequence[SymFunc]): Homogeneous symmetric functions of one
            common degree (zero entries allowed).

    Returns:
        List[Tuple[int, int, int, int]]: Failing quadruples, in
        lexicographic order.

    Raises:
        ValueError: If the non-zero entries have different degrees.
    """
    degrees = {entry.degree for entry in sequence if entry}
    homogeneous = all(entry.is_homogeneous() for entry in sequence)
    if len(degrees) > 1 or not homogeneous:
        raise ValueError("Entries must share one degree", sorted(degrees))
    failures = []
    size = len(sequence)
    for i, j, k in itertools.combinations_with_replacement(range(size), 3):
        last = j + k - i
        if last >= size:
            continue
        difference = sequence[j].kronecker(sequence[k]) - sequence[
            i
        ].kronecker(sequence[last])
        if not difference.is_schur_positive():
            failures.append((i, j, k, last))
    return failures

