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

"""Exact univariate polynomials in ``t``.

Two representations are provided:

* :class:`Polynomial`: dense, ordinary polynomials with ``int`` or
  :class:`fractions.Fraction` coefficients. This is the value type for
  Kazhdan-Lusztig and characteristic polynomials and for real root work.
* :class:`TPoly`: sparse Laurent polynomials. These show up as
  coefficients of truncated series and symmetric functions, where
  ``t -> 1 / t`` substitutions create negative powers transiently.

No floating point value ever enters either type.
"""

import fractions
import math
import numbers

from matroidkl.hazmat import helpers


def _normalize(value):
    """Collapse a rational with unit denominator to an ``int``."""
    if isinstance(value, fractions.Fraction) and value.denominator == 1:
        return value.numerator
    if isinstance(value, bool):
        return int(value)
    return value


def _check_rational(value):
    if not isinstance(value, numbers.Rational):
        raise TypeError("Coefficients must be exact rationals", value)
    return _normalize(value)


class Polynomial:
    r"""Dense polynomial with exact rational coefficients.

    .. testsetup:: polynomial-constructor

       from matroidkl.hazmat.polynomial import Polynomial

    .. doctest:: polynomial-constructor

       >>> poly = Polynomial([1, 2])
       >>> poly
       <Polynomial (degree=1, coefficients=(1, 2))>
       >>> poly(3)
       7

    Args:
        coefficients (Iterable[numbers.Rational]): Coefficients in
            increasing order of degree. Trailing zeros are stripped.

    Raises:
        TypeError: If a coefficient is not an exact rational.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients=()):
        values = [_check_rational(value) for value in coefficients]
        while values and values[-1] == 0:
            values.pop()
        self._coefficients = tuple(values)

    @classmethod
    def constant(cls, value):
        """A constant polynomial."""
        return cls((value,))

    @classmethod
    def monomial(cls, degree, coefficient=1):
        """The polynomial :math:`c t^k`."""
        if degree < 0:
            raise ValueError("Monomial degree must be non-negative", degree)
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def linear_power(cls, root_shift, power):
        r"""The polynomial :math:`(t - a)^k`."""
        result = cls.constant(1)
        factor = cls((-root_shift, 1))
        for _ in range(power):
            result = result * factor
        return result

    @property
    def coefficients(self):
        """Tuple[numbers.Rational, ...]: Coefficients, lowest degree first."""
        return self._coefficients

    @property
    def degree(self):
        """int: The degree, with ``-1`` standing in for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def leading_coefficient(self):
        """numbers.Rational: The top coefficient (``0`` for zero)."""
        if not self._coefficients:
            return 0
        return self._coefficients[-1]

    def is_zero(self):
        """Check if this is the zero polynomial."""
        return not self._coefficients

    def is_integral(self):
        """Check that every coefficient is an integer."""
        return all(isinstance(value, int) for value in self._coefficients)

    def coefficient(self, index):
        """The coefficient of :math:`t^i` (zero outside the support)."""
        if 0 <= index < len(self._coefficients):
            return self._coefficients[index]
        return 0

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} "
            f"(degree={self.degree:d}, coefficients={self._coefficients!r})>"
        )

    def __eq__(self, other):
        if isinstance(other, numbers.Rational):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def __bool__(self):
        return bool(self._coefficients)

    def __call__(self, value):
        result = 0
        for coefficient in reversed(self._coefficients):
            result = result * value + coefficient
        return _normalize(result)

    def __neg__(self):
        return Polynomial(-value for value in self._coefficients)

    def __add__(self, other):
        if isinstance(other, numbers.Rational):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        size = max(len(self._coefficients), len(other._coefficients))
        return Polynomial(
            self.coefficient(i) + other.coefficient(i) for i in range(size)
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, numbers.Rational):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            return Polynomial(value * other for value in self._coefficients)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._coefficients or not other._coefficients:
            return Polynomial()
        product = [0] * (len(self._coefficients) + len(other._coefficients))
        for i, left in enumerate(self._coefficients):
            if left == 0:
                continue
            for j, right in enumerate(other._coefficients):
                product[i + j] += left * right
        return Polynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Only non-negative integer powers", exponent)
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, amount):
        """Multiply by :math:`t^k` for :math:`k \\geq 0`."""
        if amount < 0:
            raise ValueError("Shift amount must be non-negative", amount)
        if not self._coefficients:
            return self
        return Polynomial((0,) * amount + self._coefficients)

    def reflect(self, rank):
        r"""Compute :math:`t^r P(t^{-1})`.

        Args:
            rank (int): The exponent :math:`r`, at least the degree.

        Returns:
            Polynomial: The reflected polynomial.

        Raises:
            ValueError: If ``rank`` is below the degree.
        """
        if rank < self.degree:
            raise ValueError(
                "Reflection exponent is below the degree", rank, self.degree
            )
        missing = rank + 1 - len(self._coefficients)
        padded = self._coefficients + (0,) * missing
        return Polynomial(reversed(padded))

    def derivative(self):
        """The formal derivative."""
        return Polynomial(
            index * value
            for index, value in enumerate(self._coefficients)
            if index > 0
        )

    def divmod(self, divisor):
        """Exact long division over the rationals.

        Args:
            divisor (Polynomial): A non-zero polynomial.

        Returns:
            Tuple[Polynomial, Polynomial]: The quotient and remainder.

        Raises:
            ZeroDivisionError: If ``divisor`` is zero.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        remainder = [fractions.Fraction(value) for value in self._coefficients]
        lead = fractions.Fraction(divisor.leading_coefficient)
        shift_max = len(remainder) - len(divisor._coefficients)
        quotient = [0] * max(shift_max + 1, 0)
        for shift in range(shift_max, -1, -1):
            factor = remainder[shift + divisor.degree] / lead
            quotient[shift] = factor
            if factor == 0:
                continue
            for index, value in enumerate(divisor._coefficients):
                remainder[shift + index] -= factor * value
        return Polynomial(quotient), Polynomial(remainder)

    def monic(self):
        """Scale so the leading coefficient is one."""
        if self.is_zero():
            return self
        return self / self.leading_coefficient

    def __truediv__(self, other):
        if isinstance(other, numbers.Rational):
            if other == 0:
                raise ZeroDivisionError("Polynomial division by zero")
            inverse = 1 / fractions.Fraction(other)
            return Polynomial(value * inverse for value in self._coefficients)
        return NotImplemented

    def gcd(self, other):
        """Monic greatest common divisor (zero if both are zero)."""
        left, right = self, other
        while not right.is_zero():
            _, remainder = left.divmod(right)
            left, right = right, remainder
        return left.monic()

    def primitive(self):
        """Scale to integer coefficients with positive leading coefficient.

        Real roots are unchanged.
        """
        if self.is_zero():
            return self
        denominators = math.lcm(
            *(
                fractions.Fraction(value).denominator
                for value in self._coefficients
            )
        )
        scaled = [
            helpers.exact_integer(value * denominators)
            for value in self._coefficients
        ]
        content = math.gcd(*scaled)
        sign = 1 if scaled[-1] > 0 else -1
        return Polynomial(sign * value // content for value in scaled)

    def to_json(self):
        """JSON friendly coefficients: ``int`` or ``"p/q"`` strings."""
        return [
            value if isinstance(value, int) else str(value)
            for value in self._coefficients
        ]


class TPoly:
    """Sparse Laurent polynomial in ``t`` with exact rational coefficients.

    Args:
        terms (Mapping[int, numbers.Rational]): Exponent to coefficient
            mapping; zero coefficients are dropped.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exponent, value in terms.items():
                value = _check_rational(value)
                if value != 0:
                    clean[int(exponent)] = value
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def from_polynomial(cls, polynomial):
        """Convert a dense :class:`Polynomial`."""
        return cls(dict(enumerate(polynomial.coefficients)))

    @classmethod
    def lift(cls, value):
        """Coerce a rational, :class:`Polynomial` or :class:`TPoly`."""
        if isinstance(value, TPoly):
            return value
        if isinstance(value, Polynomial):
            return cls.from_polynomial(value)
        if isinstance(value, numbers.Rational):
            return cls.constant(value)
        raise TypeError("Cannot interpret as a Laurent polynomial", value)

    @property
    def terms(self):
        """Dict[int, numbers.Rational]: A copy of the exponent mapping."""
        return dict(self._terms)

    @property
    def degree(self):
        """int: Highest exponent (``None`` for zero)."""
        return max(self._terms) if self._terms else None

    @property
    def low_degree(self):
        """int: Lowest exponent (``None`` for zero)."""
        return min(self._terms) if self._terms else None

    def coefficient(self, exponent):
        return self._terms.get(exponent, 0)

    def is_zero(self):
        return not self._terms

    def is_polynomial(self):
        """Check that no negative exponent occurs."""
        return all(exponent >= 0 for exponent in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "TPoly(0)"
        parts = [
            f"{value}*t^{exponent}"
            for exponent, value in sorted(self._terms.items())
        ]
        return f"TPoly({' + '.join(parts)})"

    def __eq__(self, other):
        if isinstance(other, (numbers.Rational, Polynomial)):
            other = TPoly.lift(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, value):
        total = 0
        for exponent, coefficient in self._terms.items():
            total += coefficient * fractions.Fraction(value) ** exponent
        return _normalize(total)

    def __neg__(self):
        return TPoly({k: -v for k, v in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, (numbers.Rational, Polynomial)):
            other = TPoly.lift(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        result = dict(self._terms)
        for exponent, value in other._terms.items():
            result[exponent] = result.get(exponent, 0) + value
        return TPoly(result)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (numbers.Rational, Polynomial)):
            other = TPoly.lift(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            if other == 0:
                return TPoly()
            return TPoly({k: v * other for k, v in self._terms.items()})
        if isinstance(other, Polynomial):
            other = TPoly.from_polynomial(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        result = {}
        for left_exp, left in self._terms.items():
            for right_exp, right in other._terms.items():
                key = left_exp + right_exp
                result[key] = result.get(key, 0) + left * right
        return TPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Only non-negative integer powers", exponent)
        result = TPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, amount):
        """Multiply by :math:`t^k` (``k`` may be negative)."""
        return TPoly({k + amount: v for k, v in self._terms.items()})

    def invert(self):
        """Substitute :math:`t \\mapsto t^{-1}`."""
        return TPoly({-k: v for k, v in self._terms.items()})

    def power_substitute(self, power):
        """Substitute :math:`t \\mapsto t^k` for a positive integer ``k``."""
        if power < 1:
            raise ValueError("Substituted power must be positive", power)
        return TPoly({k * power: v for k, v in self._terms.items()})

    def to_polynomial(self):
        """Convert to a dense :class:`Polynomial`.

        Raises:
            ~matroidkl.hazmat.helpers.LaurentResidue: If a negative power of
                ``t`` occurs.
        """
        if not self._terms:
            return Polynomial()
        if not self.is_polynomial():
            raise helpers.LaurentResidue(
                "Negative powers of t remain", self.low_degree
            )
        dense = [0] * (self.degree + 1)
        for exponent, value in self._terms.items():
            dense[exponent] = value
        return Polynomial(dense)
