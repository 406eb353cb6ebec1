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

"""Helper for doing symbolic algebra with data.

Includes functions for:

* Converting exact polynomials to SymPy polynomials
* Solving the Kazhdan-Lusztig recursion directly over intervals
* Finding real roots with SymPy's ``real_roots``

These are independent oracles for the exact arithmetic in
:mod:`matroidkl.hazmat`; they are slow and meant for testing.
"""

import fractions

import sympy

from matroidkl.hazmat import polynomial


def to_symbolic(poly, variable=None):
    """Convert a :class:`~matroidkl.hazmat.polynomial.Polynomial` to SymPy.

    Args:
        poly (~matroidkl.hazmat.polynomial.Polynomial): The polynomial.
        variable (Optional[sympy.Symbol]): Defaults to ``t``.

    Returns:
        sympy.Poly: The polynomial over the rationals.
    """
    if variable is None:
        variable = sympy.Symbol("t")
    expression = sum(
        (
            sympy.Rational(value) * variable**degree
            for degree, value in enumerate(poly.coefficients)
        ),
        sympy.Integer(0),
    )
    return sympy.Poly(expression, variable, domain="QQ")


def from_symbolic(expression, variable):
    """Convert a SymPy expression in ``variable`` back to a polynomial."""
    poly = sympy.Poly(sympy.expand(expression), variable, domain="QQ")
    values = [sympy.Rational(value) for value in reversed(poly.all_coeffs())]
    return polynomial.Polynomial(
        fractions.Fraction(int(value.p), int(value.q)) for value in values
    )


def interval_kl_polynomials(lattice):
    r"""Kazhdan-Lusztig polynomials of every upper interval, by definition.

    For each flat :math:`F`, working down from the top, the polynomial
    :math:`P` of :math:`[F, \hat{1}]` (rank :math:`r`) satisfies

    .. math::

       t^r P(t^{-1}) - P(t) =
       \sum_{F < G} \chi_{[F, G]}(t) P_{[G, \hat{1}]}(t)

    and has degree below :math:`r / 2`, so the coefficient of
    :math:`t^i` in :math:`P` is minus that of the right hand side for
    :math:`i < r / 2`.

    Args:
        lattice (~matroidkl.lattice.FlatLattice): The lattice.

    Returns:
        List[sympy.Expr]: One polynomial per flat, in lattice order.
    """
    t = sympy.Symbol("t")
    masks = [int(mask) for mask in lattice.masks]
    top_rank = lattice.rank
    result = [None] * len(masks)
    for index in range(len(masks) - 1, -1, -1):
        flat = masks[index]
        rank = top_rank - lattice.rank_of(flat)
        rhs = sympy.Integer(0)
        for upper in lattice.upper_set(flat):
            upper = int(upper)
            if upper == index:
                continue
            chi = to_symbolic(
                lattice.interval_characteristic_polynomial(
                    flat, masks[upper]
                ),
                t,
            ).as_expr()
            rhs += chi * result[upper]
        rhs = sympy.Poly(sympy.expand(rhs), t) if rhs != 0 else None
        value = sympy.Integer(1) if rank == 0 else sympy.Integer(0)
        if rhs is not None:
            for degree in range((rank + 1) // 2):
                value -= rhs.coeff_monomial(t**degree) * t**degree
        result[index] = sympy.expand(value)
    return result


def kl_polynomial(lattice):
    """The Kazhdan-Lusztig polynomial of a lattice of flats via SymPy.

    Returns:
        ~matroidkl.hazmat.polynomial.Polynomial: The polynomial.
    """
    value = interval_kl_polynomials(lattice)[0]
    return from_symbolic(value, sympy.Symbol("t"))


def real_root_count(poly):
    """Number of real roots, with multiplicity, via SymPy.

    Args:
        poly (~matroidkl.hazmat.polynomial.Polynomial): A non-zero
            polynomial.

    Returns:
        Tuple[int, int]: The total real root count and the count of
        strictly negative roots.
    """
    roots = sympy.real_roots(to_symbolic(poly))
    negative = sum(1 for root in roots if root < 0)
    return len(roots), negative
