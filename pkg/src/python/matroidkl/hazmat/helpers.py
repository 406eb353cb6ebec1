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

"""Exact arithmetic, bit mask and error helpers.

Subsets of a ground set are stored as bit masks: element ``i`` belongs to
the subset ``mask`` exactly when ``(mask >> i) & 1`` is set. Python
integers are used by the rank oracles, ``numpy.uint64`` arrays by the
lattice code, hence the 64 element ceiling.
"""

import fractions
import math

import sympy


MAX_MASK_BITS = 64


class ResourceCapExceeded(RuntimeError):
    """Signal that a configured resource cap has been exceeded.

    Args:
        resource (str): The name of the capped resource, e.g. ``"flats"``.
        limit (int): The configured cap.
        observed (int): The value that broke through the cap (may be a
            lower bound when enumeration was stopped early).
    """

    def __init__(self, resource, limit, observed):
        super().__init__(resource, limit, observed)
        self.resource = resource
        self.limit = limit
        self.observed = observed

    def __str__(self):
        return (
            f"The {self.resource} cap of {self.limit} was exceeded "
            f"(observed at least {self.observed})."
        )


class InconsistentRecursion(ArithmeticError):
    """Signal that a recursion produced data violating its own identity.

    Raised when a right-hand side fails the antisymmetry required by the
    degree split, when an extracted constant term is wrong or when a
    functional equation leaves a non-zero residual.
    """


class NonIntegralCoefficient(ArithmeticError):
    """Signal that a coefficient expected to be an integer is not."""


class LaurentResidue(ArithmeticError):
    """Signal that negative powers of ``t`` survived a substitution."""


class DegenerateRoots(ValueError):
    """Signal repeated or shared roots where simple roots are required."""


class RefinementBudgetExceeded(RuntimeError):
    """Signal that root interval refinement ran out of steps."""


def bit_count(mask):
    """Count the elements of a subset.

    Args:
        mask (int): A subset as a bit mask.

    Returns:
        int: The number of set bits.
    """
    return bin(mask).count("1")


def iter_bits(mask):
    """Iterate over the elements of a subset in increasing order.

    Args:
        mask (int): A subset as a bit mask.

    Yields:
        int: Each element index.
    """
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def mask_from(elements):
    """Build a bit mask from element indices.

    Args:
        elements (Iterable[int]): Non-negative element indices.

    Returns:
        int: The subset as a bit mask.
    """
    mask = 0
    for element in elements:
        mask |= 1 << element
    return mask


def full_mask(size):
    """The bit mask of a full ground set with ``size`` elements."""
    return (1 << size) - 1


def check_ground_size(size, limit):
    """Ensure a ground set fits in the configured mask width.

    Args:
        size (int): The number of elements.
        limit (int): The configured cap (never above 64).

    Raises:
        ResourceCapExceeded: If ``size`` is above ``limit``.
    """
    if size > min(limit, MAX_MASK_BITS):
        raise ResourceCapExceeded(
            "ground set", min(limit, MAX_MASK_BITS), size
        )


def binomial(n, k):
    """Binomial coefficient extended by zero outside ``0 <= k <= n``.

    Args:
        n (int): The top argument.
        k (int): The bottom argument.

    Returns:
        int: :math:`\\binom{n}{k}`, or ``0`` when ``k < 0``, ``n < 0`` or
        ``k > n``.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def double_factorial(n):
    """The double factorial ``n!!`` with ``(-1)!! = 0!! = 1``."""
    if n < -1:
        raise ValueError("Double factorial undefined for", n)
    return int(sympy.factorial2(n))


def catalan(n):
    """The ``n``-th Catalan number."""
    if n < 0:
        raise ValueError("Catalan index must be non-negative", n)
    return int(sympy.catalan(n))


def exact_integer(value, context="coefficient"):
    """Convert an exact rational to an ``int``.

    Args:
        value (Union[int, fractions.Fraction]): The value.
        context (str): Used in the error message.

    Returns:
        int: The value as an integer.

    Raises:
        NonIntegralCoefficient: If ``value`` has a non-trivial denominator.
    """
    if isinstance(value, int):
        return value
    value = fractions.Fraction(value)
    if value.denominator != 1:
        raise NonIntegralCoefficient(
            f"Expected an integral {context}", value
        )
    return value.numerator
