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

"""Integer partitions and characters of symmetric groups.

Partitions are tuples of positive integers in weakly decreasing order;
the empty tuple is the unique partition of zero.
"""

import collections
import functools
import math

import numpy as np


@functools.lru_cache(maxsize=None)
def partitions(n):
    """All partitions of ``n``, in reverse lexicographic order.

    .. testsetup:: partitions-four

       from matroidkl.hazmat.partitions import partitions

    .. doctest:: partitions-four

       >>> partitions(4)
       ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))

    Args:
        n (int): A non-negative integer.

    Returns:
        Tuple[Tuple[int, ...], ...]: The partitions.

    Raises:
        ValueError: If ``n`` is negative.
    """
    if n < 0:
        raise ValueError("Cannot partition a negative integer", n)
    return tuple(_partitions_bounded(n, n))


def _partitions_bounded(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def multiplicities(shape):
    """Map each part size to the number of times it occurs."""
    return collections.Counter(shape)


def z_factor(shape):
    r"""The centralizer order :math:`z_\lambda = \prod_i i^{m_i} m_i!`."""
    result = 1
    for part, count in multiplicities(shape).items():
        result *= part**count * math.factorial(count)
    return result


def set_partition_count(shape):
    r"""Number of set partitions of ``{1..n}`` with block sizes ``shape``.

    This is :math:`n! / (\prod_i \lambda_i! \prod_j m_j!)`.
    """
    n = sum(shape)
    denominator = 1
    for part in shape:
        denominator *= math.factorial(part)
    for count in multiplicities(shape).values():
        denominator *= math.factorial(count)
    return math.factorial(n) // denominator


def merge(left, right):
    """The partition whose parts are those of both inputs."""
    return tuple(sorted(left + right, reverse=True))


def hook_length_dimension(shape):
    """Dimension of the irreducible representation ``V_shape``.

    Uses the hook length formula :math:`n! / \\prod h(c)`.
    """
    n = sum(shape)
    conjugate = conjugate_partition(shape)
    product = 1
    for row, length in enumerate(shape):
        for column in range(length):
            arm = length - column - 1
            leg = conjugate[column] - row - 1
            product *= arm + leg + 1
    return math.factorial(n) // product


def conjugate_partition(shape):
    """The transposed partition."""
    if not shape:
        return ()
    return tuple(
        sum(1 for part in shape if part > column) for column in range(shape[0])
    )


@functools.lru_cache(maxsize=None)
def character(shape, cycle_type):
    """Irreducible character value by the Murnaghan-Nakayama rule.

    Border strips are removed on the abacus: a bead at position ``b`` may
    slide to an empty position ``b - k``; the sign is ``-1`` to the number
    of beads jumped over.

    Args:
        shape (Tuple[int, ...]): The partition labelling the irreducible.
        cycle_type (Tuple[int, ...]): The partition labelling the conjugacy
            class.

    Returns:
        int: The character value.

    Raises:
        ValueError: If the two partitions have different sizes.
    """
    if sum(shape) != sum(cycle_type):
        raise ValueError("Partitions must have equal size", shape, cycle_type)
    if not cycle_type:
        return 1
    strip = cycle_type[0]
    rest = cycle_type[1:]
    length = len(shape)
    beads = [part + length - 1 - row for row, part in enumerate(shape)]
    occupied = set(beads)
    total = 0
    for bead in beads:
        target = bead - strip
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for other in beads if target < other < bead)
        moved = sorted((occupied - {bead}) | {target}, reverse=True)
        reduced = tuple(
            value - (length - 1 - row) for row, value in enumerate(moved)
        )
        reduced = tuple(part for part in reduced if part > 0)
        total += (-1) ** jumped * character(reduced, rest)
    return total


@functools.lru_cache(maxsize=None)
def character_table(n):
    """The character table of the symmetric group on ``n`` letters.

    Returns:
        numpy.ndarray: ``int64`` matrix whose entry ``[i, j]`` is the value
        of the irreducible ``partitions(n)[i]`` on the class
        ``partitions(n)[j]``. The array is read-only.
    """
    shapes = partitions(n)
    table = np.array(
        [[character(shape, cycles) for cycles in shapes] for shape in shapes],
        dtype=np.int64,
    )
    table.setflags(write=False)
    return table
