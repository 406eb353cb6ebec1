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

"""Rank oracles, closures and flat enumeration.

A rank oracle exposes ``size`` (number of ground set elements), ``rank``
and ``closure``, both acting on Python integer bit masks. The lattice
routines at the bottom of this module work on ``numpy.uint64`` arrays of
flats sorted by rank.
"""

import logging

import numpy as np
import sympy

from matroidkl.hazmat import helpers


_LOGGER = logging.getLogger(__name__)
_ONE = np.uint64(1)
_MAX_LINEAR_PRIME = 2**31


class UniformOracle:
    """Rank oracle for the uniform matroid with ``m + d`` elements, rank ``d``.

    Args:
        m (int): The corank.
        d (int): The rank.
    """

    __slots__ = ("m", "d", "size")

    def __init__(self, m, d):
        self.m = m
        self.d = d
        self.size = m + d

    def rank(self, mask):
        return min(helpers.bit_count(mask), self.d)

    def closure(self, mask):
        if helpers.bit_count(mask) >= self.d:
            return helpers.full_mask(self.size)
        return mask


class DisjointSets:
    """Union-find over ``0, ..., count - 1`` with path halving."""

    __slots__ = ("parent",)

    def __init__(self, count):
        self.parent = list(range(count))

    def find(self, node):
        parent = self.parent
        while parent[node] != node:
            parent[node] = parent[parent[node]]
            node = parent[node]
        return node

    def union(self, left, right):
        root_left = self.find(left)
        root_right = self.find(right)
        if root_left == root_right:
            return False
        self.parent[root_left] = root_right
        return True


class GraphicOracle:
    """Rank oracle for the cycle matroid of a multigraph.

    The ground set is the edge list; the rank of an edge subset is the
    number of vertices it touches minus its number of components, i.e. the
    size of a spanning forest.

    Args:
        num_vertices (int): Vertices are ``0, ..., num_vertices - 1``.
        edges (Sequence[Tuple[int, int]]): The edges; loops and parallel
            edges are allowed.
    """

    __slots__ = ("num_vertices", "edges", "size", "_heads", "_tails")

    def __init__(self, num_vertices, edges):
        self.num_vertices = num_vertices
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        self.size = len(self.edges)
        self._heads = np.array([u for u, _ in self.edges], dtype=np.int64)
        self._tails = np.array([v for _, v in self.edges], dtype=np.int64)

    def _forest(self, mask):
        forest = DisjointSets(self.num_vertices)
        rank = 0
        for index in helpers.iter_bits(mask):
            u, v = self.edges[index]
            if forest.union(u, v):
                rank += 1
        return forest, rank

    def rank(self, mask):
        _, rank = self._forest(mask)
        return rank

    def closure(self, mask):
        if self.size == 0:
            return 0
        forest, _ = self._forest(mask)
        labels = np.array(
            [forest.find(vertex) for vertex in range(self.num_vertices)],
            dtype=np.int64,
        )
        spanned = labels[self._heads] == labels[self._tails]
        return helpers.mask_from(int(i) for i in np.flatnonzero(spanned))


def _row_reduce(vectors, prime):
    """Reduced row echelon form of the rows of ``vectors`` modulo ``prime``.

    Returns:
        Tuple[numpy.ndarray, List[int]]: The non-zero reduced rows and their
        pivot columns.
    """
    rows = np.array(vectors, dtype=np.int64) % prime
    num_rows, num_cols = rows.shape
    pivots = []
    current = 0
    for column in range(num_cols):
        if current == num_rows:
            break
        candidates = np.flatnonzero(rows[current:, column])
        if candidates.size == 0:
            continue
        pick = current + int(candidates[0])
        if pick != current:
            rows[[current, pick]] = rows[[pick, current]]
        inverse = pow(int(rows[current, column]), prime - 2, prime)
        rows[current] = rows[current] * inverse % prime
        factors = rows[:, column].copy()
        factors[current] = 0
        rows = (rows - np.outer(factors, rows[current])) % prime
        pivots.append(column)
        current += 1
    return rows[:current], pivots


class LinearOracle:
    """Rank oracle for the column matroid of a matrix over ``GF(p)``.

    Args:
        matrix (Sequence[Sequence[int]]): Rows of the matrix; the ground set
            is the set of columns.
        prime (int): The field characteristic.

    Raises:
        ValueError: If ``prime`` is not a prime below :math:`2^{31}` or the
            rows have unequal lengths.
    """

    __slots__ = ("prime", "size", "_vectors")

    def __init__(self, matrix, prime):
        if not sympy.isprime(prime) or prime >= _MAX_LINEAR_PRIME:
            raise ValueError("Characteristic must be a small prime", prime)
        rows = [list(row) for row in matrix]
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise ValueError("Ragged matrix rows", sorted(widths))
        self.prime = prime
        if rows:
            self._vectors = np.array(rows, dtype=np.int64).T % prime
        else:
            self._vectors = np.zeros((0, 0), dtype=np.int64)
        self.size = self._vectors.shape[0]

    def rank(self, mask):
        selected = list(helpers.iter_bits(mask))
        if not selected or self._vectors.shape[1] == 0:
            return 0
        _, pivots = _row_reduce(self._vectors[selected], self.prime)
        return len(pivots)

    def closure(self, mask):
        if self.size == 0:
            return 0
        selected = list(helpers.iter_bits(mask))
        residual = self._vectors.copy()
        if selected and self._vectors.shape[1]:
            basis, pivots = _row_reduce(self._vectors[selected], self.prime)
            for row, column in zip(basis, pivots):
                residual = (
                    residual - np.outer(residual[:, column], row)
                ) % self.prime
        spanned = ~np.any(residual, axis=1)
        return helpers.mask_from(int(i) for i in np.flatnonzero(spanned))


class DirectSumOracle:
    """Rank oracle of a direct sum; ``left`` elements come first."""

    __slots__ = ("left", "right", "size", "_left_mask")

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.size = left.size + right.size
        self._left_mask = helpers.full_mask(left.size)

    def rank(self, mask):
        return self.left.rank(mask & self._left_mask) + self.right.rank(
            mask >> self.left.size
        )

    def closure(self, mask):
        left = self.left.closure(mask & self._left_mask)
        right = self.right.closure(mask >> self.left.size)
        return left | (right << self.left.size)


class IntervalOracle:
    """Rank oracle for ``M`` contracted by a flat and restricted to elements.

    The rank of a subset ``S`` is
    :math:`\\operatorname{rk}(S \\cup B) - \\operatorname{rk}(B)` in the
    parent, where ``B`` is the ``bottom`` flat.

    Args:
        parent: The parent rank oracle.
        bottom (int): A flat of the parent, as a parent bit mask.
        elements (Sequence[int]): Parent element indices forming the new
            ground set, in order.
    """

    __slots__ = ("parent", "bottom", "elements", "size", "_bottom_rank")

    def __init__(self, parent, bottom, elements):
        self.parent = parent
        self.bottom = bottom
        self.elements = tuple(elements)
        self.size = len(self.elements)
        self._bottom_rank = parent.rank(bottom)

    def lift(self, mask):
        """Translate a local bit mask into parent coordinates."""
        lifted = 0
        for index in helpers.iter_bits(mask):
            lifted |= 1 << self.elements[index]
        return lifted

    def project(self, parent_mask):
        """Translate a parent bit mask into local coordinates."""
        local = 0
        for index, element in enumerate(self.elements):
            if (parent_mask >> element) & 1:
                local |= 1 << index
        return local

    def rank(self, mask):
        return (
            self.parent.rank(self.lift(mask) | self.bottom) - self._bottom_rank
        )

    def closure(self, mask):
        return self.project(self.parent.closure(self.lift(mask) | self.bottom))


def enumerate_flats(oracle, max_flats):
    """Enumerate all flats, level by level.

    Each flat of rank ``k + 1`` is the closure of a rank ``k`` flat plus one
    element; once a cover ``G`` of ``F`` is found, the elements of ``G`` are
    skipped for ``F``.

    Args:
        oracle: A rank oracle.
        max_flats (int): The flat count cap.

    Returns:
        Tuple[numpy.ndarray, numpy.ndarray]: The flats as ``uint64`` masks,
        sorted by (rank, mask), and their ranks.

    Raises:
        ~matroidkl.hazmat.helpers.ResourceCapExceeded: If more than
            ``max_flats`` flats exist.
    """
    full = helpers.full_mask(oracle.size)
    bottom = oracle.closure(0)
    levels = [[bottom]]
    seen = {bottom}
    while True:
        found = []
        for flat in levels[-1]:
            remaining = full & ~flat
            while remaining:
                element = (remaining & -remaining).bit_length() - 1
                cover = oracle.closure(flat | (1 << element))
                remaining &= ~cover
                if cover in seen:
                    continue
                seen.add(cover)
                found.append(cover)
                if len(seen) > max_flats:
                    raise helpers.ResourceCapExceeded(
                        "flats", max_flats, len(seen)
                    )
        if not found:
            break
        levels.append(sorted(found))

    _LOGGER.debug(
        "Enumerated %d flats over %d ranks", len(seen), len(levels)
    )
    masks = np.array(
        [flat for level in levels for flat in level], dtype=np.uint64
    )
    ranks = np.array(
        [rank for rank, level in enumerate(levels) for _ in level],
        dtype=np.int64,
    )
    return masks, ranks


def rank_offsets(ranks):
    """Start index of every rank level (plus a final sentinel).

    Args:
        ranks (numpy.ndarray): Non-decreasing ranks.

    Returns:
        numpy.ndarray: ``offsets`` with level ``k`` occupying
        ``offsets[k]:offsets[k + 1]``.
    """
    top = int(ranks[-1]) if ranks.size else -1
    return np.searchsorted(ranks, np.arange(top + 2), side="left")


def below(masks, flat):
    """Boolean selector of the flats contained in ``flat``."""
    return (masks & np.uint64(flat)) == masks


def above(masks, flat):
    """Boolean selector of the flats containing ``flat``."""
    value = np.uint64(flat)
    return (masks & value) == value


def mobius_from_bottom(masks, ranks):
    """Möbius values :math:`\\mu(\\hat{0}, F)` for every flat.

    Computed level by level:
    :math:`\\mu(\\hat{0}, F) = -\\sum_{G < F} \\mu(\\hat{0}, G)`.

    Args:
        masks (numpy.ndarray): Flats sorted by rank, bottom first.
        ranks (numpy.ndarray): Their ranks.

    Returns:
        numpy.ndarray: ``int64`` Möbius values.
    """
    offsets = rank_offsets(ranks)
    values = np.zeros(masks.shape, dtype=np.int64)
    if masks.size == 0:
        return values
    values[0] = 1
    for index in range(1, masks.size):
        stop = offsets[ranks[index]]
        selector = below(masks[:stop], int(masks[index]))
        values[index] = -values[:stop][selector].sum()
    return values


def interval_mobius(masks, ranks, lower, upper):
    """Möbius values :math:`\\mu(F, H)` for every ``H`` in ``[F, G]``.

    Args:
        masks (numpy.ndarray): Flats sorted by rank.
        ranks (numpy.ndarray): Their ranks.
        lower (int): Index of ``F``.
        upper (int): Index of ``G``.

    Returns:
        Tuple[numpy.ndarray, numpy.ndarray]: Indices of the interval (sorted
        by rank) and the matching Möbius values; empty if ``F`` is not
        below ``G``.
    """
    low_mask = int(masks[lower])
    high_mask = int(masks[upper])
    if low_mask & high_mask != low_mask:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    selector = above(masks, low_mask) & below(masks, high_mask)
    indices = np.flatnonzero(selector)
    sub_masks = masks[indices]
    sub_ranks = ranks[indices] - ranks[lower]
    return indices, mobius_from_bottom(sub_masks, sub_ranks)


def project_masks(masks, elements):
    """Re-express parent masks over a sub-ground set.

    Args:
        masks (numpy.ndarray): ``uint64`` parent masks.
        elements (Sequence[int]): Parent indices of the new ground set.

    Returns:
        numpy.ndarray: ``uint64`` masks where bit ``j`` is parent bit
        ``elements[j]``.
    """
    projected = np.zeros(masks.shape, dtype=np.uint64)
    for position, element in enumerate(elements):
        bits = (masks >> np.uint64(element)) & _ONE
        projected |= bits << np.uint64(position)
    return projected
