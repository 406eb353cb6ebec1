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

"""Lattices of flats.

A :class:`FlatLattice` stores every flat of a matroid as a ``uint64`` bit
mask, sorted by rank. Möbius values from the bottom are computed once;
values on other intervals are computed on demand and memoised.

.. doctest:: lattice-intro

   >>> from matroidkl import matroid
   >>> lattice = matroid.uniform(1, 2).lattice()
   >>> lattice
   <FlatLattice (rank=2, num_flats=5)>
   >>> lattice.characteristic_polynomial()
   <Polynomial (degree=2, coefficients=(2, -3, 1))>
"""

import numpy as np

from matroidkl.hazmat import flats as _flats
from matroidkl.hazmat import polynomial


class FlatLattice:
    """The geometric lattice of flats of a matroid.

    Args:
        masks (numpy.ndarray): The flats as ``uint64`` bit masks, sorted by
            rank then mask. The first entry is the bottom flat and the last
            the top flat.
        ranks (numpy.ndarray): The rank of each flat.
        ground_size (int): The number of ground set elements.

    Raises:
        ValueError: If ``masks`` and ``ranks`` disagree in length or the
            ranks are not sorted.
    """

    __slots__ = (
        "_masks",
        "_ranks",
        "_offsets",
        "_index",
        "_ground_size",
        "_bottom_mobius",
        "_interval_cache",
    )

    def __init__(self, masks, ranks, ground_size):
        masks = np.asarray(masks, dtype=np.uint64)
        ranks = np.asarray(ranks, dtype=np.int64)
        if masks.shape != ranks.shape or masks.ndim != 1 or masks.size == 0:
            raise ValueError("Flats and ranks must be matching 1D arrays")
        if np.any(np.diff(ranks) < 0):
            raise ValueError("Flats must be sorted by rank")
        self._masks = masks
        self._ranks = ranks
        self._offsets = _flats.rank_offsets(ranks)
        self._index = {int(mask): i for i, mask in enumerate(masks)}
        self._ground_size = ground_size
        self._bottom_mobius = None
        self._interval_cache = {}

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} "
            f"(rank={self.rank:d}, num_flats={self.num_flats:d})>"
        )

    @property
    def masks(self):
        """numpy.ndarray: A copy of the flat masks."""
        return self._masks.copy()

    @property
    def ranks(self):
        """numpy.ndarray: A copy of the flat ranks."""
        return self._ranks.copy()

    @property
    def rank(self):
        """int: The rank of the top flat."""
        return int(self._ranks[-1])

    @property
    def num_flats(self):
        """int: The number of flats."""
        return int(self._masks.size)

    @property
    def ground_size(self):
        """int: The size of the ground set."""
        return self._ground_size

    @property
    def bottom(self):
        """int: The bottom flat (the closure of the empty set)."""
        return int(self._masks[0])

    @property
    def top(self):
        """int: The top flat (the whole ground set)."""
        return int(self._masks[-1])

    def index(self, flat):
        """The position of a flat in :attr:`masks`.

        Raises:
            ValueError: If ``flat`` is not a flat of this lattice.
        """
        try:
            return self._index[int(flat)]
        except KeyError:
            raise ValueError("Not a flat of this lattice", flat) from None

    def __contains__(self, flat):
        return int(flat) in self._index

    def rank_of(self, flat):
        """The rank of a flat."""
        return int(self._ranks[self.index(flat)])

    def flats_of_rank(self, rank):
        """All flats of a given rank, as Python integers."""
        if rank < 0 or rank > self.rank:
            return []
        start, stop = self._offsets[rank], self._offsets[rank + 1]
        return [int(mask) for mask in self._masks[start:stop]]

    def atoms(self):
        """The rank one flats above the bottom."""
        return self.flats_of_rank(self.rank_of(self.bottom) + 1)

    def coatoms(self):
        """The flats of rank one below the top."""
        return self.flats_of_rank(self.rank - 1)

    def upper_set(self, flat):
        """Indices of all flats containing ``flat``."""
        start = self._offsets[self.rank_of(flat)]
        selector = _flats.above(self._masks[start:], flat)
        return start + np.flatnonzero(selector)

    def lower_set(self, flat):
        """Indices of all flats contained in ``flat``."""
        stop = self._offsets[self.rank_of(flat) + 1]
        return np.flatnonzero(_flats.below(self._masks[:stop], flat))

    def covers(self, flat):
        """The flats covering ``flat``."""
        rank = self.rank_of(flat)
        if rank == self.rank:
            return []
        start, stop = self._offsets[rank + 1], self._offsets[rank + 2]
        window = self._masks[start:stop]
        return [int(mask) for mask in window[_flats.above(window, flat)]]

    def lower_covers(self, flat):
        """The flats covered by ``flat``."""
        rank = self.rank_of(flat)
        if rank == 0:
            return []
        start, stop = self._offsets[rank - 1], self._offsets[rank]
        window = self._masks[start:stop]
        return [int(mask) for mask in window[_flats.below(window, flat)]]

    def mobius_from_bottom(self):
        """numpy.ndarray: :math:`\\mu(\\hat{0}, F)` for every flat."""
        if self._bottom_mobius is None:
            self._bottom_mobius = _flats.mobius_from_bottom(
                self._masks, self._ranks
            )
        return self._bottom_mobius.copy()

    def mobius(self, lower, upper):
        """The Möbius value :math:`\\mu(F, G)`, memoised.

        Args:
            lower (int): The flat ``F``.
            upper (int): The flat ``G``.

        Returns:
            int: The Möbius value, ``0`` unless ``F`` is below ``G``.
        """
        key = (self.index(lower), self.index(upper))
        if key not in self._interval_cache:
            indices, values = _flats.interval_mobius(
                self._masks, self._ranks, key[0], key[1]
            )
            if indices.size == 0:
                self._interval_cache[key] = 0
            for index, value in zip(indices, values):
                self._interval_cache[(key[0], int(index))] = int(value)
        return self._interval_cache[key]

    def characteristic_polynomial(self):
        """The characteristic polynomial of the lattice.

        .. math::

           \\chi(t) = \\sum_F \\mu(\\hat{0}, F) t^{r - \\operatorname{rk} F}

        Returns:
            ~matroidkl.hazmat.polynomial.Polynomial: The polynomial.
        """
        return self.lower_characteristic_polynomial(self.top)

    def lower_characteristic_polynomial(self, flat):
        """The characteristic polynomial of the interval below ``flat``."""
        mobius = self.mobius_from_bottom()
        rank = self.rank_of(flat)
        indices = self.lower_set(flat)
        coefficients = np.zeros(rank + 1, dtype=np.int64)
        np.add.at(coefficients, rank - self._ranks[indices], mobius[indices])
        return polynomial.Polynomial(int(value) for value in coefficients)

    def interval_characteristic_polynomial(self, lower, upper):
        """The characteristic polynomial of the interval ``[F, G]``.

        Raises:
            ValueError: If ``F`` is not below ``G``.
        """
        low, high = self.index(lower), self.index(upper)
        indices, values = _flats.interval_mobius(
            self._masks, self._ranks, low, high
        )
        if indices.size == 0:
            raise ValueError("Interval is empty", lower, upper)
        for index, value in zip(indices, values):
            self._interval_cache[(low, int(index))] = int(value)
        top_rank = int(self._ranks[high])
        coefficients = np.zeros(top_rank - int(self._ranks[low]) + 1, np.int64)
        np.add.at(coefficients, top_rank - self._ranks[indices], values)
        return polynomial.Polynomial(int(value) for value in coefficients)

    def meet_rank(self, left, right):
        """Rank of the intersection of two flats (itself a flat)."""
        return self.rank_of(int(left) & int(right))

    def join_rank(self, left, right):
        """Rank of the smallest flat containing both flats."""
        union = int(left) | int(right)
        selector = _flats.above(self._masks, union)
        return int(self._ranks[selector].min())


def lattice_of_flats(matroid):
    """Build (or fetch) the lattice of flats of a matroid.

    Args:
        matroid (~matroidkl.matroid.Matroid): The matroid.

    Returns:
        FlatLattice: The lattice, cached on the matroid.

    Raises:
        ~matroidkl.hazmat.helpers.ResourceCapExceeded: If the flat count cap
            is exceeded.
    """
    return matroid.lattice()


def characteristic_polynomial(matroid_or_lattice):
    """The characteristic polynomial of a matroid (or its lattice).

    The value depends only on the lattice of flats; loops and parallel
    elements do not change it.
    """
    lattice = matroid_or_lattice
    if not isinstance(lattice, FlatLattice):
        lattice = lattice.lattice()
    return lattice.characteristic_polynomial()


def interval_characteristic_polynomial(lattice, lower, upper):
    """Module level alias of
    :meth:`FlatLattice.interval_characteristic_polynomial`."""
    return lattice.interval_characteristic_polynomial(lower, upper)


def is_modular_lattice(lattice):
    """Check if a lattice of flats is modular.

    A geometric lattice is upper semimodular, so it is modular exactly when
    it is also lower semimodular: whenever distinct flats ``F`` and ``G``
    are both covered by ``H``, their meet has rank
    :math:`\\operatorname{rk} H - 2`.

    Args:
        lattice (FlatLattice): The lattice.

    Returns:
        bool: Indicating if
        :math:`\\operatorname{rk} F + \\operatorname{rk} G =
        \\operatorname{rk}(F \\vee G) + \\operatorname{rk}(F \\wedge G)`
        for all pairs of flats.
    """
    for rank in range(2, lattice.rank + 1):
        for flat in lattice.flats_of_rank(rank):
            lower = lattice.lower_covers(flat)
            for position, left in enumerate(lower):
                for right in lower[position + 1 :]:
                    if lattice.meet_rank(left, right) != rank - 2:
                        return False
    return True
