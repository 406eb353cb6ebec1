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

"""Matroids given by rank oracles.

Every matroid here is a finite ground set (at most 64 elements) together
with a rank oracle. Matroids built from a named family also remember the
family, which describes their lattice of flats and lets the
Kazhdan-Lusztig engine pick a specialised recursion.

.. doctest:: matroid-intro

   >>> from matroidkl import matroid
   >>> k4 = matroid.complete_graph(4)
   >>> k4
   <Matroid (backing=graphic, size=6, rank=3)>
   >>> k4.family
   Family(kind='complete', params=(4,))
"""

import dataclasses
import functools
import logging
import pathlib
import typing

import numpy as np

from matroidkl import __config__
from matroidkl import lattice as _lattice
from matroidkl.hazmat import flats as _flats
from matroidkl.hazmat import helpers


_LOGGER = logging.getLogger(__name__)
GRAPH_CORPUS = (
    pathlib.Path(__file__).parent / "data" / "graphs_2connected.txt"
)


class Family(typing.NamedTuple):
    """A named matroid family with its parameters.

    Kinds are ``uniform`` ``(m, d)``, ``complete`` ``(n,)``,
    ``thagomizer`` ``(n,)``, ``k2n`` ``(n,)`` and ``dsum`` ``()``.
    """

    kind: str
    params: tuple


class SpecParseError(ValueError):
    """Signal a malformed matroid description string.

    Args:
        message (str): What went wrong.
        text (str): The full text being parsed.
        position (int): Zero based offset of the problem in ``text``.
    """

    def __init__(self, message, text, position):
        super().__init__(message, text, position)
        self.message = message
        self.text = text
        self.position = position

    def __str__(self):
        return f"{self.message} at position {self.position}: {self.text!r}"


class Matroid:
    """A matroid on ``{0, ..., n - 1}`` given by a rank oracle.

    Users are expected to build matroids through :func:`uniform`,
    :func:`graphic`, :func:`linear` and the other constructors rather than
    calling this directly.

    Args:
        oracle: A rank oracle from :mod:`matroidkl.hazmat.flats`.
        labels (Optional[Sequence[str]]): Display labels of the elements.
        family (Optional[Family]): The family describing the lattice.
        parent (Optional[Matroid]): For interval backed matroids, the
            matroid whose lattice contains this one's as an interval.
        parts (Optional[Tuple[Matroid, Matroid]]): Summands of a direct sum.

    Raises:
        ~matroidkl.hazmat.helpers.ResourceCapExceeded: If the ground set is
            larger than the configured cap.
        ValueError: If the number of labels is wrong.
    """

    __slots__ = (
        "_oracle",
        "_labels",
        "_family",
        "_parent",
        "_parts",
        "_lat",
        "_simple",
    )

    def __init__(
        self, oracle, *, labels=None, family=None, parent=None, parts=None
    ):
        helpers.check_ground_size(oracle.size, __config__.limits().max_ground)
        if labels is None:
            labels = tuple(str(index) for index in range(oracle.size))
        labels = tuple(str(label) for label in labels)
        if len(labels) != oracle.size:
            raise ValueError(
                "Expected one label per element", oracle.size, len(labels)
            )
        self._oracle = oracle
        self._labels = labels
        self._family = family
        self._parent = parent
        self._parts = parts
        self._lat = None
        self._simple = None

    @property
    def oracle(self):
        """The rank oracle backing this matroid."""
        return self._oracle

    @property
    def backing(self):
        """str: One of ``uniform``, ``graphic``, ``linear``, ``direct_sum``
        or ``interval``."""
        return _BACKING_NAMES[type(self._oracle)]

    @property
    def size(self):
        """int: The number of ground set elements."""
        return self._oracle.size

    @property
    def labels(self):
        """Tuple[str, ...]: The element labels."""
        return self._labels

    @property
    def family(self):
        """Optional[Family]: The family describing the lattice of flats."""
        return self._family

    @property
    def parts(self):
        """Optional[Tuple[Matroid, Matroid]]: Summands of a direct sum."""
        return self._parts

    @property
    def rank(self):
        """int: The rank of the whole ground set."""
        return self._oracle.rank(self.ground_mask)

    @property
    def ground_mask(self):
        """int: The full ground set as a bit mask."""
        return helpers.full_mask(self._oracle.size)

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} (backing={self.backing}, "
            f"size={self.size:d}, rank={self.rank:d})>"
        )

    def rank_of(self, subset):
        """The rank of a subset, given as a mask or an iterable of indices."""
        return self._oracle.rank(_as_mask(subset, self.size))

    def closure(self, subset):
        """The closure of a subset, as a bit mask."""
        return self._oracle.closure(_as_mask(subset, self.size))

    def is_flat(self, subset):
        """Check if a subset is closed."""
        mask = _as_mask(subset, self.size)
        return self._oracle.closure(mask) == mask

    def loops(self):
        """The loops (the closure of the empty set), as a bit mask."""
        return self._oracle.closure(0)

    def lattice(self):
        """The lattice of flats, built once and cached.

        Interval backed matroids reuse their parent's lattice when it has
        already been built.

        Returns:
            ~matroidkl.lattice.FlatLattice: The lattice.
        """
        if self._lat is None:
            derived = None
            if self._parent is not None and self._parent._lat is not None:
                derived = _derive_interval_lattice(self)
            if derived is None:
                limit = __config__.limits().max_flats
                masks, ranks = _flats.enumerate_flats(self._oracle, limit)
                derived = _lattice.FlatLattice(masks, ranks, self.size)
            self._lat = derived
        return self._lat

    def simplified(self):
        """The simple matroid with the same lattice, built once and cached.

        Returns:
            Matroid: ``self`` when there are no loops or parallel elements.
        """
        if self._simple is None:
            covered = self.loops()
            representatives = []
            for element in range(self.size):
                if not (covered >> element) & 1:
                    covered |= self.closure(1 << element)
                    representatives.append(element)
            if len(representatives) == self.size:
                self._simple = self
            else:
                simple = Matroid(
                    _flats.IntervalOracle(self._oracle, 0, representatives),
                    labels=tuple(self._labels[i] for i in representatives),
                    family=self._family,
                    parent=self,
                )
                simple._simple = simple
                self._simple = simple
        return self._simple


def _as_mask(subset, size):
    if isinstance(subset, (int, np.integer)):
        mask = int(subset)
    else:
        mask = helpers.mask_from(subset)
    if mask < 0 or mask >> size:
        raise ValueError("Subset is not inside the ground set", subset)
    return mask


def rank_and_closure(matroid, subset):
    """The rank of a subset and the smallest flat containing it.

    .. testsetup:: rank-and-closure

       from matroidkl import matroid

    .. doctest:: rank-and-closure

       >>> k4 = matroid.complete_graph(4)
       >>> k4.labels[:3]
       ('0-1', '0-2', '0-3')
       >>> rank, flat = matroid.rank_and_closure(k4, [0, 1])
       >>> rank, bin(flat)
       (2, '0b1011')

    Args:
        matroid (Matroid): The matroid.
        subset (Union[int, Iterable[int]]): A mask or element indices.

    Returns:
        Tuple[int, int]: The rank and the closure as a bit mask.

    Raises:
        ValueError: If ``subset`` is not inside the ground set.
    """
    mask = _as_mask(subset, matroid.size)
    return matroid.oracle.rank(mask), matroid.oracle.closure(mask)


def _derive_interval_lattice(matroid):
    """Cut an interval out of the parent lattice and relabel it."""
    oracle = matroid.oracle
    parent = matroid._parent
    parent_lattice = parent._lat
    parent_oracle = parent.oracle
    lower = parent_oracle.closure(oracle.bottom)
    spanned = oracle.bottom | oracle.lift(matroid.ground_mask)
    upper = parent_oracle.closure(spanned)
    masks = parent_lattice.masks
    ranks = parent_lattice.ranks
    selector = _flats.above(masks, lower) & _flats.below(masks, upper)
    local = _flats.project_masks(masks[selector], oracle.elements)
    if np.unique(local).size != local.size:
        return None
    local_ranks = ranks[selector] - parent_lattice.rank_of(lower)
    order = np.lexsort((local, local_ranks))
    _LOGGER.debug(
        "Derived %d flats from a parent lattice of %d",
        local.size,
        parent_lattice.num_flats,
    )
    return _lattice.FlatLattice(
        local[order], local_ranks[order], matroid.size
    )


_BACKING_NAMES = {
    _flats.UniformOracle: "uniform",
    _flats.GraphicOracle: "graphic",
    _flats.LinearOracle: "linear",
    _flats.DirectSumOracle: "direct_sum",
    _flats.IntervalOracle: "interval",
}


def _check_count(name, value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer", value)


def uniform(m, d):
    """The uniform matroid :math:`U_{m,d}` with ``m + d`` elements, rank ``d``.

    Args:
        m (int): Corank.
        d (int): Rank.

    Returns:
        Matroid: The matroid.

    Raises:
        ValueError: If ``m`` or ``d`` is negative.
    """
    _check_count("m", m)
    _check_count("d", d)
    family = Family("uniform", (m, d))
    return Matroid(_flats.UniformOracle(m, d), family=family)


def graphic(edges, num_vertices=None, *, family=None):
    """The cycle matroid of a multigraph.

    Args:
        edges (Iterable[Tuple[int, int]]): Edges between vertex indices.
        num_vertices (Optional[int]): Defaults to one more than the largest
            vertex index.
        family (Optional[Family]): Family tag for known graphs.

    Returns:
        Matroid: The matroid, one element per edge in the given order.

    Raises:
        ValueError: If an edge is malformed or names a missing vertex.
    """
    clean = []
    for edge in edges:
        try:
            u, v = edge
        except (TypeError, ValueError):
            raise ValueError("Edges must be vertex pairs", edge) from None
        if not all(isinstance(x, (int, np.integer)) for x in (u, v)):
            raise ValueError("Edge endpoints must be integers", edge)
        if u < 0 or v < 0:
            raise ValueError("Edge endpoints must be non-negative", edge)
        clean.append((int(u), int(v)))
    largest = max((max(edge) for edge in clean), default=-1)
    if num_vertices is None:
        num_vertices = largest + 1
    if largest >= num_vertices:
        raise ValueError("Edge names a missing vertex", largest, num_vertices)
    labels = tuple(f"{u}-{v}" for u, v in clean)
    return Matroid(
        _flats.GraphicOracle(num_vertices, clean), labels=labels, family=family
    )


def complete_graph(n):
    """The braid matroid :math:`B_n`, i.e. the cycle matroid of :math:`K_n`."""
    _check_count("n", n)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return graphic(edges, n, family=Family("complete", (n,)))


def _bipartite_edges(n):
    edges = []
    for vertex in range(2, n + 2):
        edges.append((0, vertex))
        edges.append((1, vertex))
    return edges


def thagomizer(n):
    """The thagomizer matroid :math:`T_n`.

    This is :math:`K_{2,n}` with one extra edge joining the two vertices of
    the small side. That distinguished edge is the last element.
    """
    _check_count("n", n)
    edges = _bipartite_edges(n) + [(0, 1)]
    return graphic(edges, n + 2, family=Family("thagomizer", (n,)))


def complete_bipartite(n):
    """The cycle matroid of :math:`K_{2,n}`."""
    _check_count("n", n)
    return graphic(_bipartite_edges(n), n + 2, family=Family("k2n", (n,)))


def linear(matrix, prime):
    """The column matroid of an integer matrix reduced modulo ``prime``.

    Raises:
        ValueError: If ``prime`` is not prime or rows are ragged.
    """
    return Matroid(_flats.LinearOracle(matrix, prime))


def direct_sum(left, right):
    """The direct sum; elements of ``left`` come first."""
    family = None
    if left.family is not None and right.family is not None:
        family = Family("dsum", ())
    return Matroid(
        _flats.DirectSumOracle(left.oracle, right.oracle),
        labels=left.labels + right.labels,
        family=family,
        parts=(left, right),
    )


def _check_flat(matroid, flat):
    mask = _as_mask(flat, matroid.size)
    if not matroid.is_flat(mask):
        raise ValueError("Subset is not a flat", flat)
    return mask


def localization(matroid, flat):
    """The localization :math:`M_F`: the matroid ``M`` restricted to ``F``.

    Its lattice is the interval below ``F``.

    Raises:
        ValueError: If ``flat`` is not a flat.
    """
    mask = _check_flat(matroid, flat)
    elements = tuple(helpers.iter_bits(mask))
    family = None
    if matroid.family is not None and matroid.family.kind == "uniform":
        if mask == matroid.ground_mask:
            family = matroid.family
        else:
            family = Family("uniform", (0, len(elements)))
    return Matroid(
        _flats.IntervalOracle(matroid.oracle, matroid.loops(), elements),
        labels=tuple(matroid.labels[i] for i in elements),
        family=family,
        parent=matroid,
    )


def restriction(matroid, flat):
    """The restriction :math:`M^F`: ``M`` contracted by the flat ``F``.

    Its lattice is the interval above ``F``.

    Raises:
        ValueError: If ``flat`` is not a flat.
    """
    mask = _check_flat(matroid, flat)
    return _contract_flat(matroid, mask, None)


def _contract_flat(matroid, mask, family):
    elements = tuple(helpers.iter_bits(matroid.ground_mask & ~mask))
    if family is None and matroid.family is not None:
        if matroid.family.kind == "uniform":
            m, d = matroid.family.params
            family = Family("uniform", (m, d - matroid.rank_of(mask)))
    return Matroid(
        _flats.IntervalOracle(matroid.oracle, mask, elements),
        labels=tuple(matroid.labels[i] for i in elements),
        family=family,
        parent=matroid,
    )


def _count_triangles(matroid, element):
    """Count rank two flats through ``element`` with at least three atoms."""
    loops = matroid.loops()
    atom = matroid.closure(1 << element)
    lines = set()
    for other in helpers.iter_bits(matroid.ground_mask & ~atom):
        lines.add(matroid.closure(atom | (1 << other)))
    count = 0
    for line in lines:
        rest = line & ~atom
        first = (rest & -rest).bit_length() - 1
        if matroid.closure(1 << first) & ~loops != rest:
            count += 1
    return count


def _is_thagomizer_hub(matroid, element, n):
    """Check if ``element`` is parallel to the distinguished edge.

    Every edge of :math:`T_n` lies on one triangle except the
    distinguished edge, which lies on ``n`` of them. For ``n <= 1`` all
    edges are alike.
    """
    if n <= 1:
        return True
    return _count_triangles(matroid, element) > 1


def contract_element(matroid, element):
    """Contract a single non-loop element.

    The result is the restriction at the rank one flat spanned by
    ``element``. Family tags follow the lattice: contracting an edge of
    :math:`K_n` gives :math:`B_{n-1}`, any edge of :math:`K_{2,n}` gives
    :math:`T_{n-1}`, a non-distinguished edge of :math:`T_n` gives
    :math:`T_{n-1}` and the distinguished edge gives :math:`U_{0,n}`.
    The distinguished edge is found from the triangles through
    ``element``, not from its index, since contraction moves it.

    Raises:
        ValueError: If ``element`` is out of range or a loop.
    """
    if not 0 <= element < matroid.size:
        raise ValueError("Element is not in the ground set", element)
    if matroid.rank_of(1 << element) == 0:
        raise ValueError("Cannot contract a loop", element)
    family = None
    current = matroid.family
    if current is not None:
        if current.kind == "complete":
            family = Family("complete", (current.params[0] - 1,))
        elif current.kind == "k2n":
            family = Family("thagomizer", (current.params[0] - 1,))
        elif current.kind == "thagomizer":
            n = current.params[0]
            if _is_thagomizer_hub(matroid, element, n):
                family = Family("uniform", (0, n))
            else:
                family = Family("thagomizer", (n - 1,))
    return _contract_flat(matroid, matroid.closure(1 << element), family)


def simplify(matroid):
    """Remove loops and keep one element of every parallel class.

    The lattice of flats is unchanged. The first element of each class is
    kept; an already simple matroid is returned as is. The result is
    cached on ``matroid``.
    """
    return matroid.simplified()


def _graph_is_biconnected(num_vertices, edges):
    """Check that a loopless multigraph is 2-connected on its used vertices."""
    used = sorted({vertex for edge in edges for vertex in edge})
    if len(used) <= 2:
        return True

    def connected_without(removed):
        forest = _flats.DisjointSets(num_vertices)
        for u, v in edges:
            if removed not in (u, v):
                forest.union(u, v)
        roots = {forest.find(x) for x in used if x != removed}
        return len(roots) == 1

    if not connected_without(None):
        return False
    return all(connected_without(vertex) for vertex in used)


def _fundamental_circuit_components(matroid):
    size = matroid.size
    basis = 0
    rank = 0
    for element in range(size):
        if matroid.rank_of(basis | (1 << element)) > rank:
            basis |= 1 << element
            rank += 1
    forest = _flats.DisjointSets(size)
    for element in range(size):
        if (basis >> element) & 1:
            continue
        for member in helpers.iter_bits(basis):
            swapped = (basis & ~(1 << member)) | (1 << element)
            if matroid.rank_of(swapped) == rank:
                forest.union(element, member)
    return len({forest.find(element) for element in range(size)})


def is_connected(matroid):
    """Check if a matroid is connected (has no proper separator).

    Graphic matroids are checked through 2-connectivity of the graph, all
    others through fundamental circuits relative to a greedy basis.
    """
    if matroid.size <= 1:
        return True
    if matroid.loops():
        return False
    oracle = matroid.oracle
    if isinstance(oracle, _flats.GraphicOracle):
        return _graph_is_biconnected(oracle.num_vertices, oracle.edges)
    return _fundamental_circuit_components(matroid) == 1


@dataclasses.dataclass(frozen=True)
class MatroidSpec:
    """A parsed matroid description.

    Attributes:
        kind (str): ``uniform``, ``complete``, ``thagomizer``, ``k2n``,
            ``graph``, ``linear`` or ``dsum``.
        params (tuple): Kind specific parameters; edge lists and matrices
            are already loaded, ``dsum`` holds two :class:`MatroidSpec`.
        text (str): The canonical text form.
    """

    kind: str
    params: tuple
    text: str


class _SpecParser:
    def __init__(self, text, base_dir):
        self.text = text
        self.base_dir = base_dir

    def error(self, message, position):
        raise SpecParseError(message, self.text, position)

    def parse(self, start, stop):
        chunk = self.text[start:stop]
        kind, colon, rest = chunk.partition(":")
        if not colon:
            self.error("Expected 'kind:'", start)
        offset = start + len(kind) + 1
        if kind == "uniform":
            m, d = self.integers(rest, offset, 2)
            return MatroidSpec("uniform", (m, d), f"uniform:{m},{d}")
        if kind in ("complete", "thagomizer", "k2n"):
            (n,) = self.integers(rest, offset, 1)
            return MatroidSpec(kind, (n,), f"{kind}:{n}")
        if kind == "graph":
            if not rest:
                self.error("Missing graph path", offset)
            if rest.startswith("@"):
                corpus = bundled_graphs()
                if rest[1:] not in corpus:
                    self.error(f"Unknown bundled graph {rest[1:]!r}", offset)
                edges = corpus[rest[1:]]
                return MatroidSpec("graph", (edges,), f"graph:{rest}")
            edges = load_graph(self.resolve(rest))
            return MatroidSpec("graph", (tuple(edges),), f"graph:{rest}")
        if kind == "linear":
            path, sep, prime_text = rest.rpartition(":")
            if not sep or not path:
                self.error("Expected 'linear:PATH:p'", offset)
            (prime,) = self.integers(prime_text, offset + len(path) + 1, 1)
            matrix = load_matrix(self.resolve(path))
            return MatroidSpec(
                "linear", (tuple(map(tuple, matrix)), prime), f"linear:{rest}"
            )
        if kind == "dsum":
            return self.parse_dsum(offset, stop)
        self.error(f"Unknown matroid kind {kind!r}", start)

    def parse_dsum(self, start, stop):
        left_close = self.matching(start, stop)
        plus = left_close + 1
        if plus >= stop or self.text[plus] != "+":
            self.error("Expected '+' between summands", plus)
        right_close = self.matching(plus + 1, stop)
        if right_close != stop - 1:
            self.error("Trailing characters after summand", right_close + 1)
        left = self.parse(start + 1, left_close)
        right = self.parse(plus + 2, right_close)
        return MatroidSpec(
            "dsum", (left, right), f"dsum:({left.text})+({right.text})"
        )

    def matching(self, start, stop):
        if start >= stop or self.text[start] != "(":
            self.error("Expected '('", start)
        depth = 0
        for position in range(start, stop):
            char = self.text[position]
            if char == "(":
                depth += 1
            elif char == ")":
                depth -= 1
                if depth == 0:
                    return position
        self.error("Unbalanced parentheses", start)

    def integers(self, chunk, offset, count):
        pieces = chunk.split(",")
        if len(pieces) != count:
            self.error(f"Expected {count} integer(s)", offset)
        values = []
        for piece in pieces:
            stripped = piece.strip()
            if not stripped.isdigit():
                self.error(
                    f"Expected a non-negative integer, got {piece!r}", offset
                )
            values.append(int(stripped))
            offset += len(piece) + 1
        return values

    def resolve(self, path):
        candidate = pathlib.Path(path)
        if not candidate.is_absolute() and self.base_dir is not None:
            candidate = pathlib.Path(self.base_dir) / candidate
        return candidate


def parse_matroid_spec(text, base_dir=None):
    """Parse a matroid description such as ``uniform:1,6``.

    The grammar is ``uniform:m,d``, ``complete:n``, ``thagomizer:n``,
    ``k2n:n``, ``graph:PATH``, ``linear:PATH:p`` and
    ``dsum:(SPEC)+(SPEC)``. ``graph:@NAME`` names a graph from
    :func:`bundled_graphs`.

    Args:
        text (str): The description.
        base_dir (Optional[str]): Directory for relative paths.

    Returns:
        MatroidSpec: The parsed description.

    Raises:
        SpecParseError: If the text is malformed.
    """
    text = text.strip()
    return _SpecParser(text, base_dir).parse(0, len(text))


def build_matroid(spec):
    """Construct the matroid described by a :class:`MatroidSpec` or string.

    Raises:
        SpecParseError: If a string description is malformed.
        ValueError: If parameters are invalid.
    """
    if isinstance(spec, str):
        spec = parse_matroid_spec(spec)
    if spec.kind == "uniform":
        return uniform(*spec.params)
    if spec.kind == "complete":
        return complete_graph(*spec.params)
    if spec.kind == "thagomizer":
        return thagomizer(*spec.params)
    if spec.kind == "k2n":
        return complete_bipartite(*spec.params)
    if spec.kind == "graph":
        return graphic(spec.params[0])
    if spec.kind == "linear":
        return linear(*spec.params)
    if spec.kind == "dsum":
        left, right = spec.params
        return direct_sum(build_matroid(left), build_matroid(right))
    raise ValueError("Unknown matroid kind", spec.kind)


def _data_lines(path):
    with open(path, "r") as file_obj:
        for line in file_obj:
            stripped = line.split("#", 1)[0].strip()
            if stripped:
                yield stripped


def load_graph(path):
    """Read an edge list file: one ``u v`` pair per line, ``#`` comments.

    Raises:
        ValueError: If a line is not two non-negative integers.
    """
    edges = []
    for line in _data_lines(path):
        pieces = line.split()
        if len(pieces) != 2 or not all(piece.isdigit() for piece in pieces):
            raise ValueError("Malformed edge line", line)
        edges.append((int(pieces[0]), int(pieces[1])))
    return edges


def load_matrix(path):
    """Read a whitespace separated integer matrix, one row per line.

    Raises:
        ValueError: If an entry is not an integer.
    """
    rows = []
    for line in _data_lines(path):
        try:
            rows.append([int(piece) for piece in line.split()])
        except ValueError:
            raise ValueError("Malformed matrix line", line) from None
    return rows


def load_graph_corpus(path):
    """Read a named graph corpus, one ``NAME u-v u-v ...`` line per graph.

    Returns:
        Dict[str, Tuple[Tuple[int, int], ...]]: Edge lists by name, in file
        order.

    Raises:
        ValueError: If an edge is malformed or a name repeats.
    """
    corpus = {}
    for line in _data_lines(path):
        name, *pieces = line.split()
        if name in corpus:
            raise ValueError("Duplicate graph name", name)
        edges = []
        for piece in pieces:
            ends = piece.split("-")
            if len(ends) != 2 or not all(end.isdigit() for end in ends):
                raise ValueError("Malformed edge", name, piece)
            edges.append((int(ends[0]), int(ends[1])))
        corpus[name] = tuple(edges)
    return corpus


@functools.lru_cache(maxsize=None)
def bundled_graphs():
    """The bundled 2-connected graphs with at most eight edges.

    These are available in descriptions as ``graph:@NAME``.
    """
    return load_graph_corpus(GRAPH_CORPUS)
