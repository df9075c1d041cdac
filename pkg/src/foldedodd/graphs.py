"""Graph construction: Odd graphs, bipartite doubles and the folded double.

Adjacency is stored as one Python int bitset per vertex. Vertices of
``odd_graph(k)`` are the (k-1)-subsets of {0, ..., 2k-2} encoded as
bitmasks and sorted ascending; doubles list every parity-0 vertex first,
then every parity-1 vertex, each block in the base graph's order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .verdict import Verdict

# Distance between vertices in different components. Larger than any vertex
# count we can store densely, and small enough that sums of two stay in int64.
UNREACHABLE = np.iinfo(np.int32).max


@dataclass(frozen=True)
class DoubleOddLabel:
    """A (k-1)-subset as a bitmask plus a parity bit.

    Vertices of the Odd graph itself carry ``parity=None``.
    """

    subset: int
    parity: int | None = None

    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.subset.bit_length()) if self.subset >> i & 1)


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    rows: tuple[int, ...]
    labels: tuple[DoubleOddLabel, ...] | None = None

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} references a vertex >= n")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for w in _bits(row):
                if not self.rows[w] >> u & 1:
                    raise ValueError(f"edge {u}-{w} is not symmetric")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("label count differs from vertex count")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels are not pairwise distinct")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        rows = [0] * n
        for u, w in edges:
            if not (0 <= u < n and 0 <= w < n):
                raise ValueError(f"edge ({u}, {w}) out of range for n={n}")
            if u == w:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << w
            rows[w] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows and self.labels == other.labels

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.rows[u]))

    def has_edge(self, u: int, w: int) -> bool:
        return bool(self.rows[u] >> w & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def regular_degree(self) -> int | None:
        """Common degree, or None when the graph is irregular."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, w) with u < w, sorted lexicographically."""
        return [(u, w) for u in range(self.n) for w in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, w in self.edges():
            a[u, w] = a[w, u] = 1
        return a

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex perm[u] plays the role of vertex u. Labels move too."""
        edges = [(perm[u], perm[w]) for u, w in self.edges()]
        labels = None
        if self.labels is not None:
            moved = [None] * self.n
            for u, lab in enumerate(self.labels):
                moved[perm[u]] = lab
            labels = moved
        return Graph.from_edges(self.n, edges, labels)

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in _bits(self.rows[u]):
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return bfs_layers_bitset(self, 0)[1] == (1 << self.n) - 1


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# --- small reference graphs --------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen_graph() -> Graph:
    return odd_graph(3)


# --- odd graph families ------------------------------------------------------

def _check_k(k: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")


def odd_subsets(k: int) -> list[int]:
    """Bitmasks of the (k-1)-subsets of {0..2k-2}, ascending."""
    _check_k(k)
    return sorted(sum(1 << i for i in c) for c in combinations(range(2 * k - 1), k - 1))


def odd_graph(k: int) -> Graph:
    """O_k: (k-1)-subsets of a (2k-1)-set, adjacent when disjoint."""
    masks = odd_subsets(k)
    n = len(masks)
    assert n == comb(2 * k - 1, k - 1)
    rows = []
    for m in masks:
        row = 0
        for j, m2 in enumerate(masks):
            if m & m2 == 0:
                row |= 1 << j
        rows.append(row)
    return Graph(n, tuple(rows), tuple(DoubleOddLabel(m) for m in masks))


def bipartite_double(g: Graph) -> Graph:
    """(u, i) ~ (w, j) iff u ~ w and i != j. Vertex (u, i) has index u + i*n."""
    n = g.n
    rows = tuple(r << n for r in g.rows) + g.rows
    labels = None
    if g.labels is not None:
        labels = tuple(DoubleOddLabel(lab.subset, p) for p in (0, 1) for lab in g.labels)
    return Graph(2 * n, rows, labels)


def double_odd_graph(k: int) -> Graph:
    """2O_k, the bipartite double of the Odd graph."""
    return bipartite_double(odd_graph(k))


def folded_double_odd(k: int) -> Graph:
    """F(2O_k): 2O_k plus the matching (v, 0) -- (v, 1).

    Edges are added between antipodes rather than antipodes being identified,
    so this is not the usual antipodal quotient despite the name.
    """
    d = double_odd_graph(k)
    half = d.n // 2
    rows = tuple(r | 1 << ((u + half) % d.n) for u, r in enumerate(d.rows))
    return Graph(d.n, rows, d.labels)


def build_family(family: str, k: int) -> Graph:
    builders = {"odd": odd_graph, "double-odd": double_odd_graph, "folded": folded_double_odd}
    try:
        return builders[family](k)
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(builders)}") from None


# --- distances ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DistanceTable:
    dist: np.ndarray
    diameter: int
    connected: bool

    def at_distance(self, u: int, r: int) -> list[int]:
        return [int(w) for w in np.flatnonzero(self.dist[u] == r)]


def bfs_layers_bitset(g: Graph, source: int) -> tuple[list[int], int]:
    """Breadth-first layers from ``source`` as bitsets, plus the visited set."""
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    rows = g.rows
    while True:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        nxt &= ~seen
        if not nxt:
            return layers, seen
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def single_source_distances(g: Graph, source: int) -> list[int]:
    out = [UNREACHABLE] * g.n
    for r, layer in enumerate(bfs_layers_bitset(g, source)[0]):
        for u in _bits(layer):
            out[u] = r
    return out


def all_pairs_distances(g: Graph) -> DistanceTable:
    dist = np.array([single_source_distances(g, s) for s in range(g.n)], dtype=np.int64).reshape(g.n, g.n)
    finite = dist[dist != UNREACHABLE]
    connected = bool(finite.size == g.n * g.n)
    diameter = int(finite.max()) if finite.size else 0
    return DistanceTable(dist, diameter, connected)


# --- antipodes and covers ----------------------------------------------------

class AntipodeError(ValueError):
    def __init__(self, vertex: int, count: int):
        super().__init__(f"vertex {vertex} has {count} vertices at maximum distance, expected 1")
        self.vertex = vertex
        self.count = count


def antipodal_map(g: Graph, dt: DistanceTable | None = None) -> tuple[int, ...]:
    """The involution sending each vertex to its unique vertex at distance = diameter."""
    dt = dt if dt is not None else all_pairs_distances(g)
    if not dt.connected:
        raise ValueError("antipodal map needs a connected graph")
    image = []
    for u in range(g.n):
        far = np.flatnonzero(dt.dist[u] == dt.diameter)
        if len(far) != 1:
            raise AntipodeError(u, len(far))
        image.append(int(far[0]))
    return tuple(image)


def parity_flip(g: Graph) -> tuple[int, ...]:
    """(v, i) -> (v, 1-i) in the double vertex order."""
    half = g.n // 2
    return tuple((u + half) % g.n for u in range(g.n))


def covering_projection(k: int) -> tuple[int, ...]:
    """(v, i) -> v from V(2O_k) onto V(O_k)."""
    n = comb(2 * k - 1, k - 1)
    return tuple(u % n for u in range(2 * n))


def verify_covering_map(g: Graph, h: Graph, f: Sequence[int]) -> Verdict:
    """Check that f: V(g) -> V(h) is a surjective local isomorphism."""
    if len(f) != g.n:
        raise ValueError(f"map has {len(f)} entries, graph has {g.n} vertices")
    if any(not 0 <= x < h.n for x in f):
        raise ValueError("map sends a vertex outside V(h)")
    for u, w in g.edges():
        if not h.has_edge(f[u], f[w]):
            return Verdict(False, "not a homomorphism", {"edge": [u, w], "image": [f[u], f[w]]})
    missing = sorted(set(range(h.n)) - set(f))
    if missing:
        return Verdict(False, "not surjective", {"missing": missing[0]})
    for x in range(g.n):
        images = [f[y] for y in g.neighbors(x)]
        if len(set(images)) != len(images):
            return Verdict(False, "not injective on a neighbourhood", {"vertex": x, "images": sorted(images)})
        if set(images) != set(h.neighbors(f[x])):
            return Verdict(False, "not onto a neighbourhood", {"vertex": x, "images": sorted(images)})
    return Verdict(True, "covering map", {"fibre_sizes": sorted(set(np.bincount(f, minlength=h.n).tolist()))})
