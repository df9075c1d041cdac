"""Full automorphism groups of small graphs by individualisation and refinement.

Colour refinement splits cells by neighbour counts into every current cell
until the colouring is equitable. Along a fixed base path, each level adds
coset representatives for the stabiliser of the earlier base points, and the
order is the product of the basic orbit lengths. Orbits already covered by
known generators are skipped; everything else is searched exhaustively, so
a candidate is rejected only when no automorphism exists.
"""

from __future__ import annotations

import numpy as np

from .graphs import Graph
from .symmetry import PermGroup, StabilizerChain, is_automorphism, identity
from .verdict import CapacityError

DEFAULT_MAX_N = 70


class _Refiner:
    def __init__(self, g: Graph):
        self.n = g.n
        self.adj = g.adjacency_matrix()

    def refine(self, colours: np.ndarray) -> tuple[np.ndarray, tuple] | None:
        """Equitable refinement of ``colours`` and a trace that is invariant under
        isomorphism. New colour order depends only on (old colour, counts)."""
        trace = []
        count = int(colours.max()) + 1
        while True:
            onehot = np.zeros((self.n, count), dtype=np.int64)
            onehot[np.arange(self.n), colours] = 1
            counts = self.adj @ onehot
            keys = np.concatenate([colours[:, None], counts], axis=1)
            uniq, new = np.unique(keys, axis=0, return_inverse=True)
            new = new.reshape(-1)
            sizes = np.bincount(new)
            trace.append((uniq.tobytes(), sizes.tobytes()))
            if len(uniq) == count:
                return new, tuple(trace)
            colours, count = new, len(uniq)

    def individualise(self, colours: np.ndarray, v: int) -> np.ndarray:
        # v becomes its own colour, placed just before the rest of its old cell
        out = colours * 2 + 1
        out[v] -= 1
        return np.unique(out, return_inverse=True)[1].reshape(-1)


def _target_cell(colours: np.ndarray) -> np.ndarray | None:
    sizes = np.bincount(colours)
    big = np.flatnonzero(sizes > 1)
    if big.size == 0:
        return None
    return np.flatnonzero(colours == big[0])


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.refiner = _Refiner(g)
        self.nodes = 0

    def step(self, colours, v):
        return self.refiner.refine(self.refiner.individualise(colours, v))

    def extend(self, left, right) -> tuple[int, ...] | None:
        """An automorphism mapping colour classes of ``left`` onto those of
        ``right``, or None. Both colourings must be equitable with equal traces."""
        self.nodes += 1
        cell = _target_cell(left)
        if cell is None:
            order = np.argsort(right)
            perm = tuple(int(order[c]) for c in left)
            return perm if is_automorphism(self.g, perm) else None
        v = int(cell[0])
        l_col, l_trace = self.step(left, v)
        for w in np.flatnonzero(right == left[v]):
            r_col, r_trace = self.step(right, int(w))
            if r_trace != l_trace:
                continue
            found = self.extend(l_col, r_col)
            if found is not None:
                return found
        return None


def _orbit(point: int, gens: list[tuple[int, ...]]) -> set[int]:
    seen = {point}
    queue = [point]
    for x in queue:
        for s in gens:
            if s[x] not in seen:
                seen.add(s[x])
                queue.append(s[x])
    return seen


def full_automorphism_group(g: Graph, max_n: int = DEFAULT_MAX_N) -> PermGroup:
    """Generators and exact order of Aut(g).

    The order is the product of basic orbit lengths along the search base; it
    is cross-checked against a Schreier-Sims chain built from the generators
    in the found order and in reverse.
    """
    if g.n > max_n:
        raise CapacityError(f"automorphism search limited to n <= {max_n}, graph has n = {g.n}")
    if g.n == 0:
        return PermGroup(0, [], 1)
    search = _Search(g)
    start, _ = search.refiner.refine(np.zeros(g.n, dtype=np.int64))
    levels = []
    colours = start
    while (cell := _target_cell(colours)) is not None:
        v = int(cell[0])
        levels.append((colours, cell, v))
        colours, _ = search.step(colours, v)

    gens: list[tuple[int, ...]] = []
    order = 1
    for colours, cell, v in reversed(levels):
        orbit = _orbit(v, gens)
        l_col, l_trace = search.step(colours, v)
        for w in cell:
            w = int(w)
            if w in orbit:
                continue
            r_col, r_trace = search.step(colours, w)
            if r_trace != l_trace:
                continue
            perm = search.extend(l_col, r_col)
            if perm is not None:
                gens.append(perm)
                orbit = _orbit(v, gens)
        order *= len(orbit)

    for p in gens:
        assert is_automorphism(g, p), "search produced a non-automorphism"
    forward = StabilizerChain(g.n, gens)
    backward = StabilizerChain(g.n, gens[::-1])
    if not forward.order == backward.order == order:
        raise AssertionError(f"inconsistent orders: search {order}, chains {forward.order}, {backward.order}")
    return PermGroup(g.n, gens or [identity(g.n)], order, forward)
