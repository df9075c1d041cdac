"""Vertex partitions, equitability and quotient matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exact import IntMatrix, Spectrum, char_poly, integer_roots, integral_spectrum, nullity_at
from .graphs import Graph, bfs_layers_bitset, _bits
from .verdict import Refutation, Verdict


@dataclass(frozen=True)
class Partition:
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(sorted(c)) for c in self.cells)
        if any(not c for c in cells):
            raise ValueError("empty cell")
        flat = [v for c in cells for v in c]
        if len(flat) != len(set(flat)) or sorted(flat) != list(range(len(flat))):
            raise ValueError("cells must be disjoint and cover 0..n-1")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_cell_of(cls, cell_of: Sequence[int]) -> "Partition":
        count = max(cell_of, default=-1) + 1
        cells = [[] for _ in range(count)]
        for v, c in enumerate(cell_of):
            cells[c].append(v)
        return cls(tuple(tuple(c) for c in cells))

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple((v,) for v in range(n)))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    @property
    def cell_of(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i, c in enumerate(self.cells):
            for v in c:
                out[v] = i
        return tuple(out)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def as_set_partition(self) -> frozenset[frozenset[int]]:
        """Order-free view, for comparing partitions that index cells differently."""
        return frozenset(frozenset(c) for c in self.cells)

    def singleton_cells(self) -> list[int]:
        return [i for i, c in enumerate(self.cells) if len(c) == 1]

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in self.cells]}


def distance_partition(g: Graph, v: int) -> Partition:
    """Cell r holds the vertices at distance r from v."""
    layers, seen = bfs_layers_bitset(g, v)
    if seen != (1 << g.n) - 1:
        raise ValueError("distance partition needs a connected graph")
    return Partition(tuple(tuple(_bits(layer)) for layer in layers))


def orbit_partition(n: int, gens: Sequence[Sequence[int]]) -> Partition:
    """Orbits of the group generated by ``gens``; cells ordered by their least vertex."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if len(g) != n or sorted(g) != list(range(n)):
            raise ValueError("generator is not a permutation of 0..n-1")
        for x, y in enumerate(g):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return Partition(tuple(tuple(groups[r]) for r in sorted(groups)))


def neighbour_counts(g: Graph, p: Partition) -> np.ndarray:
    """counts[u, j] = number of neighbours of u in cell j."""
    onehot = np.zeros((g.n, p.cell_count), dtype=np.int64)
    onehot[np.arange(g.n), p.cell_of] = 1
    return g.adjacency_matrix() @ onehot


def is_equitable(g: Graph, p: Partition) -> IntMatrix | Refutation:
    """Quotient matrix b_ij if p is equitable, else a Refutation naming two vertices
    of cell i with different neighbour counts into cell j."""
    if p.n != g.n:
        raise ValueError("partition and graph have different vertex counts")
    counts = neighbour_counts(g, p)
    b = []
    for i, cell in enumerate(p.cells):
        block = counts[list(cell)]
        bad = np.flatnonzero((block != block[0]).any(axis=0))
        if bad.size:
            j = int(bad[0])
            row = int(np.flatnonzero(block[:, j] != block[0, j])[0])
            u, u2 = cell[0], cell[row]
            return Refutation(
                "partition is not equitable",
                {"i": i, "j": j, "u": u, "u_prime": u2,
                 "count_u": int(counts[u, j]), "count_u_prime": int(counts[u2, j])},
            )
        b.append(block[0].tolist())
    return IntMatrix.of(b)


def root_bound(q: IntMatrix) -> int:
    # every eigenvalue lies inside some Gershgorin disc
    return max((sum(abs(x) for x in row) for row in q.rows), default=0)


def quotient_spectrum_subset_check(g: Graph, q, spectrum: Spectrum | None = None) -> Verdict:
    """Every integer root of the quotient's characteristic polynomial is an
    adjacency eigenvalue of g. Non-integer roots are only counted.

    Multiplicities come from ``spectrum`` when given, else from exact nullities.
    """
    q = IntMatrix.of(q)
    roots = integer_roots(char_poly(q), root_bound(q))
    if spectrum is not None:
        known = spectrum.as_dict()
        found = [[lam, mult, known.get(lam, 0)] for lam, mult in roots.pairs]
    else:
        adj = g.adjacency_matrix()
        found = [[lam, mult, nullity_at(adj, lam)] for lam, mult in roots.pairs]
    missing = [r for r, _, null in found if null == 0]
    evidence = {"roots": found, "quotient_residual_degree": roots.residual}
    if missing:
        return Verdict(False, "quotient root is not an adjacency eigenvalue", {**evidence, "missing": missing})
    return Verdict(True, "quotient roots are adjacency eigenvalues", evidence)


def singleton_cell_full_spectrum_check(
    g: Graph,
    p: Partition,
    witnesses: Sequence[Sequence[int]],
    spectrum: Spectrum | None = None,
) -> Verdict:
    """For an orbit partition with a singleton cell: every eigenvalue of g is a
    root of the quotient, and in fact the two integer eigenvalue sets coincide.

    The orbit partition of ``witnesses`` is recomputed and must equal ``p``;
    each witness must be an automorphism of g.
    """
    from .symmetry import is_automorphism

    for idx, w in enumerate(witnesses):
        ok = is_automorphism(g, w)
        if not ok:
            return Verdict(False, "witness is not an automorphism", {"generator": idx, **ok.evidence})
    orbits = orbit_partition(g.n, witnesses)
    if orbits.as_set_partition() != p.as_set_partition():
        return Verdict(False, "partition is not the orbit partition of the witnesses",
                       {"orbit_sizes": orbits.sizes(), "partition_sizes": p.sizes()})
    if not p.singleton_cells():
        return Verdict(False, "partition has no singleton cell", {"partition_sizes": p.sizes()})
    q = is_equitable(g, p)
    if not q:
        return Verdict(False, q.reason, q.witness)
    roots = integer_roots(char_poly(q), root_bound(q))
    spec = spectrum if spectrum is not None else integral_spectrum(g)
    evidence = {
        "graph_eigenvalues": list(spec.eigenvalues),
        "graph_residual": spec.residual,
        "quotient_roots": list(roots.eigenvalues),
        "quotient_residual_degree": roots.residual,
    }
    if spec.residual:
        return Verdict(False, "graph has non-integer eigenvalues", evidence)
    if set(spec.eigenvalues) != set(roots.eigenvalues):
        return Verdict(False, "eigenvalue sets differ", evidence)
    return Verdict(True, "graph eigenvalues coincide with quotient roots", evidence)
