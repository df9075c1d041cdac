"""Permutations, the parity-flip and subset-permuting automorphisms, and group orders.

Permutations are tuples ``p`` with ``p[x]`` the image of ``x``. Products
act left to right: ``mul(p, q)`` applies p first, then q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .graphs import Graph, odd_subsets, _bits
from .partitions import orbit_partition
from .verdict import Verdict

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[x] for x in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def is_identity(p: Perm) -> bool:
    return all(x == y for x, y in enumerate(p))


def check_perm(p: Sequence[int], n: int | None = None) -> Perm:
    p = tuple(int(x) for x in p)
    if n is not None and len(p) != n:
        raise ValueError(f"permutation has degree {len(p)}, expected {n}")
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation")
    return p


@dataclass
class PermGroup:
    degree: int
    generators: list[Perm]
    order: int
    chain: "StabilizerChain | None" = field(default=None, repr=False)

    def __contains__(self, p) -> bool:
        if self.chain is None:
            self.chain = StabilizerChain(self.degree, self.generators)
        return self.chain.contains(tuple(p))

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [list(g) for g in self.generators], "order": str(self.order)}


class NotAnAutomorphism(ValueError):
    def __init__(self, index: int, verdict: Verdict):
        super().__init__(f"generator {index} is not an automorphism: {verdict.evidence}")
        self.index = index
        self.verdict = verdict


def is_automorphism(g: Graph, p: Sequence[int]) -> Verdict:
    """u ~ w  iff  p(u) ~ p(w), for every pair."""
    p = check_perm(p, g.n)
    for u in range(g.n):
        image_row = 0
        for w in _bits(g.rows[u]):
            image_row |= 1 << p[w]
        diff = image_row ^ g.rows[p[u]]
        if diff:
            bad = (diff & -diff).bit_length() - 1
            w = p.index(bad)
            return Verdict(False, "adjacency not preserved",
                           {"pair": [u, w], "adjacent": g.has_edge(u, w),
                            "image": [p[u], bad], "image_adjacent": g.has_edge(p[u], bad)})
    return Verdict(True, "automorphism")


# --- the claimed generators on V(2O_k) ---------------------------------------

def theta_generator(k: int) -> Perm:
    """(v, i) -> (v, 1 - i)."""
    half = comb(2 * k - 1, k - 1)
    return tuple((u + half) % (2 * half) for u in range(2 * half))


def sigma_generator(sigma: Sequence[int], k: int) -> Perm:
    """(v, i) -> (sigma(v), i) for a permutation ``sigma`` of {0..2k-2}."""
    sigma = check_perm(sigma, 2 * k - 1)
    masks = odd_subsets(k)
    index = {m: j for j, m in enumerate(masks)}
    half = len(masks)
    moved = []
    for m in masks:
        image = 0
        for x in _bits(m):
            image |= 1 << sigma[x]
        moved.append(index[image])
    return tuple(moved) + tuple(j + half for j in moved)


def symmetric_group_generators(m: int) -> list[Perm]:
    """A transposition and an m-cycle."""
    if m < 2:
        return []
    swap = (1, 0) + tuple(range(2, m))
    cycle = tuple(range(1, m)) + (0,)
    return [swap, cycle] if m > 2 else [swap]


def claimed_generators(k: int) -> list[Perm]:
    """theta together with f_sigma for sigma running over generators of Sym(2k-1)."""
    return [theta_generator(k)] + [sigma_generator(s, k) for s in symmetric_group_generators(2 * k - 1)]


def vertex_stabilizer_generators(k: int, vertex: int) -> list[Perm]:
    """f_sigma for sigma generating Sym(v) x Sym(complement of v), where
    ``vertex`` = (v, i). Its orbits are the distance classes of 2O_k around it."""
    masks = odd_subsets(k)
    v = masks[vertex % len(masks)]
    inside = [x for x in range(2 * k - 1) if v >> x & 1]
    outside = [x for x in range(2 * k - 1) if not v >> x & 1]
    gens = []
    for block in (inside, outside):
        for a, b in zip(block, block[1:]):
            s = list(range(2 * k - 1))
            s[a], s[b] = b, a
            gens.append(sigma_generator(s, k))
    return gens or [identity(2 * len(masks))]


# --- stabilizer chains -------------------------------------------------------

class StabilizerChain:
    """Deterministic Schreier-Sims.

    New base points are the smallest point moved by the generator that forces
    them. ``transversals[i]`` maps each point of the i-th basic orbit to a
    group element sending ``base[i]`` there.
    """

    def __init__(self, degree: int, gens: Sequence[Sequence[int]]):
        self.degree = degree
        gens = [check_perm(g, degree) for g in gens]
        self.base: list[int] = []
        self.strong: list[list[Perm]] = []
        self.transversals: list[dict[int, Perm]] = []
        for g in gens:
            if is_identity(g):
                continue
            if all(g[b] == b for b in self.base):
                self._append_level(_first_moved(g))
            self.strong[0].append(g)
        for i in range(len(self.base)):
            self.strong[i] = [g for g in self.strong[0] if all(g[b] == b for b in self.base[:i])]
            self._orbit(i)
        self._complete()

    def _append_level(self, point: int) -> None:
        self.base.append(point)
        self.strong.append([])
        self.transversals.append({point: identity(self.degree)})

    def _orbit(self, i: int) -> None:
        b = self.base[i]
        trans = {b: identity(self.degree)}
        queue = [b]
        for x in queue:
            for s in self.strong[i]:
                y = s[x]
                if y not in trans:
                    trans[y] = mul(trans[x], s)
                    queue.append(y)
        self.transversals[i] = trans

    def strip(self, g: Perm) -> tuple[Perm, int]:
        for i, b in enumerate(self.base):
            beta = g[b]
            u = self.transversals[i].get(beta)
            if u is None:
                return g, i
            g = mul(g, inverse(u))
        return g, len(self.base)

    def _complete(self) -> None:
        i = len(self.base) - 1
        while i >= 0:
            restart = False
            trans = self.transversals[i]
            for beta, u in list(trans.items()):
                for s in self.strong[i]:
                    h = mul(mul(u, s), inverse(trans[s[beta]]))
                    if is_identity(h):
                        continue
                    y, j = self.strip(h)
                    if j < len(self.base) or not is_identity(y):
                        if j == len(self.base):
                            self._append_level(_first_moved(y))
                        for level in range(i + 1, j + 1):
                            self.strong[level].append(y)
                            self._orbit(level)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    @property
    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def contains(self, g: Perm) -> bool:
        if len(g) != self.degree:
            return False
        y, j = self.strip(g)
        return j == len(self.base) and is_identity(y)


def _first_moved(g: Perm) -> int:
    return next(x for x, y in enumerate(g) if x != y)


def group_order(gens: Sequence[Sequence[int]], degree: int | None = None) -> int:
    """Exact order of the group generated by ``gens``."""
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("need a degree when no generators are given")
        degree = len(gens[0])
    return StabilizerChain(degree, gens).order


def generated_group(gens: Sequence[Sequence[int]], degree: int | None = None) -> PermGroup:
    gens = [tuple(g) for g in gens]
    degree = degree if degree is not None else len(gens[0])
    chain = StabilizerChain(degree, gens)
    return PermGroup(degree, gens, chain.order, chain)


def is_vertex_transitive(g: Graph, gens: Sequence[Sequence[int]]) -> Verdict:
    """Single orbit under the generated group. Raises NotAnAutomorphism first if
    some generator does not preserve adjacency."""
    for idx, p in enumerate(gens):
        ok = is_automorphism(g, p)
        if not ok:
            raise NotAnAutomorphism(idx, ok)
    orbits = orbit_partition(g.n, gens) if gens else orbit_partition(g.n, [identity(g.n)])
    ok = orbits.cell_count == 1
    return Verdict(ok, "single orbit" if ok else "several orbits", {"orbit_sizes": orbits.sizes()})
