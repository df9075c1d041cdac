"""Independent reference computations used only by the tests."""

from itertools import combinations

import networkx as nx
import sympy

from foldedodd.graphs import Graph


def odd_graph_from_sets(k):
    """O_k from frozensets of {1..2k-1}, vertices ordered by their bitmask."""
    ground = range(1, 2 * k)
    subsets = [frozenset(c) for c in combinations(ground, k - 1)]
    subsets.sort(key=lambda s: sum(1 << (x - 1) for x in s))
    edges = {(i, j) for i, a in enumerate(subsets) for j, b in enumerate(subsets) if i < j and not a & b}
    return subsets, edges


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def count_automorphisms(g: Graph) -> int:
    h = to_nx(g)
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())


def closure_order(gens, degree):
    """Enumerate the whole group. Fine for a few thousand elements."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = tuple(s[x] for x in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def sympy_order(gens):
    from sympy.combinatorics import Permutation, PermutationGroup
    return int(PermutationGroup([Permutation(list(g)) for g in gens]).order())


def sympy_charpoly(rows):
    x = sympy.symbols("x")
    return [int(c) for c in sympy.Matrix(rows).charpoly(x).all_coeffs()[::-1]]


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def brute_covering_check(g, h, f):
    """Surjective local isomorphism, checked neighbourhood by neighbourhood."""
    if set(f) != set(range(h.n)):
        return False
    for x in range(g.n):
        nb = g.neighbors(x)
        if any(not h.has_edge(f[x], f[y]) for y in nb):
            return False
        if sorted(f[y] for y in nb) != sorted(h.neighbors(f[x])):
            return False
    return True
