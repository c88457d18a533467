"""Face combinatorics of graph associahedra and the CW Euler counts.

The real points of the model compactifications are tiled by copies of
nestohedra: associahedra in type A, graph associahedra of Dynkin graphs in
types B and D.  Faces of a graph associahedron are tubings: collections of
tubes (connected, nonempty, proper node subsets) that are pairwise nested
or disjoint and non-adjacent.  A tubing of k tubes is a face of
codimension k; the empty tubing is the polytope itself.

These enumerations are independent of the generating series in
wondermodels.formulas and serve as its oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .lattice import GuardExceeded

TUBE_NODE_GUARD = 12


@dataclass(frozen=True)
class Graph:
    nodes: tuple[int, ...]
    edges: frozenset[frozenset]

    @classmethod
    def from_edges(cls, nodes, edges) -> "Graph":
        ns = tuple(sorted(nodes))
        es = frozenset(frozenset(e) for e in edges)
        for e in es:
            if len(e) != 2 or not e <= set(ns):
                raise ValueError(f"bad edge {set(e)}")
        return cls(ns, es)

    def neighbors(self, i: int) -> set[int]:
        return {next(iter(e - {i})) for e in self.edges if i in e}

    def is_connected_subset(self, sub: frozenset) -> bool:
        todo, seen = [next(iter(sub))], set()
        while todo:
            x = todo.pop()
            if x in seen:
                continue
            seen.add(x)
            todo.extend(self.neighbors(x) & sub - seen)
        return seen == set(sub)


def dynkin_graph(family: str, n: int) -> Graph:
    """Dynkin diagrams as plain graphs.

    A_n (n >= 3) gives the path on n-1 nodes (the associahedron graph for
    n points); B_n (n >= 1) the path on n nodes; D_n (n >= 4) the path on
    n-2 nodes with two extra nodes forked off its last vertex.
    """
    if family == "A":
        if n < 3:
            raise ValueError("type A needs n >= 3")
        m = n - 1
        return Graph.from_edges(range(1, m + 1), [(i, i + 1) for i in range(1, m)])
    if family == "B":
        if n < 1:
            raise ValueError("type B needs n >= 1")
        return Graph.from_edges(range(1, n + 1), [(i, i + 1) for i in range(1, n)])
    if family == "D":
        if n < 4:
            raise ValueError("type D needs n >= 4")
        edges = [(i, i + 1) for i in range(1, n - 2)]
        edges += [(n - 2, n - 1), (n - 2, n)]
        return Graph.from_edges(range(1, n + 1), edges)
    raise ValueError(f"family must be 'A', 'B' or 'D', got {family!r}")


def enumerate_tubes(graph: Graph) -> list[frozenset]:
    """All tubes (connected nonempty proper node subsets), sorted."""
    if len(graph.nodes) > TUBE_NODE_GUARD:
        raise GuardExceeded(
            f"graph has {len(graph.nodes)} nodes (guard {TUBE_NODE_GUARD})")
    out = []
    nodes = graph.nodes
    for size in range(1, len(nodes)):
        for sub in itertools.combinations(nodes, size):
            fs = frozenset(sub)
            if graph.is_connected_subset(fs):
                out.append(fs)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def _compatible(graph: Graph, a: frozenset, b: frozenset) -> bool:
    if a <= b or b <= a:
        return True
    if a & b:
        return False
    # disjoint tubes must not be adjacent (their union must stay disconnected)
    return not any(graph.neighbors(x) & b for x in a)


def fvector_tubings(graph: Graph) -> list[int]:
    """Face counts by codimension: entry k is the number of tubings with
    exactly k tubes; entry 0 is always 1 (the whole polytope)."""
    tubes = enumerate_tubes(graph)
    nt = len(tubes)
    ok = [0] * nt
    for i, j in itertools.combinations(range(nt), 2):
        if _compatible(graph, tubes[i], tubes[j]):
            ok[i] |= 1 << j
            ok[j] |= 1 << i
    counts: dict[int, int] = {0: 1}

    def dfs(start: int, mask: int, size: int):
        for i in range(start, nt):
            if mask & ~ok[i]:
                continue
            counts[size + 1] = counts.get(size + 1, 0) + 1
            dfs(i + 1, mask | 1 << i, size + 1)

    dfs(0, 0, 0)
    top = max(counts)
    assert top == len(graph.nodes) - 1 or len(graph.nodes) == 1
    fvec = [counts.get(k, 0) for k in range(top + 1)]
    if len(graph.nodes) >= 2:
        # boundary complex of a simple polytope of dimension top: its Euler
        # characteristic is that of a (top-1)-sphere
        chi = sum((-1) ** d * fvec[top - d] for d in range(top))
        assert chi == 1 + (-1) ** (top - 1), f"Euler relation broken: {fvec}"
    return fvec


def count_plane_trees(n: int, s: int) -> int:
    """Plane rooted forests with s internal vertices on n labeled leaves,
    counted by enumerating set partitions of {1..n+s-1} into s parts of
    size >= 2 and ordering each part internally.

    Agrees with (m!/s!) C(m-s-1, s-1) for m = n+s-1 and with
    n! * kirkman_cayley(n, s); kept enumerative to stay an independent check.
    """
    if n < 2 or not 1 <= s <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= s <= n-1, got ({n},{s})")
    m = n + s - 1
    total = 0
    for parts in _partitions_into(list(range(1, m + 1)), s):
        if all(len(p) >= 2 for p in parts):
            prod = 1
            for p in parts:
                prod *= math.factorial(len(p))
            total += prod
    return total


def _partitions_into(items: list[int], k: int):
    """Set partitions of items into exactly k nonempty parts."""
    if k == 1:
        yield [items]
        return
    if len(items) < k:
        return
    first, rest = items[0], items[1:]
    # first goes alone into a new part, or joins any part of a smaller split
    for sub in _partitions_into(rest, k - 1):
        yield [[first]] + sub
    for sub in _partitions_into(rest, k):
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]


EULER_CW_RANGE = {"A": (2, 7), "B": (1, 5), "D": (4, 5)}


def euler_cw(family: str, n: int) -> int:
    """Euler characteristic of the compact real model from its CW structure:
    chambers times one nestohedron, faces alternating by dimension.

    The j-th family of cells has dimension dim-(j-1) and each cell of it is
    shared by 2^j chamber copies.  Chamber counts are n! (A), 2^n n! (B),
    2^(n-1) n! (D); type A face numbers come from the plane-forest count,
    B and D from Dynkin graph tubings.
    """
    if family not in EULER_CW_RANGE:
        raise ValueError(f"family must be one of {sorted(EULER_CW_RANGE)}")
    lo, hi = EULER_CW_RANGE[family]
    if not lo <= n <= hi:
        raise ValueError(f"euler_cw {family} covers {lo} <= n <= {hi}, got {n}")
    if family == "A":
        # plane forests on labeled leaves already count (chamber, face) pairs
        dim = n - 2
        cells = {j: count_plane_trees(n, j) for j in range(1, n)}
    else:
        dim = n - 1
        chambers = 2 ** n * math.factorial(n) if family == "B" \
            else 2 ** (n - 1) * math.factorial(n)
        fvec = fvector_tubings(dynkin_graph(family, n))
        cells = {j: chambers * fvec[j - 1] for j in range(1, len(fvec) + 1)}
    chi = Fraction(0)
    for j, c in cells.items():
        chi += Fraction((-1) ** (dim - (j - 1)) * c, 2 ** j)
    if chi.denominator != 1:
        raise ArithmeticError(f"non-integer Euler characteristic: {chi}")
    return chi.numerator
