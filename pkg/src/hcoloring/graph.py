"""Loopless multigraphs, named constructions and connectivity predicates.

Vertices are ``0..n-1`` and every edge carries an integer id equal to its
position in :attr:`Multigraph.edges`. Parallel edges are separate records,
so an edge id (not an endpoint pair) is the unit of identity everywhere in
the package, including colors: a color is an edge id of the host graph.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Raised for graphs that violate the loopless multigraph model."""


class Edge(NamedTuple):
    a: int
    b: int
    id: int

    def other(self, v: int) -> int:
        return self.b if v == self.a else self.a


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        for i, e in enumerate(self.edges):
            if e.id != i:
                raise GraphError(f"edge {i} carries id {e.id}")
            if not (0 <= e.a < self.n and 0 <= e.b < self.n):
                raise GraphError(f"edge {i} = ({e.a}, {e.b}) out of range for n={self.n}")
            if e.a == e.b:
                raise GraphError(f"edge {i} is a loop at vertex {e.a}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Multigraph":
        """Build a graph whose edge ids follow the order of ``pairs``."""
        return cls(n, tuple(Edge(int(a), int(b), i) for i, (a, b) in enumerate(pairs)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """``incidence[u]`` lists the ids of the edges at ``u`` in ascending order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            inc[e.a].append(e.id)
            inc[e.b].append(e.id)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def incidence_masks(self) -> tuple[int, ...]:
        """Bitmask form of :attr:`incidence` (bit ``i`` set for edge ``i``)."""
        return tuple(sum(1 << i for i in ids) for ids in self.incidence)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def pairs(self) -> list[tuple[int, int]]:
        return [(e.a, e.b) for e in self.edges]

    def endpoint_multiset(self) -> list[tuple[int, int]]:
        """Sorted list of normalized endpoint pairs; ignores edge ids."""
        return sorted((min(e.a, e.b), max(e.a, e.b)) for e in self.edges)

    def is_simple(self) -> bool:
        seen = Counter((min(e.a, e.b), max(e.a, e.b)) for e in self.edges)
        return all(c == 1 for c in seen.values())

    def is_regular(self, k: int | None = None) -> bool:
        degs = set(self.degrees)
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return k is None or degs == {k}

    def neighbors(self, v: int) -> list[int]:
        return [self.edges[i].other(v) for i in self.incidence[v]]

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


# --------------------------------------------------------------------------
# named graphs

HOSTS = ("xbar", "ahat", "two_c3", "k1k", "petersen")
BUILTINS = HOSTS + ("tietze", "k4", "k5", "cube", "octahedron")


def complete_graph(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, itertools.combinations(range(n), 2))


def star(k: int) -> Multigraph:
    if k < 1:
        raise ValueError(f"star needs k >= 1, got {k}")
    return Multigraph.from_pairs(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph.from_pairs(10, outer + spokes + inner)


def builtin(name: str, k: int | None = None) -> Multigraph:
    """Return one of the named graphs listed in :data:`BUILTINS`.

    ``xbar``: center 0 joined to leaves 1..4, plus three parallel 1-2 edges.
    ``ahat``: triangle 0,1,2 with 0-2 and 1-2 doubled, pendants 0-3 and 1-4.
    ``two_c3``: the triangle 0,1,2 with every edge doubled.
    ``k1k``: star with ``k`` leaves. ``tietze``: Petersen with vertex 0
    expanded into a triangle.
    """
    name = name.lower().replace("-", "_")
    if name == "2c3":
        name = "two_c3"
    if name == "xbar":
        return Multigraph.from_pairs(
            5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 2), (1, 2)]
        )
    if name == "ahat":
        return Multigraph.from_pairs(
            5, [(0, 1), (0, 2), (0, 2), (1, 2), (1, 2), (0, 3), (1, 4)]
        )
    if name == "two_c3":
        return Multigraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)])
    if name == "k1k":
        if k is None:
            raise ValueError("k1k requires k")
        return star(k)
    if name == "petersen":
        return petersen()
    if name == "tietze":
        return expand_vertex_to_triangle(petersen(), 0)
    if name == "k4":
        return complete_graph(4)
    if name == "k5":
        return complete_graph(5)
    if name == "cube":
        return Multigraph.from_pairs(
            8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
        )
    if name == "octahedron":
        return Multigraph.from_pairs(
            6, [p for p in itertools.combinations(range(6), 2) if p not in ((0, 1), (2, 3), (4, 5))]
        )
    raise ValueError(f"unknown builtin graph {name!r}")


# --------------------------------------------------------------------------
# transforms

def line_graph(G: Multigraph) -> Multigraph:
    """Vertex ``i`` of the result is edge ``i`` of ``G``.

    Two edges are joined once per shared endpoint, so parallel edges of ``G``
    become a parallel pair in the line graph.
    """
    pairs = []
    for v in range(G.n):
        pairs.extend(itertools.combinations(G.incidence[v], 2))
    pairs.sort()
    return Multigraph.from_pairs(G.m, pairs)


def expand_vertex_to_triangle(G: Multigraph, v: int) -> Multigraph:
    """Replace the degree-3 vertex ``v`` by a triangle.

    ``v`` keeps its id and takes the first of its edges; the other two edges
    move to new vertices ``n`` and ``n+1``. Triangle edges get ids ``m..m+2``.
    """
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range")
    inc = G.incidence[v]
    if len(inc) != 3:
        raise GraphError(f"vertex {v} has degree {len(inc)}, expected 3")
    t = (v, G.n, G.n + 1)
    moved = {eid: t[i] for i, eid in enumerate(inc)}
    pairs = []
    for e in G.edges:
        if e.id in moved:
            w = e.other(v)
            pairs.append((moved[e.id], w) if e.a == v else (w, moved[e.id]))
        else:
            pairs.append((e.a, e.b))
    pairs += [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]
    return Multigraph.from_pairs(G.n + 2, pairs)


# --------------------------------------------------------------------------
# connectivity

def is_connected(G: Multigraph) -> bool:
    if G.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in G.neighbors(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.n


def _lowpoints(G: Multigraph):
    """Iterative DFS from vertex 0 returning (disc, low, parent_edge, children).

    The parent is excluded by edge id, so a parallel copy of the tree edge
    counts as a back edge.
    """
    disc = [-1] * G.n
    low = [0] * G.n
    parent_edge = [-1] * G.n
    children = [0] * G.n
    t = 0
    disc[0] = low[0] = t
    stack = [(0, iter(G.incidence[0]))]
    while stack:
        u, it = stack[-1]
        advanced = False
        for eid in it:
            if eid == parent_edge[u]:
                continue
            w = G.edges[eid].other(u)
            if disc[w] == -1:
                t += 1
                disc[w] = low[w] = t
                parent_edge[w] = eid
                children[u] += 1
                stack.append((w, iter(G.incidence[w])))
                advanced = True
                break
            low[u] = min(low[u], disc[w])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
    return disc, low, parent_edge, children


def bridges(G: Multigraph) -> list[int]:
    """Ids of bridge edges of a connected graph."""
    if G.n == 0:
        return []
    disc, low, parent_edge, _ = _lowpoints(G)
    out = []
    for v in range(1, G.n):
        if parent_edge[v] >= 0 and low[v] > disc[G.edges[parent_edge[v]].other(v)]:
            out.append(parent_edge[v])
    return sorted(out)


def cut_vertices(G: Multigraph) -> list[int]:
    """Articulation points of a connected graph."""
    if G.n == 0:
        return []
    disc, low, parent_edge, children = _lowpoints(G)
    cuts = set()
    if children[0] > 1:
        cuts.add(0)
    for v in range(1, G.n):
        if parent_edge[v] < 0:
            continue
        p = G.edges[parent_edge[v]].other(v)
        if p != 0 and low[v] >= disc[p]:
            cuts.add(p)
    return sorted(cuts)


def is_2_edge_connected(G: Multigraph) -> bool:
    return G.n >= 2 and is_connected(G) and not bridges(G)


def is_2_connected(G: Multigraph) -> bool:
    return G.n >= 2 and is_connected(G) and not cut_vertices(G)


def girth(G: Multigraph) -> int | None:
    """Length of a shortest cycle; a parallel pair is a 2-cycle. ``None`` if acyclic."""
    if not G.is_simple():
        return 2
    best = None
    for s in range(G.n):
        dist = {s: 0}
        par = {s: -1}
        queue = [s]
        for u in queue:
            for w in G.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    par[w] = u
                    queue.append(w)
                elif par[u] != w:
                    c = dist[u] + dist[w] + 1
                    if best is None or c < best:
                        best = c
    return best
