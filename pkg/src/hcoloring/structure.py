"""Exact edge coloring and even cycle decompositions.

Both are exhaustive backtracking searches meant for the small graphs used as
pipeline filters and cross-checks, not for large instances.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterator

from .graph import Multigraph

DEFAULT_ECD_GUARD = 40


class EnumerationRefused(RuntimeError):
    """Graph is larger than the configured enumeration guard."""


# --------------------------------------------------------------------------
# edge coloring

def _degree_first_order(G: Multigraph) -> list[int]:
    """Edges grouped by vertex, visiting vertices by descending degree.

    Each next vertex is the one with the most already-ordered edges, so the
    order stays connected and conflicts surface early.
    """
    order: list[int] = []
    placed = [False] * G.m
    touched = [0] * G.n
    done = [False] * G.n
    for _ in range(G.n):
        v = max(
            (u for u in range(G.n) if not done[u]),
            key=lambda u: (touched[u], G.degree(u), -u),
        )
        done[v] = True
        for eid in G.incidence[v]:
            if not placed[eid]:
                placed[eid] = True
                order.append(eid)
                e = G.edges[eid]
                touched[e.a] += 1
                touched[e.b] += 1
    return order


def is_k_edge_colorable(G: Multigraph, k: int) -> list[int] | None:
    """Return a proper coloring ``color[edge_id] in range(k)`` or ``None``.

    Colors are symmetric, so an edge may open at most one new color index
    beyond those already in use.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if G.m == 0:
        return []
    if G.max_degree() > k:
        return None
    order = _degree_first_order(G)
    color = [-1] * G.m
    used = [0] * G.n

    def rec(i: int, ncolors: int) -> bool:
        if i == len(order):
            return True
        eid = order[i]
        e = G.edges[eid]
        busy = used[e.a] | used[e.b]
        for c in range(min(k, ncolors + 1)):
            bit = 1 << c
            if busy & bit:
                continue
            color[eid] = c
            used[e.a] |= bit
            used[e.b] |= bit
            if rec(i + 1, max(ncolors, c + 1)):
                return True
            used[e.a] ^= bit
            used[e.b] ^= bit
        color[eid] = -1
        return False

    if sys.getrecursionlimit() < G.m + 200:
        sys.setrecursionlimit(G.m + 200)
    return color if rec(0, 0) else None


def chromatic_index(G: Multigraph) -> int:
    if G.m == 0:
        raise ValueError("chromatic index of an edgeless graph is undefined here")
    k = G.max_degree()
    while is_k_edge_colorable(G, k) is None:
        k += 1
    return k


# --------------------------------------------------------------------------
# even cycle decompositions

@dataclass(frozen=True)
class EvenCycleDecomposition:
    """Cycles as edge-id tuples, each starting at its smallest edge id.

    ``colors`` is optional; when present, cycles sharing a vertex differ.
    """

    cycles: tuple[tuple[int, ...], ...]
    colors: tuple[int, ...] | None = None

    def vertex_sets(self, G: Multigraph) -> list[set[int]]:
        return [{v for eid in cyc for v in (G.edges[eid].a, G.edges[eid].b)} for cyc in self.cycles]


def _check_guard(G: Multigraph, guard: int | None) -> None:
    if guard is not None and G.m > guard:
        raise EnumerationRefused(f"graph has {G.m} edges, guard is {guard}")


def _all_even(G: Multigraph) -> bool:
    return all(d % 2 == 0 for d in G.degrees)


def enumerate_even_cycle_decompositions(
    G: Multigraph, guard: int | None = DEFAULT_ECD_GUARD
) -> Iterator[EvenCycleDecomposition]:
    """Yield every partition of E(G) into even simple cycles, once each.

    A new cycle always starts at the smallest unused edge ``(a, b)`` and is
    walked from ``b`` back to ``a``, so every decomposition has exactly one
    derivation.
    """
    _check_guard(G, guard)
    if not _all_even(G):
        return
    free = [True] * G.m
    cycles: list[tuple[int, ...]] = []

    def walk(start: int, x: int, path: list[int], seen: set[int]):
        for eid in G.incidence[x]:
            if not free[eid]:
                continue
            y = G.edges[eid].other(x)
            if y == start:
                if len(path) % 2 == 1:
                    free[eid] = False
                    cycles.append(tuple(path + [eid]))
                    yield from fill()
                    cycles.pop()
                    free[eid] = True
            elif y not in seen:
                free[eid] = False
                path.append(eid)
                seen.add(y)
                yield from walk(start, y, path, seen)
                seen.discard(y)
                path.pop()
                free[eid] = True

    def fill():
        e0 = next((i for i in range(G.m) if free[i]), None)
        if e0 is None:
            yield EvenCycleDecomposition(tuple(cycles))
            return
        a, b = G.edges[e0].a, G.edges[e0].b
        free[e0] = False
        yield from walk(a, b, [e0], {a, b})
        free[e0] = True

    yield from fill()


def _conflicts(sets: list[set[int]]) -> list[list[int]]:
    return [[j for j in range(len(sets)) if j != i and sets[i] & sets[j]] for i in range(len(sets))]


def color_cycles(G: Multigraph, D: EvenCycleDecomposition, k: int) -> list[int] | None:
    """A coloring of D's cycles with ``k`` colors, sharing-vertex cycles distinct."""
    adj = _conflicts(D.vertex_sets(G))
    col = [-1] * len(adj)

    def rec(i: int, ncolors: int) -> bool:
        if i == len(adj):
            return True
        for c in range(min(k, ncolors + 1)):
            if all(col[j] != c for j in adj[i]):
                col[i] = c
                if rec(i + 1, max(ncolors, c + 1)):
                    return True
        col[i] = -1
        return False

    return col if rec(0, 0) else None


def decomposition_size(G: Multigraph, D: EvenCycleDecomposition) -> int:
    """Chromatic number of the graph on D's cycles joined when they meet."""
    if not D.cycles:
        return 0
    k = 1
    while color_cycles(G, D, k) is None:
        k += 1
    return k


def find_ecd_of_size_at_most(
    G: Multigraph, s: int, guard: int | None = DEFAULT_ECD_GUARD
) -> EvenCycleDecomposition | None:
    """A colored decomposition using at most ``s`` colors, or ``None``.

    Each cycle picks its color before it is walked, and the walk only enters
    vertices where that color is still free.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    _check_guard(G, guard)
    if not _all_even(G) or any(d // 2 > s for d in G.degrees):
        return None
    free = [True] * G.m
    at = [0] * G.n  # color bitmask per vertex
    cycles: list[tuple[int, ...]] = []
    colors: list[int] = []

    def walk(start: int, x: int, path: list[int], seen: set[int], bit: int) -> bool:
        for eid in G.incidence[x]:
            if not free[eid]:
                continue
            y = G.edges[eid].other(x)
            if y == start:
                if len(path) % 2 == 1:
                    free[eid] = False
                    cycles.append(tuple(path + [eid]))
                    for v in seen:
                        at[v] |= bit
                    if fill():
                        return True
                    for v in seen:
                        at[v] ^= bit
                    cycles.pop()
                    free[eid] = True
            elif y not in seen and not at[y] & bit:
                free[eid] = False
                path.append(eid)
                seen.add(y)
                if walk(start, y, path, seen, bit):
                    return True
                seen.discard(y)
                path.pop()
                free[eid] = True
        return False

    def fill() -> bool:
        e0 = next((i for i in range(G.m) if free[i]), None)
        if e0 is None:
            return True
        a, b = G.edges[e0].a, G.edges[e0].b
        ncolors = max(colors, default=-1) + 1
        free[e0] = False
        for c in range(min(s, ncolors + 1)):
            bit = 1 << c
            if (at[a] | at[b]) & bit:
                continue
            colors.append(c)
            if walk(a, b, [e0], {a, b}, bit):
                return True
            colors.pop()
        free[e0] = True
        return False

    if sys.getrecursionlimit() < 4 * G.m + 200:
        sys.setrecursionlimit(4 * G.m + 200)
    if not fill():
        return None
    return EvenCycleDecomposition(tuple(cycles), tuple(colors))


def has_ecd_of_size_at_most(
    G: Multigraph, s: int, guard: int | None = DEFAULT_ECD_GUARD
) -> bool:
    return find_ecd_of_size_at_most(G, s, guard) is not None


def has_ecd_of_size_exactly(
    G: Multigraph, s: int, guard: int | None = DEFAULT_ECD_GUARD
) -> bool:
    """Some decomposition has size exactly ``s``; full enumeration, no shortcut."""
    return any(
        decomposition_size(G, D) == s for D in enumerate_even_cycle_decompositions(G, guard)
    )


def validate_decomposition(G: Multigraph, D: EvenCycleDecomposition) -> str | None:
    """Return a description of the first defect, or ``None`` if D is valid."""
    seen: set[int] = set()
    for cyc in D.cycles:
        if len(cyc) % 2:
            return f"odd cycle {cyc}"
        if seen & set(cyc):
            return f"cycle {cyc} reuses an edge"
        seen |= set(cyc)
        deg: dict[int, int] = {}
        for eid in cyc:
            e = G.edges[eid]
            deg[e.a] = deg.get(e.a, 0) + 1
            deg[e.b] = deg.get(e.b, 0) + 1
        if any(d != 2 for d in deg.values()):
            return f"cycle {cyc} is not 2-regular"
        reach = {G.edges[cyc[0]].a}
        grew = True
        while grew:
            grew = False
            for eid in cyc:
                e = G.edges[eid]
                if (e.a in reach) != (e.b in reach):
                    reach |= {e.a, e.b}
                    grew = True
        if reach != set(deg):
            return f"cycle {cyc} is not connected"
    if seen != set(range(G.m)):
        return "cycles do not cover every edge"
    if D.colors is not None:
        sets = D.vertex_sets(G)
        for i, nbrs in enumerate(_conflicts(sets)):
            if any(D.colors[i] == D.colors[j] for j in nbrs):
                return f"cycle {i} shares a vertex with a same-colored cycle"
    return None
