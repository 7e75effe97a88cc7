"""Independent checks of H-colorability.

Three routes that share nothing with the edge-first search except the graph
type: a witness checker, a vertex-first backtracking decision procedure, and
an exhaustive oracle for tiny inputs.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Sequence

from .graph import Multigraph
from .solver import HColoringWitness, SearchBudgetExceeded, SearchStats, _ensure_recursion


class WitnessInputError(ValueError):
    """The mappings are malformed (wrong length or values out of range)."""


class OracleRefused(RuntimeError):
    """Input exceeds the brute-force size guard."""


@dataclass(frozen=True)
class WitnessCheck:
    ok: bool
    reason: str = ""
    vertex: int | None = None
    edges: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(
    G: Multigraph, H: Multigraph, f: Sequence[int], g: Sequence[int]
) -> WitnessCheck:
    """Check that ``(f, g)`` is an H-coloring of ``G``.

    Returns a falsy :class:`WitnessCheck` naming the first offending edge pair
    or vertex. Raises :class:`WitnessInputError` if ``f`` or ``g`` is not a
    total map into ``E(H)`` / ``V(H)``.
    """
    if len(f) != G.m:
        raise WitnessInputError(f"f has {len(f)} entries, G has {G.m} edges")
    if len(g) != G.n:
        raise WitnessInputError(f"g has {len(g)} entries, G has {G.n} vertices")
    for i, c in enumerate(f):
        if not (isinstance(c, int) and 0 <= c < H.m):
            raise WitnessInputError(f"f({i}) = {c!r} is not an edge of H")
    for v, w in enumerate(g):
        if not (isinstance(w, int) and 0 <= w < H.n):
            raise WitnessInputError(f"g({v}) = {w!r} is not a vertex of H")

    for u in range(G.n):
        seen: dict[int, int] = {}
        for eid in G.incidence[u]:
            if f[eid] in seen:
                return WitnessCheck(False, "adjacent edges share a color", u, (seen[f[eid]], eid))
            seen[f[eid]] = eid
    for u in range(G.n):
        if {f[eid] for eid in G.incidence[u]} != set(H.incidence[g[u]]):
            return WitnessCheck(False, "colors at vertex differ from edges at its image", u)
    return WitnessCheck(True)


def identity_witness(H: Multigraph) -> HColoringWitness:
    return HColoringWitness(tuple(range(H.m)), tuple(range(H.n)))


# --------------------------------------------------------------------------
# vertex-first search

class _VertexFirstSearch:
    def __init__(self, G: Multigraph, H: Multigraph, node_budget: int | None):
        self.G = G
        self.H = H
        self.hbound = H.incidence_masks
        self.hdeg = H.degrees
        self.gdeg = G.degrees
        self.other = [{e.id: e.other(v) for e in G.edges if v in (e.a, e.b)} for v in range(G.n)]
        self.color = [-1] * G.m
        self.used = [0] * G.n
        self.ncolored = [0] * G.n
        self.g = [-1] * G.n
        self.budget = node_budget
        self.stats = SearchStats()
        self._images: dict[int, dict[int, tuple[int, ...]]] = {d: {} for d in set(G.degrees)}

    def images(self, deg: int, here: int) -> tuple[int, ...]:
        """Vertices of degree ``deg`` whose edge set contains the colors ``here``."""
        table = self._images[deg]
        out = table.get(here)
        if out is None:
            out = table[here] = tuple(
                w for w, b in enumerate(self.hbound) if self.hdeg[w] == deg and here & b == here
            )
        return out

    def _rec(self, remaining: int) -> bool:
        st = self.stats
        st.nodes += 1
        if self.budget is not None and st.nodes > self.budget:
            raise SearchBudgetExceeded(st)
        if remaining == 0:
            return True
        g = self.g
        ncolored = self.ncolored
        used = self.used
        gdeg = self.gdeg
        tables = self._images
        # fewest consistent images, then most colored edges, then smallest id
        v, best = -1, None
        for u in range(self.G.n):
            if g[u] >= 0:
                continue
            fits = tables[gdeg[u]].get(used[u])
            if fits is None:
                fits = self.images(gdeg[u], used[u])
            key = (len(fits), -ncolored[u])
            if best is None or key < best:
                v, best = u, key
        here = used[v]
        open_edges = [eid for eid in self.G.incidence[v] if self.color[eid] < 0]
        for w in self.images(self.gdeg[v], here):
            g[v] = w
            if self._extend(v, open_edges, 0, self.hbound[w] & ~here, remaining):
                return True
            g[v] = -1
        return False

    def _extend(self, v: int, open_edges: list[int], i: int, free: int, remaining: int) -> bool:
        """Color ``open_edges[i:]`` with distinct colors from ``free``, then recurse."""
        if i == len(open_edges):
            return self._rec(remaining - 1)
        eid = open_edges[i]
        other = self.other[v][eid]
        used = self.used
        g = self.g
        mask = free & ~used[other]
        if g[other] >= 0:
            mask &= self.hbound[g[other]]
        images = self._images[self.gdeg[other]]
        while mask:
            low = mask & -mask
            mask ^= low
            self.stats.assignments += 1
            after = used[other] | low
            # an unmapped neighbour must still admit some image
            if g[other] < 0:
                fits = images.get(after)
                if fits is None:
                    fits = self.images(self.gdeg[other], after)
                if not fits:
                    continue
            self.color[eid] = low.bit_length() - 1
            used[v] |= low
            used[other] = after
            self.ncolored[v] += 1
            self.ncolored[other] += 1
            if self._extend(v, open_edges, i + 1, free ^ low, remaining):
                return True
            self.ncolored[v] -= 1
            self.ncolored[other] -= 1
            used[other] ^= low
            used[v] ^= low
            self.color[eid] = -1
        return False


def solve_vertex_first(
    G: Multigraph, H: Multigraph, node_budget: int | None = None
) -> tuple[HColoringWitness | None, SearchStats]:
    """Decide H-colorability by fixing one vertex image at a time.

    At each step the unmapped vertex with the most colored edges (smallest id
    on ties) is mapped to every ``w`` of matching degree whose edge set holds
    its current colors; the remaining edges at the vertex then take the
    unused colors of ``w`` in every order that keeps the coloring proper.
    """
    t0 = time.perf_counter()
    search = _VertexFirstSearch(G, H, node_budget)
    _ensure_recursion(2 * G.m + G.n)
    try:
        found = search._rec(G.n)
    finally:
        search.stats.seconds = time.perf_counter() - t0
    if not found:
        return None, search.stats
    return HColoringWitness(tuple(search.color), tuple(search.g)), search.stats


# --------------------------------------------------------------------------
# brute-force oracle

def brute_force_colorable(
    G: Multigraph, H: Multigraph, max_edges: int = 10, max_vertices: int = 8
) -> bool:
    """Exhaustive check over vertex images and per-vertex bijections.

    Vertices are taken in id order; for each, every degree-matching image and
    every bijection from its edges onto the image's edges is tried, and an
    assignment survives only if each edge gets the same color from both ends.
    """
    if G.m > max_edges or G.n > max_vertices:
        raise OracleRefused(f"oracle limited to n<={max_vertices}, m<={max_edges}; got n={G.n}, m={G.m}")
    options = []
    for u in range(G.n):
        opts = []
        for w in range(H.n):
            if H.degree(w) != G.degree(u):
                continue
            for perm in itertools.permutations(H.incidence[w]):
                opts.append(dict(zip(G.incidence[u], perm)))
        if not opts:
            return False
        options.append(opts)

    f: dict[int, int] = {}

    def place(u: int) -> bool:
        if u == G.n:
            return True
        for choice in options[u]:
            if any(f.get(e, c) != c for e, c in choice.items()):
                continue
            added = [e for e in choice if e not in f]
            f.update((e, choice[e]) for e in added)
            if place(u + 1):
                return True
            for e in added:
                del f[e]
        return False

    return place(0)
