"""Edge-first backtracking decision procedure for H-colorability.

An H-coloring of ``G`` is a pair ``(f, g)``: ``f`` maps edges of ``G`` to edges
of ``H`` as a proper edge-coloring, ``g`` maps vertices of ``G`` to vertices of
``H``, and the colors around every ``u`` are exactly the edges around ``g(u)``.

The search colors one edge per level. The edge chosen is the uncolored one
with the fewest compatible colors (fail-first); ties go to the smallest edge
id and colors are tried in ascending id order, so runs are reproducible.
Color sets are int bitmasks over the edge ids of ``H``.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import Mapping

from .graph import Multigraph


@dataclass(frozen=True)
class HColoringWitness:
    f: tuple[int, ...]  # edge id of G -> edge id of H
    g: tuple[int, ...]  # vertex of G -> vertex of H


@dataclass
class SearchStats:
    nodes: int = 0
    assignments: int = 0
    seconds: float = 0.0


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, stats: SearchStats):
        super().__init__(f"node budget exhausted after {stats.nodes} nodes")
        self.stats = stats


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def degree_prefilter(G: Multigraph, H: Multigraph) -> bool:
    """False when some degree of ``G`` occurs at no vertex of ``H``."""
    return set(G.degrees) <= set(H.degrees)


class HostIndex:
    """Boundary masks of ``H`` plus the cached per-used-set color lookups."""

    def __init__(self, H: Multigraph):
        self.H = H
        self.boundary = H.incidence_masks
        self.owner: dict[int, int] = {}
        for w in range(H.n - 1, -1, -1):
            self.owner[self.boundary[w]] = w
        self._allowed: dict[int, int] = {}

    def allowed(self, used: int) -> int:
        """Colors that can join ``used`` at one vertex.

        A color ``c`` qualifies when it is not in ``used`` and some boundary
        set contains ``used | {c}``.
        """
        a = self._allowed.get(used)
        if a is None:
            a = 0
            for b in self.boundary:
                if used & b == used:
                    a |= b
            a &= ~used
            self._allowed[used] = a
        return a

    def image(self, used: int) -> int | None:
        """Smallest ``w`` whose boundary equals ``used``."""
        return self.owner.get(used)


def _used_masks(G: Multigraph, f: Mapping[int, int]) -> list[int]:
    used = [0] * G.n
    for eid, c in f.items():
        e = G.edges[eid]
        used[e.a] |= 1 << c
        used[e.b] |= 1 << c
    return used


def compatible_colors(G: Multigraph, H: Multigraph, f: Mapping[int, int], e: int) -> set[int]:
    """Colors compatible with the uncolored edge ``e`` under the partial ``f``."""
    if e in f:
        raise ValueError(f"edge {e} is already colored")
    idx = HostIndex(H)
    used = _used_masks(G, f)
    ed = G.edges[e]
    return set(_bits(idx.allowed(used[ed.a]) & idx.allowed(used[ed.b])))


def select_branch_edge(G: Multigraph, H: Multigraph, f: Mapping[int, int]) -> int:
    """Uncolored edge with the fewest compatible colors, smallest id on ties."""
    idx = HostIndex(H)
    used = _used_masks(G, f)
    best, best_count = -1, None
    for ed in G.edges:
        if ed.id in f:
            continue
        cnt = (idx.allowed(used[ed.a]) & idx.allowed(used[ed.b])).bit_count()
        if best_count is None or cnt < best_count:
            best, best_count = ed.id, cnt
    if best < 0:
        raise ValueError("f is already total")
    return best


def candidate_images(G: Multigraph, H: Multigraph, f: Mapping[int, int], v: int) -> set[int]:
    """All ``w`` in ``H`` whose edge set equals the colors around ``v``."""
    if any(eid not in f for eid in G.incidence[v]):
        raise ValueError(f"vertex {v} still has uncolored edges")
    used = _used_masks(G, f)[v]
    return {w for w, b in enumerate(H.incidence_masks) if b == used}


class _EdgeFirstSearch:
    def __init__(self, G: Multigraph, H: Multigraph, node_budget: int | None):
        self.G = G
        self.idx = HostIndex(H)
        self.ends = [(e.a, e.b) for e in G.edges]
        self.color = [-1] * G.m
        self.open = list(range(G.m))  # uncolored edge ids
        self.pos = list(range(G.m))
        self.swaps: list[int] = []
        self.used = [0] * G.n
        self.left = list(G.degrees)
        self.g = [-1] * G.n
        full = self.idx.allowed(0)
        self.allow = [full] * G.n  # allowed(used[v]), kept in step with used
        self.budget = node_budget
        self.stats = SearchStats()

    def run(self) -> bool:
        for v in range(self.G.n):
            if self.left[v] == 0:
                w = self.idx.image(0)
                if w is None:
                    return False
                self.g[v] = w
        return self._rec(self.G.m)

    def _rec(self, uncolored: int) -> bool:
        st = self.stats
        st.nodes += 1
        if self.budget is not None and st.nodes > self.budget:
            raise SearchBudgetExceeded(st)
        if uncolored == 0:
            return True

        allow = self.allow
        used = self.used
        color = self.color
        ends = self.ends
        best, best_mask, best_count = -1, 0, 1 << 30
        for eid in self.open:
            a, b = ends[eid]
            mask = allow[a] & allow[b]
            cnt = mask.bit_count()
            if cnt < best_count or (cnt == best_count and eid < best):
                best, best_mask, best_count = eid, mask, cnt
                if cnt == 0:
                    return False
        self._take(best)

        a, b = self.ends[best]
        left = self.left
        g = self.g
        image = self.idx.image
        allowed = self.idx.allowed
        saved_a, saved_b = allow[a], allow[b]
        for c in _bits(best_mask):
            st.assignments += 1
            bit = 1 << c
            color[best] = c
            used[a] |= bit
            used[b] |= bit
            left[a] -= 1
            left[b] -= 1
            allow[a] = allowed(used[a])
            allow[b] = allowed(used[b])
            ok = True
            for v in (a, b):
                if left[v] == 0:
                    w = image(used[v])
                    if w is None:
                        ok = False
                        break
                    g[v] = w
            if ok and self._rec(uncolored - 1):
                return True
            for v in (a, b):
                if left[v] == 0:
                    g[v] = -1
            left[a] += 1
            left[b] += 1
            used[a] ^= bit
            used[b] ^= bit
            allow[a], allow[b] = saved_a, saved_b
            color[best] = -1
        self._restore(best)
        return False

    def _take(self, eid: int) -> None:
        # swap-remove; _restore undoes it, calls are strictly LIFO
        open_, pos = self.open, self.pos
        i = pos[eid]
        last = open_[-1]
        open_[i] = last
        pos[last] = i
        open_.pop()
        self.swaps.append(i)

    def _restore(self, eid: int) -> None:
        open_, pos = self.open, self.pos
        i = self.swaps.pop()
        if i == len(open_):
            open_.append(eid)
        else:
            moved = open_[i]
            open_.append(moved)
            pos[moved] = len(open_) - 1
            open_[i] = eid
        pos[eid] = i


def _ensure_recursion(depth: int) -> None:
    need = depth + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def solve(
    G: Multigraph, H: Multigraph, node_budget: int | None = None
) -> tuple[HColoringWitness | None, SearchStats]:
    """Decide whether ``G`` is H-colorable, returning a witness if it is.

    Raises :class:`SearchBudgetExceeded` once more than ``node_budget``
    recursion nodes have been visited.
    """
    t0 = time.perf_counter()
    if not degree_prefilter(G, H):
        return None, SearchStats(seconds=time.perf_counter() - t0)
    search = _EdgeFirstSearch(G, H, node_budget)
    _ensure_recursion(G.m)
    try:
        found = search.run()
    finally:
        search.stats.seconds = time.perf_counter() - t0
    if not found:
        return None, search.stats
    return HColoringWitness(tuple(search.color), tuple(search.g)), search.stats


def is_colorable(G: Multigraph, H: Multigraph) -> bool:
    return solve(G, H)[0] is not None
