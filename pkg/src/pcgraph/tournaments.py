"""Digraph machinery for the degenerate classification pipeline.

A multipartite tournament here has parts of size 1 or 2 and exactly one arc
per cross-part vertex pair.  Two facts drive everything: every vertex of a
strongly connected tournament lies on directed cycles of all lengths from 3
up to the order, and the same holds from length 4 up when 2-parts have
disjoint out-neighborhoods.  Both constructions share one extension engine:
grow a cycle by inserting an outside vertex at a dominance switch, or swap
one cycle vertex for a dominated 2-path; an exhaustive search backstops the
rare configurations the constructive rules might miss (it is logged and
counted, and the test suite asserts it stays cold on small instances).

The bridge to edge-colored graphs: a full compatible vertex-to-color map f
orients each cross-fiber edge toward the endpoint whose f-value it misses,
producing such a tournament; directed cycles of the orientation pull back to
properly colored cycles because consecutive arcs carry distinct f-values.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, Optional, Sequence

from .core import ColoredCompleteGraph
from .cycles import Cycle
from .errors import (
    CycleNotInDigraph,
    FiberTooLarge,
    IncompatibleFunction,
    InternalError,
    NotATournament,
    NotStronglyConnected,
    PreconditionViolated,
)

log = logging.getLogger(__name__)

FALLBACK_KEY = "exhaustive_fallback"


class MultipartiteTournament:
    """Loopless digraph on 0..n-1 with parts of size <= 2 and one arc per cross pair."""

    __slots__ = ("n", "parts", "part_of", "_adj", "_out")

    def __init__(self, parts: Sequence[Iterable[int]], arcs: Iterable[Sequence[int]]):
        parts = tuple(tuple(sorted(p)) for p in parts)
        n = sum(len(p) for p in parts)
        covered = sorted(v for p in parts for v in p)
        if covered != list(range(n)) or n == 0:
            raise PreconditionViolated("parts", "parts must partition 0..n-1")
        if any(len(p) not in (1, 2) for p in parts):
            raise PreconditionViolated("parts", "part sizes must be 1 or 2")
        part_of = [0] * n
        for i, p in enumerate(parts):
            for v in p:
                part_of[v] = i
        adj = [[False] * n for _ in range(n)]
        for a in arcs:
            u, v = a
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise PreconditionViolated("arcs", f"bad arc ({u},{v})")
            if part_of[u] == part_of[v]:
                raise PreconditionViolated("arcs", f"arc inside a part: ({u},{v})")
            if adj[u][v] or adj[v][u]:
                raise PreconditionViolated("arcs", f"two arcs for pair ({u},{v})")
            adj[u][v] = True
        for u in range(n):
            for v in range(u + 1, n):
                if part_of[u] != part_of[v] and not adj[u][v] and not adj[v][u]:
                    raise PreconditionViolated("arcs", f"no arc for pair ({u},{v})")
        self.n = n
        self.parts = parts
        self.part_of = tuple(part_of)
        self._adj = tuple(tuple(r) for r in adj)
        self._out = tuple(
            tuple(v for v in range(n) if adj[u][v]) for u in range(n)
        )

    @classmethod
    def tournament(cls, n: int, arcs: Iterable[Sequence[int]]) -> "MultipartiteTournament":
        """All-singleton special case (an ordinary tournament)."""
        return cls([(v,) for v in range(n)], arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return self._adj[u][v]

    def out_neighbors(self, u: int) -> tuple:
        return self._out[u]

    def arcs(self):
        for u in range(self.n):
            for v in self._out[u]:
                yield (u, v)

    def is_tournament(self) -> bool:
        return all(len(p) == 1 for p in self.parts)

    def two_parts(self) -> list:
        return [p for p in self.parts if len(p) == 2]

    def disjointness_violation(self) -> Optional[tuple]:
        """A triple (x, y, z) with {x,y} a 2-part both dominating z, if any."""
        for p in self.parts:
            if len(p) != 2:
                continue
            x, y = p
            for z in self._out[x]:
                if self._adj[y][z]:
                    return (x, y, z)
        return None

    def to_json_dict(self) -> dict:
        return {"parts": [list(p) for p in self.parts], "arcs": [list(a) for a in self.arcs()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "MultipartiteTournament":
        return cls(data["parts"], data["arcs"])

    def __repr__(self) -> str:
        return f"MultipartiteTournament(n={self.n}, parts={len(self.parts)})"


def is_strongly_connected(t: MultipartiteTournament) -> bool:
    """True iff every ordered vertex pair is joined by a directed path."""
    n = t.n
    if n == 1:
        return True
    adj = t._adj
    for backward in (False, True):
        seen = [False] * n
        seen[0] = True
        stack = [0]
        while stack:
            u = stack.pop()
            for v in range(n):
                if not seen[v] and (adj[v][u] if backward else adj[u][v]):
                    seen[v] = True
                    stack.append(v)
        if not all(seen):
            return False
    return True


def is_directed_cycle(t: MultipartiteTournament, seq: Sequence[int]) -> bool:
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    return all(t.has_arc(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def _rotate_to(cycle: tuple, v: int) -> tuple:
    i = cycle.index(v)
    return cycle[i:] + cycle[:i]


def _extend_cycle(t: MultipartiteTournament, cyc: tuple, v: int) -> Optional[tuple]:
    """One-longer directed cycle through v, or None.

    Tries single-vertex insertion at a dominance switch first, then the
    swap of one non-anchor cycle vertex for a 2-path of outside vertices.
    """
    adj = t._adj
    n = t.n
    inside = set(cyc)
    outside = [w for w in range(n) if w not in inside]
    ln = len(cyc)
    for i in range(ln):
        a = cyc[i]
        b = cyc[(i + 1) % ln]
        row = adj[a]
        for w in outside:
            if row[w] and adj[w][b]:
                return cyc[: i + 1] + (w,) + cyc[i + 1 :]
    for i in range(ln):
        if cyc[i] == v:
            continue
        a = cyc[i - 1]
        b = cyc[(i + 1) % ln]
        row = adj[a]
        for x in outside:
            if not row[x]:
                continue
            adjx = adj[x]
            for z in outside:
                if z != x and adjx[z] and adj[z][b]:
                    return cyc[:i] + (x, z) + cyc[i + 1 :]
    return None


def _cycle_by_search(t: MultipartiteTournament, v: int, length: int) -> Optional[tuple]:
    """Exhaustive DFS for a directed cycle of exactly `length` through v."""
    adj = t._adj
    n = t.n
    path = [v]
    used = [False] * n
    used[v] = True

    def dfs() -> Optional[tuple]:
        if len(path) == length:
            return tuple(path) if adj[path[-1]][v] else None
        last = path[-1]
        row = adj[last]
        for w in range(n):
            if not used[w] and row[w]:
                used[w] = True
                path.append(w)
                got = dfs()
                path.pop()
                used[w] = False
                if got:
                    return got
        return None

    return dfs()


def _grow_all_lengths(
    t: MultipartiteTournament,
    v: int,
    start_cycle: tuple,
    stats: Optional[dict],
) -> Dict[int, tuple]:
    out = {len(start_cycle): start_cycle}
    cur = start_cycle
    for target in range(len(start_cycle) + 1, t.n + 1):
        nxt = _extend_cycle(t, cur, v)
        if nxt is None:
            if stats is not None:
                stats[FALLBACK_KEY] = stats.get(FALLBACK_KEY, 0) + 1
            log.warning("extension rules missed length %d through %d; searching", target, v)
            nxt = _cycle_by_search(t, v, target)
            if nxt is None:
                raise InternalError(
                    f"no directed {target}-cycle through {v} in a digraph that must have one",
                    context={"digraph": t.to_json_dict(), "vertex": v},
                )
        out[target] = nxt
        cur = nxt
    return out


def _triangle_through(t: MultipartiteTournament, v: int) -> Optional[tuple]:
    adj = t._adj
    for a in t.out_neighbors(v):
        for b in t.out_neighbors(a):
            if b != v and adj[b][v]:
                return (v, a, b)
    return None


def cycles_through(t: MultipartiteTournament, v: int) -> Dict[int, tuple]:
    """Directed cycles of every length 3..n through v in a strong tournament."""
    if not t.is_tournament():
        raise NotATournament("input has a part of size 2")
    if t.n < 3:
        raise PreconditionViolated("size", f"need order >= 3, got {t.n}")
    if not is_strongly_connected(t):
        raise NotStronglyConnected("tournament is not strongly connected")
    tri = _triangle_through(t, v)
    if tri is None:
        raise InternalError(
            f"no triangle through {v} in a strong tournament",
            context={"digraph": t.to_json_dict(), "vertex": v},
        )
    return _grow_all_lengths(t, v, tri, None)


def _pair_quadrangle(t: MultipartiteTournament, x: int, y: int) -> tuple:
    """Quadrangle through the 2-part {x, y} using out-neighbor disjointness."""
    vi = t.out_neighbors(x)[0]
    vj = t.out_neighbors(y)[0]
    # disjointness turns both returns around: vi -> y and vj -> x, vi != vj
    return (x, vi, y, vj)


def _quadrangle_through(t: MultipartiteTournament, v: int, stats: Optional[dict]) -> tuple:
    adj = t._adj
    part = t.parts[t.part_of[v]]
    if len(part) == 2:
        x, y = part
        if x != v:
            x, y = y, x
        return _pair_quadrangle(t, x, y)

    twos = t.two_parts()
    if not twos:
        # ordinary tournament: triangle plus one extension step
        tri = _triangle_through(t, v)
        if tri is not None:
            quad = _extend_cycle(t, tri, v)
            if quad is not None:
                return quad
        if stats is not None:
            stats[FALLBACK_KEY] = stats.get(FALLBACK_KEY, 0) + 1
        log.warning("quadrangle construction fell back to search for vertex %d", v)
        quad = _cycle_by_search(t, v, 4)
        if quad is None:
            raise InternalError(
                f"no quadrangle through {v}",
                context={"digraph": t.to_json_dict(), "vertex": v},
            )
        return quad

    pred_in_quad: Dict[int, int] = {}
    for x, y in twos:
        quad = _pair_quadrangle(t, x, y)
        for i, w in enumerate(quad):
            pred_in_quad.setdefault(w, quad[i - 1])
        if v in quad:
            return _rotate_to(quad, v)
        # orient the quadrangle so that v dominates its leading 2-part vertex
        if adj[v][quad[0]]:
            x1, a, y1, b = quad
        else:
            # disjointness forbids both part vertices dominating v, so
            # v -> quad[2] here; rotate the cycle to that vertex
            x1, a, y1, b = quad[2], quad[3], quad[0], quad[1]
        if adj[y1][v]:
            return (v, x1, a, y1)
        if adj[v][b] and adj[a][v]:
            return (v, b, x1, a)
        if adj[v][a] and adj[b][v]:
            return (v, a, y1, b)
        if adj[a][v] and adj[b][v]:
            # a and b sit in different parts (sharing one would break
            # disjointness against v), so the pair carries an arc
            if adj[a][b]:
                return (v, x1, a, b)
            return (v, y1, b, a)
        # v dominates this part and both quadrangle companions; try the next

    # stuck: v dominates every vertex recorded above; ride a return path
    hub = set(pred_in_quad)
    outside = [w for w in range(t.n) if w not in hub and w != v]
    dist = {v: 0}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for w in outside:
                if w not in dist and adj[w][u]:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt

    entries = []
    for z0 in sorted(hub):
        for w in t.out_neighbors(z0):
            if w in dist and w != v:
                entries.append((dist[w], z0, w))
    entries.sort()

    def path_to_v(w: int) -> list:
        path = [w]
        while path[-1] != v:
            cur = path[-1]
            step = next(
                u for u in ([v] + outside) if dist.get(u) == dist[cur] - 1 and adj[cur][u]
            )
            path.append(step)
        return path

    for d, z0, w in entries:
        if d == 2:
            return tuple([z0] + path_to_v(w))
    for d, z0, w in entries:
        if d == 1:
            x = pred_in_quad[z0]
            return (x, z0, w, v)
    for d, z0, w in entries:
        if d >= 3:
            ring = tuple([z0] + path_to_v(w))
            sub = sorted(ring)
            index = {u: i for i, u in enumerate(sub)}
            sub_t = MultipartiteTournament.tournament(
                len(sub),
                [
                    (index[p], index[q])
                    for p in sub
                    for q in sub
                    if p != q and adj[p][q]
                ],
            )
            quad = cycles_through(sub_t, index[v])[4]
            return tuple(sub[i] for i in quad)

    if stats is not None:
        stats[FALLBACK_KEY] = stats.get(FALLBACK_KEY, 0) + 1
    log.warning("quadrangle construction fell back to search for vertex %d", v)
    quad = _cycle_by_search(t, v, 4)
    if quad is None:
        raise InternalError(
            f"no quadrangle through {v}",
            context={"digraph": t.to_json_dict(), "vertex": v},
        )
    return quad


def mpt_cycles_through(
    t: MultipartiteTournament, v: int, stats: Optional[dict] = None
) -> Dict[int, tuple]:
    """Directed cycles of every length 4..|V| through v.

    Preconditions (each reported via PreconditionViolated): at least four
    vertices, strong connectivity, and disjoint out-neighborhoods inside
    every 2-part.
    """
    if t.n < 4:
        raise PreconditionViolated("size", f"need at least 4 vertices, got {t.n}")
    if not is_strongly_connected(t):
        raise PreconditionViolated("connectivity", "digraph is not strongly connected")
    bad = t.disjointness_violation()
    if bad is not None:
        x, y, z = bad
        raise PreconditionViolated(
            "disjointness", f"{z} is dominated by both {x} and {y} of one part"
        )
    quad = _quadrangle_through(t, v, stats)
    if not is_directed_cycle(t, quad) or v not in quad:
        raise InternalError(
            "quadrangle construction produced an invalid cycle",
            context={"digraph": t.to_json_dict(), "vertex": v, "cycle": list(quad)},
        )
    return _grow_all_lengths(t, v, _rotate_to(quad, v), stats)


# -- correspondence with edge-colored graphs ---------------------------

def reduce_degenerate(g: ColoredCompleteGraph, f) -> MultipartiteTournament:
    """Orient g by a full compatible color map f.

    Fibers of f become the parts (size > 2 would force a monochromatic
    triangle and raises FiberTooLarge); each cross-fiber edge uv becomes the
    arc u -> v exactly when its color is f(u) but not f(v).
    """
    n = g.n
    for v in range(n):
        if v not in f:
            raise IncompatibleFunction(f"f is missing vertex {v}")
    fibers: Dict[int, list] = {}
    for v in range(n):
        fibers.setdefault(f[v], []).append(v)
    for value, members in fibers.items():
        if len(members) > 2:
            raise FiberTooLarge(
                f"fiber of color {value} has {len(members)} vertices {members}; "
                "this forces a monochromatic triangle"
            )
    arcs = []
    for u in range(n):
        fu = f[u]
        for v in range(u + 1, n):
            c = g.color(u, v)
            if c != fu and c != f[v]:
                raise IncompatibleFunction(f"edge ({u},{v}) has color {c} not in f values")
            if fu == f[v]:
                continue
            arcs.append((u, v) if c == fu else (v, u))
    parts = sorted(fibers.values(), key=min)
    return MultipartiteTournament(parts, arcs)


def lift_cycle(g: ColoredCompleteGraph, f, cycle: Sequence[int]) -> Cycle:
    """Read a directed cycle of the f-orientation as a properly colored cycle.

    Consecutive arcs u -> v -> w carry colors f(u) != f(v), so the vertex
    sequence is properly colored as-is.  Raises CycleNotInDigraph when any
    consecutive pair is not an arc of the orientation.
    """
    seq = tuple(cycle)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise CycleNotInDigraph(f"{list(seq)} is not a directed cycle")
    for i, u in enumerate(seq):
        v = seq[(i + 1) % len(seq)]
        if not (g.color(u, v) == f[u] != f[v]):
            raise CycleNotInDigraph(f"({u},{v}) is not an arc of the orientation")
    return Cycle(seq)
