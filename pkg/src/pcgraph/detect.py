"""Triangle detectors and degeneracy analysis for edge-colored complete graphs.

A vertex set S with a function f on S is *degenerate-compatible* when every
edge inside S takes the f-color of one endpoint and every edge leaving S
takes the f-color of its S endpoint.  Such a proper S seals itself off from
properly colored cycles, so detecting one (or ruling all of them out) is the
first step of the trichotomy classifier.

Search strategy: in a complete graph a vertex of a proper degenerate set has
its f-value forced to its unique outward color, so propagating from every
(vertex, incident color) seed finds a proper set whenever one exists.  The
remaining full-set case reduces to 2-SAT over (vertex, incident color)
choices.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .core import ColoredCompleteGraph
from .errors import NotAPartition, TooSmall


def find_monochromatic_triangle(g: ColoredCompleteGraph) -> Optional[tuple]:
    """Lexicographically first (u, v, w) whose three edges share a color."""
    n = g.n
    if n < 3:
        raise TooSmall(f"triangles need n >= 3, got {n}")
    m = g._m
    for u in range(n - 2):
        row_u = m[u]
        for v in range(u + 1, n - 1):
            c = row_u[v]
            row_v = m[v]
            for w in range(v + 1, n):
                if row_u[w] == c and row_v[w] == c:
                    return (u, v, w)
    return None


def find_pc_triangle(g: ColoredCompleteGraph) -> Optional[tuple]:
    """Lexicographically first (u, v, w) whose three edge colors are pairwise distinct."""
    n = g.n
    if n < 3:
        raise TooSmall(f"triangles need n >= 3, got {n}")
    m = g._m
    for u in range(n - 2):
        row_u = m[u]
        for v in range(u + 1, n - 1):
            c = row_u[v]
            row_v = m[v]
            for w in range(v + 1, n):
                a, b = row_u[w], row_v[w]
                if a != c and b != c and a != b:
                    return (u, v, w)
    return None


@dataclass(frozen=True)
class DegeneracyCertificate:
    """Vertex set S plus f mapping S-vertices to original color ids."""

    S: frozenset
    f: Mapping

    def check(self, g: ColoredCompleteGraph) -> bool:
        """Edge-by-edge validation of both compatibility clauses."""
        if not self.S or not set(self.f) == set(self.S):
            return False
        inside = self.S
        for u in inside:
            fu = self.f[u]
            for v in range(g.n):
                if v == u:
                    continue
                c = g.color(u, v)
                if v in inside:
                    if c != fu and c != self.f[v]:
                        return False
                elif c != fu:
                    return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "S": sorted(self.S),
            "f": {str(v): self.f[v] for v in sorted(self.S)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


class DegeneracyTag(enum.Enum):
    NON_DEGENERATE = "non-degenerate"
    PROPER_SET = "proper-degenerate-set"
    FULL_ONLY = "degenerate-full-only"


@dataclass(frozen=True)
class DegeneracyStatus:
    tag: DegeneracyTag
    certificate: Optional[DegeneracyCertificate]


def _closure_dense(m: tuple, n: int, u: int, c: int):
    """Minimal compatible set containing u with value c, or None on conflict.

    Forcing rule: any edge wx with x outside the set and color != f(w)
    pulls x in with f(x) = color(w, x); an already-fixed conflicting value
    kills the closure.  Colors are dense indices here.
    """
    f = {u: c}
    stack = [u]
    while stack:
        w = stack.pop()
        fw = f[w]
        row = m[w]
        for x in range(n):
            if x == w:
                continue
            col = row[x]
            if col == fw:
                continue
            fx = f.get(x)
            if fx is None:
                f[x] = col
                stack.append(x)
            elif fx != col:
                return None
    return f


def closure_from_seed(g: ColoredCompleteGraph, u: int, c: int) -> Optional[DegeneracyCertificate]:
    """Propagate the forcing rule from f(u)=c; None when it conflicts.

    The result, when present, is the unique minimal degenerate set
    containing u with that seed value.  c is an original color id (a color
    absent from the palette simply forces every other vertex in).
    """
    if g.n < 2:
        raise TooSmall(f"closure needs n >= 2, got {g.n}")
    g.check_vertex(u)
    dense = g._rank.get(c, -1)
    f = _closure_dense(g._m, g.n, u, dense)
    if f is None:
        return None
    pal = g._palette
    return DegeneracyCertificate(
        frozenset(f),
        {v: (c if v == u else pal[d]) for v, d in f.items()},
    )


class _TwoSat:
    """Implication-graph 2-SAT; literal 2i is var i true, 2i+1 is false."""

    def __init__(self, nvars: int):
        self.n = nvars
        self.adj = [[] for _ in range(2 * nvars)]

    def add_or(self, a: int, b: int) -> None:
        # clause (a or b): ~a -> b, ~b -> a
        self.adj[a ^ 1].append(b)
        self.adj[b ^ 1].append(a)

    def solve(self) -> Optional[list]:
        order = []
        comp = [-1] * (2 * self.n)
        visited = [False] * (2 * self.n)
        for start in range(2 * self.n):
            if visited[start]:
                continue
            stack = [(start, 0)]
            visited[start] = True
            while stack:
                node, idx = stack[-1]
                if idx < len(self.adj[node]):
                    stack[-1] = (node, idx + 1)
                    nxt = self.adj[node][idx]
                    if not visited[nxt]:
                        visited[nxt] = True
                        stack.append((nxt, 0))
                else:
                    order.append(node)
                    stack.pop()
        radj = [[] for _ in range(2 * self.n)]
        for a in range(2 * self.n):
            for b in self.adj[a]:
                radj[b].append(a)
        label = 0
        for start in reversed(order):
            if comp[start] != -1:
                continue
            stack = [start]
            comp[start] = label
            while stack:
                node = stack.pop()
                for nxt in radj[node]:
                    if comp[nxt] == -1:
                        comp[nxt] = label
                        stack.append(nxt)
            label += 1
        out = []
        for v in range(self.n):
            if comp[2 * v] == comp[2 * v + 1]:
                return None
            # components are labeled in source-first topological order, so a
            # literal is satisfiable as true when its component comes later
            out.append(comp[2 * v] > comp[2 * v + 1])
        return out


def _full_assignment_via_twosat(g: ColoredCompleteGraph) -> Optional[dict]:
    """Full compatible f (dense colors) via 2-SAT, or None.

    Variables are (vertex, incident color) picks with pairwise at-most-one
    per vertex; each edge contributes the clause "one endpoint picked the
    edge color".  Vertices the solution leaves unassigned get an arbitrary
    incident color: every edge at such a vertex is already satisfied from
    the other side.
    """
    n, m = g.n, g._m
    incident = []
    for u in range(n):
        row = m[u]
        incident.append(sorted({row[v] for v in range(n) if v != u}))
    var_of = {}
    for u in range(n):
        for c in incident[u]:
            var_of[(u, c)] = len(var_of)
    sat = _TwoSat(len(var_of))
    for u in range(n):
        cs = incident[u]
        for i in range(len(cs)):
            vi = var_of[(u, cs[i])]
            for j in range(i + 1, len(cs)):
                vj = var_of[(u, cs[j])]
                sat.add_or(2 * vi + 1, 2 * vj + 1)
    for u in range(n):
        row = m[u]
        for v in range(u + 1, n):
            c = row[v]
            sat.add_or(2 * var_of[(u, c)], 2 * var_of[(v, c)])
    model = sat.solve()
    if model is None:
        return None
    f = {}
    for (u, c), idx in var_of.items():
        if model[idx]:
            f[u] = c
    for u in range(n):
        if u not in f:
            f[u] = incident[u][0]
    return f


def degeneracy_status(g: ColoredCompleteGraph) -> DegeneracyStatus:
    """Classify g as proper-degenerate, degenerate-full-only, or non-degenerate.

    Seeds are tried in (vertex, color) lexicographic order and the first
    proper closure wins, so results are deterministic.  When no proper set
    exists, a 2-SAT pass decides whether some f covers the whole vertex set.
    """
    n = g.n
    if n < 2:
        raise TooSmall(f"degeneracy needs n >= 2, got {n}")
    m = g._m
    pal = g._palette
    full_dense = None
    for u in range(n):
        row = m[u]
        for c in sorted({row[v] for v in range(n) if v != u}):
            f = _closure_dense(m, n, u, c)
            if f is None:
                continue
            if len(f) < n:
                cert = DegeneracyCertificate(
                    frozenset(f), {v: pal[d] for v, d in f.items()}
                )
                return DegeneracyStatus(DegeneracyTag.PROPER_SET, cert)
            if full_dense is None:
                full_dense = f
    if full_dense is None:
        full_dense = _full_assignment_via_twosat(g)
    if full_dense is not None:
        cert = DegeneracyCertificate(
            frozenset(range(n)), {v: pal[d] for v, d in full_dense.items()}
        )
        return DegeneracyStatus(DegeneracyTag.FULL_ONLY, cert)
    return DegeneracyStatus(DegeneracyTag.NON_DEGENERATE, None)


def verify_gallai_partition(g: ColoredCompleteGraph, parts: Sequence) -> bool:
    """True iff every cross-part pair is monochromatic and at most two colors cross.

    Raises NotAPartition unless parts are >= 2 nonempty disjoint sets
    covering the vertices exactly.
    """
    sets = [set(p) for p in parts]
    if len(sets) < 2 or any(not s for s in sets):
        raise NotAPartition("need at least two nonempty parts")
    union = set()
    total = 0
    for s in sets:
        total += len(s)
        union |= s
    if union != set(range(g.n)) or total != g.n:
        raise NotAPartition("parts must cover each vertex exactly once")
    m = g._m
    crossing = set()
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            colors = {m[u][v] for u in sets[i] for v in sets[j]}
            if len(colors) != 1:
                return False
            crossing |= colors
    return len(crossing) <= 2
