"""Properly colored paths and cycles: predicates, oracles, constructors.

"Properly colored" (PC) means consecutive edges carry distinct colors,
including the wrap-around pair of a cycle.  The enumerator here is the
brute-force oracle the rest of the package is checked against, so it stays
simple: depth-first search pruning only on the previous edge color, with
rotation/reflection deduplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

from .core import ColoredCompleteGraph
from .detect import DegeneracyTag, degeneracy_status, find_monochromatic_triangle
from .errors import (
    BadLength,
    InternalError,
    MonochromaticTrianglePresent,
    PreconditionViolated,
    RepeatedVertex,
    TooSmall,
    UnknownVertex,
    VertexOnCycle,
)


class Cycle:
    """Oriented cycle as a tuple of distinct vertices with navigation helpers."""

    __slots__ = ("vertices", "_pos")

    def __init__(self, vertices: Sequence[int]):
        self.vertices = tuple(vertices)
        if len(self.vertices) < 3:
            raise BadLength(f"cycles need >= 3 vertices, got {len(self.vertices)}")
        if len(set(self.vertices)) != len(self.vertices):
            raise RepeatedVertex(f"repeated vertex in {list(vertices)}")
        self._pos = {v: i for i, v in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._pos

    def __eq__(self, other) -> bool:
        return isinstance(other, Cycle) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Cycle{self.vertices}"

    def succ(self, v: int) -> int:
        return self.vertices[(self._pos[v] + 1) % len(self.vertices)]

    def pred(self, v: int) -> int:
        return self.vertices[self._pos[v] - 1]

    def succ2(self, v: int) -> int:
        return self.succ(self.succ(v))

    def pred2(self, v: int) -> int:
        return self.pred(self.pred(v))

    def segment(self, u: int, v: int) -> tuple:
        """Vertices from u to v inclusive, along the orientation."""
        i, j = self._pos[u], self._pos[v]
        n = len(self.vertices)
        return tuple(self.vertices[(i + k) % n] for k in range(((j - i) % n) + 1))

    def segment_reversed(self, u: int, v: int) -> tuple:
        """Vertices from u to v inclusive, against the orientation."""
        return tuple(reversed(self.segment(v, u)))

    def canonical(self) -> "Cycle":
        """Rotate the smallest vertex first and orient toward its smaller neighbor."""
        vs = self.vertices
        i = vs.index(min(vs))
        rot = vs[i:] + vs[:i]
        if rot[1] > rot[-1]:
            rot = (rot[0],) + tuple(reversed(rot[1:]))
        return Cycle(rot)

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.vertices), "closed": True}


def _check_sequence(g: ColoredCompleteGraph, seq: Sequence[int]) -> tuple:
    out = tuple(seq)
    for v in out:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise UnknownVertex(f"vertex {v!r} not in 0..{g.n - 1}")
    if len(set(out)) != len(out):
        raise RepeatedVertex(f"repeated vertex in {list(out)}")
    return out


def is_pc_cycle(g: ColoredCompleteGraph, seq) -> bool:
    """True iff seq (cyclically) has no two consecutive edges of one color."""
    vs = _check_sequence(g, seq.vertices if isinstance(seq, Cycle) else seq)
    n = len(vs)
    if n < 3:
        return False
    m = g._m
    prev = m[vs[-1]][vs[0]]
    for i in range(n):
        cur = m[vs[i]][vs[(i + 1) % n]]
        if cur == prev:
            return False
        prev = cur
    return True


def is_pc_path(g: ColoredCompleteGraph, seq) -> bool:
    """True iff consecutive edges along the path have distinct colors."""
    vs = _check_sequence(g, seq)
    if len(vs) < 3:
        return True
    m = g._m
    for i in range(len(vs) - 2):
        if m[vs[i]][vs[i + 1]] == m[vs[i + 1]][vs[i + 2]]:
            return False
    return True


def enumerate_pc_cycles(g: ColoredCompleteGraph, v: int, length: int) -> List[Cycle]:
    """All PC cycles of the given length through v, canonical and sorted.

    Rotations and reflections are identified; the search fixes v first and
    keeps the second vertex below the last, so each cycle appears once.
    """
    g.check_vertex(v)
    if not 3 <= length <= g.n:
        raise BadLength(f"length must be in [3, {g.n}], got {length}")
    m = g._m
    n = g.n
    found = []
    path = [v]
    used = [False] * n
    used[v] = True

    def dfs(prev_color: int) -> None:
        if len(path) == length:
            last = path[-1]
            closing = m[last][v]
            if closing != prev_color and closing != m[v][path[1]] and path[1] < last:
                found.append(Cycle(path).canonical())
            return
        last = path[-1]
        row = m[last]
        for w in range(n):
            if not used[w] and row[w] != prev_color:
                used[w] = True
                path.append(w)
                dfs(row[w])
                path.pop()
                used[w] = False

    for first in range(n):
        if first == v:
            continue
        used[first] = True
        path.append(first)
        dfs(m[v][first])
        path.pop()
        used[first] = False
    return sorted(found, key=lambda c: c.vertices)


def has_pc_cycle(g: ColoredCompleteGraph, v: int, length: int) -> Optional[Cycle]:
    """First PC cycle of the given length through v, or None (early exit)."""
    g.check_vertex(v)
    if not 3 <= length <= g.n:
        raise BadLength(f"length must be in [3, {g.n}], got {length}")
    m = g._m
    n = g.n
    path = [v]
    used = [False] * n
    used[v] = True

    def dfs(prev_color: int) -> Optional[Cycle]:
        if len(path) == length:
            closing = m[path[-1]][v]
            if closing != prev_color and closing != m[v][path[1]]:
                return Cycle(path)
            return None
        row = m[path[-1]]
        for w in range(n):
            if not used[w] and row[w] != prev_color:
                used[w] = True
                path.append(w)
                got = dfs(row[w])
                path.pop()
                used[w] = False
                if got is not None:
                    return got
        return None

    for first in range(n):
        if first == v:
            continue
        used[first] = True
        path.append(first)
        got = dfs(m[v][first])
        path.pop()
        used[first] = False
        if got is not None:
            return got
    return None


# -- Hamilton path ------------------------------------------------------

def _pc_path_moves(g: ColoredCompleteGraph, path: tuple) -> list:
    """Same-length variants of a PC path reachable by one endpoint rotation."""
    m = g._m
    out = []
    for seq in (path, tuple(reversed(path))):
        ln = len(seq)
        end = seq[-1]
        row = m[end]
        for i in range(ln - 2):
            # reattach the tail end to seq[i] and flip the tail, making
            # seq[i+1] the new endpoint; interior segment colors survive
            if row[seq[i]] == row[seq[ln - 2]]:
                continue
            if i > 0 and row[seq[i]] == m[seq[i - 1]][seq[i]]:
                continue
            out.append(seq[: i + 1] + (end,) + tuple(reversed(seq[i + 1 : ln - 1])))
    return out


def _try_lengthen(g: ColoredCompleteGraph, path: tuple) -> Optional[tuple]:
    """Extend at an endpoint or insert an unused vertex; None when stuck."""
    m = g._m
    n = g.n
    unused = [w for w in range(n) if w not in set(path)]
    if not unused:
        return None
    head, tail = path[0], path[-1]
    for w in unused:
        if len(path) == 1 or m[tail][w] != m[path[-2]][tail]:
            return path + (w,)
        if len(path) == 1 or m[w][head] != m[head][path[1]]:
            return (w,) + path
    for w in unused:
        roww = m[w]
        for i in range(len(path) - 1):
            a, b = path[i], path[i + 1]
            if roww[a] == roww[b]:
                continue
            if i > 0 and roww[a] == m[path[i - 1]][a]:
                continue
            if i + 2 < len(path) and roww[b] == m[b][path[i + 2]]:
                continue
            return path[: i + 1] + (w,) + path[i + 1 :]
    return None


def _pc_hamilton_path_exhaustive(g: ColoredCompleteGraph) -> Optional[tuple]:
    m = g._m
    n = g.n
    used = [False] * n
    path: list = []

    def dfs() -> Optional[tuple]:
        if len(path) == n:
            return tuple(path)
        for w in range(n):
            if used[w]:
                continue
            if len(path) >= 2 and m[path[-1]][w] == m[path[-2]][path[-1]]:
                continue
            used[w] = True
            path.append(w)
            got = dfs()
            path.pop()
            used[w] = False
            if got is not None:
                return got
        return None

    return dfs()


def pc_hamilton_path(g: ColoredCompleteGraph) -> tuple:
    """A PC path through every vertex of a mono-triangle-free complete graph.

    Greedy growth with endpoint extension and single-vertex insertion,
    endpoint rotations when stuck, exhaustive search as a last resort.  The
    contract says this never fails on valid input; a failure raises
    InternalError and is worth publishing.
    """
    if g.n < 2:
        raise TooSmall(f"need n >= 2, got {g.n}")
    if g.n >= 3:
        tri = find_monochromatic_triangle(g)
        if tri is not None:
            raise MonochromaticTrianglePresent(f"triangle {tri}")
    path = (0,)
    seen_rotations = set()
    while len(path) < g.n:
        longer = _try_lengthen(g, path)
        if longer is not None:
            path = longer
            seen_rotations.clear()
            continue
        progressed = False
        frontier = [path]
        seen_rotations.add(path)
        while frontier and not progressed:
            nxt = []
            for cand in frontier:
                for rot in _pc_path_moves(g, cand):
                    if rot in seen_rotations:
                        continue
                    seen_rotations.add(rot)
                    longer = _try_lengthen(g, rot)
                    if longer is not None:
                        path = longer
                        seen_rotations.clear()
                        progressed = True
                        break
                    nxt.append(rot)
                if progressed:
                    break
            frontier = nxt
        if progressed:
            continue
        full = _pc_hamilton_path_exhaustive(g)
        if full is None:
            raise InternalError(
                "no PC Hamilton path in a mono-triangle-free complete graph",
                instance=g,
            )
        return full
    return path


# -- attachment of an outside vertex to a cycle --------------------------

class AttachmentKind(Enum):
    EXTENDABLE = "extendable"
    SINGLE_COLOR = "single-color"
    ALL_PREDECESSOR = "all-predecessor"
    ALL_SUCCESSOR = "all-successor"


@dataclass(frozen=True)
class AttachmentClass:
    kind: AttachmentKind
    cycle: Optional[Cycle] = None
    color: Optional[int] = None


def insert_into_pc_cycle(g: ColoredCompleteGraph, cycle: Cycle, v: int) -> Optional[Cycle]:
    """PC cycle on V(cycle)+{v} obtained by inserting v between neighbors, or None."""
    m = g._m
    vs = cycle.vertices
    ln = len(vs)
    rowv = m[v]
    for i in range(ln):
        a = vs[i]
        b = vs[(i + 1) % ln]
        ca, cb = rowv[a], rowv[b]
        if ca == cb:
            continue
        if ca == m[vs[i - 1]][a]:
            continue
        if cb == m[b][vs[(i + 2) % ln]]:
            continue
        return Cycle(vs[: i + 1] + (v,) + vs[i + 1 :])
    return None


def _pc_cycle_on_exact_set(g: ColoredCompleteGraph, vertices: tuple) -> Optional[Cycle]:
    """Any PC cycle visiting exactly the given vertices, by ordered search."""
    m = g._m
    first = vertices[0]
    rest = vertices[1:]

    def dfs(path: list, remaining: set, prev_color: int) -> Optional[Cycle]:
        if not remaining:
            closing = m[path[-1]][first]
            if closing != prev_color and closing != m[first][path[1]]:
                return Cycle(path)
            return None
        row = m[path[-1]]
        for w in sorted(remaining):
            if row[w] != prev_color:
                remaining.discard(w)
                path.append(w)
                got = dfs(path, remaining, row[w])
                path.pop()
                remaining.add(w)
                if got is not None:
                    return got
        return None

    for second in rest:
        remaining = set(rest) - {second}
        got = dfs([first, second], remaining, m[first][second])
        if got is not None:
            return got
    return None


def classify_attachment(g: ColoredCompleteGraph, cycle: Cycle, v: int) -> AttachmentClass:
    """How an outside vertex relates to a PC cycle it cannot join.

    Either some PC cycle covers V(cycle)+{v} (returned as EXTENDABLE with a
    witness), or exactly one of three patterns holds: v sees one color on
    the cycle, v copies every vertex's predecessor edge color, or v copies
    every vertex's successor edge color.  Any other outcome on
    mono-triangle-free input is a falsified guarantee.
    """
    if v in cycle:
        raise VertexOnCycle(f"{v} lies on the cycle")
    g.check_vertex(v)
    witness = insert_into_pc_cycle(g, cycle, v)
    if witness is None:
        witness = _pc_cycle_on_exact_set(g, cycle.vertices + (v,))
    if witness is not None:
        return AttachmentClass(AttachmentKind.EXTENDABLE, cycle=witness)
    m = g._m
    rowv = m[v]
    colors = {rowv[u] for u in cycle.vertices}
    if len(colors) == 1:
        return AttachmentClass(
            AttachmentKind.SINGLE_COLOR, color=g.original_color(colors.pop())
        )
    if all(rowv[u] == m[u][cycle.pred(u)] for u in cycle.vertices):
        return AttachmentClass(AttachmentKind.ALL_PREDECESSOR)
    if all(rowv[u] == m[u][cycle.succ(u)] for u in cycle.vertices):
        return AttachmentClass(AttachmentKind.ALL_SUCCESSOR)
    raise InternalError(
        "attachment fits no case of the non-extendable classification",
        instance=g,
        context={"cycle": list(cycle.vertices), "vertex": v},
    )


def pc_quadrangle_search(g: ColoredCompleteGraph, v: int) -> Optional[Cycle]:
    """Direct cubic-time scan for a PC quadrangle through v."""
    m = g._m
    n = g.n
    rowv = m[v]
    others = [u for u in range(n) if u != v]
    for a in others:
        ca = rowv[a]
        rowa = m[a]
        for b in others:
            if b == a or rowa[b] == ca:
                continue
            cab = rowa[b]
            rowb = m[b]
            for c in others:
                if c == a or c == b:
                    continue
                if rowb[c] != cab and rowb[c] != rowv[c] and rowv[c] != ca:
                    return Cycle((v, a, b, c))
    return None


def find_pc_quadrangle(g: ColoredCompleteGraph, v: int) -> Cycle:
    """PC quadrangle through v; guaranteed on non-degenerate mono-triangle-free input."""
    if g.n < 4:
        raise PreconditionViolated("size", f"need n >= 4, got {g.n}")
    g.check_vertex(v)
    tri = find_monochromatic_triangle(g)
    if tri is not None:
        raise PreconditionViolated("mono-triangle-free", f"triangle {tri}")
    if degeneracy_status(g).tag is not DegeneracyTag.NON_DEGENERATE:
        raise PreconditionViolated("non-degenerate", "graph has a degenerate set")
    got = pc_quadrangle_search(g, v)
    if got is None:
        raise InternalError(
            f"no PC quadrangle through {v} despite non-degeneracy", instance=g
        )
    return got


def path_to_json_dict(path: Sequence[int]) -> dict:
    return {"vertices": list(path), "closed": False}
