"""Instance generators: named examples, random families, exhaustive streams.

Every generator asserts its advertised structural contract with the
corresponding detector before an instance leaves this module, and every
random family is a pure function of its integer seed, so failures are
reproducible from the reported seed alone.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .core import ColoredCompleteGraph, build, canonical_key
from .detect import find_monochromatic_triangle, find_pc_triangle, verify_gallai_partition
from .errors import (
    BadPartition,
    BudgetExhausted,
    PreconditionViolated,
    TooLarge,
    TooSmall,
)

FAMILIES = (
    "doublePentagon",
    "directedExample",
    "randomNoMono",
    "randomDegenerate",
    "gallai",
    "exhaustive",
)


@dataclass(frozen=True)
class GenSpec:
    """Fully determines a generated instance stream."""

    family: str
    n: int = 0
    k: int = 0
    seed: int = 0
    count: int = 1


def double_pentagon_matrix() -> tuple:
    """Dense color matrix of the canonical two-pentagon K5.

    Color index 0 rings 0-1-2-3-4-0; color index 1 covers the chords, which
    also form a pentagon (0-2-4-1-3-0).
    """
    ring = {(i, (i + 1) % 5) for i in range(5)}
    rows = []
    for u in range(5):
        rows.append(
            tuple(
                -1 if u == v else (0 if (u, v) in ring or (v, u) in ring else 1)
                for v in range(5)
            )
        )
    return tuple(rows)


def example_k5_double_pentagon() -> ColoredCompleteGraph:
    """The unique mono-triangle-free 2-coloring of K5: two edge-disjoint pentagons."""
    dense = double_pentagon_matrix()
    g = build(5, [(u, v, dense[u][v] + 1) for u in range(5) for v in range(u + 1, 5)])
    assert find_monochromatic_triangle(g) is None
    return g


def example_directed(n: int) -> ColoredCompleteGraph:
    """Three mutually rainbow vertices whose spokes each carry one fixed color.

    Vertices 0,1,2 pairwise use colors 1,2,3; every edge from vertex i to
    the rest carries color i+1; the interior is rainbow on fresh colors, so
    no monochromatic triangle can arise anywhere.  {0,1,2} is then a proper
    degenerate set and its spokes lie on no PC cycle.
    """
    if n < 6:
        raise TooSmall(f"this family needs n >= 6, got {n}")
    edges = [(0, 1, 1), (1, 2, 2), (0, 2, 3)]
    for i, c in ((0, 1), (1, 2), (2, 3)):
        for u in range(3, n):
            edges.append((i, u, c))
    fresh = itertools.count(4)
    for u in range(3, n):
        for v in range(u + 1, n):
            edges.append((u, v, next(fresh)))
    g = build(n, edges)
    assert find_monochromatic_triangle(g) is None
    return g


def _triangles(n: int) -> List[tuple]:
    return list(itertools.combinations(range(n), 3))


def random_no_mono_triangle(
    n: int, k: int, seed: int, budget: int = 3000
) -> ColoredCompleteGraph:
    """Random k-coloring repaired until no monochromatic triangle remains.

    Raises BudgetExhausted (reporting the seed) when `budget` recolorings
    cannot fix it; with two colors and n >= 6 that is unavoidable.
    """
    if n < 3:
        raise TooSmall(f"need n >= 3, got {n}")
    if k < 2:
        raise PreconditionViolated("colors", f"need k >= 2, got {k}")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    index = {p: i for i, p in enumerate(pairs)}
    tri_edges = [
        (index[(a, b)], index[(a, c)], index[(b, c)]) for a, b, c in _triangles(n)
    ]
    colors = [rng.randrange(k) for _ in pairs]
    for _ in range(budget):
        bad = None
        for t in tri_edges:
            if colors[t[0]] == colors[t[1]] == colors[t[2]]:
                bad = t
                break
        if bad is None:
            g = build(n, [(u, v, colors[i]) for i, (u, v) in enumerate(pairs)])
            assert find_monochromatic_triangle(g) is None
            return g
        edge = bad[rng.randrange(3)]
        colors[edge] = (colors[edge] + 1 + rng.randrange(k - 1)) % k
    raise BudgetExhausted(
        f"could not reach a mono-triangle-free {k}-coloring of K{n} "
        f"within {budget} recolorings (seed={seed})"
    )


def _check_fibers(n: int, fibers: Sequence[Sequence[int]]) -> List[tuple]:
    out = [tuple(sorted(p)) for p in fibers]
    flat = sorted(v for p in out for v in p)
    if flat != list(range(n)):
        raise BadPartition("fibers must partition 0..n-1")
    if any(len(p) not in (1, 2) for p in out):
        raise BadPartition("fiber sizes must be 1 or 2")
    return out


def random_degenerate(
    n: int, fibers: Sequence[Sequence[int]], seed: int
) -> Tuple[ColoredCompleteGraph, Dict[int, int]]:
    """Random fully degenerate instance with its compatible coloring witness.

    Each vertex takes its fiber index as f-value; cross-fiber pairs are
    oriented at random subject to every outside vertex dominating at least
    one member of each 2-fiber, and each edge takes the f-value of its
    tail.  The construction rules out monochromatic triangles outright.
    """
    parts = _check_fibers(n, fibers)
    rng = random.Random(seed)
    f = {}
    for idx, p in enumerate(parts):
        for v in p:
            f[v] = idx
    color = {}
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            cross = [(u, v) for u in parts[i] for v in parts[j]]
            combos = list(itertools.product((0, 1), repeat=len(cross)))
            rng.shuffle(combos)
            for combo in combos:
                heads = {}
                for (u, v), bit in zip(cross, combo):
                    heads[(u, v)] = (u, v) if bit else (v, u)
                ok = True
                for part in (parts[i], parts[j]):
                    if len(part) != 2 or not ok:
                        continue
                    x, y = part
                    other = parts[j] if part is parts[i] else parts[i]
                    for z in other:
                        key = (x, z) if (x, z) in heads else (z, x)
                        kx = heads[key][0] == x
                        key = (y, z) if (y, z) in heads else (z, y)
                        ky = heads[key][0] == y
                        if kx and ky:
                            ok = False
                            break
                if ok:
                    for pair, (tail, _head) in heads.items():
                        color[(min(pair), max(pair))] = f[tail]
                    break
            else:
                raise BudgetExhausted(f"no orientation for fibers {i},{j}")
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if f[u] == f[v]:
                edges.append((u, v, f[u]))
            else:
                edges.append((u, v, color[(u, v)]))
    g = build(n, edges)
    if n >= 3:
        assert find_monochromatic_triangle(g) is None
    return g, f


def _mono_free_two_coloring(p: int, c1: int, c2: int, rng: random.Random) -> Dict[tuple, int]:
    """Random 2-coloring of K_p (p <= 5) with no monochromatic triangle."""
    pairs = list(itertools.combinations(range(p), 2))
    tris = _triangles(p)
    valid = []
    for combo in itertools.product((c1, c2), repeat=len(pairs)):
        coloring = dict(zip(pairs, combo))
        if all(
            len({coloring[(a, b)], coloring[(a, c)], coloring[(b, c)]}) > 1
            for a, b, c in tris
        ):
            valid.append(coloring)
    return rng.choice(valid)


def gallai_coloring(
    n: int, seed: int
) -> Tuple[ColoredCompleteGraph, List[List[int]]]:
    """Recursive substitution coloring with no monochromatic and no PC triangle.

    Each level splits its vertices into 2..5 parts, colors cross-part edges
    with two fresh colors avoiding part-level monochromatic triangles, and
    recurses into the parts with further fresh colors.  The top-level
    partition is returned alongside the graph.
    """
    if n < 3:
        raise TooSmall(f"need n >= 3, got {n}")
    rng = random.Random(seed)
    fresh = itertools.count(1)
    color: Dict[tuple, int] = {}

    def fill(vertices: List[int]) -> List[List[int]]:
        if len(vertices) < 2:
            return [vertices]
        p = rng.randint(2, min(5, len(vertices)))
        vs = vertices[:]
        rng.shuffle(vs)
        cuts = sorted(rng.sample(range(1, len(vs)), p - 1))
        parts = [vs[a:b] for a, b in zip([0] + cuts, cuts + [len(vs)])]
        c1, c2 = next(fresh), next(fresh)
        part_colors = _mono_free_two_coloring(p, c1, c2, rng)
        for (i, j), c in part_colors.items():
            for u in parts[i]:
                for v in parts[j]:
                    color[(min(u, v), max(u, v))] = c
        for part in parts:
            fill(part)
        return parts

    top = fill(list(range(n)))
    g = build(n, [(u, v, c) for (u, v), c in color.items()])
    partition = sorted((sorted(p) for p in top), key=lambda p: p[0])
    assert find_monochromatic_triangle(g) is None
    assert find_pc_triangle(g) is None
    assert verify_gallai_partition(g, partition)
    return g, partition


# -- exhaustive enumeration --------------------------------------------

def _rgs_stream(m: int) -> Iterator[tuple]:
    """Restricted growth strings of length m, lexicographically.

    These index the set partitions of m items, i.e. edge colorings up to
    color relabeling; the stream has Bell(m) entries.
    """
    a = [0] * m
    mx = [0] * m  # mx[i] = max(a[:i]) for i >= 1
    while True:
        yield tuple(a)
        i = m - 1
        while i >= 1 and a[i] == mx[i] + 1:
            i -= 1
        if i < 1:
            return
        a[i] += 1
        for j in range(i + 1, m):
            mx[j] = mx[j - 1] if mx[j - 1] >= a[j - 1] else a[j - 1]
            a[j] = 0


def _graph_from_rgs(n: int, pairs: List[tuple], rgs: tuple) -> ColoredCompleteGraph:
    rows = [[-1] * n for _ in range(n)]
    for (u, v), c in zip(pairs, rgs):
        rows[u][v] = rows[v][u] = c
    palette = tuple(range(max(rgs) + 1))
    return ColoredCompleteGraph._from_dense(n, rows, palette)


def exhaustive_colorings(
    n: int,
    sample: Optional[int] = None,
    seed: int = 0,
    dedup: bool = False,
) -> Iterator[ColoredCompleteGraph]:
    """One coloring per color-relabeling class of K_n.

    Full enumeration (Bell(C(n,2)) instances) is supported for n <= 5;
    larger n requires `sample`, drawing random growth strings instead
    (not uniform over partitions, but seed-reproducible).  With `dedup`,
    canonical keys additionally collapse vertex permutations.
    """
    if n < 3:
        raise TooSmall(f"need n >= 3, got {n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if n > 5 and sample is None:
        raise TooLarge(
            f"full enumeration of K{n} means Bell({len(pairs)}) instances; "
            "pass a sample size"
        )
    if sample is None:
        stream = _rgs_stream(len(pairs))
    else:
        rng = random.Random(seed)

        def sampled() -> Iterator[tuple]:
            for _ in range(sample):
                a = [0]
                mx = 0
                for _i in range(1, len(pairs)):
                    a.append(rng.randint(0, mx + 1))
                    mx = max(mx, a[-1])
                yield tuple(a)

        stream = sampled()
    seen = set()
    for rgs in stream:
        g = _graph_from_rgs(n, pairs, rgs)
        if dedup:
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
        yield g


# -- uniform dispatch ---------------------------------------------------

def random_fibers(n: int, seed: int) -> List[tuple]:
    """Random partition of 0..n-1 into parts of size 1 and 2."""
    rng = random.Random(seed)
    vs = list(range(n))
    rng.shuffle(vs)
    npairs = rng.randint(0, n // 2)
    parts = [tuple(sorted(vs[2 * i : 2 * i + 2])) for i in range(npairs)]
    parts += [(v,) for v in vs[2 * npairs :]]
    return sorted(parts)


def generate(spec: GenSpec) -> Iterator[ColoredCompleteGraph]:
    """Instance stream for a GenSpec; derived seeds are spec.seed + index."""
    if spec.family == "doublePentagon":
        yield example_k5_double_pentagon()
    elif spec.family == "directedExample":
        yield example_directed(spec.n if spec.n else 6)
    elif spec.family == "randomNoMono":
        for i in range(spec.count):
            yield random_no_mono_triangle(spec.n, spec.k, spec.seed + i)
    elif spec.family == "randomDegenerate":
        for i in range(spec.count):
            g, _f = random_degenerate(
                spec.n, random_fibers(spec.n, spec.seed + i), spec.seed + i
            )
            yield g
    elif spec.family == "gallai":
        for i in range(spec.count):
            g, _parts = gallai_coloring(spec.n, spec.seed + i)
            yield g
    elif spec.family == "exhaustive":
        sample = spec.count if spec.n > 5 else None
        yield from exhaustive_colorings(spec.n, sample=sample, seed=spec.seed)
    else:
        raise PreconditionViolated(
            "family", f"unknown family {spec.family!r}; pick one of {FAMILIES}"
        )
