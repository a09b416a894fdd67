import itertools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcgraph import build, canonical_key, colors_between, loads_instance, stats
from pcgraph.core import _normalized_upper, dumps_instance, from_instance_dict
from pcgraph.errors import (
    DuplicateEdge,
    EmptyVertexSet,
    InvalidInstance,
    MissingEdge,
    OverlappingSets,
    SelfLoop,
    TooSmall,
)


def test_build_double_pentagon_palette(double_pentagon):
    assert double_pentagon.palette == {1, 2}
    assert double_pentagon.color(0, 1) == 1
    assert double_pentagon.color(0, 2) == 2
    assert double_pentagon.color(1, 0) == 1  # symmetric


def test_build_single_edge():
    g = build(2, [(0, 1, 7)])
    assert g.palette == {7}
    assert g.color(0, 1) == 7


def test_build_missing_edge():
    with pytest.raises(MissingEdge, match=r"\(0,2\)"):
        build(3, [(0, 1, 1), (1, 2, 1)])


def test_build_duplicate_and_self_loop():
    with pytest.raises(DuplicateEdge):
        build(2, [(0, 1, 1), (1, 0, 2)])
    with pytest.raises(SelfLoop):
        build(2, [(0, 0, 1)])


def test_stats_double_pentagon(double_pentagon):
    s = stats(double_pentagon)
    assert s.color_degrees == (2, 2, 2, 2, 2)
    assert s.min_color_degree == 2
    assert s.max_mono_degree == 2


def test_stats_rainbow_k4(rainbow_k4):
    s = stats(rainbow_k4)
    assert s.color_degrees == (3, 3, 3, 3)
    assert s.min_color_degree == 3
    assert s.max_mono_degree == 1


def test_stats_mono_k3(mono_k3):
    s = stats(mono_k3)
    assert s.color_degrees == (1, 1, 1)
    assert s.min_color_degree == 1
    assert s.max_mono_degree == 2


def test_stats_too_small():
    with pytest.raises(TooSmall):
        stats(build(1, []))


def test_colors_between_examples(double_pentagon, directed_example):
    assert colors_between(directed_example, {0}, {3, 4, 5}) == {1}
    assert colors_between(double_pentagon, {0}, {1, 2}) == {1, 2}
    assert colors_between(double_pentagon, {0}, {1}) == {double_pentagon.color(0, 1)}


def test_colors_between_errors(double_pentagon):
    with pytest.raises(OverlappingSets):
        colors_between(double_pentagon, {0, 1}, {1, 2})
    with pytest.raises(EmptyVertexSet):
        colors_between(double_pentagon, set(), {1})


def test_canonical_key_color_swap(double_pentagon):
    swapped = build(5, [(u, v, 3 - c) for u, v, c in double_pentagon.edges()])
    assert canonical_key(swapped) == canonical_key(double_pentagon)


def test_canonical_key_vertex_relabel(double_pentagon):
    perm = [2, 4, 0, 3, 1]
    h = build(5, [(perm[u], perm[v], c) for u, v, c in double_pentagon.edges()])
    assert canonical_key(h) == canonical_key(double_pentagon)


def test_canonical_key_separates(rainbow_k4):
    mono = build(4, [(u, v, 9) for u, v in itertools.combinations(range(4), 2)])
    assert canonical_key(rainbow_k4) != canonical_key(mono)


def test_canonical_key_invariance_random_triples():
    # 1000 random (graph, permutation, color bijection) triples with n <= 7
    rng = random.Random(20240811)
    for trial in range(1000):
        n = rng.randint(2, 7)
        k = rng.randint(1, 5)
        pairs = list(itertools.combinations(range(n), 2))
        g = build(n, [(u, v, rng.randrange(k)) for u, v in pairs])
        perm = list(range(n))
        rng.shuffle(perm)
        pal = sorted(g.palette)
        shuffled = pal[:]
        rng.shuffle(shuffled)
        cmap = {c: 100 + s for c, s in zip(pal, shuffled)}
        h = build(n, [(perm[u], perm[v], cmap[c]) for u, v, c in g.edges()])
        assert canonical_key(g) == canonical_key(h), f"trial {trial}"


def _naive_key(g):
    pairs = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)]
    m = g.dense_matrix()
    return min(_normalized_upper(p, m, pairs) for p in itertools.permutations(range(g.n)))


def test_canonical_key_matches_isomorphism_oracle():
    # key equality must coincide with unrestricted-minimization isomorphism
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 5)
        k = rng.randint(1, 4)
        pairs = list(itertools.combinations(range(n), 2))
        g = build(n, [(u, v, rng.randrange(k)) for u, v in pairs])
        h = build(n, [(u, v, rng.randrange(k)) for u, v in pairs])
        assert (_naive_key(g) == _naive_key(h)) == (canonical_key(g) == canonical_key(h))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_build_symmetry_and_palette(data):
    n = data.draw(st.integers(min_value=2, max_value=6))
    colors = data.draw(
        st.lists(
            st.integers(min_value=-50, max_value=50),
            min_size=n * (n - 1) // 2,
            max_size=n * (n - 1) // 2,
        )
    )
    pairs = list(itertools.combinations(range(n), 2))
    g = build(n, [(u, v, c) for (u, v), c in zip(pairs, colors)])
    assert g.palette == set(colors)
    for u, v in pairs:
        assert g.color(u, v) == g.color(v, u)
    s = stats(g)
    assert all(1 <= d <= min(n - 1, len(g.palette)) for d in s.color_degrees)
    assert sum(s.color_degrees) >= len(g.palette)


def test_instance_json_roundtrip(directed_example):
    text = dumps_instance(directed_example)
    again = loads_instance(text)
    assert again == directed_example


@pytest.mark.parametrize(
    "payload",
    [
        "[]",
        '{"n": 3}',
        '{"n": 3, "edges": [[0,1,1],[0,2,1]], "extra": 1}',
        '{"n": 3, "edges": [[0,1,1],[0,2,1]]}',
        '{"n": 3, "edges": [[0,1,1],[0,2,1],[1,2]]}',
        '{"n": 3, "edges": [[0,1,1],[0,2,1],[1,2,"x"]]}',
        '{"n": true, "edges": []}',
        "not json",
    ],
)
def test_loader_rejects(payload):
    with pytest.raises(InvalidInstance):
        loads_instance(payload)


def test_loader_rejects_bad_pairs():
    data = {"n": 3, "edges": [[0, 1, 1], [0, 1, 2], [1, 2, 1]]}
    with pytest.raises(DuplicateEdge):
        from_instance_dict(data)


def test_instance_json_is_deterministic(double_pentagon):
    a = dumps_instance(double_pentagon)
    b = dumps_instance(double_pentagon)
    assert a == b
    assert json.loads(a)["n"] == 5
