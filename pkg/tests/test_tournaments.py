import pytest

from helpers import random_multipartite_tournament, random_tournament

from pcgraph.cycles import is_pc_cycle
from pcgraph.errors import (
    CycleNotInDigraph,
    IncompatibleFunction,
    NotATournament,
    NotStronglyConnected,
    PreconditionViolated,
)
from pcgraph.families import example_directed, random_degenerate
from pcgraph.oracles import directed_cycle_lengths
from pcgraph.tournaments import (
    FALLBACK_KEY,
    MultipartiteTournament,
    cycles_through,
    is_directed_cycle,
    is_strongly_connected,
    lift_cycle,
    mpt_cycles_through,
    reduce_degenerate,
)


def directed_triangle():
    return MultipartiteTournament.tournament(3, [(0, 1), (1, 2), (2, 0)])


def transitive(n):
    return MultipartiteTournament.tournament(
        n, [(u, v) for u in range(n) for v in range(u + 1, n)]
    )


def test_strong_connectivity():
    assert is_strongly_connected(directed_triangle())
    assert not is_strongly_connected(transitive(4))
    assert is_strongly_connected(MultipartiteTournament.tournament(1, []))


def test_construction_validation():
    with pytest.raises(PreconditionViolated):
        MultipartiteTournament([(0, 1, 2)], [])  # part too large
    with pytest.raises(PreconditionViolated):
        MultipartiteTournament([(0, 1), (2,)], [(0, 1), (0, 2), (1, 2)])  # intra-part arc
    with pytest.raises(PreconditionViolated):
        MultipartiteTournament([(0,), (1,)], [])  # missing arc
    with pytest.raises(PreconditionViolated):
        MultipartiteTournament([(0,), (1,)], [(0, 1), (1, 0)])  # both directions


def test_cycles_through_triangle():
    got = cycles_through(directed_triangle(), 0)
    assert set(got) == {3}
    assert got[3] == (0, 1, 2)


def test_cycles_through_errors():
    with pytest.raises(NotStronglyConnected):
        cycles_through(transitive(4), 0)
    t = MultipartiteTournament([(0, 1), (2,), (3,)], [(0, 2), (2, 1), (1, 3), (3, 0), (2, 3)])
    with pytest.raises(NotATournament):
        cycles_through(t, 0)


def test_tournament_cycles_match_oracle():
    # random strong tournaments: constructed lengths must be exactly 3..n and
    # agree with exhaustive enumeration
    for seed in range(25):
        n = 3 + seed % 6  # 3..8
        t = random_tournament(n, seed)
        for v in range(n):
            got = cycles_through(t, v)
            assert set(got) == set(range(3, n + 1))
            for ln, cyc in got.items():
                assert len(cyc) == ln and v in cyc and is_directed_cycle(t, cyc)
            assert directed_cycle_lengths(t, v) == set(range(3, n + 1))


def test_mpt_quadrangle_example():
    # one 2-part {0,1} and singletons 2,3 wired around the pair
    t = MultipartiteTournament(
        [(0, 1), (2,), (3,)], [(0, 2), (2, 1), (1, 3), (3, 0), (2, 3)]
    )
    got = mpt_cycles_through(t, 0)
    assert got[4] == (0, 2, 1, 3)


def test_mpt_all_singletons_matches_tournament_route():
    t = random_tournament(5, 77)
    full = cycles_through(t, 2)
    mpt = mpt_cycles_through(t, 2)
    assert set(mpt) == {4, 5}
    assert set(full) - set(mpt) == {3}


def test_mpt_rejects_violations():
    t = MultipartiteTournament(
        [(0, 1), (2,), (3,)], [(0, 2), (1, 2), (2, 3), (3, 0), (3, 1)]
    )
    assert is_strongly_connected(t)
    with pytest.raises(PreconditionViolated, match="disjointness"):
        mpt_cycles_through(t, 0)
    small = directed_triangle()
    with pytest.raises(PreconditionViolated, match="size"):
        mpt_cycles_through(small, 0)
    with pytest.raises(PreconditionViolated, match="connectivity"):
        mpt_cycles_through(transitive(5), 0)


def test_mpt_quadrangle_long_return_path():
    # anchor 4 dominates the whole hub {0,1,2,3} and the only arc leaving the
    # hub starts a 3-step path back, forcing the sub-tournament extraction
    arcs = [
        (0, 2), (3, 0), (4, 0), (0, 5), (6, 0), (7, 0),
        (2, 1), (1, 3), (4, 1), (5, 1), (6, 1), (7, 1),
        (3, 2), (4, 2), (5, 2), (6, 2), (7, 2),
        (4, 3), (5, 3), (6, 3), (7, 3),
        (4, 5), (4, 6), (7, 4),
        (5, 6), (7, 5),
        (6, 7),
    ]
    t = MultipartiteTournament([(0, 1)] + [(v,) for v in range(2, 8)], arcs)
    assert t.disjointness_violation() is None and is_strongly_connected(t)
    got = mpt_cycles_through(t, 4)
    assert set(got) == set(range(4, 9))
    for ln, cyc in got.items():
        assert len(cyc) == ln and 4 in cyc and is_directed_cycle(t, cyc)


def test_mpt_cycles_random_instances():
    stats = {}
    for seed in range(30):
        total = 4 + seed % 5  # 4..8
        t = random_multipartite_tournament(total, seed)
        for v in range(total):
            got = mpt_cycles_through(t, v, stats)
            assert set(got) == set(range(4, total + 1))
            for ln, cyc in got.items():
                assert len(cyc) == ln and v in cyc and is_directed_cycle(t, cyc)
            oracle = {ln for ln in directed_cycle_lengths(t, v) if ln >= 4}
            assert oracle == set(got)
    # constructive rules must handle small instances without the fallback
    assert stats.get(FALLBACK_KEY, 0) == 0


def test_reduce_degenerate_arcs():
    g, f = random_degenerate(7, [(0, 1), (2,), (3, 4), (5,), (6,)], seed=4)
    t = reduce_degenerate(g, f)
    expected_arcs = sum(1 for u in range(7) for v in range(u + 1, 7) if f[u] != f[v])
    assert sum(1 for _ in t.arcs()) == expected_arcs
    assert t.disjointness_violation() is None
    for u, v in t.arcs():
        assert g.color(u, v) == f[u] != f[v]


def test_reduce_degenerate_fiber_roles():
    g = example_directed(6)
    # {0,1,2} colored 1,2,3 with f matching their spoke colors reduces to a
    # directed triangle on the inner vertices when restricted there
    from pcgraph import build

    inner = build(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])
    t = reduce_degenerate(inner, {0: 1, 1: 2, 2: 3})
    assert set(t.arcs()) == {(0, 1), (1, 2), (2, 0)}


def test_reduce_degenerate_errors():
    from pcgraph import build

    g = build(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])
    with pytest.raises(IncompatibleFunction, match=r"\(1,2\)"):
        reduce_degenerate(g, {0: 1, 1: 1, 2: 3})
    mono = build(3, [(0, 1, 5), (1, 2, 5), (0, 2, 5)])
    with pytest.raises(Exception) as err:
        reduce_degenerate(mono, {0: 5, 1: 5, 2: 5})
    assert "fiber" in str(err.value).lower()


def test_lift_cycle_is_pc():
    g, f = random_degenerate(8, [(0, 1), (2, 3), (4,), (5,), (6,), (7,)], seed=5)
    t = reduce_degenerate(g, f)
    if not is_strongly_connected(t):
        pytest.skip("orientation not strong for this seed")
    for v in range(8):
        for ln, cyc in mpt_cycles_through(t, v).items():
            lifted = lift_cycle(g, f, cyc)
            assert is_pc_cycle(g, lifted)
            assert len(lifted) == ln


def test_lift_cycle_rejects_non_cycles():
    g, f = random_degenerate(6, [(0,), (1,), (2,), (3,), (4,), (5,)], seed=6)
    with pytest.raises(CycleNotInDigraph):
        lift_cycle(g, f, (0, 0, 1))
    t = reduce_degenerate(g, f)
    u, v = next(iter(t.arcs()))
    w = next(x for x in range(6) if x not in (u, v))
    with pytest.raises(CycleNotInDigraph):
        # (v, u) traverses the arc backwards, so it cannot be an arc itself
        lift_cycle(g, f, (v, u, w))


def test_json_roundtrip():
    t = random_multipartite_tournament(6, 3)
    again = MultipartiteTournament.from_json_dict(t.to_json_dict())
    assert again.parts == t.parts
    assert set(again.arcs()) == set(t.arcs())
