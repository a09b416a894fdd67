import itertools

import pytest

from helpers import random_instance_pool

from pcgraph import build
from pcgraph.cycles import is_pc_cycle
from pcgraph.detect import DegeneracyTag, degeneracy_status
from pcgraph.errors import MonochromaticTrianglePresent, ResultMismatch, TooSmall
from pcgraph.families import exhaustive_colorings, random_degenerate
from pcgraph.oracles import is_pancyclic_from
from pcgraph.trichotomy import (
    TrichotomyTag,
    classify,
    is_double_pentagon_k5,
    side_conditions,
    validate_result,
)


def test_double_pentagon_detector(double_pentagon, rainbow_k4):
    relabel = is_double_pentagon_k5(double_pentagon)
    assert relabel is not None and sorted(relabel) == list(range(5))
    assert is_double_pentagon_k5(rainbow_k4) is None


def test_double_pentagon_detector_relabeled(double_pentagon):
    perm = [3, 0, 4, 2, 1]
    renamed = {1: 9, 2: 4}
    h = build(5, [(perm[u], perm[v], renamed[c]) for u, v, c in double_pentagon.edges()])
    relabel = is_double_pentagon_k5(h)
    assert relabel is not None
    result = classify(h)
    assert result.tag is TrichotomyTag.EXCEPTIONAL_K5
    assert validate_result(h, result)


def test_classify_examples(double_pentagon, directed_example, rainbow_k4):
    assert classify(double_pentagon).tag is TrichotomyTag.EXCEPTIONAL_K5
    res_b = classify(directed_example)
    assert res_b.tag is TrichotomyTag.PROPER_DEGENERATE
    assert res_b.certificate.S == frozenset({0, 1, 2})
    res_a = classify(rainbow_k4)
    assert res_a.tag is TrichotomyTag.PANCYCLIC
    assert set(res_a.cycles) == {(v, 4) for v in range(4)}
    for (v, ln), cyc in res_a.cycles.items():
        assert v in cyc and len(cyc) == ln and is_pc_cycle(rainbow_k4, cyc)


def test_classify_rejections(mono_k3):
    with pytest.raises(TooSmall):
        classify(mono_k3)
    mono_k4 = build(4, [(u, v, 2) for u, v in itertools.combinations(range(4), 2)])
    with pytest.raises(MonochromaticTrianglePresent):
        classify(mono_k4)


def test_classify_full_only_route():
    # force the orientation pipeline with planted 2-fibers
    g, f = random_degenerate(8, [(0, 1), (2, 3), (4,), (5,), (6,), (7,)], seed=5)
    st = degeneracy_status(g)
    if st.tag is not DegeneracyTag.FULL_ONLY:
        pytest.skip("seed produced a proper set")
    result = classify(g)
    assert result.tag is TrichotomyTag.PANCYCLIC
    assert validate_result(g, result)


def test_classify_certificates_validate_random():
    pool = random_instance_pool(50, sizes=(4, 5, 6, 7), seed=23)
    for g in pool:
        result = classify(g)
        assert validate_result(g, result)
        if result.tag is TrichotomyTag.PANCYCLIC:
            assert is_pancyclic_from(g)


def test_classify_agrees_with_oracle_exhaustive_k4():
    from pcgraph.detect import find_monochromatic_triangle

    for g in exhaustive_colorings(4):
        if find_monochromatic_triangle(g) is not None:
            continue
        result = classify(g)
        assert (result.tag is TrichotomyTag.PANCYCLIC) == is_pancyclic_from(g)


def test_side_conditions_examples(double_pentagon, directed_example, rainbow_k4):
    rep = side_conditions(double_pentagon, classify(double_pentagon))
    assert not rep.color_degree_meets_half  # min color degree 2 < 3
    assert not rep.mono_degree_below_half  # max mono degree 2 >= 2
    assert rep.exception_bounds_hold

    rep_b = side_conditions(directed_example, classify(directed_example))
    assert rep_b.exception_bounds_hold and not rep_b.color_degree_meets_half

    rep_a = side_conditions(rainbow_k4, classify(rainbow_k4))
    assert rep_a.color_degree_meets_half  # 2*3 >= 5
    assert rep_a.mono_degree_below_half  # 1 < 2
    assert rep_a.pancyclic_when_mono_low is True


def test_side_conditions_mismatch(double_pentagon, rainbow_k4):
    with pytest.raises(ResultMismatch):
        side_conditions(rainbow_k4, classify(double_pentagon))


def test_result_json_schema(double_pentagon, directed_example, rainbow_k4):
    import json

    for g in (double_pentagon, directed_example, rainbow_k4):
        doc = json.loads(classify(g).to_json())
        assert set(doc) == {"tag", "certificates"}
        assert doc["tag"] in ("a", "b", "c")
    doc = json.loads(classify(directed_example).to_json())
    assert doc["certificates"]["degenerate_set"]["S"] == [0, 1, 2]


def test_exception_is_unique_double_pentagon():
    # the only 2-colored mono-triangle-free K5s are the double pentagons, and
    # all of them classify (c)
    count = 0
    from pcgraph.detect import find_monochromatic_triangle

    for g in exhaustive_colorings(5):
        if g.num_colors != 2 or find_monochromatic_triangle(g) is not None:
            continue
        count += 1
        assert is_double_pentagon_k5(g) is not None
        assert classify(g).tag is TrichotomyTag.EXCEPTIONAL_K5
    # K5 has 12 Hamiltonian cycles pairing up with their complements, giving
    # 6 partitions into two pentagon classes
    assert count == 6
