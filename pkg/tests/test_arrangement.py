"""Chamber hyperplanes, region enumeration, and region weight supports."""

import random
from fractions import Fraction as Q

import pytest

from orbitchar import arrangement as arr
from orbitchar import liecore as lc


def _example_ws():
    rs = lc.build_root_system([("A", 1), ("A", 1)])
    return lc.weight_system(rs, [(1, 1), (1, 0)])


def _adjoint_ws(factors):
    rs = lc.build_root_system(factors)
    return lc.weight_system(rs, list(lc.highest_roots(rs)))


def test_example_hyperplanes():
    ws = _example_ws()
    hps = arr.chamber_hyperplanes(ws)
    assert [h.weight for h in hps] == [(-1, 1), (1, -1), (1, 0), (1, 1)]
    assert all(h.level == 2 for h in hps)


def test_example_regions_count_and_signs():
    ws = _example_ws()
    rs = ws.root_system
    regions = arr.enumerate_regions(rs, arr.chamber_hyperplanes(ws))
    assert len(regions) == 6
    assert [r.signs for r in regions] == [
        "----",
        "---+",
        "--++",
        "-+++",
        "+--+",
        "+-++",
    ]
    assert [r.id for r in regions] == [1, 2, 3, 4, 5, 6]


def test_example_witnesses_strictly_inside():
    ws = _example_ws()
    regions = arr.enumerate_regions(ws.root_system, arr.chamber_hyperplanes(ws))
    for r in regions:
        for normal, bound in r.closure_ineqs:
            assert lc.pairing(normal, r.witness) > bound


def test_a1_adjoint_two_regions():
    ws = _adjoint_ws([("A", 1)])
    hps = arr.chamber_hyperplanes(ws)
    assert [h.weight for h in hps] == [(2,)]
    regions = arr.enumerate_regions(ws.root_system, hps)
    assert [r.signs for r in regions] == ["-", "+"]


def test_a2_adjoint_three_hyperplanes_five_regions():
    ws = _adjoint_ws([("A", 2)])
    hps = arr.chamber_hyperplanes(ws)
    assert [h.weight for h in hps] == [(-1, 2), (1, 1), (2, -1)]
    regions = arr.enumerate_regions(ws.root_system, hps)
    assert len(regions) == 5


def _random_chamber_point(rs, rng, spread=4):
    labels = [Q(rng.randint(1, 100 * spread), 100) for _ in range(rs.rank)]
    from orbitchar.linalg import inverse, matvec

    return matvec(inverse([list(r) for r in rs.cartan]), labels)


def test_a2_adjoint_region_count_matches_sampling_oracle():
    # independent count of sign vectors by dense random sampling
    ws = _adjoint_ws([("A", 2)])
    rs = ws.root_system
    hps = arr.chamber_hyperplanes(ws)
    rng = random.Random(20260817)
    seen = set()
    n = 0
    while n < 3000:
        h = _random_chamber_point(rs, rng)
        vals = [lc.pairing(hp.weight, h) for hp in hps]
        if any(v == hp.level for v, hp in zip(vals, hps)):
            continue
        seen.add("".join("+" if v > hp.level else "-" for v, hp in zip(vals, hps)))
        n += 1
    regions = arr.enumerate_regions(rs, hps)
    assert seen == {r.signs for r in regions}
    assert len(regions) == 5


def test_sign_vectors_unique_and_match_witness():
    for ws in [_example_ws(), _adjoint_ws([("A", 3)])]:
        rs = ws.root_system
        hps = arr.chamber_hyperplanes(ws)
        regions = arr.enumerate_regions(rs, hps)
        assert len({r.signs for r in regions}) == len(regions)
        for r in regions:
            recomputed = "".join(
                "+" if lc.pairing(hp.weight, r.witness) > hp.level else "-"
                for hp in hps
            )
            assert recomputed == r.signs


def test_enumeration_limit():
    ws = _adjoint_ws([("A", 5)])
    hps = arr.chamber_hyperplanes(ws)
    assert len(hps) == 15
    with pytest.raises(ValueError):
        arr.enumerate_regions(ws.root_system, hps, max_hyperplanes=10)


def test_level_must_be_positive():
    with pytest.raises(ValueError):
        arr.chamber_hyperplanes(_example_ws(), level=0)


def test_example_region_weight_supports():
    ws = _example_ws()
    regions = arr.enumerate_regions(ws.root_system, arr.chamber_hyperplanes(ws))
    by_signs = {r.signs: r for r in regions}
    subs = {s: arr.region_weights(ws, r) for s, r in by_signs.items()}
    assert subs["----"].i_r == frozenset()
    assert subs["---+"].i_r == {(1, 1)}
    assert subs["+--+"].i_r == {(1, 1), (-1, 1)}
    assert subs["-+++"].i_r == {(1, 1), (1, -1), (1, 0)}
    assert subs["--++"].i_r == {(1, 1), (1, 0)}
    assert subs["+-++"].i_r == {(1, 1), (-1, 1), (1, 0)}
    for s in subs.values():
        assert s.dimension == len(s.i_r)


def test_witness_independence_of_i_r():
    # a second strict interior point of each region gives the same support
    for ws in [_example_ws(), _adjoint_ws([("A", 3)])]:
        rs = ws.root_system
        regions = arr.enumerate_regions(rs, arr.chamber_hyperplanes(ws))
        rng = random.Random(5)
        for r in regions:
            w = r.witness
            direction = [Q(rng.randint(-5, 5), 7) for _ in range(rs.rank)]
            # largest step keeping all closure rows strict, capped at 1
            tmax = Q(1)
            for normal, bound in r.closure_ineqs:
                dv = lc.pairing(normal, direction)
                if dv < 0:
                    slack = lc.pairing(normal, w) - bound
                    tmax = min(tmax, slack / (-dv) / 2)
            w2 = tuple(a + tmax * d for a, d in zip(w, direction))
            for normal, bound in r.closure_ineqs:
                assert lc.pairing(normal, w2) > bound
            assert (
                arr.region_weights(ws, r).i_r
                == frozenset(
                    mu for mu in ws.entries if lc.pairing(mu, w2) > 2
                )
            )


@pytest.mark.parametrize(
    "factors,module",
    [
        ([("A", 1), ("A", 1)], "example"),
        ([("A", 2)], "adjoint"),
        ([("A", 3)], "adjoint"),
        ([("B", 2)], "little"),
        ([("G", 2)], "little"),
    ],
)
def test_region_supports_saturated(factors, module):
    rs = lc.build_root_system(factors)
    if module == "example":
        ws = lc.weight_system(rs, [(1, 1), (1, 0)])
    elif module == "adjoint":
        ws = lc.weight_system(rs, list(lc.highest_roots(rs)))
    else:
        ws = lc.weight_system(rs, [lc.highest_short_root(rs)])
    regions = arr.enumerate_regions(rs, arr.chamber_hyperplanes(ws))
    for r in regions:
        sub = arr.region_weights(ws, r)
        assert arr.is_saturated(ws, sub.i_r)


def test_little_adjoint_hyperplanes_are_positive_short_roots():
    for factors in [[("B", 2)], [("C", 3)], [("G", 2)]]:
        rs = lc.build_root_system(factors)
        ws = lc.weight_system(rs, [lc.highest_short_root(rs)])
        hps = arr.chamber_hyperplanes(ws)
        shorts = sorted(r for r in rs.positive_roots if rs.is_short_root(r))
        assert [h.weight for h in hps] == shorts


def test_grade_module():
    ws = _example_ws()
    h = lc.as_point((1, 1))
    g = arr.grade_module(ws, h, 2)
    assert g.at == {(1, 1)}
    assert g.above == frozenset()
    assert g.at_least == {(1, 1)}
    g0 = arr.grade_module(ws, h, 0)
    assert g0.at == {(1, -1), (-1, 1)}
    assert g0.above == {(1, 1), (1, 0)}
    h5 = lc.as_point((2, 4))
    g5 = arr.grade_module(ws, h5, 2)
    assert g5.at == {(1, 0), (-1, 1)}
    assert g5.above == {(1, 1)}


def test_grade_partition_is_consistent():
    ws = _adjoint_ws([("A", 3)])
    h = lc.as_point((1, Q(3, 2), 1))
    g = arr.grade_module(ws, h, Q(2))
    assert g.at_least == g.at | g.above
    assert not g.at & g.above
