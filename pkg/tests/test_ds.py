import json
from fractions import Fraction

import pytest

from conftest import numpy_radius
from quipu.charpoly import char_poly
from quipu.ds import (
    EXPECTED_MATES,
    bounded_radius_graphs,
    build_catalog,
    mate_invariants,
    mate_search,
    verify_main,
)
from quipu.families import Cycle, Hn, Lollipop, build_family, parse
from quipu.graph import canonical_code, union_all


def codes(graphs):
    return {canonical_code(g) for g in graphs}


def test_catalog_contains_the_mate_components():
    cat = build_catalog(10, 3)
    assert build_family(parse("CQ[g=6;0:1,3:1]")) in cat
    assert build_family(Lollipop(1, 6)) in cat


def test_catalog_is_duplicate_free():
    cat = build_catalog(14, Fraction(21, 10))
    assert len(cat.codes()) == len(cat.entries)
    for e in cat.entries:
        assert canonical_code(e.graph) == e.code
        assert e.poly == char_poly(e.graph)


def test_catalog_at_two_matches_brute_force(atlas_connected):
    want = {canonical_code(g) for g in atlas_connected if g.n <= 5 and numpy_radius(g) <= 2 + 1e-9}
    assert build_catalog(5, 2).codes() == want
    # P1..P5, C3..C5, D4, D5 and K_{1,4}
    assert len(want) == 11


@pytest.mark.parametrize("bound", [Fraction(2), Fraction(53, 25), Fraction(217, 100), Fraction(5, 2)])
def test_oracle_matches_the_atlas(atlas_connected, bound):
    want = set()
    for g in atlas_connected:
        rho = numpy_radius(g)
        # none of the atlas radii sits within 1e-9 of these bounds except exact 2
        assert abs(rho - float(bound)) > 1e-9 or bound == 2
        if rho <= float(bound) + 1e-9:
            want.add(canonical_code(g))
    assert codes(bounded_radius_graphs(7, bound)) == want


@pytest.mark.parametrize("max_order", [6, 8, 9])
def test_catalog_complete_below_three_over_root_two(max_order):
    bound = Fraction(53, 25)  # 2.12 < 3/sqrt(2)
    assert build_catalog(max_order, bound).codes() == codes(bounded_radius_graphs(max_order, bound))


def test_catalog_misses_graphs_above_three_over_root_two():
    bound = Fraction(2171, 1000)
    cat = build_catalog(7, bound).codes()
    oracle = codes(bounded_radius_graphs(7, bound))
    assert cat < oracle


def test_mate_search_examples():
    assert mate_search(10).mate_labels() == ["U(P:2,CQ[g=6;0:1,3:1])"]
    r13 = mate_search(13)
    assert codes(r13.mate_graphs()) == {canonical_code(build_family(parse("U(OQ[r=4;1:2],L[l=1;g=6])")))}
    assert mate_search(11).is_ds


def test_n15_has_two_mates_both_with_c6():
    rep = mate_search(15)
    want = {canonical_code(build_family(parse(t))) for t in ("U(OQ[r=6;1:1,3:2],C:6)", "U(OQ[r=4;1:1,2:4],C:6)")}
    assert codes(rep.mate_graphs()) == want
    c6 = canonical_code(build_family(Cycle(6)))
    assert all(any(e.code == c6 for e in m) for m in rep.mates)
    target = char_poly(build_family(Hn(15)), "berkowitz")
    for g in rep.mate_graphs():
        assert char_poly(g, "berkowitz") == target


def test_mate_report_invariants():
    for n in (10, 13, 15):
        rep = mate_search(n)
        h = build_family(Hn(n))
        for m in rep.mates:
            assert sum(e.nu for e in m) == n
            assert sum(e.eps for e in m) == n - 1
            unicyclic = sum(e.eps == e.nu for e in m)
            assert unicyclic == len(m) - 1
            g = union_all(e.graph for e in m)
            assert canonical_code(g) != canonical_code(h)
            assert mate_invariants(h, g).ok


def test_mate_report_json():
    data = json.loads(json.dumps(mate_search(10).to_json()))
    assert data["poly"] == ["-1", "0", "13", "0", "-30", "0", "26", "0", "-9", "0", "1"]
    comps = data["mates"][0]["components"]
    assert {c["spec"] for c in comps} == {"P:2", "CQ[g=6;0:1,3:1]"}
    assert all(c["graph6"] for c in comps)
    assert set(data["elapsed"]) == {"catalog", "oracle", "search", "total"}


def test_oracle_top_up_only_above_three_over_root_two():
    assert mate_search(10).used_oracle and mate_search(11).used_oracle
    assert not mate_search(12).used_oracle


def test_forcing_the_oracle_changes_nothing():
    for n in (12, 13):
        assert codes(mate_search(n, oracle=True).mate_graphs()) == codes(mate_search(n).mate_graphs())


def test_verify_main_examples():
    rep = verify_main(range(11, 13))
    assert rep.ok and rep.non_ds() == []
    rep = verify_main(range(15, 16))
    assert rep.ok
    assert any("C:6" in label for label in rep.verdicts[0].report.mate_labels())


def test_verify_main_threads():
    assert verify_main([10, 11], threads=2).non_ds() == [10]


@pytest.mark.parametrize("n", [9, 21])
def test_desk_range(n):
    with pytest.raises(ValueError):
        mate_search(n)
    with pytest.raises(ValueError):
        verify_main([n])


def test_expected_table_parses():
    for texts, _ in EXPECTED_MATES.values():
        for t in texts:
            assert build_family(parse(t)).n in (10, 13, 15)


@pytest.mark.slow
def test_verify_main_full_desk_range():
    rep = verify_main(range(10, 21))
    assert rep.ok
    assert rep.non_ds() == [10, 13, 15]
