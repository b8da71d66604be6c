import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import numpy_radius, random_graph
from quipu.families import ClosedQuipu, Cycle, Dagger, Hn, Lollipop, OpenQuipu, Path, Star, build_family, parse
from quipu.graph import Graph, delete_vertex
from quipu.intpoly import IntPoly, X
from quipu.spectral import (
    ABOVE,
    EXACTLY_TWO,
    G_2_TO_H,
    G_EQ2,
    G_LT2,
    HOFFMAN,
    HOFFMAN_TO_3SQRT2HALF,
    THREE_OVER_SQRT2,
    TWO,
    RealRoot,
    Spectrum,
    all_eigenvalues,
    class_threshold,
    compare_radii,
    compare_roots,
    eigen_location_suite,
    hshape_spec,
    hshape_trees_of_order,
    interlacing_holds,
    kth_eigenvalue,
    radius_at_most,
    radius_below,
    spectral_radius,
    spider_spec,
    structural_class_lookup,
    threshold_classify,
)

RHO_TABLE = {
    10: 2.17009, 11: 2.13578, 12: 2.11491, 13: 2.10100, 14: 2.09118, 15: 2.08397,
    16: 2.07852, 17: 2.07431, 18: 2.07103, 19: 2.06843, 20: 2.06637,
}


def hn(n):
    return build_family(Hn(n))


def test_kth_eigenvalue_examples():
    r = kth_eigenvalue(hn(10), 1, Fraction(1, 10**6))
    assert r.lower < Fraction(217009, 100000) + Fraction(1, 10**5)
    assert abs(float(r) - 2.17009) < 1e-5
    assert r.upper - r.lower <= Fraction(1, 10**6)
    l2 = kth_eigenvalue(hn(15), 2, Fraction(1, 10**6))
    assert l2.exact and l2.upper == 2
    p2 = kth_eigenvalue(build_family(Path(2)), 1)
    assert p2.exact and p2.upper == 1
    with pytest.raises(ValueError):
        kth_eigenvalue(hn(10), 11)


@pytest.mark.parametrize("n", sorted(RHO_TABLE))
def test_radius_table(n):
    r = spectral_radius(hn(n)).refined(Fraction(1, 10**8))
    assert abs(float(r) - RHO_TABLE[n]) < 1e-4
    assert abs(float(r) - numpy_radius(hn(n))) < 1e-7


def test_compare_radii_examples():
    assert compare_radii(hn(12), hn(13)) == 1
    assert compare_radii(build_family(Lollipop(1, 6)), hn(13)) == 0
    g = build_family(parse("CQ[g=6;0:1,3:1]"))
    assert compare_radii(g, g) == 0


def test_threshold_examples():
    assert threshold_classify(hn(11)) == ABOVE
    assert threshold_classify(hn(12)) == HOFFMAN_TO_3SQRT2HALF
    assert threshold_classify(build_family(Cycle(6))) == EXACTLY_TWO


def test_thresholds_are_the_right_numbers():
    assert abs(float(TWO.as_root().refined(Fraction(1, 10**9))) - 2) < 1e-9
    h = (2 + 5**0.5) ** 0.5
    assert abs(float(HOFFMAN.as_root().refined(Fraction(1, 10**9))) - h) < 1e-8
    assert abs(float(THREE_OVER_SQRT2.as_root().refined(Fraction(1, 10**9))) - 3 / 2**0.5) < 1e-8


def test_structural_lookup_examples():
    assert structural_class_lookup(build_family(Path(7))).cls == G_LT2
    assert structural_class_lookup(build_family(Star(4))).cls == G_EQ2
    m = structural_class_lookup(build_family(OpenQuipu((1, 1), (1, 2), 5)))
    assert m.cls == G_2_TO_H


def test_structural_lookup_matches_exact_classification():
    for n in range(4, 15):
        trees = [hshape_spec(*a) for a in hshape_trees_of_order(n)]
        trees += [spider_spec(a, b, n - 1 - a - b) for a in range(1, n) for b in range(a, n) if n - 1 - a - b >= b]
        for spec in trees:
            g = build_family(spec)
            m = structural_class_lookup(g)
            cls = threshold_classify(g)
            if m is None:
                assert cls not in ("below_two", "exactly_two", "two_to_hoffman")
            else:
                assert class_threshold(m.cls) == cls


def test_compare_roots_equality_needs_shared_factor():
    sqrt2 = RealRoot(X * X - 2, Fraction(1), Fraction(2))
    near = RealRoot(IntPoly((-14142135623, 10**10)), Fraction(1), Fraction(2))
    assert compare_roots(sqrt2, near) == 1
    assert compare_roots(sqrt2, RealRoot((X * X - 2) * (X - 5), Fraction(1), Fraction(3, 2))) == 0


def test_spectrum_multiplicities():
    s = Spectrum.of((X - 2) * (X + 1) ** 2 * (X * X - 1))
    assert [float(r.refined(Fraction(1, 10**9))) for r in s.roots] == pytest.approx([2, 1, -1])
    assert s.multiplicities == (1, 1, 3)
    assert s.distinct_index(4) == 2
    assert s.kth(5).restrict(X + 1) is not None


def test_all_eigenvalues_against_numpy():
    rng = random.Random(4)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 9), 0.4)
        ours = [float(e) for e in all_eigenvalues(g, Fraction(1, 10**8)) for _ in range(e.multiplicity)]
        theirs = sorted(np.linalg.eigvalsh(np.array(g.adjacency_matrix(), dtype=float)), reverse=True)
        assert ours == pytest.approx(theirs, abs=1e-6)


def test_interlacing_on_hn():
    for n in (10, 13, 16):
        g = hn(n)
        assert all(interlacing_holds(g, v) for v in range(g.n))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 8), st.floats(0.1, 0.9), st.fractions(Fraction(1, 2), Fraction(4), max_denominator=20), st.randoms())
def test_exact_radius_bounds_agree_with_sturm(n, p, b, rnd):
    g = random_graph(rnd, n, p)
    rho = spectral_radius(g)
    bound = RealRoot(IntPoly((-b.numerator, b.denominator)), b - 1, b)
    c = compare_roots(rho, bound)
    assert radius_below(g, b) == (c < 0)
    assert radius_at_most(g, b) == (c <= 0)


def test_radius_at_most_boundary_cases():
    assert radius_at_most(build_family(Cycle(7)), 2)
    assert not radius_below(build_family(Cycle(7)), 2)
    assert radius_at_most(build_family(Dagger(1)), 2)
    assert not radius_at_most(build_family(Dagger(2)), 2)


def test_location_suite_examples():
    rep = eigen_location_suite(range(10, 31))
    assert rep.ok, rep.failures
    by = {(c.claim, c.params.get("n")): c for c in rep.claims}
    assert by[("second_location", 14)].params["found"] == "below_two"
    assert by[("second_location", 16)].params["found"] == "two_to_hoffman"
    chain = [c for c in rep.claims if c.claim.startswith("quipu_chain")]
    assert chain and all(c.verdict for c in chain)


def test_c_chain_value():
    # rho of CQ with pendant 1 at 0 and pendant 2 at 6 on a 12-cycle
    g = build_family(ClosedQuipu((1, 2), (0, 6), 12))
    r = float(spectral_radius(g).refined(Fraction(1, 10**8)))
    assert abs(r - 2.1215) < 1e-4
    assert r > 3 / 2**0.5


def test_lambda3_after_vertex_deletion():
    # deleting a branch vertex of H_n leaves 2 P2 and a path-like tree
    g = delete_vertex(hn(12), 2)
    assert sorted(len(c) for c in g.components()) == [2, 2, 7]
