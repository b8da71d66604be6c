import pytest

from quipu.charpoly import char_poly, cycle_poly, path_poly
from quipu.divisibility import (
    R_SEQUENCE,
    RecursiveSeq,
    c01p_check,
    classify_path_divisor,
    classify_path_divisor_by_reduction,
    closed_quipu_quotient_sweep,
    cycle_divisor_scan,
    h_eval_at_two,
    hn_poly,
    hshape_odd_factorization,
    path_divisibility_reduce,
    path_product_identity_check,
    path_sequence,
    pippi_identities,
    r_literal_sequence,
    r_sequence,
    seq_nth,
    t_divides_h,
    telescope_check,
    tn_poly,
)
from quipu.families import Hn, build_family
from quipu.graph import Graph
from quipu.intpoly import X, IntPoly, divide_exact, divides


def berk_h(n):
    return char_poly(build_family(Hn(n)), "berkowitz")


def test_seq_nth_examples():
    ps = path_sequence()
    assert all(seq_nth(ps, n) == path_poly(n) for n in range(30))
    assert seq_nth(R_SEQUENCE, 12) == berk_h(12)
    p = IntPoly((1, 2, 3))
    s = RecursiveSeq(4, p, X * p)
    # with seeds (p, xp) every later term is phi(P_{n-h}) p
    assert seq_nth(s, 9) == path_poly(5) * p
    with pytest.raises(ValueError):
        s.nth(3)


def test_telescope_examples():
    assert telescope_check(r_literal_sequence(), 20, 7)
    assert telescope_check(path_sequence(), 9, 4)
    assert all(telescope_check(R_SEQUENCE, n, 1) for n in range(12, 40))
    with pytest.raises(ValueError):
        telescope_check(path_sequence(), 5, 5)


def test_reduce_examples():
    r = path_divisibility_reduce(r_literal_sequence(), 5, 17)
    assert (r.reduced_index, r.divides) == (5, True)
    assert not path_divisibility_reduce(r_literal_sequence(), 3, 100).divides
    assert path_divisibility_reduce(path_sequence(), 2, 5).divides


def test_r_sequence_examples():
    assert r_sequence(7) == IntPoly((0, -4, 0, 8, 0, -4))
    assert r_sequence(0) == IntPoly((1, 0, 2, 0, -5, 0, -13, 0, 35, 0, -28, 0, 9, 0, -1))
    assert r_sequence(12) == X * r_sequence(11) - r_sequence(10)


def test_r_literals_obey_the_recursion():
    seq = r_literal_sequence()
    for i in range(12):
        assert seq.nth(i) == r_sequence(i)
    for n in range(10, 30):
        assert seq.nth(n) == berk_h(n)


def test_classify_examples():
    assert classify_path_divisor(2, 37)
    assert classify_path_divisor(5, 17) and not classify_path_divisor(5, 18)
    assert not classify_path_divisor(7, 50)
    assert divide_exact(hn_poly(50), path_poly(7)) is None


def test_classify_matches_division():
    for m in range(1, 16):
        for n in range(10, 60):
            direct = divides(path_poly(m), hn_poly(n))
            assert classify_path_divisor(m, n) == direct
            assert classify_path_divisor_by_reduction(m, n) == direct


def test_odd_factorization_examples():
    six = hshape_odd_factorization(6)
    assert six.t_factor * (tn_poly(7) - path_poly(5)) == berk_h(13)
    assert six.identity_holds
    assert hshape_odd_factorization(8).identity_holds
    assert not t_divides_h(7, 13)
    assert t_divides_h(6, 13)


def test_t6_also_divides_h25():
    # phi(T6) divides phi(H_n) whenever n = 1 mod 12, checked with the determinant engine
    t6 = char_poly(Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]), "berkowitz")
    assert t6 == tn_poly(6)
    for n in (13, 25, 37):
        assert divides(t6, berk_h(n))


def test_cycle_scan_examples():
    found = cycle_divisor_scan(20, 40)
    assert found == {(3, 15), (6, 15)}
    assert (4, 15) not in found
    q = divide_exact(hn_poly(15), cycle_poly(6))
    assert q is not None and q.degree == 9


def test_eval_at_two_examples():
    assert h_eval_at_two(15) == 0
    assert h_eval_at_two(10) == -45
    assert h_eval_at_two(23) == 72
    assert h_eval_at_two(23) == berk_h(23)(2)


def test_c01p_examples():
    assert c01p_check(6).both_identities_hold
    assert c01p_check(10).both_identities_hold
    with pytest.raises(ValueError):
        c01p_check(5)


def test_path_product_examples():
    assert path_product_identity_check(4, 7, 5, 6)
    assert path_product_identity_check(4, 6, 5, 5)
    assert path_product_identity_check(0, 4, 2, 2)
    assert all(pippi_identities(k) == (True, True) for k in range(6, 25))
    with pytest.raises(ValueError):
        path_product_identity_check(3, 2, 4, 1)


def test_quipu_sweep_small():
    sweep = closed_quipu_quotient_sweep(18)
    assert sweep.hits == [] and sweep.checked > 0
