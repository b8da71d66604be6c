"""Divisibility calculus for sequences obeying g(n+2) = x g(n+1) - g(n)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .charpoly import char_poly, cycle_poly, path_poly
from .families import ClosedQuipu, Hn, Lollipop, Tn, build_family
from .intpoly import X, IntPoly, divide_exact, divides, eval_at


@dataclass
class RecursiveSeq:
    """g(base), g(base+1) given; later terms by g(n+2) = x g(n+1) - g(n)."""

    base: int
    seed0: IntPoly
    seed1: IntPoly
    _terms: list[IntPoly] = field(default_factory=list, repr=False)

    def __post_init__(self) -> None:
        self._terms = [self.seed0, self.seed1]

    def nth(self, n: int) -> IntPoly:
        if n < self.base:
            raise ValueError(f"index {n} below base index {self.base}")
        i = n - self.base
        terms = self._terms
        # appends are idempotent: a racing writer computes the same value
        while len(terms) <= i:
            terms.append(X * terms[-1] - terms[-2])
        return terms[i]


def seq_nth(s: RecursiveSeq, n: int) -> IntPoly:
    return s.nth(n)


def path_sequence() -> RecursiveSeq:
    return RecursiveSeq(0, IntPoly((1,)), X)


def telescope_check(s: RecursiveSeq, n: int, k: int) -> bool:
    """g(n) == phi(P_k) g(n-k) - phi(P_{k-1}) g(n-k-1)."""
    if not 1 <= k <= n - 1 - s.base:
        raise ValueError(f"need 1 <= k <= n-1-base, got n={n}, k={k}, base={s.base}")
    return s.nth(n) == path_poly(k) * s.nth(n - k) - path_poly(k - 1) * s.nth(n - k - 1)


@dataclass(frozen=True)
class Reduction:
    reduced_index: int
    divides: bool


def path_divisibility_reduce(s: RecursiveSeq, m: int, n: int) -> Reduction:
    """Fold n down modulo m+1 and test phi(P_m) against the residue term."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n < s.base:
        raise ValueError(f"index {n} below base index {s.base}")
    i = s.base + (n - s.base) % (m + 1)
    return Reduction(i, divides(path_poly(m), s.nth(i)))


# The sequence whose terms from index 10 on are phi(H_n).
_R_LITERALS = {
    0: (1, 0, 2, 0, -5, 0, -13, 0, 35, 0, -28, 0, 9, 0, -1),
    1: (0, 1, 0, -4, 0, -3, 0, 20, 0, -21, 0, 8, 0, -1),
    2: (-1, 0, -1, 0, 1, 0, 10, 0, -15, 0, 7, 0, -1),
    3: (0, -2, 0, 3, 0, 4, 0, -10, 0, 6, 0, -1),
    4: (1, 0, -1, 0, 2, 0, -6, 0, 5, 0, -1),
    5: (0, 3, 0, -4, 0, -2, 0, 4, 0, -1),
    6: (-1, 0, 4, 0, -6, 0, 4, 0, -1),
    7: (0, -4, 0, 8, 0, -4),
    8: (1, 0, -8, 0, 14, 0, -8, 0, 1),
    9: (0, 5, 0, -16, 0, 18, 0, -8, 0, 1),
    10: (-1, 0, 13, 0, -30, 0, 26, 0, -9, 0, 1),
    11: (0, -6, 0, 29, 0, -48, 0, 34, 0, -10, 0, 1),
}

R_SEQUENCE = RecursiveSeq(10, IntPoly(_R_LITERALS[10]), IntPoly(_R_LITERALS[11]))


def r_sequence(i: int) -> IntPoly:
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")
    if i in _R_LITERALS:
        return IntPoly(_R_LITERALS[i])
    return R_SEQUENCE.nth(i)


def r_literal_sequence() -> RecursiveSeq:
    """Same sequence grown from the index-0 and index-1 literals."""
    return RecursiveSeq(0, r_sequence(0), r_sequence(1))


def hn_poly(n: int) -> IntPoly:
    return char_poly(build_family(Hn(n)))


@lru_cache(maxsize=None)
def tn_poly(n: int) -> IntPoly:
    return char_poly(build_family(Tn(n)))


def classify_path_divisor(m: int, n: int) -> bool:
    """Does phi(P_m) divide phi(H_n)?  Closed classification."""
    if m < 1 or n < 10:
        raise ValueError(f"need m >= 1 and n >= 10, got m={m}, n={n}")
    return (m == 1 and n % 2 == 1) or m == 2 or (m == 5 and n % 6 == 5)


def classify_path_divisor_by_reduction(m: int, n: int) -> bool:
    if m < 1 or n < 10:
        raise ValueError(f"need m >= 1 and n >= 10, got m={m}, n={n}")
    return path_divisibility_reduce(r_literal_sequence(), m, n).divides


@dataclass(frozen=True)
class OddFactorization:
    k: int
    t_factor: IntPoly
    cofactor: IntPoly
    identity_holds: bool


def hshape_odd_factorization(k: int) -> OddFactorization:
    """phi(H_{2k+1}) = phi(T_k) * cofactor; for k = 6 the cofactor uses phi(P_5)."""
    if k < 6:
        raise ValueError(f"k must be >= 6, got {k}")
    lower = path_poly(5) if k == 6 else tn_poly(k - 1)
    cofactor = tn_poly(k + 1) - lower
    tk = tn_poly(k)
    return OddFactorization(k, tk, cofactor, tk * cofactor == hn_poly(2 * k + 1))


def t_divides_h(h: int, n: int) -> bool:
    return divides(tn_poly(h), hn_poly(n))


def cycle_divisor_scan(m_max: int, n_max: int) -> set[tuple[int, int]]:
    if m_max < 3 or n_max < 10:
        raise ValueError("need m_max >= 3 and n_max >= 10")
    cycles = {m: cycle_poly(m) for m in range(3, m_max + 1)}
    found = set()
    for n in range(10, n_max + 1):
        target = hn_poly(n)
        for m, c in cycles.items():
            if m <= n and divides(c, target):
                found.add((m, n))
    return found


def h_eval_at_two(n: int) -> int:
    if n < 10:
        raise ValueError(f"n must be >= 10, got {n}")
    value = 9 * (n - 15)
    actual = eval_at(hn_poly(n), 2)
    if actual != value:
        raise ArithmeticError(f"phi(H_{n}, 2) = {actual}, expected {value}")
    return value


@dataclass(frozen=True)
class C01PCheck:
    k: int
    q: IntPoly
    lollipop_identity: bool
    hshape_identity: bool

    @property
    def both_identities_hold(self) -> bool:
        return self.lollipop_identity and self.hshape_identity


def c01p_check(k: int) -> C01PCheck:
    """Shared factor q of the lollipop L[l=1;g=2k-6] and H_{2k+1}."""
    if k < 6:
        raise ValueError(f"k must be >= 6, got {k}")
    P = path_poly
    q = P(k - 1) - X * P(k - 4) - P(k - 3) + X * P(k - 6)
    lolli = char_poly(build_family(Lollipop(1, 2 * k - 6)))
    return C01PCheck(
        k,
        q,
        lolli == P(k - 4) * q,
        hn_poly(2 * k + 1) == P(2) * tn_poly(k) * q,
    )


def path_product_identity_check(r1: int, r2: int, s1: int, s2: int) -> bool:
    """phi(P_r1)phi(P_r2) - phi(P_s1)phi(P_s2) == -phi(P_{s1-r1-1})phi(P_{s2-r1-1})."""
    if not (0 <= r1 <= r2 and r1 < s1 <= s2 and r1 + r2 == s1 + s2):
        raise ValueError(f"need r1 <= r2, r1 < s1 <= s2, r1+r2 = s1+s2; got {(r1, r2, s1, s2)}")
    P = path_poly
    return P(r1) * P(r2) - P(s1) * P(s2) == -(P(s1 - r1 - 1) * P(s2 - r1 - 1))


def pippi_identities(k: int) -> tuple[bool, bool]:
    """The two specializations at k: shifts (k-5,k-2 | k-4,k-3) and (k-6,k-4 | k-5,k-5)."""
    if k < 6:
        raise ValueError(f"k must be >= 6, got {k}")
    P = path_poly
    first = P(k - 5) * P(k - 2) == P(k - 4) * P(k - 3) - X
    second = P(k - 6) * P(k - 4) == P(k - 5) * P(k - 5) - 1
    return first, second


@dataclass(frozen=True)
class QuipuSweep:
    checked: int
    hits: list[tuple[int, int, int, int]]


def closed_quipu_quotient_sweep(n_max: int, n_min: int = 12) -> QuipuSweep:
    """Search CQ[g=2s;0:1,k:t] with t > 1, s > 3, 1 < k <= s for phi == phi(H_n)/(x^2-1)."""
    p2 = path_poly(2)
    checked = 0
    hits = []
    for n in range(n_min, n_max + 1):
        target = divide_exact(hn_poly(n), p2)
        for s in range(4, n // 2 + 1):
            for t in range(2, n + 1):
                if 2 * s + 1 + t != n - 2:
                    continue
                for k in range(2, s + 1):
                    checked += 1
                    g = build_family(ClosedQuipu((1, t), (0, k), 2 * s))
                    if target is not None and char_poly(g) == target:
                        hits.append((n, t, s, k))
    return QuipuSweep(checked, hits)
