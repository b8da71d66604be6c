"""Exact eigenvalue location by Sturm sequences over the rationals.

Every real algebraic number here is a ``RealRoot``: a squarefree integer
polynomial together with a half-open rational interval ``(lower, upper]``
holding exactly one of its roots.  Floats only appear in reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .charpoly import char_poly
from .families import (
    ClosedQuipu,
    Cycle,
    FamilySpec,
    Hn,
    Lollipop,
    OpenQuipu,
    Path,
    Star,
    build_family,
    render,
)
from .graph import Graph, canonical_code, delete_vertex, iter_bits
from .intpoly import IntPoly, gcd, root_bound, sign_at, squarefree_decomposition, sturm_chain, sturm_count

DEFAULT_WIDTH = Fraction(1, 10**9)


@lru_cache(maxsize=4096)
def _chain(p: IntPoly) -> tuple[IntPoly, ...]:
    return tuple(sturm_chain(p))


def count_roots(p: IntPoly, a, b) -> int:
    """Distinct roots of squarefree ``p`` in ``(a, b]``."""
    return sturm_count(p, a, b, _chain(p))


@dataclass(frozen=True)
class RealRoot:
    poly: IntPoly
    lower: Fraction
    upper: Fraction

    @property
    def exact(self) -> bool:
        """True when the root is known to be ``upper`` itself."""
        return sign_at(self.poly, self.upper) == 0

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def bisect(self) -> "RealRoot":
        if self.exact:
            return RealRoot(self.poly, (self.lower + self.upper) / 2, self.upper)
        mid = (self.lower + self.upper) / 2
        if count_roots(self.poly, self.lower, mid):
            return RealRoot(self.poly, self.lower, mid)
        return RealRoot(self.poly, mid, self.upper)

    def refined(self, width: Fraction) -> "RealRoot":
        r = self
        while r.width > width:
            if r.exact:
                return RealRoot(r.poly, max(r.lower, r.upper - width), r.upper)
            r = r.bisect()
        return r

    def restrict(self, factor: IntPoly) -> "RealRoot | None":
        """Same root as a root of ``factor``, if it is one."""
        if factor.degree < 1 or count_roots(factor, self.lower, self.upper) == 0:
            return None
        return RealRoot(factor, self.lower, self.upper)

    def midpoint(self) -> Fraction:
        return self.upper if self.exact else (self.lower + self.upper) / 2

    def __float__(self) -> float:
        return float(self.midpoint())

    def to_json(self) -> dict:
        out = {"lower": str(self.lower), "upper": str(self.upper), "approx": float(self)}
        if self.exact:
            out["exact"] = str(self.upper)
        return out


def compare_roots(x: RealRoot, y: RealRoot) -> int:
    """-1, 0 or 1 as x <, ==, > y.  Equality only via a shared factor."""
    g = gcd(x.poly, y.poly)
    if g.degree >= 1:
        gx, gy = x.restrict(g), y.restrict(g)
        if gx is not None and gy is not None:
            lo, hi = min(gx.lower, gy.lower), max(gx.upper, gy.upper)
            while True:
                if gx.upper <= gy.lower or gy.upper <= gx.lower:
                    break
                if count_roots(g, lo, hi) == 1:
                    return 0
                gx, gy = gx.bisect(), gy.bisect()
                lo, hi = min(gx.lower, gy.lower), max(gx.upper, gy.upper)
            x, y = gx, gy
    while True:
        if x.upper <= y.lower:
            return -1
        if y.upper <= x.lower:
            return 1
        # distinct roots: shrink the wider interval until they separate
        if x.width >= y.width:
            x = x.bisect()
        else:
            y = y.bisect()


def _isolate(p: IntPoly, bound: Fraction) -> list[RealRoot]:
    """All real roots of squarefree ``p`` in (-bound, bound], descending."""
    out: list[RealRoot] = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        c = count_roots(p, a, b)
        if c == 0:
            continue
        if c == 1:
            out.append(RealRoot(p, a, b))
            continue
        mid = (a + b) / 2
        stack.append((a, mid))
        stack.append((mid, b))
    out.sort(key=lambda r: r.upper, reverse=True)
    return out


@dataclass(frozen=True)
class Spectrum:
    """Distinct real roots of a polynomial with multiplicities, descending."""

    poly: IntPoly
    roots: tuple[RealRoot, ...]
    multiplicities: tuple[int, ...]

    @classmethod
    def of(cls, p: IntPoly, bound: int | None = None) -> "Spectrum":
        parts = squarefree_decomposition(p)
        if bound is None:
            bound = root_bound(p)
        roots: list[tuple[RealRoot, int]] = []
        for f, mult in parts:
            if f.degree < 1:
                continue
            for r in _isolate(f.primitive(), Fraction(bound)):
                roots.append((r, mult))
        # intervals from different factors can overlap; a root never repeats
        ordered = _sort_exact(roots)
        return cls(p, tuple(r for r, _ in ordered), tuple(m for _, m in ordered))

    def distinct_index(self, k: int) -> int:
        """Index into ``roots`` of the k-th largest eigenvalue counted with multiplicity."""
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        seen = 0
        for i, m in enumerate(self.multiplicities):
            seen += m
            if seen >= k:
                return i
        raise ValueError(f"k={k} exceeds the number of real roots {seen}")

    def kth(self, k: int) -> RealRoot:
        return self.roots[self.distinct_index(k)]


def _sort_exact(roots: list[tuple[RealRoot, int]]) -> list[tuple[RealRoot, int]]:
    # insertion sort with exact comparisons; lists are short
    out: list[tuple[RealRoot, int]] = []
    for r, m in roots:
        i = len(out)
        while i > 0 and compare_roots(out[i - 1][0], r) < 0:
            i -= 1
        out.insert(i, (r, m))
    return out


@lru_cache(maxsize=2048)
def _graph_spectrum(g: Graph) -> Spectrum:
    # adjacency eigenvalues lie in [-maxdeg, maxdeg]
    bound = max(g.degrees(), default=0) + 1
    return Spectrum.of(char_poly(g), bound)


def graph_spectrum(g: Graph) -> Spectrum:
    if g.n == 0:
        raise ValueError("the null graph has no eigenvalues")
    return _graph_spectrum(g)


@dataclass(frozen=True)
class EigenInterval:
    root: RealRoot
    k: int
    multiplicity: int
    graph_code: bytes

    @property
    def lower(self) -> Fraction:
        return self.root.lower

    @property
    def upper(self) -> Fraction:
        return self.root.upper

    @property
    def exact(self) -> bool:
        return self.root.exact

    def __float__(self) -> float:
        return float(self.root)

    def to_json(self) -> dict:
        return {"k": self.k, "multiplicity": self.multiplicity, **self.root.to_json()}


def kth_eigenvalue(g: Graph, k: int, width: Fraction = DEFAULT_WIDTH) -> EigenInterval:
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be in 1..{g.n}, got {k}")
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    spec = graph_spectrum(g)
    i = spec.distinct_index(k)
    return EigenInterval(spec.roots[i].refined(width), k, spec.multiplicities[i], canonical_code(g))


def spectral_radius(g: Graph) -> RealRoot:
    return graph_spectrum(g).roots[0]


def all_eigenvalues(g: Graph, width: Fraction = DEFAULT_WIDTH) -> list[EigenInterval]:
    spec = graph_spectrum(g)
    code = canonical_code(g)
    out = []
    k = 1
    for r, m in zip(spec.roots, spec.multiplicities):
        out.append(EigenInterval(r.refined(Fraction(width)), k, m, code))
        k += m
    return out


def compare_radii(a: Graph, b: Graph) -> int:
    if a.n == 0 or b.n == 0:
        raise ValueError("compare_radii needs nonempty graphs")
    return compare_roots(spectral_radius(a), spectral_radius(b))


# ---------------------------------------------------------------------------
# thresholds


@dataclass(frozen=True)
class AlgebraicThreshold:
    name: str
    minimal_poly: IntPoly
    lower: Fraction
    upper: Fraction

    def as_root(self) -> RealRoot:
        return RealRoot(self.minimal_poly, self.lower, self.upper)


TWO = AlgebraicThreshold("two", IntPoly((-2, 1)), Fraction(1), Fraction(2))
HOFFMAN = AlgebraicThreshold("hoffman", IntPoly((-1, 0, -4, 0, 1)), Fraction(2), Fraction(21, 10))
THREE_OVER_SQRT2 = AlgebraicThreshold("three_over_sqrt2", IntPoly((-9, 0, 2)), Fraction(21, 10), Fraction(22, 10))
THRESHOLDS = (TWO, HOFFMAN, THREE_OVER_SQRT2)

BELOW_TWO = "below_two"
EXACTLY_TWO = "exactly_two"
TWO_TO_HOFFMAN = "two_to_hoffman"
HOFFMAN_TO_3SQRT2HALF = "hoffman_to_3sqrt2half"
ABOVE = "above"


def compare_to_threshold(x: RealRoot, t: AlgebraicThreshold) -> int:
    return compare_roots(x, t.as_root())


def classify_root(x: RealRoot) -> str:
    c2 = compare_to_threshold(x, TWO)
    if c2 < 0:
        return BELOW_TWO
    if c2 == 0:
        return EXACTLY_TWO
    ch = compare_to_threshold(x, HOFFMAN)
    if ch == 0:
        raise ArithmeticError("spectral radius equal to the Hoffman limit")
    if ch < 0:
        return TWO_TO_HOFFMAN
    if compare_to_threshold(x, THREE_OVER_SQRT2) < 0:
        return HOFFMAN_TO_3SQRT2HALF
    return ABOVE


def threshold_classify(g: Graph) -> str:
    if g.n == 0 or not g.is_connected():
        raise ValueError("threshold_classify needs a connected graph")
    return classify_root(spectral_radius(g))


# ---------------------------------------------------------------------------
# structural classes of small index

G_LT2 = "G_lt2"
G_EQ2 = "G_eq2"
G_2_TO_H = "G_2_to_h"

_CLASS_OF_THRESHOLD = {G_LT2: BELOW_TWO, G_EQ2: EXACTLY_TWO, G_2_TO_H: TWO_TO_HOFFMAN}


def class_threshold(cls: str) -> str:
    return _CLASS_OF_THRESHOLD[cls]


@dataclass(frozen=True)
class TreeShape:
    """Shape of a tree with at most two branch vertices of degree 3 (or a star centre)."""

    kind: str  # "path", "spider", "hshape"
    arms: tuple[int, ...]  # spider: sorted arm lengths; hshape: (a1, a2, b, c1, c2)


def tree_shape(g: Graph) -> TreeShape | None:
    if g.n == 0 or not g.is_connected() or g.num_edges != g.n - 1:
        return None
    degs = g.degrees()
    big = [v for v in range(g.n) if degs[v] >= 3]
    if not big:
        return TreeShape("path", (g.n,))
    if len(big) == 1:
        v = big[0]
        arms = sorted(_arm_end(g, u, v)[1] for u in iter_bits(g.adj[v]))
        return TreeShape("spider", tuple(arms))
    if len(big) == 2 and all(degs[v] == 3 for v in big):
        v, w = big
        left, right = [], []
        middle = None
        for u in iter_bits(g.adj[v]):
            end, length = _arm_end(g, u, v)
            if end == w:
                middle = length
            else:
                left.append(length)
        for u in iter_bits(g.adj[w]):
            end, length = _arm_end(g, u, w)
            if end != v:
                right.append(length)
        if middle is None:
            return None
        left.sort()
        right.sort()
        return TreeShape("hshape", (left[0], left[1], middle, right[0], right[1]))
    return None


def _arm_end(g: Graph, start: int, prev: int) -> tuple[int, int]:
    length = 1
    while g.degree(start) == 2:
        nxt = next(u for u in iter_bits(g.adj[start]) if u != prev)
        prev, start = start, nxt
        length += 1
    return start, length


def spider_spec(a: int, b: int, c: int) -> FamilySpec:
    a, b, c = sorted((a, b, c))
    return OpenQuipu((a,), (b,), b + c + 1)


def hshape_spec(a1: int, a2: int, b: int, c1: int, c2: int) -> FamilySpec:
    """Spine a1 + b + c1 edges, pendant a2 at a1 and pendant c2 at a1 + b."""
    return OpenQuipu((a2, c2), (a1, a1 + b), a1 + b + c1 + 1)


_H_SPORADIC = {(1, 1, 2), (2, 4, 2), (2, 5, 3), (3, 7, 3), (3, 8, 4)}


def _b_star(a: int, c: int) -> int:
    if a == 1:
        return c
    if a == 2:
        return c + 3
    return a + c + 2


def _in_h_family(a: int, b: int, c: int) -> bool:
    if (a, b, c) in _H_SPORADIC:
        return True
    # a = c = 1 is the index-2 tree D~, not part of the family
    return a > 0 and c > 0 and (a, c) != (1, 1) and b >= _b_star(a, c)


def _h_params(arms: tuple[int, ...]) -> list[tuple[int, int, int]]:
    """(a, b, c) readings of an H-shape as (a,1 | b | 1,c), both orientations."""
    l1, l2, b, r1, r2 = arms
    if l1 != 1 or r1 != 1:
        return []
    return [(l2, b, r2), (r2, b, l2)]


@dataclass(frozen=True)
class ClassMatch:
    cls: str
    witness: FamilySpec

    def to_json(self) -> dict:
        return {"class": self.cls, "witness": render(self.witness)}


def structural_class_lookup(g: Graph) -> ClassMatch | None:
    if g.n == 0 or not g.is_connected():
        raise ValueError("structural_class_lookup needs a connected graph")
    degs = g.degrees()
    if g.num_edges == g.n and all(d == 2 for d in degs):
        return ClassMatch(G_EQ2, Cycle(g.n))
    shape = tree_shape(g)
    if shape is None:
        return None
    if shape.kind == "path":
        return ClassMatch(G_LT2, Path(g.n))
    if shape.kind == "spider":
        arms = shape.arms
        if len(arms) == 4:
            return ClassMatch(G_EQ2, Star(4)) if arms == (1, 1, 1, 1) else None
        if len(arms) != 3:
            return None
        a, b, c = arms
        spec = spider_spec(a, b, c)
        if (a, b) == (1, 1) or (a, b, c) in {(1, 2, 2), (1, 2, 3), (1, 2, 4)}:
            return ClassMatch(G_LT2, spec)
        if (a, b, c) in {(2, 2, 2), (1, 2, 5), (1, 3, 3)}:
            return ClassMatch(G_EQ2, spec)
        if (
            ((a, b) == (1, 2) and c >= 6)
            or (a == 1 and b >= 3 and c >= 4)
            or ((a, b) == (2, 2) and c >= 3)
            or (a, b, c) == (2, 3, 3)
        ):
            return ClassMatch(G_2_TO_H, spec)
        return None
    arms = shape.arms
    spec = hshape_spec(*arms)
    if arms[0] == arms[1] == arms[3] == arms[4] == 1:
        return ClassMatch(G_EQ2, spec)
    if any(_in_h_family(a, b, c) for a, b, c in _h_params(arms)):
        return ClassMatch(G_2_TO_H, spec)
    return None


# ---------------------------------------------------------------------------
# section-four claims


@dataclass
class Claim:
    claim: str
    params: dict
    verdict: bool
    intervals: dict

    def to_json(self) -> dict:
        return {"claim": self.claim, "params": self.params, "verdict": self.verdict, "intervals": self.intervals}


@dataclass
class LocationReport:
    claims: list[Claim]

    @property
    def ok(self) -> bool:
        return all(c.verdict for c in self.claims)

    @property
    def failures(self) -> list[Claim]:
        return [c for c in self.claims if not c.verdict]

    def to_json(self) -> dict:
        return {"ok": self.ok, "claims": [c.to_json() for c in self.claims]}


def hn(n: int) -> Graph:
    return build_family(Hn(n))


def second_eigenvalue_class(n: int) -> str:
    """'below_two', 'exactly_two' or 'two_to_hoffman' (or 'other') for lambda_2(H_n)."""
    x = graph_spectrum(hn(n)).kth(2)
    c2 = compare_to_threshold(x, TWO)
    if c2 < 0:
        return BELOW_TWO
    if c2 == 0:
        return EXACTLY_TWO
    return TWO_TO_HOFFMAN if compare_to_threshold(x, HOFFMAN) < 0 else "other"


def expected_second_class(n: int) -> str:
    if n < 15:
        return BELOW_TWO
    return EXACTLY_TWO if n == 15 else TWO_TO_HOFFMAN


def hshape_trees_of_order(n: int) -> list[tuple[int, int, int, int, int]]:
    """Arm tuples (a1 <= a2, b, c1 <= c2) of all H-shape trees on n vertices, one per iso class."""
    out = set()
    total = n - 1  # edges
    for b in range(1, total - 3):
        rest = total - b
        for a1 in range(1, rest):
            for a2 in range(a1, rest):
                for c1 in range(1, rest):
                    c2 = rest - a1 - a2 - c1
                    if c2 < c1:
                        continue
                    key = min((a1, a2, b, c1, c2), (c1, c2, b, a1, a2))
                    out.add(key)
    return sorted(out)


def closed_quipus_of_order(nu: int) -> list[Graph]:
    """One graph per isomorphism class of closed quipus on ``nu`` vertices (at least one pendant path)."""
    seen: dict[bytes, Graph] = {}
    for g in range(3, nu):
        extra = nu - g
        for spec in _cq_specs(g, extra):
            graph = build_family(spec)
            seen.setdefault(canonical_code(graph), graph)
    return list(seen.values())


def _cq_specs(g: int, extra: int) -> Iterable[ClosedQuipu]:
    # branch lengths summing to ``extra`` placed at increasing cycle positions
    def place(pos: int, left: int, lengths: list, positions: list):
        if left == 0:
            yield ClosedQuipu(tuple(lengths), tuple(positions), g)
            return
        for p in range(pos, g):
            for ln in range(1, left + 1):
                yield from place(p + 1, left - ln, lengths + [ln], positions + [p])

    # fix the first branch at position 0 by rotation
    for ln in range(1, extra + 1):
        yield from place(1, extra - ln, [ln], [0])


def _iv(x: RealRoot) -> dict:
    return x.refined(Fraction(1, 10**6)).to_json()


def eigen_location_suite(n_range: Sequence[int]) -> LocationReport:
    ns = sorted(set(n_range))
    if not ns or ns[0] < 10 or ns[-1] > 40:
        raise ValueError("n_range must lie within 10..40")
    claims: list[Claim] = []
    for n in ns:
        s = graph_spectrum(hn(n))
        l3 = s.kth(3)
        claims.append(Claim("third_below_two", {"n": n}, compare_to_threshold(l3, TWO) < 0, {"lambda3": _iv(l3)}))
        got = second_eigenvalue_class(n)
        claims.append(
            Claim("second_location", {"n": n, "expected": expected_second_class(n), "found": got},
                  got == expected_second_class(n), {"lambda2": _iv(s.kth(2))})
        )
        rho = s.roots[0]
        cls = classify_root(rho)
        want = HOFFMAN_TO_3SQRT2HALF if n >= 12 else ABOVE
        claims.append(Claim("radius_window", {"n": n, "class": cls}, cls == want, {"rho": _iv(rho)}))
        nxt = spectral_radius(hn(n + 1))
        claims.append(
            Claim("radius_decreasing", {"n": n}, compare_roots(rho, nxt) > 0, {"rho_n": _iv(rho), "rho_n+1": _iv(nxt)})
        )
        if n % 2 == 1 and n >= 13:
            s_ = (n - 7) // 2
            lolli = spectral_radius(build_family(Lollipop(1, 2 * s_)))
            claims.append(
                Claim("lollipop_matches_radius", {"n": n, "g": 2 * s_}, compare_roots(lolli, rho) == 0, {"rho": _iv(rho)})
            )
        if n <= 16:
            others = [a for a in hshape_trees_of_order(n) if min(a) >= 2 and a != (2, 2, n - 9, 2, 2)]
            ok = all(compare_roots(spectral_radius(build_family(hshape_spec(*a))), rho) > 0 for a in others)
            claims.append(Claim("hn_minimal_among_all_long_segments", {"n": n, "competitors": len(others)}, ok, {}))
    claims += _lollipop_claims()
    claims += _girth_claims()
    claims += _quipu_chain_claims()
    return LocationReport(claims)


def _lollipop_claims() -> list[Claim]:
    out = []
    r10, r11 = spectral_radius(hn(10)), spectral_radius(hn(11))
    c3 = spectral_radius(build_family(Lollipop(1, 3)))
    c4 = spectral_radius(build_family(Lollipop(1, 4)))
    out.append(Claim("lollipop_order4_equals_rho10", {}, compare_roots(c3, r10) == 0, {"rho": _iv(c3)}))
    out.append(Claim("lollipop_order5_equals_rho11", {}, compare_roots(c4, r11) == 0, {"rho": _iv(c4)}))
    for nu in range(4, 11):
        lol = spectral_radius(build_family(Lollipop(1, nu - 1)))
        others = [g for g in closed_quipus_of_order(nu) if canonical_code(g) != canonical_code(build_family(Lollipop(1, nu - 1)))]
        minimal = all(compare_radii(g, build_family(Lollipop(1, nu - 1))) > 0 for g in others)
        window = compare_to_threshold(lol, HOFFMAN) > 0 and compare_roots(lol, r10) <= 0
        out.append(Claim("lollipop_minimal_closed_quipu", {"order": nu, "competitors": len(others)}, minimal and window, {"rho": _iv(lol)}))
    return out


def _girth_claims() -> list[Claim]:
    out = []
    r11, r12, r13 = (spectral_radius(hn(n)) for n in (11, 12, 13))
    out.append(Claim("girth4_floor", {}, compare_roots(spectral_radius(build_family(Lollipop(1, 4))), r11) == 0, {}))
    six = [ClosedQuipu((2,), (0,), 6), ClosedQuipu((1, 1), (0, 1), 6), ClosedQuipu((1, 1), (0, 2), 6), ClosedQuipu((1, 1), (0, 3), 6)]
    # the floor is rho_11 itself (attained by CQ[g=6;0:2]); it must clear rho_12
    rs = [spectral_radius(build_family(s)) for s in six]
    ok = all(compare_roots(r, r11) >= 0 for r in rs) and compare_roots(r11, r12) > 0
    out.append(Claim("girth6_floor", {"graphs": [render(s) for s in six]}, ok, {render(s): _iv(r) for s, r in zip(six, rs)}))
    out.append(Claim("girth6_lollipop_rho13", {}, compare_roots(spectral_radius(build_family(Lollipop(1, 6))), r13) == 0, {}))
    return out


def _quipu_chain_claims() -> list[Claim]:
    out = []
    chain = [spectral_radius(build_family(ClosedQuipu((1, 2), (0, s), 2 * s))) for s in range(2, 7)]
    dec = all(compare_roots(a, b) > 0 for a, b in zip(chain, chain[1:]))
    last = chain[-1]
    above = compare_to_threshold(last, THREE_OVER_SQRT2) > 0
    approx = abs(float(last.refined(Fraction(1, 10**8))) - 2.1215) < 1e-4
    out.append(Claim("quipu_chain_decreasing", {"s": [2, 3, 4, 5, 6]}, dec and above and approx, {"last": _iv(last)}))
    # rotating the far branch toward the near one raises the radius
    for s_, t, g in [(1, 1, 8), (1, 2, 8), (2, 2, 10), (1, 3, 9), (2, 3, 12)]:
        rs = [spectral_radius(build_family(ClosedQuipu((s_, t), (0, k), g))) for k in range(1, g // 2 + 1)]
        ok = all(compare_roots(a, b) > 0 for a, b in zip(rs, rs[1:]))
        out.append(Claim("branch_distance_monotone", {"s": s_, "t": t, "g": g}, ok, {}))
    # a path on 15 vertices with a 2-edge pendant at vertex 8 sits just above rho_15
    p = spectral_radius(build_family(OpenQuipu((2,), (8,), 15)))
    approx = abs(float(p.refined(Fraction(1, 10**8))) - 2.0904) < 1e-4
    out.append(Claim("girth14_tail_floor", {}, approx and compare_roots(p, spectral_radius(hn(15))) > 0, {"rho": _iv(p)}))
    return out


def interlacing_holds(g: Graph, v: int) -> bool:
    """lambda_k(G) >= lambda_k(G - v) >= lambda_{k+1}(G) for every k."""
    if g.n < 2:
        return True
    big = graph_spectrum(g)
    small = graph_spectrum(delete_vertex(g, v))
    for k in range(1, g.n):
        a, b, c = big.kth(k), small.kth(k), big.kth(k + 1)
        if compare_roots(a, b) < 0 or compare_roots(b, c) < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# exact radius bounds without eigenvalues


def shifted_inverse(g: Graph, b: Fraction) -> list[list[Fraction]] | None:
    """(bI - A)^{-1} when bI - A is positive definite, else None."""
    n = g.n
    m = [[Fraction(0)] * (2 * n) for _ in range(n)]
    for i in range(n):
        m[i][i] = Fraction(b)
        m[i][n + i] = Fraction(1)
        for j in iter_bits(g.adj[i]):
            m[i][j] = Fraction(-1)
    for col in range(n):
        piv = m[col][col]
        # Gauss-Jordan without pivoting; a nonpositive pivot rules out definiteness
        if piv <= 0:
            return None
        inv = 1 / piv
        row = [x * inv for x in m[col]]
        m[col] = row
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], row)]
    return [r[n:] for r in m]


def _ldl_signs(g: Graph, b: Fraction) -> tuple[bool, bool]:
    """(positive definite, positive semidefinite) for bI - A."""
    n = g.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = Fraction(b)
        for j in iter_bits(g.adj[i]):
            m[i][j] = Fraction(-1)
    pd = True
    alive = list(range(n))
    while alive:
        k = alive.pop(0)
        piv = m[k][k]
        if piv < 0:
            return False, False
        if piv == 0:
            pd = False
            if any(m[k][j] for j in alive):
                return False, False
            continue
        for i in alive:
            if m[i][k]:
                f = m[i][k] / piv
                row_k = m[k]
                row_i = m[i]
                for j in alive:
                    if row_k[j]:
                        row_i[j] -= f * row_k[j]
    return pd, True


def radius_below(g: Graph, b) -> bool:
    """rho(g) < b, decided exactly."""
    return g.n == 0 or _ldl_signs(g, Fraction(b))[0]


def radius_at_most(g: Graph, b) -> bool:
    """rho(g) <= b, decided exactly."""
    return g.n == 0 or _ldl_signs(g, Fraction(b))[1]
