"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored low-to-high: ``coeffs[i]`` is the coefficient of
``lambda**i``.  Every operation returns a new normalized polynomial; the zero
polynomial has an empty coefficient tuple and degree ``-1``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd as igcd
from typing import Iterable, Sequence


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def __reduce__(self):
        return IntPoly, (self.coeffs,)

    # construction helpers

    @classmethod
    def constant(cls, a: int) -> "IntPoly":
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "IntPoly":
        return cls([0] * k + [a])

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> "IntPoly":
        p = ONE
        for r in roots:
            p = p * cls((-r, 1))
        return p

    # basic properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    # arithmetic

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-x for x in self.coeffs)

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "IntPoly | int") -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, a: int) -> "IntPoly":
        return IntPoly(a * x for x in self.coeffs)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by ``lambda**k``."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self.coeffs:
            return ZERO
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = igcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return ZERO
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    # evaluation

    def __call__(self, x):
        return eval_at(self, x)

    # rendering

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "IntPoly":
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be an array")
        return cls(int(x) for x in data)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mon = "x" if i == 1 else f"x^{i}"
                body = mon if a == 1 else f"{a}*{mon}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as IntPoly")


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


# ---------------------------------------------------------------------------
# division


def divmod_exact(p: IntPoly, q: IntPoly) -> tuple[IntPoly, IntPoly] | None:
    """Integer long division; ``None`` as soon as a quotient digit is fractional."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(p.coeffs)
    dq, lq = q.degree, q.lc
    if len(r) - 1 < dq:
        return ZERO, p
    quot = [0] * (len(r) - dq)
    qc = q.coeffs
    for k in range(len(r) - 1 - dq, -1, -1):
        top = r[k + dq]
        if top == 0:
            continue
        a, rem = divmod(top, lq)
        if rem:
            return None
        quot[k] = a
        for j in range(dq + 1):
            r[k + j] -= a * qc[j]
    return IntPoly(quot), IntPoly(r)


def divide_exact(p: IntPoly, q: IntPoly) -> IntPoly | None:
    """Return ``r`` with ``p == q * r`` over the integers, or ``None``."""
    res = divmod_exact(p, q)
    if res is None:
        return None
    quot, rem = res
    return quot if rem.is_zero() else None


def divides(q: IntPoly, p: IntPoly) -> bool:
    return divide_exact(p, q) is not None


def pseudo_rem(p: IntPoly, q: IntPoly) -> IntPoly:
    """``lc(q)**(deg p - deg q + 1) * p mod q`` computed without fractions."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(p.coeffs)
    dq = q.degree
    if len(r) - 1 < dq:
        return p
    lq, qc = q.lc, q.coeffs
    delta = len(r) - 1 - dq
    for k in range(delta, -1, -1):
        top = r[k + dq]
        r = [lq * c for c in r]
        for j in range(dq + 1):
            r[k + j] -= top * qc[j]
        r.pop()
    return IntPoly(r)


def gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if p.is_zero():
        return q.primitive()
    if q.is_zero():
        return p.primitive()
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_rem(a, b)
        a, b = b, r.primitive()
    if a.degree == 0:
        return ONE
    return a.primitive()


def squarefree_part(p: IntPoly) -> IntPoly:
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return ONE
    g = gcd(p, p.derivative())
    q = divide_exact(p.primitive(), g)
    assert q is not None
    return q.primitive()


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Split primitive ``p`` as ``prod f_i**i`` with coprime squarefree ``f_i``.

    Repeated gcd extraction; only factors of positive degree are returned,
    as ``(f_i, i)`` pairs in increasing multiplicity.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    out = []
    rest = p.primitive()
    i = 1
    while rest.degree > 0:
        g = gcd(rest, rest.derivative())
        s = divide_exact(rest, g)
        assert s is not None
        s = s.primitive()
        repeated = gcd(g, s) if g.degree > 0 else ONE
        f = divide_exact(s, repeated)
        assert f is not None
        if f.degree > 0:
            out.append((f.primitive(), i))
        rest = g
        i += 1
    return out


# ---------------------------------------------------------------------------
# evaluation and root counting


def eval_at(p: IntPoly, x) -> Fraction | int:
    """Exact Horner evaluation at an integer or rational point."""
    if isinstance(x, int):
        acc = 0
        for c in reversed(p.coeffs):
            acc = acc * x + c
        return acc
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    acc = 0
    scale = 1
    # homogenized Horner: value = acc / den**deg
    for c in reversed(p.coeffs):
        acc = acc * num + c * scale
        scale *= den
    if not p.coeffs:
        return Fraction(0)
    return Fraction(acc, den ** p.degree)


def sign_at(p: IntPoly, x) -> int:
    """Sign of ``p(x)`` for rational ``x`` without building a Fraction."""
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    acc = 0
    scale = 1
    for c in reversed(p.coeffs):
        acc = acc * num + c * scale
        scale *= den
    return (acc > 0) - (acc < 0)


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm sequence of a squarefree polynomial, reduced to primitive parts."""
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    if p.degree == 0:
        return [p]
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = pseudo_rem(a, b)
        if r.is_zero():
            break
        # prem = lc(b)^(delta+1) * rem; keep the sign of -rem
        delta = a.degree - b.degree
        if b.lc < 0 and (delta + 1) % 2 == 1:
            r = -r
        g = r.content()
        chain.append(IntPoly(-c // g for c in r.coeffs))
    if chain[-1].degree > 0:
        raise ValueError("polynomial is not squarefree")
    return chain


def _variations(signs: Iterable[int]) -> int:
    prev = 0
    v = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def variations_at(chain: Sequence[IntPoly], x) -> int:
    return _variations(sign_at(q, x) for q in chain)


def variations_at_infinity(chain: Sequence[IntPoly], positive: bool) -> int:
    signs = []
    for q in chain:
        s = (q.lc > 0) - (q.lc < 0)
        if not positive and q.degree % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def sturm_count(p: IntPoly, a, b, chain: Sequence[IntPoly] | None = None) -> int:
    """Number of distinct real roots of squarefree ``p`` in ``(a, b]``.

    ``a`` or ``b`` may be ``None`` for minus/plus infinity.
    """
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    if a is not None and b is not None and Fraction(a) >= Fraction(b):
        raise ValueError("sturm_count needs a < b")
    if chain is None:
        chain = sturm_chain(p)
    va = variations_at_infinity(chain, False) if a is None else variations_at(chain, a)
    vb = variations_at_infinity(chain, True) if b is None else variations_at(chain, b)
    return va - vb


def root_bound(p: IntPoly) -> int:
    """Integer ``B`` with every real root of ``p`` in ``(-B, B)`` (Cauchy)."""
    if p.degree < 1:
        return 1
    lc = abs(p.lc)
    m = max(abs(c) for c in p.coeffs[:-1])
    return 1 + -(-m // lc) + 1


def lowest_term(p: IntPoly) -> tuple[int, int]:
    """(coefficient, exponent) of the nonzero monomial of least degree."""
    if p.is_zero():
        raise ValueError("lowest term of the zero polynomial")
    for i, c in enumerate(p.coeffs):
        if c:
            return c, i
    raise AssertionError("unreachable")


def power_sums(p: IntPoly, k_max: int) -> list[int]:
    """Newton power sums ``s_1..s_kmax`` of the roots of monic ``p``."""
    if p.lc != 1:
        raise ValueError("power sums need a monic polynomial")
    n = p.degree
    # e-coefficients: p = x^n + a1 x^(n-1) + ... ; a_i = coeffs[n - i]
    a = [p[n - i] for i in range(n + 1)]
    s = [0] * (k_max + 1)
    for k in range(1, k_max + 1):
        total = -k * a[k] if k <= n else 0
        for i in range(1, k):
            if i <= n:
                total -= a[i] * s[k - i]
        s[k] = total
    return s[1:]
