"""Exact adjacency characteristic polynomials.

Two engines: a pendant-vertex reduction with memoization by canonical code
(the default), and Berkowitz's division-free determinant algorithm, which
also serves as the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .families import Cycle, FamilySpec, Hn, Lollipop, Path, Tn, Union_, FamilyError
from .graph import (
    Graph,
    canonical_code,
    cycle_of_unicyclic,
    delete_edge,
    delete_vertex,
    delete_vertices,
    iter_bits,
)
from .intpoly import ONE, X, IntPoly

_MEMO: dict[bytes, IntPoly] = {}


def clear_cache() -> None:
    _MEMO.clear()


def char_poly(g: Graph, engine: str = "schwenk") -> IntPoly:
    """det(xI - A(g)) as an IntPoly."""
    if engine == "berkowitz":
        return berkowitz(g.adjacency_matrix())
    if engine != "schwenk":
        raise ValueError(f"unknown engine {engine!r}")
    out = ONE
    for comp in g.components():
        out = out * _connected_poly(g.induced(comp))
    return out


def _connected_poly(g: Graph) -> IntPoly:
    if g.n <= 1:
        return X if g.n == 1 else ONE
    # canonical keys pay off for the sparse families; denser cores are keyed as labelled
    key = canonical_code(g) if g.num_edges <= g.n else b"L" + repr(g.adj).encode()
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    if g.num_edges == g.n - 1:
        out = _tree_poly(g)
    elif g.num_edges == g.n:
        out = _unicyclic_poly(g)
    else:
        out = _reduce_pendant(g)
    _MEMO[key] = out
    return out


def _reduce_pendant(g: Graph) -> IntPoly:
    # phi(G) = x phi(G - v) - phi(G - v - u) for a leaf v with neighbour u
    for v in range(g.n):
        if g.degree(v) == 1:
            u = next(iter_bits(g.adj[v]))
            return X * char_poly(delete_vertex(g, v)) - char_poly(delete_vertices(g, (v, u)))
    return berkowitz(g.adjacency_matrix())


def _unicyclic_poly(g: Graph) -> IntPoly:
    # cutting one cycle edge uw leaves forests on every term:
    # phi(G) = phi(G - uw) - phi(G - u - w) - 2 phi(G - V(C))
    cyc = cycle_of_unicyclic(g)
    u, w = cyc[0], cyc[1]
    return (
        char_poly(delete_edge(g, u, w))
        - char_poly(delete_vertices(g, (u, w)))
        - 2 * char_poly(delete_vertices(g, cyc))
    )


def _tree_poly(g: Graph) -> IntPoly:
    order, parent = [0], [-1] * g.n
    seen = 1
    for v in order:
        for u in iter_bits(g.adj[v] & ~seen):
            seen |= 1 << u
            parent[u] = v
            order.append(u)
    full: list[IntPoly] = [ONE] * g.n  # phi(T_v)
    cut: list[IntPoly] = [ONE] * g.n  # phi(T_v - v)
    for v in reversed(order):
        kids = [u for u in iter_bits(g.adj[v]) if u != parent[v]]
        prefix = [ONE]
        for c in kids:
            prefix.append(prefix[-1] * full[c])
        suffix = ONE
        acc = IntPoly()
        for i in range(len(kids) - 1, -1, -1):
            c = kids[i]
            acc = acc + cut[c] * prefix[i] * suffix
            suffix = suffix * full[c]
        cut[v] = prefix[-1]
        full[v] = X * cut[v] - acc
    return full[0]


def berkowitz(m: Sequence[Sequence[int]]) -> IntPoly:
    """Characteristic polynomial det(xI - M) of a square integer matrix."""
    n = len(m)
    if n == 0:
        return ONE
    p = [1, -m[0][0]]  # high to low
    for k in range(1, n):
        row = m[k][:k]
        col = [m[i][k] for i in range(k)]
        t = [1, -m[k][k]]
        v = col
        for _ in range(k):
            t.append(-sum(a * b for a, b in zip(row, v)))
            v = [sum(m[i][j] * v[j] for j in range(k)) for i in range(k)]
        p = [sum(t[i - j] * p[j] for j in range(min(i, k) + 1)) for i in range(k + 2)]
    return IntPoly(reversed(p))


# ---------------------------------------------------------------------------
# closed forms


def path_poly(n: int) -> IntPoly:
    if n < 0:
        raise ValueError(f"path order must be >= 0, got {n}")
    coeffs = [0] * (n + 1)
    for r in range(n // 2 + 1):
        coeffs[n - 2 * r] = (-1) ** r * comb(n - r, r)
    return IntPoly(coeffs)


def cycle_poly(n: int) -> IntPoly:
    if n < 3:
        raise ValueError(f"cycle order must be >= 3, got {n}")
    coeffs = [0] * (n + 1)
    for r in range(n // 2 + 1):
        coeffs[n - 2 * r] = (-1) ** r * n * comb(n - r, r) // (n - r)
    coeffs[0] -= 2
    return IntPoly(coeffs)


# ---------------------------------------------------------------------------
# Schwenk expansions


@dataclass(frozen=True)
class SchwenkTerm:
    """``coefficient * phi(subgraph)``; ``removed`` lists deleted vertices, ``edge`` a deleted edge.

    Cycles sharing a vertex set share one term, weighted by their number.
    """

    coefficient: IntPoly
    removed: tuple[int, ...]
    edge: tuple[int, int] | None
    subgraph: Graph
    poly: IntPoly


@dataclass(frozen=True)
class SchwenkExpansion:
    reconstruction: IntPoly
    parts: tuple[SchwenkTerm, ...]


def _closing_paths(g: Graph, start: int, target: int, forbid: int) -> dict[int, int]:
    """Count simple paths start -> target by vertex set, grown layer by layer.

    Returns {vertex mask: number of paths} for paths of at least three vertices
    whose interior avoids ``forbid``.
    """
    layer = {(1 << start, start): 1}
    out: dict[int, int] = {}
    while layer:
        nxt: dict[tuple[int, int], int] = {}
        for (mask, x), cnt in layer.items():
            for y in iter_bits(g.adj[x] & ~mask):
                if y == target:
                    if mask.bit_count() >= 2:
                        m = mask | 1 << y
                        out[m] = out.get(m, 0) + cnt
                elif not forbid >> y & 1:
                    key = (mask | 1 << y, y)
                    nxt[key] = nxt.get(key, 0) + cnt
        layer = nxt
    return out


def cycles_through_vertex(g: Graph, v: int) -> dict[tuple[int, ...], int]:
    """Cycles through ``v`` grouped by vertex set: {sorted vertices: count}."""
    out = {}
    for u in iter_bits(g.adj[v]):
        # close back to v through the neighbour u: paths u -> ... -> v
        for mask, cnt in _closing_paths(g, u, v, 0).items():
            out[mask] = out.get(mask, 0) + cnt
    # each cycle was found once per direction
    return {tuple(iter_bits(m)): c // 2 for m, c in out.items()}


def cycles_through_edge(g: Graph, u: int, w: int) -> dict[tuple[int, ...], int]:
    """Cycles containing the edge ``uw`` grouped by vertex set."""
    return {tuple(iter_bits(m)): c for m, c in _closing_paths(g, w, u, 0).items()}


def _term(g: Graph, coefficient: IntPoly, removed=(), edge=None) -> SchwenkTerm:
    sub = delete_edge(g, *edge) if edge else g
    sub = delete_vertices(sub, removed) if removed else sub
    return SchwenkTerm(coefficient, tuple(removed), edge, sub, char_poly(sub))


def _assemble(parts: list[SchwenkTerm]) -> SchwenkExpansion:
    total = IntPoly()
    for t in parts:
        total = total + t.coefficient * t.poly
    return SchwenkExpansion(total, tuple(parts))


def schwenk_vertex(g: Graph, v: int) -> SchwenkExpansion:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph on {g.n} vertices")
    parts = [_term(g, X, (v,))]
    parts += [_term(g, IntPoly((-1,)), (v, u)) for u in iter_bits(g.adj[v])]
    parts += [_term(g, IntPoly((-2 * c,)), cyc) for cyc, c in cycles_through_vertex(g, v).items()]
    return _assemble(parts)


def schwenk_edge(g: Graph, u: int, w: int) -> SchwenkExpansion:
    if not (0 <= u < g.n and 0 <= w < g.n and g.has_edge(u, w)):
        raise ValueError(f"edge {u}-{w} not in graph")
    parts = [_term(g, ONE, edge=(u, w)), _term(g, IntPoly((-1,)), (u, w))]
    parts += [_term(g, IntPoly((-2 * c,)), cyc) for cyc, c in cycles_through_edge(g, u, w).items()]
    return _assemble(parts)


# ---------------------------------------------------------------------------
# lowest terms


def _path_like_low(n: int) -> tuple[int, int]:
    # shared by P_n, T_n and H_n with n = 4s + e
    s, e = divmod(n, 4)
    return [(1, 0), (2 * s + 1, 1), (-1, 0), (-2 * (s + 1), 1)][e]


def lollipop_parity(ell: int, g: int) -> tuple[int, int, int, int]:
    """(s, t, e1, e2) with ell = 4s - 2e1 and g = 4t + 2e2, s, t >= 1."""
    if ell < 2 or ell % 2 or g < 4 or g % 2:
        raise FamilyError(f"lollipop L[l={ell};g={g}] is outside the even parity grid")
    e1 = (ell // 2) % 2
    s = (ell + 2 * e1) // 4
    e2 = (g // 2) % 2
    t = (g - 2 * e2) // 4
    if t < 1:
        raise FamilyError(f"lollipop L[l={ell};g={g}] is outside the even parity grid")
    return s, t, e1, e2


def predicted_lowest_term(spec: FamilySpec) -> tuple[int, int]:
    """Lowest nonzero term of phi(spec) from closed forms, as (coefficient, exponent)."""
    match spec:
        case Path(n) | Tn(n) | Hn(n):
            return _path_like_low(n)
        case Cycle(n):
            k, e = divmod(n, 4)
            if e == 0:
                return -4 * k * k, 2
            return (-4, 0) if e == 2 else (-2, 0)
        case Lollipop(ell, g):
            s, t, e1, e2 = lollipop_parity(ell, g)
            table = {
                (0, 0): (-4 * t * (s + t), 2),
                (0, 1): (-4, 0),
                (1, 0): (2 * t * (2 * s + 2 * t - 1), 2),
                (1, 1): (4, 0),
            }
            return table[e1, e2]
        case Union_(parts):
            coeff, deg = 1, 0
            for p in parts:
                c, d = predicted_lowest_term(p)
                coeff, deg = coeff * c, deg + d
            return coeff, deg
    raise FamilyError(f"no closed-form lowest term for {spec!r}")
