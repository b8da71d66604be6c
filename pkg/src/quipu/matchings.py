"""Closed-form 2- and 3-matching counts and the H-shape classes."""

from __future__ import annotations

from math import comb

from .graph import Graph, triangle_count
from .spectral import tree_shape


def m2_closed_form(g: Graph, form: str = "general") -> int:
    """Number of 2-matchings.

    ``form`` selects the general degree formula, ``"tree"`` (trees of maximum
    degree 3) or ``"closed_quipu"`` (connected unicyclic, degree-3 vertices on
    the cycle).
    """
    degs = g.degrees()
    nu = g.n
    if form == "general":
        return comb(g.num_edges, 2) - sum(comb(d, 2) for d in degs)
    k = degs.count(3)
    if form == "tree":
        if g.num_edges != nu - 1 or not g.is_connected() or max(degs, default=0) != 3:
            raise ValueError("tree form needs a tree of maximum degree 3")
        return (nu * nu - 5 * nu) // 2 + 3 - k
    if form == "closed_quipu":
        if not _is_closed_quipu(g):
            raise ValueError("closed-quipu form needs a closed quipu")
        return (nu * nu - 3 * nu) // 2 - k
    raise ValueError(f"unknown form {form!r}")


def _is_closed_quipu(g: Graph) -> bool:
    if g.n < 3 or not g.is_connected() or g.num_edges != g.n:
        return False
    degs = g.degrees()
    if max(degs) > 3:
        return False
    # strip leaves; what remains is the cycle, which must hold every degree-3 vertex
    alive = (1 << g.n) - 1
    deg = list(degs)
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive &= ~(1 << v)
        for u in range(g.n):
            if g.adj[v] >> u & 1 and alive >> u & 1:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    return all(alive >> v & 1 for v in range(g.n) if degs[v] == 3)


def m3_closed_form(g: Graph) -> int:
    degs = g.degrees()
    e = g.num_edges
    pairs = sum(comb(d, 2) for d in degs)
    triples = sum(comb(d, 3) for d in degs)
    adjacent = sum((degs[u] - 1) * (degs[v] - 1) for u, v in g.edges())
    return comb(e, 3) - (e - 2) * pairs + 2 * triples + adjacent - triangle_count(g)


# Fig. 3 classes keyed by (middle long?, sorted side patterns); a side is the
# number of its two arms with at least two edges.
_HSHAPE_CLASSES = {
    (True, (0, 0)): 1,
    (False, (0, 0)): 2,
    (True, (0, 1)): 3,
    (True, (0, 2)): 4,
    (True, (1, 1)): 5,
    (False, (0, 1)): 6,
    (True, (1, 2)): 7,
    (False, (1, 1)): 8,
    (False, (0, 2)): 9,
    (True, (2, 2)): 10,
    (False, (1, 2)): 11,
    (False, (2, 2)): 12,
}

M3_OFFSETS = {1: 0, 2: 1, 3: 1, 4: 2, 5: 2, 6: 2, 7: 3, 8: 3, 9: 3, 10: 4, 11: 4, 12: 5}


def hshape_arms(t: Graph) -> tuple[int, int, int, int, int]:
    shape = tree_shape(t)
    if shape is None or shape.kind != "hshape":
        raise ValueError("not an H-shape tree")
    return shape.arms


def hshape_class(t: Graph) -> int:
    a1, a2, b, c1, c2 = hshape_arms(t)
    left = (a1 >= 2) + (a2 >= 2)
    right = (c1 >= 2) + (c2 >= 2)
    return _HSHAPE_CLASSES[b >= 2, tuple(sorted((left, right)))]


def f_cubic(n: int) -> int:
    return (n**3 - 12 * n**2 + 35 * n) // 6


def m3_predict_hshape(t: Graph) -> int:
    return f_cubic(t.n) + M3_OFFSETS[hshape_class(t)]
