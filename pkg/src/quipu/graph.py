"""Simple undirected graphs stored as per-vertex neighbor bitsets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for {n} vertices")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                r ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return Graph, (self.n, self.adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, [0] * n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # queries

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertices relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in iter_bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    row |= 1 << j
            adj.append(row)
        return Graph(len(vertices), adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def adjacency_matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.adj]


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------------------
# surgery


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return g.induced([u for u in range(g.n) if u != v])


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    drop = set(vs)
    for v in drop:
        _check_vertex(g, v)
    return g.induced([u for u in range(g.n) if u not in drop])


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    _check_edge(g, u, v)
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, adj)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, adj)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``h``'s vertices are shifted to ``g.n .. g.n + h.n - 1``."""
    return Graph(g.n + h.n, list(g.adj) + [row << g.n for row in h.adj])


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph.empty(0)
    for h in graphs:
        out = disjoint_union(out, h)
    return out


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace ``uv`` by ``u-z-v`` with the new vertex ``z = g.n``."""
    _check_edge(g, u, v)
    z = g.n
    adj = list(g.adj) + [(1 << u) | (1 << v)]
    adj[u] = (adj[u] & ~(1 << v)) | (1 << z)
    adj[v] = (adj[v] & ~(1 << u)) | (1 << z)
    return Graph(g.n + 1, adj)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in 0..{g.n - 1}")


def _check_edge(g: Graph, u: int, v: int) -> None:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} not in graph")


# ---------------------------------------------------------------------------
# statistics


@dataclass(frozen=True)
class StructuralStats:
    degree_sequence: tuple[int, ...]
    girth: int | None
    triangles: int
    quadrangles: int
    is_bipartite: bool
    components: tuple[tuple[int, ...], ...]
    edge_type_counts: dict[tuple[int, int], int]


def girth(g: Graph) -> int | None:
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for u in iter_bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    c = dist[u] + dist[v] + 1
                    if best is None or c < best:
                        best = c
    return best


def triangle_count(g: Graph) -> int:
    total = 0
    for u, v in g.edges():
        total += (g.adj[u] & g.adj[v]).bit_count()
    return total // 3


def quadrangle_count(g: Graph) -> int:
    total = 0
    for u, w in combinations(range(g.n), 2):
        c = (g.adj[u] & g.adj[w]).bit_count()
        total += c * (c - 1) // 2
    return total // 2


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def edge_type_counts(g: Graph) -> dict[tuple[int, int], int]:
    deg = g.degrees()
    counts: Counter = Counter()
    for u, v in g.edges():
        a, b = sorted((deg[u], deg[v]))
        counts[(a, b)] += 1
    return dict(counts)


def structural_stats(g: Graph) -> StructuralStats:
    return StructuralStats(
        degree_sequence=tuple(sorted(g.degrees(), reverse=True)),
        girth=girth(g),
        triangles=triangle_count(g),
        quadrangles=quadrangle_count(g),
        is_bipartite=is_bipartite(g),
        components=tuple(tuple(c) for c in g.components()),
        edge_type_counts=edge_type_counts(g),
    )


def matchings_brute(g: Graph, k: int) -> int:
    """Number of k-sets of pairwise disjoint edges, by backtracking."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    edges = g.edges()

    def count(start: int, used: int, left: int) -> int:
        if left == 0:
            return 1
        total = 0
        for i in range(start, len(edges) - left + 1):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            total += count(i + 1, used | 1 << u | 1 << v, left - 1)
        return total

    return count(0, 0, k)


def closed_walks(g: Graph, k: int) -> int:
    """trace(A**k) via repeated adjacency-vector products."""
    if k < 1:
        raise ValueError("walk length must be positive")
    nbrs = [g.neighbors(v) for v in range(g.n)]
    total = 0
    for s in range(g.n):
        w = [0] * g.n
        w[s] = 1
        for _ in range(k):
            w = [sum(w[u] for u in nbrs[v]) for v in range(g.n)]
        total += w[s]
    return total


# ---------------------------------------------------------------------------
# canonical codes


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-complete invariant.

    Trees use a centre-rooted AHU string, unicyclic graphs the least
    rotation/reflection of their hanging-tree strings around the cycle,
    anything else an individualization-refinement search.
    """
    if g.n == 0:
        return b""
    comps = g.components()
    if len(comps) == 1:
        return _connected_code(g).encode()
    codes = sorted(_connected_code(g.induced(c)) for c in comps)
    return "+".join(codes).encode()


def component_codes(g: Graph) -> list[tuple[bytes, list[int]]]:
    return [(_connected_code(g.induced(c)).encode(), c) for c in g.components()]


def _connected_code(g: Graph) -> str:
    m = g.num_edges
    if m == g.n - 1:
        return "T" + tree_code(g)
    if m == g.n:
        return "U" + _unicyclic_code(g)
    return "G" + _general_code(g)


def _rooted_code(g: Graph, root: int, blocked: int = 0) -> str:
    """AHU string of the tree hanging from ``root``, not entering ``blocked``."""
    order = [root]
    parent = {root: -1}
    stack = [root]
    while stack:
        v = stack.pop()
        for u in iter_bits(g.adj[v] & ~blocked):
            if u != parent[v] and u not in parent:
                parent[u] = v
                order.append(u)
                stack.append(u)
    children: dict[int, list[str]] = {v: [] for v in order}
    codes = {}
    for v in reversed(order):
        code = "(" + "".join(sorted(children[v])) + ")"
        codes[v] = code
        if parent[v] >= 0:
            children[parent[v]].append(code)
    return codes[root]


def tree_centers(g: Graph) -> list[int]:
    if g.n <= 2:
        return list(range(g.n))
    deg = g.degrees()
    leaves = [v for v in range(g.n) if deg[v] <= 1]
    remaining = g.n
    removed = 0
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for v in leaves:
            removed |= 1 << v
            for u in iter_bits(g.adj[v] & ~removed):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        leaves = nxt
    return sorted(leaves)


def tree_code(g: Graph) -> str:
    if g.n == 0:
        return ""
    return min(_rooted_code(g, c) for c in tree_centers(g))


def cycle_of_unicyclic(g: Graph) -> list[int]:
    """Vertices of the unique cycle of a connected unicyclic graph, in cyclic order."""
    deg = g.degrees()
    alive = (1 << g.n) - 1
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive &= ~(1 << v)
        for u in iter_bits(g.adj[v] & alive):
            deg[u] -= 1
            if deg[u] == 1:
                stack.append(u)
    core = list(iter_bits(alive))
    start = core[0]
    cycle = [start]
    prev, cur = -1, start
    while True:
        nxt = [u for u in iter_bits(g.adj[cur] & alive) if u != prev]
        step = nxt[0]
        if step == start:
            break
        cycle.append(step)
        prev, cur = cur, step
        if len(cycle) > len(core):
            raise GraphError("graph is not unicyclic")
    return cycle


def _unicyclic_code(g: Graph) -> str:
    cycle = cycle_of_unicyclic(g)
    mask = 0
    for v in cycle:
        mask |= 1 << v
    seq = [_rooted_code(g, v, blocked=mask & ~(1 << v)) for v in cycle]
    k = len(seq)
    best = None
    for s in (seq, seq[::-1]):
        for i in range(k):
            rot = s[i:] + s[:i]
            if best is None or rot < best:
                best = rot
    return "|".join(best)


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Colour refinement with isomorphism-invariant relabelling."""
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(g.adj[v]))))
            for v in range(g.n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _general_code(g: Graph) -> str:
    start = _refine(g, [g.degree(v) for v in range(g.n)])
    best: list[str | None] = [None]

    def leaf_code(colors: list[int]) -> str:
        order = sorted(range(g.n), key=lambda v: colors[v])
        pos = {v: i for i, v in enumerate(order)}
        rows = []
        for v in order:
            bits = sum(1 << pos[u] for u in iter_bits(g.adj[v]))
            rows.append(format(bits, "x"))
        return ",".join(rows)

    def search(colors: list[int]) -> None:
        cells = Counter(colors)
        target = None
        for c in sorted(cells):
            if cells[c] > 1:
                target = c
                break
        if target is None:
            code = leaf_code(colors)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        reps: list[int] = []
        for v in range(g.n):
            if colors[v] != target:
                continue
            # twins in one cell are swapped by an automorphism: try one of them
            if any(g.adj[v] & ~(1 << r) == g.adj[r] & ~(1 << v) for r in reps):
                continue
            reps.append(v)
            # split v off its cell: scale colours so v sits just below its cell
            tweaked = [2 * c + 1 for c in colors]
            tweaked[v] -= 1
            search(_refine(g, tweaked))

    search(start)
    return f"{g.n}:" + best[0]


# ---------------------------------------------------------------------------
# graph6


def to_graph6(g: Graph) -> str:
    n = g.n
    out = _g6_size(n)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


def _g6_size(n: int) -> list[int]:
    if n < 63:
        return [n + 63]
    if n < 258048:
        return [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    raise GraphError("graph6 supports at most 68719476735 vertices; this codec stops at 258047")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in s]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise GraphError(f"invalid graph6 string {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("graph6 size field too large or truncated")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for d in body:
        for shift in range(5, -1, -1):
            bits.append(d >> shift & 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)
