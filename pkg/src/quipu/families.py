"""Parametric graph families and the compact text notation for them.

Notation::

    P:5            path on 5 vertices (P:0 is the null graph)
    C:6            cycle on 6 vertices
    H:12           H-shape tree OQ[r=8;2:2,5:2]
    T:7            T-shape tree OQ[r=5;2:2]
    D:3            dagger: degree-4 centre, three pendant edges, a 3-edge tail
    S:4            star K_{1,4}
    L[l=1;g=6]     lollipop: 6-cycle with a 1-edge pendant path
    OQ[r=8;2:2,5:2]  path on r vertices, pendant path of 2 edges at 2 and at 5
    CQ[g=6;0:1,3:1]  cycle on g vertices with pendant paths at 0 and 3
    U(P:2,CQ[g=6;0:1,3:1])  disjoint union

Vertices are labelled spine (or cycle) first, then every pendant path in
declaration order, each starting next to its attachment vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import Graph, union_all


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class OpenQuipu:
    """Path on ``r`` vertices with a pendant path of ``lengths[i]`` edges at ``positions[i]``."""

    lengths: tuple[int, ...]
    positions: tuple[int, ...]
    r: int


@dataclass(frozen=True)
class ClosedQuipu:
    lengths: tuple[int, ...]
    positions: tuple[int, ...]
    r: int


@dataclass(frozen=True)
class Dagger:
    m: int


@dataclass(frozen=True)
class Hn:
    n: int


@dataclass(frozen=True)
class Tn:
    n: int


@dataclass(frozen=True)
class Lollipop:
    """Cycle ``C_g`` with a pendant path of ``ell`` edges."""

    ell: int
    g: int


@dataclass(frozen=True)
class Star:
    k: int


@dataclass(frozen=True)
class Union_:
    parts: tuple["FamilySpec", ...]


FamilySpec = Union[Path, Cycle, OpenQuipu, ClosedQuipu, Dagger, Hn, Tn, Lollipop, Star, Union_]


def hn_as_quipu(n: int) -> OpenQuipu:
    return OpenQuipu((2, 2), (2, n - 7), n - 4)


def tn_as_quipu(n: int) -> OpenQuipu:
    return OpenQuipu((2,), (2,), n - 2)


def validate(spec: FamilySpec) -> None:
    match spec:
        case Path(n):
            if n < 0:
                raise FamilyError(f"path order must be >= 0, got {n}")
        case Cycle(n):
            if n < 3:
                raise FamilyError(f"cycle order must be >= 3, got {n}")
        case OpenQuipu(lengths, positions, r):
            _check_branches(lengths, positions)
            if r < 1:
                raise FamilyError(f"spine must have >= 1 vertex, got r={r}")
            for i, m in enumerate(positions):
                if not 0 < m < r - 1:
                    raise FamilyError(f"open quipu position m{i + 1}={m} violates 0 < m < r-1 = {r - 1}")
            _check_increasing(positions)
        case ClosedQuipu(lengths, positions, r):
            _check_branches(lengths, positions)
            if r < 3:
                raise FamilyError(f"closed quipu girth must be >= 3, got r={r}")
            for i, m in enumerate(positions):
                if not 0 <= m <= r - 1:
                    raise FamilyError(f"closed quipu position m{i + 1}={m} violates 0 <= m <= r-1 = {r - 1}")
            _check_increasing(positions)
        case Dagger(m):
            if m < 1:
                raise FamilyError(f"dagger tail must have >= 1 edge, got {m}")
        case Hn(n):
            if n < 10:
                raise FamilyError(f"H_n needs n >= 10, got {n}")
        case Tn(n):
            if n < 6:
                raise FamilyError(f"T_n needs n >= 6, got {n}")
        case Lollipop(ell, g):
            if ell < 1:
                raise FamilyError(f"lollipop tail must have >= 1 edge, got {ell}")
            if g < 3:
                raise FamilyError(f"lollipop cycle must have >= 3 vertices, got {g}")
        case Star(k):
            if k < 0:
                raise FamilyError(f"star needs k >= 0, got {k}")
        case Union_(parts):
            for p in parts:
                validate(p)
        case _:
            raise FamilyError(f"unknown family spec {spec!r}")


def _check_branches(lengths, positions) -> None:
    if len(lengths) != len(positions):
        raise FamilyError("each pendant path needs exactly one attachment position")
    for i, n in enumerate(lengths):
        if n < 1:
            raise FamilyError(f"pendant path n{i + 1}={n} must have >= 1 edge")


def _check_increasing(positions) -> None:
    for a, b in zip(positions, positions[1:]):
        if not a < b:
            raise FamilyError(f"positions must be strictly increasing, got {a} then {b}")


def _attach_paths(edges: list, n: int, lengths, positions) -> int:
    for length, pos in zip(lengths, positions):
        prev = pos
        for _ in range(length):
            edges.append((prev, n))
            prev = n
            n += 1
    return n


def build_family(spec: FamilySpec) -> Graph:
    validate(spec)
    match spec:
        case Path(n):
            return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
        case Cycle(n):
            return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
        case OpenQuipu(lengths, positions, r):
            edges = [(i, i + 1) for i in range(r - 1)]
            n = _attach_paths(edges, r, lengths, positions)
            return Graph.from_edges(n, edges)
        case ClosedQuipu(lengths, positions, r):
            edges = [(i, (i + 1) % r) for i in range(r)]
            n = _attach_paths(edges, r, lengths, positions)
            return Graph.from_edges(n, edges)
        case Dagger(m):
            edges = [(0, 1), (0, 2), (0, 3)]
            prev = 0
            for v in range(4, 4 + m):
                edges.append((prev, v))
                prev = v
            return Graph.from_edges(4 + m, edges)
        case Hn(n):
            return build_family(hn_as_quipu(n))
        case Tn(n):
            return build_family(tn_as_quipu(n))
        case Lollipop(ell, g):
            return build_family(ClosedQuipu((ell,), (0,), g))
        case Star(k):
            return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])
        case Union_(parts):
            return union_all(build_family(p) for p in parts)
    raise FamilyError(f"unknown family spec {spec!r}")


def family_order(spec: FamilySpec) -> int:
    """Vertex count without building the graph."""
    match spec:
        case Path(n) | Cycle(n) | Hn(n) | Tn(n):
            return n
        case OpenQuipu(lengths, _, r) | ClosedQuipu(lengths, _, r):
            return r + sum(lengths)
        case Dagger(m):
            return m + 4
        case Lollipop(ell, g):
            return ell + g
        case Star(k):
            return k + 1
        case Union_(parts):
            return sum(family_order(p) for p in parts)
    raise FamilyError(f"unknown family spec {spec!r}")


# ---------------------------------------------------------------------------
# text notation


def render(spec: FamilySpec) -> str:
    match spec:
        case Path(n):
            return f"P:{n}"
        case Cycle(n):
            return f"C:{n}"
        case Hn(n):
            return f"H:{n}"
        case Tn(n):
            return f"T:{n}"
        case Dagger(m):
            return f"D:{m}"
        case Star(k):
            return f"S:{k}"
        case Lollipop(ell, g):
            return f"L[l={ell};g={g}]"
        case OpenQuipu(lengths, positions, r):
            return f"OQ[r={r}{_render_branches(lengths, positions)}]"
        case ClosedQuipu(lengths, positions, r):
            return f"CQ[g={r}{_render_branches(lengths, positions)}]"
        case Union_(parts):
            return "U(" + ",".join(render(p) for p in parts) + ")"
    raise FamilyError(f"unknown family spec {spec!r}")


def _render_branches(lengths, positions) -> str:
    if not lengths:
        return ""
    return ";" + ",".join(f"{m}:{n}" for n, m in zip(lengths, positions))


class DSLError(FamilyError):
    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, expected: str) -> DSLError:
        found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
        return DSLError(f"expected {expected}, found {found!r}", self.text, self.pos)

    def peek(self, s: str) -> bool:
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> None:
        if not self.peek(s):
            raise self.error(repr(s))
        self.pos += len(s)

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("an integer")
        return int(self.text[start:self.pos])

    def spec(self) -> FamilySpec:
        start = self.pos
        if self.peek("OQ["):
            self.pos += 3
            self.expect("r=")
            r = self.integer()
            lengths, positions = self.branches()
            self.expect("]")
            out = OpenQuipu(lengths, positions, r)
        elif self.peek("CQ["):
            self.pos += 3
            self.expect("g=")
            r = self.integer()
            lengths, positions = self.branches()
            self.expect("]")
            out = ClosedQuipu(lengths, positions, r)
        elif self.peek("L["):
            self.pos += 2
            self.expect("l=")
            ell = self.integer()
            self.expect(";g=")
            g = self.integer()
            self.expect("]")
            out = Lollipop(ell, g)
        elif self.peek("U("):
            self.pos += 2
            parts = [self.spec()]
            while self.peek(","):
                self.pos += 1
                parts.append(self.spec())
            self.expect(")")
            out = Union_(tuple(parts))
        else:
            kinds = {"P": Path, "C": Cycle, "H": Hn, "T": Tn, "D": Dagger, "S": Star}
            ch = self.text[self.pos] if self.pos < len(self.text) else ""
            if ch not in kinds or not self.peek(ch + ":"):
                raise self.error("one of P: C: H: T: D: S: L[ OQ[ CQ[ U(")
            self.pos += 2
            out = kinds[ch](self.integer())
        try:
            validate(out)
        except DSLError:
            raise
        except FamilyError as exc:
            raise DSLError(str(exc), self.text, start) from None
        return out

    def branches(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        lengths, positions = [], []
        if self.peek(";"):
            self.pos += 1
            while True:
                positions.append(self.integer())
                self.expect(":")
                lengths.append(self.integer())
                if not self.peek(","):
                    break
                self.pos += 1
        return tuple(lengths), tuple(positions)


def parse(text: str) -> FamilySpec:
    p = _Parser(text.strip())
    p.text = text.strip()
    out = p.spec()
    if p.pos != len(p.text):
        raise p.error("end of input")
    return out
