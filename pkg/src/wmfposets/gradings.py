"""Gradings of simple Lie algebras from colored (extended) Dynkin diagrams.

A coloring of the usual diagram assigns degree 1 to the colored simple
roots and 0 to the rest; the induced Z-grading sorts every root by the
sum of its colored coordinates.  A coloring of the extended diagram
(node 0 stands for minus the highest root, with mark 1) produces a
periodic Z_m-grading where m is the sum of the colored marks and every
root of either sign lands in a residue class.

Each nonzero piece is materialized as a WeightPoset whose edges carry
labels from the uncolored simple roots only; by construction these are
exactly the root-order edges that survive inside the piece.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .root_system import (
    RootSystem,
    RootSystemError,
    SimpleType,
    build_root_system,
    dynkin_edges,
)
from .weight_poset import WeightPoset, build_poset


@dataclass(frozen=True)
class ExtendedDiagram:
    """Affine diagram data derived from the highest root."""

    base: SimpleType
    marks: tuple[int, ...]          # a_i = [theta : alpha_i], a_0 = 1 implicit
    attach: tuple[int, ...]         # entry j-1 is <theta, alpha_j^vee>

    @property
    def coxeter_check(self) -> bool:
        return 1 + sum(self.marks) == build_root_system(self.base).coxeter


@lru_cache(maxsize=None)
def extended_diagram(stype: SimpleType) -> ExtendedDiagram:
    rs = build_root_system(stype)
    theta = rs.highest_root
    attach = rs.pairings(theta)
    ed = ExtendedDiagram(base=stype, marks=theta, attach=attach)
    assert ed.coxeter_check
    assert any(attach) and all(0 <= a <= 3 for a in attach)
    return ed


@dataclass(frozen=True)
class ColoredDiagram:
    """A diagram kind plus the colored vertex subset (0 = affine node)."""

    kind: str                       # "usual" | "extended"
    base: SimpleType
    colored: tuple[int, ...]

    def __post_init__(self):
        n = self.base.rank
        lo = 0 if self.kind == "extended" else 1
        if self.kind not in ("usual", "extended"):
            raise RootSystemError(f"unknown diagram kind {self.kind!r}")
        if not self.colored:
            raise RootSystemError("empty coloring")
        if any(not (lo <= i <= n) for i in self.colored):
            raise RootSystemError(
                f"coloring {self.colored} out of range for {self.kind} {self.base}"
            )
        object.__setattr__(self, "colored", tuple(sorted(set(self.colored))))


def _classify_component(vertices, mult, norm) -> SimpleType:
    """Identify the simple type of one connected sub-diagram.

    ``mult(u, v)`` is the bond multiplicity (0 if non-adjacent), ``norm``
    the relative root length.  Rank-2 double-bond components are reported
    as B2 (B2 and C2 are the same diagram).
    """
    k = len(vertices)
    if k == 1:
        return SimpleType("A", 1)
    pairs = [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]
             if mult(u, v)]
    mults = [mult(u, v) for u, v in pairs]
    if 3 in mults:
        return SimpleType("G", 2)
    if 2 in mults:
        if k == 2:
            return SimpleType("B", 2)
        shorts = sum(1 for v in vertices if norm(v) == min(map(norm, vertices)))
        if shorts == 1:
            return SimpleType("B", k)
        if shorts == k - 1:
            return SimpleType("C", k)
        return SimpleType("F", 4)
    # simply laced: a path, a fork, or an E-shape
    deg = {v: 0 for v in vertices}
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    if max(deg.values()) <= 2:
        return SimpleType("A", k)
    hub = next(v for v in vertices if deg[v] == 3)
    adj = {v: [] for v in vertices}
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    arms = []
    for start in adj[hub]:
        length = 1
        prev, cur = hub, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return SimpleType("D", k)
    return SimpleType("E", k)


def _usual_components(rs: RootSystem, removed: set[int]):
    """Connected components of the diagram minus a vertex set, classified."""
    n = rs.rank
    keep = [v for v in range(1, n + 1) if v not in removed]
    adjset = {}
    for u, v in dynkin_edges(rs.stype):
        adjset.setdefault(u, set()).add(v)
        adjset.setdefault(v, set()).add(u)

    def mult(u, v):
        if v in adjset.get(u, ()):
            return rs.cartan[u - 1][v - 1] * rs.cartan[v - 1][u - 1]
        return 0

    return _components(keep, mult, lambda v: rs.norms[v - 1])


def _extended_components(rs: RootSystem, removed: set[int]):
    """Components of the extended diagram minus a vertex set, classified."""
    ed = extended_diagram(rs.stype)
    n = rs.rank
    keep = [v for v in range(0, n + 1) if v not in removed]
    adjset = {}
    for u, v in dynkin_edges(rs.stype):
        adjset.setdefault(u, set()).add(v)
        adjset.setdefault(v, set()).add(u)
    for j in range(1, n + 1):
        if ed.attach[j - 1]:
            adjset.setdefault(0, set()).add(j)
            adjset.setdefault(j, set()).add(0)

    def mult(u, v):
        if v not in adjset.get(u, ()):
            return 0
        if 0 in (u, v):
            return ed.attach[(u + v) - 1]  # the other endpoint's index
        return rs.cartan[u - 1][v - 1] * rs.cartan[v - 1][u - 1]

    long_norm = max(rs.norms)
    return _components(
        keep, mult, lambda v: long_norm if v == 0 else rs.norms[v - 1]
    )


def _components(keep, mult, norm):
    seen = set()
    out = []
    for start in keep:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in keep:
                if y not in seen and mult(x, y):
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comp.sort()
        out.append((_classify_component(comp, mult, norm), tuple(comp)))
    out.sort(key=lambda t: t[1])
    return tuple(out)


@dataclass(frozen=True)
class ZGrading:
    source: ColoredDiagram
    pieces: dict            # degree i >= 1 -> WeightPoset
    piece_coords: dict      # degree i >= 1 -> tuple of root coords
    zero_part: WeightPoset  # poset of Delta(0)^+
    zero_coords: tuple
    ideals: tuple           # ((SimpleType, vertex tuple), ...)
    max_degree: int

    @property
    def rank(self) -> int:
        return self.source.base.rank

    def dim(self, i: int) -> int:
        if i == 0:
            return self.rank + 2 * len(self.zero_coords)
        return len(self.pieces[i].elements) if i in self.pieces else 0

    def edge_count(self, i: int) -> int:
        return self.pieces[i].num_edges if i in self.pieces else 0

    def defect(self, i: int = 1) -> int:
        return 2 * self.dim(i) - self.edge_count(i)

    def grading_sum(self) -> int:
        return sum(self.defect(i) for i in self.pieces)

    @property
    def k(self) -> int:
        return len(self.source.colored)


def z_grading(rs: RootSystem, colored) -> ZGrading:
    src = ColoredDiagram("usual", rs.stype, tuple(colored))
    idx = [i - 1 for i in src.colored]
    uncolored = tuple(i for i in range(1, rs.rank + 1) if i not in src.colored)
    by_deg: dict[int, list] = {}
    for gamma in rs.positive_roots:
        d = sum(gamma[i] for i in idx)
        by_deg.setdefault(d, []).append(gamma)
    pieces = {}
    piece_coords = {}
    for d, roots in sorted(by_deg.items()):
        if d == 0:
            continue
        pieces[d] = build_poset(rs, [rs.pairings(g) for g in roots],
                                labels=uncolored)
        piece_coords[d] = tuple(sorted(roots))
    zero = by_deg.get(0, [])
    zero_part = build_poset(rs, [rs.pairings(g) for g in zero],
                            labels=uncolored)
    return ZGrading(
        source=src,
        pieces=pieces,
        piece_coords=piece_coords,
        zero_part=zero_part,
        zero_coords=tuple(sorted(zero)),
        ideals=_usual_components(rs, set(src.colored)),
        max_degree=max(by_deg),
    )


def component_posets(zg: ZGrading, i: int) -> list[WeightPoset]:
    """Connected Hasse components of the degree-i piece."""
    if i not in zg.pieces:
        return []
    p = zg.pieces[i]
    return [p.restrict(comp) for comp in p.connected_components()]


def minimal_nilpotent_grading(rs: RootSystem) -> ZGrading:
    """The height-2 grading with Delta(2) = {theta}.

    Colors exactly the simple roots not orthogonal to the highest root;
    the coloring degree then coincides with the pairing against the
    highest coroot, so the top piece is the highest root alone.
    """
    if rs.stype == SimpleType("A", 1):
        raise RootSystemError(
            "A1 has no height-2 grading: the highest root is simple"
        )
    theta_pair = rs.pairings(rs.highest_root)
    colored = tuple(j for j in range(1, rs.rank + 1) if theta_pair[j - 1])
    zg = z_grading(rs, colored)
    assert zg.max_degree == 2 and zg.piece_coords[2] == (rs.highest_root,)
    return zg


@dataclass(frozen=True)
class PeriodicGrading:
    source: ColoredDiagram
    order: int              # m
    pieces: dict            # residue 1..m-1 -> WeightPoset over all roots
    piece_coords: dict      # residue -> signed root coords
    zero_coords: tuple      # roots (both signs) of residue 0
    ideals: tuple           # components of the extended diagram minus colors

    def dim(self, i: int) -> int:
        if i % self.order == 0:
            return self.source.base.rank + len(self.zero_coords)
        return len(self.pieces[i % self.order].elements)

    def edge_count(self, i: int) -> int:
        r = i % self.order
        return self.pieces[r].num_edges if r in self.pieces else 0

    def defect(self, i: int = 1) -> int:
        return 2 * self.dim(i) - self.edge_count(i)

    @property
    def g0_semisimple(self) -> bool:
        return len(self.source.colored) == 1


def periodic_grading(rs: RootSystem, colored) -> PeriodicGrading:
    src = ColoredDiagram("extended", rs.stype, tuple(colored))
    ed = extended_diagram(rs.stype)
    marks = (1,) + tuple(ed.marks)
    m = sum(marks[i] for i in src.colored)
    if m < 2:
        raise RootSystemError(
            f"coloring {src.colored} gives order {m} < 2 (trivial automorphism)"
        )
    idx = [i - 1 for i in src.colored if i >= 1]
    uncolored = tuple(i for i in range(1, rs.rank + 1) if i not in src.colored)
    by_res: dict[int, list] = {r: [] for r in range(m)}
    for gamma in rs.positive_roots:
        d = sum(gamma[i] for i in idx)
        by_res[d % m].append(gamma)
        by_res[(-d) % m].append(tuple(-c for c in gamma))
    # the simple roots of g_0 are the uncolored extended-diagram nodes;
    # label 0 stands for alpha_0 = -theta.
    extra = None
    if 0 not in src.colored:
        alpha0 = tuple(-p for p in rs.pairings(rs.highest_root))
        extra = {0: alpha0}
    pieces = {}
    piece_coords = {}
    for r in range(1, m):
        roots = by_res[r]
        pieces[r] = build_poset(rs, [rs.pairings(g) for g in roots],
                                labels=uncolored, extra_columns=extra)
        piece_coords[r] = tuple(sorted(roots))
    return PeriodicGrading(
        source=src,
        order=m,
        pieces=pieces,
        piece_coords=piece_coords,
        zero_coords=tuple(sorted(by_res[0])),
        ideals=_extended_components(rs, set(src.colored)),
    )


def grading_report(g, identities=()) -> dict:
    """JSON-ready summary of a Z- or periodic grading."""
    periodic = isinstance(g, PeriodicGrading)
    degrees = []
    for i in sorted(g.pieces):
        degrees.append({
            "degree": i,
            "dim": g.dim(i),
            "edges": g.edge_count(i),
            "defect": g.defect(i),
            "covering_polynomial": list(
                g.pieces[i].covering_polynomial("upper")
            ),
        })
    out = {
        "diagram": g.source.kind,
        "type": str(g.source.base),
        "colored": list(g.source.colored),
        "ideals": [
            {"type": str(t), "vertices": list(vs)} for t, vs in g.ideals
        ],
        "degrees": degrees,
        "identities": list(identities),
    }
    if periodic:
        out["order"] = g.order
    else:
        out["max_degree"] = g.max_degree
        out["sum"] = g.grading_sum()
    return out
