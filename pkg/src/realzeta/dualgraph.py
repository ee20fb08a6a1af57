"""Real total dual graph of a resolution and its structural checks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .resolution import ResolutionModel


@dataclass
class Vertex:
    id: int
    label: str
    nu: int
    N: int
    strict: bool

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.nu, self.N)


@dataclass
class DualGraph:
    vertices: dict[int, Vertex]
    edges: list[tuple[int, int]]
    minimal: set[int] = field(default_factory=set)

    def neighbours(self, vid: int) -> list[int]:
        out = [b for a, b in self.edges if a == vid] + [a for a, b in self.edges if b == vid]
        return sorted(out)

    def ratio(self, vid: int) -> Fraction:
        return self.vertices[vid].ratio


def build_graph(model: ResolutionModel) -> DualGraph:
    verts = {
        c.id: Vertex(c.id, c.label, c.nu, c.N, not c.exceptional)
        for c in model.components if c.real
    }
    edges = sorted(
        tuple(sorted((x.a, x.b))) for x in model.crossings
        if x.real and x.a in verts and x.b in verts
    )
    g = DualGraph(verts, edges)
    if verts:
        low = min(v.ratio for v in verts.values())
        g.minimal = {vid for vid, v in verts.items() if v.ratio == low}
    return g


def _connected(g: DualGraph, subset: set[int]) -> bool:
    if not subset:
        return True
    start = min(subset)
    seen = {start}
    todo = deque([start])
    while todo:
        v = todo.popleft()
        for w in g.neighbours(v):
            if w in subset and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == subset


def is_tree(g: DualGraph) -> bool:
    return len(g.edges) == len(g.vertices) - 1 and _connected(g, set(g.vertices))


def minimal_connected(g: DualGraph) -> bool:
    return _connected(g, g.minimal)


def monotonicity_check(g: DualGraph) -> tuple[bool, list[int] | None]:
    """Ratios must strictly increase along every path leaving the minimal set.

    Returns (True, None) or (False, offending path starting inside the minimal set).
    """
    if not g.vertices:
        return True, None
    parent: dict[int, int | None] = {v: None for v in g.minimal}
    todo = deque(sorted(g.minimal))
    while todo:
        v = todo.popleft()
        for w in g.neighbours(v):
            if w in parent:
                continue
            parent[w] = v
            todo.append(w)
            if w not in g.minimal and g.ratio(w) <= g.ratio(v):
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return False, list(reversed(path))
    return True, None


def local_ordering_check(g: DualGraph) -> tuple[bool, int | None]:
    """A vertex with a smaller neighbour has every other neighbour larger."""
    for vid in sorted(g.vertices):
        r = g.ratio(vid)
        nbrs = g.neighbours(vid)
        smaller = [w for w in nbrs if g.ratio(w) < r]
        if smaller and any(g.ratio(w) <= r for w in nbrs if w != smaller[0]):
            return False, vid
    return True, None


def to_dot(g: DualGraph) -> str:
    lines = ["graph dual {"]
    for vid in sorted(g.vertices):
        v = g.vertices[vid]
        attrs = [f'label="{v.label} ({v.nu},{v.N})"']
        if v.strict:
            attrs.append("shape=box")
        elif vid in g.minimal:
            attrs.append("shape=doublecircle")
        else:
            attrs.append("shape=circle")
        if v.strict and vid in g.minimal:
            attrs.append("peripheries=2")
        lines.append(f"  v{vid} [{', '.join(attrs)}];")
    for a, b in g.edges:
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
