"""Finite graph balls with deterministic labeling, plus the bijection checker.

Every construction in this package produces a :class:`BallGraph`: a finite
vertex set with BFS distance labels from a base vertex and an induced
symmetric adjacency.  Vertices are arbitrary hashable values; a label
function fixes a total order so that exports and comparisons are
byte-stable across runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvalidRadiusError, MappingDomainError


class BallGraph:
    """Immutable-after-construction graph with base, dist labels, labels."""

    __slots__ = ("base", "radius", "vertices", "dist", "adjacency",
                 "labels", "meta")

    def __init__(self, base, radius, dist, adjacency, labels, meta=None):
        self.base = base
        self.radius = radius
        self.dist = dist
        self.labels = labels
        self.meta = dict(meta) if meta else {}
        self.vertices = tuple(sorted(adjacency, key=labels.__getitem__))
        self.adjacency = {
            v: tuple(sorted(ns, key=labels.__getitem__))
            for v, ns in adjacency.items()
        }

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.adjacency

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u, v) -> bool:
        return v in self.adjacency.get(u, ())

    def interior(self):
        """Vertices whose full neighborhood is guaranteed present."""
        return [v for v in self.vertices if self.dist.get(v, None) is not None
                and self.dist[v] < self.radius]

    def edges(self):
        """Each undirected edge once, as (u, v) with label(u) < label(v)."""
        out = []
        for u in self.vertices:
            lu = self.labels[u]
            for v in self.adjacency[u]:
                if lu < self.labels[v]:
                    out.append((u, v))
        out.sort(key=lambda e: (self.labels[e[0]], self.labels[e[1]]))
        return out

    def edge_count(self) -> int:
        return sum(len(ns) for ns in self.adjacency.values()) // 2

    def sphere_sizes(self):
        """Vertex counts per BFS distance, as a list indexed by radius."""
        counts = [0] * (self.radius + 1)
        for v in self.vertices:
            d = self.dist.get(v)
            if d is not None:
                counts[d] += 1
        return counts

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    def is_tree(self) -> bool:
        return self.is_connected() and self.edge_count() == len(self.vertices) - 1

    def sub_ball(self, radius: int) -> BallGraph:
        """Restriction to BFS distance <= radius, with induced edges."""
        if radius < 0:
            raise InvalidRadiusError(f"radius must be >= 0, got {radius}")
        keep = {v for v in self.vertices
                if self.dist.get(v) is not None and self.dist[v] <= radius}
        adjacency = {v: [w for w in self.adjacency[v] if w in keep]
                     for v in keep}
        return BallGraph(self.base, radius,
                         {v: self.dist[v] for v in keep},
                         adjacency,
                         {v: self.labels[v] for v in keep},
                         meta=self.meta)

    def edge_lines(self):
        return [f"{self.labels[u]}\t{self.labels[v]}" for u, v in self.edges()]

    def to_dot(self, name: str = "ball", height_fn=None) -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            if height_fn is not None:
                lines.append(f'  "{self.labels[v]}" [height={height_fn(v)}];')
            else:
                lines.append(f'  "{self.labels[v]}";')
        for u, v in self.edges():
            lines.append(f'  "{self.labels[u]}" -- "{self.labels[v]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return (f"<BallGraph base={self.labels.get(self.base)!r} "
                f"radius={self.radius} |V|={len(self.vertices)} "
                f"|E|={self.edge_count()}>")


def bfs_ball(base, neighbor_fn, radius, label_fn, meta=None) -> BallGraph:
    """Ball of given radius around ``base``: vertices at BFS distance
    <= radius, with the induced adjacency (boundary-boundary edges kept)."""
    if radius < 0:
        raise InvalidRadiusError(f"radius must be >= 0, got {radius}")
    dist = {base: 0}
    cached = {}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        ns = tuple(neighbor_fn(v))
        cached[v] = ns
        if dist[v] < radius:
            for w in ns:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
    adjacency = {v: [w for w in cached[v] if w in dist] for v in dist}
    labels = {v: label_fn(v) for v in dist}
    return BallGraph(base, radius, dist, adjacency, labels, meta=meta)


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of a labeled-graph isomorphism check for an explicit map."""

    ok: bool
    failure: str | None = None
    witness: tuple = ()

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "bijection verified"
        return f"{self.failure}: {self.witness!r}"


def check_bijection(mapping, graph_a: BallGraph, graph_b: BallGraph) -> BijectionReport:
    """Check that an explicit vertex correspondence is a graph isomorphism.

    ``mapping`` may be a dict or a callable defined on every vertex of
    ``graph_a``.  The check never searches: it only certifies the supplied
    map, returning a witness (missing vertex, phantom edge, broken edge)
    on failure.
    """
    if callable(mapping) and not hasattr(mapping, "__getitem__"):
        lookup = mapping
    else:
        def lookup(v, _m=mapping):
            try:
                return _m[v]
            except KeyError:
                raise MappingDomainError(v) from None

    image = {}
    seen = {}
    for v in graph_a.vertices:
        try:
            w = lookup(v)
        except MappingDomainError:
            raise
        except KeyError:
            raise MappingDomainError(v) from None
        if w in seen:
            return BijectionReport(False, "not_injective", (seen[w], v))
        seen[w] = v
        if w not in graph_b:
            return BijectionReport(False, "missing_vertex", (v, w))
        image[v] = w
    for w in graph_b.vertices:
        if w not in seen:
            return BijectionReport(False, "missing_vertex", (w,))
    for u, v in graph_a.edges():
        if not graph_b.has_edge(image[u], image[v]):
            return BijectionReport(False, "phantom_edge", (u, v))
    for u, v in graph_b.edges():
        if not graph_a.has_edge(seen[u], seen[v]):
            return BijectionReport(False, "broken_edge", (u, v))
    return BijectionReport(True)
