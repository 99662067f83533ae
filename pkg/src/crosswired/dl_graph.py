"""Finite balls of Diestel-Leader graphs DL(m, n).

A DL vertex is a pair (x, y) of tree vertices, x in T_m and y in T_n, with
x.level + y.level = 0.  Two pairs are adjacent when both coordinates move
along tree edges: one coordinate steps to a child while the other steps to
its parent, so every vertex has exactly m + n neighbors and the height
h(x, y) = x.level changes by +-1 across every edge.

The collapse operation keeps only heights divisible by d and joins
vertices linked by vertical geodesic segments of length d; relabeling
digit blocks turns the result into DL(m^d, n^d), which ``collapse_vertex``
makes explicit.
"""

from __future__ import annotations

from .errors import AlignmentError, IncompatibleTreesError, InvalidRadiusError
from .graphs import BallGraph, bfs_ball, check_bijection  # noqa: F401  (re-export)
from .horotree import TreeVertex, base_vertex


class DLVertex:
    """A vertex (x, y) of DL(x.arity, y.arity) with x.level + y.level = 0."""

    __slots__ = ("x", "y")

    def __init__(self, x: TreeVertex, y: TreeVertex):
        if x.level + y.level != 0:
            raise ValueError(
                f"levels must sum to 0, got {x.level} + {y.level}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, name, value):
        raise AttributeError("DLVertex is immutable")

    @property
    def height(self) -> int:
        return self.x.level

    def neighbors(self):
        """The m + n adjacent vertices (m upward, n downward)."""
        px, py = self.x.parent(), self.y.parent()
        up = [DLVertex(cx, py) for cx in self.x.children()]
        down = [DLVertex(px, cy) for cy in self.y.children()]
        return up + down

    def flip(self) -> DLVertex:
        """Interchange the trees; an involution, DL(m,n) -> DL(n,m)."""
        return DLVertex(self.y, self.x)

    def shift(self, s: int = 1) -> DLVertex:
        """The hyperbolic translation along the all-zero rays: x up by s,
        y down by s."""
        return DLVertex(self.x.shift(s), self.y.shift(-s))

    def serialize(self) -> str:
        return f"({self.x.serialize()};{self.y.serialize()})"

    def __eq__(self, other):
        return (isinstance(other, DLVertex)
                and self.x == other.x and self.y == other.y)

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return f"DLVertex({self.serialize()!r})"


def dl_base(m: int, n: int) -> DLVertex:
    return DLVertex(base_vertex(m), base_vertex(n))


def ball(m: int, n: int, center: DLVertex | None = None,
         radius: int = 0) -> BallGraph:
    """BFS ball of DL(m, n) around ``center`` (default: the base pair)."""
    if radius < 0:
        raise InvalidRadiusError(f"radius must be >= 0, got {radius}")
    if center is None:
        center = dl_base(m, n)
    if center.x.arity != m or center.y.arity != n:
        raise IncompatibleTreesError(
            f"center lives in DL({center.x.arity},{center.y.arity}), "
            f"not DL({m},{n})")
    return bfs_ball(center, DLVertex.neighbors, radius,
                    lambda w: w.serialize(),
                    meta={"kind": "dl", "m": m, "n": n})


def _is_descendant(child: TreeVertex, anc: TreeVertex) -> bool:
    return child.level >= anc.level and child.ancestor_at(anc.level) == anc


def collapse(b: BallGraph, d: int) -> BallGraph:
    """Keep heights divisible by d; join u (height dk) and v (height
    d(k+1)) when a vertical geodesic segment of length d runs between them.

    The vertex set is every kept vertex of ``b``; BFS distances are
    recomputed in the collapsed graph, and ``meta['matched_radius']``
    records the radius (b.radius // d) up to which the result agrees with
    a directly constructed ball of DL(m^d, n^d) -- compare via
    ``sub_ball(matched_radius)`` and :func:`collapse_vertex`.
    """
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"collapse step must be a positive integer, got {d!r}")
    if b.base.height % d != 0:
        raise AlignmentError(
            f"base height {b.base.height} not divisible by {d}")
    if b.radius < d:
        raise InvalidRadiusError(
            f"ball radius {b.radius} smaller than collapse step {d}")

    kept = [w for w in b.vertices if w.height % d == 0]
    by_height = {}
    for w in kept:
        by_height.setdefault(w.height, []).append(w)

    adjacency = {w: [] for w in kept}
    for h, lower_list in sorted(by_height.items()):
        upper_list = by_height.get(h + d, ())
        for u in lower_list:
            for v in upper_list:
                if _is_descendant(v.x, u.x) and _is_descendant(u.y, v.y):
                    adjacency[u].append(v)
                    adjacency[v].append(u)

    # BFS distance labels within the collapsed graph
    dist = {b.base: 0}
    frontier = [b.base]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adjacency[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt

    m, n = b.meta.get("m"), b.meta.get("n")
    meta = {"kind": "dl-collapsed", "m": m, "n": n, "d": d,
            "matched_radius": b.radius // d}
    labels = {w: b.labels[w] for w in kept}
    return BallGraph(b.base, b.radius // d, dist, adjacency, labels, meta=meta)


def _collapse_tree_vertex(v: TreeVertex, d: int) -> TreeVertex:
    if v.level % d != 0:
        raise AlignmentError(f"level {v.level} not divisible by {d}")
    arity = v.arity
    blocks = {}
    for pos, c in v.digits.items():
        j, i = divmod(pos, d)  # floor division: works for negative positions
        blocks[j] = blocks.get(j, 0) + c * arity ** (d - 1 - i)
    digits = {j: val for j, val in blocks.items() if val != 0}
    return TreeVertex(arity ** d, v.level // d, digits)


def collapse_vertex(w: DLVertex, d: int) -> DLVertex:
    """Block-digit relabeling DL(m,n) heights dZ -> DL(m^d, n^d).

    Digit blocks are read most-significant-first: the block of base-m
    digits at positions d*j .. d*j+d-1 becomes the single base-m^d digit
    at position j.
    """
    if w.height % d != 0:
        raise AlignmentError(f"height {w.height} not divisible by {d}")
    return DLVertex(_collapse_tree_vertex(w.x, d), _collapse_tree_vertex(w.y, d))


def collapse_correspondence(collapsed: BallGraph, d: int) -> dict:
    """Vertex map of ``collapsed`` through :func:`collapse_vertex`."""
    return {w: collapse_vertex(w, d) for w in collapsed.vertices}
