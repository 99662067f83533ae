"""Horocyclic coordinates for the (n+1)-regular tree with a fixed end.

A vertex is an integer ``level`` (the Busemann value relative to the fixed
end and the base vertex ``o``) together with a finitely supported word of
digits: the digit at position ``j < level`` records which child was taken
when stepping from level ``j`` to ``j + 1`` along the ray coming from the
fixed end.  Zero digits are never stored, so structural equality coincides
with vertex equality and hashing is O(support).

The base vertex ``o`` is level 0 with no digits.  Every vertex has one
parent at ``level - 1`` and ``arity`` children at ``level + 1``; the tree
is regular of degree ``arity + 1``.  Levels and positions are unbounded
Python integers.
"""

from __future__ import annotations

import re

from .errors import IncompatibleTreesError, InvalidDigitError, ParseError
from .graphs import BallGraph, bfs_ball


class TreeVertex:
    """Immutable vertex of the (arity+1)-regular tree in horocyclic form."""

    __slots__ = ("arity", "level", "digits", "_key")

    def __init__(self, arity: int, level: int = 0, digits=None):
        if not isinstance(arity, int) or arity < 2:
            raise ValueError(f"arity must be an integer >= 2, got {arity!r}")
        digits = dict(digits) if digits else {}
        for pos, c in digits.items():
            if not isinstance(pos, int) or pos >= level:
                raise ValueError(
                    f"digit position {pos!r} not an integer below level {level}")
            if not isinstance(c, int) or not 1 <= c < arity:
                raise InvalidDigitError(
                    f"stored digit {c!r} at position {pos} outside 1..{arity - 1}")
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "_key",
                           (arity, level, tuple(sorted(digits.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("TreeVertex is immutable")

    def digit(self, pos: int) -> int:
        """Digit at a position (< level); unstored positions read as 0."""
        return self.digits.get(pos, 0)

    def parent(self) -> TreeVertex:
        new = {p: c for p, c in self.digits.items() if p < self.level - 1}
        return TreeVertex(self.arity, self.level - 1, new)

    def child(self, c: int) -> TreeVertex:
        if not isinstance(c, int) or not 0 <= c < self.arity:
            raise InvalidDigitError(
                f"child digit {c!r} outside 0..{self.arity - 1}")
        new = dict(self.digits)
        if c != 0:
            new[self.level] = c
        return TreeVertex(self.arity, self.level + 1, new)

    def children(self):
        return [self.child(c) for c in range(self.arity)]

    def ancestor_at(self, level: int) -> TreeVertex:
        """The vertex at ``level`` on the ray from this vertex to the end."""
        if level > self.level:
            raise ValueError(f"level {level} above vertex level {self.level}")
        return TreeVertex(self.arity, level,
                          {p: c for p, c in self.digits.items() if p < level})

    def shift(self, s: int) -> TreeVertex:
        """Translate by ``s`` along the all-zero ray (level k -> k + s)."""
        return TreeVertex(self.arity, self.level + s,
                          {p + s: c for p, c in self.digits.items()})

    def serialize(self) -> str:
        body = ",".join(f"{p}={c}" for p, c in sorted(self.digits.items()))
        return f"T{self.arity}:L{self.level}[{body}]"

    def __eq__(self, other):
        return isinstance(other, TreeVertex) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"TreeVertex({self.serialize()!r})"


def base_vertex(arity: int) -> TreeVertex:
    """The preferred base vertex o: level 0, empty digit word."""
    return TreeVertex(arity, 0, {})


def _check_same_tree(x: TreeVertex, y: TreeVertex):
    if x.arity != y.arity:
        raise IncompatibleTreesError(
            f"vertices of T_{x.arity} and T_{y.arity} cannot be combined")


def confluent(x: TreeVertex, y: TreeVertex) -> TreeVertex:
    """Deepest common vertex of the rays from x and y to the fixed end."""
    _check_same_tree(x, y)
    top = min(x.level, y.level)
    positions = set(x.digits) | set(y.digits)
    disagreements = [p for p in positions
                     if p < top and x.digit(p) != y.digit(p)]
    lvl = min([top] + disagreements)
    return x.ancestor_at(lvl) if lvl <= x.level else y.ancestor_at(lvl)


def distance(x: TreeVertex, y: TreeVertex) -> int:
    """Graph metric: both rays meet at the confluent."""
    lvl = confluent(x, y).level
    return (x.level - lvl) + (y.level - lvl)


_VERTEX_RE = re.compile(r"^T(\d+):L(-?\d+)\[(.*)\]$")
_PAIR_RE = re.compile(r"^(-?\d+)=(\d+)$")


def parse_vertex(text: str) -> TreeVertex:
    """Parse the canonical `T<arity>:L<level>[j=c,...]` form.

    Non-canonical input (unsorted positions, duplicates, zero digits,
    digits or positions out of range) is rejected.
    """
    m = _VERTEX_RE.match(text)
    if not m:
        raise ParseError(f"not a tree vertex: {text!r}")
    arity, level, body = int(m.group(1)), int(m.group(2)), m.group(3)
    if arity < 2:
        raise ParseError(f"arity must be >= 2: {text!r}")
    digits = {}
    last = None
    if body:
        for item in body.split(","):
            pm = _PAIR_RE.match(item)
            if not pm:
                raise ParseError(f"malformed digit entry {item!r} in {text!r}")
            pos, c = int(pm.group(1)), int(pm.group(2))
            if last is not None and pos <= last:
                raise ParseError(f"positions not strictly ascending in {text!r}")
            last = pos
            if c == 0:
                raise ParseError(f"zero digit stored at {pos} in {text!r}")
            if c >= arity:
                raise ParseError(f"digit {c} out of range in {text!r}")
            if pos >= level:
                raise ParseError(f"position {pos} not below level in {text!r}")
            digits[pos] = c
    return TreeVertex(arity, level, digits)


def tree_ball(arity: int, center: TreeVertex | None = None,
              radius: int = 0) -> BallGraph:
    """BFS ball in the tree itself (used for cross-checks against coset
    constructions)."""
    if center is None:
        center = base_vertex(arity)

    def neighbors(v):
        return [v.parent()] + v.children()

    return bfs_ball(center, neighbors, radius,
                    lambda v: v.serialize(),
                    meta={"kind": "tree", "arity": arity})
