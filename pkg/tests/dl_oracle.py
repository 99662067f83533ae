"""Independent brute-force oracle for Diestel-Leader ball sizes.

Vertices of the (n+1)-regular tree are encoded relative to the base vertex
as a pair ``(ups, downs)``: walk ``ups`` edges toward the fixed end, then
follow the child digits in ``downs``.  The pair is canonical when it does
not start by undoing an up-step, i.e. ``ups >= 1`` implies the first down
digit is nonzero (the base vertex sits on the all-zero ray).

This representation and the pair-BFS below are deliberately disjoint from
the package's horocyclic coordinates; they exist so ball sizes can be
cross-checked against an implementation that shares no code with the main
builder.
"""

from collections import deque


def _tree_level(v):
    ups, downs = v
    return len(downs) - ups


def _tree_parent(v):
    ups, downs = v
    if downs:
        return (ups, downs[:-1])
    return (ups + 1, ())


def _tree_children(v, arity):
    ups, downs = v
    out = []
    for c in range(arity):
        if ups >= 1 and not downs and c == 0:
            # stepping down along the all-zero ray undoes the last up-step
            out.append((ups - 1, ()))
        else:
            out.append((ups, downs + (c,)))
    return out


def _dl_neighbors(w, m, n):
    x, y = w
    py = _tree_parent(y)
    px = _tree_parent(x)
    for cx in _tree_children(x, m):
        yield (cx, py)
    for cy in _tree_children(y, n):
        yield (px, cy)


def dl_ball_sizes(m, n, max_radius):
    """Sizes of balls B_0..B_max_radius around the base of DL(m, n)."""
    base = ((0, ()), (0, ()))
    dist = {base: 0}
    queue = deque([base])
    while queue:
        w = queue.popleft()
        if dist[w] == max_radius:
            continue
        for u in _dl_neighbors(w, m, n):
            assert _tree_level(u[0]) + _tree_level(u[1]) == 0
            if u not in dist:
                dist[u] = dist[w] + 1
                queue.append(u)
    sizes = []
    for r in range(max_radius + 1):
        sizes.append(sum(1 for d in dist.values() if d <= r))
    return sizes


if __name__ == "__main__":
    print("DL(2,2):", dl_ball_sizes(2, 2, 7))
    print("DL(2,3):", dl_ball_sizes(2, 3, 5))
    print("DL(3,3):", dl_ball_sizes(3, 3, 6))
    print("DL(4,4):", dl_ball_sizes(4, 4, 2))
    print("DL(3,4):", dl_ball_sizes(3, 4, 5))
    print("DL(4,9):", dl_ball_sizes(4, 9, 1))
    print("DL(8,8):", dl_ball_sizes(8, 8, 1))
    print("DL(9,9):", dl_ball_sizes(9, 9, 1))
