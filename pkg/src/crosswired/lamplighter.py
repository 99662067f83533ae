"""The lamplighter group Z/nZ wr Z acting on DL(n, n).

An element is a finitely supported lamp configuration Z -> Z/nZ together
with an integer shift (the lamplighter position).  Multiplication uses the
convention

    (f1, k1) * (f2, k2) = (f1 + f2(. - k1), k1 + k2),

i.e. the right factor's lamps are translated by the left factor's shift.
Only nonzero lamp values are stored, so equality is structural.

``to_dl_vertex`` is the standard bijection onto the vertices of DL(n, n):
the x-tree records the lamps strictly below the lamplighter, the y-tree
the lamps at and above it (y digit i holds the lamp at position -1-i).
Right multiplication by the 2n generators (a*delta_0, +-1) then moves to
exactly the m + n = 2n neighboring DL vertices, which is what
``cayley_ball`` certifies against the direct construction.
"""

from __future__ import annotations

import itertools

from .dl_graph import DLVertex
from .engine import CWLPresentation
from .errors import ModulusMismatchError
from .graphs import BallGraph, bfs_ball
from .horotree import TreeVertex


class LamplighterElement:
    """(configuration, shift) with lamps in Z/nZ; canonical sparse form."""

    __slots__ = ("n", "config", "shift", "_key")

    def __init__(self, n: int, config=None, shift: int = 0):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"lamp modulus must be an integer >= 2, got {n!r}")
        cfg = {}
        if config:
            for pos, v in dict(config).items():
                v %= n
                if v:
                    cfg[int(pos)] = v
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "config", cfg)
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "_key", (n, shift, tuple(sorted(cfg.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("LamplighterElement is immutable")

    def lamp(self, pos: int) -> int:
        return self.config.get(pos, 0)

    def support(self):
        return sorted(self.config)

    def __mul__(self, other: LamplighterElement) -> LamplighterElement:
        if not isinstance(other, LamplighterElement):
            return NotImplemented
        if self.n != other.n:
            raise ModulusMismatchError(f"Z/{self.n} vs Z/{other.n}")
        cfg = dict(self.config)
        for pos, v in other.config.items():
            p = pos + self.shift
            w = (cfg.get(p, 0) + v) % self.n
            if w:
                cfg[p] = w
            else:
                cfg.pop(p, None)
        return LamplighterElement(self.n, cfg, self.shift + other.shift)

    def inverse(self) -> LamplighterElement:
        cfg = {pos - self.shift: -v for pos, v in self.config.items()}
        return LamplighterElement(self.n, cfg, -self.shift)

    def is_identity(self) -> bool:
        return self.shift == 0 and not self.config

    def to_dl_vertex(self) -> DLVertex:
        k = self.shift
        xd = {pos: v for pos, v in self.config.items() if pos < k}
        yd = {-1 - pos: v for pos, v in self.config.items() if pos >= k}
        return DLVertex(TreeVertex(self.n, k, xd),
                        TreeVertex(self.n, -k, yd))

    def serialize(self) -> str:
        body = ",".join(f"{p}={v}" for p, v in sorted(self.config.items()))
        return f"LL{self.n}:k={self.shift}{{{body}}}"

    def __eq__(self, other):
        return isinstance(other, LamplighterElement) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"LamplighterElement({self.serialize()!r})"


def identity(n: int) -> LamplighterElement:
    return LamplighterElement(n, {}, 0)


def delta(n: int, pos: int = 0, value: int = 1) -> LamplighterElement:
    """A single lamp, no shift."""
    return LamplighterElement(n, {pos: value}, 0)


def element_from_dl(w: DLVertex) -> LamplighterElement:
    """Inverse of ``to_dl_vertex``; requires w over (n, n)."""
    if w.x.arity != w.y.arity:
        raise ModulusMismatchError(
            f"DL({w.x.arity},{w.y.arity}) vertex is not a lamplighter vertex")
    n = w.x.arity
    k = w.x.level
    cfg = dict(w.x.digits)
    for pos, v in w.y.digits.items():
        cfg[-1 - pos] = v
    return LamplighterElement(n, cfg, k)


def act(g: LamplighterElement, w: DLVertex) -> DLVertex:
    """Left translation transported through the vertex bijection."""
    return (g * element_from_dl(w)).to_dl_vertex()


def generators(n: int):
    """The 2n-element set {(a*delta_0, 1)} U inverses, closed under
    inversion."""
    gens = [LamplighterElement(n, {0: a}, 1) for a in range(n)]
    return gens + [g.inverse() for g in gens]


def cayley_ball(n: int, radius: int) -> BallGraph:
    """BFS ball of the Cayley graph (right multiplication), with the DL
    correspondence stored in ``meta['dl_map']``."""
    gens = generators(n)

    def neighbors(g):
        return [g * s for s in gens]

    b = bfs_ball(identity(n), neighbors, radius,
                 lambda g: g.serialize(),
                 meta={"kind": "lamplighter-cayley", "n": n})
    b.meta["dl_map"] = {g: g.to_dl_vertex() for g in b.vertices}
    return b


# -- presentation for the generic cross-wired-lamplighter engine ----------

def _conj_t(g: LamplighterElement, k: int = 1) -> LamplighterElement:
    """t^k g t^-k: translate the configuration up by k."""
    return LamplighterElement(g.n, {p + k: v for p, v in g.config.items()},
                              g.shift)


def _restrict(g: LamplighterElement, lo=None, hi=None) -> LamplighterElement:
    cfg = {p: v for p, v in g.config.items()
           if (lo is None or p >= lo) and (hi is None or p <= hi)}
    return LamplighterElement(g.n, cfg, g.shift)


def make_presentation(n: int, l_start: int = 0, lp_end: int = 0) -> CWLPresentation:
    """The (H, L, L', t) datum for Z/nZ wr Z.

    H is the configuration group (shift 0), t the shift generator,
    L the configurations supported on [l_start, oo) and L' those supported
    on (-oo, lp_end].  The standard datum is l_start = lp_end = 0; the
    (1, -1) variant has two double cosets, indexed by the lamp at 0, and
    is the stock example for ``promote_transitive``.
    """
    e = identity(n)

    def member_h(g):
        return isinstance(g, LamplighterElement) and g.n == n and g.shift == 0

    def enumerate_h(N):
        positions = range(-N, N + 1)
        for values in itertools.product(range(n), repeat=2 * N + 1):
            yield LamplighterElement(
                n, {p: v for p, v in zip(positions, values) if v}, 0)

    def enumerate_part(lo, hi):
        def gen(N):
            a, b = max(lo, -N) if lo is not None else -N, min(hi, N) if hi is not None else N
            positions = list(range(a, b + 1))
            if not positions:
                yield e
                return
            for values in itertools.product(range(n), repeat=len(positions)):
                yield LamplighterElement(
                    n, {p: v for p, v in zip(positions, values) if v}, 0)
        return gen

    def random_h(N, rng):
        cfg = {p: rng.randrange(n) for p in range(-N, N + 1)}
        return LamplighterElement(n, cfg, 0)

    factor = None
    if l_start <= lp_end + 1:
        def factor(g):
            return (_restrict(g, lo=l_start), _restrict(g, hi=l_start - 1))

    if l_start <= lp_end:
        def intersection_hint(N):
            return list(enumerate_part(l_start, lp_end)(max(N, abs(l_start), abs(lp_end))))
    else:
        def intersection_hint(N):
            return [e]

    name = f"lamplighter-n{n}"
    if (l_start, lp_end) != (0, 0):
        name += f"-L{l_start}-Lp{lp_end}"

    return CWLPresentation(
        presentation_id=name,
        identity=e,
        mul=lambda a, b: a * b,
        inv=lambda a: a.inverse(),
        conj_t=_conj_t,
        conj_t_inv=lambda g: _conj_t(g, -1),
        member_h=member_h,
        member_l=lambda g: member_h(g) and all(p >= l_start for p in g.config),
        member_lp=lambda g: member_h(g) and all(p <= lp_end for p in g.config),
        canon_l=lambda g: _restrict(g, hi=l_start - 1),
        canon_lp=lambda g: _restrict(g, lo=lp_end + 1),
        transversal_l=tuple(LamplighterElement(n, {l_start: a}, 0) for a in range(n)),
        transversal_lp=tuple(LamplighterElement(n, {lp_end: a}, 0) for a in range(n)),
        enumerate_h=enumerate_h,
        enum_size=lambda N: n ** (2 * N + 1),
        enumerate_l=enumerate_part(l_start, None),
        enumerate_lp=enumerate_part(None, lp_end),
        enumerate_lp_reps=enumerate_part(lp_end + 1, None),
        lp_rep_count=lambda N: n ** max(0, N - lp_end),
        random_h=random_h,
        serialize=lambda g: g.serialize(),
        factor=factor,
        intersection_hint=intersection_hint,
    )
