"""The Heisenberg group over F_p[t, t^-1] with its contracting automorphism.

Laurent polynomials are stored as sparse exponent -> coefficient maps with
all coefficients nonzero mod p; arithmetic is exact and never truncates
(verification sweeps bound enumeration, not arithmetic).

Group elements are upper unitriangular 3x3 matrices encoded by their
entries (x, y, z) together with an integer power k of the extra generator
t, so the full group is H(F_p[t,t^-1]) semidirect Z with

    (h1, k1) (h2, k2) = (h1 * Phi^k1(h2), k1 + k2),
    (x1,y1,z1) (x2,y2,z2) = (x1+x2, y1+y2, z1+z2 + x1*y2),

where Phi scales x and y by t and z by t^2.  L is the subgroup with
entries in F_p[t] (exponents >= 0) and L' the one with entries in
F_p[t^-1] (exponents <= 0); exponent 0 is counted on the L side for the
L-coset normal form, so L-canonical representatives have strictly
negative support, and on the kill side for L', giving strictly positive
support there.
"""

from __future__ import annotations

import itertools

from .engine import CWLPresentation
from .errors import InvalidModulusError, ModulusMismatchError

SIDE_L = "L"
SIDE_LP = "Lp"


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class LaurentPoly:
    """Sparse Laurent polynomial over F_p; canonical (no zero coefficients)."""

    __slots__ = ("p", "coeffs", "_key")

    def __init__(self, p: int, coeffs=None):
        if not isinstance(p, int) or p < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {p!r}")
        cs = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                c %= p
                if c:
                    cs[int(e)] = c
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_key", (p, tuple(sorted(cs.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls, p: int) -> LaurentPoly:
        return cls(p)

    @classmethod
    def one(cls, p: int) -> LaurentPoly:
        return cls(p, {0: 1})

    @classmethod
    def t_power(cls, p: int, e: int, c: int = 1) -> LaurentPoly:
        return cls(p, {e: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def support(self):
        return sorted(self.coeffs)

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else None

    def _check(self, other):
        if self.p != other.p:
            raise ModulusMismatchError(f"F_{self.p} vs F_{other.p}")

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        cs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            w = (cs.get(e, 0) + c) % self.p
            if w:
                cs[e] = w
            else:
                cs.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "p", self.p)
        object.__setattr__(out, "coeffs", cs)
        object.__setattr__(out, "_key", None)
        return out

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.p, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        cs = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                w = (cs.get(e, 0) + c1 * c2) % self.p
                if w:
                    cs[e] = w
                else:
                    cs.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "p", self.p)
        object.__setattr__(out, "coeffs", cs)
        object.__setattr__(out, "_key", None)
        return out

    def shift(self, s: int) -> LaurentPoly:
        """Multiply by t^s."""
        return LaurentPoly(self.p, {e + s: c for e, c in self.coeffs.items()})

    def part_ge(self, e0: int) -> LaurentPoly:
        return LaurentPoly(self.p,
                           {e: c for e, c in self.coeffs.items() if e >= e0})

    def part_lt(self, e0: int) -> LaurentPoly:
        return LaurentPoly(self.p,
                           {e: c for e, c in self.coeffs.items() if e < e0})

    def serialize(self) -> str:
        body = ",".join(f"{e}:{c}" for e, c in sorted(self.coeffs.items()))
        return f"F{self.p}[{body}]"

    def _full_key(self):
        key = self._key
        if key is None:
            key = (self.p, tuple(sorted(self.coeffs.items())))
            object.__setattr__(self, "_key", key)
        return key

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly)
                and self._full_key() == other._full_key())

    def __hash__(self):
        return hash(self._full_key())

    def __repr__(self):
        return f"LaurentPoly({self.serialize()!r})"


def _enumerate_polys(p: int, lo: int, hi: int):
    """All Laurent polynomials with support inside [lo, hi]."""
    exps = list(range(lo, hi + 1))
    if not exps:
        yield LaurentPoly.zero(p)
        return
    for values in itertools.product(range(p), repeat=len(exps)):
        yield LaurentPoly(p, {e: v for e, v in zip(exps, values) if v})


def random_poly(p: int, rng, lo: int, hi: int) -> LaurentPoly:
    return LaurentPoly(p, {e: rng.randrange(p) for e in range(lo, hi + 1)})


class HeisenbergElement:
    """(x, y, z, k): unitriangular entries and the power of t."""

    __slots__ = ("x", "y", "z", "k")

    def __init__(self, x: LaurentPoly, y: LaurentPoly, z: LaurentPoly,
                 k: int = 0):
        if not (x.p == y.p == z.p):
            raise ModulusMismatchError(
                f"mixed moduli {x.p}, {y.p}, {z.p}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("HeisenbergElement is immutable")

    @property
    def p(self) -> int:
        return self.x.p

    @classmethod
    def identity(cls, p: int) -> HeisenbergElement:
        zero = LaurentPoly.zero(p)
        return cls(zero, zero, zero, 0)

    @classmethod
    def from_ints(cls, p: int, x=0, y=0, z=0, k: int = 0) -> HeisenbergElement:
        """Entries given as constants or {exp: coeff} dicts."""
        def mk(v):
            if isinstance(v, LaurentPoly):
                return v
            if isinstance(v, dict):
                return LaurentPoly(p, v)
            return LaurentPoly(p, {0: v})
        return cls(mk(x), mk(y), mk(z), k)

    def is_h_part(self) -> bool:
        return self.k == 0

    def __mul__(self, other: HeisenbergElement) -> HeisenbergElement:
        if not isinstance(other, HeisenbergElement):
            return NotImplemented
        if self.p != other.p:
            raise ModulusMismatchError(f"F_{self.p} vs F_{other.p}")
        k1 = self.k
        if k1:
            x2, y2, z2 = (other.x.shift(k1), other.y.shift(k1),
                          other.z.shift(2 * k1))
        else:
            x2, y2, z2 = other.x, other.y, other.z
        return HeisenbergElement(self.x + x2, self.y + y2,
                                 self.z + z2 + self.x * y2,
                                 k1 + other.k)

    def inverse(self) -> HeisenbergElement:
        hx, hy = -self.x, -self.y
        hz = -self.z + self.x * self.y
        s = -self.k
        if s:
            hx, hy, hz = hx.shift(s), hy.shift(s), hz.shift(2 * s)
        return HeisenbergElement(hx, hy, hz, s)

    def is_identity(self) -> bool:
        return (self.k == 0 and self.x.is_zero() and self.y.is_zero()
                and self.z.is_zero())

    def serialize(self) -> str:
        return (f"H({self.x.serialize()};{self.y.serialize()};"
                f"{self.z.serialize()})@t^{self.k}")

    def __eq__(self, other):
        return (isinstance(other, HeisenbergElement)
                and self.k == other.k and self.x == other.x
                and self.y == other.y and self.z == other.z)

    def __hash__(self):
        return hash((self.x, self.y, self.z, self.k))

    def __repr__(self):
        return f"HeisenbergElement({self.serialize()!r})"


def phi(a: HeisenbergElement, k: int = 1) -> HeisenbergElement:
    """Conjugation by t^k: x -> t^k x, y -> t^k y, z -> t^2k z."""
    if k == 0:
        return a
    return HeisenbergElement(a.x.shift(k), a.y.shift(k), a.z.shift(2 * k), a.k)


def member_l(a: HeisenbergElement) -> bool:
    """Entries in F_p[t] and no t-power."""
    return (a.k == 0
            and all(e >= 0 for e in a.x.coeffs)
            and all(e >= 0 for e in a.y.coeffs)
            and all(e >= 0 for e in a.z.coeffs))


def member_lp(a: HeisenbergElement) -> bool:
    """Entries in F_p[t^-1] and no t-power."""
    return (a.k == 0
            and all(e <= 0 for e in a.x.coeffs)
            and all(e <= 0 for e in a.y.coeffs)
            and all(e <= 0 for e in a.z.coeffs))


def canon_coset(h: HeisenbergElement, side: str) -> HeisenbergElement:
    """Canonical representative of the left coset hL (side 'L') or hL'
    (side 'Lp'); equal outputs exactly characterize equal cosets."""
    if h.k != 0:
        raise ValueError("coset normal forms are defined on the H part only")
    if side == SIDE_L:
        x = h.x.part_lt(0)
        y = h.y.part_lt(0)
        z = (h.z - h.x * h.y.part_ge(0)).part_lt(0)
    elif side == SIDE_LP:
        x = h.x.part_ge(1)
        y = h.y.part_ge(1)
        z = (h.z - h.x * h.y.part_lt(1)).part_ge(1)
    else:
        raise ValueError(f"side must be 'L' or 'Lp', got {side!r}")
    return HeisenbergElement(x, y, z, 0)


def factor(h: HeisenbergElement) -> tuple[HeisenbergElement, HeisenbergElement]:
    """Split h = l * l' with l in L and l' in L' (witnesses LL' = H)."""
    if h.k != 0:
        raise ValueError("factorization is defined on the H part only")
    w = h.z - h.x.part_ge(0) * h.y.part_lt(0)
    l = HeisenbergElement(h.x.part_ge(0), h.y.part_ge(0), w.part_ge(0), 0)
    lp = HeisenbergElement(h.x.part_lt(0), h.y.part_lt(0), w.part_lt(0), 0)
    return l, lp


def coset_transversal(p: int, side: str) -> tuple[HeisenbergElement, ...]:
    """The p^4 representatives of Phi(L) in L (entries a, b, c + d t),
    resp. of Phi^-1(L') in L' with c + d t^-1."""
    if not is_prime(p):
        raise InvalidModulusError(f"modulus {p!r} is not prime")
    if side == SIDE_L:
        step = 1
    elif side == SIDE_LP:
        step = -1
    else:
        raise ValueError(f"side must be 'L' or 'Lp', got {side!r}")
    out = []
    for a, b, c, d in itertools.product(range(p), repeat=4):
        out.append(HeisenbergElement(
            LaurentPoly(p, {0: a}),
            LaurentPoly(p, {0: b}),
            LaurentPoly(p, {0: c, step: d}), 0))
    return tuple(out)


def make_presentation(p: int) -> CWLPresentation:
    """The (H, L, L', t) datum for H(F_p[t, t^-1]) semidirect Z."""
    if not is_prime(p):
        raise InvalidModulusError(f"modulus {p!r} is not prime")
    e = HeisenbergElement.identity(p)

    def member_h(a):
        return isinstance(a, HeisenbergElement) and a.p == p and a.k == 0

    def enumerate_range(lo_fn, hi_fn):
        def gen(N):
            lo, hi = lo_fn(N), hi_fn(N)
            for x in _enumerate_polys(p, lo, hi):
                for y in _enumerate_polys(p, lo, hi):
                    for z in _enumerate_polys(p, lo, hi):
                        yield HeisenbergElement(x, y, z, 0)
        return gen

    enumerate_h = enumerate_range(lambda N: -N, lambda N: N)

    def random_h(N, rng):
        return HeisenbergElement(random_poly(p, rng, -N, N),
                                 random_poly(p, rng, -N, N),
                                 random_poly(p, rng, -N, N), 0)

    def intersection_hint(N):
        out = []
        for a, b, c in itertools.product(range(p), repeat=3):
            out.append(HeisenbergElement(LaurentPoly(p, {0: a}),
                                         LaurentPoly(p, {0: b}),
                                         LaurentPoly(p, {0: c}), 0))
        return out

    return CWLPresentation(
        presentation_id=f"heisenberg-p{p}",
        identity=e,
        mul=lambda a, b: a * b,
        inv=lambda a: a.inverse(),
        conj_t=phi,
        conj_t_inv=lambda a: phi(a, -1),
        member_h=member_h,
        member_l=member_l,
        member_lp=member_lp,
        canon_l=lambda a: canon_coset(a, SIDE_L),
        canon_lp=lambda a: canon_coset(a, SIDE_LP),
        transversal_l=coset_transversal(p, SIDE_L),
        transversal_lp=coset_transversal(p, SIDE_LP),
        enumerate_h=enumerate_h,
        enum_size=lambda N: p ** (3 * (2 * N + 1)),
        enumerate_l=enumerate_range(lambda N: 0, lambda N: N),
        enumerate_lp=enumerate_range(lambda N: -N, lambda N: 0),
        enumerate_lp_reps=enumerate_range(lambda N: 1, lambda N: N),
        lp_rep_count=lambda N: p ** (3 * max(0, N)),
        random_h=random_h,
        serialize=lambda a: a.serialize(),
        factor=factor,
        intersection_hint=intersection_hint,
    )
