"""Generic cross-wired-lamplighter machinery.

A presentation is a capability record for a group Gamma = H x| <t>: exact
group arithmetic on H, conjugation by t, membership and coset normal forms
for two subgroups L and L', finite transversals of tLt^-1 in L and of
t^-1 L' t in L', and truncated enumeration.  Everything downstream is
generic: certification of the structure constants (indices, compact
intersection, exhausting unions, double cosets), Bass-Serre tree balls on
the coset spaces H/L_n with L_n = t^n L t^-n, the diagonal action on the
level-sum-zero pairs, double-coset counting, and the conjugation trick
that replaces L by t^k L t^-k to reach a single orbit.

Truncation semantics: a truncation N bounds enumeration only; arithmetic
is exact and never wraps.  Sweeps that would exceed an element budget run
exhaustively at the largest feasible truncation and are topped up with
seeded random sampling at the requested one; every clamp is recorded in
the report warnings.  "Compact" is operationalized as: the enumerated
intersection has the same cardinality at the two largest feasible
truncations.  Checks that can neither pass nor fail at the truncation
report None (inconclusive) rather than a verdict.
"""

from __future__ import annotations

import itertools
import json
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .errors import InconclusiveError, UncertifiedPresentationError
from .graphs import BallGraph, bfs_ball

HYPOTHESES = ("index_L", "index_Lp", "compact_intersection", "exhaustion",
              "double_cosets")


@dataclass(frozen=True)
class CWLPresentation:
    """Callable capabilities for one cross-wired-lamplighter datum."""

    presentation_id: str
    identity: Any
    mul: Callable[[Any, Any], Any]
    inv: Callable[[Any], Any]
    conj_t: Callable[[Any], Any]          # h -> t h t^-1
    conj_t_inv: Callable[[Any], Any]      # h -> t^-1 h t
    member_h: Callable[[Any], bool]
    member_l: Callable[[Any], bool]
    member_lp: Callable[[Any], bool]
    canon_l: Callable[[Any], Any]         # canonical representative of h L
    canon_lp: Callable[[Any], Any]        # canonical representative of h L'
    transversal_l: tuple                  # reps of t L t^-1 in L
    transversal_lp: tuple                 # reps of t^-1 L' t in L'
    enumerate_h: Callable[[int], Any]     # truncation -> iterable
    enum_size: Callable[[int], int]
    enumerate_l: Callable[[int], Any]
    enumerate_lp: Callable[[int], Any]
    enumerate_lp_reps: Callable[[int], Any]
    lp_rep_count: Callable[[int], int]
    random_h: Callable[[int, random.Random], Any]
    serialize: Callable[[Any], str]
    factor: Optional[Callable[[Any], tuple]] = None
    intersection_hint: Optional[Callable[[int], Any]] = None

    def __repr__(self):
        return f"<CWLPresentation {self.presentation_id}>"


def conj_power(pres: CWLPresentation, h, k: int):
    """t^k h t^-k via repeated conjugation."""
    step = pres.conj_t if k >= 0 else pres.conj_t_inv
    for _ in range(abs(k)):
        h = step(h)
    return h


def gamma_identity(pres: CWLPresentation):
    return (pres.identity, 0)


def gamma_mul(pres: CWLPresentation, g1, g2):
    h1, k1 = g1
    h2, k2 = g2
    return (pres.mul(h1, conj_power(pres, h2, k1)), k1 + k2)


def gamma_inv(pres: CWLPresentation, g):
    h, k = g
    return (conj_power(pres, pres.inv(h), -k), -k)


def random_gamma(pres: CWLPresentation, truncation: int, rng: random.Random,
                 max_tpow: int = 2):
    return (pres.random_h(truncation, rng),
            rng.randint(-max_tpow, max_tpow))


# -- certification of the transversals -------------------------------------

@dataclass
class IndexCertificate:
    """Distinctness + exhaustive-reduction evidence for both transversals."""

    presentation: str
    truncation: int
    index_l: int
    index_lp: int
    ok_l: bool
    ok_lp: bool
    witnesses: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.ok_l and self.ok_lp


def _bounded_slice(gen_fn, truncation: int, budget: int):
    """Largest truncation <= requested whose enumeration fits the budget."""
    for n_eff in range(truncation, -1, -1):
        items = []
        for i, x in enumerate(gen_fn(n_eff)):
            if i >= budget:
                break
            items.append(x)
        else:
            return n_eff, items
    return 0, items[:budget]


def _random_subgroup_element(pres, canon, h):
    """A uniform-ish element of the subgroup: canon(h)^-1 * h lies in it."""
    return pres.mul(pres.inv(canon(h)), h)


def certify_transversals(pres: CWLPresentation, truncation: int, *,
                         rng: random.Random | None = None,
                         samples: int = 100,
                         budget: int = 100_000) -> IndexCertificate:
    """Certify that each declared transversal is pairwise-distinct and that
    every subgroup element (exhaustively at the clamped truncation, plus
    random samples at the full one) reduces to exactly one representative.
    """
    rng = rng or random.Random(0xCA1)
    cert = IndexCertificate(pres.presentation_id, truncation,
                            len(pres.transversal_l), len(pres.transversal_lp),
                            True, True)

    jobs = (
        ("L", pres.transversal_l, pres.member_l,
         lambda g: pres.member_l(pres.conj_t_inv(g)),   # g in t L t^-1
         pres.enumerate_l, pres.canon_l),
        ("Lp", pres.transversal_lp, pres.member_lp,
         lambda g: pres.member_lp(pres.conj_t(g)),      # g in t^-1 L' t
         pres.enumerate_lp, pres.canon_lp),
    )
    for side, trans, member, member_conj, enum_sub, canon in jobs:
        ok = True
        inv_reps = [pres.inv(r) for r in trans]
        for r in trans:
            if not member(r):
                ok = False
                cert.witnesses.append((side, "rep_outside_subgroup",
                                       pres.serialize(r)))
        for i in range(len(trans)):
            for j in range(i + 1, len(trans)):
                if member_conj(pres.mul(inv_reps[i], trans[j])):
                    ok = False
                    cert.witnesses.append(
                        (side, "representatives_share_coset",
                         (pres.serialize(trans[i]), pres.serialize(trans[j]))))
        n_eff, slice_elems = _bounded_slice(enum_sub, truncation, budget)
        if n_eff < truncation:
            cert.warnings.append(
                f"{side}: exhaustive reduction clamped to truncation {n_eff} "
                f"(budget {budget}), sampled at {truncation}")
        sampled = [_random_subgroup_element(pres, canon,
                                            pres.random_h(truncation, rng))
                   for _ in range(samples)]
        for l in itertools.chain(slice_elems, sampled):
            if not member(l):
                ok = False
                cert.witnesses.append((side, "element_outside_subgroup",
                                       pres.serialize(l)))
                continue
            hits = sum(1 for ri in inv_reps if member_conj(pres.mul(ri, l)))
            if hits != 1:
                ok = False
                cert.witnesses.append((side, "reduction_not_unique",
                                       (pres.serialize(l), hits)))
        if side == "L":
            cert.ok_l = ok
        else:
            cert.ok_lp = ok
    return cert


# -- Bass-Serre trees over the coset spaces --------------------------------

@dataclass(frozen=True)
class TreeCoset:
    """A vertex of the Bass-Serre tree: the coset rep*L_n (side 'L', with
    L_n = t^n L t^-n) or rep*L'_n (side 'Lp', with L'_n = t^-n L' t^n),
    stored by its canonical representative."""

    side: str
    level: int
    rep: Any


@dataclass(frozen=True)
class PairVertex:
    """A vertex of the engine's Diestel-Leader graph: levels sum to zero."""

    x: TreeCoset
    y: TreeCoset


def canon_at_level(pres: CWLPresentation, side: str, h, level: int):
    """Canonical representative of h L_n (side L) or h L'_n (side Lp)."""
    if side == "L":
        return conj_power(pres, pres.canon_l(conj_power(pres, h, -level)),
                          level)
    if side == "Lp":
        return conj_power(pres, pres.canon_lp(conj_power(pres, h, level)),
                          -level)
    raise ValueError(f"side must be 'L' or 'Lp', got {side!r}")


def coset_vertex(pres: CWLPresentation, side: str, h, level: int) -> TreeCoset:
    return TreeCoset(side, level, canon_at_level(pres, side, h, level))


def coset_parent(pres: CWLPresentation, v: TreeCoset) -> TreeCoset:
    return coset_vertex(pres, v.side, v.rep, v.level - 1)


def coset_children(pres: CWLPresentation, v: TreeCoset):
    """The index-many sub-cosets one level up, via the conjugated
    transversal."""
    if v.side == "L":
        trans = pres.transversal_l
        shift = v.level
    else:
        trans = pres.transversal_lp
        shift = -v.level
    out = []
    for r in trans:
        child_rep = pres.mul(v.rep, conj_power(pres, r, shift))
        out.append(coset_vertex(pres, v.side, child_rep, v.level + 1))
    return out


def _coset_label(pres: CWLPresentation, v: TreeCoset) -> str:
    return f"{v.side}:{v.level}:{pres.serialize(v.rep)}"


def _require_certificate(cert, need_l: bool, need_lp: bool):
    if cert is None:
        raise UncertifiedPresentationError(
            "no index certificate supplied; run verify_conditions or "
            "certify_transversals first")
    if need_l and not cert.ok_l:
        raise UncertifiedPresentationError("L-side transversal not certified")
    if need_lp and not cert.ok_lp:
        raise UncertifiedPresentationError("L'-side transversal not certified")


def bass_serre_ball(pres: CWLPresentation, side: str, radius: int,
                    cert: IndexCertificate | None = None) -> BallGraph:
    """Ball of the Bass-Serre tree around the base coset (level 0,
    identity rep)."""
    if side not in ("L", "Lp"):
        raise ValueError(f"side must be 'L' or 'Lp', got {side!r}")
    _require_certificate(cert, side == "L", side == "Lp")
    base = TreeCoset(side, 0, pres.canon_l(pres.identity) if side == "L"
                     else pres.canon_lp(pres.identity))

    def neighbors(v):
        return [coset_parent(pres, v)] + coset_children(pres, v)

    return bfs_ball(base, neighbors, radius,
                    lambda v: _coset_label(pres, v),
                    meta={"kind": "bass-serre", "side": side,
                          "presentation": pres.presentation_id})


def dl_action_ball(pres: CWLPresentation, radius: int,
                   cert: IndexCertificate | None = None) -> BallGraph:
    """Ball of the pair graph {(a L_n, b L'_-n)} with simultaneous tree
    edges; interior degree index_L + index_Lp."""
    _require_certificate(cert, True, True)
    base = PairVertex(TreeCoset("L", 0, pres.canon_l(pres.identity)),
                      TreeCoset("Lp", 0, pres.canon_lp(pres.identity)))

    def neighbors(w):
        up_parent = coset_parent(pres, w.y)
        down_parent = coset_parent(pres, w.x)
        out = [PairVertex(cx, up_parent)
               for cx in coset_children(pres, w.x)]
        out.extend(PairVertex(down_parent, cy)
                   for cy in coset_children(pres, w.y))
        return out

    return bfs_ball(base, neighbors, radius,
                    lambda w: f"({_coset_label(pres, w.x)}|"
                              f"{_coset_label(pres, w.y)})",
                    meta={"kind": "dl-action", "presentation":
                          pres.presentation_id})


def act(pres: CWLPresentation, g, v):
    """Action of g = (h, k) in Gamma: h acts by left translation, t sends
    a L_n to (t a t^-1) L_{n+1} and b L'_n to (t b t^-1) L'_{n-1}."""
    h, k = g
    if isinstance(v, PairVertex):
        return PairVertex(act(pres, g, v.x), act(pres, g, v.y))
    moved = pres.mul(h, conj_power(pres, v.rep, k))
    level = v.level + k if v.side == "L" else v.level - k
    return coset_vertex(pres, v.side, moved, level)


def stabilizer(pres: CWLPresentation, v, truncation: int, *,
               budget: int = 100_000):
    """All truncated H-elements fixing the vertex (or vertex pair)."""
    _, elems = _bounded_slice(pres.enumerate_h, truncation, budget)
    out = [h for h in elems if act(pres, (h, 0), v) == v]
    out.sort(key=pres.serialize)
    return out


# -- double cosets ----------------------------------------------------------

def double_coset_label(pres: CWLPresentation, h, cap: int = 16):
    """Iterated normal form for L h L': reduce on the left by L (through
    inverses) and on the right by L' until a fixed point; None if the
    iteration does not settle within ``cap`` rounds."""
    cur = h
    for _ in range(cap):
        left = pres.inv(pres.canon_l(pres.inv(cur)))
        nxt = pres.canon_lp(left)
        if nxt == cur:
            return cur
        cur = nxt
    return None


def _clamp_by_count(count_fn, truncation: int, budget: int) -> int:
    n = truncation
    while n > 0 and count_fn(n) > budget:
        n -= 1
    return n


def _orbit_generators(pres: CWLPresentation, level_cap: int):
    gens = []
    seen = set()
    for r in pres.transversal_l:
        for base in (r, pres.inv(r)):
            for k in range(level_cap + 1):
                g = conj_power(pres, base, k)
                key = pres.serialize(g)
                if key not in seen:
                    seen.add(key)
                    gens.append(g)
    return gens


def _orbit_count_bfs(pres: CWLPresentation, truncation: int, *,
                     box_pad: int = 2, rep_budget: int = 5000):
    """Number of orbits of L acting on the truncated L'-coset
    representatives, by breadth-first union within a padded
    representative box."""
    n_base = _clamp_by_count(pres.lp_rep_count, truncation, rep_budget)
    n_box = n_base + box_pad
    box = {}
    for s in pres.enumerate_lp_reps(n_box):
        box[s] = None  # component id, assigned below
    base_reps = list(pres.enumerate_lp_reps(n_base))
    for s in base_reps:
        if s not in box:
            raise InconclusiveError(
                "representative enumeration is not nested across truncations")
    gens = _orbit_generators(pres, n_box)

    comp = 0
    for seed in base_reps:
        if box[seed] is not None:
            continue
        comp += 1
        box[seed] = comp
        queue = deque([seed])
        while queue:
            s = queue.popleft()
            for g in gens:
                t = pres.canon_lp(pres.mul(g, s))
                if t in box and box[t] is None:
                    box[t] = comp
                    queue.append(t)
    return comp, n_base


def _orbit_count_labels(pres: CWLPresentation, truncation: int, *,
                        rep_budget: int = 5000, cap: int = 16):
    n_lab = _clamp_by_count(pres.lp_rep_count, truncation, rep_budget)
    counts = {}
    for n in (max(n_lab - 1, 0), n_lab):
        labels = set()
        for s in pres.enumerate_lp_reps(n):
            lab = double_coset_label(pres, s, cap=cap)
            if lab is None:
                return None, n_lab, counts
            labels.add(pres.serialize(lab))
        counts[n] = len(labels)
    return counts[n_lab], n_lab, counts


def _verify_factor(pres: CWLPresentation, truncation: int,
                   rng: random.Random, samples: int):
    """Check the factor oracle h = l * l' on random truncated elements."""
    for _ in range(samples):
        h = pres.random_h(truncation, rng)
        l, lp = pres.factor(h)
        if not (pres.member_l(l) and pres.member_lp(lp)
                and pres.mul(l, lp) == h):
            return False, pres.serialize(h)
    return True, None


def orbit_count(pres: CWLPresentation, truncation: int, *,
                rng: random.Random | None = None,
                rep_budget: int = 5000, box_pad: int = 2,
                samples: int = 200, _details: dict | None = None) -> int:
    """The double-coset count d = |L \\ H / L'| at the truncation.

    Three routes must agree: iterated canonical labels, orbit BFS on coset
    representatives, and (when supplied) the factor oracle, which forces
    d = 1.  Instability across truncations or any disagreement raises
    InconclusiveError rather than returning a guess.
    """
    rng = rng or random.Random(0xD0C)
    details = _details if _details is not None else {}

    d_lab, n_lab, counts = _orbit_count_labels(pres, truncation,
                                               rep_budget=rep_budget)
    details["label_counts"] = counts
    details["label_truncation"] = n_lab
    if d_lab is None:
        raise InconclusiveError(
            "double-coset label iteration did not reach a fixed point")
    if len(counts) > 1 and len(set(counts.values())) != 1:
        raise InconclusiveError(
            f"double-coset count unstable across truncations: {counts}")

    bfs_budget = rep_budget
    n_bfs = _clamp_by_count(pres.lp_rep_count, truncation, bfs_budget)
    while n_bfs > 0 and pres.lp_rep_count(n_bfs + box_pad) > bfs_budget:
        n_bfs -= 1
    d_bfs, n_bfs = _orbit_count_bfs(pres, n_bfs, box_pad=box_pad,
                                    rep_budget=bfs_budget)
    details["bfs_count"] = d_bfs
    details["bfs_truncation"] = n_bfs
    if d_bfs != d_lab:
        raise InconclusiveError(
            f"orbit BFS found {d_bfs} orbits at truncation {n_bfs} but "
            f"canonical labels found {d_lab} at truncation {n_lab}")

    if pres.factor is not None:
        ok, witness = _verify_factor(pres, truncation, rng, samples)
        details["factor_ok"] = ok
        if not ok:
            raise InconclusiveError(
                f"factor oracle failed on {witness}; presentation data "
                "inconsistent")
        if d_lab != 1:
            raise InconclusiveError(
                f"factor oracle certifies one double coset but counting "
                f"found {d_lab}")
    return d_lab


# -- the verification report ------------------------------------------------

@dataclass
class VerificationReport:
    """Machine-readable outcome of checking the structure hypotheses."""

    presentation: str
    truncation: int
    index_L: int | None = None
    index_Lp: int | None = None
    intersection_order: int | None = None
    double_cosets: int | None = None
    exhaustion_depth: int | None = None
    passed: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    index_certificate: IndexCertificate | None = None

    @property
    def all_passed(self) -> bool:
        return all(self.passed.get(h) is True for h in HYPOTHESES)

    @property
    def inconclusive(self) -> bool:
        return (not self.all_passed
                and all(self.passed.get(h) in (True, None)
                        for h in HYPOTHESES))

    @property
    def ok_l(self) -> bool:
        return self.passed.get("index_L") is True

    @property
    def ok_lp(self) -> bool:
        return self.passed.get("index_Lp") is True

    def exit_code(self) -> int:
        if self.all_passed:
            return 0
        return 3 if self.inconclusive else 1

    def to_json_dict(self) -> dict:
        return {
            "index_L": self.index_L,
            "index_Lp": self.index_Lp,
            "intersection_order": self.intersection_order,
            "double_cosets": self.double_cosets,
            "exhaustion_depth": self.exhaustion_depth,
            "truncation": self.truncation,
            "passed": {h: self.passed.get(h) for h in HYPOTHESES},
            "warnings": list(self.warnings),
            "presentation": self.presentation,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=False)


def _scan_intersection(pres: CWLPresentation, truncation: int,
                       budget: int, report: VerificationReport):
    n_eff = truncation
    while n_eff > 1 and pres.enum_size(n_eff) > budget:
        n_eff -= 1
    if n_eff < truncation:
        report.warnings.append(
            f"intersection scan clamped to truncation {n_eff} "
            f"(slice budget {budget})")
    counts = {}
    last_elems = None
    for n in range(1, n_eff + 1):
        elems = [h for h in pres.enumerate_h(n)
                 if pres.member_l(h) and pres.member_lp(h)]
        counts[n] = len(elems)
        last_elems = elems

    hint_ok = None
    order = counts.get(n_eff)
    if pres.intersection_hint is not None:
        hint = list(pres.intersection_hint(truncation))
        hint_keys = {pres.serialize(h) for h in hint}
        hint_ok = (len(hint_keys) == len(hint)
                   and all(pres.member_l(h) and pres.member_lp(h)
                           for h in hint)
                   and all(pres.serialize(h) in hint_keys
                           for h in last_elems or ()))
        if hint_ok:
            order = len(hint)
        else:
            report.warnings.append("intersection hint inconsistent with "
                                   "enumerated slice; falling back")
    report.intersection_order = order

    values = [counts[n] for n in sorted(counts)]
    if hint_ok and values and values[-1] == order:
        report.passed["compact_intersection"] = True
    elif len(values) >= 2 and values[-1] == values[-2]:
        report.passed["compact_intersection"] = True
    elif (len(values) >= 3
          and all(a < b for a, b in zip(values, values[1:]))):
        report.passed["compact_intersection"] = False
        report.warnings.append(
            f"intersection grows without stabilizing: {values} at "
            f"truncations {sorted(counts)}")
    else:
        report.passed["compact_intersection"] = None
        report.warnings.append(
            f"intersection stability undetermined at truncation {n_eff}")


def _scan_exhaustion(pres: CWLPresentation, truncation: int, budget: int,
                     samples: int, rng: random.Random,
                     report: VerificationReport):
    depth_cap = 2 * truncation
    n_eff = truncation
    while n_eff > 1 and pres.enum_size(n_eff) > budget:
        n_eff -= 1
    if n_eff < truncation:
        report.warnings.append(
            f"exhaustion sweep exhaustive to truncation {n_eff}, "
            f"sampled at {truncation}")
    elems = itertools.chain(
        pres.enumerate_h(n_eff),
        (pres.random_h(truncation, rng) for _ in range(samples)))
    depth = 0
    ok = True
    for h in elems:
        for member, step in ((pres.member_l, pres.conj_t),
                             (pres.member_lp, pres.conj_t_inv)):
            g = h
            for k in range(depth_cap + 1):
                if member(g):
                    depth = max(depth, k)
                    break
                g = step(g)
            else:
                ok = False
                report.warnings.append(
                    f"exhaustion failed within depth {depth_cap} for "
                    f"{pres.serialize(h)}")
                break
        if not ok:
            break
    report.exhaustion_depth = depth if ok else None
    report.passed["exhaustion"] = ok


def verify_conditions(pres: CWLPresentation, truncation: int, *,
                      rng: random.Random | None = None,
                      samples: int = 200,
                      enum_budget: int = 100_000,
                      cert_budget: int = 100_000,
                      rep_budget: int = 5000) -> VerificationReport:
    """Check all structure hypotheses at a truncation and report constants.

    Flags are True/False per hypothesis, or None when the truncation could
    not decide; every clamp and every failure witness lands in warnings.
    """
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    rng = rng or random.Random(0xCF12)
    report = VerificationReport(pres.presentation_id, truncation)

    cert = certify_transversals(pres, truncation, rng=rng,
                                samples=min(samples, 100), budget=cert_budget)
    report.index_certificate = cert
    report.index_L = cert.index_l
    report.index_Lp = cert.index_lp
    report.passed["index_L"] = cert.ok_l
    report.passed["index_Lp"] = cert.ok_lp
    report.warnings.extend(cert.warnings)
    for w in cert.witnesses:
        report.warnings.append(f"transversal witness: {w}")

    _scan_intersection(pres, truncation, enum_budget, report)
    _scan_exhaustion(pres, truncation, enum_budget, samples, rng, report)

    try:
        details = {}
        report.double_cosets = orbit_count(pres, truncation, rng=rng,
                                           rep_budget=rep_budget,
                                           samples=samples, _details=details)
        report.passed["double_cosets"] = True
        if details.get("label_truncation", truncation) < truncation:
            report.warnings.append(
                f"double cosets counted at truncation "
                f"{details['label_truncation']} (rep budget {rep_budget})")
    except InconclusiveError as exc:
        report.double_cosets = None
        report.passed["double_cosets"] = None
        report.warnings.append(f"double cosets inconclusive: {exc}")
    return report


# -- the conjugation trick --------------------------------------------------

def conjugate_presentation(pres: CWLPresentation, k: int) -> CWLPresentation:
    """Replace L by t^k L t^-k, leaving L' untouched.  The factor oracle
    and intersection hint are dropped (they describe the original L)."""
    if k == 0:
        return pres

    def member_l(g):
        return pres.member_l(conj_power(pres, g, -k))

    def canon_l(h):
        return conj_power(pres, pres.canon_l(conj_power(pres, h, -k)), k)

    def enumerate_l(n):
        for l in pres.enumerate_l(n):
            yield conj_power(pres, l, k)

    return CWLPresentation(
        presentation_id=f"{pres.presentation_id}@tconj{k}",
        identity=pres.identity,
        mul=pres.mul,
        inv=pres.inv,
        conj_t=pres.conj_t,
        conj_t_inv=pres.conj_t_inv,
        member_h=pres.member_h,
        member_l=member_l,
        member_lp=pres.member_lp,
        canon_l=canon_l,
        canon_lp=pres.canon_lp,
        transversal_l=tuple(conj_power(pres, r, k)
                            for r in pres.transversal_l),
        transversal_lp=pres.transversal_lp,
        enumerate_h=pres.enumerate_h,
        enum_size=pres.enum_size,
        enumerate_l=enumerate_l,
        enumerate_lp=pres.enumerate_lp,
        enumerate_lp_reps=pres.enumerate_lp_reps,
        lp_rep_count=pres.lp_rep_count,
        random_h=pres.random_h,
        serialize=pres.serialize,
        factor=None,
        intersection_hint=None,
    )


def promote_transitive(pres: CWLPresentation, truncation: int, *,
                       rng: random.Random | None = None,
                       rep_budget: int = 5000) -> CWLPresentation:
    """Replace L by its t-conjugate with the smallest |k|, k <= 0, for
    which the certified double-coset count is 1; identity when d = 1
    already."""
    rng = rng or random.Random(0xBEEF)
    for k in range(0, -truncation - 1, -1):
        candidate = conjugate_presentation(pres, k)
        try:
            d = orbit_count(candidate, truncation, rng=rng,
                            rep_budget=rep_budget)
        except InconclusiveError:
            continue
        if d == 1:
            return candidate
    raise InconclusiveError(
        f"no conjugate t^k L t^-k with k in [-{truncation}, 0] reaches a "
        "single double coset at this truncation")
