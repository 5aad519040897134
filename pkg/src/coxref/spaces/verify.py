"""Exhaustive verification reports over group balls.

Every report counts the individual checks it ran and records each violation
as a JSON-ready dict; a correct model yields zero violations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from coxref.core.group import IDENTITY
from coxref.errors import WitnessNotFound
from coxref.spaces.base import Membership, Side
from coxref.spaces.geometry import chamber_membership, side

_SIGN_TO_SIDE = {1: Side.PLUS, 0: Side.WALL, -1: Side.MINUS}


@dataclass
class Report:
    check: str
    model: str
    radius: int | None = None
    checks: int = 0
    violations: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.violations

    def to_json(self):
        return {
            "check": self.check,
            "model": self.model,
            "radius": self.radius,
            "checks": self.checks,
            "violations": self.violations,
            "witnesses": self.witnesses,
            "details": self.details,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class WallNeighborhoodWitness:
    s0: int
    y0: object
    epsilon: Fraction
    x0_witness: object

    def to_json(self, model):
        return {
            "s0": model.generator_names[self.s0],
            "y0": model.point_json(self.y0),
            "epsilon": str(self.epsilon),
            "x0_witness": model.point_json(self.x0_witness),
        }


def _word(model, g):
    return model.format_word(g) or "1"


def wall_points(model, radius=2):
    """Points on walls: images of the face points of C under a small ball."""
    faces = [model.face_point(s) for s in range(model.rank)]
    return [model.apply(g, y) for g in model.group.ball(radius) for y in faces]


def default_samples(model, count=40, seed=0):
    return model.sample_points(count, seed, off_wall=False) + model.chamber_samples() + wall_points(model)


# -- metric side trichotomy --------------------------------------------------

def verify_lemma1(model, radius, samples=None):
    """Trichotomy of the metric side test, checked against the fixed-point set and any geometric oracle."""
    report = Report("lemma1", model.name, radius)
    samples = default_samples(model) if samples is None else samples
    for r in model.reflections(radius):
        for p in samples:
            report.checks += 1
            sd = side(model, p, r)
            rp = model.apply(r, p)
            problems = []
            if (sd is Side.WALL) != (rp == p):
                problems.append("wall iff fixed")
            flipped = side(model, rp, r)
            if {sd, flipped} not in ({Side.PLUS, Side.MINUS}, {Side.WALL}):
                problems.append("r does not swap the half-spaces")
            oracle = model.halfspace_sign(p, r)
            if oracle is not None and _SIGN_TO_SIDE[oracle] is not sd:
                problems.append(f"geometric side {oracle}")
            if problems:
                report.violations.append({"point": model.point_json(p), "reflection": _word(model, r),
                                          "side": sd.value, "problems": problems})
    report.details["samples"] = len(samples)
    return report


# -- chamber as intersection of half-spaces ----------------------------------

def verify_lemma2(model, radius, samples=None):
    """Interior for the generator walls  <=>  Plus for every reflection in the ball."""
    report = Report("lemma2", model.name, radius)
    samples = default_samples(model) if samples is None else samples
    refl = model.reflections(radius)
    interior = 0
    for p in samples:
        report.checks += 1
        by_s = chamber_membership(model, p)
        all_plus = all(side(model, p, r) is Side.PLUS for r in refl)
        interior += by_s is Membership.INTERIOR
        if (by_s is Membership.INTERIOR) != all_plus:
            report.violations.append({"point": model.point_json(p), "membership": by_s.value,
                                      "all_plus": all_plus})
    report.details.update(samples=len(samples), interior=interior, reflections=len(refl))
    return report


# -- wall-neighbourhood witnesses --------------------------------------------

def _witness_checks(model, s0, y0, eps, x, radius):
    """Failures of a candidate witness (empty list when it is valid)."""
    fails = []
    four_eps2 = 4 * eps * eps
    if chamber_membership(model, x) is not Membership.INTERIOR:
        fails.append("witness not in C")
    if not model.dist2(y0, x) < eps * eps:
        fails.append("witness not within epsilon of y0")
    near = model.dist2(x, model.act(s0, x))
    if not near <= four_eps2:
        fails.append("d(x, s0 x) > 2 epsilon")
    for s in range(model.rank):
        if s != s0 and not model.dist2(x, model.act(s, x)) > four_eps2:
            fails.append(f"d(x, s{s} x) <= 2 epsilon")
    checked = 0
    for g in model.group.ball(radius):
        if g.word in ((), (s0,)):
            continue
        checked += 1
        if not model.dist2(x, model.apply(g, x)) > near:
            fails.append(f"{_word(model, g)} moves the witness no further than s0")
    return fails, checked


def verify_lemma4(model, s0, radius=6, max_halvings=30):
    """Find a point of C strictly closer to its s0-image than to any other orbit point in the ball."""
    y0 = model.face_point(s0)
    if side(model, y0, s0) is not Side.WALL or any(
            side(model, y0, s) is not Side.PLUS for s in range(model.rank) if s != s0):
        raise WitnessNotFound(f"face point of {s0} is not on its wall alone")
    others = [model.dist2(y0, model.act(s, y0)) for s in range(model.rank) if s != s0]
    eps = Fraction(1)
    if others:
        # B(y0, 2 eps) stays inside every other X_s^+
        while 16 * eps * eps > min(others):
            eps /= 2
    t = Fraction(model.witness_fraction)
    for _ in range(max_halvings):
        x = model.segment_point(y0, model.x0, t)
        fails, _ = _witness_checks(model, s0, y0, eps, x, radius)
        if not fails:
            return WallNeighborhoodWitness(s0, y0, eps, x)
        t /= 2
    raise WitnessNotFound(f"no witness for generator {s0} within {max_halvings} halvings")


def lemma4_report(model, radius=6):
    report = Report("lemma4", model.name, radius)
    for s0 in range(model.rank):
        try:
            w = verify_lemma4(model, s0, radius)
        except WitnessNotFound as exc:
            report.violations.append({"s0": model.generator_names[s0], "error": str(exc)})
            continue
        fails, checked = _witness_checks(model, s0, w.y0, w.epsilon, w.x0_witness, radius)
        report.checks += checked + model.rank + 2
        report.witnesses.append(w.to_json(model))
        report.violations.extend({"s0": model.generator_names[s0], "error": f} for f in fails)
    return report


# -- adjacent chambers -------------------------------------------------------

def verify_lemma5(model, radius, samples=None):
    """If every sampled point of sC is on the minus side of r, then r = s."""
    report = Report("lemma5", model.name, radius)
    base = model.chamber_samples() if samples is None else samples
    pairs = []
    for s in range(model.rank):
        images = [model.act(s, q) for q in base]
        for r in model.reflections(radius):
            report.checks += 1
            hyp = all(side(model, x, r) is Side.MINUS for x in images)
            pairs.append([model.generator_names[s], _word(model, r), hyp])
            if hyp and r.word != (s,):
                report.violations.append({"s": model.generator_names[s], "r": _word(model, r)})
    report.details["pairs"] = pairs
    report.details["samples_per_chamber"] = len(base)
    return report


# -- length versus side of the generator walls -------------------------------

def verify_lemma6(model, radius):
    """l(g) <= l(sg) puts g x0 on the plus side of s; l(sg) < l(g) puts it on the minus side."""
    report = Report("lemma6", model.name, radius)
    group = model.group
    for g in group.ball(radius):
        x = model.apply(g, model.x0)
        for s in range(model.rank):
            report.checks += 1
            shorter = group.length((s,) + g.word) < len(g)
            expected = Side.MINUS if shorter else Side.PLUS
            got = side(model, x, s)
            if got is not expected:
                report.violations.append({"gamma": _word(model, g), "s": model.generator_names[s],
                                          "expected": expected.value, "got": got.value})
    return report


# -- properness and chamber stabilizer ---------------------------------------

def properness_check(model, p, radius_bound, ball_radius):
    """Number of ball elements moving ``p`` strictly less than ``radius_bound``."""
    b2 = radius_bound * radius_bound
    return sum(model.dist2(model.apply(g, p), p) < b2 for g in model.group.ball(ball_radius))


def properness_report(model, radius, bound=None):
    """Counts must already be stable at the given radius (unchanged two lengths further out)."""
    bound = model.proper_bound if bound is None else bound
    report = Report("proper", model.name, radius)
    counts = []
    for p in model.chamber_samples():
        report.checks += 1
        inner = properness_check(model, p, bound, radius)
        outer = properness_check(model, p, bound, radius + 2)
        counts.append(inner)
        if inner != outer:
            report.violations.append({"point": model.point_json(p), "count": inner, "count_outer": outer})
    report.details.update(bound=str(bound), counts=counts)
    return report


def chamber_stabilizer_check(model, radius):
    """No nonidentity element of the ball sends x0 into the open chamber C."""
    report = Report("stabilizer", model.name, radius)
    for g in model.group.ball(radius):
        if g == IDENTITY:
            continue
        report.checks += 1
        if chamber_membership(model, model.apply(g, model.x0)) is Membership.INTERIOR:
            report.violations.append({"gamma": _word(model, g)})
    return report


CHECKS = {
    "1": verify_lemma1,
    "2": verify_lemma2,
    "4": lemma4_report,
    "5": verify_lemma5,
    "6": verify_lemma6,
    "proper": properness_report,
    "stabilizer": chamber_stabilizer_check,
}


def run_check(model, which, radius):
    try:
        fn = CHECKS[str(which)]
    except KeyError:
        raise ValueError(f"unknown check {which!r}; choose from {sorted(CHECKS)}") from None
    return fn(model, radius)
