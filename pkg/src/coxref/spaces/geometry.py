"""Side tests, chamber membership, descent and wall counting on a :class:`SpaceModel`."""

from __future__ import annotations

from dataclasses import dataclass, field

from coxref.config import LIMITS
from coxref.core.group import GroupElement
from coxref.errors import IterationCapExceeded, NotEnclosing
from coxref.spaces.base import Membership, Side

DESCENT_CAP = LIMITS.descent_steps


def side(model, p, r):
    """Which side of the wall of ``r`` the point ``p`` is on, by comparing distances to x0."""
    r = model.reflection(r)
    x0 = model.x0
    here = model.dist2(x0, p)
    there = model.dist2(x0, model.apply(r, p))
    if there < here:
        return Side.MINUS
    if there > here:
        return Side.PLUS
    return Side.WALL


def chamber_membership(model, p):
    sides = [side(model, p, s) for s in range(model.rank)]
    if Side.MINUS in sides:
        return Membership.OUTSIDE
    if Side.WALL in sides:
        return Membership.BOUNDARY
    return Membership.INTERIOR


@dataclass(frozen=True)
class Descent:
    gamma: GroupElement
    point: object
    steps: tuple
    membership: Membership
    distances: tuple = field(repr=False, default=())

    @property
    def step_count(self):
        return len(self.steps)


def descend(model, p, cap=DESCENT_CAP):
    """Fold ``p`` into the closed base chamber, always using the least generator whose wall separates.

    Returns ``gamma = s1...sn`` and ``q = sn...s1 p`` so that ``gamma . q = p``.
    """
    steps = []
    x0 = model.x0
    distances = [model.dist2(x0, p)]
    q = p
    while True:
        sides = [side(model, q, s) for s in range(model.rank)]
        if Side.MINUS not in sides:
            membership = Membership.BOUNDARY if Side.WALL in sides else Membership.INTERIOR
            break
        if len(steps) >= cap:
            raise IterationCapExceeded(f"descent did not finish within {cap} steps")
        s = sides.index(Side.MINUS)
        q = model.act(s, q)
        steps.append(s)
        distances.append(model.dist2(x0, q))
    gamma = model.group.normal_form(tuple(steps))
    return Descent(gamma, q, tuple(steps), membership, tuple(distances))


def gallery_distance(model, p, radius=None):
    """Number of walls strictly separating ``p`` from C.

    Reflections are scanned in growing balls.  If ``c`` walls are found among
    reflections of length at most ``R`` with ``R >= 2c + 1`` the count is final:
    a point at gallery distance ``k`` has separating reflections of lengths
    1, <=3, ..., <=2k-1, so a miss would show up by length 2c + 1.
    """
    here = model.dist2(model.x0, p)

    def separated(r):
        # d(x0, r p) = d(r x0, p) since r is an isometric involution
        return model.dist2(model.reflected_base(r), p) < here

    if radius is not None:
        return sum(separated(r) for r in model.reflections(radius))
    R = 1
    while True:
        count = sum(separated(r) for r in model.reflections(R))
        if R >= 2 * count + 1:
            return count
        R = 2 * count + 1


def minimal_wall_set(model, candidates):
    """Greedily drop redundant walls (canonical order) while the half-spaces still cut out C."""
    current = sorted({model.reflection(r) for r in candidates})
    if not model.encloses(current):
        raise NotEnclosing("the candidate half-spaces do not cut out the base chamber")
    for r in list(current):
        trial = [x for x in current if x != r]
        if trial and model.encloses(trial):
            current = trial
    return current
