"""The Cayley graph of a Coxeter system as a metric graph with unit edges.

The group acts by left multiplication; edges keep their generator label.  A
point is a vertex or a point on the edge ``{w, ws}`` at distance ``t`` from
``w``.  The wall of a reflection ``r`` is the set of midpoints of the edges
that ``r`` flips, and the base chamber is the open star of the identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from coxref.errors import PointParseError
from coxref.spaces.base import SpaceModel

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CayleyPoint:
    """Canonical form: ``t == 0`` for vertices; otherwise ``0 < t <= 1/2`` measured from ``base``."""

    base: tuple
    gen: int | None = None
    t: Fraction = Fraction(0)

    @property
    def is_vertex(self):
        return self.gen is None


class CayleyModel(SpaceModel):
    witness_fraction = Fraction(1, 2)
    proper_bound = Fraction(3)

    def __init__(self, matrix, name=None):
        super().__init__(matrix)
        self.name = name or "cayley"

    def nf(self, word):
        return self.group.normal_form(word, method="table").word

    def point(self, base, gen=None, t=0):
        """Canonicalize a vertex or an edge point."""
        base = self.nf(base)
        t = Fraction(t)
        if gen is None or t == 0:
            return CayleyPoint(base)
        if not 0 <= t <= 1:
            raise ValueError("edge parameter must lie in [0, 1]")
        other = self.nf(base + (gen,))
        if t == 1:
            return CayleyPoint(other)
        if t > HALF or (t == HALF and (len(other), other) < (len(base), base)):
            base, t = other, 1 - t
        return CayleyPoint(base, gen, t)

    def vertex(self, word=()):
        return self.point(word)

    def midpoint(self, word, gen):
        return self.point(word, gen, HALF)

    @property
    def x0(self):
        return CayleyPoint(())

    def act(self, s, p):
        return self.point((s,) + p.base, p.gen, p.t)

    def apply(self, g, p):
        from coxref.spaces.base import word_of

        return self.point(tuple(word_of(g)) + p.base, p.gen, p.t)

    def vertex_distance(self, u, v):
        return len(self.nf(tuple(reversed(u)) + tuple(v)))

    def _ends(self, p):
        if p.is_vertex:
            return [(p.base, Fraction(0))]
        return [(p.base, p.t), (self.nf(p.base + (p.gen,)), 1 - p.t)]

    def distance(self, p, q):
        if not p.is_vertex and not q.is_vertex and p.gen == q.gen:
            other = self.nf(p.base + (p.gen,))
            if q.base == p.base:
                return abs(p.t - q.t)
            if q.base == other:
                return abs(p.t - (1 - q.t))
        return min(a + self.vertex_distance(u, v) + b for u, a in self._ends(p) for v, b in self._ends(q))

    def dist2(self, p, q):
        return self.distance(p, q) ** 2

    def face_point(self, s):
        return self.midpoint((), s)

    def segment_point(self, p, q, t):
        """Only supports ``p`` and ``q`` on one closed edge (or equal vertices)."""
        t = Fraction(t)
        if p == q:
            return p
        edge = p if not p.is_vertex else q
        if edge.is_vertex:
            raise NotImplementedError("segment between two vertices")
        a, b = edge.base, self.nf(edge.base + (edge.gen,))

        def pos(x):
            if x.is_vertex:
                if x.base == a:
                    return Fraction(0)
                if x.base == b:
                    return Fraction(1)
            elif x.gen == edge.gen and x.base in (a, b):
                return x.t if x.base == a else 1 - x.t
            raise NotImplementedError("points not on a common edge")

        return self.point(a, edge.gen, pos(p) + t * (pos(q) - pos(p)))

    def encloses(self, reflections):
        # The intersection of the X_r^+ is the open star of 1 exactly when every
        # generator vertex s falls in some X_r^-: vertex s is Plus for every
        # reflection other than s itself.
        from coxref.spaces.geometry import side
        from coxref.spaces.base import Side

        reflections = list(reflections)
        for s in range(self.rank):
            p = self.vertex((s,))
            if all(side(self, p, r) is not Side.MINUS for r in reflections):
                return False
        return True

    def sample_points(self, count, seed=0, off_wall=True, max_length=6):
        rng = random.Random(seed)
        params = [Fraction(1, 3), Fraction(1, 4), Fraction(2, 5), Fraction(1, 5)]
        if not off_wall:
            params.append(HALF)
        out = []
        while len(out) < count:
            n = rng.randint(0, max_length)
            word = tuple(rng.randrange(self.rank) for _ in range(n))
            if rng.random() < 0.4:
                out.append(self.vertex(word))
            else:
                out.append(self.point(word, rng.randrange(self.rank), rng.choice(params)))
        return out

    def parse_point(self, text):
        tokens = text.split()
        if not tokens:
            raise PointParseError("empty point")
        kind, rest = tokens[0], tokens[1:]
        try:
            if kind == "vertex":
                return self.vertex(self.matrix.parse_word(" ".join(rest)))
            if kind == "mid" and rest:
                (gen,) = self.matrix.parse_word(rest[-1])
                return self.midpoint(self.matrix.parse_word(" ".join(rest[:-1])), gen)
            if kind == "edge" and len(rest) >= 2:
                (gen,) = self.matrix.parse_word(rest[-2])
                return self.point(self.matrix.parse_word(" ".join(rest[:-2])), gen, Fraction(rest[-1]))
        except (ValueError, ZeroDivisionError) as exc:
            raise PointParseError(str(exc)) from exc
        raise PointParseError("expected 'vertex <word>', 'mid <word> <gen>' or 'edge <word> <gen> <t>'")

    def format_point(self, p):
        word = self.matrix.format_word(p.base) or "1"
        if p.is_vertex:
            return f"vertex {word}"
        gen = self.generator_names[p.gen]
        if p.t == HALF:
            return f"mid {word} {gen}"
        return f"edge {word} {gen} {p.t}"
