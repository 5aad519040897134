"""Euclidean triangle groups (2,4,4), (3,3,3), (2,3,6) acting on the plane.

Generator ``i`` is the reflection in side ``i`` of the base triangle.  The
orderings are chosen so that the Coxeter matrix is ``triangle(p, q, r)`` with
m(0,1)=p, m(0,2)=q, m(1,2)=r for the type ``pqr``.  (2,4,4) lives over Q, the
other two over Q(sqrt 3).
"""

from __future__ import annotations

import random
from fractions import Fraction as F

from coxref.core.matrix import triangle
from coxref.errors import PointParseError
from coxref.qsqrt3 import QSqrt3, format_scalar, parse_scalar
from coxref.spaces import planar
from coxref.spaces.base import SpaceModel, word_of

TYPES = ("244", "333", "236")

# vertices A, B, C and, per generator, the pair of vertices spanning its side
_DATA = {
    "244": dict(
        vertices=((F(0), F(0)), (F(1), F(0)), (F(1), F(1))),
        sides=((0, 1), (1, 2), (0, 2)),           # y=0, x=1, y=x
        x0=(F(3, 4), F(1, 4)),
        matrix=(2, 4, 4),
    ),
    "333": dict(
        vertices=((QSqrt3(0), QSqrt3(0)), (QSqrt3(1), QSqrt3(0)), (QSqrt3(F(1, 2)), QSqrt3(0, F(1, 2)))),
        sides=((0, 1), (1, 2), (2, 0)),
        x0=(QSqrt3(F(1, 2)), QSqrt3(0, F(1, 6))),   # centroid
        matrix=(3, 3, 3),
    ),
    "236": dict(
        vertices=((QSqrt3(0), QSqrt3(0)), (QSqrt3(1), QSqrt3(0)), (QSqrt3(1), QSqrt3(0, F(1, 3)))),
        sides=((1, 2), (0, 1), (2, 0)),           # x=1, y=0, y=x/sqrt3
        x0=(QSqrt3(F(3, 4)), QSqrt3(F(1, 8))),
        matrix=(2, 3, 6),
    ),
}


class TriangleModel(SpaceModel):
    proper_bound = F(1, 2)

    def __init__(self, kind):
        kind = str(kind).replace(",", "").replace("(", "").replace(")", "").replace(" ", "")
        if kind not in _DATA:
            raise ValueError(f"triangle type must be one of {TYPES}, got {kind!r}")
        data = _DATA[kind]
        super().__init__(triangle(*data["matrix"]))
        self.kind = kind
        self.name = f"tri{kind}"
        self.exact_rational = kind == "244"
        self.vertices = data["vertices"]
        self.sides = data["sides"]
        self._x0 = data["x0"]
        self._gens = []
        for i, j in self.sides:
            p, q = self.vertices[i], self.vertices[j]
            self._gens.append(planar.reflection_map(p, planar.sub(q, p)))
        zero, one = self.scalar(0), self.scalar(1)
        self._maps = {(): (((one, zero), (zero, one)), (zero, zero))}

    def scalar(self, x):
        if self.exact_rational:
            if isinstance(x, QSqrt3):
                if x.b != 0:
                    raise PointParseError("(2,4,4) points must be rational")
                return x.a
            return F(x)
        return QSqrt3.coerce(x)

    @property
    def x0(self):
        return self._x0

    def affine(self, g):
        word = word_of(g)
        f = self._maps.get(word)
        if f is None:
            f = planar.compose(self.affine(word[:-1]), self._gens[word[-1]])
            self._maps[word] = f
        return f

    def act(self, s, p):
        return planar.apply_map(self._gens[s], p)

    def apply(self, g, p):
        return planar.apply_map(self.affine(g), p)

    def dist2(self, p, q):
        d = planar.sub(p, q)
        return planar.dot(d, d)

    def face_point(self, s):
        i, j = self.sides[s]
        return planar.scale(F(1, 2), planar.add(self.vertices[i], self.vertices[j]))

    def segment_point(self, p, q, t):
        return planar.add(p, planar.scale(F(t), planar.sub(q, p)))

    def halfspace_functional(self, r):
        """Affine functional positive on X_r^+, zero on the wall of ``r``."""
        f = self.affine(self.reflection(r))
        x0 = self.x0
        n = planar.sub(x0, planar.apply_map(f, x0))

        def functional(p):
            return planar.dot(planar.sub(p, planar.apply_map(f, p)), n)

        return functional

    def halfspace_sign(self, p, r):
        return planar.sign(self.halfspace_functional(r)(p))

    def encloses(self, reflections, box=100):
        """Clip a large square by the half-planes and compare with the base triangle."""
        B = self.scalar(box)
        poly = [(-B, -B), (B, -B), (B, B), (-B, B)]
        for r in reflections:
            poly = planar.clip(poly, self.halfspace_functional(r))
            if not poly:
                return False
        return len(poly) == 3 and set(poly) == set(self.vertices)

    def chamber(self, g=()):
        """Exact vertices of the closed chamber g C."""
        f = self.affine(g)
        return tuple(planar.apply_map(f, v) for v in self.vertices)

    def sample_points(self, count, seed=0, off_wall=True, span=2):
        from coxref.spaces.geometry import descend
        from coxref.spaces.base import Membership

        rng = random.Random(seed)
        out = []
        while len(out) < count:
            coords = []
            for _ in range(2):
                den = rng.randint(2, 13)
                x = F(rng.randint(-span * den, (span + 1) * den), den)
                if not self.exact_rational and rng.random() < 0.5:
                    x = QSqrt3(x, F(rng.randint(-den, den), 2 * den))
                coords.append(self.scalar(x))
            p = tuple(coords)
            if off_wall and descend(self, p).membership is not Membership.INTERIOR:
                continue
            out.append(p)
        return out

    def parse_point(self, text):
        parts = text.split(",")
        if len(parts) != 2:
            raise PointParseError(f"expected 'x , y', got {text!r}")
        try:
            return tuple(self.scalar(parse_scalar(part)) for part in parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise PointParseError(str(exc)) from exc

    def format_point(self, p):
        return f"{format_scalar(p[0])} , {format_scalar(p[1])}"

    def point_json(self, p):
        return [format_scalar(p[0]), format_scalar(p[1])]
