"""The real line with the infinite dihedral group generated by x -> -x and x -> 2 - x."""

from __future__ import annotations

import random
from fractions import Fraction

from coxref.core.matrix import dihedral
from coxref.errors import PointParseError
from coxref.spaces.base import SpaceModel, word_of

_GENERATORS = ((-1, Fraction(0)), (-1, Fraction(2)))


def _compose(f, g):
    # (f o g)(x) = f(g(x))
    return (f[0] * g[0], f[0] * g[1] + f[1])


class LineModel(SpaceModel):
    """Walls sit at the integers; C = (0, 1) and x0 = 1/2."""

    name = "line"
    proper_bound = Fraction(2)

    def __init__(self):
        super().__init__(dihedral("inf", names=("r0", "r1")))
        self._maps = {(): (1, Fraction(0))}

    @property
    def x0(self):
        return Fraction(1, 2)

    def affine(self, g):
        """``(sign, shift)`` with the element acting as ``x -> sign*x + shift``."""
        word = word_of(g)
        f = self._maps.get(word)
        if f is None:
            f = _compose(self.affine(word[:-1]), _GENERATORS[word[-1]])
            self._maps[word] = f
        return f

    def act(self, s, p):
        a, b = _GENERATORS[s]
        return a * p + b

    def apply(self, g, p):
        a, b = self.affine(g)
        return a * p + b

    def dist2(self, p, q):
        return (p - q) ** 2

    def wall_position(self, r):
        """The fixed point of the reflection ``r``."""
        _, b = self.affine(self.reflection(r))
        return b / 2

    def face_point(self, s):
        return Fraction(s)

    def segment_point(self, p, q, t):
        return p + Fraction(t) * (q - p)

    def halfspace_sign(self, p, r):
        a, b = self.affine(self.reflection(r))
        d = (p - (a * p + b)) * (self.x0 - (a * self.x0 + b))
        return (d > 0) - (d < 0)

    def encloses(self, reflections):
        lower, upper = None, None
        for r in reflections:
            k = self.wall_position(r)
            if k <= 0:
                lower = k if lower is None else max(lower, k)
            else:
                upper = k if upper is None else min(upper, k)
        return lower == 0 and upper == 1

    def sample_points(self, count, seed=0, off_wall=True, span=10):
        rng = random.Random(seed)
        out = []
        while len(out) < count:
            q = rng.randint(1, 12)
            p = Fraction(rng.randint(-span * q, span * q), q)
            if off_wall and p.denominator == 1:
                continue
            out.append(p)
        return out

    def parse_point(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise PointParseError(f"expected a rational p/q, got {text!r}") from exc

    def format_point(self, p):
        return str(p)
