"""The geodesic-space contract shared by the three model families."""

from __future__ import annotations

import enum
from abc import ABC, abstractmethod
from fractions import Fraction

from coxref.core.group import GroupElement, ReflectionElement, group_for
from coxref.errors import UnknownReflection


class Side(enum.Enum):
    PLUS = "plus"
    WALL = "wall"
    MINUS = "minus"


class Membership(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def word_of(g):
    if isinstance(g, (GroupElement, ReflectionElement)):
        return g.word
    if isinstance(g, int):
        return (g,)
    return tuple(g)


class SpaceModel(ABC):
    """A space with an isometric action of a Coxeter group and a base point ``x0`` in the chamber C.

    Distances are compared through ``dist2`` (the squared distance), which is
    exact in every model; Euclidean distances themselves need not lie in the
    scalar field.
    """

    name = "model"
    #: fraction of the way from a face point towards x0 used for wall-neighbourhood witnesses
    witness_fraction = Fraction(1, 4)
    #: radius used by the properness report
    proper_bound = Fraction(1)

    def __init__(self, matrix):
        self.matrix = matrix
        self.group = group_for(matrix)
        self.rank = matrix.rank
        self._known_reflections = set()

    @property
    def generator_names(self):
        return self.matrix.generator_names()

    def format_word(self, g):
        return self.matrix.format_word(word_of(g))

    # -- action -------------------------------------------------------------

    @abstractmethod
    def act(self, s, p):
        """Image of ``p`` under generator ``s``."""

    def apply(self, g, p):
        """Image of ``p`` under the element spelled by ``g`` (``s1...sn`` acts as ``s1(s2(...sn(p)))``)."""
        for s in reversed(word_of(g)):
            p = self.act(s, p)
        return p

    @abstractmethod
    def dist2(self, p, q):
        """Exact squared distance."""

    @property
    @abstractmethod
    def x0(self):
        ...

    # -- geometry hooks -----------------------------------------------------

    @abstractmethod
    def face_point(self, s):
        """A point of the wall of ``s`` on the closure of C, off every other wall."""

    @abstractmethod
    def segment_point(self, p, q, t):
        """Point at fraction ``t`` along a geodesic from ``p`` to ``q``."""

    @abstractmethod
    def sample_points(self, count, seed=0, off_wall=True):
        """Deterministic pseudo-random sample points."""

    @abstractmethod
    def encloses(self, reflections):
        """Whether the half-spaces X_r^+ of ``reflections`` intersect exactly in C."""

    def halfspace_sign(self, p, r):
        """Independent side oracle where the model has one (+1, 0, -1), else ``None``."""
        return None

    def chamber_samples(self):
        """x0 plus one point near each face of C, all inside C."""
        pts = [self.x0]
        for s in range(self.rank):
            pts.append(self.segment_point(self.face_point(s), self.x0, self.witness_fraction))
        return pts

    # -- reflections --------------------------------------------------------

    def reflection(self, r):
        """Validate ``r`` (a ReflectionElement or generator index) as a reflection of this group."""
        if isinstance(r, int) and not isinstance(r, bool):
            if not 0 <= r < self.rank:
                raise UnknownReflection(f"no generator {r}")
            return self.group.generator_reflection(r)
        if not isinstance(r, ReflectionElement):
            raise UnknownReflection(f"not a reflection: {r!r}")
        if r not in self._known_reflections:
            word = r.word
            if any(not isinstance(x, int) or not 0 <= x < self.rank for x in word):
                raise UnknownReflection(f"{word} is not a word of this group")
            if len(word) % 2 == 0 or self.group.length(word + word) != 0:
                raise UnknownReflection(f"{word} is not an involution of odd length")
            if self.group.normal_form(r.conjugator.word + (r.core,) + tuple(reversed(r.conjugator.word))).word != word:
                raise UnknownReflection(f"{word} does not match its conjugator data")
            self._known_reflections.add(r)
        return r

    def reflections(self, radius):
        return self.group.reflections(radius)

    def reflected_base(self, r):
        """``r . x0``, cached per reflection."""
        r = self.reflection(r)
        cache = self.__dict__.setdefault("_reflected_base", {})
        q = cache.get(r)
        if q is None:
            q = cache[r] = self.apply(r, self.x0)
        return q

    # -- text ---------------------------------------------------------------

    @abstractmethod
    def parse_point(self, text):
        ...

    @abstractmethod
    def format_point(self, p):
        ...

    def point_json(self, p):
        return self.format_point(p)
