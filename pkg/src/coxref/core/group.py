"""Coxeter group elements, balls, reflections.

Two independent routes to normal forms live side by side:

* ``reduce`` / ``normal_form(..., method="braid")``: braid-move closure on the
  presentation (:mod:`coxref.core.words`);
* ``method="table"``: breadth-first ball enumeration keyed by the exact Tits
  representation (:mod:`coxref.core.tits`).

``method="auto"`` uses the table when the element is already enumerated and
the braid closure otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from coxref.config import LIMITS
from coxref.core.tits import TitsRepresentation
from coxref.core.words import CLOSURE_CAP, check_word, reduce_word, reduced_words, shortlex_key
from coxref.errors import BallTooLarge, NotAReflection, OrderExceedsCap

BALL_CAP = LIMITS.ball_elements


@dataclass(frozen=True)
class GroupElement:
    """An element stored by its ShortLex normal form."""

    word: tuple = ()

    def __len__(self):
        return len(self.word)

    @property
    def length(self):
        return len(self.word)

    def is_identity(self):
        return not self.word

    def __lt__(self, other):
        return shortlex_key(self.word) < shortlex_key(other.word)


IDENTITY = GroupElement(())


@dataclass(frozen=True)
class ReflectionElement:
    """The conjugate ``u s u^-1`` with ``u`` the ShortLex-least minimal conjugator."""

    conjugator: GroupElement
    core: int
    element: GroupElement = field(compare=False)

    @property
    def word(self):
        return self.element.word

    @property
    def length(self):
        return len(self.element.word)

    def __lt__(self, other):
        return self.element < other.element


class CoxeterGroup:
    """Normal forms, lengths and ball enumeration for one Coxeter matrix."""

    def __init__(self, matrix, closure_cap=CLOSURE_CAP, ball_cap=BALL_CAP):
        self.matrix = matrix
        self.rank = matrix.rank
        self.closure_cap = closure_cap
        self.ball_cap = ball_cap
        self._rep = None
        self._keys = {}
        self._words = []
        self._level_starts = []
        self._finite = False
        self._reflections = {}

    @property
    def rep(self):
        if self._rep is None:
            self._rep = TitsRepresentation(self.matrix)
            self._keys[self._rep.identity] = 0
            self._words.append(())
            self._level_starts.append(0)
        return self._rep

    @property
    def radius(self):
        """Largest radius whose ball is completely enumerated."""
        self.rep
        if self._finite:
            return float("inf")
        return len(self._level_starts) - 1

    # -- ball table ---------------------------------------------------------

    def _grow(self, radius, cap):
        rep = self.rep
        while not self._finite and len(self._level_starts) - 1 < radius:
            start = self._level_starts[-1]
            stop = len(self._words)
            fresh = {}
            for i in range(start, stop):
                word = self._words[i]
                key = rep.evaluate(word)
                for s in range(self.rank):
                    if word and word[-1] == s:
                        continue
                    nkey = rep.act(key, s)
                    if nkey in self._keys or nkey in fresh:
                        continue
                    if stop + len(fresh) >= cap:
                        raise BallTooLarge(f"ball of radius {radius} has more than {cap} elements")
                    fresh[nkey] = word + (s,)
            if not fresh:
                self._finite = True
                break
            # parents are visited in ShortLex order and letters ascending, so
            # the first word found for each new element is its ShortLex normal form
            self._level_starts.append(stop)
            for nkey, word in fresh.items():
                self._keys[nkey] = len(self._words)
                self._words.append(word)

    def _count_upto(self, radius):
        if radius + 1 < len(self._level_starts):
            return self._level_starts[radius + 1]
        return len(self._words)

    def ball(self, radius, cap=None):
        """All elements of length at most ``radius``, ShortLex-sorted."""
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        cap = self.ball_cap if cap is None else cap
        self._grow(radius, cap)
        n = self._count_upto(radius)
        if n > cap:
            raise BallTooLarge(f"ball of radius {radius} has more than {cap} elements")
        return [GroupElement(w) for w in self._words[:n]]

    def sphere_sizes(self, radius, cap=None):
        elements = self.ball(radius, cap)
        sizes = [0] * (radius + 1)
        for g in elements:
            sizes[len(g)] += 1
        return sizes

    def order(self, cap):
        """Exact order if it is at most ``cap``; raises :class:`OrderExceedsCap` otherwise."""
        radius = 0
        while not self._finite:
            try:
                self._grow(radius, cap)
            except BallTooLarge:
                raise OrderExceedsCap(f"group has more than {cap} elements") from None
            radius += 1
        if len(self._words) > cap:
            raise OrderExceedsCap(f"group has more than {cap} elements")
        return len(self._words)

    def is_finite(self, cap=None):
        try:
            self.order(self.ball_cap if cap is None else cap)
        except OrderExceedsCap:
            return False
        return True

    def longest_length(self):
        """Length of the longest element of a finite group (after enumeration)."""
        self.order(self.ball_cap)
        return len(self._words[-1])

    def lookup(self, word):
        """Normal form of ``word`` if its element is already in the table, else ``None``."""
        i = self._keys.get(self.rep.evaluate(word))
        return None if i is None else self._words[i]

    # -- normal forms -------------------------------------------------------

    def reduce(self, word):
        return reduce_word(self.matrix, word, self.closure_cap)

    def reduced_words(self, word):
        return reduced_words(self.matrix, word, self.closure_cap)

    def normal_form(self, word, method="auto"):
        word = check_word(self.matrix, word)
        if method == "braid":
            return GroupElement(self.reduce(word))
        if method == "table":
            self._grow(len(word), self.ball_cap)
            return GroupElement(self.lookup(word))
        if method != "auto":
            raise ValueError(f"unknown method {method!r}")
        hit = self.lookup(word)
        if hit is not None:
            return GroupElement(hit)
        return GroupElement(self.reduce(word))

    def element(self, word):
        return self.normal_form(word)

    def length(self, word):
        return len(self.normal_form(word).word)

    def multiply(self, *elements):
        word = ()
        for g in elements:
            word += _word_of(g)
        return self.normal_form(word)

    def invert(self, g):
        return self.normal_form(tuple(reversed(_word_of(g))))

    def left_descents(self, g):
        w = _word_of(g)
        n = self.length(w)
        return frozenset(s for s in range(self.rank) if self.length((s,) + w) < n)

    def right_descents(self, g):
        w = _word_of(g)
        n = self.length(w)
        return frozenset(s for s in range(self.rank) if self.length(w + (s,)) < n)

    # -- reflections --------------------------------------------------------

    def reflections(self, radius, cap=None):
        """Canonical reflections of length at most ``radius``, ShortLex by element."""
        if radius in self._reflections:
            return self._reflections[radius]
        self.ball(radius, cap)
        found = {}
        for u in self.ball(max((radius - 1) // 2, 0), cap):
            if 2 * len(u) + 1 > radius:
                break
            for s in range(self.rank):
                g = self.normal_form(u.word + (s,) + tuple(reversed(u.word)))
                if len(g) == 2 * len(u) + 1 and g not in found:
                    found[g] = ReflectionElement(u, s, g)
        out = sorted(found.values())
        self._reflections[radius] = out
        return out

    def generator_reflection(self, s):
        return ReflectionElement(IDENTITY, s, GroupElement((s,)))

    def reflection(self, g):
        """Canonicalize an element known to be a reflection."""
        word = self.normal_form(_word_of(g)).word
        n = len(word)
        if n % 2 == 0:
            raise NotAReflection(f"{word} has even length")
        k = n // 2
        best = None
        for w in self.reduced_words(word):
            if w == tuple(reversed(w)) and (best is None or w[:k] < best[:k]):
                best = w
        if best is None:
            raise NotAReflection(f"{word} is not a conjugate of a generator")
        return ReflectionElement(GroupElement(best[:k]), best[k], GroupElement(word))


def _word_of(g):
    if isinstance(g, (GroupElement, ReflectionElement)):
        return g.word
    if isinstance(g, int):
        return (g,)
    return tuple(g)


@lru_cache(maxsize=64)
def group_for(matrix):
    """Shared, lazily-grown group object for a matrix."""
    return CoxeterGroup(matrix)


# -- functional surface ----------------------------------------------------

def reduce(matrix, word):
    return group_for(matrix).reduce(word)


def normal_form(matrix, word, method="auto"):
    return group_for(matrix).normal_form(word, method)


def length(matrix, word):
    return group_for(matrix).length(_word_of(word))


def multiply(matrix, a, b):
    return group_for(matrix).multiply(a, b)


def invert(matrix, a):
    return group_for(matrix).invert(a)


def left_descents(matrix, g):
    return group_for(matrix).left_descents(g)


def ball(matrix, radius, cap=BALL_CAP):
    return group_for(matrix).ball(radius, cap)


def group_order(matrix, cap):
    return group_for(matrix).order(cap)


def reflections_in_ball(matrix, radius, cap=BALL_CAP):
    return group_for(matrix).reflections(radius, cap)
