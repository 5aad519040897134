"""Decide whether a finite permutation group with involutive generators is a Coxeter system.

Pipeline: breadth-first closure (word lengths over the given generators),
exhaustive scan of condition (F), recovery of m(s,t) as the order of ``st``,
and comparison of |W(m)| with |G|.  The canonical map W(m) -> G is onto because
every recovered relation holds in G, so equal finite orders make it bijective.
"""

from __future__ import annotations

from dataclasses import dataclass

from coxref.config import LIMITS
from coxref.core.conditionf import FScan, scan_tables
from coxref.core.group import CoxeterGroup
from coxref.core.matrix import validate_matrix
from coxref.errors import (
    CapExceeded,
    DuplicateGenerator,
    IdentityGenerator,
    NotInvolution,
    OrderExceedsCap,
    PermutationError,
)
from coxref.recognizer import perms

CLOSURE_CAP = LIMITS.recognizer_elements


@dataclass
class FiniteActionGroup:
    """Elements in ShortLex order of their minimal words, with Cayley tables both ways."""

    degree: int
    generators: list
    elements: list
    words: list
    index: dict
    left: list
    right: list

    @property
    def order(self):
        return len(self.elements)

    @property
    def rank(self):
        return len(self.generators)

    def length(self, i):
        return len(self.words[i])

    def element_of(self, word):
        p = perms.identity(self.degree)
        for s in word:
            p = perms.compose(p, self.generators[s])
        return self.index[p]


def close_group(generators, cap=CLOSURE_CAP):
    gens = [tuple(g) for g in generators]
    if not gens:
        raise PermutationError("need at least one generator")
    n = max(len(g) for g in gens)
    gens = [perms.pad(g, n) for g in gens]
    e = perms.identity(n)
    for i, g in enumerate(gens):
        if sorted(g) != list(range(n)):
            raise PermutationError(f"generator {i} is not a permutation")
        if g == e:
            raise IdentityGenerator(i)
        if perms.compose(g, g) != e:
            raise NotInvolution(i)
        if g in gens[:i]:
            raise DuplicateGenerator(i, gens.index(g))
    elements = [e]
    words = [()]
    index = {e: 0}
    frontier = 0
    while frontier < len(elements):
        p, w = elements[frontier], words[frontier]
        for s, g in enumerate(gens):
            q = perms.compose(p, g)
            if q not in index:
                if len(elements) >= cap:
                    raise CapExceeded(f"group has more than {cap} elements")
                index[q] = len(elements)
                elements.append(q)
                words.append(w + (s,))
        frontier += 1
    right = [[index[perms.compose(p, g)] for g in gens] for p in elements]
    left = [[index[perms.compose(g, p)] for g in gens] for p in elements]
    return FiniteActionGroup(n, gens, elements, words, index, left, right)


def condition_F_decide(group):
    return scan_tables(group.words, [len(w) for w in group.words], group.left, group.right, group.rank)


def recover_matrix(group):
    gens = group.generators
    return validate_matrix([[perms.order(perms.compose(s, t)) for t in gens] for s in gens])


@dataclass
class Verdict:
    status: str                 # "certified" | "not_coxeter" | "inconclusive"
    group_order: int
    matrix: object = None
    coxeter_order: int | None = None
    scan: FScan | None = None
    reason: str = ""

    @property
    def certified(self):
        return self.status == "certified"

    @property
    def counterexample(self):
        return None if self.scan is None else self.scan.counterexample

    def to_json(self):
        cx = self.counterexample
        return {
            "status": self.status,
            "group_order": self.group_order,
            "matrix": None if self.matrix is None else self.matrix.to_json(),
            "coxeter_order": self.coxeter_order,
            "checked_triples": None if self.scan is None else self.scan.checked,
            "counterexample": None if cx is None else {
                "gamma": [f"s{i}" for i in cx.gamma], "s": f"s{cx.s}", "t": f"s{cx.t}",
                "length": cx.length, "product_length": cx.product_length},
            "reason": self.reason,
        }


def certify_coxeter(group, cap=CLOSURE_CAP):
    scan = condition_F_decide(group)
    matrix = recover_matrix(group)
    if not scan.passed:
        return Verdict("not_coxeter", group.order, matrix, scan=scan, reason="condition (F) fails")
    try:
        w_order = CoxeterGroup(matrix, ball_cap=cap).order(cap)
    except OrderExceedsCap:
        if cap >= group.order:
            return Verdict("not_coxeter", group.order, matrix, scan=scan,
                           reason=f"W(m) has more than {cap} elements")
        return Verdict("inconclusive", group.order, matrix, scan=scan,
                       reason=f"order of W(m) exceeds cap {cap}")
    if w_order != group.order:
        return Verdict("not_coxeter", group.order, matrix, w_order, scan,
                       reason="|W(m)| differs from |G|")
    return Verdict("certified", group.order, matrix, w_order, scan)


def regular_realization(matrix, cap=CLOSURE_CAP):
    """Left-regular permutation action of a finite Coxeter group on its own elements."""
    group = CoxeterGroup(matrix, ball_cap=cap)
    elements = group.ball(group.longest_length())
    index = {g.word: i for i, g in enumerate(elements)}
    return [tuple(index[group.normal_form((s,) + g.word).word] for g in elements)
            for s in range(matrix.rank)]
