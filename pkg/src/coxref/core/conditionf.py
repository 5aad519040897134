"""Exhaustive scan of the folding condition (F) on a finite group table.

(F): whenever l(s g) = l(g) + 1 and l(g t) = l(g) + 1, either
l(s g t) = l(g) + 2 or s g t = g.
"""

from __future__ import annotations

from dataclasses import dataclass

from coxref.core.group import GroupElement, group_for
from coxref.errors import NotClosed


@dataclass(frozen=True)
class Counterexample:
    gamma: tuple
    s: int
    t: int
    length: int
    product_length: int

    def to_json(self, names=None):
        fmt = (lambda w: " ".join(names[i] for i in w)) if names else list
        return {
            "gamma": fmt(self.gamma),
            "s": names[self.s] if names else self.s,
            "t": names[self.t] if names else self.t,
            "length": self.length,
            "product_length": self.product_length,
        }


@dataclass(frozen=True)
class FScan:
    checked: int
    counterexample: Counterexample | None = None

    @property
    def passed(self):
        return self.counterexample is None


def scan_tables(words, lengths, left, right, rank):
    """Scan (F) over an indexed group.

    ``words``/``lengths`` are per element; ``left[i][s]`` and ``right[i][s]``
    are the indices of ``s g_i`` and ``g_i s``.  Elements are visited in
    (length, word) order, then ``s``, then ``t``; the first failure is returned.
    """
    order = sorted(range(len(words)), key=lambda i: (lengths[i], words[i]))
    checked = 0
    for i in order:
        n = lengths[i]
        for s in range(rank):
            sg = left[i][s]
            if lengths[sg] != n + 1:
                continue
            for t in range(rank):
                gt = right[i][t]
                if lengths[gt] != n + 1:
                    continue
                checked += 1
                sgt = left[gt][s]
                if lengths[sgt] == n + 2 or sgt == i:
                    continue
                return FScan(checked, Counterexample(tuple(words[i]), s, t, n, lengths[sgt]))
    return FScan(checked)


def condition_F_scan(matrix, elements):
    """Scan (F) over ``elements``, which must be a whole finite Coxeter group."""
    group = group_for(matrix)
    words = [tuple(g.word) if isinstance(g, GroupElement) else tuple(g) for g in elements]
    words = [group.normal_form(w).word for w in words]
    index = {w: i for i, w in enumerate(words)}
    left, right = [], []
    for w in words:
        lrow, rrow = [], []
        for s in range(matrix.rank):
            a = group.normal_form((s,) + w).word
            b = group.normal_form(w + (s,)).word
            if a not in index or b not in index:
                raise NotClosed(f"element {w} times generator {s} leaves the given set")
            lrow.append(index[a])
            rrow.append(index[b])
        left.append(lrow)
        right.append(rrow)
    return scan_tables(words, [len(w) for w in words], left, right, matrix.rank)
