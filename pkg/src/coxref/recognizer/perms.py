"""Permutations as 0-based image tuples, with 1-based disjoint-cycle text I/O."""

from __future__ import annotations

import math
import re
from pathlib import Path

from coxref.errors import PermutationError

_CYCLE = re.compile(r"\(([^()]*)\)")


def identity(n):
    return tuple(range(n))


def compose(p, q):
    """``p o q``: apply ``q`` first."""
    return tuple(p[i] for i in q)


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycles(p):
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def order(p):
    return math.lcm(1, *(len(c) for c in cycles(p)))


def pad(p, n):
    return tuple(p) + tuple(range(len(p), n))


def parse_cycles(text, degree=None):
    """Parse ``"(1 2)(3 4)"`` (1-based points); ``"()"`` is the identity."""
    stripped = text.strip()
    if not stripped or _CYCLE.sub("", stripped).strip():
        raise PermutationError(f"not in cycle notation: {text!r}")
    cyc = []
    for body in _CYCLE.findall(stripped):
        tokens = body.replace(",", " ").split()
        try:
            pts = [int(tok) - 1 for tok in tokens]
        except ValueError:
            raise PermutationError(f"bad point in {text!r}") from None
        if any(x < 0 for x in pts):
            raise PermutationError(f"points are 1-based in {text!r}")
        cyc.append(pts)
    n = max([x + 1 for c in cyc for x in c], default=0)
    n = max(n, degree or 0)
    images = list(range(n))
    used = set()
    for c in cyc:
        if len(set(c)) != len(c) or used & set(c):
            raise PermutationError(f"cycles are not disjoint in {text!r}")
        used |= set(c)
        for a, b in zip(c, c[1:] + c[:1]):
            images[a] = b
    return tuple(images)


def format_cycles(p):
    cyc = cycles(p)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cyc)


def parse_generators(text):
    """One generator per line; ``#`` comments and blank lines are skipped. Pads to a common degree."""
    gens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            gens.append(parse_cycles(line))
    if not gens:
        raise PermutationError("no generators given")
    n = max(max(len(g) for g in gens), 1)
    return [pad(g, n) for g in gens]


def load_generators(path):
    return parse_generators(Path(path).read_text())
