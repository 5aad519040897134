"""Exact Tits (contragredient geometric) representation over cyclotomic integers.

The group acts on linear forms ``f`` through ``(s.f)(a_t) = f(s a_t)``.
In the coordinates ``c_t = f(a_t)`` a generator ``s`` does::

    c_s -> -c_s
    c_t -> c_t + 2cos(pi/m(s,t)) c_s      (t != s;  2 for m = inf)

Starting from ``c = (1, ..., 1)``, a point inside the fundamental chamber of
the Tits cone, the orbit map is injective, so the coordinate vector is a
complete invariant of the group element.  Every ``2cos(pi/m)`` lies in
Z[zeta_N] for ``N = lcm(2m)``; elements are stored as integer coefficient
vectors in the power basis modulo the N-th cyclotomic polynomial, so
equality is exact tuple equality.
"""

from __future__ import annotations

import math
from functools import lru_cache

INF = math.inf


def _poly_divexact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1] // lead
        out[k] = coeff
        for j, d in enumerate(den):
            num[k + j] -= coeff * d
    assert not any(num), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


class TitsRepresentation:
    """Integer model of the contragredient action; keys are flat int tuples."""

    def __init__(self, matrix):
        self.matrix = matrix
        self.rank = rank = matrix.rank
        orders = {matrix[i, j] for i in range(rank) for j in range(rank)
                  if i != j and matrix[i, j] not in (2, INF)}
        self.N = N = math.lcm(2, *(2 * m for m in orders))
        phi = cyclotomic_poly(N)
        self.degree = d = len(phi) - 1
        powers = self._powers(phi, 2 * N)
        # row-major integer matrices of multiplication by 2cos(pi/m) = x^k + x^(N-k)
        mult = {}
        for m in orders:
            k = N // (2 * m)
            cols = [[a + b for a, b in zip(powers[j + k], powers[j + N - k])] for j in range(d)]
            mult[m] = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
        self._ops = []
        for s in range(rank):
            ops = []
            for t in range(rank):
                if t == s:
                    continue
                m = matrix[s, t]
                if m == 2:
                    continue
                ops.append((t, "inf" if m == INF else mult[m]))
            self._ops.append(tuple(ops))
        self.identity = tuple(1 if k % d == 0 else 0 for k in range(rank * d))

    @staticmethod
    def _powers(phi, count):
        d = len(phi) - 1
        powers = []
        current = [1] + [0] * (d - 1)
        for _ in range(count):
            powers.append(tuple(current))
            top = current[-1]
            current = [0] + current[:-1]
            if top:
                current = [c - top * p for c, p in zip(current, phi[:-1])]
        return powers

    def act(self, key, s):
        d = self.degree
        c = list(key)
        lo = s * d
        cs = c[lo:lo + d]
        for t, op in self._ops[s]:
            base = t * d
            if op == "inf":
                for i in range(d):
                    c[base + i] += 2 * cs[i]
            else:
                for i, row in enumerate(op):
                    c[base + i] += sum(r * x for r, x in zip(row, cs))
        for i in range(d):
            c[lo + i] = -cs[i]
        return tuple(c)

    def evaluate(self, word, key=None):
        """Key of ``w^-1 . c`` for the word ``w``: letters are applied left to right."""
        key = self.identity if key is None else key
        for s in word:
            key = self.act(key, s)
        return key
