"""Coxeter matrices, a few named families, and the plain-text matrix format.

Text format::

    # comment
    rank 2
    names s t          # optional alias line
    1   3
    3   1

Entries are positive integers or the token ``inf``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from pathlib import Path

from coxref.errors import (
    BadEntry,
    DiagonalNotOne,
    InvalidWord,
    MatrixError,
    NotSymmetric,
    OffDiagonalTooSmall,
)

INF = math.inf


def _entry(value):
    if isinstance(value, str):
        token = value.strip().lower()
        if token in ("inf", "infinity", "oo", "∞"):
            return INF
        if not re.fullmatch(r"\+?\d+", token):
            raise BadEntry(f"bad matrix entry {value!r}")
        value = int(token)
    if isinstance(value, bool):
        raise BadEntry(f"bad matrix entry {value!r}")
    if isinstance(value, float):
        if value == INF:
            return INF
        raise BadEntry(f"bad matrix entry {value!r}: use an integer or inf")
    if not isinstance(value, int) or value < 1:
        raise BadEntry(f"bad matrix entry {value!r}")
    return value


def _check(entries):
    n = len(entries)
    for i in range(n):
        if entries[i][i] != 1:
            raise DiagonalNotOne(f"m({i},{i}) = {entries[i][i]}, expected 1")
        for j in range(n):
            if entries[i][j] != entries[j][i]:
                raise NotSymmetric(f"m({i},{j}) = {entries[i][j]} but m({j},{i}) = {entries[j][i]}")
            if i != j and entries[i][j] < 2:
                raise OffDiagonalTooSmall(f"m({i},{j}) = {entries[i][j]} < 2")


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of the orders m(s,t); ``INF`` marks a missing braid relation."""

    entries: tuple
    names: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(_entry(x) for x in row) for row in self.entries)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise MatrixError("matrix must be square and non-empty")
        _check(rows)
        object.__setattr__(self, "entries", rows)
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != len(rows) or len(set(names)) != len(names):
                raise MatrixError("need one distinct name per generator")
            object.__setattr__(self, "names", names)

    @property
    def rank(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def generator_names(self):
        return self.names if self.names is not None else tuple(f"s{i}" for i in range(self.rank))

    def with_names(self, names):
        return CoxeterMatrix(self.entries, tuple(names))

    def is_finite_entry(self, i, j):
        return self.entries[i][j] != INF

    def parse_word(self, text):
        """Parse a word such as ``"s0 s1 s0"``, ``"s t s"`` or, with one-letter names, ``"sts"``."""
        names = self.generator_names()
        lookup = {name: i for i, name in enumerate(names)}
        lookup.update({f"s{i}": i for i in range(self.rank)})
        tokens = text.replace(",", " ").split()
        if tokens in ([], ["1"], ["e"], ["ε"]):
            return ()
        letters = []
        single = all(len(name) == 1 for name in names)
        for tok in tokens:
            if tok in lookup:
                letters.append(lookup[tok])
            elif single and all(ch in lookup for ch in tok):
                letters.extend(lookup[ch] for ch in tok)
            elif tok.isdigit() and int(tok) < self.rank:
                letters.append(int(tok))
            else:
                raise InvalidWord(f"unknown generator {tok!r}")
        return tuple(letters)

    def format_word(self, word):
        names = self.generator_names()
        return " ".join(names[s] for s in word)

    def to_text(self):
        lines = [f"rank {self.rank}"]
        if self.names is not None:
            lines.append("names " + " ".join(self.names))
        for row in self.entries:
            lines.append(" ".join("inf" if x == INF else str(x) for x in row))
        return "\n".join(lines) + "\n"

    def to_json(self):
        return [["inf" if x == INF else x for x in row] for row in self.entries]


def validate_matrix(raw, names=None):
    """Build a :class:`CoxeterMatrix` from a square table, raising a :class:`MatrixError` subclass."""
    rows = [list(row) for row in raw]
    if not rows or any(len(row) != len(rows) for row in rows):
        raise MatrixError("matrix must be square and non-empty")
    return CoxeterMatrix(tuple(tuple(row) for row in rows), names)


def parse_matrix_text(text):
    rank = None
    names = None
    rows = []
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if rank is None:
            if head != "rank" or not rest.strip().isdigit():
                raise MatrixError("first line must be 'rank n'")
            rank = int(rest)
            continue
        if head in ("names", "alias", "aliases") and not rows:
            names = rest.split()
            continue
        rows.append(line.split())
    if rank is None:
        raise MatrixError("empty matrix file")
    if len(rows) != rank or any(len(row) != rank for row in rows):
        raise MatrixError(f"expected {rank} rows of {rank} entries")
    return validate_matrix(rows, names)


def load_matrix(path):
    return parse_matrix_text(Path(path).read_text())


def dihedral(m, names=None):
    return validate_matrix([[1, m], [m, 1]], names)


def linear_diagram(*labels, names=None):
    """Matrix of a string diagram with the given consecutive edge labels; other pairs commute."""
    n = len(labels) + 1
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, m in enumerate(labels):
        rows[i][i + 1] = rows[i + 1][i] = m
    return validate_matrix(rows, names)


def triangle(p, q, r, names=None):
    """Rank-3 matrix with m(0,1)=p, m(0,2)=q, m(1,2)=r."""
    return validate_matrix([[1, p, q], [p, 1, r], [q, r, 1]], names)


def named_matrix(name):
    """Look up a matrix by name: ``A<n>``, ``B<n>``, ``H3``, ``H4``, ``I2(m)``, ``Dinf``, ``tri244`` ..."""
    key = name.strip()
    if m := re.fullmatch(r"A(\d+)", key):
        n = int(m.group(1))
        if n == 1:
            return validate_matrix([[1]])
        return linear_diagram(*([3] * (n - 1)))
    if m := re.fullmatch(r"[BC](\d+)", key):
        n = int(m.group(1))
        if n < 2:
            raise MatrixError(f"unknown matrix {name!r}")
        return linear_diagram(*([3] * (n - 2) + [4]))
    if m := re.fullmatch(r"I2\((\d+|inf)\)", key):
        return dihedral(m.group(1))
    if key in ("Dinf", "Ainf", "I2inf"):
        return dihedral("inf")
    if key == "H3":
        return linear_diagram(5, 3)
    if key == "H4":
        return linear_diagram(5, 3, 3)
    if key == "G2":
        return dihedral(6)
    if m := re.fullmatch(r"tri(\d)(\d)(\d)", key):
        return triangle(*(int(c) for c in m.groups()))
    raise MatrixError(f"unknown matrix {name!r}")


def resolve_matrix(spec):
    """Accept a path to a matrix file or a built-in name."""
    path = Path(spec)
    if path.exists():
        return load_matrix(path)
    return named_matrix(spec)
