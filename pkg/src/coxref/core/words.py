"""Word problem by braid-move closure.

Tits' solution: two reduced words represent the same element iff they are
connected by braid moves, and a word is reduced iff nothing braid-equivalent
to it contains a repeated adjacent letter.  Works from the presentation alone.
"""

from __future__ import annotations

from collections import deque

from coxref.config import LIMITS
from coxref.errors import InvalidWord, WordTooLong

CLOSURE_CAP = LIMITS.braid_closure


def shortlex_key(word):
    return (len(word), tuple(word))


def check_word(matrix, word):
    word = tuple(word)
    for letter in word:
        if not isinstance(letter, int) or isinstance(letter, bool) or not 0 <= letter < matrix.rank:
            raise InvalidWord(f"letter {letter!r} is not a generator index below {matrix.rank}")
    return word


def cancel_pairs(word):
    """Free reduction: delete adjacent equal letters until none remain."""
    out = []
    for letter in word:
        if out and out[-1] == letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _alternating(s, t, n):
    return tuple(s if k % 2 == 0 else t for k in range(n))


def braid_moves(matrix, word):
    """Yield every word obtained from ``word`` by one braid substitution."""
    n = len(word)
    for i in range(n - 1):
        s, t = word[i], word[i + 1]
        if s == t:
            continue
        m = matrix[s, t]
        if m == float("inf") or i + m > n:
            continue
        if word[i:i + m] == _alternating(s, t, m):
            yield word[:i] + _alternating(t, s, m) + word[i + m:]


def _adjacent_pair(word):
    for i in range(len(word) - 1):
        if word[i] == word[i + 1]:
            return i
    return None


def _closure(matrix, word, cap):
    """Braid class of ``word``, or the first member found with a repeated adjacent letter."""
    seen = {word}
    queue = deque([word])
    while queue:
        u = queue.popleft()
        i = _adjacent_pair(u)
        if i is not None:
            return None, (u, i)
        for v in braid_moves(matrix, u):
            if v not in seen:
                if len(seen) >= cap:
                    raise WordTooLong(f"braid closure exceeded {cap} words (length {len(word)})")
                seen.add(v)
                queue.append(v)
    return seen, None


def reduce_word(matrix, word, cap=CLOSURE_CAP):
    """ShortLex-least reduced word for the element represented by ``word``."""
    return min(reduced_words(matrix, word, cap), key=shortlex_key)


def reduced_words(matrix, word, cap=CLOSURE_CAP):
    """All reduced expressions of the element of ``word``, ShortLex-sorted."""
    w = cancel_pairs(check_word(matrix, word))
    while True:
        closure, hit = _closure(matrix, w, cap)
        if hit is None:
            return sorted(closure, key=shortlex_key)
        u, i = hit
        w = cancel_pairs(u[:i] + u[i + 2:])
