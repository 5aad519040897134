"""Independent oracles: concrete permutation realizations closed by plain BFS.

Nothing here imports coxref; permutations are 0-based image tuples and words
act on the right, so the word (a, b) is the permutation "apply a, then b"
composed as images[b][images[a][i]] ... matching x -> x.a.b evaluation.
"""

from collections import deque
from itertools import combinations, permutations


def mul(p, q):
    """p then q (right action): i -> q[p[i]]."""
    return tuple(q[i] for i in p)


def evaluate(gens, word):
    n = len(gens[0])
    p = tuple(range(n))
    for s in word:
        p = mul(p, gens[s])
    return p


def closure(gens):
    """Dict permutation -> BFS distance from the identity over ``gens``."""
    n = len(gens[0])
    e = tuple(range(n))
    dist = {e: 0}
    queue = deque([e])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = mul(p, g)
            if q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    return dist


def perm_order(p):
    e = tuple(range(len(p)))
    q, k = p, 1
    while q != e:
        q, k = mul(q, p), k + 1
    return k


def from_cycles(n, *cycles):
    img = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return tuple(img)


def polygon(m):
    """Symmetries of the regular m-gon acting on its m vertices and m edges.

    Points 0..2m-1 go round the boundary alternating vertex, edge; the two
    reflections fix point 0 and point 1 respectively, so their product is a
    rotation by two steps, of order m.
    """
    n = 2 * m
    s = tuple((-i) % n for i in range(n))
    t = tuple((2 - i) % n for i in range(n))
    return [s, t]


def symmetric_adjacent(n):
    return [from_cycles(n, (i, i + 1)) for i in range(n - 1)]


def signed_b3():
    """Hyperoctahedral group on points {+1,+2,+3,-1,-2,-3} (indices 0..5)."""
    return [from_cycles(6, (0, 1), (3, 4)), from_cycles(6, (1, 2), (4, 5)), from_cycles(6, (2, 5))]


def _is_even(p):
    seen, parity = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, size = i, 0
        while j not in seen:
            seen.add(j)
            j, size = p[j], size + 1
        parity += size - 1
    return parity % 2 == 0


def icosahedral_h3():
    """A5 x C2 on 7 points: each generator is an involution of A5 times the swap of points 5, 6.

    The A5 parts are found by exhaustive search for a triple with pairwise
    product orders 5, 2, 3 (linear diagram 5-3) generating all of A5.
    """
    a5 = [p for p in permutations(range(5)) if _is_even(p)]
    inv = [p for p in a5 if p != tuple(range(5)) and mul(p, p) == tuple(range(5))]
    for a, b, c in permutations(inv, 3):
        if (perm_order(mul(a, b)), perm_order(mul(a, c)), perm_order(mul(b, c))) != (5, 2, 3):
            continue
        if len(closure([a, b, c])) == 60:
            return [p + (6, 5) for p in (a, b, c)]
    raise AssertionError("no H3 triple found")


def a5_double_transpositions():
    """Three double transpositions generating A5 (first found in lexicographic search)."""
    inv = sorted(p for p in permutations(range(5)) if _is_even(p) and p != tuple(range(5))
                 and mul(p, p) == tuple(range(5)))
    for trio in combinations(inv, 3):
        if len(closure(list(trio))) == 60:
            return list(trio)
    raise AssertionError("no generating triple")


def pairwise_orders(gens):
    return [[perm_order(mul(a, b)) if a != b else 1 for b in gens] for a in gens]
