"""Exact planar helpers: affine maps, half-plane clipping, convex polygon overlap."""

from __future__ import annotations


def sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def scale(k, p):
    return (k * p[0], k * p[1])


def dot(p, q):
    return p[0] * q[0] + p[1] * q[1]


def cross(p, q):
    return p[0] * q[1] - p[1] * q[0]


def sign(x):
    return (x > 0) - (x < 0)


def reflection_map(point, direction):
    """Affine map ``(A, b)`` of the reflection in the line through ``point`` along ``direction``."""
    dx, dy = direction
    nn = dx * dx + dy * dy
    A = ((2 * dx * dx / nn - 1, 2 * dx * dy / nn), (2 * dx * dy / nn, 2 * dy * dy / nn - 1))
    Ap = apply_map((A, (0, 0)), point)
    return (A, sub(point, Ap))


def apply_map(f, p):
    (a, b), (c, d) = f[0]
    return (a * p[0] + b * p[1] + f[1][0], c * p[0] + d * p[1] + f[1][1])


def compose(f, g):
    """``f o g``."""
    (a, b), (c, d) = f[0]
    (e, f_), (g_, h) = g[0]
    A = ((a * e + b * g_, a * f_ + b * h), (c * e + d * g_, c * f_ + d * h))
    return (A, apply_map(f, g[1]))


def clip(polygon, functional):
    """Keep the part of a convex polygon where ``functional(p) >= 0`` (Sutherland-Hodgman)."""
    out = []
    n = len(polygon)
    for i in range(n):
        p, q = polygon[i], polygon[(i + 1) % n]
        fp, fq = functional(p), functional(q)
        if fp >= 0:
            out.append(p)
        if (fp > 0 and fq < 0) or (fp < 0 and fq > 0):
            t = fp / (fp - fq)
            out.append(add(p, scale(t, sub(q, p))))
    # drop repeated vertices
    dedup = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return _drop_collinear(dedup)


def _drop_collinear(poly):
    changed = True
    while changed and len(poly) > 2:
        changed = False
        for i in range(len(poly)):
            a, b, c = poly[i - 1], poly[i], poly[(i + 1) % len(poly)]
            if cross(sub(b, a), sub(c, b)) == 0:
                poly = poly[:i] + poly[i + 1:]
                changed = True
                break
    return poly


def _separated(P, Q):
    n = len(P)
    orient = sign(cross(sub(P[1], P[0]), sub(P[2], P[0])))
    for i in range(n):
        a, b = P[i], P[(i + 1) % n]
        edge = sub(b, a)
        # Q lies weakly outside the edge line of P
        if all(orient * sign(cross(edge, sub(q, a))) <= 0 for q in Q):
            return True
    return False


def interiors_disjoint(P, Q):
    """Exact test for two convex polygons (vertex lists) having disjoint interiors."""
    return _separated(P, Q) or _separated(Q, P)


def centroid(P):
    n = len(P)
    return (sum(p[0] for p in P) / n, sum(p[1] for p in P) / n)
