"""Points of the projective direction line and its fractional-linear maps.

A ProjPoint is either a finite Q(phi) coordinate or the point at infinity;
infinity is a distinct variant because the base ideal pentagon has a vertex
there.  Isometries of the reflection tiling act on these coordinates by
fractional-linear maps, and reflections in geodesics act by the conjugate
formula given in reflect_across.
"""

from __future__ import annotations

from .golden import GoldenNum, ZERO, ONE


class ProjPoint:
    """A point of RP^1: Finite(value in Q(phi)) or Infinity."""

    __slots__ = ("value",)

    def __init__(self, value: GoldenNum | None):
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, v):
        raise AttributeError("ProjPoint is immutable")

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(("proj", self.value))

    def __lt__(self, other):
        if self.is_infinity or other.is_infinity:
            raise ValueError("total order is defined on finite points only")
        return self.value < other.value

    def __float__(self):
        if self.is_infinity:
            return float("inf")
        return float(self.value)

    def __repr__(self):
        return "ProjPoint(inf)" if self.is_infinity else f"ProjPoint({self.value})"

    def __str__(self):
        return "inf" if self.is_infinity else str(self.value)

    def pair(self) -> tuple[GoldenNum, GoldenNum]:
        """Homogeneous (numerator, denominator) pair."""
        if self.is_infinity:
            return (ONE, ZERO)
        return (self.value, ONE)

    @classmethod
    def from_pair(cls, num: GoldenNum, den: GoldenNum) -> "ProjPoint":
        if den.is_zero():
            if num.is_zero():
                raise ValueError("0:0 is not a projective point")
            return INFINITY
        return cls(num / den)


INFINITY = ProjPoint(None)


def proj(a, b: int = 1) -> ProjPoint:
    """Convenience constructor from a GoldenNum or integer ratio a/b."""
    if isinstance(a, GoldenNum):
        v = a
    else:
        v = GoldenNum(a, 0)
    if b != 1:
        v = v / GoldenNum(b, 0)
    return ProjPoint(v)


def mobius_apply(m, x: ProjPoint) -> ProjPoint:
    """Apply a 2x2 GoldenNum matrix ((a, b), (c, d)) projectively to x."""
    (a, b), (c, d) = m
    if (a * d - b * c).is_zero():
        raise ValueError("singular matrix")
    num, den = x.pair()
    return ProjPoint.from_pair(a * num + b * den, c * num + d * den)


def reflect_across(p: ProjPoint, q: ProjPoint, x: ProjPoint) -> ProjPoint:
    """Boundary action of the reflection in the geodesic with ideal ends p, q.

    For finite p, q this is x -> ((p+q)x - 2pq) / (2x - (p+q)); with one end
    at infinity it degenerates to x -> 2p - x.  The map is an involution
    fixing exactly p and q.
    """
    if p == q:
        raise ValueError("geodesic needs two distinct ideal endpoints")
    if p.is_infinity:
        p, q = q, p
    if q.is_infinity:
        if x.is_infinity:
            return INFINITY
        return ProjPoint(2 * p.value - x.value)
    pv, qv = p.value, q.value
    num, den = x.pair()
    s = pv + qv
    return ProjPoint.from_pair(s * num - 2 * pv * qv * den, 2 * num - s * den)


def _solve2(a11, a12, a21, a22, b1, b2):
    """Cramer solve of a 2x2 system over any field-like elements."""
    det = a11 * a22 - a12 * a21
    if det.is_zero():
        raise ValueError("degenerate point triple")
    u = (b1 * a22 - a12 * b2) / det
    v = (a11 * b2 - b1 * a21) / det
    return u, v


def fractional_map_from_pairs(src, dst):
    """2x2 matrix sending three projective (num, den) pairs to three others.

    Works over any field elements supporting +, -, *, /, is_zero.  The
    result is unique up to scale; entries lie in the same field.
    """
    (p1, p2, p3) = src
    (q1, q2, q3) = dst
    # scale p1, p2 so that a*p1 + b*p2 = p3, giving a matrix [a*p1 | b*p2]
    a, b = _solve2(p1[0], p2[0], p1[1], p2[1], p3[0], p3[1])
    u = ((a * p1[0], b * p2[0]), (a * p1[1], b * p2[1]))
    c, d = _solve2(q1[0], q2[0], q1[1], q2[1], q3[0], q3[1])
    v = ((c * q1[0], d * q2[0]), (c * q1[1], d * q2[1]))
    # m = v * adj(u)
    (u11, u12), (u21, u22) = u
    (v11, v12), (v21, v22) = v
    adj = ((u22, -u12), (-u21, u11))
    (a11, a12), (a21, a22) = adj
    return ((v11 * a11 + v12 * a21, v11 * a12 + v12 * a22),
            (v21 * a11 + v22 * a21, v21 * a12 + v22 * a22))


def mobius_from_points(src: tuple[ProjPoint, ProjPoint, ProjPoint],
                       dst: tuple[ProjPoint, ProjPoint, ProjPoint]):
    """GoldenNum matrix carrying the three source points to the targets."""
    return fractional_map_from_pairs([s.pair() for s in src],
                                     [d.pair() for d in dst])
