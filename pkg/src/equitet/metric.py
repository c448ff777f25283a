"""Exact metric geometry of a labeled tetrahedron.

Edge labeling convention, fixed across the whole package: the four faces are

    face I   = (a, b, c)        triangle ABC
    face II  = (a, y, z)        triangle BCD
    face III = (b, x, z)        triangle ACD
    face IV  = (c, x, y)        triangle ABD

so edge x is opposite a, y is opposite b, z is opposite c.  The vertex
mapping used for coordinates is a=BC, b=CA, c=AB, x=AD, y=BD, z=CD.

All quantities here are exact rationals: 16*S^2 per face via the Heron
polynomial, 288*V^2 via the Cayley-Menger determinant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .scalar import Scalar

__all__ = [
    "SquaredEdges",
    "FaceAreas16",
    "FACE_NAMES",
    "heron_16s2",
    "face_areas",
    "cayley_menger_288v2",
    "is_realizable",
    "opposite_edges_equal",
    "faces_congruent",
]

FACE_NAMES = ("I", "II", "III", "IV")
_EDGE_FIELDS = ("a2", "b2", "c2", "x2", "y2", "z2")


@dataclass(frozen=True)
class SquaredEdges:
    """The six squared edge lengths (a^2, b^2, c^2, x^2, y^2, z^2).

    Values are coerced to exact rationals and must all be positive.
    Immutable; safe to share across threads.
    """

    a2: Scalar
    b2: Scalar
    c2: Scalar
    x2: Scalar
    y2: Scalar
    z2: Scalar

    def __post_init__(self) -> None:
        for name in _EDGE_FIELDS:
            value = Fraction(getattr(self, name))
            if value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")
            object.__setattr__(self, name, value)

    def values(self) -> tuple[Scalar, Scalar, Scalar, Scalar, Scalar, Scalar]:
        return (self.a2, self.b2, self.c2, self.x2, self.y2, self.z2)

    def faces(self) -> tuple[tuple[Scalar, Scalar, Scalar], ...]:
        """Squared-edge triples of faces I, II, III, IV (labeling above)."""
        return (
            (self.a2, self.b2, self.c2),
            (self.a2, self.y2, self.z2),
            (self.b2, self.x2, self.z2),
            (self.c2, self.x2, self.y2),
        )

    def opposite_pairs(self) -> tuple[tuple[Scalar, Scalar], ...]:
        """The three opposite-edge pairs (a,x), (b,y), (c,z), squared."""
        return ((self.a2, self.x2), (self.b2, self.y2), (self.c2, self.z2))

    def distance_matrix(self) -> list[list[Scalar]]:
        """4x4 squared-distance matrix over vertices (A, B, C, D)."""
        zero = Fraction(0)
        return [
            [zero, self.c2, self.b2, self.x2],
            [self.c2, zero, self.a2, self.y2],
            [self.b2, self.a2, zero, self.z2],
            [self.x2, self.y2, self.z2, zero],
        ]

    @classmethod
    def from_distance_matrix(cls, d) -> "SquaredEdges":
        return cls(a2=d[1][2], b2=d[0][2], c2=d[0][1], x2=d[0][3], y2=d[1][3], z2=d[2][3])

    def permuted(self, perm: tuple[int, int, int, int]) -> "SquaredEdges":
        """Edge data after relabeling vertices: new vertex i is old vertex perm[i]."""
        d = self.distance_matrix()
        nd = [[d[perm[i]][perm[j]] for j in range(4)] for i in range(4)]
        return SquaredEdges.from_distance_matrix(nd)

    def scaled(self, t: Scalar) -> "SquaredEdges":
        """All squared edges multiplied by t > 0 (uniform scaling by sqrt(t))."""
        t = Fraction(t)
        return SquaredEdges(*(v * t for v in self.values()))


@dataclass(frozen=True)
class FaceAreas16:
    """16*(area)^2 of the four faces, each the exact Heron polynomial value."""

    fI: Scalar
    fII: Scalar
    fIII: Scalar
    fIV: Scalar

    def values(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.fI, self.fII, self.fIII, self.fIV)

    def all_equal(self) -> bool:
        return self.fI == self.fII == self.fIII == self.fIV

    def all_zero(self) -> bool:
        return self.fI == 0 and self.fII == 0 and self.fIII == 0 and self.fIV == 0


def heron_16s2(p2: Scalar, q2: Scalar, r2: Scalar) -> Scalar:
    """16 * squared area of a triangle with squared sides p2, q2, r2.

    Evaluates 2*p2*q2 + 2*p2*r2 + 2*q2*r2 - p2^2 - q2^2 - r2^2 exactly.
    Negative exactly when the triangle inequality fails, zero when the three
    points are collinear.  Symmetric in its arguments.
    """
    return 2 * (p2 * q2 + p2 * r2 + q2 * r2) - (p2 * p2 + q2 * q2 + r2 * r2)


def face_areas(e: SquaredEdges) -> FaceAreas16:
    """16*S^2 of the four faces under the fixed labeling."""
    fI, fII, fIII, fIV = (heron_16s2(*face) for face in e.faces())
    return FaceAreas16(fI, fII, fIII, fIV)


def _int_det(m: list[list[int]]) -> int:
    # Bareiss fraction-free elimination; all intermediate divisions are exact.
    m = [row[:] for row in m]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[-1][-1]


def cayley_menger_288v2(e: SquaredEdges) -> Scalar:
    """288 * V^2 as the exact 5x5 Cayley-Menger determinant.

    Positive for a non-degenerate tetrahedron, zero for four coplanar points,
    negative when the distances are not realizable in Euclidean 3-space.
    The determinant is homogeneous of degree 3 in the squared distances, so
    denominators are cleared once and the determinant is taken over integers.
    """
    lcm = 1
    for v in e.values():
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    a2, b2, c2, x2, y2, z2 = (int(v * lcm) for v in e.values())
    m = [
        [0, 1, 1, 1, 1],
        [1, 0, c2, b2, x2],
        [1, c2, 0, a2, y2],
        [1, b2, a2, 0, z2],
        [1, x2, y2, z2, 0],
    ]
    return Fraction(_int_det(m), lcm**3)


def is_realizable(e: SquaredEdges) -> tuple[bool, str | None]:
    """Whether the six squared edges embed as four points in 3-space.

    True iff all four face Heron values are >= 0 and the Cayley-Menger
    determinant is >= 0.  The diagnostic names the first failing condition,
    checking faces I..IV before the determinant.
    """
    for name, face in zip(FACE_NAMES, e.faces()):
        h = heron_16s2(*face)
        if h < 0:
            return False, f"face {name} violates the triangle inequality: 16S^2 = {h}"
    cm = cayley_menger_288v2(e)
    if cm < 0:
        return False, f"negative Cayley-Menger determinant: 288V^2 = {cm}"
    return True, None


def opposite_edges_equal(e: SquaredEdges) -> bool:
    """True iff x^2 = a^2, y^2 = b^2 and z^2 = c^2 exactly."""
    return e.x2 == e.a2 and e.y2 == e.b2 and e.z2 == e.c2


def faces_congruent(e: SquaredEdges) -> bool:
    """True iff all four faces have the same squared-edge multiset (SSS)."""
    first = sorted(e.faces()[0])
    return all(sorted(face) == first for face in e.faces()[1:])
