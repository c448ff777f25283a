"""Closed-form enumeration of all equiareal completions of one face.

Given a face with squared sides (a^2, b^2, c^2), the opposite edges of any
equiareal completion satisfy x^2 in {a^2, 2b^2+2c^2-a^2}, y^2 in
{b^2, 2a^2-b^2+2c^2} and z^2 in {c^2, 2a^2+2b^2-c^2}; the eight combinations
form the candidate table enumerated here.  Each candidate is re-verified from
scratch (positivity, realizability, exact equiareality) rather than trusting
the derivation, which uniformly handles the rows that are only conditionally
feasible (4, 6, 7: the face must contain a right angle) and the one that never
is (row 8).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import ClassTag, SimplexClass, classify
from .metric import SquaredEdges, heron_16s2
from .scalar import Scalar

__all__ = [
    "SolutionRow",
    "Solution8Witness",
    "FaceDomainError",
    "enumerate_completions",
    "right_angle_condition",
    "solution8_witness",
]

_FEASIBLE_TAGS = (ClassTag.TYPE1, ClassTag.TYPE2, ClassTag.TYPE3)

# Row id -> which of (x2, y2, z2) take the substituted value instead of the
# original (a2, b2, c2).
_ROW_PATTERNS = {
    1: (False, False, False),
    2: (False, False, True),
    3: (False, True, False),
    4: (False, True, True),
    5: (True, False, False),
    6: (True, False, True),
    7: (True, True, False),
    8: (True, True, True),
}


class FaceDomainError(ValueError):
    """Face data outside the operation's domain; message names the datum."""


@dataclass(frozen=True)
class SolutionRow:
    """One candidate completion of the face, with its verification verdict.

    ``duplicate_of`` points at the lowest row id carrying the same exact
    (x2, y2, z2) triple; ``multiplicity`` counts how many rows share it.
    """

    row_id: int
    x2: Scalar
    y2: Scalar
    z2: Scalar
    feasible: bool
    reason: str
    simplex_class: SimplexClass | None
    edges: SquaredEdges | None
    duplicate_of: int | None = None
    multiplicity: int = 1

    def triple(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.x2, self.y2, self.z2)


@dataclass(frozen=True)
class Solution8Witness:
    """Exact values of the three factor products forced by the row-8 candidate.

    For positive side lengths at least one of them is nonzero, because each
    vanishing product forces a different side to be the hypotenuse of the same
    right triangle.
    """

    f10: Scalar
    f11: Scalar
    f12: Scalar

    def simultaneous_zero(self) -> bool:
        return self.f10 == 0 and self.f11 == 0 and self.f12 == 0


def _require_face(a2: Scalar, b2: Scalar, c2: Scalar) -> tuple[Scalar, Scalar, Scalar]:
    a2, b2, c2 = Fraction(a2), Fraction(b2), Fraction(c2)
    for name, value in (("a2", a2), ("b2", b2), ("c2", c2)):
        if value <= 0:
            raise FaceDomainError(f"{name} must be positive, got {value}")
    h = heron_16s2(a2, b2, c2)
    if h < 0:
        raise FaceDomainError(
            f"face (a2, b2, c2) = ({a2}, {b2}, {c2}) violates the triangle "
            f"inequality: 16S^2 = {h}"
        )
    return a2, b2, c2


def enumerate_completions(a2: Scalar, b2: Scalar, c2: Scalar) -> list[SolutionRow]:
    """All eight candidate completions of the face, verified and classified.

    Requires positive squared sides with heron_16s2(a2, b2, c2) >= 0.  Every
    row is returned; infeasible rows carry the first failing reason
    (nonpositive squared length, not realizable, or not equiareal).
    """
    a2, b2, c2 = _require_face(a2, b2, c2)
    sub_x2 = 2 * b2 + 2 * c2 - a2
    sub_y2 = 2 * a2 - b2 + 2 * c2
    sub_z2 = 2 * a2 + 2 * b2 - c2

    rows: list[SolutionRow] = []
    for row_id, (sx, sy, sz) in _ROW_PATTERNS.items():
        x2 = sub_x2 if sx else a2
        y2 = sub_y2 if sy else b2
        z2 = sub_z2 if sz else c2

        nonpositive = next(
            (f"{n} = {v}" for n, v in (("x2", x2), ("y2", y2), ("z2", z2)) if v <= 0),
            None,
        )
        if nonpositive is not None:
            rows.append(SolutionRow(row_id, x2, y2, z2, False,
                                    f"nonpositive squared length: {nonpositive}",
                                    None, None))
            continue

        edges = SquaredEdges(a2, b2, c2, x2, y2, z2)
        verdict = classify(edges)
        if verdict.tag in _FEASIBLE_TAGS:
            rows.append(SolutionRow(row_id, x2, y2, z2, True, "", verdict, edges))
        elif verdict.tag is ClassTag.NOT_REALIZABLE:
            rows.append(SolutionRow(row_id, x2, y2, z2, False,
                                    f"not realizable: {verdict.diagnostic}",
                                    verdict, edges))
        else:
            fs = ", ".join(str(f) for f in verdict.areas.values())
            rows.append(SolutionRow(row_id, x2, y2, z2, False,
                                    f"not equiareal: 16S^2 values ({fs})",
                                    verdict, edges))

    # annotate exact-triple duplicates, lowest row id primary
    primary_of: dict[tuple[Scalar, Scalar, Scalar], int] = {}
    counts: dict[tuple[Scalar, Scalar, Scalar], int] = {}
    for row in rows:
        primary_of.setdefault(row.triple(), row.row_id)
        counts[row.triple()] = counts.get(row.triple(), 0) + 1
    return [
        SolutionRow(
            row.row_id, row.x2, row.y2, row.z2, row.feasible, row.reason,
            row.simplex_class, row.edges,
            duplicate_of=(None if primary_of[row.triple()] == row.row_id
                          else primary_of[row.triple()]),
            multiplicity=counts[row.triple()],
        )
        for row in rows
    ]


def right_angle_condition(
    a2: Scalar, b2: Scalar, c2: Scalar, row_id: int
) -> tuple[bool, Scalar]:
    """Feasibility condition for the conditionally feasible rows 4, 6 and 7.

    Row 4 requires a^4 - (b^2 - c^2)^2 = 0, i.e. the face is right-angled with
    the larger of b, c as hypotenuse; rows 6 and 7 are the same condition with
    the roles of (a, x) swapped with (b, y) resp. (c, z).  Returns the verdict
    together with the exact residual as witness.
    """
    a2, b2, c2 = Fraction(a2), Fraction(b2), Fraction(c2)
    if row_id == 4:
        residual = a2 * a2 - (b2 - c2) ** 2
    elif row_id == 6:
        residual = b2 * b2 - (c2 - a2) ** 2
    elif row_id == 7:
        residual = c2 * c2 - (a2 - b2) ** 2
    else:
        raise ValueError(f"right-angle condition applies to rows 4, 6, 7; got {row_id}")
    return residual == 0, residual


def solution8_witness(a2: Scalar, b2: Scalar, c2: Scalar) -> Solution8Witness:
    """The three exact factor products that the row-8 candidate would force to
    vanish simultaneously; for positive side lengths at least one is nonzero."""
    a2, b2, c2 = Fraction(a2), Fraction(b2), Fraction(c2)
    u = -a2 + b2 + c2
    v = a2 - b2 + c2
    w = a2 + b2 - c2
    return Solution8Witness(f10=v * w, f11=w * u, f12=v * u)
