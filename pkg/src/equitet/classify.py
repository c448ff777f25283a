"""Classification of six edge lengths into the equiareal-simplex taxonomy.

Type 1: non-degenerate tetrahedron, all faces of equal (positive) area; such
a tetrahedron necessarily has pairwise equal opposite edges and congruent
faces, and classification asserts this as a theorem check.

Type 2: four coplanar points forming a parallelogram together with its two
diagonals; faces have equal positive area.

Type 3: four collinear points; all faces have zero area.

Inputs that embed in 3-space but whose face areas differ are NotEquiareal;
inputs that do not embed at all are NotRealizable.  All decisions are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .metric import (
    FaceAreas16,
    SquaredEdges,
    cayley_menger_288v2,
    face_areas,
    is_realizable,
    opposite_edges_equal,
)
from .scalar import Scalar

__all__ = [
    "ClassTag",
    "ParallelogramStructure",
    "SimplexClass",
    "InternalTheoremViolation",
    "NoParallelogramError",
    "classify",
    "recover_parallelogram",
]


class ClassTag(str, Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3 = "Type3"
    NOT_EQUIAREAL = "NotEquiareal"
    NOT_REALIZABLE = "NotRealizable"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


class InternalTheoremViolation(RuntimeError):
    """An exact input contradicts a proved statement; never silently ignored."""


class NoParallelogramError(RuntimeError):
    """No opposite-edge pair yields a parallelogram; unreachable for equiareal
    planar inputs with positive area."""


# Diagonal pairing -> the four remaining side edges, interleaved so that
# entries 0 & 2 and entries 1 & 3 are the opposite-side pairs.
_PAIRINGS = (
    (("a", "x"), ("b", "c", "y", "z")),
    (("b", "y"), ("a", "c", "x", "z")),
    (("c", "z"), ("a", "b", "x", "y")),
)


@dataclass(frozen=True)
class ParallelogramStructure:
    """A planar equiareal input seen as a parallelogram with its diagonals.

    ``sides2`` is interleaved: sides2[0] == sides2[2] and sides2[1] == sides2[3]
    are the two opposite-side pairs, and the parallelogram law
    sum(sides2) == sum(diagonals2) holds exactly.
    """

    diagonal_pair: tuple[str, str]
    side_labels: tuple[str, str, str, str]
    sides2: tuple[Scalar, Scalar, Scalar, Scalar]
    diagonals2: tuple[Scalar, Scalar]

    def law_holds(self) -> bool:
        return sum(self.sides2) == sum(self.diagonals2)


@dataclass(frozen=True)
class SimplexClass:
    """Outcome of :func:`classify`: tag plus the exact evidence behind it."""

    tag: ClassTag
    areas: FaceAreas16
    vol288: Scalar
    parallelograms: tuple[ParallelogramStructure, ...] = ()
    diagnostic: str | None = None

    @property
    def parallelogram(self) -> ParallelogramStructure | None:
        """Primary parallelogram structure (Type 2 only)."""
        return self.parallelograms[0] if self.parallelograms else None


def recover_parallelogram(e: SquaredEdges) -> tuple[ParallelogramStructure, ...]:
    """All opposite-edge pairs that serve as the diagonals of a parallelogram.

    A pairing qualifies when the four remaining edges form two equal opposite
    pairs and the parallelogram law holds exactly.  Pairings are returned in
    canonical order (a,x) < (b,y) < (c,z), first entry primary.  For positive
    edge lengths at most one pairing can satisfy the law, but the full list is
    returned so symmetric inputs cannot hide information.
    """
    by_label = dict(zip(("a", "b", "c", "x", "y", "z"), e.values()))
    found = []
    for diag, sides in _PAIRINGS:
        d2 = (by_label[diag[0]], by_label[diag[1]])
        s2 = tuple(by_label[s] for s in sides)
        if s2[0] == s2[2] and s2[1] == s2[3] and sum(s2) == d2[0] + d2[1]:
            found.append(ParallelogramStructure(diag, sides, s2, d2))
    if not found:
        raise NoParallelogramError(
            f"no diagonal pairing of {e} satisfies the parallelogram law"
        )
    return tuple(found)


def classify(e: SquaredEdges) -> SimplexClass:
    """Assign the taxonomy tag to six squared edge lengths, exactly.

    Pipeline: realizability, then equality of the four 16S^2 values, then the
    sign of 288V^2 (positive -> Type 1, zero with positive areas -> Type 2,
    zero with zero areas -> Type 3).  A Type 1 verdict additionally asserts
    the pairwise equality of opposite edges; a violation would contradict the
    classification theorem and raises InternalTheoremViolation.
    """
    areas = face_areas(e)
    ok, diagnostic = is_realizable(e)
    if not ok:
        return SimplexClass(ClassTag.NOT_REALIZABLE, areas, cayley_menger_288v2(e),
                            diagnostic=diagnostic)
    vol288 = cayley_menger_288v2(e)
    if not areas.all_equal():
        return SimplexClass(ClassTag.NOT_EQUIAREAL, areas, vol288)
    if vol288 > 0:
        if areas.fI == 0:
            raise InternalTheoremViolation(
                f"zero-area faces with positive volume for {e}: 288V^2 = {vol288}"
            )
        if not opposite_edges_equal(e):
            raise InternalTheoremViolation(
                "equiareal non-degenerate simplex with unequal opposite edges: "
                f"{e} (counterexample to the congruence theorem)"
            )
        return SimplexClass(ClassTag.TYPE1, areas, vol288)
    if areas.fI > 0:
        return SimplexClass(ClassTag.TYPE2, areas, vol288,
                            parallelograms=recover_parallelogram(e))
    return SimplexClass(ClassTag.TYPE3, areas, vol288)
