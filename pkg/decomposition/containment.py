"""
Containment Decision

Decides B ⊆ A for sums of boxes, and equality as mutual containment. A monomial
ideal is determined by its monomial set, so B ⊆ A exactly when every box region of
B lies in the union of A's box regions.

Each region is a product of rays, so membership of a point depends on each
coordinate only through its position relative to the finitely many bounds in
play. Per coordinate it is enough to try every bound exactly and every bound
plus an infinitesimal (a PerturbedCoord); any counterexample can be pushed down
coordinatewise onto one of these candidates. The candidate grid is searched
depth first, keeping only the boxes of A that still cover the partial point and
cutting a branch as soon as one of them covers the rest of B's box outright.

A failed containment returns the first uncovered candidate (in ascending order)
as its witness; open coordinates print as "v+".
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from core.codec import witness_to_json_data
from core.exponent import Flag, Offset, PerturbedCoord, perturbed_satisfies
from core.ideal import AfgIdeal, BoxIdeal
from core.monomial import check_dims

logger = logging.getLogger(__name__)

Point = Tuple[PerturbedCoord, ...]


@dataclass(frozen=True)
class ContainmentResult:
    holds: bool
    witness: Optional[Point] = None

    def __bool__(self) -> bool:
        return self.holds

    def witness_text(self) -> str:
        if self.witness is None:
            return ""
        return "(" + ", ".join(str(c) for c in self.witness) + ")"

    def to_json_data(self) -> dict:
        data = {"contains": self.holds}
        if self.witness is not None:
            data.update(witness_to_json_data(self.witness))
        return data


def _candidates(box: BoxIdeal, others: Sequence[BoxIdeal], axis: int) -> List[PerturbedCoord]:
    ray = box.rays[axis]
    own = PerturbedCoord(ray.alpha.value, Offset.PLUS if ray.eps is Flag.OPEN else Offset.EXACT)
    pool = {own}
    for other in others:
        bound = other.rays[axis].alpha
        if bound.is_finite:
            pool.add(PerturbedCoord(bound.value, Offset.EXACT))
            pool.add(PerturbedCoord(bound.value, Offset.PLUS))
    return sorted((c for c in pool if perturbed_satisfies(c, ray)), key=PerturbedCoord.sort_key)


def _uncovered_point(box: BoxIdeal, cover: Sequence[BoxIdeal]) -> Optional[Point]:
    """A point of box outside every box of cover, or None."""
    dim = box.dim
    grid = [_candidates(box, cover, axis) for axis in range(dim)]

    def search(axis: int, live: List[BoxIdeal], prefix: Point) -> Optional[Point]:
        if not live:
            return prefix + tuple(grid[rest][0] for rest in range(axis, dim))
        for other in live:
            if all(box.rays[rest].is_subset_of(other.rays[rest]) for rest in range(axis, dim)):
                return None
        for coord in grid[axis]:
            still_live = [other for other in live if perturbed_satisfies(coord, other.rays[axis])]
            found = search(axis + 1, still_live, prefix + (coord,))
            if found is not None:
                return found
        return None

    return search(0, list(cover), ())


def contains(larger: AfgIdeal, smaller: AfgIdeal) -> ContainmentResult:
    """
    Decide smaller ⊆ larger, with a witness point in smaller \\ larger when it fails.
    """
    check_dims(larger.dim, smaller.dim)
    cover = larger.nonzero_boxes
    for box in smaller.nonzero_boxes:
        point = _uncovered_point(box, cover)
        if point is not None:
            logger.debug("containment fails: box %s leaves %s uncovered", box, point)
            return ContainmentResult(False, point)
    return ContainmentResult(True)


def equal(left: AfgIdeal, right: AfgIdeal) -> bool:
    """Equality of ideals, decided by mutual containment."""
    return contains(left, right).holds and contains(right, left).holds
