"""
Sum-of-Boxes <-> Decomposition

Converts between the two finite forms of an almost finitely generated ideal:

    decompose:  sum of boxes          ->  intersection of irreducibles
    recompose:  intersection of irreducibles  ->  sum of boxes

Both directions follow the same recipe. Each term is split into pure powers (a box
is the intersection of its d pure powers, an irreducible is their sum), the outer
operation is distributed over the inner one, and every choice tuple of pure
powers is collapsed by the merges of algebra.merges.

The choice tuples are not materialized all at once. Terms are folded in one at a
time, which is exactly one application of the distribution law to two factors,
and after each step the partial result is pruned of dominated terms (a box
contained in another box of the sum, an irreducible containing another component
of the intersection). Semantics are unchanged and intermediate results stay small.
"""
import itertools
import logging
from typing import Callable, Iterable, List, Sequence, Tuple, TypeVar

from algebra.merges import intersect_pure, irr_as_sum, box_as_intersection, sum_pure, terms_of
from core.ideal import AfgIdeal, BoxIdeal, Decomposition, IrreducibleIdeal
from core.monomial import check_dims

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def distribute(families: Sequence[Sequence[T]], collapse: Callable[[Tuple[T, ...]], R]) -> List[R]:
    """
    Expand an outer operation over inner ones: one collapsed result per choice
    tuple (one member taken from each family).

    With collapse = intersection this is  (sum K_1) n ... n (sum K_l) = sum over
    choices of (K_{1,i_1} n ... n K_{l,i_l}); with collapse = sum it is the dual law.
    """
    return [collapse(choice) for choice in itertools.product(*families)]


def distribute_intersection_of_sums(families: Sequence[Sequence[BoxIdeal]], dim: int) -> AfgIdeal:
    """(sum of boxes) n ... n (sum of boxes) as one sum of boxes, unpruned."""
    return AfgIdeal(dim, tuple(distribute(
        families,
        lambda choice: intersect_pure([t for box in choice for t in box.as_terms()], dim),
    )))


def distribute_sum_of_intersections(families: Sequence[Sequence[IrreducibleIdeal]], dim: int) -> Decomposition:
    """(n of irreducibles) + ... + (n of irreducibles) as one intersection, unpruned."""
    return Decomposition(dim, tuple(distribute(
        families,
        lambda choice: sum_pure([t for irr in choice for t in irr.as_terms()], dim),
    )))


def prune_dominated_boxes(boxes: Iterable[BoxIdeal]) -> List[BoxIdeal]:
    """Drop zero boxes and boxes contained in another kept box of the sum."""
    kept: List[BoxIdeal] = []
    for box in boxes:
        if box.is_zero or any(box.is_subset_of(other) for other in kept):
            continue
        kept = [other for other in kept if not other.is_subset_of(box)]
        kept.append(box)
    return kept


def prune_dominated_components(components: Iterable[IrreducibleIdeal]) -> List[IrreducibleIdeal]:
    """Drop unit components and components containing another kept component."""
    kept: List[IrreducibleIdeal] = []
    for component in components:
        if component.is_unit or any(other.is_subset_of(component) for other in kept):
            continue
        kept = [other for other in kept if not component.is_subset_of(other)]
        kept.append(component)
    return kept


def decompose(ideal: AfgIdeal) -> Decomposition:
    """
    A finite m-irreducible decomposition of a sum of boxes.

    The zero ideal (no nonzero box) decomposes as the single zero component.
    """
    dim = ideal.dim
    components: List[IrreducibleIdeal] = [IrreducibleIdeal.zero(dim)]
    for box in ideal.nonzero_boxes:
        pieces = terms_of(box_as_intersection(box))
        produced = distribute(
            [components, pieces],
            lambda choice: sum_pure(choice[0].as_terms() + [choice[1]], dim),
        )
        components = prune_dominated_components(produced)
        logger.debug("decompose: folded box %s, %d -> %d components", box, len(produced), len(components))
    return Decomposition(dim, tuple(components))


def recompose(decomposition: Decomposition) -> AfgIdeal:
    """
    A sum of boxes equal to a finite intersection of irreducibles.

    The empty intersection recomposes to the unit box.
    """
    dim = decomposition.dim
    boxes: List[BoxIdeal] = [BoxIdeal.unit(dim)]
    for component in decomposition.components:
        pieces = terms_of(irr_as_sum(component))
        produced = distribute(
            [boxes, pieces],
            lambda choice: intersect_pure(choice[0].as_terms() + [choice[1]], dim),
        )
        boxes = prune_dominated_boxes(produced)
        logger.debug("recompose: folded component %s, %d -> %d boxes", component, len(produced), len(boxes))
    return AfgIdeal(dim, tuple(boxes))


def intersect_afg(left: AfgIdeal, right: AfgIdeal) -> AfgIdeal:
    """
    (sum of boxes) n (sum of boxes) as the sum of pairwise box intersections.
    """
    dim = check_dims(left.dim, right.dim)
    produced = distribute_intersection_of_sums([left.nonzero_boxes, right.nonzero_boxes], dim)
    return AfgIdeal(dim, tuple(prune_dominated_boxes(produced.boxes)))


def sum_afg(left: AfgIdeal, right: AfgIdeal) -> AfgIdeal:
    dim = check_dims(left.dim, right.dim)
    return AfgIdeal(dim, left.boxes + right.boxes)


def decomposition_of(irreducible: IrreducibleIdeal) -> Decomposition:
    return Decomposition(irreducible.dim, (irreducible,))


def afg_of(irreducible: IrreducibleIdeal) -> AfgIdeal:
    """A single irreducible as a sum of boxes."""
    return recompose(decomposition_of(irreducible))
