"""
Pure-Power Merges

Intersections and sums of pure-power ideals J_{i,a,e}. A finite intersection of
rays on one axis is again a ray, and so is a finite union; grouping pure powers
by variable and merging each group turns

    - an intersection of pure powers into a box I_{b,d}, and
    - a sum of pure powers into an irreducible J_{b,d}.

Only the existence of a flag d is guaranteed. The rules used here are the ones
that make the generator sets agree:

    - intersection: the largest bound wins; open wins among bounds that tie for it
    - sum: the smallest bound wins; closed wins among bounds that tie for it

A merged empty ray is always spelled Ray(inf, 0).
"""
import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Sequence, Tuple

from core.errors import DimensionMismatchError
from core.exponent import EMPTY, VACUOUS, Flag, Ray
from core.ideal import BoxIdeal, IrreducibleIdeal, PurePowerIdeal

logger = logging.getLogger(__name__)

Term = Tuple[int, Ray]


def merge_intersect_same_var(rays: Iterable[Ray]) -> Ray:
    """
    The ray of the intersection of J_{i,a_t,e_t} over t; the empty intersection is R.
    """
    rays = list(rays)
    if not rays:
        return VACUOUS
    beta = max(ray.alpha for ray in rays)
    if beta.is_infinite:
        return EMPTY
    delta = Flag.OPEN if any(r.alpha == beta and r.eps is Flag.OPEN for r in rays) else Flag.CLOSED
    return Ray(beta, delta)


def merge_sum_same_var(rays: Iterable[Ray]) -> Ray:
    """
    The ray of the sum of J_{i,a_t,e_t} over t; the empty sum is 0.
    """
    rays = list(rays)
    if not rays:
        return EMPTY
    beta = min(ray.alpha for ray in rays)
    if beta.is_infinite:
        return EMPTY
    delta = Flag.CLOSED if any(r.alpha == beta and r.eps is Flag.CLOSED for r in rays) else Flag.OPEN
    return Ray(beta, delta)


def _group_by_variable(terms: Iterable[Term], dim: int) -> Dict[int, List[Ray]]:
    groups: Dict[int, List[Ray]] = defaultdict(list)
    for var, ray in terms:
        if not 1 <= var <= dim:
            raise DimensionMismatchError(f"Variable index {var} outside 1..{dim}")
        groups[var].append(ray)
    return groups


def intersect_pure(terms: Iterable[Term], dim: int) -> BoxIdeal:
    """
    Intersection of pure-power ideals, collapsed into one box.
    """
    groups = _group_by_variable(terms, dim)
    return BoxIdeal(tuple(merge_intersect_same_var(groups.get(var, ())) for var in range(1, dim + 1)))


def sum_pure(terms: Iterable[Term], dim: int) -> IrreducibleIdeal:
    """
    Sum of pure-power ideals, collapsed into one irreducible.
    """
    groups = _group_by_variable(terms, dim)
    return IrreducibleIdeal(tuple(merge_sum_same_var(groups.get(var, ())) for var in range(1, dim + 1)))


def box_as_intersection(box: BoxIdeal) -> List[PurePowerIdeal]:
    """I_{a,e} as the intersection of J_{i,a_i,e_i}, i = 1..d (components may be R)."""
    return box.pure_powers()


def irr_as_sum(irreducible: IrreducibleIdeal) -> List[PurePowerIdeal]:
    """J_{a,e} as the sum of J_{i,a_i,e_i}, i = 1..d (summands may be 0)."""
    return irreducible.pure_powers()


def terms_of(pure_powers: Sequence[PurePowerIdeal]) -> List[Term]:
    return [(p.var, p.ray) for p in pure_powers]


def pure_power_irreducible(exponent_sets: Sequence[Iterable], dim: int) -> IrreducibleIdeal:
    """
    The irreducible generated by {X_i^z : z in S_i}: each bound is inf S_i (inf of
    the empty set is infinity), closed exactly when the infimum is attained.
    """
    if len(exponent_sets) != dim:
        raise DimensionMismatchError(f"Expected {dim} exponent sets, got {len(exponent_sets)}")
    terms: List[Term] = [
        (var, Ray.of(z, Flag.CLOSED))
        for var, exponents in enumerate(exponent_sets, start=1)
        for z in exponents
    ]
    irreducible = sum_pure(terms, dim)
    logger.debug("pure_power_irreducible: %d generators -> %s", len(terms), irreducible)
    return irreducible
