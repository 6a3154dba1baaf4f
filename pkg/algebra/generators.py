"""
Finitely Generated Ideals

Operations on ideals given by a finite set of monomial generators:

    - intersect_finite_generated: the intersection of (S_1)R, ..., (S_k)R is generated by
      the lcms lcm(f_1, ..., f_k) with f_i in S_i
    - split_at_monomial: for X^b in (G)R, (G)R is the intersection over j of (G u {X_j^{b_j}})R
    - finite_gen_to_afg: (S)R as the sum of the principal boxes I_{r,0}, X^r in S
    - fg_reducibility_witness: the splitting above, used as a witness that (G)R is
      not m-irreducible when G is not generated by pure powers
    - line_staircase: finite staircase approximations of the line ideal
      ({X^r Y^(1-r) : 0 <= r <= 1})R, which has no finite decomposition
"""
import itertools
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from core.errors import IdealError, NotInIdealError
from core.ideal import AfgIdeal, BoxIdeal, FiniteGeneratorSet
from core.monomial import Monomial, check_dims, lcm

logger = logging.getLogger(__name__)


def intersect_finite_generated(sets: Sequence[FiniteGeneratorSet]) -> FiniteGeneratorSet:
    """
    Generators of the intersection: all lcms of one generator from each set,
    minimized. Any empty set (the zero ideal) makes the result empty.
    """
    if not sets:
        raise IdealError("Intersection of an empty family of generator sets is undefined")
    dim = check_dims(*(s.dim for s in sets))
    if any(not s.gens for s in sets):
        return FiniteGeneratorSet(dim, ())
    products = [lcm(choice) for choice in itertools.product(*(s.gens for s in sets))]
    result = FiniteGeneratorSet(dim, tuple(products)).minimized()
    logger.debug("lcm intersection: %d choices, %d generators kept", len(products), len(result.gens))
    return result


def split_at_monomial(generators: FiniteGeneratorSet, b: Monomial) -> List[FiniteGeneratorSet]:
    """
    The d ideals (G u {X_j^{b_j}})R, j = 1..d, whose intersection is (G)R.
    """
    check_dims(generators.dim, b.dim)
    if b not in generators:
        raise NotInIdealError(f"b not in ideal: {b}")
    return [
        FiniteGeneratorSet(generators.dim, generators.gens + (Monomial.pure_power(b.dim, j, b.exps[j - 1]),))
        for j in range(1, b.dim + 1)
    ]


def finite_gen_to_afg(generators: FiniteGeneratorSet) -> AfgIdeal:
    """(S)R as a sum of one closed box per generator."""
    return AfgIdeal(generators.dim, tuple(BoxIdeal.principal(g) for g in generators.gens))


def fg_reducibility_witness(generators: FiniteGeneratorSet) -> Optional[List[FiniteGeneratorSet]]:
    """
    A factorization of (G)R into d strictly larger ideals, or None when the
    minimized G consists of pure powers (then (G)R is m-irreducible).
    """
    minimal = generators.minimized()
    pure = [g for g in minimal.gens if sum(1 for v in g.exps if v != 0) <= 1]
    for b in minimal.gens:
        if any(p.divides(b) for p in pure):
            continue
        return split_at_monomial(minimal, b)
    return None


def line_staircase(n: int) -> FiniteGeneratorSet:
    """
    The generators X^(j/(n+1)) Y^(1 - j/(n+1)), j = 1..n.
    """
    if n < 1:
        raise IdealError("A staircase needs at least one step")
    steps = [Fraction(j, n + 1) for j in range(1, n + 1)]
    return FiniteGeneratorSet(2, tuple(Monomial((r, 1 - r)) for r in steps))
