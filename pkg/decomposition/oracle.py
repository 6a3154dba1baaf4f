"""
Grid Oracle

Brute-force membership used as independent ground truth. Membership is evaluated
straight from the generator descriptions (every ray for a box, some ray for an
irreducible, some divisor for a generator set) with plain rational comparisons,
sharing no code with the membership methods of core.ideal.

The default point set is built from the bounds appearing in the inputs: per axis,
every bound v contributes v - 1/Q, v and v + 1/Q (clamped at 0), where Q is twice
the lcm of all bound denominators plus one, so 1/Q is smaller than any gap between
distinct bounds. The full Cartesian grid is used unless Settings.oracle_grid_limit
is set, in which case larger grids are subsampled with the seeded RNG. Uniformly
random rational points are added on top.
"""
import itertools
import math
import random
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

from core.config import Settings
from core.errors import IdealError
from core.exponent import ExtExp, Flag, PerturbedCoord, Ray
from core.ideal import (
    AfgIdeal,
    BoxIdeal,
    Decomposition,
    FiniteGeneratorSet,
    IrreducibleIdeal,
    PurePowerIdeal,
)
from core.monomial import Monomial, check_dims

OracleIdeal = Union[AfgIdeal, Decomposition, BoxIdeal, IrreducibleIdeal, FiniteGeneratorSet, PurePowerIdeal]


def _holds(r: Fraction, alpha: ExtExp, eps: Flag) -> bool:
    if alpha.value is None:
        return False
    return r > alpha.value if eps == 1 else r >= alpha.value


def naive_member(m: Monomial, ideal: OracleIdeal) -> bool:
    if isinstance(ideal, BoxIdeal):
        return all(_holds(r, ray.alpha, ray.eps) for r, ray in zip(m.exps, ideal.rays))
    if isinstance(ideal, IrreducibleIdeal):
        return any(_holds(r, ray.alpha, ray.eps) for r, ray in zip(m.exps, ideal.rays))
    if isinstance(ideal, PurePowerIdeal):
        return _holds(m.exps[ideal.var - 1], ideal.ray.alpha, ideal.ray.eps)
    if isinstance(ideal, AfgIdeal):
        return any(naive_member(m, box) for box in ideal.boxes)
    if isinstance(ideal, Decomposition):
        return all(naive_member(m, component) for component in ideal.components)
    if isinstance(ideal, FiniteGeneratorSet):
        return any(all(s >= g for g, s in zip(gen.exps, m.exps)) for gen in ideal.gens)
    raise IdealError(f"The oracle cannot evaluate {type(ideal).__name__}")


def grid_oracle(ideal: OracleIdeal, points: Sequence[Monomial]) -> Tuple[bool, ...]:
    """Membership bitmap of points in ideal."""
    for m in points:
        check_dims(ideal.dim, m.dim)
    return tuple(naive_member(m, ideal) for m in points)


def _rays_of(ideal: OracleIdeal) -> Iterable[Tuple[int, Ray]]:
    if isinstance(ideal, (BoxIdeal, IrreducibleIdeal)):
        yield from enumerate(ideal.rays)
    elif isinstance(ideal, PurePowerIdeal):
        yield ideal.var - 1, ideal.ray
    elif isinstance(ideal, AfgIdeal):
        for box in ideal.boxes:
            yield from _rays_of(box)
    elif isinstance(ideal, Decomposition):
        for component in ideal.components:
            yield from _rays_of(component)
    elif isinstance(ideal, FiniteGeneratorSet):
        for gen in ideal.gens:
            for axis, value in enumerate(gen.exps):
                yield axis, Ray(ExtExp(value))
    else:
        raise IdealError(f"The oracle cannot evaluate {type(ideal).__name__}")


def bounds_per_axis(*ideals: OracleIdeal) -> List[Set[Fraction]]:
    """Finite bounds on every axis (0 always included)."""
    dim = check_dims(*(ideal.dim for ideal in ideals))
    axes: List[Set[Fraction]] = [{Fraction(0)} for _ in range(dim)]
    for ideal in ideals:
        for axis, ray in _rays_of(ideal):
            if ray.alpha.is_finite:
                axes[axis].add(ray.alpha.value)
    return axes


def resolution(*ideals: OracleIdeal) -> int:
    """Q = 2 * lcm(denominators of all bounds) + 1."""
    denominators = [v.denominator for axis in bounds_per_axis(*ideals) for v in axis]
    return 2 * math.lcm(*denominators) + 1


def default_points(*ideals: OracleIdeal, settings: Optional[Settings] = None) -> List[Monomial]:
    settings = settings or Settings()
    rng = random.Random(settings.oracle_seed)
    axes = bounds_per_axis(*ideals)
    q = resolution(*ideals)
    step = Fraction(1, q)
    values = [
        sorted({max(Fraction(0), v + delta) for v in axis for delta in (-step, 0, step)})
        for axis in axes
    ]
    size = math.prod(len(axis) for axis in values)
    if settings.oracle_grid_limit is None or size <= settings.oracle_grid_limit:
        grid = [Monomial(tuple(point)) for point in itertools.product(*values)]
    else:
        grid = list(dict.fromkeys(
            Monomial(tuple(rng.choice(axis) for axis in values))
            for _ in range(settings.oracle_grid_limit)
        ))
    top = max(max(axis) for axis in axes) + 1
    ceiling = math.ceil(top * q)
    extra = [
        Monomial(tuple(Fraction(rng.randint(0, ceiling), q) for _ in axes))
        for _ in range(settings.oracle_random_points)
    ]
    return grid + extra


def realize_witness(point: Sequence[PerturbedCoord], *ideals: OracleIdeal) -> Monomial:
    """A concrete monomial for a perturbed witness: open coordinates become base + 1/Q."""
    q = resolution(*ideals)
    return Monomial(tuple(c.realize(q) for c in point))


def agree(left: OracleIdeal, right: OracleIdeal, points: Optional[Sequence[Monomial]] = None) -> bool:
    """Both ideals have the same members on the given (or default) points."""
    points = default_points(left, right) if points is None else points
    return grid_oracle(left, points) == grid_oracle(right, points)
