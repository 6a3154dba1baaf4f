"""
Ideal Module

The ideal representations of the calculus, all immutable and all described by
vectors of rays (see core.exponent.Ray):

    - PurePowerIdeal  J_{i,a,e} = ({X_i^r : r >=_e a})R
    - IrreducibleIdeal J_{a,e}  = ({X_i^{r_i} : some i, r_i >=_{e_i} a_i})R  (rays read disjunctively)
    - BoxIdeal         I_{a,e}  = ({X^r : every i, r_i >=_{e_i} a_i})R      (rays read conjunctively)
    - AfgIdeal         a finite sum of boxes; the empty sum is the zero ideal
    - Decomposition    a finite intersection of irreducibles; the empty intersection is R
    - FiniteGeneratorSet (gens)R for a finite list of monomials; the empty list is the zero ideal

Membership is the ``in`` operator on every form. A box's generator set is itself
upward closed, so a monomial lies in a box exactly when it satisfies all of the
box's rays; no generator search is needed.

Ray vectors always have full length d: boxes use Ray(0, 0) for "no constraint",
irreducibles use Ray(inf, .) for "no generator from this variable".

Example:
    >>> from core.ideal import BoxIdeal
    >>> from core.monomial import Monomial
    >>> box = BoxIdeal.of(["2", "3/2"], [1, 0])
    >>> Monomial.of(3, "3/2") in box, Monomial.of(2, "3/2") in box
    (True, False)
"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Mapping, Sequence, Tuple

from core.errors import DimensionMismatchError, IdealError
from core.exponent import EMPTY, INF, VACUOUS, ExtExp, Flag, Ray, RationalLike
from core.monomial import Monomial, check_dims


class BoxKind(Enum):
    ZERO = "zero"
    PRINCIPAL = "principal"
    OPEN_BOX = "open-box"


def _rays_from_lists(alphas: Sequence, flags: Sequence) -> Tuple[Ray, ...]:
    if len(alphas) != len(flags):
        raise DimensionMismatchError(
            f"{len(alphas)} bounds but {len(flags)} flags"
        )
    return tuple(Ray.of(a, e) for a, e in zip(alphas, flags))


@dataclass(frozen=True)
class PurePowerIdeal:
    """
    J_{var, alpha, eps}: generated by the pure powers X_var^r with r >=_eps alpha.
    var counts from 1.
    """
    dim: int
    var: int
    ray: Ray

    def __post_init__(self):
        if not 1 <= self.var <= self.dim:
            raise DimensionMismatchError(f"Variable index {self.var} outside 1..{self.dim}")

    @classmethod
    def of(cls, dim: int, var: int, alpha: RationalLike, eps: int = 0) -> "PurePowerIdeal":
        return cls(dim, var, Ray.of(alpha, eps))

    @property
    def is_zero(self) -> bool:
        return self.ray.is_empty

    def is_finitely_generated(self) -> bool:
        return self.ray.is_empty or self.ray.eps is Flag.CLOSED

    def __contains__(self, m: Monomial) -> bool:
        check_dims(self.dim, m.dim)
        return self.ray.admits(m.exps[self.var - 1])

    def as_irreducible(self) -> "IrreducibleIdeal":
        rays = [EMPTY] * self.dim
        rays[self.var - 1] = self.ray
        return IrreducibleIdeal(tuple(rays))

    def as_box(self) -> "BoxIdeal":
        rays = [VACUOUS] * self.dim
        rays[self.var - 1] = self.ray
        return BoxIdeal(tuple(rays))


@dataclass(frozen=True)
class RayIdeal:
    """
    Shared shape of boxes and irreducibles: one ray per variable.
    """
    rays: Tuple[Ray, ...]

    def __post_init__(self):
        if not isinstance(self.rays, tuple) or not self.rays:
            raise ValueError(f"{type(self).__name__} needs a nonempty tuple of rays")
        if not all(isinstance(ray, Ray) for ray in self.rays):
            raise TypeError(f"{type(self).__name__}.rays must hold Ray values")

    @classmethod
    def of(cls, alphas: Sequence, flags: Sequence):
        """Build from parallel lists of bounds ("inf" allowed) and 0/1 flags."""
        return cls(_rays_from_lists(alphas, flags))

    @classmethod
    def from_json_data(cls, data: Mapping):
        try:
            return cls(_rays_from_lists(
                [ExtExp.parse(str(a)) for a in data["alpha"]],
                [int(e) for e in data["eps"]],
            ))
        except KeyError as e:
            raise IdealError(f"Missing required field for {cls.__name__}: {e}") from e
        except (TypeError, ValueError) as e:
            if isinstance(e, IdealError):
                raise
            raise IdealError(f"Invalid {cls.__name__} term: {e}") from e

    def to_json_data(self) -> dict:
        return {
            "alpha": [str(ray.alpha) for ray in self.rays],
            "eps": [int(ray.eps) for ray in self.rays],
        }

    @property
    def dim(self) -> int:
        return len(self.rays)

    @property
    def alphas(self) -> Tuple[ExtExp, ...]:
        return tuple(ray.alpha for ray in self.rays)

    @property
    def flags(self) -> Tuple[Flag, ...]:
        return tuple(ray.eps for ray in self.rays)

    def sort_key(self) -> tuple:
        return (self.alphas, tuple(int(e) for e in self.flags))

    def as_terms(self) -> List[Tuple[int, Ray]]:
        """(variable, ray) pairs, variables counted from 1."""
        return [(index, ray) for index, ray in enumerate(self.rays, start=1)]

    def pure_powers(self) -> List[PurePowerIdeal]:
        return [PurePowerIdeal(self.dim, var, ray) for var, ray in self.as_terms()]


@dataclass(frozen=True)
class BoxIdeal(RayIdeal):
    """
    I_{alpha, eps}: the almost-principal ideal "almost generated by X^alpha".
    """

    @classmethod
    def unit(cls, dim: int) -> "BoxIdeal":
        return cls(tuple(VACUOUS for _ in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> "BoxIdeal":
        return cls(tuple(EMPTY for _ in range(dim)))

    @classmethod
    def principal(cls, generator: Monomial) -> "BoxIdeal":
        """(X^r)R = I_{r, 0}."""
        return cls(tuple(Ray(ExtExp(v), Flag.CLOSED) for v in generator.exps))

    @property
    def is_zero(self) -> bool:
        return any(ray.is_empty for ray in self.rays)

    @property
    def is_unit(self) -> bool:
        return all(ray.is_vacuous for ray in self.rays)

    def classify(self) -> BoxKind:
        if self.is_zero:
            return BoxKind.ZERO
        if all(ray.eps is Flag.CLOSED for ray in self.rays):
            return BoxKind.PRINCIPAL
        return BoxKind.OPEN_BOX

    def is_finitely_generated(self) -> bool:
        if self.is_zero:
            return True
        return all(ray.eps is Flag.CLOSED for ray in self.rays)

    def generator(self) -> Monomial:
        """X^alpha for a principal box."""
        if self.classify() is not BoxKind.PRINCIPAL:
            raise IdealError(f"{self} is not principal")
        return Monomial(tuple(ray.alpha.value for ray in self.rays))

    def __contains__(self, m: Monomial) -> bool:
        check_dims(self.dim, m.dim)
        return all(ray.admits(v) for ray, v in zip(self.rays, m.exps))

    def is_subset_of(self, other: "BoxIdeal") -> bool:
        check_dims(self.dim, other.dim)
        if self.is_zero:
            return True
        return all(mine.is_subset_of(theirs) for mine, theirs in zip(self.rays, other.rays))

    def normalized(self) -> "BoxIdeal":
        if self.is_zero:
            return BoxIdeal.zero(self.dim)
        return self

    def __str__(self) -> str:
        alphas = ",".join(str(a) for a in self.alphas)
        flags = ",".join(str(int(e)) for e in self.flags)
        return f"I[{alphas};{flags}]"


@dataclass(frozen=True)
class IrreducibleIdeal(RayIdeal):
    """
    J_{alpha, eps}: generated by pure powers; exactly the m-irreducible monomial ideals.
    """

    @classmethod
    def unit(cls, dim: int) -> "IrreducibleIdeal":
        return cls(tuple(VACUOUS for _ in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> "IrreducibleIdeal":
        return cls(tuple(EMPTY for _ in range(dim)))

    @property
    def is_zero(self) -> bool:
        return all(ray.is_empty for ray in self.rays)

    @property
    def is_unit(self) -> bool:
        return any(ray.is_vacuous for ray in self.rays)

    def is_finitely_generated(self) -> bool:
        if self.is_unit:
            return True
        return all(ray.is_empty or ray.eps is Flag.CLOSED for ray in self.rays)

    def __contains__(self, m: Monomial) -> bool:
        check_dims(self.dim, m.dim)
        return any(ray.admits(v) for ray, v in zip(self.rays, m.exps))

    def is_subset_of(self, other: "IrreducibleIdeal") -> bool:
        check_dims(self.dim, other.dim)
        if self.is_zero or other.is_unit:
            return True
        return all(mine.is_subset_of(theirs) for mine, theirs in zip(self.rays, other.rays))

    def normalized(self) -> "IrreducibleIdeal":
        if self.is_unit:
            return IrreducibleIdeal.unit(self.dim)
        return IrreducibleIdeal(tuple(ray.normalized() for ray in self.rays))

    def __str__(self) -> str:
        alphas = ",".join(str(a) for a in self.alphas)
        flags = ",".join(str(int(e)) for e in self.flags)
        return f"J[{alphas};{flags}]"


def _check_members(dim: int, members: Iterable, label: str) -> None:
    if dim < 1:
        raise ValueError("Dimension must be positive")
    for member in members:
        if member.dim != dim:
            raise DimensionMismatchError(
                f"{label} of dimension {member.dim} in an ideal of dimension {dim}"
            )


@dataclass(frozen=True)
class AfgIdeal:
    """
    An almost finitely generated ideal: the sum of finitely many boxes.
    """
    dim: int
    boxes: Tuple[BoxIdeal, ...] = ()

    def __post_init__(self):
        if not isinstance(self.boxes, tuple):
            raise TypeError("AfgIdeal.boxes must be a tuple")
        _check_members(self.dim, self.boxes, "box")

    @classmethod
    def of(cls, *boxes: BoxIdeal, dim: int = 0) -> "AfgIdeal":
        dim = dim or (boxes[0].dim if boxes else 0)
        return cls(dim, tuple(boxes))

    @classmethod
    def zero(cls, dim: int) -> "AfgIdeal":
        return cls(dim, ())

    @classmethod
    def unit(cls, dim: int) -> "AfgIdeal":
        return cls(dim, (BoxIdeal.unit(dim),))

    @property
    def nonzero_boxes(self) -> Tuple[BoxIdeal, ...]:
        return tuple(box for box in self.boxes if not box.is_zero)

    @property
    def is_syntactically_zero(self) -> bool:
        return not self.nonzero_boxes

    def __contains__(self, m: Monomial) -> bool:
        check_dims(self.dim, m.dim)
        return any(m in box for box in self.boxes)

    def to_json_data(self) -> dict:
        return {"dim": self.dim, "form": "sum", "terms": [b.to_json_data() for b in self.boxes]}


@dataclass(frozen=True)
class Decomposition:
    """
    A finite m-irreducible decomposition: the intersection of its components.
    """
    dim: int
    components: Tuple[IrreducibleIdeal, ...] = ()

    def __post_init__(self):
        if not isinstance(self.components, tuple):
            raise TypeError("Decomposition.components must be a tuple")
        _check_members(self.dim, self.components, "component")

    @classmethod
    def of(cls, *components: IrreducibleIdeal, dim: int = 0) -> "Decomposition":
        dim = dim or (components[0].dim if components else 0)
        return cls(dim, tuple(components))

    def __len__(self) -> int:
        return len(self.components)

    def __contains__(self, m: Monomial) -> bool:
        check_dims(self.dim, m.dim)
        return all(m in component for component in self.components)

    def to_json_data(self) -> dict:
        return {
            "dim": self.dim,
            "form": "intersection",
            "terms": [c.to_json_data() for c in self.components],
        }


@dataclass(frozen=True)
class FiniteGeneratorSet:
    """
    The monomial ideal (gens)R generated by a finite set of monomials.
    """
    dim: int
    gens: Tuple[Monomial, ...] = ()

    def __post_init__(self):
        if not isinstance(self.gens, tuple):
            raise TypeError("FiniteGeneratorSet.gens must be a tuple")
        _check_members(self.dim, self.gens, "generator")

    @classmethod
    def of(cls, *gens: Monomial, dim: int = 0) -> "FiniteGeneratorSet":
        dim = dim or (gens[0].dim if gens else 0)
        return cls(dim, tuple(gens))

    def __contains__(self, m: Monomial) -> bool:
        check_dims(self.dim, m.dim)
        return any(g.divides(m) for g in self.gens)

    def minimized(self) -> "FiniteGeneratorSet":
        """Drop duplicates and generators that are multiples of another generator."""
        unique = list(dict.fromkeys(self.gens))
        kept = [
            g for g in unique
            if not any(h != g and h.divides(g) for h in unique)
        ]
        return FiniteGeneratorSet(self.dim, tuple(kept))

    def is_pure_power_generated(self) -> bool:
        """Every generator is a pure power X_i^r or the identity."""
        return all(sum(1 for v in g.exps if v != 0) <= 1 for g in self.gens)

    def to_json_data(self) -> dict:
        return {"dim": self.dim, "form": "gens", "terms": [g.to_json_data() for g in self.gens]}
