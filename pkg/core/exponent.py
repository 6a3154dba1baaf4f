"""
Exponent Module

Exact exponents for monomials with nonnegative real exponents. Exponents are
nonnegative rationals (``fractions.Fraction``) extended by a distinguished value
infinity, following the convention X_i^inf = 0 that lets zero ideals be written
with the same shapes as every other ideal.

The module defines:
    - ExtExp: A nonnegative rational or infinity, totally ordered
    - Flag: Closed (0) or open (1) boundary of a ray
    - Ray: The exponent set {r : r >=_eps alpha}, the atom of every ideal form
    - Offset / PerturbedCoord: A rational, or a rational plus an infinitesimal,
      used as witness coordinates when deciding containment
    - geq_eps / perturbed_satisfies: The comparison rules behind all of the above

Text form: rationals are written "p/q" or "p", infinity is "inf".

Example:
    >>> from core.exponent import Ray, Flag, geq_eps, ExtExp
    >>> ray = Ray.of("2", Flag.OPEN)
    >>> ray.admits(2), ray.admits("9/4")
    (False, True)

Design Principles:
    - Exactness: Only comparisons, max and min ever touch exponents, so rationals
      are closed under every operation and no float ever appears
    - Immutability: Every value is a frozen dataclass and safe to share
"""
import re
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

INF_TEXT = "inf"

_RATIONAL_RE = re.compile(r"^(\d+)(?:/(\d+))?$")

RationalLike = Union[Fraction, int, str]


def parse_rational(text: str) -> Fraction:
    """
    Parse "p" or "p/q" (nonnegative, no sign, no decimals) into a Fraction.
    """
    match = _RATIONAL_RE.match(text.strip())
    if not match:
        raise ValueError(f"Invalid nonnegative rational: {text!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"Zero denominator in rational: {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or rational string into a nonnegative Fraction."""
    if isinstance(value, bool):
        raise TypeError("Booleans are not exponents")
    if isinstance(value, Fraction):
        result = value
    elif isinstance(value, int):
        result = Fraction(value)
    elif isinstance(value, str):
        result = parse_rational(value)
    else:
        raise TypeError(f"Exponents must be exact rationals, got {type(value).__name__}")
    if result < 0:
        raise ValueError(f"Exponents must be nonnegative, got {result}")
    return result


def format_rational(value: Fraction) -> str:
    return str(value)


@total_ordering
@dataclass(frozen=True)
class ExtExp:
    """
    An element of the nonnegative rationals extended by infinity.

    value=None encodes infinity.
    """
    value: Optional[Fraction] = None

    def __post_init__(self):
        if self.value is None:
            return
        if not isinstance(self.value, Fraction):
            raise TypeError("ExtExp.value must be a Fraction or None")
        if self.value < 0:
            raise ValueError(f"Exponents must be nonnegative, got {self.value}")

    @classmethod
    def of(cls, value: Union["ExtExp", RationalLike]) -> "ExtExp":
        if isinstance(value, ExtExp):
            return value
        if isinstance(value, str) and value.strip() == INF_TEXT:
            return INF
        return cls(as_fraction(value))

    @classmethod
    def parse(cls, text: str) -> "ExtExp":
        if text.strip() == INF_TEXT:
            return INF
        return cls(parse_rational(text))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __lt__(self, other: "ExtExp") -> bool:
        if not isinstance(other, ExtExp):
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __str__(self) -> str:
        return INF_TEXT if self.value is None else format_rational(self.value)


INF = ExtExp(None)
ZERO = ExtExp(Fraction(0))


class Flag(IntEnum):
    """
    Boundary flag of a ray: CLOSED reads r >= alpha, OPEN reads r > alpha.
    """
    CLOSED = 0
    OPEN = 1


def geq_eps(r: Union[ExtExp, RationalLike], alpha: Union[ExtExp, RationalLike], eps: Flag) -> bool:
    """
    r >=_eps alpha: r >= alpha when eps is closed, r > alpha when open.
    Against alpha = inf the answer is (r = inf) whatever the flag.
    """
    r, alpha = ExtExp.of(r), ExtExp.of(alpha)
    if alpha.is_infinite:
        return r.is_infinite
    if r.is_infinite:
        return True
    if Flag(eps) is Flag.OPEN:
        return r.value > alpha.value
    return r.value >= alpha.value


@dataclass(frozen=True)
class Ray:
    """
    The exponent set {r finite : r >=_eps alpha}.

    Ray(0, CLOSED) is every exponent (no constraint); any ray with alpha = inf
    is empty.
    """
    alpha: ExtExp
    eps: Flag = Flag.CLOSED

    def __post_init__(self):
        if not isinstance(self.alpha, ExtExp):
            raise TypeError("Ray.alpha must be an ExtExp; use Ray.of(...) to coerce")
        if not isinstance(self.eps, Flag):
            raise TypeError("Ray.eps must be a Flag; use Ray.of(...) to coerce")

    @classmethod
    def of(cls, alpha: Union[ExtExp, RationalLike], eps: Union[Flag, int] = Flag.CLOSED) -> "Ray":
        if isinstance(eps, bool) or int(eps) not in (0, 1):
            raise ValueError(f"Ray flag must be 0 or 1, got {eps!r}")
        return cls(ExtExp.of(alpha), Flag(int(eps)))

    @property
    def is_empty(self) -> bool:
        return self.alpha.is_infinite

    @property
    def is_vacuous(self) -> bool:
        """True for Ray(0, 0), which admits every exponent."""
        return self.alpha == ZERO and self.eps is Flag.CLOSED

    def admits(self, r: Union[ExtExp, RationalLike]) -> bool:
        """Finite exponent r lies in the ray."""
        r = ExtExp.of(r)
        return r.is_finite and geq_eps(r, self.alpha, self.eps)

    def is_subset_of(self, other: "Ray") -> bool:
        """Exponent-set inclusion."""
        if self.is_empty:
            return True
        if other.is_empty:
            return False
        if self.alpha != other.alpha:
            return self.alpha > other.alpha
        return self.eps >= other.eps

    def normalized(self) -> "Ray":
        """All empty rays are spelled Ray(inf, 0)."""
        if self.is_empty and self.eps is not Flag.CLOSED:
            return Ray(INF, Flag.CLOSED)
        return self

    def sort_key(self) -> tuple:
        """Orders rays by shrinking exponent set: smaller key means larger set."""
        return (self.alpha, int(self.eps))

    def __str__(self) -> str:
        return f"{'(' if self.eps is Flag.OPEN else '['}{self.alpha}, inf)"


VACUOUS = Ray(ZERO, Flag.CLOSED)
EMPTY = Ray(INF, Flag.CLOSED)


class Offset(Enum):
    EXACT = "exact"
    PLUS = "plus"


@dataclass(frozen=True)
class PerturbedCoord:
    """
    A witness coordinate: base exactly, or base plus an infinitesimal (PLUS).
    A PLUS coordinate equals no rational, so it can witness points just past an
    open boundary that no single monomial can.
    """
    base: Fraction
    offset: Offset = Offset.EXACT

    def __post_init__(self):
        if not isinstance(self.base, Fraction):
            raise TypeError("PerturbedCoord.base must be a Fraction")
        if self.base < 0:
            raise ValueError("PerturbedCoord.base must be nonnegative")

    @property
    def is_open(self) -> bool:
        return self.offset is Offset.PLUS

    def realize(self, q: int) -> Fraction:
        """A concrete rational standing in for this coordinate: base, or base + 1/q."""
        return self.base + Fraction(1, q) if self.is_open else self.base

    def sort_key(self) -> tuple:
        return (self.base, self.is_open)

    def __str__(self) -> str:
        return f"{format_rational(self.base)}{'+' if self.is_open else ''}"


def perturbed_satisfies(p: PerturbedCoord, ray: Ray) -> bool:
    """
    Decide p in ray. A PLUS coordinate clears an open bound exactly when
    base >= alpha, so for it the flag is irrelevant.
    """
    if ray.is_empty:
        return False
    if p.offset is Offset.EXACT:
        return geq_eps(ExtExp(p.base), ray.alpha, ray.eps)
    return p.base >= ray.alpha.value
