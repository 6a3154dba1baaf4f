"""
Monomial Module

Monomials X^r = X1^r1 * ... * Xd^rd with nonnegative rational exponent vectors.
Coefficients are never represented: every statement about monomial ideals is a
statement about monomial sets, so the coefficient ring plays no role.

The module defines:
    - Monomial: Immutable exponent vector with its dimension
    - lcm: Coordinatewise maximum of a nonempty family of monomials

Text form: "X1^3/2*X2^2" (omitted exponent means 1, "1" is the identity).
JSON form: a list of rational strings.

Example:
    >>> from core.monomial import Monomial, lcm
    >>> f = Monomial.of(2, "3/2")
    >>> g = Monomial.of("5/3", 1)
    >>> str(lcm([f, g]))
    'X1^2*X2^3/2'
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from core.errors import DimensionMismatchError, IdealError, NotInIdealError
from core.exponent import RationalLike, as_fraction, format_rational


def check_dims(*dims: int) -> int:
    """Return the common dimension or raise DimensionMismatchError."""
    unique = set(dims)
    if len(unique) > 1:
        raise DimensionMismatchError(f"Incompatible ambient rings: dimensions {sorted(unique)}")
    return dims[0]


@dataclass(frozen=True)
class Monomial:
    """
    A monomial of A[R^d_{>=0}], stored as its exponent vector.
    """
    exps: Tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.exps, tuple) or not self.exps:
            raise ValueError("Monomial needs a nonempty tuple of exponents")
        for value in self.exps:
            if not isinstance(value, Fraction):
                raise TypeError("Monomial exponents must be Fractions; use Monomial.of(...)")
            if value < 0:
                raise ValueError(f"Monomial exponents must be nonnegative, got {value}")

    @classmethod
    def of(cls, *values: RationalLike) -> "Monomial":
        return cls(tuple(as_fraction(v) for v in values))

    @classmethod
    def one(cls, dim: int) -> "Monomial":
        """The identity monomial X^0 = 1."""
        return cls(tuple(Fraction(0) for _ in range(dim)))

    @classmethod
    def pure_power(cls, dim: int, var: int, exp: RationalLike) -> "Monomial":
        """X_var^exp with var counted from 1."""
        if not 1 <= var <= dim:
            raise DimensionMismatchError(f"Variable index {var} outside 1..{dim}")
        exps = [Fraction(0)] * dim
        exps[var - 1] = as_fraction(exp)
        return cls(tuple(exps))

    @classmethod
    def from_json_data(cls, data: Sequence[str]) -> "Monomial":
        try:
            return cls(tuple(as_fraction(str(v)) for v in data))
        except (TypeError, ValueError) as e:
            raise IdealError(f"Invalid monomial exponents {data!r}: {e}") from e

    def to_json_data(self) -> List[str]:
        return [format_rational(v) for v in self.exps]

    @property
    def dim(self) -> int:
        return len(self.exps)

    @property
    def is_one(self) -> bool:
        return all(v == 0 for v in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        """X^q X^r = X^(q+r)."""
        if not isinstance(other, Monomial):
            return NotImplemented
        check_dims(self.dim, other.dim)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, s: RationalLike) -> "Monomial":
        """(X^q)^s = X^(s q) for a nonnegative rational s."""
        s = as_fraction(s)
        return Monomial(tuple(s * v for v in self.exps))

    def divides(self, other: "Monomial") -> bool:
        """self | other, i.e. other is in (self)R."""
        check_dims(self.dim, other.dim)
        return all(b >= a for a, b in zip(self.exps, other.exps))

    def quotient(self, divisor: "Monomial") -> "Monomial":
        """The h with self = divisor * h."""
        if not divisor.divides(self):
            raise NotInIdealError(f"{divisor} does not divide {self}")
        return Monomial(tuple(b - a for a, b in zip(divisor.exps, self.exps)))

    def __str__(self) -> str:
        factors = []
        for index, value in enumerate(self.exps, start=1):
            if value == 0:
                continue
            if value == 1:
                factors.append(f"X{index}")
            else:
                factors.append(f"X{index}^{format_rational(value)}")
        return "*".join(factors) if factors else "1"


def multiply(f: Monomial, g: Monomial) -> Monomial:
    return f * g


def divides(f: Monomial, g: Monomial) -> bool:
    return f.divides(g)


def lcm(monomials: Iterable[Monomial]) -> Monomial:
    """
    Least common multiple: coordinatewise maximum of the exponent vectors.
    """
    monomials = list(monomials)
    if not monomials:
        raise IdealError("lcm of an empty family of monomials is undefined")
    check_dims(*(m.dim for m in monomials))
    return Monomial(tuple(max(column) for column in zip(*(m.exps for m in monomials))))
