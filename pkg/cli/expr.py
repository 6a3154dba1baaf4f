"""
Expression Tree

Abstract syntax of the ideal expression language. Every node knows how to lower
itself to a sum of boxes (``elaborate``) and to a decomposition
(``to_decomposition``); the command-line front end only talks to this interface.

The module defines:
    - Expr: Abstract base class of all nodes
    - BoxLiteral, IrrLiteral, PurePowerLiteral, GensLiteral: Leaves
    - SumExpr, CapExpr: Finite sums and intersections

Lowering rules:
    - a box is a one-term sum; a generator set is its sum of principal boxes
    - an irreducible or pure power is recomposed into boxes
    - sums concatenate boxes; intersections distribute pairwise over boxes
    - intersections of irreducibles and pure powers lower to a decomposition
      directly; everything else decomposes its elaborated sum
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import reduce
from typing import Tuple

from algebra.generators import finite_gen_to_afg
from core.ideal import AfgIdeal, BoxIdeal, Decomposition, FiniteGeneratorSet, IrreducibleIdeal, PurePowerIdeal
from decomposition.transform import afg_of, decompose, decomposition_of, intersect_afg, sum_afg

logger = logging.getLogger(__name__)


def _component(irreducible: IrreducibleIdeal) -> Decomposition:
    if irreducible.is_unit:
        logger.warning("component %s is the unit ideal and does not constrain the intersection", irreducible)
    return decomposition_of(irreducible)


class Expr(ABC):
    """
    Interface for expression nodes. All leaves of one tree share a dimension,
    checked by the parser.
    """

    @property
    @abstractmethod
    def dim(self) -> int:
        pass

    @abstractmethod
    def elaborate(self) -> AfgIdeal:
        """The value of the expression as a sum of boxes."""
        pass

    def to_decomposition(self) -> Decomposition:
        """The value of the expression as a finite intersection of irreducibles."""
        return decompose(self.elaborate())


@dataclass(frozen=True)
class BoxLiteral(Expr):
    box: BoxIdeal

    @property
    def dim(self) -> int:
        return self.box.dim

    def elaborate(self) -> AfgIdeal:
        return AfgIdeal(self.dim, (self.box,))


@dataclass(frozen=True)
class IrrLiteral(Expr):
    irreducible: IrreducibleIdeal

    @property
    def dim(self) -> int:
        return self.irreducible.dim

    def elaborate(self) -> AfgIdeal:
        return afg_of(self.irreducible)

    def to_decomposition(self) -> Decomposition:
        return _component(self.irreducible)


@dataclass(frozen=True)
class PurePowerLiteral(Expr):
    pure: PurePowerIdeal

    @property
    def dim(self) -> int:
        return self.pure.dim

    def elaborate(self) -> AfgIdeal:
        return AfgIdeal(self.dim, (self.pure.as_box(),))

    def to_decomposition(self) -> Decomposition:
        return _component(self.pure.as_irreducible())


@dataclass(frozen=True)
class GensLiteral(Expr):
    gens: FiniteGeneratorSet

    @property
    def dim(self) -> int:
        return self.gens.dim

    def elaborate(self) -> AfgIdeal:
        return finite_gen_to_afg(self.gens)


@dataclass(frozen=True)
class SumExpr(Expr):
    terms: Tuple[Expr, ...]

    @property
    def dim(self) -> int:
        return self.terms[0].dim

    def elaborate(self) -> AfgIdeal:
        return reduce(sum_afg, (term.elaborate() for term in self.terms))


@dataclass(frozen=True)
class CapExpr(Expr):
    terms: Tuple[Expr, ...]

    @property
    def dim(self) -> int:
        return self.terms[0].dim

    def elaborate(self) -> AfgIdeal:
        return reduce(intersect_afg, (term.elaborate() for term in self.terms))

    def to_decomposition(self) -> Decomposition:
        parts = [term.to_decomposition() for term in self.terms]
        return Decomposition(self.dim, tuple(c for part in parts for c in part.components))
