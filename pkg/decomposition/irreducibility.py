"""
m-Irreducibility Test

A monomial ideal is m-irreducible exactly when it is one irreducible J_{a,e}. For a
sum of boxes this is decided by decomposing, removing redundant components, and
counting: at most one component left means m-irreducible (none left is the unit
ideal R). Otherwise the first component and the intersection of the rest form a
factorization into two ideals, each strictly larger than the input because the
decomposition is irredundant.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from core.ideal import AfgIdeal, Decomposition
from decomposition.redundancy import remove_redundant
from decomposition.transform import decompose

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IrreducibilityResult:
    irreducible: bool
    decomposition: Decomposition
    witness: Optional[Tuple[Decomposition, Decomposition]] = None

    def __bool__(self) -> bool:
        return self.irreducible


def is_m_irreducible(ideal: AfgIdeal) -> IrreducibilityResult:
    irredundant = remove_redundant(decompose(ideal))
    if len(irredundant) <= 1:
        return IrreducibilityResult(True, irredundant)
    first, *rest = irredundant.components
    witness = (
        Decomposition(ideal.dim, (first,)),
        Decomposition(ideal.dim, tuple(rest)),
    )
    logger.debug("reducible: %d irredundant components", len(irredundant))
    return IrreducibilityResult(False, irredundant, witness)
