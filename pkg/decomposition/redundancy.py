"""
Redundancy Removal

A component of a decomposition is redundant when the intersection of the other
components already lies inside it. Components are scanned in input order and the
first redundant one is dropped; the scan restarts until no component can go, so
the output is irredundant and deterministic.
"""
import logging
from typing import List

from core.ideal import Decomposition, IrreducibleIdeal
from decomposition.containment import contains
from decomposition.transform import afg_of, recompose

logger = logging.getLogger(__name__)


def is_redundant(components: List[IrreducibleIdeal], index: int, dim: int) -> bool:
    others = Decomposition(dim, tuple(components[:index] + components[index + 1:]))
    return contains(afg_of(components[index]), recompose(others)).holds


def remove_redundant(decomposition: Decomposition) -> Decomposition:
    """
    Greedily drop redundant components until the decomposition is irredundant.
    """
    components = list(decomposition.components)
    dim = decomposition.dim
    dropped = 0
    changed = True
    while changed:
        changed = False
        for index in range(len(components)):
            if is_redundant(components, index, dim):
                logger.debug("dropping redundant component %s", components[index])
                del components[index]
                dropped += 1
                changed = True
                break
    logger.debug("remove_redundant: dropped %d of %d components", dropped, len(decomposition))
    return Decomposition(dim, tuple(components))


def simplify(decomposition: Decomposition) -> Decomposition:
    """Normalized, irredundant form of a decomposition."""
    irredundant = remove_redundant(decomposition)
    return Decomposition(irredundant.dim, tuple(c.normalized() for c in irredundant.components))
