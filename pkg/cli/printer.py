"""
Canonical Printer

Prints sums of boxes and decompositions back into the expression language, so
that parse_expr(print_canonical(v), d) denotes v again.

Canonical form:
    - zero boxes are dropped from a sum, duplicates printed once, the rest sorted
      by (alpha vector, eps vector); the zero sum prints as I[inf,..;0,..]
    - a decomposition always prints as cap(...) of normalized J literals in the
      same order; the empty intersection prints as cap(J[0,..;0,..])
    - every infinite bound carries flag 0
"""
from typing import Union

from core.ideal import AfgIdeal, BoxIdeal, Decomposition, IrreducibleIdeal


def print_afg(ideal: AfgIdeal) -> str:
    boxes = sorted({box.normalized() for box in ideal.nonzero_boxes}, key=BoxIdeal.sort_key)
    if not boxes:
        return str(BoxIdeal.zero(ideal.dim))
    return "+".join(str(box) for box in boxes)


def print_decomposition(decomposition: Decomposition) -> str:
    components = sorted(
        {component.normalized() for component in decomposition.components},
        key=IrreducibleIdeal.sort_key,
    )
    if not components:
        components = [IrreducibleIdeal.unit(decomposition.dim)]
    return "cap(" + ",".join(str(component) for component in components) + ")"


def print_canonical(ideal: Union[AfgIdeal, Decomposition]) -> str:
    if isinstance(ideal, Decomposition):
        return print_decomposition(ideal)
    return print_afg(ideal)
