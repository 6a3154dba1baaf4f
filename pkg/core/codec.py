"""
Codec Module

JSON documents for ideals and containment witnesses.

Ideal documents (canonical field order):
    {"dim": d, "form": "sum" | "intersection" | "gens", "terms": [...]}
where a sum or intersection term is {"alpha": ["2", "3/2"], "eps": [1, 0]} and a gens
term is an exponent array. "inf" encodes infinity.

Witness documents:
    {"point": [{"v": "2", "open": true}, ...]}
"""
import json
from typing import Mapping, Sequence, Tuple, Union

from core.errors import IdealError
from core.exponent import Offset, PerturbedCoord, format_rational, parse_rational
from core.ideal import AfgIdeal, BoxIdeal, Decomposition, FiniteGeneratorSet, IrreducibleIdeal
from core.monomial import Monomial

Ideal = Union[AfgIdeal, Decomposition, FiniteGeneratorSet]


def load_ideal(data: Mapping) -> Ideal:
    """
    Build an ideal from its JSON document, dispatching on "form".
    """
    try:
        dim = int(data["dim"])
        form = data["form"]
        terms = data["terms"]
    except KeyError as e:
        raise IdealError(f"Missing required field for ideal: {e}") from e
    except (TypeError, ValueError) as e:
        raise IdealError(f"Invalid ideal document: {e}") from e
    if not isinstance(terms, list):
        raise IdealError("Ideal terms must be a list")
    if form == "sum":
        return AfgIdeal(dim, tuple(BoxIdeal.from_json_data(t) for t in terms))
    if form == "intersection":
        return Decomposition(dim, tuple(IrreducibleIdeal.from_json_data(t) for t in terms))
    if form == "gens":
        return FiniteGeneratorSet(dim, tuple(Monomial.from_json_data(t) for t in terms))
    raise IdealError(f"Unknown ideal form: {form!r}")


def loads_ideal(text: str) -> Ideal:
    try:
        return load_ideal(json.loads(text))
    except json.JSONDecodeError as e:
        raise IdealError(f"Invalid JSON: {e}") from e


def dumps_ideal(ideal: Ideal) -> str:
    return json.dumps(ideal.to_json_data(), separators=(",", ":"))


def witness_to_json_data(point: Sequence[PerturbedCoord]) -> dict:
    return {"point": [{"v": format_rational(c.base), "open": c.is_open} for c in point]}


def witness_from_json_data(data: Mapping) -> Tuple[PerturbedCoord, ...]:
    try:
        return tuple(
            PerturbedCoord(parse_rational(str(c["v"])), Offset.PLUS if c["open"] else Offset.EXACT)
            for c in data["point"]
        )
    except KeyError as e:
        raise IdealError(f"Missing required field for witness: {e}") from e
    except (TypeError, ValueError) as e:
        raise IdealError(f"Invalid witness document: {e}") from e
