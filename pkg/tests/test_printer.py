import pytest

from cli.parser import parse_expr
from cli.printer import print_canonical
from core.ideal import AfgIdeal, BoxIdeal, Decomposition, IrreducibleIdeal
from decomposition.redundancy import remove_redundant
from decomposition.transform import decompose


def test_single_box():
    assert print_canonical(AfgIdeal.of(BoxIdeal.of([2, "3/2"], [1, 0]))) == "I[2,3/2;1,0]"


def test_zero_sum():
    assert print_canonical(AfgIdeal.zero(2)) == "I[inf,inf;0,0]"
    assert print_canonical(AfgIdeal(2, (BoxIdeal.of([1, "inf"], [1, 1]),))) == "I[inf,inf;0,0]"


def test_terms_are_sorted_and_deduplicated():
    ideal = AfgIdeal.of(
        BoxIdeal.of([1, 0], [0, 0]),
        BoxIdeal.of([0, 1], [0, 0]),
        BoxIdeal.of([0, 1], [1, 0]),
        BoxIdeal.of([1, 0], [0, 0]),
    )
    assert print_canonical(ideal) == "I[0,1;0,0]+I[0,1;1,0]+I[1,0;0,0]"


def test_decomposition_of_open_box():
    decomposition = remove_redundant(decompose(AfgIdeal.of(BoxIdeal.of([2, "3/2"], [1, 0]))))
    assert print_canonical(decomposition) == "cap(J[2,inf;1,0],J[inf,3/2;0,0])"


def test_unit_decomposition():
    assert print_canonical(Decomposition(2, ())) == "cap(J[0,0;0,0])"
    assert print_canonical(Decomposition.of(IrreducibleIdeal.of([5, 0], [1, 0]))) == "cap(J[0,0;0,0])"


@pytest.mark.parametrize(
    "literal, printed",
    [
        ("J[1,2;0,0]", "cap(J[1,2;0,0])"),
        ("J[1,2;0,1]", "cap(J[1,2;0,1])"),
        ("J[1,2;1,0]", "cap(J[1,2;1,0])"),
        ("J[1,2;1,1]", "cap(J[1,2;1,1])"),
        ("J[inf,2;1,0]", "cap(J[inf,2;0,0])"),
        ("J[inf,2;1,1]", "cap(J[inf,2;0,1])"),
        ("J[1,inf;1,1]", "cap(J[1,inf;1,0])"),
        ("J[1,inf;0,1]", "cap(J[1,inf;0,0])"),
        ("J[inf,inf;1,1]", "cap(J[inf,inf;0,0])"),
    ],
)
def test_two_variable_normal_forms(literal, printed):
    assert print_canonical(parse_expr(literal, 2).to_decomposition()) == printed
