"""Tests for the expression parser: accepted forms, diagnostics and fuzzing."""
import logging
import random

import pytest
from hypothesis import given, settings, strategies as st

from cli.expr import BoxLiteral, CapExpr, GensLiteral, IrrLiteral, PurePowerLiteral, SumExpr
from cli.parser import MAX_NESTING, parse_expr, parse_monomial
from cli.printer import print_canonical
from core.errors import ExprDimensionError, ExprError, ExprSyntaxError
from core.ideal import AfgIdeal, BoxIdeal, Decomposition, FiniteGeneratorSet, IrreducibleIdeal, PurePowerIdeal
from core.monomial import Monomial
from decomposition.containment import equal
from decomposition.transform import recompose
from ideal_strategies import afg_ideals, irreducibles

EXAMPLE_INTERSECTION = "cap(Jp[1,2,1],Jp[2,3/2,0],Jp[1,5/3,0],Jp[2,1,1])"


class TestAcceptedForms:
    def test_box(self):
        assert parse_expr("I[2,3/2;1,0]", 2) == BoxLiteral(BoxIdeal.of([2, "3/2"], [1, 0]))

    def test_irreducible_and_pure_power(self):
        assert parse_expr("J[inf, 2 ; 0, 1]", 2) == IrrLiteral(IrreducibleIdeal.of(["inf", 2], [0, 1]))
        assert parse_expr("Jp[2,1/2,1]", 3) == PurePowerLiteral(PurePowerIdeal.of(3, 2, "1/2", 1))

    def test_generators(self):
        assert parse_expr("gen(X1^1*X2^1)", 2) == GensLiteral(FiniteGeneratorSet.of(Monomial.of(1, 1)))
        expr = parse_expr("gen(1, X2^3/2, X1*X1)", 2)
        assert expr.gens.gens == (Monomial.of(0, 0), Monomial.of(0, "3/2"), Monomial.of(2, 0))

    def test_sum_and_cap(self):
        expr = parse_expr("I[1;0] + cap(J[2;1], Jp[1,3,0]+I[0;0])", 1)
        assert isinstance(expr, SumExpr)
        assert isinstance(expr.terms[1], CapExpr)
        assert len(expr.terms[1].terms) == 2

    def test_intersection_of_pure_powers_recomposes_to_one_box(self):
        expr = parse_expr(EXAMPLE_INTERSECTION, 2)
        assert recompose(expr.to_decomposition()) == AfgIdeal.of(BoxIdeal.of([2, "3/2"], [1, 0]))
        assert expr.elaborate() == AfgIdeal.of(BoxIdeal.of([2, "3/2"], [1, 0]))

    def test_sum_of_pure_powers_decomposes_to_one_irreducible(self):
        expr = parse_expr("Jp[1,9/8,1]+Jp[2,11/2,0]+Jp[1,14/3,0]+Jp[2,3,1]", 2)
        assert expr.to_decomposition().components == (IrreducibleIdeal.of(["9/8", 3], [1, 1]),)

    def test_unit_component_is_kept_with_a_warning(self, caplog):
        with caplog.at_level(logging.WARNING, logger="cli.expr"):
            decomposition = parse_expr("cap(J[0,1;0,1],Jp[1,0,0],J[2,inf;0,0])", 2).to_decomposition()
        assert len(decomposition) == 3
        warnings = [r for r in caplog.records if r.levelno == logging.WARNING]
        assert len(warnings) == 2
        assert all("unit ideal" in r.getMessage() for r in warnings)

    def test_proper_components_do_not_warn(self, caplog):
        with caplog.at_level(logging.WARNING, logger="cli.expr"):
            parse_expr(EXAMPLE_INTERSECTION, 2).to_decomposition()
        assert not caplog.records

    def test_monomial(self):
        assert parse_monomial("X1^3/2*X2", 2) == Monomial.of("3/2", 1)
        assert parse_monomial(" 1 ", 3) == Monomial.one(3)


class TestDiagnostics:
    @pytest.mark.parametrize(
        "text, offset, message",
        [
            ("I[-1;0]", 2, "negative"),
            ("I[1/0;0]", 2, "zero denominator"),
            ("I[1;2]", 4, "flags must be 0 or 1"),
            ("Q[1;0]", 0, "unknown ideal constructor"),
            ("", 0, "expected an ideal"),
            ("I[1;0] I[1;0]", 7, "unexpected"),
            ("I[1;0]+", 7, "expected an ideal"),
            ("cap(I[1;0]", 10, "expected ')'"),
            ("gen(X1^)", 7, "expected a number"),
            ("I[1.5;0]", 3, "expected ';'"),
        ],
    )
    def test_syntax_errors(self, text, offset, message):
        with pytest.raises(ExprSyntaxError) as info:
            parse_expr(text, 1)
        assert info.value.offset == offset
        assert message in info.value.message

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("I[1;0]", 0),
            ("I[1,2;0]", 0),
            ("Jp[3,1,0]", 3),
            ("gen(X1*X9)", 8),
            ("I[1,1;0,0]+J[1;0]", 11),
        ],
    )
    def test_dimension_errors(self, text, offset):
        with pytest.raises(ExprDimensionError) as info:
            parse_expr(text, 2)
        assert info.value.offset == offset

    def test_offsets_count_bytes(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse_expr("I[1;0]+é", 1)
        assert info.value.offset == 7
        assert info.value.caret().splitlines()[1] == " " * 7 + "^"

    def test_deep_nesting_is_reported(self):
        with pytest.raises(ExprSyntaxError, match="nested too deeply"):
            parse_expr("cap(" * 5000 + "I[1;0]" + ")" * 5000, 1)

    def test_nesting_limit_points_at_the_first_cap_too_many(self):
        depth = MAX_NESTING + 1
        with pytest.raises(ExprSyntaxError) as info:
            parse_expr("cap(" * depth + "I[1;0]" + ")" * depth, 1)
        assert info.value.offset == 4 * MAX_NESTING
        expr = parse_expr("cap(" * MAX_NESTING + "I[1;0]" + ")" * MAX_NESTING, 1)
        assert expr.elaborate() == AfgIdeal.of(BoxIdeal.of([1], [0]))

    @pytest.mark.parametrize("text", ["I[1;00]", "I[1;01]", "I[1;001]", "Jp[1,1,10]", "I[1;1/1]"])
    def test_flags_are_single_characters(self, text):
        with pytest.raises(ExprSyntaxError, match="flags must be 0 or 1"):
            parse_expr(text, 1)

    def test_missing_flag(self):
        with pytest.raises(ExprSyntaxError, match="expected a flag") as info:
            parse_expr("I[1;]", 1)
        assert info.value.offset == 4

    def test_monomial_trailing_input(self):
        with pytest.raises(ExprSyntaxError):
            parse_monomial("X1 X2", 2)


class TestRoundTrip:
    @settings(max_examples=200)
    @given(data=st.data(), dim=st.integers(min_value=1, max_value=4))
    def test_sums(self, data, dim):
        ideal = data.draw(afg_ideals(dim))
        text = print_canonical(ideal)
        again = parse_expr(text, dim).elaborate()
        assert equal(again, ideal)
        assert print_canonical(again) == text

    @settings(max_examples=100)
    @given(data=st.data(), dim=st.integers(min_value=1, max_value=3))
    def test_intersections(self, data, dim):
        count = data.draw(st.integers(min_value=0, max_value=3))
        decomposition = Decomposition(dim, tuple(data.draw(irreducibles(dim)) for _ in range(count)))
        text = print_canonical(decomposition)
        again = parse_expr(text, dim).to_decomposition()
        assert equal(recompose(again), recompose(decomposition))
        assert print_canonical(again) == text


def mutate(text: str, rng: random.Random) -> str:
    alphabet = "IJpcagen()[];,+*^/X0123456789inf -é"
    chars = list(text)
    for _ in range(rng.randint(1, 4)):
        position = rng.randint(0, len(chars))
        action = rng.random()
        if action < 0.4 and chars:
            del chars[min(position, len(chars) - 1)]
        elif action < 0.8:
            chars.insert(position, rng.choice(alphabet))
        elif chars:
            chars[min(position, len(chars) - 1)] = rng.choice(alphabet)
    return "".join(chars)


def test_fuzzed_inputs_never_crash():
    seeds = [
        "I[2,3/2;1,0]",
        EXAMPLE_INTERSECTION,
        "gen(X1^1*X2^1, X2^5/3)+J[inf,2;0,1]",
        "cap(I[1,1;0,0]+Jp[2,4,1], J[0,3;1,0])",
    ]
    rng = random.Random(20240611)
    for count in range(10_000):
        text = mutate(seeds[count % len(seeds)], rng)
        try:
            parse_expr(text, 2)
        except ExprError as e:
            assert 0 <= e.offset <= len(text.encode("utf-8"))
