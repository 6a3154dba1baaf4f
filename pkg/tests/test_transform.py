"""Tests for decompose/recompose and the distribution laws behind them."""
from hypothesis import event, given, settings, strategies as st

from cli.printer import print_canonical
from core.ideal import AfgIdeal, BoxIdeal, Decomposition, IrreducibleIdeal, PurePowerIdeal
from decomposition.containment import equal
from decomposition.oracle import agree, default_points, grid_oracle
from decomposition.redundancy import remove_redundant
from decomposition.transform import (
    afg_of,
    decompose,
    distribute_intersection_of_sums,
    distribute_sum_of_intersections,
    intersect_afg,
    prune_dominated_boxes,
    prune_dominated_components,
    recompose,
    sum_afg,
)
from ideal_strategies import afg_ideals, boxes, irreducibles, sized_afg


def pure(dim, var, alpha, eps):
    return PurePowerIdeal.of(dim, var, alpha, eps).as_irreducible()


class TestRecompose:
    def test_intersection_of_pure_powers_is_one_box(self):
        decomposition = Decomposition.of(
            pure(2, 1, 2, 1), pure(2, 2, "3/2", 0), pure(2, 1, "5/3", 0), pure(2, 2, 1, 1),
        )
        assert recompose(decomposition) == AfgIdeal.of(BoxIdeal.of([2, "3/2"], [1, 0]))

    def test_two_principal_pure_powers(self):
        decomposition = Decomposition.of(pure(2, 1, 3, 0), pure(2, 2, "1/2", 0))
        assert recompose(decomposition) == AfgIdeal.of(BoxIdeal.of([3, "1/2"], [0, 0]))

    def test_empty_intersection_is_unit(self):
        assert recompose(Decomposition(3, ())) == AfgIdeal.unit(3)

    def test_oracle_agrees_on_example_grid(self):
        decomposition = Decomposition.of(
            pure(2, 1, 2, 1), pure(2, 2, "3/2", 0), pure(2, 1, "5/3", 0), pure(2, 2, 1, 1),
        )
        box = BoxIdeal.of([2, "3/2"], [1, 0])
        points = default_points(decomposition, box)
        assert grid_oracle(decomposition, points) == grid_oracle(box, points)


class TestDecompose:
    def test_principal_box(self):
        decomposition = decompose(AfgIdeal.of(BoxIdeal.of([2, 5], [0, 0])))
        assert decomposition.components == (
            IrreducibleIdeal.of([2, "inf"], [0, 0]),
            IrreducibleIdeal.of(["inf", 5], [0, 0]),
        )

    def test_open_box(self):
        decomposition = decompose(AfgIdeal.of(BoxIdeal.of([2, "3/2"], [1, 0])))
        assert decomposition.components == (
            IrreducibleIdeal.of([2, "inf"], [1, 0]),
            IrreducibleIdeal.of(["inf", "3/2"], [0, 0]),
        )

    def test_two_step_staircase(self):
        ideal = AfgIdeal.of(BoxIdeal.of(["1/3", "2/3"], [0, 0]), BoxIdeal.of(["2/3", "1/3"], [0, 0]))
        assert decompose(ideal).components == (
            IrreducibleIdeal.of(["1/3", "inf"], [0, 0]),
            IrreducibleIdeal.of(["2/3", "2/3"], [0, 0]),
            IrreducibleIdeal.of(["inf", "1/3"], [0, 0]),
        )

    def test_zero_and_unit(self):
        assert decompose(AfgIdeal.zero(2)).components == (IrreducibleIdeal.zero(2),)
        assert decompose(AfgIdeal(2, (BoxIdeal.zero(2),))).components == (IrreducibleIdeal.zero(2),)
        assert decompose(AfgIdeal.unit(2)).components == ()

    def test_vacuous_coordinates_give_no_component(self):
        decomposition = decompose(AfgIdeal.of(BoxIdeal.of([0, 4], [0, 1])))
        assert decomposition.components == (IrreducibleIdeal.of(["inf", 4], [0, 1]),)

    @settings(max_examples=200)
    @given(ideal=sized_afg())
    def test_round_trip(self, ideal):
        decomposition = decompose(ideal)
        rebuilt = recompose(decomposition)
        assert equal(rebuilt, ideal)
        points = default_points(ideal, decomposition)
        assert grid_oracle(decomposition, points) == grid_oracle(ideal, points)
        assert grid_oracle(rebuilt, points) == grid_oracle(ideal, points)

    @settings(max_examples=100)
    @given(data=st.data(), dim=st.integers(min_value=1, max_value=3))
    def test_dual_round_trip(self, data, dim):
        count = data.draw(st.integers(min_value=0, max_value=3))
        decomposition = Decomposition(dim, tuple(data.draw(irreducibles(dim)) for _ in range(count)))
        again = decompose(recompose(decomposition))
        assert agree(again, decomposition)

    @settings(max_examples=100)
    @given(ideal=sized_afg(max_dim=3))
    def test_irredundant_form_of_reordered_sum(self, ideal):
        # only reported through hypothesis statistics, never asserted
        forward = remove_redundant(decompose(ideal))
        backward = remove_redundant(decompose(AfgIdeal(ideal.dim, tuple(reversed(ideal.boxes)))))
        assert agree(forward, backward)
        same = print_canonical(forward) == print_canonical(backward)
        event("irredundant forms identical" if same else "irredundant forms differ")


class TestDistributionLaws:
    @given(data=st.data(), dim=st.integers(min_value=1, max_value=3))
    def test_intersection_of_sums(self, data, dim):
        families = [
            [data.draw(boxes(dim, allow_infinite=True)) for _ in range(data.draw(st.integers(1, 2)))]
            for _ in range(data.draw(st.integers(1, 3)))
        ]
        expanded = distribute_intersection_of_sums(families, dim)
        sums = [AfgIdeal(dim, tuple(family)) for family in families]
        for m in default_points(expanded, *sums):
            assert (m in expanded) == all(m in s for s in sums)

    @given(data=st.data(), dim=st.integers(min_value=1, max_value=3))
    def test_sum_of_intersections(self, data, dim):
        families = [
            [data.draw(irreducibles(dim)) for _ in range(data.draw(st.integers(1, 2)))]
            for _ in range(data.draw(st.integers(1, 3)))
        ]
        expanded = distribute_sum_of_intersections(families, dim)
        parts = [Decomposition(dim, tuple(family)) for family in families]
        for m in default_points(expanded, *parts):
            assert (m in expanded) == any(m in p for p in parts)


class TestPruning:
    def test_boxes(self):
        small = BoxIdeal.of([2, 2], [0, 0])
        large = BoxIdeal.of([1, 1], [0, 0])
        other = BoxIdeal.of([0, 3], [0, 0])
        assert prune_dominated_boxes([small, BoxIdeal.zero(2), large, other, large]) == [large, other]

    def test_components(self):
        small = IrreducibleIdeal.of([2, "inf"], [0, 0])
        large = IrreducibleIdeal.of([1, 3], [0, 0])
        assert prune_dominated_components([large, IrreducibleIdeal.unit(2), small, small]) == [small]

    @given(ideal=afg_ideals(2))
    def test_pruned_sum_keeps_members(self, ideal):
        pruned = AfgIdeal(2, tuple(prune_dominated_boxes(ideal.boxes)))
        assert agree(pruned, ideal)


class TestAfgOperations:
    @given(data=st.data(), dim=st.integers(min_value=1, max_value=3))
    def test_intersect_and_sum(self, data, dim):
        left = data.draw(afg_ideals(dim, 3))
        right = data.draw(afg_ideals(dim, 3))
        meet = intersect_afg(left, right)
        join = sum_afg(left, right)
        for m in default_points(left, right):
            assert (m in meet) == (m in left and m in right)
            assert (m in join) == (m in left or m in right)

    def test_single_irreducible_as_sum(self):
        ideal = afg_of(IrreducibleIdeal.of([2, "inf", 1], [1, 0, 0]))
        assert set(ideal.boxes) == {
            BoxIdeal.of([2, 0, 0], [1, 0, 0]),
            BoxIdeal.of([0, 0, 1], [0, 0, 0]),
        }
        assert afg_of(IrreducibleIdeal.zero(2)).boxes == ()
        assert afg_of(IrreducibleIdeal.unit(2)) == AfgIdeal.unit(2)
        assert recompose(Decomposition.of(IrreducibleIdeal.of([1], [0]))).boxes == (BoxIdeal.of([1], [0]),)
