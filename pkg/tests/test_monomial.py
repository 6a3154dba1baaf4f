import pytest
from hypothesis import given, strategies as st

from core.errors import DimensionMismatchError, IdealError, NotInIdealError
from core.monomial import Monomial, divides, lcm, multiply
from ideal_strategies import monomials


class TestMonomial:
    def test_multiply_adds_exponents(self):
        f = Monomial.of(1, "1/2")
        g = Monomial.of("1/3", 2)
        assert multiply(f, g) == Monomial.of("4/3", "5/2")

    def test_power(self):
        assert Monomial.of(2, "3/4") ** "2/3" == Monomial.of("4/3", "1/2")
        assert Monomial.of(2, 1) ** 0 == Monomial.one(2)

    def test_divides_and_quotient(self):
        f = Monomial.of(1, "1/2")
        g = Monomial.of(2, "1/2")
        assert divides(f, g)
        assert not divides(g, f)
        assert g.quotient(f) == Monomial.of(1, 0)
        with pytest.raises(NotInIdealError):
            f.quotient(g)

    def test_lcm(self):
        assert lcm([Monomial.of(2, "3/2"), Monomial.of("5/3", 1)]) == Monomial.of(2, "3/2")
        with pytest.raises(IdealError):
            lcm([])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            Monomial.of(1) * Monomial.of(1, 1)
        with pytest.raises(DimensionMismatchError):
            Monomial.pure_power(2, 3, 1)

    def test_validation(self):
        with pytest.raises(ValueError):
            Monomial(())
        with pytest.raises(TypeError):
            Monomial((1,))
        with pytest.raises(ValueError):
            Monomial.of(-1)

    def test_text(self):
        assert str(Monomial.of("3/2", 1)) == "X1^3/2*X2"
        assert str(Monomial.one(3)) == "1"
        assert str(Monomial.pure_power(3, 2, 5)) == "X2^5"

    def test_json(self):
        m = Monomial.of("3/2", 0)
        assert m.to_json_data() == ["3/2", "0"]
        assert Monomial.from_json_data(["3/2", "0"]) == m
        with pytest.raises(IdealError):
            Monomial.from_json_data(["-1"])

    @given(data=st.data(), dim=st.integers(min_value=1, max_value=4))
    def test_quotient_inverts_multiplication(self, data, dim):
        f = data.draw(monomials(dim))
        h = data.draw(monomials(dim))
        assert (f * h).quotient(f) == h
        assert f.divides(f * h)

    @given(data=st.data(), dim=st.integers(min_value=1, max_value=4))
    def test_lcm_is_least_common_multiple(self, data, dim):
        family = [data.draw(monomials(dim)) for _ in range(3)]
        least = lcm(family)
        assert all(f.divides(least) for f in family)
        for axis in range(dim):
            # lowering any coordinate loses some multiple
            assert least.exps[axis] == max(f.exps[axis] for f in family)
