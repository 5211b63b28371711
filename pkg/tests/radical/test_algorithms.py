"""
Tests for Jacobson radicals of finite-dimensional algebras.
"""

import pytest

from exactfield.algebras import FiniteAlgebra
from exactfield.fields import Field
from radical.algorithms import _integer_power_trace, algebra_radical, nilpotency_index, power_chain
from radical.models import AlgebraIdeal
from gradalg.exceptions import CharacteristicTooSmall, NotUnital
from tests.exactfield.factories import (
    GroupAlgebraFactory,
    LowerTriangularFactory,
    TruncatedPolynomialFactory,
    gaussian_rationals,
)


class TestAlgebraRadical:
    """Test cases for algebra_radical."""

    def test_truncated_polynomial(self):
        """Test that J(K[x]/(x^3)) = (x) with nilpotency index 3."""
        radical = algebra_radical(TruncatedPolynomialFactory())
        assert radical.dim == 2
        assert radical.certificate.nilpotency_index == 3
        assert radical.certificate.quotient_dim == 1
        assert radical.certificate.method == "trace-form"

    def test_lower_triangular(self):
        """Test that the radical of triangular matrices is the off-diagonal corner."""
        algebra = LowerTriangularFactory()
        radical = algebra_radical(algebra)
        assert radical.dim == 1
        assert radical.contains(algebra.basis_vector(1))
        assert radical.certificate.nilpotency_index == 2

    def test_semisimple_group_algebra(self):
        """Test that Q[C_3] has zero radical."""
        radical = algebra_radical(GroupAlgebraFactory(n=3))
        assert radical.dim == 0
        assert radical.certificate.nilpotency_index == 1

    def test_division_algebra(self):
        """Test that Q(i) has zero radical."""
        assert algebra_radical(gaussian_rationals()).dim == 0

    def test_small_characteristic_iterates(self):
        """Test that F_2[C_2] needs the lifted trace forms."""
        algebra = GroupAlgebraFactory(field=Field.prime_field(2))
        radical = algebra_radical(algebra, policy="iterate")
        assert radical.dim == 1
        assert radical.contains((1, 1))
        assert radical.certificate.method == "iterated-trace-form"
        assert radical.certificate.steps == (2, 1)

    def test_small_characteristic_refused(self, settings):
        """Test that the refuse policy stops when p does not exceed the dimension."""
        settings.GRADALG_SMALL_CHARACTERISTIC = "refuse"
        with pytest.raises(CharacteristicTooSmall) as exc:
            algebra_radical(GroupAlgebraFactory(field=Field.prime_field(2)))
        assert exc.value.params == {'prime': 2, 'dim': 2}

    def test_large_characteristic_uses_trace_form(self, settings):
        """Test that p > dim needs no refinement even under refuse."""
        settings.GRADALG_SMALL_CHARACTERISTIC = "refuse"
        radical = algebra_radical(TruncatedPolynomialFactory(field=Field.prime_field(5)))
        assert radical.dim == 2
        assert radical.certificate.method == "trace-form"

    def test_truncated_over_f2(self):
        """Test that K[x]/(x^4) over F_2 still has the radical (x)."""
        radical = algebra_radical(TruncatedPolynomialFactory(field=Field.prime_field(2), n=4))
        assert radical.dim == 3
        assert radical.certificate.nilpotency_index == 4

    def test_cached_per_policy(self):
        """Test that the radical is computed once per algebra and policy."""
        algebra = TruncatedPolynomialFactory()
        assert algebra_radical(algebra) is algebra_radical(algebra)

    def test_not_unital(self):
        """Test that radicals need a unital algebra."""
        with pytest.raises(NotUnital):
            algebra_radical(FiniteAlgebra.from_products(Field.rationals(), 1, {}))


class TestPowerChain:
    """Test cases for power_chain and nilpotency_index."""

    def test_chain_dimensions(self):
        """Test J ⊃ J² ⊃ J³ = 0 in K[x]/(x^3)."""
        algebra = TruncatedPolynomialFactory()
        radical = algebra_radical(algebra)
        assert [s.dim for s in power_chain(algebra, radical.space)] == [2, 1, 0]

    def test_non_nilpotent_ideal(self):
        """Test that the whole algebra is not nilpotent."""
        algebra = TruncatedPolynomialFactory()
        whole = AlgebraIdeal(algebra, algebra.two_sided_ideal([algebra.one]))
        assert nilpotency_index(whole) is None

    def test_as_dict(self):
        """Test the serialized radical."""
        payload = algebra_radical(LowerTriangularFactory()).as_dict()
        assert payload['dim'] == 1
        assert payload['ambient_dim'] == 3
        assert payload['certificate']['nilpotency_index'] == 2


class TestIntegerPowerTrace:
    """Test cases for traces of integer matrix powers."""

    def test_unipotent(self):
        """Test that a unipotent 2x2 block keeps trace 2."""
        assert _integer_power_trace([[1, 1], [0, 1]], 8) == 2

    def test_powers_of_two_cycle(self):
        """Test Tr([[0,1],[1,0]]^k) = 2 for even k and 0 for odd k."""
        swap = [[0, 1], [1, 0]]
        assert _integer_power_trace(swap, 4) == 2
        assert _integer_power_trace(swap, 3) == 0

    def test_integer_growth(self):
        """Test that traces are computed over ZZ, not reduced mod p."""
        assert _integer_power_trace([[2]], 9) == 512
