"""
Tests for the window scene and its λ parametrization.
"""

import pytest

from counterexample.scene import (
    build_scene,
    endomorphism_from_lambda,
    equivariant_parameter_count,
    lambda_from_endomorphism,
    restrict_lambda,
)
from exactfield.fields import Field
from exactfield.matrices import Matrix
from graded.models import GradedHom
from graded.validators import validate_hom
from gradalg.exceptions import NotEquivariant, StructureError, WindowError

F2 = Field.prime_field(2)
F3 = Field.prime_field(3)


def identity_lambda(scene):
    return {(k, k): 1 for k in scene.degrees}


class TestBuildScene:
    """Test cases for build_scene."""

    def test_dimensions(self):
        """Test the algebra, module and free module of the radius 1 window."""
        scene = build_scene(1, F2)
        assert scene.algebra.dims == {"0": 1, "1": 1, "2": 1}
        assert scene.module.dims == {"-1": 1, "0": 1, "1": 1}
        assert scene.free.dims == {"-1": 1, "0": 2, "1": 3, "2": 2}

    def test_counit_is_surjective(self):
        """Test that f: F -> X is onto and equivariant."""
        scene = build_scene(2, F3)
        assert scene.counit.is_surjective()
        assert validate_hom(scene.counit).is_valid

    def test_parameter_count(self):
        """Test the number of λ coefficients."""
        assert build_scene(1, F2).parameter_count() == 6
        assert build_scene(2, F2).parameter_count() == 15
        assert build_scene(3, F2).parameter_count() == 28

    def test_radius_too_small(self):
        """Test that d = 0 is refused."""
        with pytest.raises(WindowError) as exc:
            build_scene(0, F2)
        assert exc.value.code == "radius_too_small"


class TestLambdaParametrization:
    """Test cases for the λ coordinates of equivariant endomorphisms."""

    def test_identity(self):
        """Test that λ = δ gives the identity."""
        scene = build_scene(1, F2)
        e = endomorphism_from_lambda(scene, identity_lambda(scene))
        assert e.as_vector() == scene.free.identity().as_vector()

    def test_endomorphisms_are_equivariant(self):
        """Test that every λ gives a module map."""
        scene = build_scene(1, F3)
        e = endomorphism_from_lambda(scene, {(1, 0): 2, (0, -1): 1, (1, -1): 1})
        assert validate_hom(e).is_valid

    def test_read_back(self):
        """Test that λ is recovered from the generator columns."""
        scene = build_scene(1, F3)
        lam = {(1, 0): 2, (0, -1): 1, (1, 1): 1}
        recovered = lambda_from_endomorphism(scene, endomorphism_from_lambda(scene, lam))
        assert {key: value for key, value in recovered.items() if value != 0} == lam

    def test_not_equivariant(self):
        """Test that a map supported in one degree is refused."""
        scene = build_scene(1, F2)
        e = GradedHom(scene.free, scene.free, {"0": Matrix.identity(F2, 2)})
        with pytest.raises(NotEquivariant):
            lambda_from_endomorphism(scene, e)

    def test_parameter_count_matches_hom_space(self):
        """Test that dim Hom(F, F) equals the number of λ coefficients."""
        assert equivariant_parameter_count(build_scene(1, F2)) == 6

    @pytest.mark.slow
    def test_parameter_count_matches_hom_space_larger_window(self):
        """Test dim Hom(F, F) on the radius 2 window."""
        assert equivariant_parameter_count(build_scene(2, F2)) == 15

    def test_parameter_count_mismatch(self, mocker):
        """Test that a Hom space of the wrong size is an error."""
        mocker.patch('counterexample.scene.hom_space', return_value=[None] * 5)
        with pytest.raises(StructureError) as exc:
            equivariant_parameter_count(build_scene(1, F2))
        assert exc.value.code == "parameter_count"
        assert exc.value.params == {'dim': 5, 'expected': 6}


class TestRestrictLambda:
    """Test cases for restrict_lambda."""

    def test_identity_restricts_to_identity(self):
        """Test that the identity on radius 2 restricts to the identity on radius 1."""
        scene, smaller = build_scene(2, F3), build_scene(1, F3)
        restricted = restrict_lambda(scene, smaller, identity_lambda(scene))
        assert restricted == {(k, l): int(k == l) for k in smaller.degrees for l in smaller.row(k)}

    def test_shift_by_one_degree(self):
        """Test that λ'_{k,l} reads λ_{k-1,l-1}."""
        scene, smaller = build_scene(2, F2), build_scene(1, F2)
        lam = {**identity_lambda(scene), (0, -2): 1, (0, 0): 0, (2, -2): 1}
        restricted = restrict_lambda(scene, smaller, lam)
        assert restricted[(1, -1)] == 1
        assert restricted[(1, 1)] == 0
        assert set(restricted) == {(k, l) for k in smaller.degrees for l in smaller.row(k)}

    @pytest.mark.parametrize("d,smaller_d,field", [(2, 2, F2), (2, 1, F3), (3, 1, F2)])
    def test_windows_must_be_adjacent(self, d, smaller_d, field):
        """Test that only radius d - 1 over the same field is accepted."""
        with pytest.raises(WindowError) as exc:
            restrict_lambda(build_scene(d, F2), build_scene(smaller_d, field), {})
        assert exc.value.code == "not_adjacent"
