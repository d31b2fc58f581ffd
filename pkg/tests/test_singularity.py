import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bp_polynomial
from qhspectrum.errors import (AmbiguousWeights, ConstantTerm, InputError,
                               NonIsolatedSingularity, NotQuasiHomogeneous)
from qhspectrum.parser import parse_polynomial
from qhspectrum.singularity import (WeightSystem, check_quasi_homogeneous, infer_weights,
                                    jacobian_ideal, milnor_data)

XYZ = ["x", "y", "z"]


def P(text, vs=XYZ):
    return parse_polynomial(text, vs)


class TestWeightSystem:
    def test_normalizes(self):
        ws = WeightSystem((10, 15, 15), 30)
        assert ws.a == (2, 3, 3) and ws.d == 6
        assert ws.w == (Fraction(1, 3), Fraction(1, 2), Fraction(1, 2))

    @pytest.mark.parametrize("a, d", [((0, 1), 3), ((1, 4), 3), ((1, 1), 0), ((), 3)])
    def test_rejects(self, a, d):
        with pytest.raises(InputError):
            WeightSystem(a, d)

    def test_milnor_orlik(self):
        assert WeightSystem((10, 6, 15), 30).milnor_orlik() == 8


class TestQuasiHomogeneous:
    def test_cubic(self):
        assert check_quasi_homogeneous(P("x^3+y^3+z^3"), WeightSystem((1, 1, 1), 3)) == 3

    def test_odp(self):
        f = P("x^2+y^2+z^2+w^2", XYZ + ["w"])
        assert check_quasi_homogeneous(f, WeightSystem((1, 1, 1, 1), 2)) == 2

    def test_offending_monomial(self):
        with pytest.raises(NotQuasiHomogeneous) as info:
            check_quasi_homogeneous(P("x^3+y^3+z^3+x*y"), WeightSystem((1, 1, 1), 3))
        assert info.value.monomial == "x*y" and info.value.degree == 2

    def test_constant_term(self):
        with pytest.raises(ConstantTerm):
            check_quasi_homogeneous(P("x^3+y^3+z^3+1"), WeightSystem((1, 1, 1), 3))


class TestInferWeights:
    def test_symmetric(self):
        assert infer_weights(P("x^3+y^3+z^3")) == WeightSystem((1, 1, 1), 3)

    def test_not_quasi_homogeneous_curve(self):
        # x^3 and y^7 force (7,3;21), under which x*y^5 has degree 22
        with pytest.raises(NotQuasiHomogeneous) as info:
            infer_weights(P("x^3 + x*y^5 + y^7", ["x", "y"]))
        assert info.value.monomial == "x*y^5" and info.value.degree == 22

    def test_j10(self):
        assert infer_weights(P("x^3 + x*y^4 + y^6", ["x", "y"])) == WeightSystem((2, 1), 6)

    def test_missing_variable(self):
        with pytest.raises(AmbiguousWeights):
            infer_weights(P("x^2+y^3"))

    def test_no_positive_solution(self):
        with pytest.raises(NotQuasiHomogeneous):
            infer_weights(P("x^2*y + x^2", ["x", "y"]))

    def test_names_mixed_monomial(self):
        with pytest.raises(NotQuasiHomogeneous) as info:
            infer_weights(P("x^3+y^3+z^3+x*y"))
        assert info.value.monomial == "x*y"

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(2, 9), min_size=1, max_size=4))
    def test_round_trip_brieskorn_pham(self, c):
        f = bp_polynomial(c)
        ws = infer_weights(f)
        assert check_quasi_homogeneous(f, ws) == ws.d


def test_jacobian_examples():
    assert jacobian_ideal(P("x^3+y^3+z^3")) == [P("3*x^2"), P("3*y^2"), P("3*z^2")]
    v4 = XYZ + ["w"]
    assert jacobian_ideal(P("x^2+y^2+z^2+w^2", v4)) == [P(f"2*{v}", v4) for v in v4]
    xy = ["x", "y"]
    assert jacobian_ideal(P("x^3 + x*y^5 + y^7", xy)) == [P("3*x^2 + y^5", xy),
                                                          P("5*x*y^4 + 7*y^6", xy)]


class TestMilnorData:
    def test_cone(self):
        md = milnor_data(P("x^3+y^3+z^3"), WeightSystem((1, 1, 1), 3))
        assert md.mu == 8
        assert set(md.basis) == set(itertools.product((0, 1), repeat=3))

    def test_odp(self):
        md = milnor_data(P("x^2+y^2+z^2+w^2", XYZ + ["w"]), WeightSystem((1, 1, 1, 1), 2))
        assert md.mu == 1 and list(md.basis) == [(0, 0, 0, 0)]

    def test_non_isolated(self):
        with pytest.raises(NonIsolatedSingularity) as info:
            milnor_data(P("x^2*y", ["x", "y"]), WeightSystem((1, 1), 3))
        assert info.value.names == ("y",)
        assert str(info.value) == "non-isolated: no pure power of y"

    def test_hesse_triangle_is_non_isolated(self):
        # x^3 + y^3 + z^3 - 3xyz splits into three lines
        with pytest.raises(NonIsolatedSingularity):
            milnor_data(P("x^3 + y^3 + z^3 - 3*x*y*z"), WeightSystem((1, 1, 1), 3))

    def test_smooth_point(self):
        md = milnor_data(P("x + y^2", ["x", "y"]), WeightSystem((2, 1), 2))
        assert md.mu == 0 and md.smooth
        assert [str(g) for g in md.groebner] == ["1"]

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(2, 6), min_size=1, max_size=4))
    def test_brieskorn_pham_closed_form(self, c):
        f = bp_polynomial(c)
        md = milnor_data(f, infer_weights(f))
        expected = set(itertools.product(*(range(ci - 1) for ci in c)))
        assert set(md.basis) == expected
        mu = 1
        for ci in c:
            mu *= ci - 1
        assert md.mu == mu == md.ws.milnor_orlik()
        assert (md.mu == 0) == ([str(g) for g in md.groebner] == ["1"])
