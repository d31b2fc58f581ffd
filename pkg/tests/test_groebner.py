import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus_records
from oracles import graded_quotient_dimension, truncated_quotient_dimension
from qhspectrum.errors import LengthMismatch, NonZeroDimensional, VariableMismatch, ZeroIdeal
from qhspectrum.groebner import (GroebnerBasis, MonomialOrder, buchberger, compare,
                                 is_groebner_basis, is_reduced, leading_monomial, normal_form,
                                 staircase)
from qhspectrum.parser import parse_polynomial
from qhspectrum.pipeline import resolve_weights
from qhspectrum.singularity import jacobian_ideal


def P(text, vs):
    return parse_polynomial(text, vs)


def gb(texts, vs, weights=None):
    order = MonomialOrder(weights or (1,) * len(vs))
    return buchberger([P(t, vs) for t in texts], order)


class TestCompare:
    def test_tie_break_y_below_x(self):
        assert compare(MonomialOrder((1, 1)), (0, 1), (1, 0)) == -1

    def test_weighted_tie(self):
        order = MonomialOrder((2, 3))
        assert order.degree((3, 0)) == order.degree((0, 2)) == 6
        # tie broken by total degree: x^3 has total degree 3 > 2
        assert compare(order, (3, 0), (0, 2)) == 1

    def test_degree_dominates(self):
        assert compare(MonomialOrder((1, 1)), (2, 0), (1, 0)) == 1
        assert compare(MonomialOrder((1, 1)), (1, 1), (1, 1)) == 0

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            compare(MonomialOrder((1, 1)), (1,), (1, 0))

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(1, 5), min_size=3, max_size=3),
           *[st.tuples(*[st.integers(0, 4)] * 3)] * 3)
    def test_total_multiplicative_order(self, w, a, b, m):
        order = MonomialOrder(tuple(w))
        c = compare(order, a, b)
        assert c == -compare(order, b, a)
        assert (c == 0) == (a == b)
        shift = lambda e: tuple(x + y for x, y in zip(e, m))
        assert compare(order, shift(a), shift(b)) == c
        assert compare(order, (0, 0, 0), a) <= 0


class TestNormalForm:
    def test_examples(self):
        assert normal_form(P("x^2", ["x"]), gb(["x^2"], ["x"])).is_zero()
        assert normal_form(P("x^3 + x", ["x"]), gb(["x^2 - 1"], ["x"])) == P("2*x", ["x"])
        G = gb(["x^2", "y^2"], ["x", "y"])
        assert normal_form(P("x*y", ["x", "y"]), G) == P("x*y", ["x", "y"])

    def test_variable_mismatch(self):
        with pytest.raises(VariableMismatch):
            normal_form(P("x", ["x", "z"]), gb(["x^2", "y^2"], ["x", "y"]))


class TestBuchberger:
    def test_monomial_jacobian(self):
        G = gb(["3*x^2", "3*y^2", "3*z^2"], ["x", "y", "z"])
        assert set(map(str, G)) == {"x^2", "y^2", "z^2"}

    def test_two_conics(self):
        G = gb(["x^2 - y", "y^2 - x"], ["x", "y"])
        assert is_groebner_basis(G) and is_reduced(G)
        assert set(staircase(G)) == {(0, 0), (1, 0), (0, 1), (1, 1)}
        assert truncated_quotient_dimension(list(G), 2, 4) == 4

    def test_unit_ideal(self):
        G = gb(["1"], ["x", "y"])
        assert [str(g) for g in G] == ["1"]
        assert staircase(G).dimension == 0

    def test_zero_ideal(self):
        with pytest.raises(ZeroIdeal):
            gb(["0", "x - x"], ["x", "y"])

    def test_unit_from_combination(self):
        G = gb(["x*y - 1", "x"], ["x", "y"])
        assert [str(g) for g in G] == ["1"]

    def test_deterministic(self):
        texts = ["3*x^2 + y^4", "4*x*y^3 + 6*y^5"]
        a = gb(texts, ["x", "y"], (2, 1))
        b = gb(texts, ["x", "y"], (2, 1))
        assert [str(g) for g in a] == [str(g) for g in b]

    def test_input_order_irrelevant_for_reduced_basis(self):
        texts = ["x^2 - y", "y^2 - x", "x*y - 1"]
        results = {tuple(str(g) for g in gb(list(p), ["x", "y"]))
                   for p in itertools.permutations(texts)}
        assert len(results) == 1


class TestStaircase:
    def test_cube(self):
        S = staircase(gb(["x^2", "y^2", "z^2"], ["x", "y", "z"]))
        assert set(S) == set(itertools.product((0, 1), repeat=3))
        assert S.dimension == 8

    def test_non_zero_dimensional(self):
        with pytest.raises(NonZeroDimensional) as info:
            staircase(gb(["x^2"], ["x", "y"]))
        assert info.value.missing == (1,) and info.value.names == ("y",)

    def test_closed_under_division(self):
        S = set(staircase(gb(["3*x^2 + y^4", "4*x*y^3 + 6*y^5"], ["x", "y"], (2, 1))))
        for m in S:
            for d in itertools.product(*(range(e + 1) for e in m)):
                assert d in S


def corpus_jacobians():
    out = []
    for rec in corpus_records():
        f = P(rec["poly"], rec["vars"])
        ws, _ = resolve_weights(f)
        out.append(pytest.param(f, ws, id=rec["name"]))
    return out


@pytest.mark.parametrize("f, ws", corpus_jacobians())
def test_corpus_groebner_properties(f, ws):
    J = jacobian_ideal(f)
    G = buchberger(J, ws.order())
    assert is_groebner_basis(G)
    assert is_reduced(G)
    # generators of a graded ideal stay weighted-homogeneous
    for g in G:
        assert len({ws.degree_of(e) for e in g.terms}) == 1
    S = staircase(G)
    if S.dimension <= 12:
        assert graded_quotient_dimension(J, ws.a) == S.dimension
    # membership soundness: random combinations of the generators reduce to 0
    rng = random.Random(hash(str(f)) & 0xFFFF)
    for _ in range(3):
        h = sum((P(str(rng.randint(-5, 5)), f.variables)
                 * P("*".join(f"{v}^{rng.randint(0, 2)}" for v in f.variables), f.variables)
                 * g for g in J), P("0", f.variables))
        assert normal_form(h, G).is_zero()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                                st.integers(-4, 4), min_size=1, max_size=3),
                min_size=1, max_size=3),
       st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-4, 4),
                       max_size=4))
def test_random_ideals(gens, f_terms):
    from qhspectrum.poly import Polynomial
    vs = ["x", "y"]
    polys = [Polynomial(t, vs) for t in gens]
    if all(p.is_zero() for p in polys):
        return
    G = buchberger(polys, MonomialOrder((1, 1)))
    assert is_groebner_basis(G) and is_reduced(G)
    f = Polynomial(f_terms, vs)
    r = normal_form(f, G)
    assert normal_form(r, G) == r
    lts = G.leading_terms()
    for m in r.terms:
        assert not any(all(a <= b for a, b in zip(lt, m)) for lt in lts)
    for p in polys:
        assert normal_form(p, G).is_zero()
