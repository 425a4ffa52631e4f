from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from sramorita.errors import PreconditionError
from sramorita.exact import gauss
from sramorita.gwa import (
    GwaGroupElement,
    apply_group_element,
    cycle_quiver,
    gwa_decide,
    gwa_generator_in_t,
    has_distinct_roots,
    lambda_from_roots,
    normalize_roots,
    parse_group_element,
    rho_permutation,
    roots_from_lambda,
    tau_permutation,
)
from sramorita.weyl import dual_reflection_r, permute, same_orbit

from conftest import gaussians, rationals

half, quarter = F(1, 2), F(1, 4)


def test_dictionary_examples():
    assert lambda_from_roots((half, F(3, 4), 1)) == (half, quarter, quarter)
    assert lambda_from_roots((0, 1)) == (0, 1)
    assert roots_from_lambda((half, quarter, quarter)) == (half, F(3, 4), 1)
    assert roots_from_lambda((1, 0, 0)) == (1, 1, 1)
    assert roots_from_lambda((0, 0, 0, 1)) == (0, 0, 0, 1)


def test_dictionary_preconditions():
    with pytest.raises(PreconditionError):
        lambda_from_roots((0, 2))
    with pytest.raises(PreconditionError):
        roots_from_lambda((1, 1, 0))


def test_generator_examples():
    a, b = F(2, 7), F(-3, 5)
    assert gwa_generator_in_t("r1", (a, b, 1)) == (b, a, 1)
    assert gwa_generator_in_t("r2", (a, b, 1)) == (a + 1 - b, 2 - b, 1)
    assert gwa_generator_in_t("tau", (a, b, 1)) == (1 - b, 1 - a, 1)


def test_generator_errors():
    with pytest.raises(ValueError):
        gwa_generator_in_t("q", (0, 0, 1))
    with pytest.raises(IndexError):
        gwa_generator_in_t("r5", (0, 0, 1))


def _conjugated(kind, t):
    lam = lambda_from_roots(t)
    m = len(t)
    if kind == "rho":
        out = permute(rho_permutation(m), lam)
    elif kind == "tau":
        out = permute(tau_permutation(m), lam)
    else:
        out = dual_reflection_r(cycle_quiver(m), int(kind[1:]), lam)
    return roots_from_lambda(out)


@settings(max_examples=200)
@given(st.integers(3, 8), st.data())
def test_generator_formulas_match_dictionary(m, data):
    t = tuple(data.draw(st.lists(rationals, min_size=m - 1, max_size=m - 1))) + (F(1),)
    for kind in ["rho", "tau"] + [f"r{i}" for i in range(m)]:
        assert gwa_generator_in_t(kind, t) == _conjugated(kind, t), kind


def test_group_element_examples():
    t = (0, half, 1)
    assert apply_group_element(GwaGroupElement.identity(3), t) == t
    g = GwaGroupElement(-1, (0, 1, 2), (0, 1, 2), half)
    assert apply_group_element(g, t) == (half, 1, F(3, 2))


def test_group_element_text_round_trip():
    g = GwaGroupElement(-1, (2, 1, 0), (0, 1, 2), half)
    assert str(g) == "eps=-1 sigma=(0 2) d=[0,1,2] c=1/2"
    assert parse_group_element(str(g), 3) == g
    e = GwaGroupElement.identity(4)
    assert str(e) == "eps=1 sigma=() d=[0,0,0,0] c=0"
    assert parse_group_element(str(e), 4) == e
    g = GwaGroupElement(1, (1, 0), (3, -2), gauss(0, -1))
    assert parse_group_element(str(g), 2) == g


def test_normalize_examples():
    t, g = normalize_roots((1, 0, half))
    assert t == (0, half, 1) and g.c == 0
    assert normalize_roots((F(3, 2), half, F(5, 2)))[0] == (-1, 0, 1)
    t, g = normalize_roots((gauss(0, 1), 0))
    assert g.c == gauss(1, -1)
    assert t == (gauss(1, -1), 1)


@given(st.lists(st.one_of(rationals, gaussians), min_size=2, max_size=6))
def test_normalize_is_a_group_image(t):
    out, g = normalize_roots(t)
    assert out[-1] == 1
    assert apply_group_element(g, t) == out
    assert gwa_decide(t, out).equivalent


def test_decide_examples():
    t = (0, half, 1)
    v = gwa_decide(t, (half, 1, F(5, 2)))
    assert v.equivalent
    assert apply_group_element(v.witness, t) == (half, 1, F(5, 2))
    assert not gwa_decide(t, (0, F(1, 3), 1)).equivalent
    v = gwa_decide(t, t)
    assert v.equivalent and v.witness == GwaGroupElement.identity(3)
    v = gwa_decide(t, (0, 1))
    assert not v.equivalent and "number" in v.reason


def test_distinct_flag():
    assert has_distinct_roots((0, half, 1))
    assert not has_distinct_roots((0, 1, 0))
    assert gwa_decide((0, 0, 1), (0, 1, 1)).distinct == (False, False)


@st.composite
def group_elements(draw, m, scalars=rationals):
    eps = draw(st.sampled_from((1, -1)))
    sigma = tuple(draw(st.permutations(range(m))))
    d = tuple(draw(st.lists(st.integers(-4, 4), min_size=m, max_size=m)))
    return GwaGroupElement(eps, sigma, d, draw(scalars))


@settings(max_examples=200)
@given(st.integers(2, 8), st.data())
def test_decide_is_complete(m, data):
    scalars = st.one_of(rationals, gaussians)
    t = tuple(data.draw(st.lists(scalars, min_size=m, max_size=m)))
    g = data.draw(group_elements(m, scalars))
    t2 = apply_group_element(g, t)
    v = gwa_decide(t, t2)
    assert v.equivalent
    assert apply_group_element(v.witness, t) == t2


@given(st.integers(2, 6), st.data())
def test_decide_is_symmetric(m, data):
    small = st.fractions(min_value=-2, max_value=2, max_denominator=4)
    t = data.draw(st.lists(small, min_size=m, max_size=m))
    t2 = data.draw(st.lists(small, min_size=m, max_size=m))
    assert gwa_decide(t, t2).equivalent == gwa_decide(t2, t).equivalent


@settings(max_examples=200)
@given(st.integers(2, 6), st.booleans(), st.data())
def test_decide_agrees_with_orbit_decision(m, related, data):
    small = st.fractions(min_value=-2, max_value=2, max_denominator=4)
    t = tuple(data.draw(st.lists(small, min_size=m - 1, max_size=m - 1))) + (F(1),)
    if related:
        g = data.draw(group_elements(m, small))
        t2 = normalize_roots(apply_group_element(g, t))[0]
    else:
        t2 = tuple(data.draw(st.lists(small, min_size=m - 1, max_size=m - 1))) + (F(1),)
    Q = cycle_quiver(m)
    by_roots = gwa_decide(t, t2).equivalent
    by_orbit = same_orbit(Q, lambda_from_roots(t), lambda_from_roots(t2)).equivalent
    assert by_roots == by_orbit
    if related:
        assert by_roots
