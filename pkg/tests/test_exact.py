from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from sramorita.errors import DimensionError, ScalarParseError
from sramorita.exact import (
    GaussianRational,
    format_scalar,
    format_vector,
    gauss,
    integer_solve,
    is_prime,
    parse_scalar,
    parse_vector,
    rank_mod_p,
)

from conftest import gaussians, rationals


@pytest.mark.parametrize("text, value", [
    ("3/6", F(1, 2)),
    ("-1/3", F(-1, 3)),
    ("7", F(7)),
    ("1/2+3/4i", GaussianRational(F(1, 2), F(3, 4))),
    ("3i", GaussianRational(0, 3)),
    ("i", GaussianRational(0, 1)),
    ("-i", GaussianRational(0, -1)),
    ("1-i", GaussianRational(1, -1)),
    ("0+0i", F(0)),
])
def test_parse_examples(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "abc", "1//2", "1/2/3", "++1", "1+2", "i/2", "1/0i"])
def test_parse_rejects(text):
    with pytest.raises(ScalarParseError):
        parse_scalar(text)


def test_real_gaussians_demote_to_fraction():
    assert type(parse_scalar("5+0i")) is F
    assert type(gauss(1, 2) - gauss(0, 2)) is F
    assert type(gauss(0, 1) * gauss(0, 1)) is F


@settings(max_examples=1000)
@given(st.one_of(rationals, gaussians))
def test_scalar_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(st.lists(st.one_of(rationals, gaussians), min_size=1, max_size=8))
def test_vector_round_trip(v):
    assert parse_vector(format_vector(v)) == tuple(v)


def test_vector_rejects_empty_entries():
    with pytest.raises(ScalarParseError):
        parse_vector("1,,2")


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0
    if a != 0:
        assert a * (1 / a) == 1
        assert (b / a) * a == b


@given(rationals)
def test_gaussian_hash_matches_fraction(x):
    g = GaussianRational(x, 0)
    assert g == x and hash(g) == hash(x)


def test_integer_solve_examples():
    basis = [(1, -1, 0), (0, 1, -1)]
    assert integer_solve(basis, (1, 0, -1)) == (1, 1)
    coeffs = integer_solve(basis, (6, 1, 0), modulus=7)
    assert coeffs == (-1, 0)
    assert integer_solve([(2, 0)], (1, 0)) is None


def test_integer_solve_length_mismatch():
    with pytest.raises(DimensionError):
        integer_solve([(1, 0)], (1, 0, 0))


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=3),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_integer_solve_is_sound(basis, coeffs):
    coeffs = coeffs[: len(basis)]
    target = [sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(3)]
    sol = integer_solve(basis, target)
    assert sol is not None
    assert [sum(c * b[k] for c, b in zip(sol, basis)) for k in range(3)] == target


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=3),
       st.lists(st.integers(0, 12), min_size=3, max_size=3))
def test_integer_solve_mod_p_is_sound(basis, target):
    p = 13
    sol = integer_solve(basis, target, modulus=p)
    if sol is None:
        return
    got = [sum(c * b[k] for c, b in zip(sol, basis)) for k in range(3)]
    assert all((g - t) % p == 0 for g, t in zip(got, target))
    assert all(-p // 2 <= c <= p // 2 for c in sol)


def _trial_division(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def test_is_prime_matches_trial_division():
    assert [n for n in range(3000) if is_prime(n)] == [n for n in range(3000) if _trial_division(n)]


def test_is_prime_large():
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime((2 ** 61 - 1) * (2 ** 31 - 1))


def test_rank_mod_p():
    assert rank_mod_p([(1, 2), (2, 4)], 7) == 1
    assert rank_mod_p([(1, 0), (0, 7)], 7) == 1
    assert rank_mod_p([(1, 0), (0, 1)], 7) == 2
