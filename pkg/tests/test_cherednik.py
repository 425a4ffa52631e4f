from fractions import Fraction as F
from math import factorial, gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from sramorita.cherednik import (
    Certificate,
    aspherical_images,
    aspherical_set,
    cherednik_decide,
    component_of,
    find_witness_prime,
    hypotheses,
    reduce_mod_p,
    same_component,
    verify_certificate,
)
from sramorita.errors import NoWitness, PreconditionError
from sramorita.exact import is_prime


def test_aspherical_sets():
    assert aspherical_set(2) == {F(-1, 2)}
    assert aspherical_set(3) == {F(-1, 2), F(-1, 3), F(-2, 3)}
    assert len(aspherical_set(5)) == len({F(i, d) for d in range(2, 6) for i in range(1, d)})


@pytest.mark.parametrize("n", [0, 1, 13])
def test_n_out_of_range(n):
    with pytest.raises(PreconditionError):
        aspherical_set(n)


def test_reduce_mod_p():
    assert reduce_mod_p(F(1, 5), 19) == 4
    assert reduce_mod_p(3, 7) == 3
    assert reduce_mod_p(-1, 7) == 6
    with pytest.raises(PreconditionError):
        reduce_mod_p(F(1, 5), 5)


def test_aspherical_images_p79():
    assert aspherical_images(3, 79) == (26, 39, 52)


@pytest.mark.parametrize("n", range(2, 7))
def test_aspherical_images_closed_form(n):
    # p = 1 mod n! makes every d <= n divide p - 1, and -i/d reduces to i(p-1)/d
    p = next(p for p in range(factorial(n) + 1, 10 ** 6, factorial(n)) if is_prime(p))
    for q in aspherical_set(n):
        i, d = -q.numerator, q.denominator
        assert reduce_mod_p(q, p) == i * (p - 1) // d


def test_witness_prime_examples():
    assert find_witness_prime(3, F(1, 5), F(11, 5)) == 79
    with pytest.raises(NoWitness):
        find_witness_prime(3, F(1, 5), F(1, 3))
    assert find_witness_prime(2, F(1, 5), F(1, 5)) == 19


def test_component_examples():
    assert same_component(3, 79, 16, 18)
    assert not same_component(3, 79, 16, 30)
    assert same_component(3, 79, 17, 17)
    assert component_of(3, 79, 16) == (0, 26)
    assert component_of(3, 79, 60) == (53, 79)
    with pytest.raises(PreconditionError):
        component_of(3, 79, 26)
    with pytest.raises(PreconditionError):
        same_component(3, 79, 16, 80)


def test_decide_examples():
    v = cherednik_decide(3, F(1, 5), F(11, 5))
    assert v.status == "equivalent"
    cert = v.certificate
    assert (cert.p, cert.images, cert.aspherical_images, cert.component) == (79, (16, 18), (26, 39, 52), (0, 26))
    assert verify_certificate(cert)
    assert cherednik_decide(3, F(1, 5), F(2, 7)).status == "not-equivalent"
    assert cherednik_decide(3, F(1, 5), F(1, 3)).status == "hypotheses-not-met"


def test_hypotheses_unequal_shared_denominators():
    ok, why = hypotheses(2, F(1, 9), F(1, 3))
    assert not ok and "neither" in why
    assert cherednik_decide(2, F(1, 9), F(1, 3)).status == "hypotheses-not-met"


def test_sign_twist_certificate():
    # c' + c integral but c' - c not: the certificate uses -c
    v = cherednik_decide(3, F(1, 5), F(-1, 5) + 2)
    assert v.status == "equivalent"
    assert v.certificate.signs[0] * v.certificate.signs[1] == -1
    assert verify_certificate(v.certificate)


def test_negative_integer_parameters_terminate():
    v = cherednik_decide(3, -2, 3)
    assert v.status == "equivalent" and verify_certificate(v.certificate)
    with pytest.raises(NoWitness):
        find_witness_prime(3, -2, -2, p_min=100)


def test_tampered_certificate_rejected():
    cert = cherednik_decide(3, F(1, 5), F(11, 5)).certificate
    fields = cert.__dict__.copy()
    for key, bad in [("p", 83), ("images", (16, 17)), ("component", (0, 39)), ("signs", (-1, 1))]:
        assert not verify_certificate(Certificate(**{**fields, key: bad}))


coprime_denominators = st.sampled_from([1, 7, 11, 13, 17, 19, 23, 29, 49])


@settings(max_examples=100)
@given(st.integers(2, 5), coprime_denominators, st.integers(-30, 30), st.integers(-3, 3), st.booleans())
def test_integer_shift_is_certified(n, l, a, k, flip):
    assume(l > n and gcd(a, l) == 1)
    c = F(a, l)
    c2 = (-c if flip else c) + k
    v = cherednik_decide(n, c, c2)
    assert v.status == "equivalent"
    assert verify_certificate(v.certificate)
    cert = v.certificate
    u, u2 = cert.signs[0] * c, cert.signs[1] * c2
    # p = -a (mod l), so the image of a/l is (p + a)/l reduced mod p
    for x, q in zip(cert.images, (u, u2)):
        closed = (cert.p + q.numerator) // q.denominator
        assert (x - closed) % cert.p == 0
        if q.denominator > 1 and 0 <= closed < cert.p:
            assert x == closed


@settings(max_examples=50)
@given(st.integers(2, 5), coprime_denominators, coprime_denominators, st.integers(1, 30), st.integers(1, 30))
def test_non_integral_difference_is_rejected(n, l, l2, a, a2):
    assume(l > n and l2 > n and l != l2 and gcd(l, l2) == 1 and gcd(a, l) == 1 and gcd(a2, l2) == 1)
    assert cherednik_decide(n, F(a, l), F(a2, l2)).status == "not-equivalent"
