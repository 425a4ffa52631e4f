"""Type A rational Cherednik parameters: aspherical values, witness primes, certificates."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd
from typing import FrozenSet, Optional, Tuple

from .errors import NoWitness, PreconditionError
from .exact import is_prime

MAX_N = 12
MAX_SEARCH_STEPS = 200_000


def _check_n(n: int):
    if n < 2:
        raise PreconditionError("n must be at least 2")
    if n > MAX_N:
        raise PreconditionError(f"n > {MAX_N} is not supported (n! modulus too large)")


def aspherical_set(n: int) -> FrozenSet[Fraction]:
    """{-i/d : 1 <= i < d, 2 <= d <= n}."""
    _check_n(n)
    return frozenset(Fraction(-i, d) for d in range(2, n + 1) for i in range(1, d))


def reduce_mod_p(q, p: int) -> int:
    q = Fraction(q)
    if q.denominator % p == 0:
        raise PreconditionError(f"{p} divides the denominator of {q}")
    return q.numerator * pow(q.denominator, -1, p) % p


def aspherical_images(n: int, p: int) -> Tuple[int, ...]:
    return tuple(sorted({reduce_mod_p(q, p) for q in aspherical_set(n)}))


def _crt(congruences):
    """Combine (residue, modulus) pairs; raises NoWitness on inconsistency."""
    r, m = 0, 1
    for r2, m2 in congruences:
        g = gcd(m, m2)
        if (r2 - r) % g:
            raise NoWitness(f"inconsistent congruences modulo {m} and {m2}")
        lcm = m // g * m2
        step = (r2 - r) // g * pow(m // g, -1, m2 // g) % (m2 // g) if m2 // g > 1 else 0
        r = (r + m * step) % lcm
        m = lcm
    return r, m


def find_witness_prime(n: int, c, c2, p_min: int = 2) -> int:
    """Smallest prime p >= p_min with p = 1 (mod n!), p = -a (mod l), p = -a' (mod l')
    and both images of c, c' in [0, (p-1)/n).
    """
    _check_n(n)
    c, c2 = Fraction(c), Fraction(c2)
    nf = factorial(n)
    for q in (c, c2):
        if gcd(q.denominator, nf) != 1:
            raise NoWitness(f"denominator {q.denominator} shares a factor with {n}! = {nf}")
    residue, modulus = _crt([(1, nf), (-c.numerator, c.denominator), (-c2.numerator, c2.denominator)])
    # a negative integer reduces to p + a, which is below (p-1)/n only for small p
    p_max = None
    for q in (c, c2):
        if q.denominator == 1 and q < 0:
            bound = (-n * q.numerator - 1) // (n - 1)
            p_max = bound if p_max is None else min(p_max, bound)
    p = p_min + (residue - p_min) % modulus
    for _ in range(MAX_SEARCH_STEPS):
        if p_max is not None and p > p_max:
            raise NoWitness(f"negative integer parameter: no prime above {p_max} can work")
        if is_prime(p) and c.denominator % p and c2.denominator % p:
            if n * reduce_mod_p(c, p) < p - 1 and n * reduce_mod_p(c2, p) < p - 1:
                return p
        p += modulus
    raise NoWitness(f"no witness prime within {MAX_SEARCH_STEPS} steps of the class {residue} mod {modulus}")


def same_component(n: int, p: int, x: int, x2: int) -> bool:
    """Whether x and x' lie in one connected component of [0, p) minus the aspherical images."""
    if not (0 <= x < p and 0 <= x2 < p):
        raise PreconditionError("images must lie in [0, p)")
    if p <= n:
        raise PreconditionError("p must exceed n")
    images = aspherical_images(n, p)
    lo, hi = min(x, x2), max(x, x2)
    return not any(lo <= a <= hi for a in images)


def component_of(n: int, p: int, x: int) -> Tuple[int, int]:
    """Half-open interval [lo, hi) of the component containing a non-aspherical x."""
    images = aspherical_images(n, p)
    if x in images:
        raise PreconditionError(f"{x} is an aspherical image mod {p}")
    below = max((a for a in images if a < x), default=-1)
    above = min((a for a in images if a > x), default=p)
    return below + 1, above


@dataclass(frozen=True)
class Certificate:
    """Translation-chain witness: s*c and s'*c' reduce into the component of 0 mod p.

    ``signs`` records the sign twists (H_c and H_{-c} are isomorphic).
    """

    n: int
    c: Fraction
    c2: Fraction
    signs: Tuple[int, int]
    p: int
    images: Tuple[int, int]
    aspherical_images: Tuple[int, ...]
    component: Tuple[int, int]

    def lines(self):
        return [
            f"prime p = {self.p}",
            f"signs = {self.signs[0]:+d} {self.signs[1]:+d}",
            f"images = {self.images[0]} {self.images[1]}",
            f"aspherical images = {' '.join(map(str, self.aspherical_images))}",
            f"component = [{self.component[0]}, {self.component[1]})",
        ]


def verify_certificate(cert: Certificate) -> bool:
    n, p = cert.n, cert.p
    u, u2 = cert.signs[0] * cert.c, cert.signs[1] * cert.c2
    checks = [
        is_prime(p),
        p % factorial(n) == 1,
        (p + u.numerator) % u.denominator == 0,
        (p + u2.numerator) % u2.denominator == 0,
        (u2 - u).denominator == 1,
        cert.images == (reduce_mod_p(u, p), reduce_mod_p(u2, p)),
        all(n * x < p - 1 for x in cert.images),
        cert.aspherical_images == aspherical_images(n, p),
        same_component(n, p, *cert.images),
        same_component(n, p, 0, cert.images[0]),
        cert.component == component_of(n, p, cert.images[0]),
    ]
    return all(checks)


@dataclass(frozen=True)
class CherednikVerdict:
    status: str  # "equivalent" | "not-equivalent" | "hypotheses-not-met"
    certificate: Optional[Certificate] = None
    diagnostics: Tuple[str, ...] = field(default_factory=tuple)


def hypotheses(n: int, c, c2) -> Tuple[bool, str]:
    c, c2 = Fraction(c), Fraction(c2)
    a, l, a2, l2 = c.numerator, c.denominator, c2.numerator, c2.denominator
    g = gcd(l * l2, factorial(n))
    if g != 1:
        return False, f"gcd(l*l', n!) = gcd({l * l2}, {factorial(n)}) = {g}"
    if gcd(l, l2) == 1:
        return True, f"(l, l') = ({l}, {l2}) coprime"
    if l != l2:
        return False, f"denominators {l} and {l2} neither coprime nor equal"
    alpha = a2 * pow(a, -1, l) % l if l > 1 else 1
    while not l < n * alpha:
        alpha += l
    return True, f"l = l' = {l}, alpha = {alpha} (a' = alpha a mod l, l < n alpha)"


def cherednik_decide(n: int, c, c2) -> CherednikVerdict:
    _check_n(n)
    c, c2 = Fraction(c), Fraction(c2)
    ok, why = hypotheses(n, c, c2)
    if not ok:
        return CherednikVerdict("hypotheses-not-met", None, (why,))
    diff, total = c2 - c, c2 + c
    diagnostics = [why, f"c' - c = {diff}", f"c' + c = {total}"]
    if diff.denominator != 1 and total.denominator != 1:
        diagnostics.append("neither c' - c nor c' + c is an integer")
        return CherednikVerdict("not-equivalent", None, tuple(diagnostics))
    sign = 1 if diff.denominator == 1 else -1
    candidates = [(sign, 1), (-sign, -1)]
    if diff.denominator == 1 and total.denominator == 1:
        candidates += [(-1, 1), (1, -1)]
    cert = None
    for s, s2 in candidates:
        try:
            p = find_witness_prime(n, s * c, s2 * c2)
        except NoWitness as exc:
            diagnostics.append(f"signs {s:+d} {s2:+d}: {exc}")
            continue
        x, x2 = reduce_mod_p(s * c, p), reduce_mod_p(s2 * c2, p)
        cert = Certificate(n, c, c2, (s, s2), p, (x, x2), aspherical_images(n, p),
                           component_of(n, p, x))
        if not verify_certificate(cert):
            raise AssertionError("certificate failed self-verification")
        break
    if cert is None:
        diagnostics.append("no witness prime found for any sign choice")
        return CherednikVerdict("hypotheses-not-met", None, tuple(diagnostics))
    return CherednikVerdict("equivalent", cert, tuple(diagnostics))
