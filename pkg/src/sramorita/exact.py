"""Exact scalars (rationals and Gaussian rationals) and integer lattice solving.

Rationals are plain :class:`fractions.Fraction`. Gaussian rationals get a small
immutable class; arithmetic that produces a zero imaginary part demotes the
result back to ``Fraction`` so real computations never leave ``Fraction``.
"""
from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import DimensionError, ScalarParseError

IntVector = Tuple[int, ...]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return gauss(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return gauss(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return gauss(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return gauss(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return gauss((self.re * o.re + self.im * o.im) / n, (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return gauss(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return gauss(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, GaussianRational]


def gauss(re_part, im_part=0) -> Scalar:
    """Build a scalar, returning a ``Fraction`` when the imaginary part vanishes."""
    im_part = _frac(im_part)
    if im_part == 0:
        return _frac(re_part)
    return GaussianRational(re_part, im_part)


def as_scalar(x) -> Scalar:
    if isinstance(x, GaussianRational):
        return gauss(x.re, x.im)
    return _frac(x)


def real_part(x) -> Fraction:
    return x.re if isinstance(x, GaussianRational) else _frac(x)


def imag_part(x) -> Fraction:
    return x.im if isinstance(x, GaussianRational) else Fraction(0)


def is_real(x) -> bool:
    return imag_part(x) == 0


def is_integer(x) -> bool:
    """True for scalars in Z (imaginary part zero, integral real part)."""
    return imag_part(x) == 0 and real_part(x).denominator == 1


def scalar_key(x) -> Tuple[Fraction, Fraction]:
    """Total order used for canonicalization: lexicographic on (re, im)."""
    return (real_part(x), imag_part(x))


def frac_mod1(x) -> Fraction:
    """Reduce a rational into [0, 1)."""
    x = _frac(x)
    return x - (x.numerator // x.denominator)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    total = Fraction(0)
    for a, b in zip(u, v):
        total = total + a * b
    return as_scalar(total)


# ---------------------------------------------------------------------------
# text grammar: "a", "a/b", "a/b+c/di", "c/di", "i", "-i"

_RAT = _re.compile(r"[+-]?\d+(?:/\d+)?")


def _parse_rational(text: str, whole: str) -> Fraction:
    if not _RAT.fullmatch(text):
        raise ScalarParseError(f"malformed scalar {whole!r}")
    num, _, den = text.partition("/")
    d = int(den) if den else 1
    if d == 0:
        raise ScalarParseError(f"zero denominator in {whole!r}")
    return Fraction(int(num), d)


def parse_scalar(text: str) -> Scalar:
    s = text.strip().replace(" ", "")
    if not s:
        raise ScalarParseError("empty scalar")
    if not s.endswith("i"):
        return _parse_rational(s, text)
    body = s[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    if cut > 0:
        re_text, im_text = body[:cut], body[cut:]
    else:
        re_text, im_text = "", body
    if im_text in ("", "+"):
        im_val = Fraction(1)
    elif im_text == "-":
        im_val = Fraction(-1)
    else:
        im_val = _parse_rational(im_text, text)
    re_val = _parse_rational(re_text, text) if re_text else Fraction(0)
    return gauss(re_val, im_val)


def format_scalar(x) -> str:
    if isinstance(x, GaussianRational) and x.im != 0:
        sign = "+" if x.im > 0 else "-"
        return f"{x.re}{sign}{abs(x.im)}i"
    return str(real_part(x))


def parse_vector(text: str) -> Tuple[Scalar, ...]:
    parts = [p for p in text.split(",")]
    if any(not p.strip() for p in parts):
        raise ScalarParseError(f"malformed vector {text!r}")
    return tuple(parse_scalar(p) for p in parts)


def format_vector(v: Iterable) -> str:
    return ",".join(format_scalar(x) for x in v)


# ---------------------------------------------------------------------------
# integer lattices


def _column_echelon(cols: list, nrows: int):
    """Unimodular column reduction of the matrix whose columns are ``cols``.

    Returns (H, V, pivots) where H = A V is in column echelon form, V is the
    accumulated unimodular transform (as columns) and pivots lists
    (row, column) pairs.
    """
    k = len(cols)
    H = [list(c) for c in cols]
    V = [[int(i == j) for i in range(k)] for j in range(k)]
    pivots = []
    c = 0
    for r in range(nrows):
        if c >= k:
            break
        while True:
            nz = [j for j in range(c, k) if H[j][r] != 0]
            if not nz:
                break
            j = min(nz, key=lambda j: abs(H[j][r]))
            H[c], H[j] = H[j], H[c]
            V[c], V[j] = V[j], V[c]
            done = True
            for j2 in range(c + 1, k):
                if H[j2][r]:
                    q = H[j2][r] // H[c][r]
                    H[j2] = [a - q * b for a, b in zip(H[j2], H[c])]
                    V[j2] = [a - q * b for a, b in zip(V[j2], V[c])]
                    if H[j2][r]:
                        done = False
            if done:
                break
        if H[c][r] != 0:
            pivots.append((r, c))
            c += 1
    return H, V, pivots


def _symmetric_residue(x: int, m: int) -> int:
    x %= m
    return x - m if x > m // 2 else x


def integer_solve(
    basis: Sequence[Sequence[int]],
    target: Sequence[int],
    modulus: Optional[int] = None,
) -> Optional[IntVector]:
    """Coefficients x with sum_k x_k * basis[k] == target (mod ``modulus``).

    Returns ``None`` when no integer solution exists. With a modulus the
    coefficients are returned as symmetric residues in (-m/2, m/2].
    """
    if not basis:
        raise DimensionError("basis must be nonempty")
    n = len(target)
    if any(len(b) != n for b in basis):
        raise DimensionError("basis vectors and target differ in length")
    cols = [list(map(int, b)) for b in basis]
    k = len(cols)
    if modulus is not None:
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        cols += [[modulus * int(i == j) for i in range(n)] for j in range(n)]
    H, V, pivots = _column_echelon(cols, n)
    y = [0] * len(cols)
    pivot_of_row = dict(pivots)
    for r in range(n):
        residual = int(target[r]) - sum(H[j][r] * y[j] for j in range(len(cols)) if y[j])
        if r in pivot_of_row:
            c = pivot_of_row[r]
            q, rem = divmod(residual, H[c][r])
            if rem:
                return None
            y[c] = q
        elif residual != 0:
            return None
    x = [sum(V[j][i] * y[j] for j in range(len(cols))) for i in range(len(cols))]
    coeffs = x[:k]
    if modulus is not None:
        coeffs = [_symmetric_residue(v, modulus) for v in coeffs]
    return tuple(coeffs)


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    m = [[v % p for v in row] for row in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [v * inv % p for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


# Deterministic for n < 3.3e24 with these bases.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
