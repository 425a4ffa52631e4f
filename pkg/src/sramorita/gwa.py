"""Type A dictionary between parameters lam and root tuples t, and the GWA Morita decision.

A root tuple ``t`` is normalized when its last coordinate equals 1; it then
corresponds to a level-1 parameter on the m-cycle through partial sums.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import DimensionError, PreconditionError
from .exact import (
    Scalar,
    as_scalar,
    format_scalar,
    frac_mod1,
    imag_part,
    parse_scalar,
    real_part,
    scalar_key,
)
from .mckay import QuiverData, build_affine_quiver, level

GwaRoots = Tuple[Scalar, ...]


def cycle_quiver(m: int) -> QuiverData:
    return build_affine_quiver("A", m)


def rho_permutation(m: int) -> Tuple[int, ...]:
    """rho(lam) = (lam_1, ..., lam_{m-1}, lam_0) as a vertex permutation i -> i-1."""
    return tuple((i - 1) % m for i in range(m))


def tau_permutation(m: int) -> Tuple[int, ...]:
    """tau(lam) = (lam_{m-1}, ..., lam_0)."""
    return tuple(m - 1 - i for i in range(m))


def _require_normalized(t):
    if len(t) < 2:
        raise DimensionError("need at least two roots")
    if t[-1] != 1:
        raise PreconditionError(f"root tuple is not normalized (last coordinate {t[-1]})")


def lambda_from_roots(t: Sequence) -> tuple:
    t = tuple(as_scalar(x) for x in t)
    _require_normalized(t)
    return (t[0],) + tuple(as_scalar(t[i] - t[i - 1]) for i in range(1, len(t)))


def roots_from_lambda(lam: Sequence) -> GwaRoots:
    lam = tuple(as_scalar(x) for x in lam)
    Q = cycle_quiver(len(lam))
    if level(Q, lam) != 1:
        raise PreconditionError("parameter must have level 1")
    out, acc = [], Fraction(0)
    for x in lam:
        acc = as_scalar(acc + x)
        out.append(acc)
    return tuple(out)


def gwa_generator_in_t(kind: str, t: Sequence) -> GwaRoots:
    """Action of r_i ("r0", "r1", ...), "rho" or "tau" written directly on t."""
    t = tuple(as_scalar(x) for x in t)
    _require_normalized(t)
    m = len(t)
    if kind == "rho":
        return tuple(as_scalar(t[j] - t[0]) for j in range(1, m - 1)) + (as_scalar(1 - t[0]), Fraction(1))
    if kind == "tau":
        return tuple(as_scalar(1 - t[m - 2 - j]) for j in range(m - 1)) + (Fraction(1),)
    if not kind.startswith("r") or not kind[1:].isdigit():
        raise ValueError(f"unknown generator {kind!r}")
    i = int(kind[1:])
    if not 0 <= i < m:
        raise IndexError(f"r{i} out of range for m={m}")
    if i == m - 1:
        s = t[m - 2]
        return tuple(as_scalar(t[j] + 1 - s) for j in range(m - 2)) + (as_scalar(2 - s), Fraction(1))
    if i == 0:
        # the last coordinate stays 1: level is preserved
        return (-t[0],) + tuple(as_scalar(t[j] - t[0]) for j in range(1, m - 1)) + (Fraction(1),)
    out = list(t)
    out[i - 1], out[i] = t[i], t[i - 1]
    return tuple(out)


@dataclass(frozen=True)
class GwaGroupElement:
    """t'_i = eps * t_{sigma(i)} + d_i + c."""

    eps: int
    sigma: Tuple[int, ...]
    d: Tuple[int, ...]
    c: Scalar

    @staticmethod
    def identity(m: int) -> "GwaGroupElement":
        return GwaGroupElement(1, tuple(range(m)), (0,) * m, Fraction(0))

    def __str__(self):
        cyc = _cycle_string(self.sigma)
        return f"eps={self.eps} sigma={cyc} d=[{','.join(map(str, self.d))}] c={format_scalar(self.c)}"


def _cycle_string(sigma) -> str:
    seen, parts = set(), []
    for s in range(len(sigma)):
        if s in seen or sigma[s] == s:
            continue
        cyc, j = [], s
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = sigma[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


_ELEMENT = re.compile(r"eps=(-?1) sigma=((?:\([\d ]*\))+) d=\[([-\d,]*)\] c=(\S+)")


def parse_group_element(text: str, m: int) -> GwaGroupElement:
    match = _ELEMENT.fullmatch(text.strip())
    if not match:
        raise ValueError(f"malformed group element {text!r}")
    sigma = list(range(m))
    for cyc in re.findall(r"\(([\d ]*)\)", match.group(2)):
        pts = [int(x) for x in cyc.split()]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            sigma[a] = b
    d = tuple(int(x) for x in match.group(3).split(",")) if match.group(3) else ()
    return GwaGroupElement(int(match.group(1)), tuple(sigma), d, parse_scalar(match.group(4)))


def apply_group_element(g: GwaGroupElement, t: Sequence) -> GwaRoots:
    if not (len(g.sigma) == len(g.d) == len(t)):
        raise DimensionError("group element and root tuple differ in length")
    return tuple(as_scalar(g.eps * t[g.sigma[i]] + g.d[i] + g.c) for i in range(len(t)))


def normalize_roots(t: Sequence) -> Tuple[GwaRoots, GwaGroupElement]:
    """Sort by (re, im) and shift so the largest root becomes 1."""
    t = tuple(as_scalar(x) for x in t)
    if not t:
        raise DimensionError("empty root multiset")
    order = tuple(sorted(range(len(t)), key=lambda k: (scalar_key(t[k]), k)))
    c = as_scalar(1 - t[order[-1]])
    g = GwaGroupElement(1, order, (0,) * len(t), c)
    return apply_group_element(g, t), g


def _residue(x) -> Tuple[Fraction, Fraction]:
    return (frac_mod1(real_part(x)), imag_part(x))


def has_distinct_roots(t: Sequence) -> bool:
    return len(set(as_scalar(x) for x in t)) == len(t)


@dataclass(frozen=True)
class GwaVerdict:
    equivalent: bool
    witness: Optional[GwaGroupElement]
    distinct: Tuple[bool, bool]
    reason: str = ""


def gwa_decide(t: Sequence, t2: Sequence) -> GwaVerdict:
    """Is t2 = eps * sigma(t) + d + c for some eps, sigma, integer d and scalar c?

    Fixing which root of t the smallest root of t2 comes from pins c; the
    remaining question is equality of the residue multisets mod Z.
    """
    t = tuple(as_scalar(x) for x in t)
    t2 = tuple(as_scalar(x) for x in t2)
    distinct = (has_distinct_roots(t), has_distinct_roots(t2))
    if len(t) != len(t2):
        return GwaVerdict(False, None, distinct, "different numbers of roots")
    m = len(t)
    target = sorted(_residue(x) for x in t2)
    anchor = min(range(m), key=lambda k: (scalar_key(t2[k]), k))
    order_t = sorted(range(m), key=lambda k: (scalar_key(t[k]), k))
    for eps in (1, -1):
        for j in order_t:
            c = as_scalar(t2[anchor] - eps * t[j])
            u = [as_scalar(eps * x + c) for x in t]
            if sorted(_residue(x) for x in u) != target:
                continue
            sigma = _match(u, t2)
            d = tuple(int(real_part(t2[i] - u[sigma[i]])) for i in range(m))
            g = GwaGroupElement(eps, tuple(sigma), d, c)
            if apply_group_element(g, t) != t2:
                raise AssertionError("GWA witness failed self-verification")
            return GwaVerdict(True, g, distinct, "residue multisets coincide")
    return GwaVerdict(False, None, distinct, "no sign and shift aligns the residues mod Z")


def _match(u: Sequence, t2: Sequence) -> List[int]:
    """sigma with t2[i] - u[sigma[i]] integral, pairing within residue classes in lex order."""
    by_class = {}
    for k in sorted(range(len(u)), key=lambda k: (scalar_key(u[k]), k)):
        by_class.setdefault(_residue(u[k]), []).append(k)
    sigma = [0] * len(t2)
    for i in sorted(range(len(t2)), key=lambda i: (scalar_key(t2[i]), i)):
        sigma[i] = by_class[_residue(t2[i])].pop(0)
    return sigma
