"""Finite (Dynkin) and affine real roots; parameter classification."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from .errors import DimensionError
from .exact import IntVector, is_integer, dot
from .mckay import QuiverData, level


@dataclass(frozen=True)
class RootSet:
    roots: Tuple[IntVector, ...]
    kind: str  # "finite" or "affine"
    bound: Optional[int] = None

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, alpha):
        return tuple(alpha) in set(self.roots)


def _reflect(Q: QuiverData, i: int, alpha: IntVector) -> IntVector:
    row = Q.cartan[i]
    pairing = sum(a * c for a, c in zip(alpha, row))
    if pairing == 0:
        return alpha
    out = list(alpha)
    out[i] -= pairing
    return tuple(out)


@lru_cache(maxsize=None)
def finite_roots(Q: QuiverData) -> RootSet:
    """Roots of the finite Dynkin diagram obtained by deleting vertex 0.

    Enumerated as the closure of the simple roots e_i (i != 0) under the
    simple reflections s_i (i != 0).
    """
    simple = [Q.unit(i) for i in range(1, Q.n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for alpha in frontier:
            for i in range(1, Q.n):
                beta = _reflect(Q, i, alpha)
                if beta not in seen:
                    seen.add(beta)
                    nxt.append(beta)
        frontier = nxt
    return RootSet(tuple(sorted(seen)), "finite")


def positive_finite_roots(Q: QuiverData) -> Tuple[IntVector, ...]:
    return tuple(a for a in finite_roots(Q) if sum(a) > 0)


def affine_real_roots(Q: QuiverData, bound: int) -> RootSet:
    """{alpha + k delta : alpha finite root, |k| <= bound}."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    out = []
    for k in range(-bound, bound + 1):
        for alpha in finite_roots(Q):
            out.append(tuple(a + k * d for a, d in zip(alpha, Q.delta)))
    return RootSet(tuple(out), "affine", bound)


@dataclass(frozen=True)
class ParameterClass:
    level: object
    commutative: bool
    regular: bool
    generic: bool


def classify_parameter(Q: QuiverData, lam: Sequence) -> ParameterClass:
    if len(lam) != Q.n:
        raise DimensionError(f"{Q.name} expects {Q.n} entries")
    lev = level(Q, lam)
    pairings = [dot(lam, alpha) for alpha in positive_finite_roots(Q)]
    regular = all(p != 0 for p in pairings)
    if lev == 0:
        generic = False
    else:
        # lam . (alpha + k delta) = lam . alpha + k * level
        generic = not any(is_integer(p / lev) for p in pairings)
    return ParameterClass(lev, lev == 0, regular, generic)
