"""Affine ADE quivers (McKay quivers of finite subgroups of SL2), forms and delta."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from .errors import DimensionError, UnsupportedType
from .exact import IntVector, Scalar, as_scalar, dot

Arrow = Tuple[int, int]


@dataclass(frozen=True)
class QuiverData:
    """One orientation of an affine ADE diagram.

    Vertex 0 is the extending vertex (delta_0 == 1). ``arrows`` holds
    (tail, head) pairs; ``adjacency`` counts undirected edges.
    """

    family: str
    rank: int
    arrows: Tuple[Arrow, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    delta: IntVector

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def cartan(self) -> Tuple[Tuple[int, ...], ...]:
        """Gram matrix of the symmetrized Ringel form, (e_i, e_j)."""
        return tuple(
            tuple(2 * (i == j) - self.adjacency[i][j] for j in range(self.n))
            for i in range(self.n)
        )

    def unit(self, i: int) -> IntVector:
        return tuple(int(i == j) for j in range(self.n))

    def neighbors(self, i: int) -> List[int]:
        return [j for j in range(self.n) if self.adjacency[i][j]]

    def reversed(self) -> "QuiverData":
        return QuiverData(self.family, self.rank, tuple((h, t) for t, h in self.arrows),
                          self.adjacency, self.delta)

    def __str__(self):
        return self.name


def _edges(family: str, rank: int) -> Tuple[int, List[Arrow]]:
    if family == "A":
        if rank < 2:
            raise UnsupportedType("affine type A needs at least 2 vertices")
        return rank, [(i, (i + 1) % rank) for i in range(rank)]
    if family == "D":
        if rank < 4:
            raise UnsupportedType("affine type D needs rank >= 4")
        # leaves 0,1 hang off vertex 4; leaves 2,3 off vertex n; chain 4..n
        n = rank
        edges = [(0, 4), (1, 4), (2, n), (3, n)] + [(j, j + 1) for j in range(4, n)]
        return n + 1, edges
    if family == "E":
        if rank == 6:
            # arms of length 2 around vertex 2
            return 7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]
        if rank == 7:
            return 8, [(j, j + 1) for j in range(6)] + [(3, 7)]
        if rank == 8:
            return 9, [(j, j + 1) for j in range(7)] + [(5, 8)]
        raise UnsupportedType(f"no affine E{rank}")
    raise UnsupportedType(f"unknown family {family!r}")


def _radical_generator(cartan) -> IntVector:
    """Positive primitive generator of the (one-dimensional) kernel of ``cartan``."""
    n = len(cartan)
    rows = [[Fraction(x) for x in row] for row in cartan]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((k for k in range(r, n) if rows[k][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(n):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise AssertionError(f"symmetrized form has nullity {len(free)}, expected 1")
    f = free[0]
    vec = [Fraction(0)] * n
    vec[f] = Fraction(1)
    for row_idx, c in enumerate(pivots):
        vec[c] = -rows[row_idx][f]
    lcm = 1
    for x in vec:
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in vec]
    g = 0
    for x in ints:
        g = _gcd(g, abs(x))
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        raise AssertionError("radical generator is not positive")
    return tuple(ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@lru_cache(maxsize=None)
def build_affine_quiver(family: str, rank: int) -> QuiverData:
    family = family.upper()
    n, arrows = _edges(family, rank)
    adj = [[0] * n for _ in range(n)]
    for t, h in arrows:
        adj[t][h] += 1
        adj[h][t] += 1
    adjacency = tuple(tuple(row) for row in adj)
    cartan = tuple(tuple(2 * (i == j) - adj[i][j] for j in range(n)) for i in range(n))
    delta = _radical_generator(cartan)
    if delta[0] != 1:
        raise AssertionError("extending vertex must carry delta_0 = 1")
    return QuiverData(family, rank, tuple(arrows), adjacency, delta)


_NAME = re.compile(r"([ADEade])(\d+)")


def quiver_from_name(name: str) -> QuiverData:
    """Parse CLI names such as ``A3`` (3-cycle), ``D4``, ``E8``."""
    m = _NAME.fullmatch(name.strip())
    if not m:
        raise UnsupportedType(f"cannot parse quiver name {name!r}")
    return build_affine_quiver(m.group(1).upper(), int(m.group(2)))


def catalog(max_a: int = 6, max_d: int = 6) -> List[QuiverData]:
    out = [build_affine_quiver("A", m) for m in range(2, max_a + 1)]
    out += [build_affine_quiver("D", n) for n in range(4, max_d + 1)]
    out += [build_affine_quiver("E", r) for r in (6, 7, 8)]
    return out


def _check_len(Q: QuiverData, *vecs):
    for v in vecs:
        if len(v) != Q.n:
            raise DimensionError(f"{Q.name} has {Q.n} vertices, got vector of length {len(v)}")


def euler_pairing(Q: QuiverData, alpha: Sequence[int], beta: Sequence[int]) -> int:
    _check_len(Q, alpha, beta)
    total = sum(a * b for a, b in zip(alpha, beta))
    total -= sum(alpha[t] * beta[h] for t, h in Q.arrows)
    return total


def ringel_form(Q: QuiverData, alpha: Sequence[int], beta: Sequence[int]) -> Tuple[int, int]:
    """Return (<alpha, beta>, (alpha, beta))."""
    ab = euler_pairing(Q, alpha, beta)
    return ab, ab + euler_pairing(Q, beta, alpha)


def symmetrized(Q: QuiverData, alpha: Sequence[int], beta: Sequence[int]) -> int:
    _check_len(Q, alpha, beta)
    C = Q.cartan
    return sum(alpha[i] * C[i][j] * beta[j] for i in range(Q.n) for j in range(Q.n)
               if alpha[i] and beta[j])


def params_from_central(Q: QuiverData, f: Sequence) -> Tuple[Scalar, ...]:
    _check_len(Q, f)
    return tuple(as_scalar(fi * di) for fi, di in zip(f, Q.delta))


def level(Q: QuiverData, lam: Sequence) -> Scalar:
    _check_len(Q, lam)
    return dot(lam, Q.delta)
