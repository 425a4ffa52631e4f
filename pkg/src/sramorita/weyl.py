"""Extended affine Weyl group: actions, K0 bookkeeping, canonical forms, orbit decisions.

Conventions
-----------
* A diagram automorphism ``sigma`` is stored as the tuple of images
  ``(sigma(0), ..., sigma(n-1))`` and acts on vectors by
  ``(sigma . v)[sigma(i)] = v[i]``.
* A word is a tuple of letters read as a composition, so the rightmost
  letter acts first.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Optional, Sequence, Tuple, Union

from .errors import DimensionError, PreconditionError, PrimeTooSmall, UnsupportedParameter
from .exact import (
    IntVector,
    as_scalar,
    imag_part,
    integer_solve,
    is_prime,
    is_real,
    rank_mod_p,
    real_part,
    gauss,
)
from .mckay import QuiverData, level

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Reflect:
    i: int

    def __str__(self):
        return f"r{self.i}"


@dataclass(frozen=True)
class Permute:
    sigma: Tuple[int, ...]

    def inverse(self) -> "Permute":
        inv = [0] * len(self.sigma)
        for i, j in enumerate(self.sigma):
            inv[j] = i
        return Permute(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.sigma))

    def __str__(self):
        return "sigma" + "".join("(" + ">".join(map(str, c)) + ")" for c in cycles(self.sigma))


Letter = Union[Reflect, Permute]
Word = Tuple[Letter, ...]


def cycles(sigma: Sequence[int]) -> List[Tuple[int, ...]]:
    """Nontrivial cycles of a permutation in one-line notation."""
    seen, out = set(), []
    for start in range(len(sigma)):
        if start in seen or sigma[start] == start:
            continue
        cyc, j = [], start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = sigma[j]
        out.append(tuple(cyc))
    return out


def format_word(word: Sequence[Letter]) -> str:
    return " ".join(str(letter) for letter in word)


_LETTER = re.compile(r"r(\d+)|sigma((?:\(\d+(?:>\d+)*\))*|\(\))")


def parse_word(text: str, n: int) -> Word:
    """Inverse of :func:`format_word` for a quiver with ``n`` vertices."""
    letters = []
    for tok in text.split():
        m = _LETTER.fullmatch(tok)
        if not m:
            raise ValueError(f"bad word letter {tok!r}")
        if m.group(1) is not None:
            letters.append(Reflect(int(m.group(1))))
            continue
        sigma = list(range(n))
        for cyc in re.findall(r"\(([\d>]*)\)", m.group(2)):
            if not cyc:
                continue
            pts = [int(x) for x in cyc.split(">")]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                sigma[a] = b
        letters.append(Permute(tuple(sigma)))
    return tuple(letters)


# ---------------------------------------------------------------------------
# generators


def _check_vertex(Q: QuiverData, i: int):
    if not 0 <= i < Q.n:
        raise IndexError(f"vertex {i} out of range for {Q.name}")


def simple_reflection_s(Q: QuiverData, i: int, alpha: Sequence[int]) -> IntVector:
    """s_i(alpha) = alpha - (alpha, e_i) e_i."""
    _check_vertex(Q, i)
    if len(alpha) != Q.n:
        raise DimensionError("dimension vector length mismatch")
    pairing = sum(a * c for a, c in zip(alpha, Q.cartan[i]))
    out = list(alpha)
    out[i] -= pairing
    return tuple(out)


def dual_reflection_r(Q: QuiverData, i: int, lam: Sequence) -> tuple:
    """r_i(lam)_j = lam_j - (e_i, e_j) lam_i."""
    _check_vertex(Q, i)
    if len(lam) != Q.n:
        raise DimensionError("parameter length mismatch")
    li = lam[i]
    if li == 0:
        return tuple(lam)
    row = Q.cartan[i]
    return tuple(as_scalar(lam[j] - row[j] * li) if row[j] else lam[j] for j in range(Q.n))


def permute(sigma: Sequence[int], vec: Sequence) -> tuple:
    out = [None] * len(vec)
    for i, x in enumerate(vec):
        out[sigma[i]] = x
    return tuple(out)


@lru_cache(maxsize=None)
def diagram_automorphisms(Q: QuiverData) -> Tuple[Tuple[int, ...], ...]:
    """All permutations of the vertices preserving edge multiplicities.

    Backtracking over partial assignments, pruning on adjacency with the
    vertices already placed. The identity comes first.
    """
    n, A = Q.n, Q.adjacency
    degree = [sum(row) for row in A]
    found = []

    def extend(partial: List[int], used: set):
        k = len(partial)
        if k == n:
            found.append(tuple(partial))
            return
        for cand in range(n):
            if cand in used or degree[cand] != degree[k]:
                continue
            if all(A[k][j] == A[cand][partial[j]] for j in range(k)):
                partial.append(cand)
                used.add(cand)
                extend(partial, used)
                partial.pop()
                used.discard(cand)

    extend([], set())
    found.sort()
    return tuple(found)


def check_letter(Q: QuiverData, letter: Letter):
    if isinstance(letter, Reflect):
        _check_vertex(Q, letter.i)
    elif isinstance(letter, Permute):
        s = letter.sigma
        if sorted(s) != list(range(Q.n)):
            raise ValueError(f"{s} is not a permutation of the vertices of {Q.name}")
        A = Q.adjacency
        if any(A[i][j] != A[s[i]][s[j]] for i in range(Q.n) for j in range(Q.n)):
            raise ValueError(f"{s} is not a diagram automorphism of {Q.name}")
    else:
        raise TypeError(f"unknown letter {letter!r}")


def apply_word(Q: QuiverData, word: Sequence[Letter], lam: Sequence) -> tuple:
    """Action on parameters; rightmost letter first."""
    lam = tuple(lam)
    for letter in reversed(word):
        check_letter(Q, letter)
        if isinstance(letter, Reflect):
            lam = dual_reflection_r(Q, letter.i, lam)
        else:
            lam = permute(letter.sigma, lam)
    return lam


def apply_word_dim(Q: QuiverData, word: Sequence[Letter], alpha: Sequence[int]) -> IntVector:
    """Action on Z^I through s_i and permutations; rightmost letter first."""
    alpha = tuple(alpha)
    for letter in reversed(word):
        check_letter(Q, letter)
        if isinstance(letter, Reflect):
            alpha = simple_reflection_s(Q, letter.i, alpha)
        else:
            alpha = permute(letter.sigma, alpha)
    return alpha


def invert_word(word: Sequence[Letter]) -> Word:
    return tuple(l.inverse() if isinstance(l, Permute) else l for l in reversed(word))


def simplify_word(word: Sequence[Letter]) -> Word:
    """Merge adjacent permutations and cancel adjacent equal reflections."""
    out: List[Letter] = []
    for letter in word:
        if isinstance(letter, Permute) and letter.is_identity():
            continue
        if out and isinstance(letter, Reflect) and out[-1] == letter:
            out.pop()
            continue
        if out and isinstance(letter, Permute) and isinstance(out[-1], Permute):
            # (a . b)(i) = a(b(i)), with a = out[-1] on the left
            a = out.pop().sigma
            merged = Permute(tuple(a[j] for j in letter.sigma))
            if not merged.is_identity():
                out.append(merged)
            continue
        out.append(letter)
    return tuple(out)


# ---------------------------------------------------------------------------
# K0 bookkeeping


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    n, m, k = len(A), len(B[0]) if B else 0, len(B)
    return tuple(tuple(sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)) for i in range(n))


def matvec(A: IntMatrix, v: Sequence[int]) -> IntVector:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def letter_matrix(Q: QuiverData, letter: Letter) -> IntMatrix:
    """Matrix acting on column vectors of Z^I."""
    if isinstance(letter, Reflect):
        cols = [simple_reflection_s(Q, letter.i, Q.unit(k)) for k in range(Q.n)]
    else:
        cols = [permute(letter.sigma, Q.unit(k)) for k in range(Q.n)]
    return tuple(tuple(cols[k][r] for k in range(Q.n)) for r in range(Q.n))


def k0_of_word(Q: QuiverData, word: Sequence[Letter], lam: Optional[Sequence] = None) -> IntMatrix:
    """Integer matrix of the word on K0 = Z^I.

    Formal mode (``lam`` is None): product of reflection and permutation
    matrices. Functorial mode: a reflection letter whose incoming parameter
    vanishes at its vertex contributes the identity (the reflection functor
    is the identity there).
    """
    M = identity_matrix(Q.n)
    cur = tuple(lam) if lam is not None else None
    for letter in reversed(word):
        check_letter(Q, letter)
        if isinstance(letter, Reflect) and cur is not None and cur[letter.i] == 0:
            factor = None
        else:
            factor = letter_matrix(Q, letter)
        if factor is not None:
            M = matmul(factor, M)
        if cur is not None:
            cur = apply_word(Q, (letter,), cur)
    return M


def translation_lattice_basis(Q: QuiverData) -> List[IntVector]:
    """Z-basis of {xi in Z^I : xi . delta = 0}: e_i - delta_i e_0 for i != 0.

    Valid because delta_0 = 1.
    """
    basis = []
    for i in range(1, Q.n):
        v = [0] * Q.n
        v[i] = 1
        v[0] = -Q.delta[i]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# canonical forms

MAX_REDUCTION_STEPS = 10 ** 6


def _require_real(lam):
    if not all(is_real(x) for x in lam):
        raise UnsupportedParameter("entries must be real; use canonical_form_complex")


def _dominate(Q: QuiverData, lam: tuple, support=None) -> Tuple[tuple, List[int]]:
    """Reflect at the most negative entry (ties: smallest index) until none is negative.

    Only vertices in ``support`` are considered when given. Returns the
    reduced vector and the reflection indices in application order.
    """
    support = list(range(Q.n)) if support is None else sorted(support)
    # reflections are linear, so reduce the integer vector denom * lam in place
    denom = 1
    for x in lam:
        denom = denom * Fraction(x).denominator // gcd(denom, Fraction(x).denominator)
    vec = [int(Fraction(x) * denom) for x in lam]
    moves = [[(j, Q.cartan[i][j]) for j in range(Q.n) if j != i and Q.cartan[i][j]] for i in range(Q.n)]
    steps: List[int] = []
    for _ in range(MAX_REDUCTION_STEPS):
        worst, idx = 0, None
        for i in support:
            if vec[i] < worst:
                worst, idx = vec[i], i
        if idx is None:
            return tuple(Fraction(v, denom) for v in vec), steps
        vec[idx] = -worst
        for j, c in moves[idx]:
            vec[j] -= c * worst
        steps.append(idx)
    raise AssertionError("alcove reduction exceeded the iteration cap")


def canonical_form(Q: QuiverData, lam: Sequence) -> Tuple[tuple, Word]:
    """Dominant, lexicographically minimal representative of the W_ext-orbit.

    Returns (lam0, word) with ``apply_word(Q, word, lam) == lam0``. Requires
    real entries and positive level.
    """
    lam = tuple(as_scalar(x) for x in lam)
    if len(lam) != Q.n:
        raise DimensionError("parameter length mismatch")
    _require_real(lam)
    lev = level(Q, lam)
    if lev <= 0:
        raise UnsupportedParameter(f"canonical form needs positive level, got {lev}")
    dom, steps = _dominate(Q, lam)
    best, best_sigma = None, None
    for sigma in diagram_automorphisms(Q):
        img = permute(sigma, dom)
        if best is None or img < best:
            best, best_sigma = img, sigma
    word = (Permute(best_sigma),) + tuple(Reflect(i) for i in reversed(steps))
    return best, simplify_word(word)


@dataclass(frozen=True)
class ComplexCanonical:
    real: tuple
    imag: tuple
    word: Word

    @property
    def pair(self):
        return (self.real, self.imag)

    @property
    def value(self) -> tuple:
        return tuple(gauss(x, y) for x, y in zip(self.real, self.imag))


def canonical_form_complex(Q: QuiverData, lam: Sequence) -> ComplexCanonical:
    """Canonical pair (x0, y0) for lam = x + iy with real positive level.

    x is reduced to its canonical form x0; y is then reduced under the
    stabilizer of x0, which is the parabolic subgroup on the zero entries of
    x0 extended by the diagram automorphisms fixing x0.
    """
    lam = tuple(as_scalar(v) for v in lam)
    if len(lam) != Q.n:
        raise DimensionError("parameter length mismatch")
    lev = level(Q, lam)
    if not is_real(lev) or lev <= 0:
        raise UnsupportedParameter(f"level must be real and positive, got {lev}")
    x = tuple(real_part(v) for v in lam)
    y = tuple(imag_part(v) for v in lam)
    x0, w1 = canonical_form(Q, x)
    y1 = apply_word(Q, w1, y)
    zero_support = [i for i in range(Q.n) if x0[i] == 0]
    best = None
    for omega in diagram_automorphisms(Q):
        if permute(omega, x0) != x0:
            continue
        z, steps = _dominate(Q, permute(omega, y1), zero_support)
        if best is None or z < best[0]:
            best = (z, omega, steps)
    y0, omega, steps = best
    word = tuple(Reflect(i) for i in reversed(steps)) + (Permute(omega),) + w1
    return ComplexCanonical(x0, y0, simplify_word(word))


# ---------------------------------------------------------------------------
# orbit decisions


@dataclass(frozen=True)
class OrbitVerdict:
    equivalent: bool
    witness: Optional[Word]
    reason: str = ""


def _canon(Q, lam):
    if all(is_real(v) for v in lam):
        x0, w = canonical_form(Q, lam)
        return (x0, tuple(Fraction(0) for _ in x0)), w
    c = canonical_form_complex(Q, lam)
    return c.pair, c.word


def same_orbit(Q: QuiverData, lam: Sequence, lam2: Sequence) -> OrbitVerdict:
    """Decide lam2 in W_ext . lam (real positive level; Gaussian entries allowed).

    The witness word w satisfies ``apply_word(Q, w, lam) == lam2``.
    """
    lam = tuple(as_scalar(v) for v in lam)
    lam2 = tuple(as_scalar(v) for v in lam2)
    if len(lam) != Q.n or len(lam2) != Q.n:
        raise DimensionError("parameter length mismatch")
    l1, l2 = level(Q, lam), level(Q, lam2)
    if l1 != l2:
        return OrbitVerdict(False, None, f"levels differ: {l1} vs {l2}")
    if not is_real(l1) or l1 <= 0:
        raise UnsupportedParameter(f"orbit decision needs real positive level, got {l1}")
    c1, w1 = _canon(Q, lam)
    c2, w2 = _canon(Q, lam2)
    if c1 != c2:
        return OrbitVerdict(False, None, "canonical forms differ")
    witness = simplify_word(invert_word(w2) + w1)
    if apply_word(Q, witness, lam) != lam2:
        raise AssertionError("orbit witness failed self-verification")
    return OrbitVerdict(True, witness, "canonical forms coincide")


@dataclass(frozen=True)
class ProductVerdict:
    equivalent: bool
    matching: Optional[Tuple[Tuple[int, int, Word], ...]]
    reason: str = ""


def decide_product(factors: Sequence[Tuple[QuiverData, Sequence]],
                   factors2: Sequence[Tuple[QuiverData, Sequence]]) -> ProductVerdict:
    """Orbit decision for products: match isomorphic factors, then per-factor orbits.

    ``matching`` lists (left index, right index, witness word).
    """
    if len(factors) != len(factors2):
        return ProductVerdict(False, None, "factor counts differ")
    verdicts = {}
    for i, (Q, lam) in enumerate(factors):
        for j, (Q2, lam2) in enumerate(factors2):
            if Q == Q2:
                verdicts[i, j] = same_orbit(Q, lam, lam2)
    groups = {}
    for i, (Q, _) in enumerate(factors):
        groups.setdefault(Q, ([], []))[0].append(i)
    for j, (Q2, _) in enumerate(factors2):
        groups.setdefault(Q2, ([], []))[1].append(j)
    matching = []
    for Q in sorted(groups, key=lambda q: (q.family, q.rank)):
        left, right = groups[Q]
        if len(left) != len(right):
            return ProductVerdict(False, None, f"factor types differ at {Q.name}")
        for perm in itertools.permutations(right):
            if all(verdicts[i, j].equivalent for i, j in zip(left, perm)):
                matching.extend((i, j, verdicts[i, j].witness) for i, j in zip(left, perm))
                break
        else:
            return ProductVerdict(False, None, f"no orbit-compatible matching of {Q.name} factors")
    matching.sort()
    return ProductVerdict(True, tuple(matching), "all factors matched")


def fp_translation_witness(Q: QuiverData, lam: Sequence[int], lam2: Sequence[int], p: int) -> IntVector:
    """Translation d in the lattice {d . delta = 0} with d = lam2 - lam (mod p).

    Both parameters live in F_p^I (integer representatives) and must have
    level 1 mod p.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if len(lam) != Q.n or len(lam2) != Q.n:
        raise DimensionError("parameter length mismatch")
    for v in (lam, lam2):
        if sum(a * d for a, d in zip(v, Q.delta)) % p != 1:
            raise PreconditionError("both parameters must have level 1 mod p")
    basis = translation_lattice_basis(Q)
    if rank_mod_p(basis, p) != len(basis):
        raise PrimeTooSmall(f"lattice basis degenerates mod {p}")
    target = [(b - a) % p for a, b in zip(lam, lam2)]
    coeffs = integer_solve(basis, target, modulus=p)
    if coeffs is None:
        raise AssertionError("difference of level-1 parameters must lie in the lattice mod p")
    d = tuple(sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(Q.n))
    return d
