"""Dense matrices over Q (Fraction entries) or F_p (int entries in [0, p))."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import DimensionError, PreconditionError
from .exact import GaussianRational, is_prime


@dataclass(frozen=True)
class Mat:
    nrows: int
    ncols: int
    rows: Tuple[tuple, ...]

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def col_block(self, start: int, stop: int) -> "Mat":
        return Mat(self.nrows, stop - start, tuple(row[start:stop] for row in self.rows))

    def row_block(self, start: int, stop: int) -> "Mat":
        return Mat(stop - start, self.ncols, self.rows[start:stop])

    def select_rows(self, idx: Sequence[int]) -> "Mat":
        return Mat(len(idx), self.ncols, tuple(self.rows[i] for i in idx))


class Field:
    """Arithmetic policy; matrices stay plain :class:`Mat` values."""

    characteristic = 0

    def convert(self, x):
        raise NotImplementedError

    def reduce(self, x):
        return x

    def inv(self, x):
        raise NotImplementedError

    # -- matrices --------------------------------------------------------
    def mat(self, rows: Sequence[Sequence], ncols: int = None) -> Mat:
        rows = tuple(tuple(self.convert(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged matrix")
        return Mat(len(rows), ncols, rows)

    def zeros(self, r: int, c: int) -> Mat:
        z = self.convert(0)
        return Mat(r, c, tuple((z,) * c for _ in range(r)))

    def identity(self, n: int) -> Mat:
        z, o = self.convert(0), self.convert(1)
        return Mat(n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    def matmul(self, A: Mat, B: Mat) -> Mat:
        if A.ncols != B.nrows:
            raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
        cols = list(zip(*B.rows)) if B.nrows else [()] * B.ncols
        z = self.convert(0)
        rows = tuple(
            tuple(self.reduce(sum((a * b for a, b in zip(row, col)), z)) for col in cols)
            for row in A.rows
        )
        return Mat(A.nrows, B.ncols, rows)

    def add(self, A: Mat, B: Mat) -> Mat:
        if A.shape != B.shape:
            raise DimensionError(f"shape mismatch {A.shape} vs {B.shape}")
        return Mat(A.nrows, A.ncols, tuple(tuple(self.reduce(a + b) for a, b in zip(r, s))
                                           for r, s in zip(A.rows, B.rows)))

    def sub(self, A: Mat, B: Mat) -> Mat:
        return self.add(A, self.scale(-1, B))

    def scale(self, s, A: Mat) -> Mat:
        s = self.convert(s)
        return Mat(A.nrows, A.ncols, tuple(tuple(self.reduce(s * a) for a in r) for r in A.rows))

    def is_zero(self, A: Mat) -> bool:
        return all(self.reduce(a) == 0 for r in A.rows for a in r)

    def hstack(self, blocks: Sequence[Mat], nrows: int) -> Mat:
        rows = tuple(sum((b.rows[i] for b in blocks), ()) for i in range(nrows))
        return Mat(nrows, sum(b.ncols for b in blocks), rows)

    def vstack(self, blocks: Sequence[Mat], ncols: int) -> Mat:
        rows = sum((b.rows for b in blocks), ())
        return Mat(len(rows), ncols, rows)

    def rref(self, A: Mat) -> Tuple[List[list], List[int]]:
        m = [list(r) for r in A.rows]
        pivots, r = [], 0
        for c in range(A.ncols):
            piv = next((k for k in range(r, A.nrows) if m[k][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = self.inv(m[r][c])
            m[r] = [self.reduce(x * inv) for x in m[r]]
            for k in range(A.nrows):
                if k != r and m[k][c] != 0:
                    f = m[k][c]
                    m[k] = [self.reduce(a - f * b) for a, b in zip(m[k], m[r])]
            pivots.append(c)
            r += 1
            if r == A.nrows:
                break
        return m, pivots

    def rank(self, A: Mat) -> int:
        return len(self.rref(A)[1])

    def nullspace(self, A: Mat) -> Tuple[Mat, List[int]]:
        """Kernel basis as the columns of a matrix, plus the free column indices.

        Basis vector k is 1 at free index k and 0 at the other free indices,
        so coordinates of a kernel vector are its entries at the free indices.
        """
        m, pivots = self.rref(A)
        free = [c for c in range(A.ncols) if c not in set(pivots)]
        z, o = self.convert(0), self.convert(1)
        cols = []
        for f in free:
            v = [z] * A.ncols
            v[f] = o
            for row_idx, c in enumerate(pivots):
                v[c] = self.reduce(-m[row_idx][f])
            cols.append(v)
        rows = tuple(tuple(col[i] for col in cols) for i in range(A.ncols))
        return Mat(A.ncols, len(free), rows), free


class Rationals(Field):
    name = "QQ"

    def convert(self, x):
        if isinstance(x, GaussianRational):
            if x.im != 0:
                raise PreconditionError("Gaussian rational does not lie in Q")
            return x.re
        return Fraction(x)

    def inv(self, x):
        return 1 / x

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if p <= 3 or not is_prime(p):
            raise PreconditionError(f"need a prime p > 3, got {p}")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def convert(self, x):
        if isinstance(x, GaussianRational):
            if x.im != 0:
                raise PreconditionError("Gaussian rational does not embed in F_p here")
            x = x.re
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise PreconditionError(f"{self.p} divides the denominator of {x}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def reduce(self, x):
        return x % self.p

    def inv(self, x):
        return pow(x, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
