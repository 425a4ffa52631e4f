"""Finite-dimensional representations of deformed preprojective algebras and reflection functors."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import DimensionError, InvalidModule, NoSuchModule, ReflectionIsIdentity
from .linalg import QQ, Field, Mat
from .mckay import QuiverData
from .weyl import dual_reflection_r, simple_reflection_s


@dataclass(frozen=True)
class RepModule:
    """Vector spaces K^{dims[i]} with one matrix per arrow of the doubled quiver.

    ``arrow_maps[a]`` is M_a : M_{t(a)} -> M_{h(a)} and ``star_maps[a]`` is
    M_{a*} : M_{h(a)} -> M_{t(a)}, for a indexing ``Q.arrows``.
    """

    field: Field
    dims: Tuple[int, ...]
    arrow_maps: Tuple[Mat, ...]
    star_maps: Tuple[Mat, ...]

    def check_shapes(self, Q: QuiverData):
        if len(self.dims) != Q.n:
            raise DimensionError("dimension vector length mismatch")
        if len(self.arrow_maps) != len(Q.arrows) or len(self.star_maps) != len(Q.arrows):
            raise DimensionError("one matrix per arrow and per reversed arrow required")
        for a, (t, h) in enumerate(Q.arrows):
            if self.arrow_maps[a].shape != (self.dims[h], self.dims[t]):
                raise DimensionError(f"arrow {a} has shape {self.arrow_maps[a].shape}")
            if self.star_maps[a].shape != (self.dims[t], self.dims[h]):
                raise DimensionError(f"reversed arrow {a} has shape {self.star_maps[a].shape}")


def zero_module(Q: QuiverData, field: Field = QQ) -> RepModule:
    return zero_maps(Q, (0,) * Q.n, field)


def zero_maps(Q: QuiverData, dims: Sequence[int], field: Field = QQ) -> RepModule:
    dims = tuple(dims)
    arrows = tuple(field.zeros(dims[h], dims[t]) for t, h in Q.arrows)
    stars = tuple(field.zeros(dims[t], dims[h]) for t, h in Q.arrows)
    return RepModule(field, dims, arrows, stars)


@dataclass(frozen=True)
class RelationReport:
    ok: bool
    defects: Dict[int, Mat]

    def __bool__(self):
        return self.ok


def check_relations(Q: QuiverData, lam: Sequence, M: RepModule) -> RelationReport:
    """sum_{h(a)=i} M_a M_a* - sum_{t(a)=i} M_a* M_a == lam_i Id at each vertex i."""
    M.check_shapes(Q)
    K = M.field
    lhs = {i: K.zeros(M.dims[i], M.dims[i]) for i in Q.vertices}
    for a, (t, h) in enumerate(Q.arrows):
        lhs[h] = K.add(lhs[h], K.matmul(M.arrow_maps[a], M.star_maps[a]))
        lhs[t] = K.sub(lhs[t], K.matmul(M.star_maps[a], M.arrow_maps[a]))
    defects = {}
    for i in Q.vertices:
        diff = K.sub(lhs[i], K.scale(lam[i], K.identity(M.dims[i])))
        if not K.is_zero(diff):
            defects[i] = diff
    return RelationReport(not defects, defects)


def simple_at(Q: QuiverData, lam: Sequence, i: int, field: Field = QQ) -> RepModule:
    if field.convert(lam[i]) != 0:
        raise NoSuchModule(f"one-dimensional module at vertex {i} needs lam_{i} = 0")
    return zero_maps(Q, Q.unit(i), field)


def _components(Q: QuiverData, i: int):
    """Arrows of the doubled quiver ending at i: (kind, arrow index, source vertex)."""
    comps = []
    for a, (t, h) in enumerate(Q.arrows):
        if h == i:
            comps.append(("a", a, t))
        if t == i:
            comps.append(("star", a, h))
    return comps


def reflect_module(Q: QuiverData, lam: Sequence, i: int, M: RepModule) -> Tuple[tuple, RepModule]:
    """Reflection functor at vertex i: Pi^lam-module -> Pi^{r_i(lam)}-module.

    With S = sum of M_{t(b)} over arrows b of the doubled quiver ending at i,
    mu : S -> M_i assembles those arrows and pi : M_i -> S satisfies
    mu pi = lam_i Id. The new space at i is ker mu; the new incoming map is
    -lam_i times the projection onto ker mu along im pi and the new outgoing
    map is the inclusion.
    """
    K = M.field
    if K.convert(lam[i]) == 0:
        raise ReflectionIsIdentity(f"lam_{i} = 0: the reflection functor is the identity")
    if Q.adjacency[i][i]:
        raise ValueError(f"vertex {i} carries a loop")
    report = check_relations(Q, lam, M)
    if not report.ok:
        raise InvalidModule(f"relations fail at vertices {sorted(report.defects)}")
    li = K.convert(lam[i])
    di = M.dims[i]
    comps = _components(Q, i)
    offsets, total = [], 0
    for _, _, src in comps:
        offsets.append(total)
        total += M.dims[src]

    mu_blocks, pi_blocks = [], []
    for kind, a, src in comps:
        if kind == "a":
            mu_blocks.append(M.arrow_maps[a])
            pi_blocks.append(M.star_maps[a])
        else:
            mu_blocks.append(M.star_maps[a])
            pi_blocks.append(K.scale(-1, M.arrow_maps[a]))
    mu = K.hstack(mu_blocks, di)
    pi = K.vstack(pi_blocks, di)

    iota, free = K.nullspace(mu)
    k = len(free)
    complement = K.scale(K.inv(li), K.matmul(pi, mu))
    proj = K.sub(K.identity(total), complement).select_rows(free)
    mu_new = K.scale(-li, proj)
    pi_new = iota

    arrows = list(M.arrow_maps)
    stars = list(M.star_maps)
    for (kind, a, src), off in zip(comps, offsets):
        stop = off + M.dims[src]
        if kind == "a":
            arrows[a] = mu_new.col_block(off, stop)
            stars[a] = pi_new.row_block(off, stop)
        else:
            stars[a] = mu_new.col_block(off, stop)
            arrows[a] = K.scale(-1, pi_new.row_block(off, stop))
    dims = list(M.dims)
    dims[i] = k
    new = RepModule(K, tuple(dims), tuple(arrows), tuple(stars))
    expected = simple_reflection_s(Q, i, M.dims)
    if new.dims != expected:
        raise AssertionError(f"dimension vector {new.dims} != s_i(dim) = {expected}")
    return dual_reflection_r(Q, i, lam), new


def apply_reflections(Q: QuiverData, lam: Sequence, vertices: Sequence[int], M: RepModule):
    """Apply reflection functors in the given order; a vanishing lam_i acts as identity."""
    lam = tuple(lam)
    for i in vertices:
        try:
            lam, M = reflect_module(Q, lam, i, M)
        except ReflectionIsIdentity:
            pass
    return lam, M


# ---------------------------------------------------------------------------
# isomorphism testing


def _hom_space(Q: QuiverData, M: RepModule, N: RepModule) -> List[List[Mat]]:
    """Basis of vertex-wise intertwiners phi with phi_h M_b = N_b phi_t for all b."""
    K = M.field
    dims = M.dims
    offsets, total = [], 0
    for d in dims:
        offsets.append(total)
        total += d * d

    def var(j, r, c):
        return offsets[j] + r * dims[j] + c

    zero = K.convert(0)
    equations = []

    def add_equations(src, dst, A: Mat, B: Mat):
        # phi_dst A - B phi_src = 0, where A = M_b and B = N_b
        for r in range(dims[dst]):
            for c in range(dims[src]):
                row = [zero] * total
                for kk in range(dims[dst]):
                    row[var(dst, r, kk)] = K.reduce(row[var(dst, r, kk)] + A[kk, c])
                for kk in range(dims[src]):
                    row[var(src, kk, c)] = K.reduce(row[var(src, kk, c)] - B[r, kk])
                equations.append(row)

    for a, (t, h) in enumerate(Q.arrows):
        add_equations(t, h, M.arrow_maps[a], N.arrow_maps[a])
        add_equations(h, t, M.star_maps[a], N.star_maps[a])
    basis_mat, _ = K.nullspace(Mat(len(equations), total, tuple(tuple(e) for e in equations)))
    basis = []
    for col in range(basis_mat.ncols):
        vec = [basis_mat[r, col] for r in range(total)]
        blocks = []
        for j, d in enumerate(dims):
            o = offsets[j]
            blocks.append(Mat(d, d, tuple(tuple(vec[o + r * d: o + r * d + d]) for r in range(d))))
        basis.append(blocks)
    return basis


def _combine(K: Field, basis, coeffs):
    out = []
    for j in range(len(basis[0])):
        acc = K.zeros(*basis[0][j].shape)
        for c, b in zip(coeffs, basis):
            if c:
                acc = K.add(acc, K.scale(c, b[j]))
        out.append(acc)
    return out


def _invertible(K: Field, blocks) -> bool:
    return all(K.rank(b) == b.nrows for b in blocks)


def module_iso(Q: QuiverData, M: RepModule, N: RepModule, attempts: int = 12, seed: int = 0) -> bool:
    """Whether an invertible intertwiner M -> N exists.

    Random elements of the intertwiner space are tried first; a nonzero
    determinant polynomial of degree D is nonzero somewhere on any grid
    with D + 1 values per coordinate, which gives the deterministic fallback
    when that grid is small.
    """
    if M.field != N.field:
        raise ValueError("modules over different fields")
    M.check_shapes(Q)
    N.check_shapes(Q)
    if M.dims != N.dims:
        return False
    if sum(M.dims) == 0:
        return True
    K = M.field
    basis = _hom_space(Q, M, N)
    if not basis:
        return False
    rng = random.Random(seed)
    span = K.characteristic - 1 if K.characteristic else 10 ** 6
    for _ in range(attempts):
        coeffs = [rng.randint(1, span) for _ in basis]
        if _invertible(K, _combine(K, basis, coeffs)):
            return True
    degree = sum(M.dims)
    values = range(min(degree + 1, K.characteristic or degree + 1))
    if len(values) ** len(basis) > 20000:
        return False
    for coeffs in itertools.product(values, repeat=len(basis)):
        if _invertible(K, _combine(K, basis, coeffs)):
            return True
    return False
