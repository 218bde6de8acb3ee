"""Corepresentations of M(n, s, q) as nilpotent representations of the
cyclic quiver.

A comodule over the length-d truncated cycle coalgebra is stored on the
module side: a dimension vector over the n vertices plus an arrow matrix
per vertex, with every composite of d consecutive arrows zero.  All
decomposition machinery is exact linear algebra over CycloNum; the one
floating-point computation is the power iteration inside
:func:`fp_dimension`, which is always compared against an exact row-sum
certificate.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .cyclo import CycloNum, cached_mul
from .quiver import Path, PathVector
from .algebra import MajidAlgebra

__all__ = [
    "CycleModule",
    "IntervalModule",
    "FusionData",
    "NotAComoduleError",
    "indecomposables",
    "decompose",
    "brute_force_decompose",
    "brute_force_indecomposables",
    "comodule_tensor",
    "tensor_consistency_check",
    "fusion_data",
    "fp_dimension",
    "uniserial_check",
    "is_indecomposable",
    "hom_dim",
    "random_module",
    "direct_sum",
]


class NotAComoduleError(ValueError):
    """The arrow matrices violate the length-d nilpotency relation."""


# ---------------------------------------------------------------------------
# exact linear algebra over CycloNum
# ---------------------------------------------------------------------------

_ZERO = CycloNum.zero()
_ONE = CycloNum.one()


def _mat(rows, cols, fill=None):
    return [[fill if fill is not None else _ZERO for _ in range(cols)]
            for _ in range(rows)]


def _mat_mul(A, B):
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    out = _mat(rows, cols)
    for i in range(rows):
        for k in range(inner):
            a = A[i][k]
            if a.is_zero():
                continue
            for j in range(cols):
                b = B[k][j]
                if not b.is_zero():
                    out[i][j] = out[i][j] + cached_mul(a, b)
    return out


def _rank(A) -> int:
    """Row-echelon rank by exact Gaussian elimination."""
    if not A or not A[0]:
        return 0
    M = [row[:] for row in A]
    rows, cols = len(M), len(M[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if not M[i][c].is_zero()), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        M[r] = [cached_mul(x, inv) for x in M[r]]
        for i in range(rows):
            if i != r and not M[i][c].is_zero():
                f = M[i][c]
                M[i] = [M[i][j] - cached_mul(f, M[r][j]) for j in range(cols)]
        r += 1
        if r == rows:
            break
    return r


def _nullity(A, cols: int) -> int:
    return cols - _rank(A)


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------


class CycleModule:
    """A representation of the bound cycle quiver: dims[i] at vertex i and
    arrows[i]: V_i -> V_{i+1 mod n}, with d-fold composites zero."""

    def __init__(self, n: int, d: int, dims, arrows, check: bool = True):
        self.n = n
        self.d = d
        self.dims = tuple(int(x) for x in dims)
        if len(self.dims) != n or any(x < 0 for x in self.dims):
            raise ValueError("dimension vector must have n non-negative entries")
        self.arrows = [
            [[x if isinstance(x, CycloNum) else CycloNum.from_rational(x)
              for x in row] for row in mat]
            for mat in arrows
        ]
        for i, mat in enumerate(self.arrows):
            rows, cols = self.dims[(i + 1) % n], self.dims[i]
            if len(mat) != rows or any(len(row) != cols for row in mat):
                raise ValueError(f"arrow {i} has the wrong shape")
        if check:
            self._check_nilpotent()

    def _check_nilpotent(self):
        for i in range(self.n):
            if any(not x.is_zero() for row in self.composite(i, self.d)
                   for x in row):
                raise NotAComoduleError(
                    f"length-{self.d} composite from vertex {i} is nonzero"
                )

    def total_dim(self) -> int:
        return sum(self.dims)

    def composite(self, i: int, k: int):
        """The composite of k consecutive arrows starting at vertex i,
        always of shape dims[i+k] x dims[i] even through zero vertices."""
        i %= self.n
        cols = self.dims[i]
        out = [[_ONE if a == b else _ZERO for b in range(cols)]
               for a in range(cols)]
        for t in range(k):
            A = self.arrows[(i + t) % self.n]
            rows = self.dims[(i + t + 1) % self.n]
            new = _mat(rows, cols)
            for r in range(rows):
                for mid in range(len(out)):
                    a = A[r][mid]
                    if a.is_zero():
                        continue
                    for c in range(cols):
                        b = out[mid][c]
                        if not b.is_zero():
                            new[r][c] = new[r][c] + cached_mul(a, b)
            out = new
        return out

    def rank_profile(self, i: int, k: int) -> int:
        """r(i, k): rank of the k-fold composite from vertex i."""
        if k == 0:
            return self.dims[i % self.n]
        if k >= self.d:
            return 0
        return _rank(self.composite(i, k))

    def to_json(self) -> dict:
        return {
            "n": self.n, "d": self.d, "dims": list(self.dims),
            "arrows": [[[x.to_json() for x in row] for row in mat]
                       for mat in self.arrows],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CycleModule":
        arrows = [
            [[CycloNum.from_json(x) for x in row] for row in mat]
            for mat in doc["arrows"]
        ]
        return cls(doc["n"], doc["d"], doc["dims"], arrows)


@dataclass(frozen=True)
class IntervalModule:
    """The uniserial string module with top vertex `top` and length ell:
    one basis vector on each of the vertices top, top+1, ..., top+ell-1,
    consecutive arrows acting as shifts."""

    n: int
    d: int
    top: int
    length: int

    def __post_init__(self):
        if not 1 <= self.length <= self.d:
            raise ValueError("interval length must satisfy 1 <= length <= d")
        object.__setattr__(self, "top", self.top % self.n)

    def dims(self):
        out = [0] * self.n
        for k in range(self.length):
            out[(self.top + k) % self.n] += 1
        return tuple(out)

    def realize(self) -> CycleModule:
        n, i, ell = self.n, self.top, self.length
        dims = self.dims()
        slots = [[] for _ in range(n)]  # basis indices k living at each vertex
        for k in range(ell):
            slots[(i + k) % n].append(k)
        arrows = []
        for v in range(n):
            mat = _mat(dims[(v + 1) % n], dims[v])
            for col, k in enumerate(slots[v]):
                if k + 1 < ell:
                    mat[slots[(v + 1) % n].index(k + 1)][col] = _ONE
            arrows.append(mat)
        return CycleModule(n, self.d, dims, arrows)

    def simple_class(self):
        """Image in the Grothendieck group: multiplicity of each simple."""
        return self.dims()

    def __str__(self):
        return f"I({self.top},{self.length})"


def parse_interval(text: str, n: int, d: int) -> IntervalModule:
    import re
    m = re.match(r"^\s*I\(\s*(-?\d+)\s*,\s*(\d+)\s*\)\s*$", text)
    if not m:
        raise ValueError(f"cannot parse interval literal {text!r}")
    return IntervalModule(n, d, int(m.group(1)), int(m.group(2)))


def indecomposables(n: int, d: int) -> list[IntervalModule]:
    """The n*d interval modules, the complete list of indecomposables."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    return [IntervalModule(n, d, i, ell)
            for ell in range(1, d + 1) for i in range(n)]


def direct_sum(mods) -> CycleModule:
    mods = list(mods)
    if not mods:
        raise ValueError("empty direct sum")
    n, d = mods[0].n, mods[0].d
    if any(m.n != n or m.d != d for m in mods):
        raise ValueError("mixed parameters in direct sum")
    dims = tuple(sum(m.dims[v] for m in mods) for v in range(n))
    arrows = []
    for v in range(n):
        mat = _mat(dims[(v + 1) % n], dims[v])
        ro = co = 0
        for m in mods:
            for r in range(m.dims[(v + 1) % n]):
                for c in range(m.dims[v]):
                    mat[ro + r][co + c] = m.arrows[v][r][c]
            ro += m.dims[(v + 1) % n]
            co += m.dims[v]
        arrows.append(mat)
    return CycleModule(n, d, dims, arrows)


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------


def decompose(M: CycleModule) -> dict:
    """Krull-Schmidt multiplicities {(top, length): mult} by the rank
    profile of iterated arrow composites."""
    n, d = M.n, M.d

    def r(i, k):
        if k < 0:
            raise ValueError
        return M.rank_profile(i, k)

    out = {}
    for i in range(n):
        for ell in range(1, d + 1):
            mult = (r(i, ell - 1) - r(i, ell)) - (r(i - 1, ell) - r(i - 1, ell + 1))
            if mult < 0:
                raise NotAComoduleError("negative multiplicity from rank profile")
            if mult:
                out[(i, ell)] = mult
    # reconstruction identity
    recon = [0] * n
    for (i, ell), mult in out.items():
        for k in range(ell):
            recon[(i + k) % n] += mult
    if tuple(recon) != M.dims:
        raise NotAComoduleError("rank profile does not reassemble the dimensions")
    return out


def hom_dim(X: CycleModule, Y: CycleModule) -> int:
    """dim Hom(X, Y): maps f_v with Y_v f_v = f_{v+1} X_v, exact kernel."""
    if (X.n, X.d) != (Y.n, Y.d):
        raise ValueError("mixed parameters in hom_dim")
    n = X.n
    # unknowns: entries of f_v (Y.dims[v] x X.dims[v]), flattened
    offsets = []
    total = 0
    for v in range(n):
        offsets.append(total)
        total += Y.dims[v] * X.dims[v]
    rows = []
    for v in range(n):
        w = (v + 1) % n
        # (Y.arrows[v] f_v - f_w X.arrows[v])[a][b] = 0
        for a in range(Y.dims[w]):
            for b in range(X.dims[v]):
                row = [_ZERO] * total
                for k in range(Y.dims[v]):
                    c = Y.arrows[v][a][k]
                    if not c.is_zero():
                        row[offsets[v] + k * X.dims[v] + b] = \
                            row[offsets[v] + k * X.dims[v] + b] + c
                for k in range(X.dims[w]):
                    c = X.arrows[v][k][b]
                    if not c.is_zero():
                        idx = offsets[w] + a * X.dims[w] + k
                        row[idx] = row[idx] - c
                if any(not x.is_zero() for x in row):
                    rows.append(row)
    return _nullity(rows, total)


def _interval_hom_table(n: int, d: int):
    """dim Hom(I, J) for all interval pairs, computed once per (n, d)."""
    intervals = indecomposables(n, d)
    realized = {(I.top, I.length): I.realize() for I in intervals}
    table = {}
    for I in intervals:
        for J in intervals:
            table[(I.top, I.length), (J.top, J.length)] = hom_dim(
                realized[(I.top, I.length)], realized[(J.top, J.length)]
            )
    return intervals, realized, table


def brute_force_decompose(M: CycleModule) -> dict:
    """Independent summand search: enumerate every multiset of intervals
    matching the dimension vector and keep the one whose Hom-dimension
    fingerprint against all intervals agrees with M."""
    n, d = M.n, M.d
    intervals, realized, table = _interval_hom_table(n, d)
    fingerprint = {
        (I.top, I.length): hom_dim(realized[(I.top, I.length)], M)
        for I in intervals
    }
    keys = [(I.top, I.length) for I in intervals]
    dimvecs = {k: IntervalModule(n, d, *k).dims() for k in keys}
    target = M.dims
    matches = []

    def search(idx, remaining, counts):
        if idx == len(keys):
            if all(x == 0 for x in remaining):
                fp = {
                    k: sum(c * table[(k, k2)] for k2, c in counts.items())
                    for k in keys
                }
                if fp == fingerprint:
                    matches.append({k: c for k, c in counts.items() if c})
            return
        k = keys[idx]
        dv = dimvecs[k]
        cap = min(
            (remaining[v] // dv[v] for v in range(n) if dv[v]), default=0
        )
        for c in range(cap, -1, -1):
            counts[k] = c
            nxt = tuple(remaining[v] - c * dv[v] for v in range(n))
            search(idx + 1, nxt, counts)
        counts.pop(k, None)

    search(0, target, {})
    if not matches:
        raise NotAComoduleError("no interval multiset matches the module")
    first = matches[0]
    if any(m != first for m in matches[1:]):
        raise RuntimeError("ambiguous summand search (non-unique fingerprint)")
    return first


def is_indecomposable(M: CycleModule) -> bool:
    """End(M) is local: its semisimple quotient is one-dimensional.

    The radical of End(M) in characteristic zero is the kernel of the
    trace form tr(xy) on a basis of End(M).
    """
    basis = _end_basis(M)
    if not basis:
        return False  # the zero module
    k = len(basis)
    gram = _mat(k, k)
    for a in range(k):
        for b in range(k):
            prod = [_mat_mul(basis[a][v], basis[b][v]) for v in range(M.n)]
            tr = CycloNum.zero()
            for v in range(M.n):
                for t in range(M.dims[v]):
                    tr = tr + prod[v][t][t]
            gram[a][b] = tr
    return k - _rank(gram) == k - 1


def _end_basis(M: CycleModule):
    """A basis of End(M), each element a tuple of per-vertex matrices."""
    n = M.n
    offsets = []
    total = 0
    for v in range(n):
        offsets.append(total)
        total += M.dims[v] * M.dims[v]
    rows = []
    for v in range(n):
        w = (v + 1) % n
        for a in range(M.dims[w]):
            for b in range(M.dims[v]):
                row = [_ZERO] * total
                for k in range(M.dims[v]):
                    c = M.arrows[v][a][k]
                    if not c.is_zero():
                        idx = offsets[v] + k * M.dims[v] + b
                        row[idx] = row[idx] + c
                for k in range(M.dims[w]):
                    c = M.arrows[v][k][b]
                    if not c.is_zero():
                        idx = offsets[w] + a * M.dims[w] + k
                        row[idx] = row[idx] - c
                if any(not x.is_zero() for x in row):
                    rows.append(row)
    vecs = _kernel_basis(rows, total)
    out = []
    for vec in vecs:
        mats = []
        for v in range(n):
            m = _mat(M.dims[v], M.dims[v])
            for a in range(M.dims[v]):
                for b in range(M.dims[v]):
                    m[a][b] = vec[offsets[v] + a * M.dims[v] + b]
            mats.append(m)
        out.append(tuple(mats))
    return out


def _kernel_basis(rows, cols):
    """Basis of the kernel of the row system, exact."""
    if cols == 0:
        return []
    M = [row[:] for row in rows]
    nr = len(M)
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, nr) if not M[i][c].is_zero()), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        M[r] = [cached_mul(x, inv) for x in M[r]]
        for i in range(nr):
            if i != r and not M[i][c].is_zero():
                f = M[i][c]
                M[i] = [M[i][j] - cached_mul(f, M[r][j]) for j in range(cols)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    free = [c for c in range(cols) if c not in set(pivots)]
    out = []
    for fc in free:
        vec = [_ZERO] * cols
        vec[fc] = _ONE
        for ri, pc in enumerate(pivots):
            vec[pc] = -M[ri][fc] if ri < len(M) else _ZERO
        out.append(vec)
    return out


def uniserial_check(M: CycleModule) -> bool:
    """True iff the radical series of M has one-dimensional layers, i.e.
    the submodule lattice is a chain."""
    total = M.total_dim()
    if total == 0:
        return True
    sizes = [total]
    for k in range(1, M.d + 1):
        dim_rad_k = sum(M.rank_profile(i, k) for i in range(M.n))
        sizes.append(dim_rad_k)
        if dim_rad_k == 0:
            break
    layers = [sizes[t] - sizes[t + 1] for t in range(len(sizes) - 1)]
    return all(x == 1 for x in layers) and sizes[-1] == 0


# ---------------------------------------------------------------------------
# brute-force enumeration of indecomposables
# ---------------------------------------------------------------------------


def _partial_injections(rows: int, cols: int):
    """All 0/1 matrices with at most one 1 per row and per column."""
    out = []
    for k in range(min(rows, cols) + 1):
        for rsel in itertools.combinations(range(rows), k):
            for csel in itertools.permutations(range(cols), k):
                m = _mat(rows, cols)
                for r, c in zip(rsel, csel):
                    m[r][c] = _ONE
                out.append(m)
    return out


def brute_force_indecomposables(n: int, d: int, max_total: int):
    """Enumerate nilpotent cycle representations in shift normal form
    (every arrow a partial injection 0/1 matrix) up to the total
    dimension bound, filter the indecomposable ones with the exact
    End-local test and bucket them into isomorphism classes by their
    Hom fingerprint.  Returns the list of class fingerprints."""
    intervals = indecomposables(n, d)
    realized = [I.realize() for I in intervals]
    classes = {}
    for dims in itertools.product(range(max_total + 1), repeat=n):
        if not 0 < sum(dims) <= max_total:
            continue
        choices = [
            _partial_injections(dims[(v + 1) % n], dims[v]) for v in range(n)
        ]
        for arrows in itertools.product(*choices):
            try:
                M = CycleModule(n, d, dims, arrows)
            except NotAComoduleError:
                continue
            if not is_indecomposable(M):
                continue
            fp = (dims, tuple(hom_dim(R, M) for R in realized),
                  tuple(hom_dim(M, R) for R in realized))
            classes.setdefault(fp, M)
    return list(classes)


# ---------------------------------------------------------------------------
# tensor products and fusion
# ---------------------------------------------------------------------------


def comodule_tensor(M: MajidAlgebra, X: CycleModule, Y: CycleModule) -> CycleModule:
    """X tensor Y with the coaction pushed through M's multiplication.

    A basis vector x (x) y with x at vertex i and y at vertex j sits at
    vertex i+j; the degree-1 component of its coaction is
    coef(p(i,1) p(j,0)) (Ax)(x)y + coef(p(i,0) p(j,1)) x(x)(By).
    """
    n, d = M.n, M.d
    if (X.n, X.d) != (n, d) or (Y.n, Y.d) != (n, d):
        raise ValueError("tensor factors built over different parameters")
    # index blocks: vertex v hosts pairs (i, j) with i+j = v mod n
    blocks = {v: [] for v in range(n)}  # (i, j, x_index, y_index) -> position
    pos = {}
    for i in range(n):
        for j in range(n):
            v = (i + j) % n
            for a in range(X.dims[i]):
                for b in range(Y.dims[j]):
                    pos[(i, j, a, b)] = len(blocks[v])
                    blocks[v].append((i, j, a, b))
    dims = tuple(len(blocks[v]) for v in range(n))
    arrows = []
    for v in range(n):
        w = (v + 1) % n
        mat = _mat(dims[w], dims[v])
        for col, (i, j, a, b) in enumerate(blocks[v]):
            cx, _ = M.product(Path(n, i, 1), Path(n, j, 0))
            cy, _ = M.product(Path(n, i, 0), Path(n, j, 1))
            for r in range(X.dims[(i + 1) % n]):
                e = X.arrows[i][r][a]
                if not e.is_zero():
                    mat[pos[((i + 1) % n, j, r, b)]][col] = \
                        mat[pos[((i + 1) % n, j, r, b)]][col] + cached_mul(cx, e)
            for r in range(Y.dims[(j + 1) % n]):
                e = Y.arrows[j][r][b]
                if not e.is_zero():
                    row = pos[(i, (j + 1) % n, a, r)]
                    mat[row][col] = mat[row][col] + cached_mul(cy, e)
        arrows.append(mat)
    return CycleModule(n, d, dims, arrows)


def tensor_consistency_check(M: MajidAlgebra, X: CycleModule, Y: CycleModule,
                             T: CycleModule | None = None) -> bool:
    """Higher coaction components of the computed tensor module.

    The degree-k component of the coaction on x (x) y is
    sum_{a+b=k} coef(p(i,a) p(j,b)) (A^a x) (x) (B^b y); this must agree
    with the k-fold arrow composite of the tensor module for every k.
    """
    n, d = M.n, M.d
    if T is None:
        T = comodule_tensor(M, X, Y)
    pos = {}
    blocks = {v: [] for v in range(n)}
    for i in range(n):
        for j in range(n):
            v = (i + j) % n
            for a in range(X.dims[i]):
                for b in range(Y.dims[j]):
                    pos[(i, j, a, b)] = len(blocks[v])
                    blocks[v].append((i, j, a, b))
    for k in range(d + 1):
        for v in range(n):
            comp = T.composite(v, k)
            want = _mat(len(blocks[(v + k) % n]), len(blocks[v]))
            for col, (i, j, a, b) in enumerate(blocks[v]):
                for t in range(k + 1):
                    u = k - t
                    if t >= d or u >= d:
                        continue
                    coeff, target = M.product(Path(n, i, t), Path(n, j, u))
                    if target is None or coeff.is_zero():
                        continue
                    Ax = X.composite(i, t)
                    By = Y.composite(j, u)
                    for r in range(X.dims[(i + t) % n]):
                        if Ax[r][a].is_zero():
                            continue
                        for s2 in range(Y.dims[(j + u) % n]):
                            if By[s2][b].is_zero():
                                continue
                            row = pos[((i + t) % n, (j + u) % n, r, s2)]
                            want[row][col] = want[row][col] + cached_mul(
                                coeff, cached_mul(Ax[r][a], By[s2][b])
                            )
            if comp != want:
                return False
    return True


def fusion_data(M: MajidAlgebra):
    """Fusion matrices of the n simple comodules, computed by decomposing
    the tensor products (not read off the group)."""
    n, d = M.n, M.d
    simples = [IntervalModule(n, d, i, 1).realize() for i in range(n)]
    matrices = []
    for i in range(n):
        mat = [[0] * n for _ in range(n)]
        for j in range(n):
            T = comodule_tensor(M, simples[i], simples[j])
            for (top, ell), mult in decompose(T).items():
                if ell != 1:
                    raise RuntimeError("simple tensor simple is not simple")
                mat[top][j] = mult
        matrices.append(mat)
    return FusionData(n=n, matrices=matrices)


@dataclass
class FusionData:
    """The Grothendieck ring data: n simple classes and the left
    multiplication matrices of the simples."""

    n: int
    matrices: list

    def left_multiplication(self, cls_vector):
        """Matrix of left multiplication by sum_i cls_vector[i] [V_i]."""
        n = self.n
        out = [[0] * n for _ in range(n)]
        for i, c in enumerate(cls_vector):
            if c:
                for r in range(n):
                    for col in range(n):
                        out[r][col] += c * self.matrices[i][r][col]
        return out


def fp_dimension(F: FusionData, cls_vector):
    """Frobenius-Perron dimension of a Grothendieck class.

    Returns (value, certificate): `value` from floating-point power
    iteration to 1e-9, `certificate` the exact common row sum when the
    multiplication matrix is a non-negative integer combination of
    permutation matrices (always the case here), else None.
    """
    mat = F.left_multiplication(cls_vector)
    n = F.n
    if all(x == 0 for row in mat for x in row):
        return 0.0, 0
    # power iteration (the single floating-point computation)
    A = np.array(mat, dtype=float)
    v = np.ones(n) / n
    value = 0.0
    for _ in range(10000):
        w = A @ v
        norm = np.linalg.norm(w)
        if norm == 0:
            value = 0.0
            break
        w /= norm
        new = float(w @ A @ w)
        if abs(new - value) < 1e-12:
            value = new
            break
        value = new
    # exact certificate: combination of permutations <=> all row and
    # column sums equal; the Perron value is that common sum
    row_sums = {sum(row) for row in mat}
    col_sums = {sum(mat[r][c] for r in range(n)) for c in range(n)}
    certificate = row_sums.pop() if len(row_sums) == 1 and len(col_sums) == 1 \
        else None
    return value, certificate


# ---------------------------------------------------------------------------
# random modules
# ---------------------------------------------------------------------------


def random_module(n: int, d: int, rng: random.Random, max_total: int = 9):
    """A random nilpotent cycle representation with a scrambled basis:
    a random multiset of intervals conjugated by random unimodular
    integer matrices at every vertex.  Returns (module, multiset)."""
    intervals = indecomposables(n, d)
    parts = []
    total = 0
    while True:
        I = rng.choice(intervals)
        if total + I.length > max_total:
            break
        parts.append(I)
        total += I.length
        if total == max_total or (parts and rng.random() < 0.25):
            break
    if not parts:
        parts = [rng.choice([I for I in intervals if I.length <= max_total])]
    M = direct_sum([I.realize() for I in parts])
    # conjugate: new arrows U_{v+1} A_v U_v^{-1} with unimodular U_v
    us = [_random_unimodular(M.dims[v], rng) for v in range(n)]
    uinvs = [_unimodular_inverse(u) for u in us]
    arrows = [
        _mat_mul(_mat_mul(us[(v + 1) % n], M.arrows[v]), uinvs[v])
        for v in range(n)
    ]
    multiset = {}
    for I in parts:
        key = (I.top, I.length)
        multiset[key] = multiset.get(key, 0) + 1
    return CycleModule(n, d, M.dims, arrows), multiset


def _random_unimodular(k: int, rng: random.Random):
    out = [[_ONE if a == b else _ZERO for b in range(k)] for a in range(k)]
    if k < 2:
        return out
    for _ in range(2 * k):
        a, b = rng.randrange(k), rng.randrange(k)
        if a == b:
            continue
        shear = [[_ONE if x == y else _ZERO for y in range(k)] for x in range(k)]
        shear[a][b] = CycloNum.from_rational(rng.randint(-2, 2))
        out = _mat_mul(shear, out)
    return out


def _unimodular_inverse(U):
    """Invert an integer unimodular matrix by Gauss-Jordan, exact."""
    k = len(U)
    M = [row[:] + [_ONE if i == j else _ZERO for j in range(k)]
         for i, row in enumerate(U)]
    for c in range(k):
        piv = next(i for i in range(c, k) if not M[i][c].is_zero())
        M[c], M[piv] = M[piv], M[c]
        inv = M[c][c].inverse()
        M[c] = [cached_mul(x, inv) for x in M[c]]
        for i in range(k):
            if i != c and not M[i][c].is_zero():
                f = M[i][c]
                M[i] = [M[i][j] - cached_mul(f, M[c][j]) for j in range(2 * k)]
    return [row[k:] for row in M]
