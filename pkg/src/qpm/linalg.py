"""Exact sparse linear algebra over Q(zeta_N).

Everything here is plain Gaussian elimination with one field inversion per
pivot (pivot rows are normalized to a unit pivot, elimination itself is
multiply-subtract).  Matrices are small in this project -- at most a few
hundred rows -- so no fraction-free bookkeeping is needed.
"""

from __future__ import annotations

from .cyclotomic import Cyclo, CycloContext

__all__ = ["SparseMat", "nullspace", "solve_in_span", "rank", "invert_dense", "mat_mul_dense"]


class SparseMat:
    """Sparse matrix over Cyclo with dict-of-entries storage."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, nrows: int, ncols: int, data: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.data = data or {}

    def set(self, i, j, v: Cyclo):
        if v.is_zero():
            self.data.pop((i, j), None)
        else:
            self.data[(i, j)] = v

    def get(self, i, j, zero):
        return self.data.get((i, j), zero)

    def add_to(self, i, j, v: Cyclo):
        key = (i, j)
        cur = self.data.get(key)
        if cur is None:
            if not v.is_zero():
                self.data[key] = v
        else:
            s = cur + v
            if s.is_zero():
                del self.data[key]
            else:
                self.data[key] = s

    def __mul__(self, other: "SparseMat") -> "SparseMat":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        rows_b = {}
        for (k, j), v in other.data.items():
            rows_b.setdefault(k, []).append((j, v))
        out = {}
        for (i, k), v in self.data.items():
            br = rows_b.get(k)
            if not br:
                continue
            for j, w in br:
                key = (i, j)
                prod = v * w
                if key in out:
                    out[key] = out[key] + prod
                else:
                    out[key] = prod
        return SparseMat(self.nrows, other.ncols,
                         {k: v for k, v in out.items() if not v.is_zero()})

    def __add__(self, other: "SparseMat") -> "SparseMat":
        out = dict(self.data)
        for k, v in other.data.items():
            if k in out:
                s = out[k] + v
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = v
        return SparseMat(self.nrows, self.ncols, out)

    def __sub__(self, other: "SparseMat") -> "SparseMat":
        return self + other.scale(-1)

    def scale(self, s) -> "SparseMat":
        if isinstance(s, int):
            if s == 0:
                return SparseMat(self.nrows, self.ncols, {})
            return SparseMat(self.nrows, self.ncols,
                             {k: v * s for k, v in self.data.items()})
        if s.is_zero():
            return SparseMat(self.nrows, self.ncols, {})
        out = {k: v * s for k, v in self.data.items()}
        return SparseMat(self.nrows, self.ncols,
                         {k: v for k, v in out.items() if not v.is_zero()})

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other):
        return (isinstance(other, SparseMat) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.data == other.data)

    def kron(self, other: "SparseMat") -> "SparseMat":
        out = {}
        n2, m2 = other.nrows, other.ncols
        for (i1, j1), v1 in self.data.items():
            for (i2, j2), v2 in other.data.items():
                out[(i1 * n2 + i2, j1 * m2 + j2)] = v1 * v2
        return SparseMat(self.nrows * n2, self.ncols * m2, out)

    def trace(self, ctx: CycloContext) -> Cyclo:
        out = ctx.zero
        for (i, j), v in self.data.items():
            if i == j:
                out = out + v
        return out

    def apply(self, vec: dict) -> dict:
        """Matrix times sparse column vector {index: Cyclo}."""
        out = {}
        cols = {}
        for (i, j), v in self.data.items():
            cols.setdefault(j, []).append((i, v))
        for j, x in vec.items():
            for i, v in cols.get(j, ()):
                if i in out:
                    out[i] = out[i] + v * x
                else:
                    out[i] = v * x
        return {i: v for i, v in out.items() if not v.is_zero()}

    @staticmethod
    def identity(n: int, ctx: CycloContext) -> "SparseMat":
        return SparseMat(n, n, {(i, i): ctx.one for i in range(n)})

    @staticmethod
    def diagonal(values) -> "SparseMat":
        n = len(values)
        return SparseMat(n, n, {(i, i): v for i, v in enumerate(values)
                                if not v.is_zero()})


def _eliminate(rows, ncols):
    """Forward elimination on a list of sparse rows (dicts {col: Cyclo}).
    Returns (pivots, echelon_rows) with echelon rows normalized to unit
    pivots and fully reduced above and below."""
    echelon = []   # list of (pivot_col, row_dict)
    for row in rows:
        row = dict(row)
        for pc, prow in echelon:
            c = row.get(pc)
            if c is None:
                continue
            # row -= c * prow  (prow has unit pivot)
            for j, v in prow.items():
                w = row.get(j)
                nv = (w - c * v) if w is not None else -(c * v)
                if nv.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = nv
        row = {j: v for j, v in row.items() if not v.is_zero()}
        if not row:
            continue
        # choose sparsest-support pivot heuristically: smallest column index
        pc = min(row)
        piv_inv = row[pc].inv()
        row = {j: v * piv_inv for j, v in row.items()}
        # back-substitute into existing rows
        for idx, (pc2, prow2) in enumerate(echelon):
            c = prow2.get(pc)
            if c is None:
                continue
            new = dict(prow2)
            for j, v in row.items():
                w = new.get(j)
                nv = (w - c * v) if w is not None else -(c * v)
                if nv.is_zero():
                    new.pop(j, None)
                else:
                    new[j] = nv
            echelon[idx] = (pc2, new)
        echelon.append((pc, row))
    echelon.sort(key=lambda t: t[0])
    return echelon


def rank(rows, ncols: int) -> int:
    return len(_eliminate(rows, ncols))


def nullspace(rows, ncols: int, ctx: CycloContext):
    """Nullspace basis of the linear map given by sparse rows over ncols
    unknowns; returns a list of dense coefficient lists."""
    echelon = _eliminate(rows, ncols)
    pivots = {pc for pc, _ in echelon}
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [ctx.zero] * ncols
        vec[f] = ctx.one
        for pc, prow in echelon:
            c = prow.get(f)
            if c is not None:
                vec[pc] = -c
        basis.append(vec)
    return basis


class SpanSolver:
    """Precomputed echelon form of a fixed set of spanning vectors, for
    repeated membership queries and coordinate extraction."""

    def __init__(self, vectors, ctx: CycloContext):
        """vectors: list of sparse dicts {key: Cyclo} over arbitrary hashable
        coordinates."""
        self.ctx = ctx
        self.vectors = vectors
        keys = set()
        for v in vectors:
            keys.update(v)
        self.keys = sorted(keys)
        self.key_index = {k: i for i, k in enumerate(self.keys)}
        # augmented rows: [vector | e_i]
        n = len(self.keys)
        self.n = n
        self.nvec = len(vectors)
        rows = []
        for i, v in enumerate(vectors):
            row = {self.key_index[k]: c for k, c in v.items()}
            row[n + i] = ctx.one
            rows.append(row)
        self._echelon = _eliminate(rows, n + len(vectors))
        self.rank = sum(1 for pc, _ in self._echelon if pc < n)
        self.independent = self.rank == len(vectors)

    def coordinates(self, target: dict):
        """Coefficients expressing target in the span, or None if outside.
        Requires the spanning set to be linearly independent."""
        row = {}
        for k, c in target.items():
            idx = self.key_index.get(k)
            if idx is None:
                if not c.is_zero():
                    return None
                continue
            row[idx] = c
        for pc, prow in self._echelon:
            c = row.get(pc)
            if c is None:
                continue
            for j, v in prow.items():
                w = row.get(j)
                nv = (w - c * v) if w is not None else -(c * v)
                if nv.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = nv
        if any(j < self.n for j in row):
            return None  # residual in the coordinate block: not in span
        coeffs = [self.ctx.zero] * self.nvec
        for j, v in row.items():
            coeffs[j - self.n] = -v
        return coeffs

    def contains(self, target: dict) -> bool:
        row = {}
        for k, c in target.items():
            idx = self.key_index.get(k)
            if idx is None:
                if not c.is_zero():
                    return False
                continue
            row[idx] = c
        for pc, prow in self._echelon:
            if pc >= self.n:
                continue
            c = row.get(pc)
            if c is None:
                continue
            for j, v in prow.items():
                if j >= self.n:
                    continue
                w = row.get(j)
                nv = (w - c * v) if w is not None else -(c * v)
                if nv.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = nv
        return not any(j < self.n and not v.is_zero() for j, v in row.items())


def solve_in_span(vectors, target: dict, ctx: CycloContext):
    return SpanSolver(vectors, ctx).coordinates(target)


def invert_dense(mat, ctx: CycloContext):
    """Inverse of a dense square matrix (list of list of Cyclo)."""
    n = len(mat)
    aug = [list(row) + [ctx.one if i == j else ctx.zero for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not aug[r][col].is_zero():
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inv()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r == col:
                continue
            c = aug[r][col]
            if c.is_zero():
                continue
            aug[r] = [vr - c * vc for vr, vc in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def mat_mul_dense(a, b, ctx: CycloContext):
    n, k, m = len(a), len(b), len(b[0])
    out = [[ctx.zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c.is_zero():
                continue
            bt = b[t]
            for j in range(m):
                if not bt[j].is_zero():
                    oi[j] = oi[j] + c * bt[j]
    return out
