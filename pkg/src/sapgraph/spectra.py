"""Dense symmetric eigendecomposition, inertia, and kernel bases.

Everything downstream (sign validation, SAP kernels, embeddings) consumes
the eigenvalue counts computed here.  Two routes are provided: a cyclic
Jacobi eigensolver for floating point matrices, and an exact LDL^T inertia
count over the rationals for matrices with rational entries.  The default
zero threshold is scale-invariant: 1e-9 * n * max|M_ij|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, NonFinite

DEFAULT_TOL_FACTOR = 1e-9

# Jacobi sweeps stop once the off-diagonal Frobenius norm drops below
# this fraction of the full Frobenius norm.
_JACOBI_OFF_FACTOR = 1e-13
_MAX_SWEEPS = 100


def _tri_index(i: int, j: int) -> int:
    if j > i:
        i, j = j, i
    return i * (i + 1) // 2 + j


@dataclass(frozen=True)
class SymMatrix:
    """Dense real symmetric matrix, stored as a lower triangle.

    Entries are floats or Fractions; `rational` marks the exact mode.
    Symmetry holds by construction since only one triangle is stored.
    """

    n: int
    data: tuple
    rational: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatch(f"matrix dimension must be >= 1, got {self.n}")
        if len(self.data) != self.n * (self.n + 1) // 2:
            raise DimensionMismatch("triangle storage has wrong length")

    def entry(self, i: int, j: int):
        return self.data[_tri_index(i, j)]

    @classmethod
    def from_rows(cls, rows, rational: bool | None = None) -> "SymMatrix":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("rows do not form a square matrix")
        if rational is None:
            rational = all(isinstance(v, (Fraction, int)) for r in rows for v in r)
        conv = Fraction if rational else float
        tri = []
        for i in range(n):
            for j in range(i + 1):
                a, b = rows[i][j], rows[j][i]
                if conv(a) != conv(b):
                    raise DimensionMismatch(f"asymmetric input at ({i},{j})")
                tri.append(conv(a))
        return cls(n, tuple(tri), rational)

    @classmethod
    def from_array(cls, arr) -> "SymMatrix":
        a = np.asarray(arr, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatch("need a square array")
        n = a.shape[0]
        if not np.allclose(a, a.T, rtol=0.0, atol=1e-12 * max(1.0, np.abs(a).max())):
            raise DimensionMismatch("array is not symmetric")
        tri = tuple(float(a[i, j]) for i in range(n) for j in range(i + 1))
        return cls(n, tri, False)

    @classmethod
    def zeros(cls, n: int, rational: bool = False) -> "SymMatrix":
        zero = Fraction(0) if rational else 0.0
        return cls(n, (zero,) * (n * (n + 1) // 2), rational)

    def to_array(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        k = 0
        for i in range(self.n):
            for j in range(i + 1):
                a[i, j] = a[j, i] = float(self.data[k])
                k += 1
        return a

    def to_fraction_rows(self) -> list[list[Fraction]]:
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        k = 0
        for i in range(self.n):
            for j in range(i + 1):
                v = self.data[k] if self.rational else Fraction(self.data[k]).limit_denominator(10**12)
                rows[i][j] = rows[j][i] = v
                k += 1
        return rows

    def to_float(self) -> "SymMatrix":
        if not self.rational:
            return self
        return SymMatrix(self.n, tuple(float(v) for v in self.data), False)

    def shifted(self, c) -> "SymMatrix":
        """M + c*I in the matrix's own arithmetic."""
        cc = Fraction(c) if self.rational else float(c)
        tri = list(self.data)
        for i in range(self.n):
            tri[_tri_index(i, i)] += cc
        return SymMatrix(self.n, tuple(tri), self.rational)

    def plus(self, other: "SymMatrix") -> "SymMatrix":
        if other.n != self.n:
            raise DimensionMismatch("sizes differ")
        rational = self.rational and other.rational
        tri = tuple(a + b for a, b in zip(self.data, other.data))
        if not rational:
            tri = tuple(float(v) for v in tri)
        return SymMatrix(self.n, tri, rational)

    def scaled(self, c) -> "SymMatrix":
        cc = Fraction(c) if self.rational else float(c)
        return SymMatrix(self.n, tuple(cc * v for v in self.data), self.rational)

    def max_abs(self) -> float:
        return max(abs(float(v)) for v in self.data)

    def to_json_dict(self) -> dict:
        if self.rational:
            rows = [[f"{v.numerator}/{v.denominator}" for v in row]
                    for row in self.to_fraction_rows()]
        else:
            rows = [[float(self.entry(i, j)) for j in range(self.n)]
                    for i in range(self.n)]
        return {"n": self.n, "rows": rows}

    @classmethod
    def from_json_dict(cls, d: dict) -> "SymMatrix":
        rows = d["rows"]
        if any(isinstance(v, str) for r in rows for v in r):
            parsed = [[Fraction(v) for v in r] for r in rows]
            return cls.from_rows(parsed, rational=True)
        return cls.from_rows([[float(v) for v in r] for r in rows], rational=False)


def default_tol(m: SymMatrix | np.ndarray) -> float:
    if isinstance(m, SymMatrix):
        n, amax = m.n, m.max_abs()
    else:
        a = np.asarray(m, dtype=float)
        n, amax = max(a.shape), (np.abs(a).max() if a.size else 0.0)
    return DEFAULT_TOL_FACTOR * n * amax


@dataclass
class SpectralSummary:
    """Ascending eigenvalues with inertia counts and an orthonormal kernel basis."""

    eigenvalues: np.ndarray
    neg_count: int
    zero_count: int
    pos_count: int
    kernel_basis: np.ndarray  # shape (n, zero_count), orthonormal columns
    vectors: np.ndarray       # full eigenvector matrix, column k pairs with eigenvalues[k]
    tol: float

    @property
    def corank(self) -> int:
        return self.zero_count

    @property
    def lambda_minus(self) -> int:
        return self.neg_count


def _jacobi_eigh(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi rotations; returns (eigenvalues, eigenvectors) unsorted."""
    n = a.shape[0]
    a = a.copy()
    v = np.eye(n)
    fro = math.sqrt(float(np.sum(a * a)))
    if fro == 0.0 or n == 1:
        return np.diag(a).copy(), v
    stop = _JACOBI_OFF_FACTOR * fro
    for _ in range(_MAX_SWEEPS):
        off = math.sqrt(max(0.0, float(np.sum(a * a)) - float(np.sum(np.diag(a) ** 2))))
        if off <= stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= stop / (2.0 * n):
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p, p], a[q, q]
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, p] = c * c * app - 2.0 * s * c * apq + s * s * aqq
                a[q, q] = s * s * app + 2.0 * s * c * apq + c * c * aqq
                a[p, q] = a[q, p] = 0.0
                vcol_p = v[:, p].copy()
                v[:, p] = c * vcol_p - s * v[:, q]
                v[:, q] = s * vcol_p + c * v[:, q]
    return np.diag(a).copy(), v


def eigen_sym(m: SymMatrix | np.ndarray, tol: float | None = None) -> SpectralSummary:
    """Full eigendecomposition with tolerance-based zero counting.

    An eigenvalue counts as zero iff |lambda| <= tol; the kernel basis is
    assembled from the corresponding (orthonormal) eigenvectors.
    """
    a = m.to_array() if isinstance(m, SymMatrix) else np.asarray(m, dtype=float).copy()
    if not np.all(np.isfinite(a)):
        raise NonFinite("matrix has non-finite entries")
    if tol is None:
        tol = default_tol(a)
    vals, vecs = _jacobi_eigh(a)
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    neg = int(np.sum(vals < -tol))
    zero = int(np.sum(np.abs(vals) <= tol))
    pos = len(vals) - neg - zero
    kernel = vecs[:, neg:neg + zero].copy()
    return SpectralSummary(vals, neg, zero, pos, kernel, vecs, tol)


def inertia_exact(m: SymMatrix) -> tuple[int, int, int]:
    """Exact (negative, zero, positive) inertia by symmetric rational LDL^T.

    Zero diagonal pivots are handled by symmetric swaps to a nonzero
    diagonal entry, falling back to an off-diagonal 2x2 block (which
    contributes one negative and one positive eigenvalue since its
    determinant is -a^2 < 0).  Congruence preserves inertia.
    """
    a = m.to_fraction_rows()
    n = m.n
    neg = pos = zero = 0
    k = 0
    while k < n:
        piv, best = -1, Fraction(0)
        for j in range(k, n):
            if abs(a[j][j]) > abs(best):
                piv, best = j, a[j][j]
        if piv >= 0 and best != 0:
            if piv != k:
                _sym_swap(a, k, piv)
            d = a[k][k]
            if d < 0:
                neg += 1
            else:
                pos += 1
            for i in range(k + 1, n):
                f = a[i][k] / d
                if f == 0:
                    continue
                for j in range(k + 1, i + 1):
                    a[i][j] -= f * a[j][k]
                    a[j][i] = a[i][j]
            k += 1
            continue
        # trailing diagonal is all zero: look for an off-diagonal pivot
        oi = oj = -1
        for i in range(k, n):
            for j in range(i + 1, n):
                if a[i][j] != 0:
                    oi, oj = i, j
                    break
            if oi >= 0:
                break
        if oi < 0:
            zero += n - k
            break
        if oi != k:
            _sym_swap(a, k, oi)
            if oj == k:
                oj = oi
        if oj != k + 1:
            _sym_swap(a, k + 1, oj)
        off = a[k][k + 1]
        neg += 1
        pos += 1
        for i in range(k + 2, n):
            ci0 = a[i][k] / off
            ci1 = a[i][k + 1] / off
            if ci0 == 0 and ci1 == 0:
                continue
            for j in range(k + 2, i + 1):
                a[i][j] -= ci0 * a[j][k + 1] + ci1 * a[j][k]
                a[j][i] = a[i][j]
        k += 2
    return neg, zero, pos


def _sym_swap(a: list[list[Fraction]], i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]


# ---------------------------------------------------------------------------
# dense elimination: rank and nullspace with the same tolerance policy
# ---------------------------------------------------------------------------

def rank_float(a: np.ndarray, tol: float | None = None) -> int:
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return 0
    if tol is None:
        tol = default_tol(a)
    r, _ = _row_echelon(a.copy(), tol)
    return r


def nullspace_float(a: np.ndarray, tol: float | None = None) -> np.ndarray:
    """Kernel basis (columns) of a rectangular float matrix by RREF."""
    a = np.asarray(a, dtype=float)
    m, k = a.shape if a.ndim == 2 else (1, a.shape[0])
    a = a.reshape(m, k).copy()
    if tol is None:
        tol = default_tol(a)
    _, pivots = _row_echelon(a, tol, reduce=True)
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(k) if c not in pivot_cols]
    basis = np.zeros((k, len(free_cols)))
    for idx, f in enumerate(free_cols):
        basis[f, idx] = 1.0
        for r, c in pivots:
            basis[c, idx] = -a[r, f]
    return basis


def _row_echelon(a: np.ndarray, tol: float, reduce: bool = False):
    m, k = a.shape
    pivots = []
    r = 0
    for c in range(k):
        if r >= m:
            break
        p = r + int(np.argmax(np.abs(a[r:, c])))
        if abs(a[p, c]) <= tol:
            a[r:, c] = 0.0
            continue
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = a[r] / a[r, c]
        mask = np.abs(a[:, c]) > 0
        mask[r] = False
        if reduce:
            a[mask] -= np.outer(a[mask, c], a[r])
        else:
            below = mask.copy()
            below[:r + 1] = False
            a[below] -= np.outer(a[below, c], a[r])
        pivots.append((r, c))
        r += 1
    return len(pivots), pivots


def nullspace_exact(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Exact kernel basis of a rational matrix given as a list of rows."""
    a = [row[:] for row in rows]
    m = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= m:
            break
        p = -1
        for i in range(r, m):
            if a[i][c] != 0:
                p = i
                break
        if p < 0:
            continue
        a[r], a[p] = a[p], a[r]
        d = a[r][c]
        a[r] = [v / d for v in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append((r, c))
        r += 1
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, c in pivots:
            vec[c] = -a[r][f]
        basis.append(vec)
    return basis
