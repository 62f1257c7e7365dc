"""Dense linear algebra generic over a field context.

Exact contexts use deterministic first-nonzero pivoting; over the rational
function field, forward and backward elimination run fraction-free on
cleared numerators (one-step Bareiss style divisions, always exact) so the
intermediate polynomials stay small, and only the final reduced row echelon
form is converted back to reduced fractions.  The approximate context uses
magnitude pivoting with a relative threshold and flags its results.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UsageError
from .fields import ApproxComplex, RatFunc, RationalFunctionField
from .laurent import LaurentPoly, exact_div, normalize_poly, poly_lcm

UNIQUE = "unique"
UNDERDETERMINED = "underdetermined"
INCONSISTENT = "inconsistent"


class Matrix:
    """A rectangular matrix of scalars from a single field context."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx, entries, cols=None):
        entries = tuple(tuple(row) for row in entries)
        if entries:
            cols_found = len(entries[0])
            if any(len(row) != cols_found for row in entries):
                raise UsageError("ragged rows in matrix")
            if cols is not None and cols != cols_found:
                raise UsageError("cols does not match the row length")
            cols = cols_found
        else:
            cols = 0 if cols is None else int(cols)
        self.ctx = ctx
        self.entries = entries
        self.rows = len(entries)
        self.cols = cols

    @classmethod
    def from_int_rows(cls, ctx, rows, cols=None):
        return cls(ctx, [[ctx.from_int(x) for x in row] for row in rows], cols=cols)

    @classmethod
    def zeros(cls, ctx, rows, cols):
        return cls(ctx, [[ctx.zero] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, ctx, n):
        return cls(
            ctx,
            [[ctx.one if i == j else ctx.zero for j in range(n)] for i in range(n)],
        )

    def get(self, i, j):
        return self.entries[i][j]

    def map(self, fn, ctx=None):
        return Matrix(ctx or self.ctx, [[fn(x) for x in row] for row in self.entries], cols=self.cols)

    def transpose(self):
        return Matrix(
            self.ctx,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def conj_transpose(self):
        ctx = self.ctx
        return Matrix(
            ctx,
            [[ctx.conjugate(self.entries[i][j]) for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def scalar_mul(self, s):
        return self.map(lambda x: s * x)

    def matvec(self, v):
        if len(v) != self.cols:
            raise UsageError("vector length does not match matrix columns")
        out = []
        for row in self.entries:
            acc = self.ctx.zero
            for a, b in zip(row, v):
                acc = acc + a * b
            out.append(acc)
        return out

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise UsageError("matrix shapes differ")
        return Matrix(
            self.ctx,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
            cols=self.cols,
        )

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise UsageError("inner dimensions differ")
        cols = [other.transpose().entries[j] for j in range(other.cols)]
        data = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = self.ctx.zero
                for a, b in zip(row, col):
                    acc = acc + a * b
                out_row.append(acc)
            data.append(out_row)
        return Matrix(self.ctx, data, cols=other.cols)

    def eq(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            self.ctx.eq(a, b)
            for r1, r2 in zip(self.entries, other.entries)
            for a, b in zip(r1, r2)
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.ctx!r})"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a linear solve M x = b."""

    status: str
    particular: tuple | None
    kernel_basis: tuple
    approximate: bool = False
    pivot_polys: tuple = ()


@dataclass
class _Echelon:
    rows: list
    pivots: list
    approximate: bool = False
    pivot_polys: tuple = ()


def _echelon(rows, ncols, ctx):
    if isinstance(ctx, RationalFunctionField):
        return _echelon_fraction_free(rows, ncols, ctx)
    if isinstance(ctx, ApproxComplex):
        return _echelon_approx(rows, ncols, ctx)
    return _echelon_division(rows, ncols, ctx)


def _echelon_division(rows, ncols, ctx):
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(work)):
            if not ctx.is_zero(work[i][c]):
                sel = i
                break
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        inv = ctx.invert(work[r][c])
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i == r:
                continue
            f = work[i][c]
            if ctx.is_zero(f):
                continue
            work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return _Echelon(work, pivots)


def _echelon_fraction_free(rows, ncols, ctx):
    one = LaurentPoly.one(ctx.num_vars)
    poly_rows = []
    for row in rows:
        den = one
        for x in row:
            if not x.is_polynomial():
                den = poly_lcm(den, x.den)
        poly_rows.append([x.num * exact_div(den, x.den) for x in row])
    prev = one
    pivots = []
    pivot_polys = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(poly_rows)):
            if not poly_rows[i][c].is_zero():
                sel = i
                break
        if sel is None:
            continue
        poly_rows[r], poly_rows[sel] = poly_rows[sel], poly_rows[r]
        p = poly_rows[r][c]
        assert not p.is_zero()
        for i in range(len(poly_rows)):
            if i == r:
                continue
            row_i = poly_rows[i]
            f = row_i[c]
            poly_rows[i] = [
                exact_div(p * row_i[j] - f * poly_rows[r][j], prev)
                for j in range(ncols)
            ]
        prev = p
        pivots.append(c)
        pivot_polys.append(p)
        r += 1
    # after full fraction-free elimination the pivot rows equal prev * RREF
    det = prev
    out = []
    for i, row in enumerate(poly_rows):
        if i < len(pivots):
            out.append([RatFunc(x, det) for x in row])
        else:
            assert all(x.is_zero() for x in row), "nonzero row below the pivot rows"
            out.append([ctx.zero] * ncols)
    return _Echelon(out, pivots, pivot_polys=tuple(pivot_polys))


def _echelon_approx(rows, ncols, ctx):
    work = [list(r) for r in rows]
    scale = max((abs(x) for row in work for x in row), default=0.0)
    thresh = ctx.tol * max(1.0, scale)
    pivots = []
    r = 0
    for c in range(ncols):
        best, best_mag = None, thresh
        for i in range(r, len(work)):
            m = abs(work[i][c])
            if m > best_mag:
                best, best_mag = i, m
        if best is None:
            continue
        work[r], work[best] = work[best], work[r]
        inv = 1 / work[r][c]
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i == r:
                continue
            f = work[i][c]
            if f:
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return _Echelon(work, pivots, approximate=True)


def rank(m):
    """Rank over the matrix's field (approximate in ApproxComplex)."""
    ech = _echelon(m.entries, m.cols, m.ctx)
    return len(ech.pivots)


def _kernel_from_echelon(ech, ncols, ctx):
    pivot_cols = [c for c in ech.pivots if c < ncols]
    pivot_set = set(pivot_cols)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [ctx.zero] * ncols
        v[f] = ctx.one
        for r, c in enumerate(pivot_cols):
            v[c] = -ech.rows[r][f]
        basis.append(tuple(v))
    return tuple(basis)


def solve(m, b):
    """Solve M x = b, reporting a particular solution and a kernel basis.

    Inconsistency is a value (status), not an error.  The kernel basis is
    in reduced row echelon convention: each free variable set to 1 in turn.
    """
    if len(b) != m.rows:
        raise UsageError("right-hand side length does not match matrix rows")
    aug = [list(row) + [bi] for row, bi in zip(m.entries, b)]
    if m.rows == 0:
        aug = []
    ech = _echelon(aug, m.cols + 1, m.ctx)
    inconsistent = m.cols in ech.pivots
    kernel = _kernel_from_echelon(ech, m.cols, m.ctx)
    if inconsistent:
        return SolveResult(INCONSISTENT, None, kernel, ech.approximate, ech.pivot_polys)
    particular = [m.ctx.zero] * m.cols
    for r, c in enumerate(ech.pivots):
        particular[c] = ech.rows[r][m.cols]
    status = UNIQUE if not kernel else UNDERDETERMINED
    return SolveResult(status, tuple(particular), kernel, ech.approximate, ech.pivot_polys)


def kernel_basis(m):
    ech = _echelon(m.entries, m.cols, m.ctx)
    return _kernel_from_echelon(ech, m.cols, m.ctx)


def in_image(m, b):
    """True iff b lies in the column span of M."""
    return solve(m, b).status != INCONSISTENT


def in_annihilator_of_kernel(m, f):
    """True iff the covector f pairs to zero with every kernel vector."""
    if len(f) != m.cols:
        raise UsageError("covector length does not match matrix columns")
    ctx = m.ctx
    for v in kernel_basis(m):
        acc = ctx.zero
        for a, b in zip(f, v):
            acc = acc + a * b
        if not ctx.is_zero(acc):
            return False
    return True


def hermitian_signature(m, tol_sig=1e-8):
    """Eigenvalue sign counts (n_plus, n_minus, n_zero) of a Hermitian matrix.

    Only available in the ApproxComplex context; the input is asserted
    Hermitian to within the context tolerance.
    """
    if not isinstance(m.ctx, ApproxComplex):
        raise UsageError("hermitian_signature requires the ApproxComplex context")
    if m.rows != m.cols:
        raise UsageError("hermitian_signature requires a square matrix")
    if m.rows == 0:
        return (0, 0, 0)
    h = np.array([[complex(x) for x in row] for row in m.entries], dtype=complex)
    scale = float(np.max(np.abs(h))) if h.size else 0.0
    if float(np.max(np.abs(h - h.conj().T))) > m.ctx.tol * max(1.0, scale):
        raise UsageError("matrix is not Hermitian within tolerance")
    eigs = np.linalg.eigvalsh(h)
    n_plus = int(np.sum(eigs > tol_sig))
    n_minus = int(np.sum(eigs < -tol_sig))
    return (n_plus, n_minus, len(eigs) - n_plus - n_minus)


def certificate_polys(pivot_polys):
    """Distinct non-unit pivot factors, unit-normalized.

    Monomials and constants are units of the Laurent ring and never vanish
    on the character torus, so they are dropped.
    """
    seen = []
    for p in pivot_polys:
        q = normalize_poly(p)
        if q.is_constant() or q.is_monomial():
            continue
        if q not in seen:
            seen.append(q)
    return seen
