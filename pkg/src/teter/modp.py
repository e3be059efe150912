"""Exact linear algebra and truncated series over a prime field.

Everything the approximation engine asks is a rank question over F_p.
Matrices are dense int64 numpy arrays with entries in [0, p); p stays
below 2^16 so a dot product of a few thousand terms cannot overflow
int64.
"""

import numpy as np

from .errors import PrecisionTooSmallError

DEFAULT_PRIME = 32003
SECOND_PRIME = 65521

# largest dot-product length for which float64 accumulation of entries
# in [0, p) stays below 2^53 and is therefore exact
_FLOAT_SAFE = {}


def matmul_mod(a, b, p):
    """(a @ b) mod p, exact.

    Routed through float64 BLAS when every partial sum provably fits in
    the 53-bit mantissa, which is the case for all basis sizes this
    library produces; otherwise falls back to int64.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    k = a.shape[-1]
    limit = _FLOAT_SAFE.get(p)
    if limit is None:
        limit = (1 << 53) // ((p - 1) * (p - 1))
        _FLOAT_SAFE[p] = limit
    if 0 < k <= limit:
        prod = a.astype(np.float64) @ b.astype(np.float64)
        return prod.astype(np.int64) % p
    return (a @ b) % p


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class RowSpace:
    """A subspace of F_p^width, kept in reduced row echelon form.

    rows[i] has a 1 in column pivots[i] and zeros in every other pivot
    column, so reducing a vector is one coefficient gather and one
    matrix product.
    """

    def __init__(self, p, width):
        self.p = p
        self.width = width
        self.rows = np.zeros((0, width), dtype=np.int64)
        self.pivots = []

    @property
    def dim(self):
        return len(self.pivots)

    def reduce_matrix(self, mat):
        """Residues of the rows of mat modulo the span."""
        mat = np.asarray(mat, dtype=np.int64) % self.p
        if self.pivots:
            hit = matmul_mod(mat[:, self.pivots], self.rows, self.p)
            mat = (mat - hit) % self.p
        return mat

    def contains(self, vec):
        return not self.reduce_matrix(np.asarray(vec).reshape(1, -1)).any()

    def add_matrix(self, mat):
        """Grow the span by the rows of mat; returns how many made it in."""
        mat = self.reduce_matrix(mat)
        added = 0
        for i in range(mat.shape[0]):
            if added:
                row = self.reduce_matrix(mat[i : i + 1])[0]
            else:
                row = mat[i]
            nz = np.nonzero(row)[0]
            if nz.size == 0:
                continue
            piv = int(nz[0])
            row = (row * pow(int(row[piv]), -1, self.p)) % self.p
            if self.pivots:
                # clear the new pivot column from the old rows
                col = self.rows[:, piv]
                self.rows = (self.rows - np.outer(col, row)) % self.p
            self.rows = np.vstack([self.rows, row[None, :]])
            self.pivots.append(piv)
            added += 1
            if len(self.pivots) == self.width:
                break
        return added


def rank_of(mat, p):
    space = RowSpace(p, np.asarray(mat).shape[1])
    space.add_matrix(mat)
    return space.dim


class TruncatedSeries:
    """Power series over F_p with exponents 0..precision, exact or loud.

    Addition is always exact.  Multiplication refuses (raises) whenever
    the true product could stick out past the precision, instead of
    truncating silently; that keeps every computed coefficient honest.
    """

    def __init__(self, p, precision, coeffs=None):
        self.p = p
        self.precision = precision
        if coeffs is None:
            self.coeffs = np.zeros(precision + 1, dtype=np.int64)
        else:
            self.coeffs = np.asarray(coeffs, dtype=np.int64) % p
            if self.coeffs.shape != (precision + 1,):
                raise ValueError("coefficient vector must have length precision+1")

    @classmethod
    def monomial(cls, p, precision, exponent, coeff=1):
        if not 0 <= exponent <= precision:
            raise PrecisionTooSmallError(
                "exponent %d outside precision %d" % (exponent, precision)
            )
        s = cls(p, precision)
        s.coeffs[exponent] = coeff % p
        return s

    def _check_compatible(self, other):
        if self.p != other.p or self.precision != other.precision:
            raise ValueError("series live in different arithmetic")

    def top_exponent(self):
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) if nz.size else -1

    def is_zero(self):
        return not self.coeffs.any()

    def __add__(self, other):
        self._check_compatible(other)
        return TruncatedSeries(self.p, self.precision, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check_compatible(other)
        return TruncatedSeries(self.p, self.precision, self.coeffs - other.coeffs)

    def __neg__(self):
        return TruncatedSeries(self.p, self.precision, -self.coeffs)

    def scale(self, c):
        return TruncatedSeries(self.p, self.precision, self.coeffs * (c % self.p))

    def __mul__(self, other):
        self._check_compatible(other)
        top = self.top_exponent() + other.top_exponent()
        if top > self.precision:
            raise PrecisionTooSmallError(
                "product reaches exponent %d beyond precision %d"
                % (top, self.precision)
            )
        if self.is_zero() or other.is_zero():
            return TruncatedSeries(self.p, self.precision)
        full = np.convolve(self.coeffs, other.coeffs) % self.p
        return TruncatedSeries(self.p, self.precision, full[: self.precision + 1])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.p == other.p
            and self.precision == other.precision
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    def __repr__(self):
        terms = ["%d*x^%d" % (c, i) for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return "TruncatedSeries(%s mod %d)" % (body, self.p)
