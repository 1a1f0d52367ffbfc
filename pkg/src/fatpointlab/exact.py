"""Exact scalar arithmetic and dense exact linear algebra.

Two coefficient fields are supported: the rationals (via
``fractions.Fraction``) and prime fields F_p (elements stored as ints in
``range(p)``).  All computations are exact; there is no floating point
anywhere in this package.

Rank over the rationals is computed by fraction-free (Bareiss) elimination
on a denominator-cleared integer matrix.  A modular fast path is used as an
accelerator: if the matrix has full rank modulo a fixed prime it has full
rank over Q (a nonsingular minor mod p is nonsingular over Q), so the
expensive integer elimination only runs on genuinely rank-deficient
matrices.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

# Mersenne prime used by the modular rank accelerator.  Products of two
# residues fit in int64, so numpy row operations are exact.
_FAST_PRIME = 2**31 - 1


def is_prime(n):
    """Deterministic Miller-Rabin, valid for all n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class ScalarField:
    """The coefficient field: the rationals or a prime field F_p."""

    def __init__(self, p=None):
        if p is None:
            self.p = None
        else:
            if not is_prime(p):
                raise ValueError("PrimeField characteristic must be prime: %r" % (p,))
            self.p = p

    @classmethod
    def rational(cls):
        return cls()

    @classmethod
    def prime(cls, p):
        return cls(p)

    @property
    def is_rational(self):
        return self.p is None

    def __eq__(self, other):
        return isinstance(other, ScalarField) and self.p == other.p

    def __hash__(self):
        return hash(("ScalarField", self.p))

    def __repr__(self):
        return "ScalarField.rational()" if self.p is None else "ScalarField.prime(%d)" % self.p

    # -- element construction ------------------------------------------------

    def elem(self, x):
        """Coerce an int, Fraction, or 'a/b' string into a field element."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else a * b % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            return Fraction(1) / a
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a):
        return str(a)


class ExactMatrix:
    """A dense matrix over a ScalarField, immutable after construction."""

    def __init__(self, field, entries):
        self.field = field
        self.entries = tuple(tuple(field.elem(x) for x in row) for row in entries)
        self.nrows = len(self.entries)
        self.ncols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.ncols for row in self.entries):
            raise ValueError("ragged rows")
        self._rank = None

    @classmethod
    def from_columns(cls, field, columns):
        cols = [tuple(c) for c in columns]
        if not cols:
            raise ValueError("need at least one column")
        n = len(cols[0])
        return cls(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def __repr__(self):
        return "ExactMatrix(%d x %d over %r)" % (self.nrows, self.ncols, self.field)

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def transpose(self):
        return ExactMatrix(self.field, [self.column(j) for j in range(self.ncols)])

    def stack(self, other):
        if other.field != self.field or other.ncols != self.ncols:
            raise ValueError("incompatible stack")
        return ExactMatrix(self.field, list(self.entries) + list(other.entries))

    def mul_vector(self, v):
        f = self.field
        out = []
        for row in self.entries:
            acc = f.zero()
            for j in range(self.ncols):
                acc = f.add(acc, f.mul(row[j], v[j]))
            out.append(acc)
        return tuple(out)

    # -- rank ----------------------------------------------------------------

    def _integer_rows(self):
        """Rows scaled to integers (rational field only); rank-preserving."""
        out = []
        for row in self.entries:
            lcm = 1
            for x in row:
                d = x.denominator
                lcm = lcm * d // _gcd(lcm, d)
            out.append([int(x * lcm) for x in row])
        return out

    def rank(self):
        if self._rank is not None:
            return self._rank
        if self.nrows == 0 or self.ncols == 0:
            self._rank = 0
            return 0
        if self.field.is_rational:
            rows = self._integer_rows()
            r = _rank_mod_p(rows, _FAST_PRIME)
            if r < min(self.nrows, self.ncols):
                # rank mod p only lower-bounds the rational rank; certify
                # deficient matrices by fraction-free integer elimination
                r = _bareiss_rank(rows)
        else:
            p = self.field.p
            if p < 2**31:
                r = _rank_mod_p([list(row) for row in self.entries], p)
            else:
                r = len(_rref([list(row) for row in self.entries], self.field)[1])
        self._rank = r
        return r

    def rank_of_column_subset(self, cols):
        cols = sorted(cols)
        if not cols:
            return 0
        for j in cols:
            if not (0 <= j < self.ncols):
                raise IndexError("column index out of range: %r" % (j,))
        sub = ExactMatrix(self.field, [[row[j] for j in cols] for row in self.entries])
        return sub.rank()

    def kernel_basis(self):
        """Basis of the right kernel, from the reduced row echelon form."""
        if self.ncols == 0:
            return []
        if self.nrows == 0:
            eye = []
            f = self.field
            for j in range(self.ncols):
                v = [f.zero()] * self.ncols
                v[j] = f.one()
                eye.append(tuple(v))
            return eye
        rows = [list(r) for r in self.entries]
        red, pivots = _rref(rows, self.field)
        f = self.field
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for j in free:
            v = [f.zero()] * self.ncols
            v[j] = f.one()
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(red[i][j])
            basis.append(tuple(v))
        return basis


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _rank_mod_p(int_rows, p):
    """Gaussian elimination over F_p, vectorized with numpy int64."""
    a = np.array([[x % p for x in row] for row in int_rows], dtype=np.int64)
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        if r + 1 < nrows:
            factors = a[r + 1:, c]
            a[r + 1:] = (a[r + 1:] - factors[:, None] * a[r]) % p
        r += 1
    return r


def _bareiss_rank(int_rows):
    """Fraction-free elimination (Bareiss); exact rank over Z (hence Q)."""
    m = [row[:] for row in int_rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        pv = pr[c]
        for i in range(r + 1, nrows):
            ri = m[i]
            vi = ri[c]
            if vi:
                for j in range(c + 1, ncols):
                    ri[j] = (pv * ri[j] - vi * pr[j]) // prev
                ri[c] = 0
            else:
                for j in range(c + 1, ncols):
                    ri[j] = (pv * ri[j]) // prev
        prev = pv
        r += 1
    return r


def _rref(rows, field):
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != field.zero():
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != field.zero():
                factor = rows[i][c]
                rows[i] = [
                    field.sub(rows[i][j], field.mul(factor, rows[r][j]))
                    for j in range(ncols)
                ]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m):
    return m.rank()


def kernel_basis(m):
    return m.kernel_basis()


def rank_of_column_subset(m, cols):
    return m.rank_of_column_subset(cols)
