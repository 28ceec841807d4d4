"""Exact linear algebra over the rationals.

Scalars are `fractions.Fraction`, so every computation here is exact and
bit-reproducible; there is no floating point anywhere.  Matrices and
subspaces are immutable after construction and safe to share.

A subspace of Q^n is always stored by its reduced row-echelon basis.  That
form is unique, so two subspaces are equal as sets exactly when their basis
matrices are equal entry-wise, and all subspace comparisons in the engine
reduce to matrix equality.
"""

from __future__ import annotations

from fractions import Fraction

QScalar = Fraction


def qvec(entries):
    """Coerce a sequence of numbers into a tuple of exact rationals."""
    return tuple(Fraction(x) for x in entries)


def dot(u, v):
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


class QMatrix:
    """Dense rational matrix with exact Gauss-Jordan elimination."""

    __slots__ = ("nrows", "ncols", "data", "_rref")

    def __init__(self, rows, ncols=None):
        data = tuple(qvec(r) for r in rows)
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise ValueError("rows have unequal lengths")
        if widths:
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError(f"declared {ncols} columns, rows have {width}")
            ncols = width
        elif ncols is None:
            raise ValueError("a matrix with no rows needs an explicit column count")
        self.data = data
        self.nrows = len(data)
        self.ncols = ncols
        self._rref = None

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[Fraction(0)] * ncols for _ in range(nrows)], ncols=ncols)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.ncols == other.ncols and self.data == other.data

    def __hash__(self):
        return hash((self.ncols, self.data))

    def __repr__(self):
        return f"QMatrix({self.nrows}x{self.ncols})"

    def row(self, i):
        return self.data[i]

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def transpose(self):
        return QMatrix(zip(*self.data), ncols=self.nrows) if self.nrows else QMatrix(
            [[] for _ in range(self.ncols)], ncols=0
        )

    def __add__(self, other):
        self._check_same_shape(other)
        return QMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            ncols=self.ncols,
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return QMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            ncols=self.ncols,
        )

    def scaled(self, c):
        c = Fraction(c)
        return QMatrix([[c * a for a in r] for r in self.data], ncols=self.ncols)

    def __mul__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        cols = other.transpose().data if other.nrows else ()
        return QMatrix(
            [[dot(r, c) for c in cols] for r in self.data]
            if other.nrows
            else [[Fraction(0)] * other.ncols for _ in range(self.nrows)],
            ncols=other.ncols,
        )

    def apply(self, v):
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} != {self.ncols} columns")
        v = qvec(v)
        return tuple(dot(r, v) for r in self.data)

    def trace(self):
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.nrows)), Fraction(0))

    def is_symmetric(self):
        return self.nrows == self.ncols and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def stack(self, other):
        """Vertical concatenation."""
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return QMatrix(self.data + other.data, ncols=self.ncols)

    def _check_same_shape(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def rref(self):
        """The unique reduced row-echelon form (exact Gauss-Jordan)."""
        if self._rref is not None:
            return self._rref
        rows = [list(r) for r in self.data]
        nr, nc = self.nrows, self.ncols
        pr = 0
        for pc in range(nc):
            pivot = next((r for r in range(pr, nr) if rows[r][pc] != 0), None)
            if pivot is None:
                continue
            rows[pr], rows[pivot] = rows[pivot], rows[pr]
            inv = 1 / rows[pr][pc]
            rows[pr] = [inv * a for a in rows[pr]]
            piv_row = rows[pr]
            for r in range(nr):
                if r != pr and rows[r][pc] != 0:
                    f = rows[r][pc]
                    rows[r] = [a - f * b for a, b in zip(rows[r], piv_row)]
            pr += 1
            if pr == nr:
                break
        result = QMatrix(rows, ncols=nc)
        result._rref = result
        self._rref = result
        return result

    def rank(self):
        return sum(1 for r in self.rref().data if any(r))

    def kernel(self):
        """Right kernel {v : self . v = 0} as a canonical Subspace."""
        r = self.rref()
        pivots = []
        for row in r.data:
            pc = next((j for j, a in enumerate(row) if a != 0), None)
            if pc is not None:
                pivots.append(pc)
        pivot_set = set(pivots)
        basis = []
        for fc in range(self.ncols):
            if fc in pivot_set:
                continue
            v = [Fraction(0)] * self.ncols
            v[fc] = Fraction(1)
            for i, pc in enumerate(pivots):
                v[pc] = -r.data[i][fc]
            basis.append(v)
        return span(basis, ambient_dim=self.ncols)


class Subspace:
    """A subspace of Q^n held by its canonical reduced-echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, matrix):
        reduced = matrix.rref()
        rows = tuple(r for r in reduced.data if any(r))
        self.ambient_dim = matrix.ncols
        self.basis = QMatrix(rows, ncols=matrix.ncols)
        self.pivots = tuple(
            next(j for j, a in enumerate(r) if a != 0) for r in rows
        )

    @property
    def dim(self):
        return self.basis.nrows

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def reduce(self, v):
        """Residue of v after eliminating against the basis rows."""
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector length {len(v)} != ambient dim {self.ambient_dim}")
        v = list(qvec(v))
        for row, pc in zip(self.basis.data, self.pivots):
            f = v[pc]
            if f != 0:
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, v):
        return not any(self.reduce(v))

    def contains_subspace(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains(r) for r in other.basis.data)

    def __add__(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace(self.basis.stack(other.basis))

    def annihilator(self):
        """Vectors orthogonal (standard dot product) to everything here."""
        return self.basis.kernel() if self.dim else full_space(self.ambient_dim)

    def intersect(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        constraints = self.annihilator().basis.stack(other.annihilator().basis)
        return constraints.kernel()


def rref(m):
    return m.rref()


def rank(m):
    return m.rank()


def kernel(m):
    return m.kernel()


def span(vectors, ambient_dim=None):
    """Linear span of the given vectors, as a canonical Subspace.

    An empty vector list carries no ambient dimension of its own, so
    `ambient_dim` is then required.
    """
    vectors = [qvec(v) for v in vectors]
    if not vectors:
        if ambient_dim is None:
            raise ValueError("span of no vectors needs an explicit ambient_dim")
        return Subspace(QMatrix([], ncols=ambient_dim))
    if ambient_dim is not None and any(len(v) != ambient_dim for v in vectors):
        raise ValueError("vector length disagrees with declared ambient_dim")
    return Subspace(QMatrix(vectors))


def full_space(n):
    return Subspace(QMatrix.identity(n))


def zero_subspace(n):
    return span([], ambient_dim=n)


def intersect(s1, s2):
    return s1.intersect(s2)


def contains(s, v):
    return s.contains(v)
