"""
Dense exact linear algebra.

Matrix keeps raw field values in row tuples; row reduction, null spaces and
inverses are delegated to sympy's DomainMatrix over QQ or GF(p). Reduced row
echelon forms are unique, so every basis this module returns is canonical
and reproducible across runs.
"""

from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from gradalg.exceptions import DimensionMismatch, FieldMismatch


def _check_same_field(*matrices):
    fields = {m.field for m in matrices}
    if len(fields) > 1:
        tags = ", ".join(sorted(f.tag for f in fields))
        raise FieldMismatch(f"matrices over different fields: {tags}")


@dataclass(frozen=True)
class Matrix:
    """
    Row-major matrix of raw field values.

    Attributes:
        field: Field every entry belongs to
        rows: Tuple of row tuples
        ncols: Column count (kept explicitly so 0-row matrices have a width)
    """

    field: object
    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        rows = tuple(tuple(field(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatch(f"row of length {len(row)} in a {ncols}-column matrix")
        return cls(field, rows, ncols)

    @classmethod
    def from_columns(cls, field, columns, nrows):
        columns = [tuple(c) for c in columns]
        rows = tuple(tuple(col[i] for col in columns) for i in range(nrows))
        return cls(field, rows, len(columns))

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, tuple((field.zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(
            field,
            tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)),
            n,
        )

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i, j):
        return self.rows[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def transpose(self):
        return Matrix(
            self.field,
            tuple(tuple(row[j] for row in self.rows) for j in range(self.ncols)),
            self.nrows,
        )

    def is_zero(self):
        return all(x == 0 for row in self.rows for x in row)

    def apply(self, vector):
        """Return self · vector."""
        if len(vector) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.nrows}x{self.ncols} matrix")
        return tuple(dot(self.field, row, vector) for row in self.rows)

    def __matmul__(self, other):
        _check_same_field(self, other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        cols = other.transpose().rows
        return Matrix(f, tuple(tuple(dot(f, row, col) for col in cols) for row in self.rows), other.ncols)

    def __add__(self, other):
        _check_same_field(self, other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix(
            self.field,
            tuple(vec_add(self.field, a, b) for a, b in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other):
        _check_same_field(self, other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {other.shape} from {self.shape}")
        return Matrix(
            self.field,
            tuple(vec_sub(self.field, a, b) for a, b in zip(self.rows, other.rows)),
            self.ncols,
        )

    def scale(self, c):
        return Matrix(self.field, tuple(vec_scale(self.field, c, row) for row in self.rows), self.ncols)

    def vstack(self, other):
        _check_same_field(self, other)
        if self.ncols != other.ncols:
            raise DimensionMismatch(f"cannot stack {self.ncols} and {other.ncols} columns")
        return Matrix(self.field, self.rows + other.rows, self.ncols)

    def hstack(self, other):
        _check_same_field(self, other)
        if self.nrows != other.nrows:
            raise DimensionMismatch(f"cannot join {self.nrows} and {other.nrows} rows")
        return Matrix(
            self.field, tuple(a + b for a, b in zip(self.rows, other.rows)), self.ncols + other.ncols
        )

    def to_json(self):
        return [[self.field.to_json(x) for x in row] for row in self.rows]


def dot(field, u, v):
    total = field.zero
    for a, b in zip(u, v):
        if a and b:
            total = field.add(total, field.mul(a, b))
    return total


def vec_add(field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field, c, u):
    return tuple(field.mul(c, a) for a in u)


def vec_axpy(field, c, u, v):
    """Return c·u + v."""
    if c == 0:
        return tuple(v)
    return tuple(field.add(field.mul(c, a), b) for a, b in zip(u, v))


def is_zero_vector(u):
    return all(x == 0 for x in u)


def unit_vector(field, n, i):
    return tuple(field.one if j == i else field.zero for j in range(n))


def to_domain_matrix(field, rows, ncols):
    """Raw rows -> sympy DomainMatrix over field.domain."""
    convert = field.to_domain
    rows = [[convert(x) for x in row] for row in rows]
    return DomainMatrix(rows, (len(rows), ncols), field.domain)


def from_domain_matrix(field, dm):
    nrows, ncols = dm.shape
    convert = field.from_domain
    rows = dm.to_list() if nrows and ncols else [[] for _ in range(nrows)]
    return Matrix(field, tuple(tuple(convert(x) for x in row) for row in rows), ncols)


def _rref_rows(field, rows, ncols):
    """rref through DomainMatrix; returns (list of row tuples, list of pivots)."""
    rows = list(rows)
    if not rows or not ncols:
        return [tuple(r) for r in rows], []
    reduced, pivots = to_domain_matrix(field, rows, ncols).rref()
    return list(from_domain_matrix(field, reduced).rows), list(pivots)


def rref(m):
    """
    Reduced row echelon form.

    Returns:
        (Matrix of the same shape, list of strictly increasing pivot columns)
    """
    rows, pivots = _rref_rows(m.field, m.rows, m.ncols)
    return Matrix(m.field, tuple(rows), m.ncols), pivots


def rank(m):
    return len(rref(m)[1])


def row_basis(m):
    """Nonzero rows of rref(m): the canonical basis of the row space."""
    reduced, pivots = rref(m)
    return Matrix(m.field, reduced.rows[: len(pivots)], m.ncols)


def kernel_basis(m):
    """
    Basis of {v : m·v = 0} as the rows of a matrix, one row per free column.

    Row i is 1 on the i-th free column and 0 on the other free columns, so the
    basis does not depend on how the null space was first spanned.
    """
    f = m.field
    if not m.ncols:
        return Matrix(f, (), 0)
    if not m.nrows:
        return Matrix.identity(f, m.ncols)
    dm = to_domain_matrix(f, m.rows, m.ncols)
    reduced, pivots = dm.rref()
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    if not free:
        return Matrix(f, (), m.ncols)
    null = reduced.nullspace()
    block = null.extract(list(range(len(free))), free)
    return from_domain_matrix(f, block.inv().matmul(null))


def solve(m, b):
    """
    Some x with m·x = b, or None when the system is inconsistent.

    Raises:
        DimensionMismatch: If len(b) differs from the row count
    """
    if len(b) != m.nrows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {m.nrows} equations")
    f = m.field
    augmented = [tuple(row) + (f(x),) for row, x in zip(m.rows, b)]
    rows, pivots = _rref_rows(f, augmented, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [f.zero] * m.ncols
    for i, p in enumerate(pivots):
        x[p] = rows[i][m.ncols]
    return tuple(x)


def subspace_sum_and_intersection(u, v):
    """
    Bases of span(u) + span(v) and span(u) ∩ span(v), both in rref.

    Raises:
        DimensionMismatch: If u and v have different column counts
    """
    _check_same_field(u, v)
    if u.ncols != v.ncols:
        raise DimensionMismatch(f"subspaces of K^{u.ncols} and K^{v.ncols}")
    f, n = u.field, u.ncols
    total = row_basis(u.vstack(v))
    if not u.nrows or not v.nrows:
        return total, Matrix(f, (), n)
    # Zassenhaus: rows [u | u] over [v | 0]; rows with a zero left half span the intersection.
    zero = (f.zero,) * n
    stacked = [r + r for r in u.rows] + [r + zero for r in v.rows]
    rows, pivots = _rref_rows(f, stacked, 2 * n)
    meet = [tuple(rows[i][n:]) for i, p in enumerate(pivots) if p >= n]
    return total, row_basis(Matrix(f, tuple(meet), n))


def inverse(m):
    """
    Raises:
        DimensionMismatch: If m is not square
        ZeroDivisionError: If m is singular
    """
    if m.nrows != m.ncols:
        raise DimensionMismatch(f"cannot invert a {m.nrows}x{m.ncols} matrix")
    if not m.nrows:
        return m
    try:
        inv = to_domain_matrix(m.field, m.rows, m.ncols).inv()
    except DMNonInvertibleMatrixError:
        raise ZeroDivisionError("matrix is singular")
    return from_domain_matrix(m.field, inv)


class RowSpace:
    """
    A subspace of K^n held by its canonical (rref) basis.

    Membership, reduction modulo the subspace and coordinates with respect to
    the rref basis are read off the pivot columns.
    """

    def __init__(self, field, ncols, rows=()):
        self.field = field
        self.ncols = ncols
        reduced, pivots = _rref_rows(field, rows, ncols)
        self.basis = tuple(tuple(r) for r in reduced[: len(pivots)])
        self.pivots = tuple(pivots)

    @classmethod
    def of(cls, m):
        return cls(m.field, m.ncols, m.rows)

    @classmethod
    def whole(cls, field, n):
        return cls(field, n, Matrix.identity(field, n).rows)

    @property
    def dim(self):
        return len(self.basis)

    def matrix(self):
        return Matrix(self.field, self.basis, self.ncols)

    def reduce(self, v):
        """The normal form of v modulo this subspace (zero at every pivot column)."""
        f = self.field
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c != 0:
                v = [f.sub(x, f.mul(c, y)) if y != 0 else x for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v):
        return is_zero_vector(self.reduce(v))

    def contains_space(self, other):
        return all(self.contains(r) for r in other.basis)

    def coordinates(self, v):
        """Coordinates of v in the rref basis; v must lie in the subspace."""
        return tuple(v[p] for p in self.pivots)

    def combine(self, coords):
        f = self.field
        out = (f.zero,) * self.ncols
        for c, row in zip(coords, self.basis):
            out = vec_axpy(f, c, row, out)
        return out

    def __add__(self, other):
        return RowSpace(self.field, self.ncols, self.basis + other.basis)

    def intersection(self, other):
        _, meet = subspace_sum_and_intersection(self.matrix(), other.matrix())
        return RowSpace.of(meet)

    def complement_pivots(self):
        """Columns that are not pivots: a canonical complement."""
        taken = set(self.pivots)
        return tuple(c for c in range(self.ncols) if c not in taken)

    def __eq__(self, other):
        return (
            isinstance(other, RowSpace)
            and self.ncols == other.ncols
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ncols, self.basis))

    def __repr__(self):
        return f"RowSpace(dim={self.dim}, ambient={self.ncols})"


class CoordinateSystem:
    """
    Coordinates with respect to an arbitrary independent family of vectors.

    rref([B | I]) = [E | T] with E = T·B, so a vector v in span(B) has
    coordinates Σ_i v[p_i]·T_i.
    """

    def __init__(self, field, vectors, ncols):
        self.field = field
        self.ncols = ncols
        self.vectors = tuple(tuple(v) for v in vectors)
        k = len(self.vectors)
        augmented = [
            v + tuple(field.one if j == i else field.zero for j in range(k))
            for i, v in enumerate(self.vectors)
        ]
        rows, pivots = _rref_rows(field, augmented, ncols + k)
        left = [p for p in pivots if p < ncols]
        if len(left) != k:
            raise DimensionMismatch("coordinate family is linearly dependent")
        self.echelon = tuple(tuple(rows[i][:ncols]) for i in range(k))
        self.transform = tuple(tuple(rows[i][ncols:]) for i in range(k))
        self.pivots = tuple(left)

    @property
    def dim(self):
        return len(self.vectors)

    def coordinates(self, v):
        """
        Coordinates of v, or None when v is outside the span.
        """
        f = self.field
        residue = list(v)
        coords = (f.zero,) * self.dim
        for row, trans, p in zip(self.echelon, self.transform, self.pivots):
            c = residue[p]
            if c != 0:
                residue = [f.sub(x, f.mul(c, y)) if y != 0 else x for x, y in zip(residue, row)]
                coords = vec_axpy(f, c, trans, coords)
        if not is_zero_vector(residue):
            return None
        return coords
