"""
Finite-dimensional unital algebras given by structure constants.

These are the ordinary algebras every graded computation reduces to: divisor
rings A(γ:γ), endomorphism algebras of modules and the total hom algebra.
"""

import hashlib
import json
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from gradalg.exceptions import DimensionMismatch, NotUnital, StructureError

from .matrices import (
    CoordinateSystem,
    Matrix,
    RowSpace,
    is_zero_vector,
    kernel_basis,
    unit_vector,
    vec_add,
    vec_axpy,
    vec_sub,
)


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """
    Associative algebra with basis b_0 … b_{n-1}.

    Attributes:
        field: Base field
        dim: Dimension n
        table: table[i][j] is the coordinate tuple of b_i·b_j
        unit: Coordinates of 1, or None for a non-unital algebra
        labels: Human-readable basis labels (for reports)
    """

    field: object
    dim: int
    table: tuple
    unit: tuple = None
    labels: tuple = dc_field(default=())

    @classmethod
    def from_products(cls, field, dim, products, unit=None, labels=()):
        """
        Build from sparse structure constants.

        Args:
            products: Mapping (i, j) -> coordinate sequence of b_i·b_j;
                missing pairs multiply to zero
            unit: Coordinates of the identity element
        """
        zero = (field.zero,) * dim
        table = []
        for i in range(dim):
            row = []
            for j in range(dim):
                coords = products.get((i, j))
                if coords is None:
                    row.append(zero)
                    continue
                if len(coords) != dim:
                    raise DimensionMismatch(f"product b_{i}·b_{j} has {len(coords)} coordinates, expected {dim}")
                row.append(tuple(field(c) for c in coords))
            table.append(tuple(row))
        if unit is not None:
            unit = tuple(field(c) for c in unit)
        return cls(field, dim, tuple(table), unit, tuple(labels))

    @classmethod
    def from_basis(cls, field, elements, product, unit_element=None, labels=()):
        """
        Structure constants of the span of `elements` under `product`.

        Args:
            elements: Linearly independent flat vectors closed under product
            product: Callable multiplying two flat vectors
            unit_element: Flat vector of the identity, if any

        Raises:
            StructureError: If a product leaves the span
        """
        elements = [tuple(e) for e in elements]
        dim = len(elements)
        width = len(elements[0]) if elements else 0
        coords = CoordinateSystem(field, elements, width)
        table = []
        for i, x in enumerate(elements):
            row = []
            for j, y in enumerate(elements):
                c = coords.coordinates(product(x, y))
                if c is None:
                    raise StructureError(
                        f"product of basis elements {i} and {j} leaves the span", code="not_closed"
                    )
                row.append(c)
            table.append(tuple(row))
        unit = None
        if unit_element is not None:
            unit = coords.coordinates(tuple(unit_element))
            if unit is None:
                raise NotUnital("identity element is not in the span")
        return cls(field, dim, tuple(table), unit, tuple(labels))

    @classmethod
    def from_matrices(cls, field, matrices, labels=()):
        """Algebra spanned by square matrices; the identity matrix must lie in their span."""
        n = matrices[0].nrows
        flat = [tuple(x for row in m.rows for x in row) for m in matrices]

        def product(x, y):
            a = Matrix(field, tuple(tuple(x[r * n:(r + 1) * n]) for r in range(n)), n)
            b = Matrix(field, tuple(tuple(y[r * n:(r + 1) * n]) for r in range(n)), n)
            return tuple(v for row in (a @ b).rows for v in row)

        identity = tuple(v for row in Matrix.identity(field, n).rows for v in row)
        return cls.from_basis(field, flat, product, identity, labels)

    @property
    def zero(self):
        return (self.field.zero,) * self.dim

    @property
    def one(self):
        if self.unit is None:
            raise NotUnital("algebra has no identity element")
        return self.unit

    def basis_vector(self, i):
        return unit_vector(self.field, self.dim, i)

    def label(self, i):
        return self.labels[i] if self.labels else f"b{i}"

    def mul(self, x, y):
        f = self.field
        out = self.zero
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                out = vec_axpy(f, f.mul(xi, yj), row[j], out)
        return out

    def add(self, x, y):
        return vec_add(self.field, x, y)

    def sub(self, x, y):
        return vec_sub(self.field, x, y)

    def scale(self, c, x):
        return tuple(self.field.mul(c, a) for a in x)

    def power(self, x, n):
        result = self.one
        for _ in range(n):
            result = self.mul(result, x)
        return result

    def left_matrix(self, x):
        """Matrix of y ↦ x·y in the basis."""
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    @cached_property
    def left_basis_matrices(self):
        """Left multiplication matrices of the basis elements."""
        out = []
        for i in range(self.dim):
            cols = self.table[i]
            out.append(Matrix.from_columns(self.field, cols, self.dim))
        return tuple(out)

    def is_unital(self):
        if self.unit is None:
            return False
        for j in range(self.dim):
            b = self.basis_vector(j)
            if self.mul(self.unit, b) != b or self.mul(b, self.unit) != b:
                return False
        return True

    def require_unital(self):
        if not self.is_unital():
            raise NotUnital("algebra has no two-sided identity element")

    def associativity_violations(self, limit=None):
        """Basis triples (i, j, k) with (b_i b_j) b_k ≠ b_i (b_j b_k)."""
        bad = []
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.table[i][j]
                for k in range(self.dim):
                    left = self.mul(ij, self.basis_vector(k))
                    right = self.mul(self.basis_vector(i), self.table[j][k])
                    if left != right:
                        bad.append((i, j, k))
                        if limit and len(bad) >= limit:
                            return bad
        return bad

    def span_products(self, left_rows, right_rows):
        """RowSpace spanned by all products x·y, x from left_rows, y from right_rows."""
        products = [self.mul(x, y) for x in left_rows for y in right_rows]
        return RowSpace(self.field, self.dim, products)

    def two_sided_ideal(self, rows):
        """The two-sided ideal generated by the given elements."""
        f = self.field
        basis = [self.basis_vector(i) for i in range(self.dim)]
        space = RowSpace(f, self.dim, rows)
        while True:
            candidates = list(space.basis)
            for x in space.basis:
                for b in basis:
                    candidates.append(self.mul(b, x))
                    candidates.append(self.mul(x, b))
            grown = RowSpace(f, self.dim, candidates)
            if grown.dim == space.dim:
                return space
            space = grown

    def is_ideal(self, space):
        for x in space.basis:
            for i in range(self.dim):
                b = self.basis_vector(i)
                if not space.contains(self.mul(b, x)) or not space.contains(self.mul(x, b)):
                    return False
        return True

    def center(self):
        """RowSpace of elements commuting with every basis element."""
        f = self.field
        rows = []
        for i in range(self.dim):
            # column j holds the coordinates of b_j·b_i − b_i·b_j
            cols = [vec_sub(f, self.table[j][i], self.table[i][j]) for j in range(self.dim)]
            rows.extend(Matrix.from_columns(f, cols, self.dim).rows)
        return RowSpace.of(kernel_basis(Matrix(f, tuple(rows), self.dim)))

    def is_commutative(self):
        return all(
            self.table[i][j] == self.table[j][i] for i in range(self.dim) for j in range(i + 1, self.dim)
        )

    def opposite(self):
        table = tuple(tuple(self.table[j][i] for j in range(self.dim)) for i in range(self.dim))
        return FiniteAlgebra(self.field, self.dim, table, self.unit, self.labels)

    def corner(self, e):
        """
        The corner algebra e·A·e with identity e, plus the inclusion of its basis.

        Returns:
            (FiniteAlgebra, tuple of ambient vectors forming its basis)
        """
        space = RowSpace(
            self.field,
            self.dim,
            [self.mul(self.mul(e, self.basis_vector(i)), e) for i in range(self.dim)],
        )
        elements = space.basis
        algebra = FiniteAlgebra.from_basis(self.field, elements, self.mul, e)
        return algebra, elements

    def quotient(self, ideal):
        """
        A/I using the non-pivot standard basis vectors as a complement of I.

        Returns:
            QuotientAlgebra
        """
        return QuotientAlgebra(self, ideal)

    def digest(self):
        """Canonical SHA-256 of the structure constants (used to derive seeds)."""
        payload = {
            'field': self.field.tag,
            'table': [[[self.field.to_json(c) for c in v] for v in row] for row in self.table],
            'unit': None if self.unit is None else [self.field.to_json(c) for c in self.unit],
        }
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()

    def is_zero(self, x):
        return is_zero_vector(x)


class QuotientAlgebra:
    """
    The quotient of an algebra by a two-sided ideal.

    Attributes:
        ambient: The algebra A
        ideal: RowSpace of I
        algebra: FiniteAlgebra structure of A/I on the complement basis
    """

    def __init__(self, ambient, ideal):
        if not ambient.is_ideal(ideal):
            raise StructureError("quotient by a subspace that is not a two-sided ideal", code="not_an_ideal")
        self.ambient = ambient
        self.ideal = ideal
        self.complement = ideal.complement_pivots()
        f = ambient.field
        n = len(self.complement)
        table = []
        for a in self.complement:
            row = []
            for b in self.complement:
                row.append(self.project(ambient.table[a][b]))
            table.append(tuple(row))
        unit = self.project(ambient.unit) if ambient.unit is not None else None
        labels = tuple(ambient.label(c) for c in self.complement)
        self.algebra = FiniteAlgebra(f, n, tuple(table), unit, labels)

    def project(self, x):
        reduced = self.ideal.reduce(x)
        return tuple(reduced[c] for c in self.complement)

    def lift(self, y):
        """The representative of y supported on the complement columns."""
        f = self.ambient.field
        out = [f.zero] * self.ambient.dim
        for c, value in zip(self.complement, y):
            out[c] = value
        return tuple(out)
