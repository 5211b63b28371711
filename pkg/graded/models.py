"""
Graded vector spaces, algebras, modules and homomorphisms.

Every structure is stored densely per arrow. Action constants are kept as
matrices: action[(α, β)][i] is the matrix of m ↦ a_i·m from M_β to M_{αβ},
where a_i is the i-th basis element of A_α. An algebra stores its
multiplication in the same shape, so A acting on itself is its regular
module.
"""

import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property

from exactfield.matrices import Matrix, RowSpace, kernel_basis, rank, unit_vector, vec_axpy
from gradalg.exceptions import DimensionMismatch, StructureError


def _components(dims):
    return {str(k): int(v) for k, v in dims.items() if int(v) > 0}


@dataclass(frozen=True, eq=False)
class GradedVectorSpace:
    """
    A family of finite-dimensional spaces V_γ indexed by arrows.

    Attributes:
        category: IndexCategory whose support carries the components
        dims: Arrow -> dimension (zero components omitted)
        labels: Arrow -> list of basis labels (optional)
    """

    category: object
    dims: dict
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'dims', _components(self.dims))
        for arrow in self.dims:
            if not self.category.has_arrow(arrow):
                raise StructureError(
                    f"component at unknown arrow {arrow!r}", code="dangling_arrow", params={'arrow': arrow}
                )

    def dim(self, gamma):
        return self.dims.get(gamma, 0)

    @property
    def total_dim(self):
        return sum(self.dims.values())

    @property
    def support(self):
        return tuple(a for a in self.category.support if self.dim(a))

    @classmethod
    def concentrated(cls, category, gamma, dim=1):
        """R[γ]: the space K^dim placed at γ."""
        return cls(category, {gamma: dim})


class _ActionMixin:
    """Shared accessors for objects carrying action constants."""

    def dim(self, gamma):
        return self.dims.get(gamma, 0)

    @property
    def total_dim(self):
        return sum(self.dims.values())

    @property
    def support(self):
        return tuple(a for a in self.category.support if self.dims.get(a, 0))

    def act(self, alpha, beta, i):
        """Matrix of a_i: M_β -> M_{αβ}, or None when the product is zero."""
        mats = self.action.get((alpha, beta))
        return None if mats is None else mats[i]

    def act_vector(self, alpha, i, beta, v):
        """(αβ, a_i·v) or None when the product vanishes by grading."""
        gamma = self.category.compose_in_support(alpha, beta)
        if gamma is None or not self.dim(gamma):
            return None
        mat = self.act(alpha, beta, i)
        if mat is None:
            return gamma, (self.field.zero,) * self.dim(gamma)
        return gamma, mat.apply(v)

    def act_divisor(self, element, gamma, v):
        """x·v ∈ M_γ for x ∈ A(γ:γ) given as {α: coordinates} and v ∈ M_γ."""
        f = self.field
        out = (f.zero,) * self.dim(gamma)
        for alpha, coords in element.items():
            for k, c in enumerate(coords):
                if c == 0:
                    continue
                product = self.act_vector(alpha, k, gamma, v)
                if product is not None:
                    out = vec_axpy(f, c, product[1], out)
        return out

    def degree_offsets(self):
        offsets, total = {}, 0
        for gamma in self.category.support:
            offsets[gamma] = total
            total += self.dims.get(gamma, 0)
        return offsets, total


@dataclass(frozen=True, eq=False)
class GradedAlgebra(_ActionMixin):
    """
    A category-graded algebra.

    Attributes:
        category: IndexCategory
        field: Base field
        dims: Arrow -> dim A_α
        action: (α, β) -> tuple of matrices, the multiplication constants
        local_units: Object -> coordinates of e_s in A_{1_s}
        labels: Arrow -> basis labels
        name: Display name
    """

    category: object
    field: object
    dims: dict
    action: dict
    local_units: dict
    labels: dict = field(default_factory=dict)
    name: str = "A"

    def __post_init__(self):
        object.__setattr__(self, 'dims', _components(self.dims))
        _check_action_shapes(self, self)

    def basis_labels(self, alpha):
        return self.labels.get(alpha) or [f"{alpha}#{i}" for i in range(self.dim(alpha))]

    def unit(self, obj):
        ident = self.category.identity(obj)
        units = self.local_units.get(obj)
        if units is None:
            return (self.field.zero,) * self.dim(ident)
        return units

    def product(self, alpha, x, beta, y):
        """
        Product of x ∈ A_α and y ∈ A_β.

        Returns:
            (αβ, coordinates) or None when the product vanishes by grading
        """
        gamma = self.category.compose_in_support(alpha, beta)
        if gamma is None or not self.dim(gamma):
            return None
        f = self.field
        out = (f.zero,) * self.dim(gamma)
        mats = self.action.get((alpha, beta))
        if mats is None:
            return gamma, out
        for i, xi in enumerate(x):
            if xi != 0:
                out = vec_axpy(f, xi, mats[i].apply(y), out)
        return gamma, out

    def basis_product(self, alpha, i, beta, j):
        mats = self.action.get((alpha, beta))
        gamma = self.category.compose_in_support(alpha, beta)
        if gamma is None or not self.dim(gamma):
            return None
        if mats is None:
            return gamma, (self.field.zero,) * self.dim(gamma)
        return gamma, mats[i].column(j)

    @cached_property
    def _projectives(self):
        return {}

    def projective(self, gamma):
        """A[γ] = F_A(R[γ]), built once per arrow."""
        cache = self._projectives
        if gamma not in cache:
            from .functors import free_module

            space = GradedVectorSpace.concentrated(self.category, gamma)
            cache[gamma] = free_module(self, space, name=f"A[{gamma}]")
        return cache[gamma]

    def regular_module(self):
        return GradedModule(self, self.dims, self.action, name=self.name, labels=self.labels)

    def digest(self):
        """Canonical SHA-256 of the structure constants."""
        payload = {
            'field': self.field.tag,
            'dims': sorted(self.dims.items()),
            'action': sorted(
                [list(k), [m.to_json() for m in mats]] for k, mats in self.action.items()
            ),
            'units': sorted([k, [self.field.to_json(x) for x in v]] for k, v in self.local_units.items()),
        }
        return hashlib.sha256(json.dumps(payload, sort_keys=True, default=str).encode()).hexdigest()

    @classmethod
    def from_algebra(cls, algebra, name="A"):
        """
        An ordinary unital algebra as a graded algebra over the one-arrow category.
        """
        from category.builders import trivial_category

        c = trivial_category()
        arrow = c.support[0]
        obj = c.objects[0]
        mats = tuple(algebra.left_basis_matrices)
        return cls(
            c,
            algebra.field,
            {arrow: algebra.dim},
            {(arrow, arrow): mats} if algebra.dim else {},
            {obj: algebra.one},
            {arrow: [algebra.label(i) for i in range(algebra.dim)]},
            name,
        )


@dataclass(frozen=True, eq=False)
class GradedModule(_ActionMixin):
    """
    A graded left module.

    Attributes:
        algebra: GradedAlgebra acting
        dims: Arrow -> dim M_γ
        action: (α, β) -> tuple of matrices A_α ⊗ M_β -> M_{αβ}
        name: Display name
        labels: Arrow -> basis labels
    """

    algebra: object
    dims: dict
    action: dict
    name: str = "M"
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'dims', _components(self.dims))
        _check_action_shapes(self, self.algebra)

    @property
    def category(self):
        return self.algebra.category

    @property
    def field(self):
        return self.algebra.field

    def underlying(self):
        return GradedVectorSpace(self.category, dict(self.dims), dict(self.labels))

    def zero_vector(self, gamma):
        return (self.field.zero,) * self.dim(gamma)

    def basis_vector(self, gamma, i):
        return unit_vector(self.field, self.dim(gamma), i)

    def is_zero(self):
        return not self.dims

    def identity(self):
        return GradedHom(self, self, {g: Matrix.identity(self.field, n) for g, n in self.dims.items()})

    def zero_hom(self, target):
        return GradedHom.zero(self, target)


def _check_action_shapes(structure, algebra):
    c = structure.category
    for key, mats in structure.action.items():
        alpha, beta = key
        gamma = c.compose_in_support(alpha, beta) if c.has_arrow(alpha) and c.has_arrow(beta) else None
        if gamma is None:
            raise StructureError(
                f"action constants at ({alpha}, {beta}) which do not compose inside the support",
                code="dangling_arrow",
                params={'pair': [str(alpha), str(beta)]},
            )
        if len(mats) != algebra.dim(alpha):
            raise DimensionMismatch(f"expected {algebra.dim(alpha)} matrices at ({alpha}, {beta}), got {len(mats)}")
        for m in mats:
            if m.shape != (structure.dim(gamma), structure.dim(beta)):
                raise DimensionMismatch(
                    f"action matrix at ({alpha}, {beta}) has shape {m.shape}, "
                    f"expected {(structure.dim(gamma), structure.dim(beta))}"
                )


@dataclass(frozen=True, eq=False)
class GradedHom:
    """
    A degree-wise linear map f_γ: M_γ -> N_γ.

    Attributes:
        source: GradedModule M
        target: GradedModule N
        maps: Arrow -> Matrix of shape (dim N_γ, dim M_γ); zero blocks may be omitted
    """

    source: object
    target: object
    maps: dict

    def __post_init__(self):
        f = self.source.field
        full = {}
        for gamma in self.source.category.support:
            rows, cols = self.target.dim(gamma), self.source.dim(gamma)
            if not rows or not cols:
                continue
            m = self.maps.get(gamma)
            if m is None:
                m = Matrix.zeros(f, rows, cols)
            if m.shape != (rows, cols):
                raise DimensionMismatch(f"map at {gamma} has shape {m.shape}, expected {(rows, cols)}")
            full[gamma] = m
        object.__setattr__(self, 'maps', full)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, {})

    @property
    def field(self):
        return self.source.field

    def at(self, gamma):
        m = self.maps.get(gamma)
        if m is None:
            return Matrix.zeros(self.field, self.target.dim(gamma), self.source.dim(gamma))
        return m

    def apply(self, gamma, v):
        if not self.target.dim(gamma):
            return ()
        return self.at(gamma).apply(v)

    def compose(self, other):
        """self ∘ other."""
        if other.target is not self.source and other.target.dims != self.source.dims:
            raise DimensionMismatch("homomorphisms are not composable")
        return GradedHom(
            other.source,
            self.target,
            {g: self.at(g) @ other.at(g) for g in self._arrows(other)},
        )

    def _arrows(self, other=None):
        arrows = set(self.maps)
        if other is not None:
            arrows |= set(other.maps)
        return [g for g in self.source.category.support if g in arrows]

    def __add__(self, other):
        return GradedHom(self.source, self.target, {g: self.at(g) + other.at(g) for g in self._arrows(other)})

    def __sub__(self, other):
        return GradedHom(self.source, self.target, {g: self.at(g) - other.at(g) for g in self._arrows(other)})

    def scale(self, c):
        return GradedHom(self.source, self.target, {g: m.scale(c) for g, m in self.maps.items()})

    def is_zero(self):
        return all(m.is_zero() for m in self.maps.values())

    def as_vector(self):
        """Flatten the blocks in support order (row-major per block)."""
        out = []
        for gamma in self.source.category.support:
            rows, cols = self.target.dim(gamma), self.source.dim(gamma)
            if rows and cols:
                for row in self.at(gamma).rows:
                    out.extend(row)
        return tuple(out)

    @classmethod
    def from_vector(cls, source, target, vector):
        maps, pos = {}, 0
        for gamma in source.category.support:
            rows, cols = target.dim(gamma), source.dim(gamma)
            if rows and cols:
                block = tuple(tuple(vector[pos + r * cols: pos + (r + 1) * cols]) for r in range(rows))
                maps[gamma] = Matrix(source.field, block, cols)
                pos += rows * cols
        return cls(source, target, maps)

    def rank(self, gamma):
        return rank(self.at(gamma)) if gamma in self.maps else 0

    def is_surjective(self):
        return all(self.rank(g) == self.target.dim(g) for g in self.target.support)

    def is_injective(self):
        return all(self.rank(g) == self.source.dim(g) for g in self.source.support)

    def kernel(self):
        """GradedSubmodule of the source."""
        spaces = {}
        for gamma in self.source.support:
            if gamma in self.maps:
                spaces[gamma] = RowSpace.of(kernel_basis(self.maps[gamma]))
            else:
                spaces[gamma] = RowSpace.whole(self.field, self.source.dim(gamma))
        return GradedSubmodule(self.source, spaces)

    def image(self):
        """GradedSubmodule of the target."""
        spaces = {}
        for gamma in self.target.support:
            m = self.maps.get(gamma)
            rows = m.transpose().rows if m is not None else ()
            spaces[gamma] = RowSpace(self.field, self.target.dim(gamma), rows)
        return GradedSubmodule(self.target, spaces)


@dataclass(frozen=True, eq=False)
class GradedSubmodule:
    """
    A graded subspace of a module, degree-wise in reduced form.

    Attributes:
        ambient: GradedModule
        spaces: Arrow -> RowSpace inside K^{dim M_γ} (missing arrows are zero)
    """

    ambient: object
    spaces: dict

    def space(self, gamma):
        s = self.spaces.get(gamma)
        if s is None:
            return RowSpace(self.ambient.field, self.ambient.dim(gamma))
        return s

    def dim(self, gamma):
        return self.space(gamma).dim

    @property
    def total_dim(self):
        return sum(self.dim(g) for g in self.ambient.support)

    def is_zero(self):
        return self.total_dim == 0

    def contains(self, other):
        return all(self.space(g).contains_space(other.space(g)) for g in self.ambient.support)

    def __eq__(self, other):
        return isinstance(other, GradedSubmodule) and all(
            self.space(g) == other.space(g) for g in self.ambient.support
        )

    def __hash__(self):
        return hash(tuple(self.space(g) for g in self.ambient.support))

    def __add__(self, other):
        return GradedSubmodule(self.ambient, {g: self.space(g) + other.space(g) for g in self.ambient.support})

    def intersection(self, other):
        return GradedSubmodule(
            self.ambient, {g: self.space(g).intersection(other.space(g)) for g in self.ambient.support}
        )

    def is_closed(self):
        """True iff the subspace family is stable under the action."""
        m = self.ambient
        for (alpha, beta), mats in m.action.items():
            gamma = m.category.compose_in_support(alpha, beta)
            target = self.space(gamma)
            for mat in mats:
                for v in self.space(beta).basis:
                    if not target.contains(mat.apply(v)):
                        return False
        return True

    def as_module(self, name=None):
        """
        The submodule as a module in its own right, in the rref basis of each
        degree, together with the inclusion hom.
        """
        m = self.ambient
        f = m.field
        dims = {g: self.dim(g) for g in m.support}
        action = {}
        for (alpha, beta), mats in m.action.items():
            gamma = m.category.compose_in_support(alpha, beta)
            src, dst = self.space(beta), self.space(gamma)
            if not src.dim or not dst.dim:
                continue
            induced = []
            for mat in mats:
                cols = []
                for v in src.basis:
                    w = mat.apply(v)
                    if not dst.contains(w):
                        raise StructureError(
                            f"subspace is not closed under A_{alpha} acting on degree {beta}", code="not_submodule"
                        )
                    cols.append(dst.coordinates(w))
                induced.append(Matrix.from_columns(f, cols, dst.dim))
            action[(alpha, beta)] = tuple(induced)
        module = GradedModule(m.algebra, dims, action, name=name or f"sub({m.name})")
        inclusion = GradedHom(
            module, m, {g: Matrix.from_columns(f, self.space(g).basis, m.dim(g)) for g in module.support}
        )
        return module, inclusion

    def quotient(self, name=None):
        """
        M / S on the complement coordinates of each degree, with the projection.
        """
        m = self.ambient
        f = m.field
        complements = {g: self.space(g).complement_pivots() for g in m.support}

        def project(gamma, v):
            reduced = self.space(gamma).reduce(v)
            return tuple(reduced[c] for c in complements[gamma])

        dims = {g: len(c) for g, c in complements.items()}
        action = {}
        for (alpha, beta), mats in m.action.items():
            gamma = m.category.compose_in_support(alpha, beta)
            if not dims.get(beta) or not dims.get(gamma):
                continue
            induced = []
            for mat in mats:
                cols = [project(gamma, mat.column(c)) for c in complements[beta]]
                induced.append(Matrix.from_columns(f, cols, dims[gamma]))
            action[(alpha, beta)] = tuple(induced)
        module = GradedModule(m.algebra, dims, action, name=name or f"{m.name}/S")
        maps = {}
        for g in module.support:
            cols = [project(g, unit_vector(f, m.dim(g), j)) for j in range(m.dim(g))]
            maps[g] = Matrix.from_columns(f, cols, dims[g])
        return module, GradedHom(m, module, maps)

    def describe(self):
        return {
            g: [[self.ambient.field.to_json(x) for x in row] for row in self.space(g).basis]
            for g in self.ambient.support
            if self.dim(g)
        }

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, {})

    @classmethod
    def whole(cls, ambient):
        return cls(ambient, {g: RowSpace.whole(ambient.field, ambient.dim(g)) for g in ambient.support})


@dataclass(frozen=True, eq=False)
class DivisorSpace:
    """
    A(γ:β) = ⊕_{αβ=γ} A_α.

    Attributes:
        gamma, beta: The arrows
        summands: Tuple of (α, dim A_α) over all α with αβ = γ
        ring: FiniteAlgebra structure when β = γ (unit e_t), else None
    """

    gamma: str
    beta: str
    summands: tuple
    ring: object = None

    @property
    def dim(self):
        return sum(d for _, d in self.summands)

    def basis_index(self):
        """List of (α, i) in the order of the coordinates."""
        return [(alpha, i) for alpha, d in self.summands for i in range(d)]
