"""
Window scenes for the Z-graded polynomial algebra and the reports built on them.
"""

from dataclasses import dataclass, field
from functools import cached_property


@dataclass(frozen=True, eq=False)
class WindowScene:
    """
    The polynomial algebra and the module X on the Int window {-d, …, 2d}.

    Attributes:
        d: Window radius
        field: Base field
        algebra: A_k = K·a_k for 0 ≤ k ≤ 2d
        module: X_k = K·x_k for -d ≤ k ≤ d, a_k·x_l = x_{k+l}
        free: F = F_A(X)
        counit: f: F -> X, a_k ⊗ x_l ↦ x_{k+l}
    """

    d: int
    field: object
    algebra: object
    module: object
    free: object
    counit: object

    @property
    def degrees(self):
        """Degrees of X, which index the generators a_0 ⊗ x_k of F."""
        return range(-self.d, self.d + 1)

    @property
    def idempotent_rows(self):
        """Rows whose idempotency is visible on the degrees |n| ≤ d − 1."""
        return range(-self.d, self.d)

    def row(self, k):
        """Indices l of the coefficients λ_{k,l}: a_{k-l} ⊗ x_l must exist."""
        return range(max(-self.d, k - 2 * self.d), k + 1)

    @cached_property
    def positions(self):
        """Degree n -> {(j, l): position of a_j ⊗ x_l in F_n}."""
        out = {}
        for gamma in self.free.support:
            entries = self.free_basis[gamma]
            out[int(gamma)] = {(int(a), int(b)): n for n, (a, _, b, _) in enumerate(entries)}
        return out

    @cached_property
    def free_basis(self):
        from graded.functors import free_basis

        return free_basis(self.algebra, self.module.underlying())

    def parameter_count(self):
        return sum(len(self.row(k)) for k in self.degrees)


@dataclass(frozen=True)
class IdempotentAnalysis:
    """
    Attributes:
        coefficients: (k, l) -> λ_{k,l}, the coefficient of a_{k-l} ⊗ x_l in e(a_0 ⊗ x_k)
        support: I, the k with λ_{k,k} = 1, ascending
        diagonal_failures: Rows where λ_{k,k}² ≠ λ_{k,k} although idempotency is visible there
    """

    coefficients: dict
    support: tuple
    diagonal_failures: tuple = ()

    @property
    def diagonal_ok(self):
        return not self.diagonal_failures

    @cached_property
    def _leads(self):
        leads = {}
        for (row, l), c in self.coefficients.items():
            if c != 0 and l > leads.get(row, l - 1):
                leads[row] = l
        return leads

    def lead(self, k):
        """Largest l with λ_{k,l} ≠ 0, or None."""
        return self._leads.get(k)

    def as_dict(self):
        return {'I': list(self.support), 'diagonal_failures': list(self.diagonal_failures)}


@dataclass(frozen=True)
class DescentReport:
    """
    Descent from every k ∈ I: the leading index of e(a_0 ⊗ x_{k-1}) lies in I
    and is below k. Every chain must reach the lower edge of the window.

    Attributes:
        admissible: f∘e = f held on the interior, so the descent applies
        chains: k -> descending chain in I starting at k
        violations: (k, reason) where a descent step failed inside the window
        edge: Lowest degree of the window
    """

    admissible: bool
    chains: dict = field(default_factory=dict)
    violations: tuple = ()
    edge: int = None

    @property
    def reaches_edge(self):
        return self.admissible and not self.violations and all(c[-1] == self.edge for c in self.chains.values())

    @property
    def max_depth(self):
        return max((len(c) - 1 for c in self.chains.values()), default=0)

    def as_dict(self):
        return {
            'admissible': self.admissible,
            'reaches_edge': self.reaches_edge,
            'max_depth': self.max_depth,
            'chains': {str(k): list(c) for k, c in sorted(self.chains.items())},
            'violations': [list(v) for v in self.violations],
        }


@dataclass(frozen=True)
class KernelWitness:
    """
    v = a_0 ⊗ x_k − a_{k-l} ⊗ x_l for k, l ∈ I with l < k.

    Attributes:
        image: e(v) as a vector of F_k
        nonzero: e(v) ≠ 0
        in_kernel: f(e(v)) = 0
    """

    k: int
    l: int
    vector: tuple
    image: tuple
    nonzero: bool
    in_kernel: bool

    def as_dict(self, field):
        return {
            'k': self.k,
            'l': self.l,
            'e(v)': [field.to_json(x) for x in self.image],
            'nonzero': self.nonzero,
            'in_kernel': self.in_kernel,
        }


@dataclass(frozen=True)
class SearchReport:
    """
    Exhaustive enumeration of equivariant e with f∘e = f and e² = e on the interior.

    Attributes:
        d, field: The scene
        parameters: Number of λ coefficients
        admissible: Number of admissible e
        diagonal_ok: Admissible e whose diagonal values are idempotent scalars
        reaching_edge: Admissible e whose descent chains all reach the edge
        interior_minimal: Admissible e with a descent violation
        empty_support: Admissible e with I = ∅
        min_max_depth: Minimum over e of the longest descent chain
        supports: Distinct sets I with their multiplicities
        restricted_admissible: Admissible e whose restriction to radius d − 1 is
            admissible there; None for d = 1
    """

    d: int
    field: str
    parameters: int
    admissible: int
    diagonal_ok: int
    reaching_edge: int
    interior_minimal: int
    empty_support: int
    min_max_depth: int
    supports: dict = field(default_factory=dict)
    restricted_admissible: int = None

    @property
    def restricts_admissibly(self):
        """Every admissible e restricts to an admissible e on the smaller window."""
        if self.restricted_admissible is None:
            return None
        return self.restricted_admissible == self.admissible

    @property
    def confirms_descent(self):
        return (
            self.admissible > 0
            and self.diagonal_ok == self.admissible
            and self.reaching_edge == self.admissible
            and self.interior_minimal == 0
            and self.empty_support == 0
        )

    def as_dict(self):
        return {
            'd': self.d,
            'field': self.field,
            'parameters': self.parameters,
            'admissible': self.admissible,
            'diagonal_ok': self.diagonal_ok,
            'reaching_edge': self.reaching_edge,
            'interior_minimal': self.interior_minimal,
            'empty_support': self.empty_support,
            'min_max_depth': self.min_max_depth,
            'confirms_descent': self.confirms_descent,
            'restricted_admissible': self.restricted_admissible,
            'restricts_admissibly': self.restricts_admissibly,
            'supports': {k: v for k, v in sorted(self.supports.items())},
        }
