"""
Constructors for the supported kinds of grading category.
"""

import itertools
import logging

from gradalg.exceptions import NotAGroup, NotAPoset, StructureError, WindowError

from .models import OUT_OF_WINDOW, Arrow, CategoryKind, IndexCategory, Lattice

logger = logging.getLogger(__name__)

GROUP_OBJECT = "*"


def explicit_category(objects, arrows, identities, composition):
    """
    A finite category from explicit tables.

    Args:
        objects: Object ids
        arrows: (id, source, target) triples
        identities: Object id -> identity arrow id
        composition: (α, β, αβ) triples for composable pairs

    Raises:
        StructureError: On duplicate or dangling ids
    """
    objects = tuple(str(o) for o in objects)
    if len(set(objects)) != len(objects):
        raise StructureError("duplicate object ids", code="duplicate_object")
    records = []
    for arrow_id, source, target in arrows:
        if source not in objects or target not in objects:
            raise StructureError(
                f"arrow {arrow_id!r} has an unknown endpoint",
                code="dangling_arrow",
                params={'arrow': str(arrow_id)},
            )
        records.append(Arrow(str(arrow_id), str(source), str(target)))
    ids = {a.id for a in records}
    if len(ids) != len(records):
        raise StructureError("duplicate arrow ids", code="duplicate_arrow")
    identities = {str(o): str(a) for o, a in dict(identities).items()}
    for obj, arrow_id in identities.items():
        if obj not in objects or arrow_id not in ids:
            raise StructureError(
                f"identity {arrow_id!r} of {obj!r} is dangling",
                code="dangling_identity",
                params={'object': obj, 'arrow': arrow_id},
            )
    table = {}
    for alpha, beta, gamma in composition:
        for arrow_id in (alpha, beta, gamma):
            if str(arrow_id) not in ids:
                raise StructureError(
                    f"composition mentions unknown arrow {arrow_id!r}",
                    code="dangling_arrow",
                    params={'arrow': str(arrow_id)},
                )
        table[(str(alpha), str(beta))] = str(gamma)
    return IndexCategory(CategoryKind.EXPLICIT_FINITE, objects, tuple(records), identities, table)


def trivial_category(obj="*", arrow="1"):
    """One object with only its identity arrow; ordinary algebras live here."""
    return explicit_category([obj], [(arrow, obj, obj)], {obj: arrow}, [(arrow, arrow, arrow)])


def from_poset(elements, relation):
    """
    The category with one arrow λ -> μ for every pair λ ≤ μ.

    Args:
        elements: Poset elements
        relation: Pairs (λ, μ) meaning λ ≤ μ; must already be reflexive

    Raises:
        NotAPoset: If the relation is not reflexive, antisymmetric and transitive
    """
    elements = tuple(str(e) for e in elements)
    pairs = {(str(a), str(b)) for a, b in relation}
    for a, b in pairs:
        if a not in elements or b not in elements:
            raise NotAPoset(f"relation mentions unknown element in ({a}, {b})", params={'pair': [a, b]})
    for e in elements:
        if (e, e) not in pairs:
            raise NotAPoset(f"relation is not reflexive at {e}", code="not_reflexive", params={'element': e})
    for a, b in pairs:
        if a != b and (b, a) in pairs:
            raise NotAPoset(
                f"relation is not antisymmetric: {a} ≤ {b} ≤ {a}",
                code="not_antisymmetric",
                params={'pair': [a, b]},
            )
    for (a, b), (c, d) in itertools.product(sorted(pairs), repeat=2):
        if b == c and (a, d) not in pairs:
            raise NotAPoset(
                f"relation is not transitive: {a} ≤ {b} ≤ {d}",
                code="not_transitive",
                params={'chain': [a, b, d]},
            )

    def arrow_id(low, high):
        return f"{low}->{high}"

    order = {e: i for i, e in enumerate(elements)}
    ordered = sorted(pairs, key=lambda p: (order[p[0]], order[p[1]]))
    arrows = tuple(Arrow(arrow_id(a, b), a, b) for a, b in ordered)
    identities = {e: arrow_id(e, e) for e in elements}
    composition = {}
    # (μ -> ν) ∘ (λ -> μ) = λ -> ν
    for lam, mu in ordered:
        for mu2, nu in ordered:
            if mu2 == mu:
                composition[(arrow_id(mu, nu), arrow_id(lam, mu))] = arrow_id(lam, nu)
    logger.debug(f"poset category with {len(elements)} objects and {len(arrows)} arrows")
    return IndexCategory(
        CategoryKind.POSET_INTERVAL,
        elements,
        arrows,
        identities,
        composition,
        {'relation': [list(p) for p in ordered]},
    )


def from_group(elements, table):
    """
    One object whose arrows are the group elements.

    Args:
        elements: Element ids
        table: table[i][j] is the id of elements[i]·elements[j]

    Raises:
        NotAGroup: Naming the failing axiom
    """
    elements = tuple(str(g) for g in elements)
    n = len(elements)
    if n == 0:
        raise NotAGroup("a group has at least one element", code="empty")
    if len(table) != n or any(len(row) != n for row in table):
        raise NotAGroup("Cayley table is not square over the elements", code="not_square")
    index = {g: i for i, g in enumerate(elements)}
    mult = {}
    for i, row in enumerate(table):
        for j, entry in enumerate(row):
            entry = str(entry)
            if entry not in index:
                raise NotAGroup(
                    f"{elements[i]}·{elements[j]} = {entry} is not an element",
                    code="closure",
                    params={'pair': [elements[i], elements[j]]},
                )
            mult[(elements[i], elements[j])] = entry
    for a, b, c in itertools.product(elements, repeat=3):
        if mult[(mult[(a, b)], c)] != mult[(a, mult[(b, c)])]:
            raise NotAGroup(
                f"({a}·{b})·{c} ≠ {a}·({b}·{c})",
                code="associativity",
                params={'triple': [a, b, c]},
            )
    identity = next(
        (e for e in elements if all(mult[(e, g)] == g and mult[(g, e)] == g for g in elements)),
        None,
    )
    if identity is None:
        raise NotAGroup("no two-sided identity element", code="identity")
    for g in elements:
        if not any(mult[(g, h)] == identity for h in elements):
            raise NotAGroup(f"{g} has no inverse", code="inverses", params={'element': g})
    arrows = tuple(Arrow(g, GROUP_OBJECT, GROUP_OBJECT) for g in elements)
    return IndexCategory(
        CategoryKind.FINITE_GROUP,
        (GROUP_OBJECT,),
        arrows,
        {GROUP_OBJECT: identity},
        mult,
        {'elements': list(elements), 'identity': identity},
    )


def window_arrow_id(point):
    return ",".join(str(x) for x in point)


def window_point(arrow_id):
    return tuple(int(x) for x in arrow_id.split(","))


def monoid_window(rank, lattice, window):
    """
    A finite window of Nat^k or Int^k, composed by addition.

    Composites leaving the window map to OUT_OF_WINDOW, whose components are
    zero in every algebra and module. For Nat^k the window must be downward
    closed, which makes this the quotient by the ideal of high degrees.

    Args:
        rank: k
        lattice: Lattice.NAT or Lattice.INT (or their string values)
        window: Points of the window; ints are accepted when rank is 1

    Raises:
        WindowError: If the window is empty, misses 0, has points of the
            wrong rank or (for Nat) is not downward closed
    """
    lattice = Lattice(lattice)
    points = []
    for p in window:
        point = (int(p),) if isinstance(p, (int, str)) and rank == 1 else tuple(int(x) for x in p)
        if len(point) != rank:
            raise WindowError(f"point {point} does not have rank {rank}", code="wrong_rank")
        points.append(point)
    points = sorted(set(points))
    if not points:
        raise WindowError("window is empty", code="empty_window")
    zero = (0,) * rank
    if zero not in points:
        raise WindowError("window must contain the identity 0", code="missing_identity")
    members = set(points)
    if lattice == Lattice.NAT:
        for p in points:
            if any(x < 0 for x in p):
                raise WindowError(f"{p} is not in Nat^{rank}", code="negative_point", params={'point': list(p)})
            for i in range(rank):
                if p[i] > 0:
                    below = p[:i] + (p[i] - 1,) + p[i + 1:]
                    if below not in members:
                        raise WindowError(
                            f"window is not downward closed: {below} ≤ {p} is missing",
                            code="not_downward_closed",
                            params={'point': list(p), 'missing': list(below)},
                        )
    ids = [window_arrow_id(p) for p in points]
    arrows = tuple(Arrow(i, GROUP_OBJECT, GROUP_OBJECT) for i in ids)
    composition = {}
    for p, q in itertools.product(points, repeat=2):
        total = tuple(a + b for a, b in zip(p, q))
        composition[(window_arrow_id(p), window_arrow_id(q))] = (
            window_arrow_id(total) if total in members else OUT_OF_WINDOW
        )
    return IndexCategory(
        CategoryKind.MONOID_WINDOW,
        (GROUP_OBJECT,),
        arrows,
        {GROUP_OBJECT: window_arrow_id(zero)},
        composition,
        {'lattice': lattice, 'rank': rank, 'window': [list(p) for p in points]},
    )


def interval_window(lattice, low, high):
    """Rank-one window {low, …, high}."""
    return monoid_window(1, lattice, range(low, high + 1))
