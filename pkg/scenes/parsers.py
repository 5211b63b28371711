"""
Scene files: JSON documents describing a field, a grading category, a graded
algebra and named modules.

Structure constants are sparse lists densified on load:

    algebra products  [α, i, β, j, [coefficients in A_{αβ}]]
    module action     [α, i, β, j, [coefficients in M_{αβ}]]

meaning a_i ∈ A_α times the j-th basis element of degree β. Scalars are
integers or "p/q" strings.

Malformed documents raise SceneFormatError. Well-formed documents that
describe an invalid structure raise the domain error of the builder.
"""

import json
import logging
from pathlib import Path

from category.builders import explicit_category, from_group, from_poset, monoid_window
from covers.projective import projective_catalogue
from exactfield.algebras import FiniteAlgebra
from exactfield.fields import Field
from exactfield.matrices import Matrix
from graded.models import GradedAlgebra, GradedModule
from graded.poset import build_poset_graded
from gradalg.exceptions import DimensionMismatch, SceneFormatError, StructureError

from .models import Scene

logger = logging.getLogger(__name__)


def load_json(path):
    """
    Raises:
        SceneFormatError: If the file is missing, not JSON, or not an object
    """
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as exc:
        raise SceneFormatError(f"cannot read {path}: {exc.strerror}", code="unreadable", params={'path': str(path)})
    except json.JSONDecodeError as exc:
        raise SceneFormatError(
            f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}",
            code="invalid_json",
            params={'path': str(path), 'line': exc.lineno},
        )
    if not isinstance(data, dict):
        raise SceneFormatError(f"{path}: the document root must be an object", code="not_an_object")
    return data


def _require(data, key, where, kind=None):
    if not isinstance(data, dict) or key not in data:
        raise SceneFormatError(f"{where}: missing key {key!r}", code="missing_key", params={'key': key, 'at': where})
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise SceneFormatError(
            f"{where}.{key} has the wrong type", code="wrong_type", params={'key': key, 'at': where}
        )
    return value


def _integer(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise SceneFormatError(f"{where} must be an integer", code="wrong_type", params={'at': where})
    return value


def _tuples(values, size, where):
    """A list of fixed-length lists, as tuples."""
    if not isinstance(values, list) or any(not isinstance(v, list) or len(v) != size for v in values):
        raise SceneFormatError(
            f"{where} must be a list of {size}-element lists", code="wrong_type", params={'at': where}
        )
    return [tuple(v) for v in values]


def _mapping(data, key, where):
    """An optional object-valued key."""
    value = data.get(key, {})
    if not isinstance(value, dict):
        raise SceneFormatError(f"{where}.{key} must be an object", code="wrong_type", params={'key': key, 'at': where})
    return value


def _listing(data, key, where):
    """An optional list-valued key."""
    value = data.get(key, [])
    if not isinstance(value, list):
        raise SceneFormatError(f"{where}.{key} must be a list", code="wrong_type", params={'key': key, 'at': where})
    return value


def _dims(data, where):
    return {str(k): _integer(v, f"{where}.dims.{k}") for k, v in _require(data, 'dims', where, dict).items()}


def parse_scalar(field, value):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SceneFormatError(f"{value!r} is not a scalar", code="bad_scalar", params={'value': repr(value)})
    try:
        return field(value)
    except (ValueError, ZeroDivisionError):
        raise SceneFormatError(f"{value!r} is not a scalar", code="bad_scalar", params={'value': repr(value)})


def _vector(field, values, where):
    if not isinstance(values, list):
        raise SceneFormatError(f"{where}: expected a list of scalars", code="wrong_type", params={'at': where})
    return tuple(parse_scalar(field, v) for v in values)


def parse_field(data):
    if not isinstance(data, dict):
        raise SceneFormatError("field must be an object", code="wrong_type", params={'at': 'field'})
    if data.get('rationals'):
        return Field.rationals()
    prime = data.get('prime')
    if isinstance(prime, int) and not isinstance(prime, bool):
        return Field.prime_field(prime)
    raise SceneFormatError(
        'field must be {"rationals": true} or {"prime": p}', code="bad_field", params={'at': 'field'}
    )


def parse_category(data):
    kind = _require(data, 'kind', 'category', str)
    if kind == 'explicit':
        return explicit_category(
            _require(data, 'objects', 'category', list),
            _tuples(_require(data, 'arrows', 'category'), 3, 'category.arrows'),
            _require(data, 'identities', 'category', dict),
            _tuples(_require(data, 'composition', 'category'), 3, 'category.composition'),
        )
    if kind == 'poset':
        return from_poset(
            _require(data, 'elements', 'category', list),
            _tuples(_require(data, 'relation', 'category'), 2, 'category.relation'),
        )
    if kind == 'group':
        return from_group(_require(data, 'elements', 'category', list), _require(data, 'table', 'category', list))
    if kind == 'window':
        lattice = _require(data, 'lattice', 'category', str)
        if 'interval' in data:
            interval = _require(data, 'interval', 'category', list)
            if len(interval) != 2:
                raise SceneFormatError(
                    "category.interval must be [low, high]", code="wrong_type", params={'at': 'category.interval'}
                )
            low, high = (_integer(x, 'category.interval') for x in interval)
            window = range(low, high + 1)
        else:
            window = _require(data, 'window', 'category', list)
        return monoid_window(_integer(data.get('rank', 1), 'category.rank'), lattice, window)
    raise SceneFormatError(f"unknown category kind {kind!r}", code="unknown_kind", params={'kind': kind})


def _triple(entry, where):
    if not isinstance(entry, list) or len(entry) != 5 or not isinstance(entry[4], list):
        raise SceneFormatError(
            f"{where}: entries are [α, i, β, j, [coefficients]]", code="wrong_type", params={'at': where}
        )
    alpha, i, beta, j, coeffs = entry
    if not isinstance(i, int) or not isinstance(j, int):
        raise SceneFormatError(f"{where}: basis indices must be integers", code="wrong_type", params={'at': where})
    return str(alpha), i, str(beta), j, coeffs


def _densify(field, triples, category, left_dim, source_dim, target_dim, where):
    """Sparse [α, i, β, j, coeffs] triples -> {(α, β): tuple of matrices}."""
    blocks = {}
    for entry in triples:
        alpha, i, beta, j, coeffs = _triple(entry, where)
        gamma = category.compose_in_support(alpha, beta)
        if gamma is None:
            raise StructureError(
                f"{where}: ({alpha}, {beta}) does not compose inside the support",
                code="dangling_arrow",
                params={'pair': [alpha, beta]},
            )
        if not (0 <= i < left_dim(alpha) and 0 <= j < source_dim(beta)):
            raise DimensionMismatch(f"{where}: basis index out of range in ({alpha}#{i}, {beta}#{j})")
        rows = target_dim(gamma)
        if len(coeffs) != rows:
            raise DimensionMismatch(f"{where}: ({alpha}#{i}, {beta}#{j}) needs {rows} coefficients, got {len(coeffs)}")
        columns = blocks.setdefault(
            (alpha, beta),
            [[(field.zero,) * rows for _ in range(source_dim(beta))] for _ in range(left_dim(alpha))],
        )
        columns[i][j] = _vector(field, coeffs, where)
    return {
        key: tuple(
            Matrix.from_columns(field, cols, target_dim(category.compose_in_support(*key))) for cols in mats
        )
        for key, mats in blocks.items()
    }


def _ordinary_algebra(data, field, where):
    dim = _require(data, 'dim', where, int)
    products = {}
    for entry in _require(data, 'products', where, list):
        if not isinstance(entry, list) or len(entry) != 3 or not all(isinstance(x, int) for x in entry[:2]):
            raise SceneFormatError(f"{where}: products are [i, j, [coefficients]]", code="wrong_type")
        i, j, coeffs = entry
        products[(i, j)] = _vector(field, coeffs, where)
    unit = _vector(field, _require(data, 'unit', where, list), where)
    return FiniteAlgebra.from_products(field, dim, products, unit, tuple(data.get('labels', ())))


def parse_algebra(data, field, category=None):
    kind = data.get('kind', 'explicit')
    name = data.get('name', 'A')
    if kind == 'ungraded':
        return GradedAlgebra.from_algebra(_ordinary_algebra(data, field, 'algebra'), name=name)
    if kind == 'poset_graded':
        ordinary = _ordinary_algebra(data, field, 'algebra')
        idempotents = {
            str(k): _vector(field, v, 'algebra.idempotents')
            for k, v in _require(data, 'idempotents', 'algebra', dict).items()
        }
        return build_poset_graded(
            ordinary,
            idempotents,
            _require(data, 'elements', 'algebra', list),
            _tuples(_require(data, 'relation', 'algebra'), 2, 'algebra.relation'),
            name=name,
        )
    if kind != 'explicit':
        raise SceneFormatError(f"unknown algebra kind {kind!r}", code="unknown_kind", params={'kind': kind})
    if category is None:
        raise SceneFormatError("an explicit algebra needs a category", code="missing_key", params={'key': 'category'})
    dims = _dims(data, 'algebra')
    action = _densify(
        field,
        _listing(data, 'products', 'algebra'),
        category,
        lambda a: dims.get(a, 0),
        lambda b: dims.get(b, 0),
        lambda g: dims.get(g, 0),
        'algebra.products',
    )
    units = {str(k): _vector(field, v, 'algebra.units') for k, v in _require(data, 'units', 'algebra', dict).items()}
    labels = {str(k): list(v) for k, v in _mapping(data, 'labels', 'algebra').items()}
    return GradedAlgebra(category, field, dims, action, units, labels, name)


def parse_module(name, data, algebra):
    """
    One named module: projective A[γ], the regular module, a simple top
    S of a catalogue class P[γ,j], or explicit action constants.
    """
    kind = _require(data, 'kind', f'modules.{name}', str)
    if kind == 'projective':
        return algebra.projective(str(_require(data, 'arrow', f'modules.{name}')))
    if kind == 'regular':
        return algebra.regular_module()
    if kind == 'simple':
        label = _require(data, 'label', f'modules.{name}', str)
        catalogue = projective_catalogue(algebra)
        if label not in catalogue.by_label:
            raise SceneFormatError(
                f"modules.{name}: no projective class {label!r}",
                code="unknown_label",
                params={'label': label, 'known': catalogue.labels()},
            )
        return catalogue.simple(label)
    if kind != 'explicit':
        raise SceneFormatError(f"unknown module kind {kind!r}", code="unknown_kind", params={'kind': kind})
    dims = _dims(data, f'modules.{name}')
    action = _densify(
        algebra.field,
        _listing(data, 'action', f'modules.{name}'),
        algebra.category,
        algebra.dim,
        lambda b: dims.get(b, 0),
        lambda g: dims.get(g, 0),
        f'modules.{name}.action',
    )
    labels = {str(k): list(v) for k, v in _mapping(data, 'labels', f'modules.{name}').items()}
    return GradedModule(algebra, dims, action, name=name, labels=labels)


def parse_scene(data, source="<scene>"):
    field = parse_field(_require(data, 'field', source))
    algebra_data = _require(data, 'algebra', source, dict)
    category = parse_category(data['category']) if 'category' in data else None
    algebra = parse_algebra(algebra_data, field, category)
    modules, kinds = {}, {}
    for name, entry in _mapping(data, 'modules', source).items():
        if not isinstance(entry, dict):
            raise SceneFormatError(
                f"modules.{name} must be an object", code="wrong_type", params={'at': f'modules.{name}'}
            )
        modules[name] = parse_module(name, entry, algebra)
        kinds[name] = dict(entry) if entry.get('kind') != 'explicit' else {'kind': 'explicit'}
    logger.info(f"loaded {source}: {algebra.name} over {field.tag} with {len(modules)} modules")
    return Scene(str(source), field, algebra, modules, kinds)


def load_scene(path):
    return parse_scene(load_json(path), source=str(path))
