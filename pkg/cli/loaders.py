"""
Lecture et écriture JSON des groupes, algèbres de Hopf, modules et opérateurs
de Yang-Baxter. Un tenseur creux est un tableau de [indices, scalaire], un
scalaire suit le format de scalar.serializers.

Les références `builtin:...` désignent des objets construits à la volée :
    builtin:s3                 groupe du catalogue
    builtin:radford:NU         H_ν
    builtin:group:NAME         k[G]
    builtin:dual:NAME          k[G]*
    builtin:conj:NAME          module de conjugaison de k[G] (gauche-gauche)
    builtin:trivial:NAME       objet unité sur k[G]
    builtin:radford:NU:S       σ de R_{s,β} sur le module régulier de H_ν
"""
import json
import logging
import re
from contextlib import contextmanager
from fractions import Fraction

from hopfcore.algebra import HopfData
from hopfcore.axioms import verify_hopf
from hopfcore.exceptions import NotInvertible, SchemaError, StructureError
from hopfcore.linalg import SparseMatrix
from hopfcore.tensors import Tensor
from posbasis.catalog import catalog
from posbasis.groups import FiniteGroup
from posbasis.hopf import dual_group_algebra, group_algebra
from psbraid.operators import YbOperator, radford_operator, yb_from_module
from radford.builders import build_radford
from scalar.numbers import CycScalar
from scalar.serializers import cyc_from_json, cyc_to_json, param_from_json, param_to_json, rational_from_json
from ydmod.catalog import conjugation, trivial
from ydmod.modules import KINDS

logger = logging.getLogger(__name__)

BUILTIN = 'builtin:'


def read_document(path):
    try:
        with open(path, encoding='utf-8') as handle:
            return json.load(handle)
    except OSError as exc:
        raise SchemaError(f'cannot read {path}: {exc.strerror}') from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f'{path} is not valid JSON: {exc.msg} (line {exc.lineno})') from exc


def dumps(data):
    return json.dumps(data, indent=2, ensure_ascii=False)


def _require(data, *keys):
    if not isinstance(data, dict):
        raise SchemaError(f'expected a JSON object, got {type(data).__name__}')
    missing = [key for key in keys if key not in data]
    if missing:
        raise SchemaError(f'missing field(s): {", ".join(missing)}')
    return [data[key] for key in keys]


def _integer(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f'{what} must be an integer, got {value!r}')
    return value


def _positive(value, what):
    if _integer(value, what) < 1:
        raise SchemaError(f'{what} must be at least 1, got {value}')
    return value


def _labels(value, optional=False):
    if value is None and optional:
        return None
    if not isinstance(value, list) or not all(isinstance(label, str) for label in value):
        raise SchemaError(f'labels must be an array of strings, got {value!r}')
    return value


@contextmanager
def _schema_errors():
    """Une structure incohérente lue dans un document est une erreur de schéma"""
    try:
        yield
    except (StructureError, NotInvertible) as exc:
        raise SchemaError(str(exc)) from exc


def _pairs(data, what):
    """[[indice, valeur], ...]"""
    if not isinstance(data, list) or not all(isinstance(item, list) and len(item) == 2 for item in data):
        raise SchemaError(f'{what} must be an array of [index, value] pairs')
    return [(_integer(i, what), value) for i, value in data]


def _builtin_parts(ref):
    return ref[len(BUILTIN):].lower().split(':')


# --- paramètre β ----------------------------------------------------------

def parse_beta(text, conductor):
    """'formal' → None ; 'p/q' → Fraction ; '[c0, c1, ...]' → élément de Q(ω)"""
    text = (text or 'formal').strip()
    if text == 'formal':
        return None
    if text.startswith('['):
        try:
            coeffs = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f'cannot read beta vector {text!r}') from exc
        return cyc_from_json(conductor, coeffs)
    return rational_from_json(text)


def beta_to_json(beta):
    if beta is None:
        return 'formal'
    if isinstance(beta, CycScalar):
        return cyc_to_json(beta)
    return str(Fraction(beta))


# --- tenseurs et matrices -------------------------------------------------

def tensor_to_json(t):
    return [[list(key), param_to_json(value)] for key, value in sorted(t.entries.items())]


def tensor_from_json(data, dims, conductor):
    if not isinstance(data, list):
        raise SchemaError('sparse tensor must be an array of [indices, scalar]')
    entries = {}
    for item in data:
        if not isinstance(item, list) or len(item) != 2 or not isinstance(item[0], list):
            raise SchemaError(f'bad tensor entry {item!r}')
        key = tuple(_integer(i, 'tensor index') for i in item[0])
        entries[key] = param_from_json(conductor, item[1])
    with _schema_errors():
        return Tensor(dims, entries, conductor)


def matrix_to_json(matrix):
    return [[i, j, param_to_json(value)] for i, j, value in matrix.entries()]


def matrix_from_json(data, nrows, ncols, conductor):
    if not isinstance(data, list):
        raise SchemaError('sparse matrix must be an array of [row, column, scalar]')
    entries = []
    for item in data:
        if not isinstance(item, list) or len(item) != 3:
            raise SchemaError(f'bad matrix entry {item!r}')
        entries.append((_integer(item[0], 'row'), _integer(item[1], 'column'),
                        param_from_json(conductor, item[2])))
    with _schema_errors():
        return SparseMatrix.from_entries(nrows, ncols, entries, conductor)


# --- groupes --------------------------------------------------------------

def dump_group(G):
    return {'name': G.name, 'order': G.order, 'labels': list(G.labels),
            'table': [list(row) for row in G.table], 'identity': G.identity}


def group_from_json(data):
    order, labels, table, identity = _require(data, 'order', 'labels', 'table', 'identity')
    if _integer(order, 'order') != len(_labels(labels)):
        raise SchemaError(f'order {order} but {len(labels)} labels')
    if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
        raise SchemaError('table must be an array of rows')
    for row in table:
        for value in row:
            _integer(value, 'table entry')
    return FiniteGroup(labels, table, _integer(identity, 'identity'), name=data.get('name', ''))


def load_group(ref):
    if ref.startswith(BUILTIN):
        return catalog.get(ref[len(BUILTIN):])
    return group_from_json(read_document(ref))


# --- algèbres de Hopf -----------------------------------------------------

def dump_hopf(H):
    return {
        'name': H.name,
        'dim': H.dim,
        'labels': list(H.labels),
        'conductor': H.conductor,
        'mul': [[i, j, tensor_to_json(value)] for (i, j), value in sorted(H.mul.items())],
        'unit': tensor_to_json(H.unit),
        'comul': [[i, tensor_to_json(H.comul[i])] for i in range(H.dim)],
        'counit': [param_to_json(c) for c in H.counit],
        'antipode': matrix_to_json(H.antipode),
    }


def hopf_from_json(data, verify=True):
    dim, labels, conductor = _require(data, 'dim', 'labels', 'conductor')
    mul, unit, comul, counit, antipode = _require(data, 'mul', 'unit', 'comul', 'counit', 'antipode')
    dim, conductor, labels = _positive(dim, 'dim'), _positive(conductor, 'conductor'), _labels(labels)
    if not isinstance(mul, list) or not isinstance(comul, list) or not isinstance(counit, list):
        raise SchemaError('mul, comul and counit must be arrays')
    products = {}
    for item in mul:
        if not isinstance(item, list) or len(item) != 3:
            raise SchemaError(f'bad product entry {item!r}')
        products[(_integer(item[0], 'index'), _integer(item[1], 'index'))] = \
            tensor_from_json(item[2], (dim,), conductor)
    coproducts = {}
    for item in comul:
        if not isinstance(item, list) or len(item) != 2:
            raise SchemaError(f'bad coproduct entry {item!r}')
        coproducts[_integer(item[0], 'index')] = tensor_from_json(item[1], (dim, dim), conductor)
    unit = tensor_from_json(unit, (dim,), conductor)
    counit = [param_from_json(conductor, c) for c in counit]
    antipode = matrix_from_json(antipode, dim, dim, conductor)
    with _schema_errors():
        H = HopfData(dim, labels, conductor, products, unit, coproducts, counit, antipode,
                     name=data.get('name', ''))
    if verify:
        verify_hopf(H).raise_for_failure(f'{H.name or "document"} is not a Hopf algebra')
    return H


def builtin_hopf(ref):
    parts = _builtin_parts(ref)
    if len(parts) == 2 and parts[0] == 'radford' and parts[1].isdigit():
        return build_radford(int(parts[1])).hopf
    if len(parts) == 2 and parts[0] == 'group':
        return group_algebra(catalog.get(parts[1]))
    if len(parts) == 2 and parts[0] == 'dual':
        return dual_group_algebra(catalog.get(parts[1]))
    raise SchemaError(f'unknown built-in Hopf algebra {ref!r}')


def load_hopf(ref, verify=True):
    if ref.startswith(BUILTIN):
        return builtin_hopf(ref)
    return hopf_from_json(read_document(ref), verify)


def host_group(ref):
    """G quand ref désigne k[G] (builtin:group:NAME), sinon None"""
    parts = _builtin_parts(ref) if ref.startswith(BUILTIN) else []
    if len(parts) == 2 and parts[0] == 'group':
        return catalog.get(parts[1])
    return None


# --- modules --------------------------------------------------------------

def dump_module(M, hopf_ref):
    data = {'hopf_ref': hopf_ref, 'kind': M.kind, 'name': M.name, 'dim': M.dim, 'labels': list(M.labels)}
    for attr in ('left_action', 'right_action'):
        matrices = getattr(M, attr)
        if matrices is not None:
            data[attr] = [[h, matrix_to_json(matrix)] for h, matrix in enumerate(matrices)]
    for attr in ('left_coaction', 'right_coaction'):
        coaction = getattr(M, attr)
        if coaction is not None:
            data[attr] = [[m, tensor_to_json(coaction[m])] for m in range(M.dim)]
    return data


def module_from_json(data, verify=True):
    hopf_ref, kind, dim = _require(data, 'hopf_ref', 'kind', 'dim')
    if kind not in KINDS:
        raise SchemaError(f'module kind must be one of {", ".join(KINDS)}, got {kind!r}')
    H = load_hopf(hopf_ref)
    dim = _positive(dim, 'dim')
    structures = {}
    for attr in ('left_action', 'right_action'):
        if attr in data:
            by_h = {h: matrix_from_json(m, dim, dim, H.conductor) for h, m in _pairs(data[attr], attr)}
            structures[attr] = [by_h.get(h, SparseMatrix(dim, dim, conductor=H.conductor))
                                for h in range(H.dim)]
    coaction_dims = {'left_coaction': (H.dim, dim), 'right_coaction': (dim, H.dim)}
    for attr, dims in coaction_dims.items():
        if attr in data:
            structures[attr] = {m: tensor_from_json(t, dims, H.conductor)
                                for m, t in _pairs(data[attr], attr)}
    cls = KINDS[kind]
    unused = set(structures) - set(cls.required)
    if unused:
        raise SchemaError(f'{kind} modules carry no {", ".join(sorted(unused))}')
    with _schema_errors():
        M = cls(H, dim, labels=_labels(data.get('labels'), optional=True), name=data.get('name', ''),
                **structures)
    if verify:
        M.check().raise_for_failure(f'{M.name} fails its axioms')
    return M


def builtin_module(ref):
    parts = _builtin_parts(ref)
    if len(parts) in (2, 3) and parts[0] in ('conj', 'trivial'):
        G = catalog.get(parts[1])
        kind = parts[2] if len(parts) == 3 else 'll'
        H = group_algebra(G)
        if parts[0] == 'conj':
            return conjugation(G, kind=kind, host=H)
        return trivial(H, kind)
    raise SchemaError(f'unknown built-in module {ref!r}')


def load_module(ref):
    if ref.startswith(BUILTIN):
        return builtin_module(ref)
    return module_from_json(read_document(ref))


# --- opérateurs de Yang-Baxter --------------------------------------------

def dump_yb(sigma):
    return {'name': sigma.name, 'dim': sigma.dim, 'conductor': sigma.conductor, 'labels': list(sigma.labels),
            'matrix': matrix_to_json(sigma.matrix), 'inverse': matrix_to_json(sigma.inverse)}


def yb_from_json(data):
    dim, conductor, matrix = _require(data, 'dim', 'conductor', 'matrix')
    dim = _positive(dim, 'dim')
    size = dim * dim
    conductor = _positive(conductor, 'conductor')
    matrix = matrix_from_json(matrix, size, size, conductor)
    inverse = data.get('inverse')
    if inverse is not None:
        inverse = matrix_from_json(inverse, size, size, conductor)
    with _schema_errors():
        return YbOperator(dim, matrix, inverse=inverse, labels=_labels(data.get('labels'), optional=True),
                          name=data.get('name', ''))


RADFORD_YB = re.compile(r'^radford:(\d+):(\d+)$')


def builtin_yb(ref, beta='formal'):
    name = ref[len(BUILTIN):].lower()
    match = RADFORD_YB.match(name)
    if match:
        nu, s = int(match.group(1)), int(match.group(2))
        return radford_operator(nu, s, parse_beta(beta, 2 * nu))
    if name.startswith('conj:'):
        M = builtin_module(ref)
        return yb_from_module(M.host, M)
    raise SchemaError(f'unknown built-in operator {ref!r}')


def load_yb(ref, beta='formal'):
    if ref.startswith(BUILTIN):
        return builtin_yb(ref, beta)
    return yb_from_json(read_document(ref))
