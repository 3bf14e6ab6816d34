"""
Algèbres de Hopf de dimension finie données par constantes de structure,
et les opérations sur les pattes des tenseurs dont ont besoin les critères.

Les pattes sont numérotées à partir de 1, comme dans R₁₃ ou (Δ⊗id)(R).
"""
import logging

from scalar.numbers import ParamScalar

from .exceptions import StructureError
from .linalg import SparseMatrix
from .tensors import Accumulator, Tensor

logger = logging.getLogger(__name__)


class HopfData:
    """
    Une algèbre de Hopf H de dimension `dim` sur Q(ω_conductor).

    mul : {(i, j): Tensor d'arité 1}, les paires absentes ont un produit nul
    unit : Tensor d'arité 1
    comul : {i: Tensor d'arité 2}, total sur la base
    counit : liste de scalaires
    antipode : SparseMatrix, la colonne j est S(b_j)
    """

    def __init__(self, dim, labels, conductor, mul, unit, comul, counit, antipode, name=''):
        if dim < 1:
            raise StructureError('dimension must be positive')
        if len(labels) != dim or len(set(labels)) != dim:
            raise StructureError('basis labels must be distinct, one per basis element')
        self.dim = dim
        self.labels = tuple(labels)
        self.conductor = conductor
        self.name = name
        self.mul = {}
        for (i, j), value in mul.items():
            self._check_index(i)
            self._check_index(j)
            self._check_tensor(value, 1)
            if value:
                self.mul[(i, j)] = value
        self._check_tensor(unit, 1)
        self.unit = unit
        missing = [i for i in range(dim) if i not in comul]
        if missing:
            raise StructureError(f'comultiplication undefined on {self.labels[missing[0]]}')
        for value in comul.values():
            self._check_tensor(value, 2)
        self.comul = dict(comul)
        if len(counit) != dim:
            raise StructureError('counit must have one value per basis element')
        self.counit = tuple(ParamScalar.constant(conductor, c) for c in counit)
        if antipode.shape != (dim, dim):
            raise StructureError(f'antipode must be {dim}x{dim}')
        self.antipode = antipode
        # forme compacte pour tensor_mul : (k, facteur) avec facteur entier si ±1
        self.mul_table = {
            key: tuple((k[0], c.unit_sign() or c) for k, c in value.entries.items())
            for key, value in self.mul.items()
        }
        self._antipode_inverse = None

    def _check_index(self, i):
        if not 0 <= i < self.dim:
            raise StructureError(f'basis index {i} out of range for dim {self.dim}')

    def _check_tensor(self, tensor, arity):
        if not isinstance(tensor, Tensor) or tensor.dims != (self.dim,) * arity:
            raise StructureError(f'expected an arity {arity} tensor over dim {self.dim}')
        if tensor.conductor != self.conductor:
            raise StructureError('structure constants use another conductor')

    def __repr__(self):
        return f'<HopfData {self.name or "?"} dim={self.dim} conductor={self.conductor}>'

    def __eq__(self, other):
        if not isinstance(other, HopfData):
            return NotImplemented
        return (self.dim == other.dim and self.labels == other.labels
                and self.conductor == other.conductor and self.mul == other.mul
                and self.unit == other.unit and self.comul == other.comul
                and self.counit == other.counit and self.antipode == other.antipode)

    __hash__ = None

    # éléments

    def dims(self, arity):
        return (self.dim,) * arity

    def scalar(self, value):
        return ParamScalar.constant(self.conductor, value)

    def element(self, coefficients):
        """Élément de H à partir de {indice ou étiquette: coefficient}"""
        entries = {}
        for key, value in coefficients.items():
            index = self.index(key) if isinstance(key, str) else key
            entries[(index,)] = value
        return Tensor((self.dim,), entries, self.conductor)

    def basis(self, i):
        return Tensor._build((self.dim,), self.conductor, {(i,): self.scalar(1)})

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise StructureError(f'unknown basis label {label!r}') from None

    def label(self, key):
        return '⊗'.join(self.labels[i] for i in key)

    def one(self, arity=1):
        """1^{⊗k}"""
        result = Tensor._build((), self.conductor, {(): self.scalar(1)})
        for _ in range(arity):
            result = tensor_product(result, self.unit)
        return result

    def mul_basis(self, i, j):
        value = self.mul.get((i, j))
        return value if value is not None else Tensor.zero((self.dim,), self.conductor)

    def counit_of(self, element):
        total = self.scalar(0)
        for (i,), value in element.items():
            total = total + value * self.counit[i]
        return total

    def antipode_inverse(self):
        if self._antipode_inverse is None:
            self._antipode_inverse = antipode_inverse(self)
        return self._antipode_inverse


def antipode_inverse(H):
    """S⁻¹ par élimination de Gauss ; lève NotInvertible si S est singulière"""
    inverse = H.antipode.inverse()
    logger.debug('antipode inverse computed for %r', H)
    return inverse


def _check_legs(k, legs):
    if len(set(legs)) != len(legs) or any(not 1 <= leg <= k for leg in legs):
        raise StructureError(f'legs {legs} invalid for arity {k}')


def tensor_product(s, t):
    """s ⊗ t, arité additive"""
    entries = {}
    for ks, vs in s.entries.items():
        for kt, vt in t.entries.items():
            entries[ks + kt] = vs * vt
    return Tensor._build(s.dims + t.dims, s.conductor, entries)


def _multiply(H, s, t, legs, t_on_left):
    """
    Produit de s (arité k) par t placé aux pattes `legs`, l'unité occupant
    les autres pattes. Les termes sont regroupés par la valeur du coefficient
    du facteur ayant le moins de coefficients distincts : une seule
    multiplication de scalaires par groupe.
    """
    table = H.mul_table
    group_by_t = len(set(t.entries.values())) <= len(set(s.entries.values()))
    grouped = {}
    for tk, tc in t.entries.items():
        for sk, sc in s.entries.items():
            combos = [(sk, 1)]
            for pos, leg in enumerate(legs):
                a, b = sk[leg - 1], tk[pos]
                products = table.get((b, a) if t_on_left else (a, b))
                if not products:
                    combos = None
                    break
                expanded = []
                for key, factor in combos:
                    for k, c in products:
                        new_key = key[:leg - 1] + (k,) + key[leg:]
                        expanded.append((new_key, factor * c if factor != 1 else c))
                combos = expanded
            if not combos:
                continue
            group, other = (tc, sc) if group_by_t else (sc, tc)
            for key, factor in combos:
                if factor == 1:
                    value = other
                elif factor == -1:
                    value = -other
                else:
                    value = other * factor
                slot = (key, group)
                current = grouped.get(slot)
                grouped[slot] = value if current is None else current + value
    acc = Accumulator(H.conductor)
    for (key, group), value in grouped.items():
        if value:
            acc.add(key, group * value)
    return acc.to_tensor(s.dims)


def tensor_mul(H, s, t, k=None):
    """Produit dans H^{⊗k}"""
    k = s.arity if k is None else k
    if s.dims != H.dims(k) or t.dims != H.dims(k):
        raise StructureError(f'tensor_mul expects two arity {k} tensors over dim {H.dim}')
    if s.conductor != H.conductor or t.conductor != H.conductor:
        raise StructureError('tensors and algebra use different conductors')
    return _multiply(H, s, t, tuple(range(1, k + 1)), t_on_left=False)


def multiply_at_legs(H, s, t, legs, side='right'):
    """s · t_{legs} (side='right') ou t_{legs} · s (side='left') sans former t_{legs}"""
    _check_legs(s.arity, legs)
    if t.arity != len(legs):
        raise StructureError(f'tensor of arity {t.arity} cannot sit on legs {legs}')
    if side not in ('left', 'right'):
        raise StructureError(f'unknown side {side!r}')
    return _multiply(H, s, t, tuple(legs), t_on_left=(side == 'left'))


def embed_legs(H, t, k, legs):
    """Place le j-ième facteur de t à la patte legs[j], l'unité ailleurs"""
    _check_legs(k, legs)
    if t.arity != len(legs):
        raise StructureError(f'tensor of arity {t.arity} cannot sit on legs {legs}')
    free = [leg for leg in range(1, k + 1) if leg not in legs]
    filler = H.one(len(free))
    entries = {}
    for tk, tc in t.entries.items():
        for fk, fc in filler.entries.items():
            key = [None] * k
            for pos, leg in enumerate(legs):
                key[leg - 1] = tk[pos]
            for pos, leg in enumerate(free):
                key[leg - 1] = fk[pos]
            key = tuple(key)
            value = tc * fc
            entries[key] = entries[key] + value if key in entries else value
    return Tensor._build(H.dims(k), H.conductor, {key: v for key, v in entries.items() if v})


def permute_legs(t, order):
    """Nouvelle patte p ← ancienne patte order[p-1] ; R₂₁ = permute_legs(R, (2, 1))"""
    if sorted(order) != list(range(1, t.arity + 1)):
        raise StructureError(f'{order} is not a permutation of the legs')
    entries = {tuple(key[o - 1] for o in order): v for key, v in t.entries.items()}
    return Tensor._build(tuple(t.dims[o - 1] for o in order), t.conductor, entries)


def apply_coproduct_leg(H, t, leg):
    """Δ appliqué à la patte `leg`, les pattes suivantes sont décalées d'un cran"""
    _check_legs(t.arity, (leg,))
    acc = Accumulator(H.conductor)
    for key, value in t.entries.items():
        head, tail = key[:leg - 1], key[leg:]
        for (a, b), c in H.comul[key[leg - 1]].entries.items():
            acc.add(head + (a, b) + tail, value * c)
    return acc.to_tensor(H.dims(t.arity + 1))


def apply_counit_leg(H, t, leg):
    """ε appliqué à la patte `leg`, arité k - 1"""
    _check_legs(t.arity, (leg,))
    acc = Accumulator(H.conductor)
    for key, value in t.entries.items():
        c = H.counit[key[leg - 1]]
        if c:
            acc.add(key[:leg - 1] + key[leg:], value * c)
    return acc.to_tensor(H.dims(t.arity - 1))


def apply_linear_leg(H, t, leg, matrix):
    """Application linéaire H → H (matrice par colonnes) à une patte"""
    _check_legs(t.arity, (leg,))
    acc = Accumulator(H.conductor)
    for key, value in t.entries.items():
        head, tail = key[:leg - 1], key[leg:]
        for i, c in matrix.column(key[leg - 1]).items():
            acc.add(head + (i,) + tail, value * c)
    return acc.to_tensor(t.dims)


def apply_antipode_leg(H, t, leg, inverse=False):
    return apply_linear_leg(H, t, leg, H.antipode_inverse() if inverse else H.antipode)


def multiply_legs(H, t):
    """μ : H⊗H → H"""
    if t.arity != 2:
        raise StructureError('multiplication contracts an arity 2 tensor')
    acc = Accumulator(H.conductor)
    for (a, b), value in t.entries.items():
        for k, c in H.mul_table.get((a, b), ()):
            acc.add((k,), value * c)
    return acc.to_tensor(H.dims(1))


def left_regular_matrix(H, element):
    """Matrice de m ↦ element · m"""
    columns = {j: {k[0]: v for k, v in tensor_mul(H, element, H.basis(j), 1).items()}
               for j in range(H.dim)}
    return SparseMatrix._build(H.dim, H.dim, H.conductor, columns)
