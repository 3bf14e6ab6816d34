"""
L'algèbre de Hopf H_ν engendrée par g et x, avec g^{2ν} = 1, gx + xg = 0,
x² = 0, ses idempotents e_l et les structures quasi-triangulaires R_{s,β}.

Base : g^l x^m à l'indice 2l + m. Conducteur 2ν, ω = ω_{2ν}.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from hopfcore.algebra import HopfData, tensor_mul, tensor_product
from hopfcore.exceptions import CrossCheckError, StructureError
from hopfcore.linalg import SparseMatrix
from hopfcore.reports import CheckReport
from hopfcore.tensors import Accumulator, Tensor
from quasitri.checks import QtStructure
from scalar.numbers import ParamScalar

logger = logging.getLogger(__name__)


def _label(l, m):
    g = '' if l == 0 else ('g' if l == 1 else f'g^{l}')
    if m:
        return g + 'x'
    return g or '1'


def _normal_product(n, left, right):
    """g^l x^m · g^p x^q = (-1)^{mp} g^{l+p} x^{m+q} ; None si x² apparaît"""
    (l, m), (p, q) = left, right
    if m + q > 1:
        return None
    return (-1) ** (m * p), ((l + p) % n, m + q)


class RadfordAlgebra:
    def __init__(self, nu, hopf):
        self.nu = nu
        self.hopf = hopf
        self.conductor = 2 * nu

    @property
    def order(self):
        """Ordre de g"""
        return 2 * self.nu

    def index(self, l, m=0):
        return 2 * (l % self.order) + m

    def g(self, l=1):
        return self.hopf.basis(self.index(l))

    def gx(self, l=0):
        return self.hopf.basis(self.index(l, 1))

    @property
    def x(self):
        return self.gx(0)

    def omega(self, k=1):
        return ParamScalar.root(self.conductor, k)

    def mul(self, *elements):
        result = elements[0]
        for element in elements[1:]:
            result = tensor_mul(self.hopf, result, element, 1)
        return result

    def power(self, element, k):
        result = self.hopf.unit
        for _ in range(k):
            result = tensor_mul(self.hopf, result, element, 1)
        return result

    def __repr__(self):
        return f'<RadfordAlgebra nu={self.nu} dim={self.hopf.dim}>'


def build_radford(nu):
    if not isinstance(nu, int) or nu < 1 or nu % 2 == 0:
        raise StructureError(f'nu must be an odd positive integer, got {nu!r}')
    n = 2 * nu
    conductor = n
    dim = 2 * n
    words = [(l, m) for l in range(n) for m in range(2)]

    def index(word):
        return 2 * word[0] + word[1]

    mul = {}
    for left in words:
        for right in words:
            result = _normal_product(n, left, right)
            if result is not None:
                sign, word = result
                mul[(index(left), index(right))] = Tensor((dim,), {(index(word),): sign}, conductor)

    # Δ(g^l x^m) = Δ(g)^l Δ(x)^m, avec Δ(g) = g⊗g et Δ(x) = x⊗g^ν + 1⊗x
    def product_of_terms(terms_a, terms_b):
        out = []
        for (a1, a2, ca) in terms_a:
            for (b1, b2, cb) in terms_b:
                first = _normal_product(n, a1, b1)
                second = _normal_product(n, a2, b2)
                if first and second:
                    out.append((first[1], second[1], ca * cb * first[0] * second[0]))
        return out

    delta_x = [((0, 1), (nu, 0), 1), ((0, 0), (0, 1), 1)]
    comul = {}
    antipode = {}
    for l, m in words:
        terms = [((l, 0), (l, 0), 1)]
        if m:
            terms = product_of_terms(terms, delta_x)
        acc = Accumulator(conductor)
        for a, b, c in terms:
            acc.add((index(a), index(b)), ParamScalar.constant(conductor, c))
        comul[index((l, m))] = acc.to_tensor((dim, dim))
        # S(g^l x^m) = S(x)^m S(g)^l, S(g) = g⁻¹ et S(x) = g^ν x
        if m:
            sign, word = _normal_product(n, (nu, 1), ((-l) % n, 0))
        else:
            sign, word = 1, ((-l) % n, 0)
        antipode[index((l, m))] = {index(word): sign}

    hopf = HopfData(
        dim, [_label(l, m) for l, m in words], conductor, mul,
        Tensor((dim,), {(0,): 1}, conductor), comul,
        [1 if m == 0 else 0 for _, m in words],
        SparseMatrix(dim, dim, antipode, conductor),
        name=f'H_{nu}',
    )
    logger.debug('built %r', hopf)
    return RadfordAlgebra(nu, hopf)


def idempotents_unchecked(A):
    """e_l = (1/2ν) Σ_i ω^{-il} g^i"""
    n = A.order
    factor = Fraction(1, n)
    return [
        Tensor((A.hopf.dim,), {(A.index(i),): A.omega(-i * l) * factor for i in range(n)}, A.conductor)
        for l in range(n)
    ]


def idempotent_report(A, e=None):
    e = e if e is not None else idempotents_unchecked(A)
    H = A.hopf
    n = A.order
    zero = Tensor.zero((H.dim,), A.conductor)
    report = CheckReport(subject=f'{H.name} idempotents')

    witness = next(((f'e_{i}', f'e_{j}') for i in range(n) for j in range(n)
                    if A.mul(e[i], e[j]) != (e[i] if i == j else zero)), None)
    report.record('orthogonal', witness is None, witness)

    total = Accumulator(A.conductor)
    for element in e:
        total.add_tensor(element)
    report.record('sum_is_unit', total.to_tensor((H.dim,)) == H.unit, ('sum e_l',))

    signed = Accumulator(A.conductor)
    for i, element in enumerate(e):
        signed.add_tensor(element, (-1) ** i)
    report.record('alternating_sum', signed.to_tensor((H.dim,)) == A.g(A.nu), ('sum (-1)^i e_i',))

    witness = next(((f'e_{l}',) for l in range(n)
                    if A.mul(A.x, e[l]) != A.mul(e[(l - A.nu) % n], A.x)), None)
    report.record('x_shift', witness is None, witness)

    report.extend(group_like_relations(A, e))
    return report


def group_like_relations(A, e=None):
    """g^i e_j = ω^{ij} e_j, et g^{2sν} = 1 pour tout s impair"""
    e = e if e is not None else idempotents_unchecked(A)
    n = A.order
    report = CheckReport(subject=f'{A.hopf.name} group-likes')
    witness = next(((f'g^{i}', f'e_{j}') for i in range(n) for j in range(n)
                    if A.mul(A.g(i), e[j]) != e[j].scale(A.omega(i * j))), None)
    report.record('eigenvalues', witness is None, witness)
    witness = next(((f's={s}',) for s in range(1, n, 2)
                    if A.power(A.g(), 2 * s * A.nu) != A.hopf.unit), None)
    report.record('odd_power', witness is None, witness)
    return report


def idempotents(A):
    e = idempotents_unchecked(A)
    idempotent_report(A, e).raise_for_failure()
    return e


@dataclass(frozen=True)
class RParams:
    s: int
    beta: ParamScalar = None

    def validate(self, A):
        if self.s % 2 == 0 or not 1 <= self.s < A.order:
            raise StructureError(f's must be odd in [1, {A.order}), got {self.s}')
        return self

    def beta_for(self, A):
        if self.beta is None:
            return ParamScalar.beta(A.conductor)
        return ParamScalar.constant(A.conductor, self.beta)

    @property
    def is_formal(self):
        return self.beta is None


def _r_from_idempotents(A, s, beta, e):
    H = A.hopf
    acc = Accumulator(A.conductor)
    for l in range(A.order):
        acc.add_tensor(tensor_product(e[l], A.g(s * l)))
        twisted = tensor_product(A.mul(e[l], A.x), A.gx(s * l + A.nu))
        acc.add_tensor(twisted, beta)
    return acc.to_tensor(H.dims(2))


def _r_double_sum(A, s, beta):
    n = A.order
    factor = Fraction(1, n)
    acc = Accumulator(A.conductor)
    for i in range(n):
        for l in range(n):
            coefficient = A.omega(-i * l) * factor
            acc.add((A.index(i), A.index(s * l)), coefficient)
            acc.add((A.index(i, 1), A.index(s * l + A.nu, 1)), coefficient * beta)
    return acc.to_tensor(A.hopf.dims(2))


def build_R(A, params):
    params.validate(A)
    beta = params.beta_for(A)
    e = idempotents_unchecked(A)
    R = _r_from_idempotents(A, params.s, beta, e)
    if R != _r_double_sum(A, params.s, beta):
        raise CrossCheckError(f'the two forms of R_{params.s} disagree on {A.hopf.name}')
    structure = QtStructure(A.hopf, R, name=f'{A.hopf.name} R_{params.s},{beta}')
    return structure.require()


def double_braiding_element(A, params):
    """
    Forme close de F = R₂₁R pour R_{s,β} :
    Σ ω^{2slt} e_l⊗e_t + β Σ ω^{2slt+νt} e_l x⊗e_t x - β Σ (-1)^{l+t} ω^{2slt+νl} x e_l⊗e_t x
    """
    params.validate(A)
    beta = params.beta_for(A)
    e = idempotents_unchecked(A)
    n, s, nu = A.order, params.s, A.nu
    e_x = [A.mul(e_l, A.x) for e_l in e]
    x_e = [A.mul(A.x, e_l) for e_l in e]
    acc = Accumulator(A.conductor)
    for l in range(n):
        for t in range(n):
            acc.add_tensor(tensor_product(e[l], e[t]), A.omega(2 * s * l * t))
            acc.add_tensor(tensor_product(e_x[l], e_x[t]), A.omega(2 * s * l * t + nu * t) * beta)
            acc.add_tensor(tensor_product(x_e[l], e_x[t]),
                           A.omega(2 * s * l * t + nu * l) * beta * (-(-1) ** (l + t)))
    return acc.to_tensor(A.hopf.dims(2))
