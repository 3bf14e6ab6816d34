"""
Opérateurs de Yang-Baxter σ ∈ Aut(V⊗V) et représentations des mots de tresses
sur V^{⊗n} : σᵢ ↦ id^{⊗(i-1)} ⊗ σ^{±1} ⊗ id^{⊗(n-i-1)}, produit dans l'ordre du mot.

Indexation de V^{⊗n} : (i₁, …, iₙ) ↦ i₁·d^{n-1} + … + iₙ, comme SparseMatrix.kron.
"""
import logging
from dataclasses import dataclass
from functools import cached_property

from hopfcore.algebra import left_regular_matrix
from hopfcore.exceptions import CrossCheckError, NotInvertible, StructureError
from hopfcore.linalg import SparseMatrix
from hopfcore.reports import CheckReport
from hopfcore.workers import run_jobs
from radford.builders import RParams, build_R, build_radford
from ydmod.braiding import braiding_matrix
from ydmod.modules import HopfModule, check_left_module, split_index

logger = logging.getLogger(__name__)


class YbOperator:
    """Automorphisme de V⊗V (dim V = d) avec son inverse"""

    def __init__(self, dim, matrix, inverse=None, labels=None, name=''):
        size = dim * dim
        if matrix.shape != (size, size):
            raise StructureError(f'a braiding on a {dim}-dimensional space is {size}x{size}')
        if inverse is None:
            inverse = matrix.inverse()
        if not (matrix @ inverse).is_identity() or not (inverse @ matrix).is_identity():
            raise NotInvertible(f'{name or "operator"}: given inverse does not invert the matrix')
        self.dim = dim
        self.matrix = matrix
        self.inverse = inverse
        self.conductor = matrix.conductor
        self.labels = tuple(labels) if labels else tuple(f'v{i}' for i in range(dim))
        if len(self.labels) != dim:
            raise StructureError('one label per basis vector')
        self.name = name or f'σ on V{dim}'
        self._letters = {}

    def identity(self, power):
        return SparseMatrix.identity(self.dim ** power, self.conductor)

    def letter(self, n, k, sign=1):
        """Matrice de σ_k^{sign} sur V^{⊗n}"""
        key = (n, k, sign)
        if key not in self._letters:
            middle = self.matrix if sign == 1 else self.inverse
            self._letters[key] = self.identity(k - 1).kron(middle).kron(self.identity(n - k - 1))
        return self._letters[key]

    def witness(self, column, n):
        return tuple(self.labels[i] for i in split_index(column, (self.dim,) * n))

    @cached_property
    def verdict(self):
        return yb_check(self)

    def __repr__(self):
        return f'<YbOperator {self.name} dim={self.dim}>'


@dataclass(frozen=True)
class YbVerdict:
    is_yb: bool
    is_pseudosymmetric: bool
    report: CheckReport

    def as_dict(self):
        return {'is_yb': self.is_yb, 'is_pseudosymmetric': self.is_pseudosymmetric,
                **self.report.as_dict()}


def _record_equal(report, name, sigma, lhs, rhs, n=3):
    column = lhs.first_difference(rhs)
    report.record(name, column is None, None if column is None else sigma.witness(column, n))


def yb_check(sigma):
    """
    Relation de tresse σ₁σ₂σ₁ = σ₂σ₁σ₂ sur V^{⊗3}, et σ₁σ₂⁻¹σ₁ = σ₂σ₁⁻¹σ₂
    pour σ puis pour σ⁻¹ (les deux dodécagones sous forme stricte).
    """
    s1, s2 = sigma.letter(3, 1), sigma.letter(3, 2)
    t1, t2 = sigma.letter(3, 1, -1), sigma.letter(3, 2, -1)
    report = CheckReport(subject=sigma.name)
    _record_equal(report, 'yang_baxter', sigma, s1 @ s2 @ s1, s2 @ s1 @ s2)
    _record_equal(report, 'pseudosymmetric', sigma, s1 @ t2 @ s1, s2 @ t1 @ s2)
    _record_equal(report, 'pseudosymmetric_inverse', sigma, t1 @ s2 @ t1, t2 @ s1 @ t2)
    pseudo = report['pseudosymmetric'].passed and report['pseudosymmetric_inverse'].passed
    return YbVerdict(report['yang_baxter'].passed, pseudo, report)


def is_symmetric(sigma):
    return (sigma.matrix @ sigma.matrix).is_identity()


def inverse_operator(sigma):
    return YbOperator(sigma.dim, sigma.inverse, inverse=sigma.matrix, labels=sigma.labels,
                      name=f'{sigma.name}⁻¹')


def represent(w, sigma):
    result = sigma.identity(w.n)
    for k, sign in w.letters:
        result = result @ sigma.letter(w.n, k, sign)
    return result


def factorization_check(sigma, pairs):
    """
    pairs : (nom, w1, w2). Un verdict par couple : les deux mots ont-ils la
    même représentation ?
    """
    pairs = list(pairs)

    def job(w1, w2):
        def compare():
            column = represent(w1, sigma).first_difference(represent(w2, sigma))
            return None if column is None else sigma.witness(column, w1.n)
        return compare

    witnesses = run_jobs(job(w1, w2) for _, w1, w2 in pairs)
    report = CheckReport(subject=f'{sigma.name} word pairs')
    for (name, _, _), witness in zip(pairs, witnesses):
        report.record(name, witness is None, witness)
    return report


def swap_operator(dim, conductor=1):
    columns = {i * dim + j: {j * dim + i: 1} for i in range(dim) for j in range(dim)}
    matrix = SparseMatrix(dim * dim, dim * dim, columns, conductor)
    return YbOperator(dim, matrix, inverse=matrix, name=f'swap V{dim}')


def diagonal_operator(q, conductor=1):
    """σ(eᵢ⊗eⱼ) = q[i][j] eⱼ⊗eᵢ, coefficients non nuls"""
    dim = len(q)
    columns = {i * dim + j: {j * dim + i: q[i][j]} for i in range(dim) for j in range(dim)}
    matrix = SparseMatrix(dim * dim, dim * dim, columns, conductor)
    return YbOperator(dim, matrix, name=f'diagonal V{dim}')


def transfer_operator(sigma, Q):
    """φ⁻¹σφ avec φ = Q⊗Q, inverse transporté de la même façon"""
    if Q.shape != (sigma.dim, sigma.dim):
        raise StructureError(f'change of basis must be {sigma.dim}x{sigma.dim}')
    Q_inv = Q.inverse()
    phi, phi_inv = Q.kron(Q), Q_inv.kron(Q_inv)
    return YbOperator(sigma.dim, phi_inv @ sigma.matrix @ phi, inverse=phi_inv @ sigma.inverse @ phi,
                      name=f'{sigma.name} transported')


def _acting_swap(t, action, dim, conductor, swap_legs):
    """
    Colonne v⊗w ↦ Σ (b·w)⊗(a·v) si swap_legs, sinon Σ (a·w)⊗(b·v),
    pour t = Σ a⊗b.
    """
    columns = {}
    for v in range(dim):
        for w in range(dim):
            column = {}
            for (a, b), c in t.entries.items():
                first, second = (b, a) if swap_legs else (a, b)
                for i, x in action[first].column(w).items():
                    for j, y in action[second].column(v).items():
                        key, term = i * dim + j, c * x * y
                        column[key] = column[key] + term if key in column else term
            columns[v * dim + w] = {k: value for k, value in column.items() if value}
    return SparseMatrix._build(dim * dim, dim * dim, conductor, columns)


def yb_from_qt(H, structure, action, labels=None, name=''):
    """
    σ(v⊗w) = Σ (b·w)⊗(a·v) pour R = Σ a⊗b, σ⁻¹(v⊗w) = Σ (a'·w)⊗(b'·v) pour
    R⁻¹ = Σ a'⊗b'. `action` : une matrice d×d par élément de base de H.
    """
    structure.require()
    if not action:
        raise StructureError('empty action')
    dim = action[0].nrows
    module = HopfModule(H, dim, left_action=action, labels=labels, name=name or f'V over {H.name}')
    check_left_module(H, module).raise_for_failure(f'{module.name} is not a left {H.name}-module')
    forward = _acting_swap(structure.R, module.left_action, dim, H.conductor, swap_legs=True)
    backward = _acting_swap(structure.inverse, module.left_action, dim, H.conductor, swap_legs=False)
    sigma = YbOperator(dim, forward, inverse=backward, labels=module.labels,
                       name=name or f'σ from {structure.name}')
    if not sigma.verdict.is_yb:
        raise CrossCheckError(f'{sigma.name} breaks the braid relation although R is quasitriangular')
    logger.debug('built %r', sigma)
    return sigma


def regular_action(H):
    return [left_regular_matrix(H, H.basis(i)) for i in range(H.dim)]


def radford_operator(nu, s, beta=None):
    """σ de R_{s,β} sur le module régulier de H_ν"""
    A = build_radford(nu)
    structure = build_R(A, RParams(s, beta))
    return yb_from_qt(A.hopf, structure, regular_action(A.hopf), labels=A.hopf.labels,
                      name=f'σ R_{s} on {A.hopf.name}')


def yb_from_module(H, M):
    """c_{M,M} d'un objet de ydmod (module YD ou objet de LR(H))"""
    forward, backward = braiding_matrix(H, M, M)
    return YbOperator(M.dim, forward, inverse=backward, labels=M.labels, name=f'c on {M.name}')
