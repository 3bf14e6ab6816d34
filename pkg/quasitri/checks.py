"""
Structures quasi-triangulaires : axiomes, triangularité et les deux critères
de pseudotriangularité (équation en R et commutation de F = R₂₁R).

R⁻¹ est toujours (S⊗id)(R) : aucune division de scalaires, β peut rester formel.
"""
import logging

from hopfcore.algebra import (
    apply_antipode_leg, apply_coproduct_leg, apply_counit_leg, embed_legs, multiply_at_legs, permute_legs,
    tensor_mul,
)
from hopfcore.exceptions import AxiomFailure, CrossCheckError, StructureError
from hopfcore.reports import CheckReport

logger = logging.getLogger(__name__)

# Orientation des axiomes de coproduit, fixée ici et nulle part ailleurs :
# (Δ⊗id)(R) = R₁₃R₂₃ et (id⊗Δ)(R) = R₁₃R₁₂
QT_ORIENTATION = {
    'coproduct_left': (1, (1, 3), (2, 3)),
    'coproduct_right': (2, (1, 3), (1, 2)),
}


def first_difference(H, a, b):
    """Étiquette du premier indice où deux tenseurs diffèrent, ou None"""
    for key in sorted(set(a.entries) | set(b.entries)):
        if a.get(key) != b.get(key):
            return (H.label(key),)
    return None


def r_inverse(H, R):
    return apply_antipode_leg(H, R, 1)


def _legs_product(H, R, first, second, k=3):
    """R_{first} · R_{second} dans H^{⊗k}"""
    return multiply_at_legs(H, embed_legs(H, R, k, first), R, second)


def verify_qt(H, R):
    if R.dims != H.dims(2):
        raise StructureError('R must be an arity 2 tensor over the host algebra')
    report = CheckReport(subject=f'{H.name} R')

    witness = None
    for h in range(H.dim):
        delta = H.comul[h]
        if tensor_mul(H, permute_legs(delta, (2, 1)), R, 2) != tensor_mul(H, R, delta, 2):
            witness = (H.labels[h],)
            break
    report.record('intertwines_coproduct', witness is None, witness)

    for name, (leg, first, second) in QT_ORIENTATION.items():
        expanded = apply_coproduct_leg(H, R, leg)
        witness = first_difference(H, expanded, _legs_product(H, R, first, second))
        report.record(name, witness is None, witness)

    witness = None
    for leg in (1, 2):
        contracted = apply_counit_leg(H, R, leg)
        if contracted != H.unit:
            witness = (f'leg {leg}',) + (first_difference(H, contracted, H.unit) or ())
            break
    report.record('counit', witness is None, witness)

    inverse = r_inverse(H, R)
    one = H.one(2)
    witness = (first_difference(H, tensor_mul(H, R, inverse, 2), one)
               or first_difference(H, tensor_mul(H, inverse, R, 2), one))
    report.record('invertible', witness is None, witness)
    return report


def double_braiding(H, R):
    """F = R₂₁R ; dans l'exemple de Radford c'est l'élément noté T"""
    return tensor_mul(H, permute_legs(R, (2, 1)), R, 2)


def double_braiding_inverse(H, R):
    """F⁻¹ = R⁻¹(R₂₁)⁻¹"""
    inverse = r_inverse(H, R)
    return tensor_mul(H, inverse, permute_legs(inverse, (2, 1)), 2)


def is_triangular(H, R):
    return double_braiding(H, R) == H.one(2)


def pseudotriangular_direct(H, R):
    """R₁₂R⁻¹₃₁R₂₃ = R₂₃R⁻¹₃₁R₁₂ ; renvoie (verdict, témoin)"""
    inverse = r_inverse(H, R)
    lhs = multiply_at_legs(H, multiply_at_legs(H, embed_legs(H, R, 3, (1, 2)), inverse, (3, 1)), R, (2, 3))
    rhs = multiply_at_legs(H, multiply_at_legs(H, embed_legs(H, R, 3, (2, 3)), inverse, (3, 1)), R, (1, 2))
    witness = first_difference(H, lhs, rhs)
    return witness is None, witness


def pseudotriangular_F(H, R):
    """F₁₂F₂₃ = F₂₃F₁₂ ; renvoie (verdict, témoin)"""
    F = double_braiding(H, R)
    witness = first_difference(H, _legs_product(H, F, (1, 2), (2, 3)), _legs_product(H, F, (2, 3), (1, 2)))
    return witness is None, witness


def is_pseudotriangular_direct(H, R):
    return pseudotriangular_direct(H, R)[0]


def is_pseudotriangular_F(H, R):
    return pseudotriangular_F(H, R)[0]


def pseudotriangularity(H, R):
    """Les deux critères, dont l'accord est exigé ; renvoie (verdict, témoin)"""
    direct, witness = pseudotriangular_direct(H, R)
    via_F, witness_F = pseudotriangular_F(H, R)
    if direct != via_F:
        raise CrossCheckError(f'{H.name}: direct criterion says {direct}, F criterion says {via_F}')
    logger.debug('%s pseudotriangular=%s', H.name, direct)
    return direct, witness or witness_F


class QtStructure:
    """R ∈ H⊗H dont les axiomes sont vérifiés à la construction"""

    def __init__(self, host, R, name=''):
        self.host = host
        self.R = R
        self.name = name or f'{host.name} R'
        self.report = verify_qt(host, R)
        self._cache = {}

    @property
    def is_quasitriangular(self):
        return self.report.passed

    def require(self):
        if not self.report.passed:
            raise AxiomFailure(f'{self.name} is not quasitriangular', report=self.report)
        return self

    def _cached(self, key, compute):
        if key not in self._cache:
            self.require()
            self._cache[key] = compute()
        return self._cache[key]

    @property
    def inverse(self):
        return self._cached('inverse', lambda: r_inverse(self.host, self.R))

    @property
    def F(self):
        return self._cached('F', lambda: double_braiding(self.host, self.R))

    @property
    def triangular(self):
        return self._cached('triangular', lambda: self.F == self.host.one(2))

    @property
    def pseudotriangular(self):
        return self._cached('pseudo', lambda: pseudotriangularity(self.host, self.R))[0]

    @property
    def pseudotriangular_witness(self):
        return self._cached('pseudo', lambda: pseudotriangularity(self.host, self.R))[1]

    def verdicts(self):
        """Rapport complet : axiomes, triangularité, pseudotriangularité"""
        report = CheckReport(subject=self.name).extend(self.report)
        if self.report.passed:
            report.record('triangular', self.triangular, ('R21 R != 1',))
            report.record('pseudotriangular', self.pseudotriangular, self.pseudotriangular_witness)
        return report

    def __repr__(self):
        return f'<QtStructure {self.name} terms={len(self.R)}>'
