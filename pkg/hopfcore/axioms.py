"""
Vérification exhaustive des axiomes d'algèbre de Hopf sur les éléments de base.
"""
import logging
from itertools import product

from .algebra import (
    apply_antipode_leg, apply_coproduct_leg, apply_counit_leg, multiply_legs, tensor_mul, tensor_product,
)
from .reports import CheckReport
from .tensors import Accumulator

logger = logging.getLogger(__name__)


def _times_basis(H, element, j, left=False):
    """element · b_j, ou b_j · element si left"""
    acc = Accumulator(H.conductor)
    for (i,), value in element.items():
        for k, c in H.mul_table.get((j, i) if left else (i, j), ()):
            acc.add((k,), value * c)
    return acc.to_tensor((H.dim,))


def _first(pairs, predicate):
    for item in pairs:
        if not predicate(*item):
            return item
    return None


def verify_hopf(H):
    report = CheckReport(subject=H.name or 'hopf')
    n = H.dim
    labels = H.labels
    basis = [H.basis(i) for i in range(n)]
    products = {(i, j): H.mul_basis(i, j) for i in range(n) for j in range(n)}
    coproducts = [H.comul[i] for i in range(n)]

    def witness(*indices):
        return tuple(labels[i] for i in indices) if indices else None

    failing = _first(product(range(n), repeat=3),
                     lambda a, b, c: _times_basis(H, products[a, b], c)
                     == _times_basis(H, products[b, c], a, left=True))
    report.record('associativity', failing is None, failing and witness(*failing))

    failing = _first(((i,) for i in range(n)),
                     lambda i: tensor_mul(H, H.unit, basis[i], 1) == basis[i]
                     and tensor_mul(H, basis[i], H.unit, 1) == basis[i])
    report.record('unit', failing is None, failing and witness(*failing))

    failing = _first(((i,) for i in range(n)),
                     lambda i: apply_coproduct_leg(H, coproducts[i], 1)
                     == apply_coproduct_leg(H, coproducts[i], 2))
    report.record('coassociativity', failing is None, failing and witness(*failing))

    failing = _first(((i,) for i in range(n)),
                     lambda i: apply_counit_leg(H, coproducts[i], 1) == basis[i]
                     and apply_counit_leg(H, coproducts[i], 2) == basis[i])
    report.record('counit', failing is None, failing and witness(*failing))

    def comul_multiplicative(i, j):
        acc = Accumulator(H.conductor)
        for (k,), c in products[i, j].items():
            acc.add_tensor(coproducts[k], c)
        return acc.to_tensor(H.dims(2)) == tensor_mul(H, coproducts[i], coproducts[j], 2)

    unit_coproduct = apply_coproduct_leg(H, H.unit, 1) == tensor_product(H.unit, H.unit)
    failing = _first(product(range(n), repeat=2), comul_multiplicative)
    report.record('comultiplication_multiplicative', unit_coproduct and failing is None,
                  witness(*failing) if failing else ('1',))

    failing = _first(product(range(n), repeat=2),
                     lambda i, j: H.counit_of(products[i, j]) == H.counit[i] * H.counit[j])
    unit_counit = H.counit_of(H.unit) == 1
    report.record('counit_multiplicative', unit_counit and failing is None,
                  witness(*failing) if failing else ('1',))

    for name, leg in (('antipode_left', 1), ('antipode_right', 2)):
        failing = _first(((i,) for i in range(n)),
                         lambda i: multiply_legs(H, apply_antipode_leg(H, coproducts[i], leg))
                         == H.unit.scale(H.counit[i]))
        report.record(name, failing is None, failing and witness(*failing))

    if not report.passed:
        logger.info('%s: %s', report.subject, ', '.join(v.name for v in report.failures()))
    return report
