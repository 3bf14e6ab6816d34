import logging

from hopfcore.algebra import HopfData
from hopfcore.axioms import verify_hopf
from hopfcore.linalg import SparseMatrix
from hopfcore.tensors import Tensor

from .factorization import verify_unique_factorization

logger = logging.getLogger(__name__)


def build_positive_hopf(UF, verify=True, name=''):
    """
    H(G; G₊, G₋) sur la base {g}, dans l'ordre des éléments de G :

        {g}{h} = δ_{g₊^{g₋}, h₊} {g h₋}
        1 = Σ_{u ∈ G₊} {u}
        Δ{g} = Σ_{h ∈ G₊} {g₊ h⁻¹ (ʰg₋)} ⊗ {h g₋}
        ε{g} = δ_{g₊, e}
        S{g} = {g⁻¹}
    """
    G = UF.group
    n = G.order
    dims = (n,)
    mul = {}
    for g in G.elements:
        for h in G.elements:
            if UF.bar_plus[g] == UF.plus_part[h]:
                mul[(g, h)] = Tensor(dims, {(G.mul(g, UF.minus_part[h]),): 1})
    unit = Tensor(dims, {(u,): 1 for u in UF.plus})
    comul = {}
    for g in G.elements:
        g_plus, g_minus = UF.plus_part[g], UF.minus_part[g]
        terms = {}
        for h in UF.plus:
            left = G.mul(g_plus, G.inverse(h), UF.left_on_minus(h, g_minus))
            terms[(left, G.mul(h, g_minus))] = 1
        comul[g] = Tensor((n, n), terms)
    counit = [1 if UF.plus_part[g] == G.identity else 0 for g in G.elements]
    antipode = SparseMatrix(n, n, {g: {G.inverse(g): 1} for g in G.elements})
    H = HopfData(n, G.labels, 1, mul, unit, comul, counit, antipode,
                 name=name or f'H({G.name};{len(UF.plus)},{len(UF.minus)})')
    if verify:
        verify_hopf(H).raise_for_failure()
    logger.debug('built %r', H)
    return H


def group_algebra(G):
    """k[G] = H(G; {e}, G)"""
    UF = verify_unique_factorization(G, [G.identity], list(G.elements))
    return build_positive_hopf(UF, name=f'k[{G.name}]')


def dual_group_algebra(G):
    """k[G]* = H(G; G, {e}), base des idempotents {g}"""
    UF = verify_unique_factorization(G, list(G.elements), [G.identity])
    return build_positive_hopf(UF, name=f'k[{G.name}]*')
