"""
Objets de référence : modules triviaux, réguliers, de conjugaison, adjoint,
le plongement des modules YD gauche-gauche dans LR(H) et le catalogue de
témoins de la recherche de pseudosymétrie.
"""
import logging

from hopfcore.algebra import permute_legs
from hopfcore.exceptions import AxiomFailure, StructureError
from hopfcore.linalg import SparseMatrix
from hopfcore.tensors import Tensor
from posbasis.hopf import group_algebra

from .braiding import tensor_object
from .modules import KINDS, HostOps, LrObject, YdModuleLL, apply_at, as_column

logger = logging.getLogger(__name__)


def _matrices(H, dim, fn):
    """fn(h, m) → {i: coefficient}, une matrice par élément de base de H"""
    return [SparseMatrix(dim, dim, {m: fn(h, m) for m in range(dim)}, H.conductor)
            for h in range(H.dim)]


def _trivial_structures(H, dim):
    counit_action = _matrices(H, dim, lambda h, m: {m: H.counit[h]})
    unit = [(u, c) for (u,), c in H.unit.items()]
    return {
        'left_action': counit_action,
        'right_action': counit_action,
        'left_coaction': {m: Tensor((H.dim, dim), {(u, m): c for u, c in unit}, H.conductor)
                          for m in range(dim)},
        'right_coaction': {m: Tensor((dim, H.dim), {(m, u): c for u, c in unit}, H.conductor)
                           for m in range(dim)},
    }


def _build(kind, H, dim, structures, labels=None, name=''):
    try:
        cls = KINDS[kind]
    except KeyError:
        raise StructureError(f'unknown module kind {kind!r}') from None
    return cls(H, dim, labels=labels, name=name, **{attr: structures[attr] for attr in cls.required})


def trivial(H, kind='ll', dim=1):
    """Actions par ε et coactions par l'unité ; dim = 1 donne l'objet unité k"""
    name = 'k' if dim == 1 else f'k^{dim}'
    return _build(kind, H, dim, _trivial_structures(H, dim),
                  labels=['1'] if dim == 1 else None, name=name)


def regular(H, kind='ll'):
    """M = H, multiplications à gauche et à droite, Δ pour chaque coaction"""
    ops = HostOps(H)
    mul = _matrices(H, H.dim, lambda h, m: {k: c for (k,), c in ops.mul(h, m).items()})
    right_mul = _matrices(H, H.dim, lambda h, m: {k: c for (k,), c in ops.mul(m, h).items()})
    structures = {
        'left_action': mul,
        'right_action': right_mul,
        'left_coaction': dict(H.comul),
        'right_coaction': dict(H.comul),
    }
    return _build(kind, H, H.dim, structures, labels=H.labels, name=f'regular {H.name}')


def conjugation(G, kind='ll', host=None):
    """k[G] agissant sur lui-même par h·g = hgh⁻¹, coaction g ↦ g⊗g"""
    H = host or group_algebra(G)
    n = G.order
    action = _matrices(H, n, lambda h, g: {G.mul(h, g, G.inverse(h)): 1})
    structures = {
        'left_action': action,
        'left_coaction': {g: Tensor((n, n), {(g, g): 1}, H.conductor) for g in G.elements},
        'right_coaction': {g: Tensor((n, n), {(g, g): 1}, H.conductor) for g in G.elements},
    }
    if kind not in ('ll', 'lr'):
        raise StructureError('conjugation modules are Yetter-Drinfeld modules (ll or lr)')
    module = _build(kind, H, n, structures, labels=G.labels, name=f'conj {G.name}')
    module.check().raise_for_failure()
    return module


def adjoint_yd_module(H):
    """M = H, h·m = h₁mS(h₂), coaction Δ"""
    ops = HostOps(H)
    d = H.dim

    def adjoint(h, m):
        t = apply_at(Tensor((d, d), {(h, m): 1}, H.conductor), 1, ops.comul, (d, d))
        t = apply_at(permute_legs(t, (1, 3, 2)), 3, ops.antipode, (d,))
        t = apply_at(apply_at(t, 2, ops.mul, (d,), 2), 1, ops.mul, (d,), 2)
        return as_column(t)

    module = YdModuleLL(H, d, left_action=_matrices(H, d, adjoint), left_coaction=dict(H.comul),
                        labels=H.labels, name=f'ad {H.name}')
    report = module.check()
    if not report.passed:
        raise AxiomFailure(f'adjoint module of {H.name} is not Yetter-Drinfeld', report=report)
    logger.debug('built %r', module)
    return module


def lr_from_llyd(M):
    """Action à droite par ε, coaction à droite m ↦ m⊗1"""
    if M.kind != 'll':
        raise StructureError('only left-left Yetter-Drinfeld modules embed in LR(H)')
    M.check().raise_for_failure(f'{M.name} is not a left-left Yetter-Drinfeld module')
    H = M.host
    right = _trivial_structures(H, M.dim)
    return LrObject(H, M.dim, left_action=M.left_action, right_action=right['right_action'],
                    left_coaction=M.left_coaction, right_coaction=right['right_coaction'],
                    labels=M.labels, name=f'LR({M.name})')


def witness_catalog(H, group=None):
    """
    Objets parcourus par witness_search, dans cet ordre : le module adjoint
    ad H, son carré tensoriel ad H ⊗ ad H, puis le module de conjugaison
    quand H = k[group].
    """
    ad = adjoint_yd_module(H)
    objects = [ad, tensor_object(H, ad, ad)]
    if group is not None:
        objects.append(conjugation(group, host=H))
    return objects
