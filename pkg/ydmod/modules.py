"""
Modules de Yetter-Drinfeld (gauche-gauche, gauche-droite) et objets de LR(H),
donnés par constantes de structure, et la vérification exhaustive de leurs
axiomes sur les vecteurs de base.

Stockage :
    left_action[h]     SparseMatrix d×d de m ↦ h·m
    right_action[h]    SparseMatrix d×d de m ↦ m·h
    left_coaction[m]   Tensor (dim H, d) : m⁽⁻¹⁾⊗m⁽⁰⁾
    right_coaction[m]  Tensor (d, dim H) : m₍₀₎⊗m₍₁₎, noté m^{<0>}⊗m^{<1>} dans LR(H)
"""
import logging
from itertools import product

from hopfcore.algebra import permute_legs
from hopfcore.exceptions import StructureError
from hopfcore.linalg import SparseMatrix
from hopfcore.reports import CheckReport
from hopfcore.tensors import Accumulator, Tensor

logger = logging.getLogger(__name__)


def apply_at(t, leg, fn, dims, width=1):
    """
    Remplace les pattes leg .. leg+width-1 de chaque terme par les termes de
    fn(*indices) ({clé: coefficient}) ; `dims` décrit les nouvelles pattes.
    """
    start = leg - 1
    acc = Accumulator(t.conductor)
    for key, value in t.entries.items():
        head, tail = key[:start], key[start + width:]
        for sub, c in fn(*key[start:start + width]).items():
            acc.add(head + sub + tail, value * c)
    return acc.to_tensor(t.dims[:start] + tuple(dims) + t.dims[start + width:])


def merge_legs(t, leg):
    """Fusionne les pattes leg et leg+1 : (i, j) ↦ i·d + j"""
    start = leg - 1
    inner = t.dims[start + 1]
    entries = {key[:start] + (key[start] * inner + key[start + 1],) + key[start + 2:]: v
               for key, v in t.entries.items()}
    return Tensor._build(t.dims[:start] + (t.dims[start] * inner,) + t.dims[start + 2:],
                         t.conductor, entries)


def split_index(index, dims):
    """Inverse de l'aplatissement (i₁·d₂ + i₂)·d₃ + i₃"""
    out = []
    for d in reversed(dims):
        index, r = divmod(index, d)
        out.append(r)
    return tuple(reversed(out))


def as_column(t):
    return {key[0]: v for key, v in t.entries.items()}


class HostOps:
    """La structure de H comme fonctions d'indices de base, pour apply_at"""

    def __init__(self, H):
        self.H = H

    def mul(self, a, b):
        return {(k,): c for k, c in self.H.mul_table.get((a, b), ())}

    def comul(self, h):
        return self.H.comul[h].entries

    def counit(self, h):
        c = self.H.counit[h]
        return {(): c} if c else {}

    def antipode(self, h):
        return {(i,): v for i, v in self.H.antipode.column(h).items()}

    def antipode_inverse(self, h):
        return {(i,): v for i, v in self.H.antipode_inverse().column(h).items()}


def is_commutative(H):
    return all(H.mul_basis(a, b) == H.mul_basis(b, a) for a, b in product(range(H.dim), repeat=2))


def is_cocommutative(H):
    return all(permute_legs(H.comul[h], (2, 1)) == H.comul[h] for h in range(H.dim))


class HopfModule:
    kind = ''
    required = ()

    def __init__(self, host, dim, left_action=None, right_action=None, left_coaction=None,
                 right_coaction=None, labels=None, name=''):
        if dim < 1:
            raise StructureError('module dimension must be positive')
        self.host = host
        self.dim = dim
        self.labels = tuple(labels) if labels else tuple(f'm{i}' for i in range(dim))
        if len(self.labels) != dim:
            raise StructureError('one label per basis vector')
        self.name = name or f'{self.kind} module over {host.name}'
        self.left_action = self._actions(left_action)
        self.right_action = self._actions(right_action)
        self.left_coaction = self._coaction(left_coaction, (host.dim, dim))
        self.right_coaction = self._coaction(right_coaction, (dim, host.dim))
        missing = [attr for attr in self.required if getattr(self, attr) is None]
        if missing:
            raise StructureError(f'{self.kind} module needs {", ".join(missing)}')

    def _actions(self, matrices):
        if matrices is None:
            return None
        matrices = list(matrices)
        if len(matrices) != self.host.dim:
            raise StructureError('one action matrix per basis element of H')
        for matrix in matrices:
            if not isinstance(matrix, SparseMatrix) or matrix.shape != (self.dim, self.dim):
                raise StructureError(f'action matrices must be {self.dim}x{self.dim}')
            if matrix.conductor != self.host.conductor:
                raise StructureError('action uses another conductor')
        return matrices

    def _coaction(self, coaction, dims):
        if coaction is None:
            return None
        coaction = dict(coaction)
        if sorted(coaction) != list(range(self.dim)):
            raise StructureError('coaction must be defined on every basis vector')
        for value in coaction.values():
            if not isinstance(value, Tensor) or value.dims != dims:
                raise StructureError(f'coaction values must be tensors of dims {dims}')
            if value.conductor != self.host.conductor:
                raise StructureError('coaction uses another conductor')
        return coaction

    # fonctions d'indices pour apply_at

    def act(self, h, m):
        return {(i,): v for i, v in self.left_action[h].column(m).items()}

    def ract(self, m, h):
        return {(i,): v for i, v in self.right_action[h].column(m).items()}

    def lco(self, m):
        return self.left_coaction[m].entries

    def rco(self, m):
        return self.right_coaction[m].entries

    def basis(self, m):
        return Tensor((self.dim,), {(m,): 1}, self.host.conductor)

    def check(self):
        raise NotImplementedError

    def __repr__(self):
        return f'<{type(self).__name__} {self.name} dim={self.dim}>'


class YdModuleLL(HopfModule):
    kind = 'll'
    required = ('left_action', 'left_coaction')

    def check(self):
        return check_yd_ll(self.host, self)


class YdModuleLR(HopfModule):
    kind = 'lr'
    required = ('left_action', 'right_coaction')

    def check(self):
        return check_yd_lr(self.host, self)


class LrObject(HopfModule):
    kind = 'lrobj'
    required = ('left_action', 'right_action', 'left_coaction', 'right_coaction')

    def check(self):
        return check_lr_object(self.host, self)


KINDS = {cls.kind: cls for cls in (YdModuleLL, YdModuleLR, LrObject)}


def _require_host(H, M):
    if M.host is not H and M.host != H:
        raise StructureError(f'{M.name} lives over another Hopf algebra')


def _start(H, dims, key):
    return Tensor(dims, {key: 1}, H.conductor)


def _compare(report, name, domain, lhs, rhs, labels):
    witness = None
    for args in domain:
        if lhs(*args) != rhs(*args):
            witness = labels(*args)
            break
    report.record(name, witness is None, witness)


def _compare_sides(report, name, domain, sides, labels):
    """sides(*args) renvoie les deux membres (lhs, rhs)"""
    witness = None
    for args in domain:
        lhs, rhs = sides(*args)
        if lhs != rhs:
            witness = labels(*args)
            break
    report.record(name, witness is None, witness)


def _left_module(report, H, M, ops):
    dH, d = H.dim, M.dim

    def unit_lhs(m):
        t = Tensor((dH, d), {(u, m): c for (u,), c in H.unit.items()}, H.conductor)
        return apply_at(t, 1, M.act, (d,), 2)

    _compare(report, 'left_module_unit', ((m,) for m in range(d)), unit_lhs, M.basis,
             lambda m: (M.labels[m],))
    _compare(report, 'left_module_associative', product(range(dH), range(dH), range(d)),
             lambda h, k, m: apply_at(apply_at(_start(H, (dH, dH, d), (h, k, m)), 2, M.act, (d,), 2),
                                      1, M.act, (d,), 2),
             lambda h, k, m: apply_at(apply_at(_start(H, (dH, dH, d), (h, k, m)), 1, ops.mul, (dH,), 2),
                                      1, M.act, (d,), 2),
             lambda h, k, m: (H.labels[h], H.labels[k], M.labels[m]))


def _right_module(report, H, M, ops):
    dH, d = H.dim, M.dim

    def unit_lhs(m):
        t = Tensor((d, dH), {(m, u): c for (u,), c in H.unit.items()}, H.conductor)
        return apply_at(t, 1, M.ract, (d,), 2)

    _compare(report, 'right_module_unit', ((m,) for m in range(d)), unit_lhs, M.basis,
             lambda m: (M.labels[m],))
    _compare(report, 'right_module_associative', product(range(d), range(dH), range(dH)),
             lambda m, h, k: apply_at(apply_at(_start(H, (d, dH, dH), (m, h, k)), 1, M.ract, (d,), 2),
                                      1, M.ract, (d,), 2),
             lambda m, h, k: apply_at(apply_at(_start(H, (d, dH, dH), (m, h, k)), 2, ops.mul, (dH,), 2),
                                      1, M.ract, (d,), 2),
             lambda m, h, k: (M.labels[m], H.labels[h], H.labels[k]))


def _left_comodule(report, H, M, ops):
    dH, d = H.dim, M.dim
    domain = [(m,) for m in range(d)]

    def labels(m):
        return (M.labels[m],)

    _compare(report, 'left_comodule_counit', domain,
             lambda m: apply_at(M.left_coaction[m], 1, ops.counit, ()), M.basis, labels)
    _compare(report, 'left_comodule_coassociative', domain,
             lambda m: apply_at(M.left_coaction[m], 1, ops.comul, (dH, dH)),
             lambda m: apply_at(M.left_coaction[m], 2, M.lco, (dH, d)), labels)


def _right_comodule(report, H, M, ops):
    dH, d = H.dim, M.dim
    domain = [(m,) for m in range(d)]

    def labels(m):
        return (M.labels[m],)

    _compare(report, 'right_comodule_counit', domain,
             lambda m: apply_at(M.right_coaction[m], 2, ops.counit, ()), M.basis, labels)
    _compare(report, 'right_comodule_coassociative', domain,
             lambda m: apply_at(M.right_coaction[m], 1, M.rco, (d, dH)),
             lambda m: apply_at(M.right_coaction[m], 2, ops.comul, (dH, dH)), labels)


def _left_left_yd(H, M, ops, h, m):
    """(h₁·m)⁽⁻¹⁾h₂ ⊗ (h₁·m)⁽⁰⁾ et h₁m⁽⁻¹⁾ ⊗ h₂·m⁽⁰⁾"""
    dH, d = H.dim, M.dim
    split = apply_at(_start(H, (dH, d), (h, m)), 1, ops.comul, (dH, dH))
    lhs = apply_at(permute_legs(split, (1, 3, 2)), 1, M.act, (d,), 2)
    lhs = apply_at(lhs, 1, M.lco, (dH, d))
    lhs = apply_at(permute_legs(lhs, (1, 3, 2)), 1, ops.mul, (dH,), 2)
    rhs = apply_at(split, 3, M.lco, (dH, d))
    rhs = apply_at(permute_legs(rhs, (1, 3, 2, 4)), 1, ops.mul, (dH,), 2)
    rhs = apply_at(rhs, 2, M.act, (d,), 2)
    return lhs, rhs


def _left_right_yd(H, M, ops, h, m):
    """(h·m)₍₀₎ ⊗ (h·m)₍₁₎ et h₂·m₍₀₎ ⊗ h₃m₍₁₎S⁻¹(h₁)"""
    dH, d = H.dim, M.dim
    start = _start(H, (dH, d), (h, m))
    lhs = apply_at(apply_at(start, 1, M.act, (d,), 2), 1, M.rco, (d, dH))
    rhs = apply_at(apply_at(start, 1, ops.comul, (dH, dH)), 1, ops.comul, (dH, dH))
    rhs = apply_at(rhs, 4, M.rco, (d, dH))
    rhs = apply_at(rhs, 1, ops.antipode_inverse, (dH,))
    # (h₁, h₂, h₃, m₀, m₁) → (h₂, m₀, h₃, m₁, h₁)
    rhs = permute_legs(rhs, (2, 4, 3, 5, 1))
    rhs = apply_at(apply_at(rhs, 3, ops.mul, (dH,), 2), 3, ops.mul, (dH,), 2)
    rhs = apply_at(rhs, 1, M.act, (d,), 2)
    return lhs, rhs


def _yd_check(report, name, H, M, ops, sides):
    _compare_sides(report, name, product(range(H.dim), range(M.dim)),
                   lambda h, m: sides(H, M, ops, h, m), lambda h, m: (H.labels[h], M.labels[m]))


def check_left_module(H, M):
    """Axiomes de H-module à gauche seuls (unité, associativité)"""
    _require_host(H, M)
    report = CheckReport(subject=M.name)
    _left_module(report, H, M, HostOps(H))
    return report


def check_yd_ll(H, M):
    _require_host(H, M)
    ops = HostOps(H)
    report = CheckReport(subject=M.name)
    _left_module(report, H, M, ops)
    _left_comodule(report, H, M, ops)
    _yd_check(report, 'yd_compatibility', H, M, ops, _left_left_yd)
    logger.debug('%s: left-left YD passed=%s', M.name, report.passed)
    return report


def check_yd_lr(H, M):
    _require_host(H, M)
    ops = HostOps(H)
    report = CheckReport(subject=M.name)
    _left_module(report, H, M, ops)
    _right_comodule(report, H, M, ops)
    _yd_check(report, 'yd_compatibility', H, M, ops, _left_right_yd)
    logger.debug('%s: left-right YD passed=%s', M.name, report.passed)
    return report


def _left_right_long(H, M, ops, h, m):
    # (h·m)^{<0>} ⊗ (h·m)^{<1>} = h·m^{<0>} ⊗ m^{<1>}
    dH, d = H.dim, M.dim
    start = _start(H, (dH, d), (h, m))
    lhs = apply_at(apply_at(start, 1, M.act, (d,), 2), 1, M.rco, (d, dH))
    rhs = apply_at(apply_at(start, 2, M.rco, (d, dH)), 1, M.act, (d,), 2)
    return lhs, rhs


def _right_right_yd(H, M, ops, m, h):
    # (m·h₂)^{<0>} ⊗ h₁(m·h₂)^{<1>} = m^{<0>}·h₁ ⊗ m^{<1>}h₂
    dH, d = H.dim, M.dim
    split = apply_at(_start(H, (d, dH), (m, h)), 2, ops.comul, (dH, dH))
    lhs = apply_at(permute_legs(split, (1, 3, 2)), 1, M.ract, (d,), 2)
    lhs = apply_at(lhs, 1, M.rco, (d, dH))
    lhs = apply_at(permute_legs(lhs, (1, 3, 2)), 2, ops.mul, (dH,), 2)
    rhs = apply_at(split, 1, M.rco, (d, dH))
    rhs = apply_at(permute_legs(rhs, (1, 3, 2, 4)), 1, M.ract, (d,), 2)
    rhs = apply_at(rhs, 2, ops.mul, (dH,), 2)
    return lhs, rhs


def _right_left_long(H, M, ops, m, h):
    # (m·h)⁽⁻¹⁾ ⊗ (m·h)⁽⁰⁾ = m⁽⁻¹⁾ ⊗ m⁽⁰⁾·h
    dH, d = H.dim, M.dim
    start = _start(H, (d, dH), (m, h))
    lhs = apply_at(apply_at(start, 1, M.ract, (d,), 2), 1, M.lco, (dH, d))
    rhs = apply_at(apply_at(start, 1, M.lco, (dH, d)), 2, M.ract, (d,), 2)
    return lhs, rhs


def _bimodule(H, M, ops, h, m, k):
    # (h·m)·k = h·(m·k)
    dH, d = H.dim, M.dim
    start = _start(H, (dH, d, dH), (h, m, k))
    lhs = apply_at(apply_at(start, 1, M.act, (d,), 2), 1, M.ract, (d,), 2)
    rhs = apply_at(apply_at(start, 2, M.ract, (d,), 2), 1, M.act, (d,), 2)
    return lhs, rhs


def _bicomodule(H, M, ops, m):
    # (id⊗ρ)λ = (λ⊗id)ρ
    dH, d = H.dim, M.dim
    lhs = apply_at(M.left_coaction[m], 2, M.rco, (d, dH))
    rhs = apply_at(M.right_coaction[m], 1, M.lco, (dH, d))
    return lhs, rhs


def long_conditions(H, M):
    """Formes de Long auxquelles se réduisent les deux conditions YD quand H est commutative et cocommutative"""
    _require_host(H, M)
    ops = HostOps(H)
    dH, d = H.dim, M.dim
    report = CheckReport(subject=f'{M.name} long')

    def left(h, m):
        # (h·m)⁽⁻¹⁾ ⊗ (h·m)⁽⁰⁾ = m⁽⁻¹⁾ ⊗ h·m⁽⁰⁾
        start = _start(H, (dH, d), (h, m))
        lhs = apply_at(apply_at(start, 1, M.act, (d,), 2), 1, M.lco, (dH, d))
        rhs = apply_at(permute_legs(apply_at(start, 2, M.lco, (dH, d)), (2, 1, 3)), 2, M.act, (d,), 2)
        return lhs, rhs

    def right(m, h):
        # (m·h)^{<0>} ⊗ (m·h)^{<1>} = m^{<0>}·h ⊗ m^{<1>}
        start = _start(H, (d, dH), (m, h))
        lhs = apply_at(apply_at(start, 1, M.ract, (d,), 2), 1, M.rco, (d, dH))
        rhs = apply_at(permute_legs(apply_at(start, 1, M.rco, (d, dH)), (1, 3, 2)), 1, M.ract, (d,), 2)
        return lhs, rhs

    _compare_sides(report, 'long_left_coaction', product(range(dH), range(d)), left,
                   lambda h, m: (H.labels[h], M.labels[m]))
    _compare_sides(report, 'long_right_coaction', product(range(d), range(dH)), right,
                   lambda m, h: (M.labels[m], H.labels[h]))
    return report


def check_lr_object(H, M):
    _require_host(H, M)
    ops = HostOps(H)
    dH, d = H.dim, M.dim
    report = CheckReport(subject=M.name)
    _left_module(report, H, M, ops)
    _right_module(report, H, M, ops)
    _left_comodule(report, H, M, ops)
    _right_comodule(report, H, M, ops)
    _compare_sides(report, 'bimodule', product(range(dH), range(d), range(dH)),
                   lambda h, m, k: _bimodule(H, M, ops, h, m, k),
                   lambda h, m, k: (H.labels[h], M.labels[m], H.labels[k]))
    _compare_sides(report, 'bicomodule', ((m,) for m in range(d)),
                   lambda m: _bicomodule(H, M, ops, m), lambda m: (M.labels[m],))
    _yd_check(report, 'left_left_yd', H, M, ops, _left_left_yd)
    _yd_check(report, 'left_right_long', H, M, ops, _left_right_long)
    for name, sides in (('right_right_yd', _right_right_yd), ('right_left_long', _right_left_long)):
        _compare_sides(report, name, product(range(d), range(dH)),
                       lambda m, h, sides=sides: sides(H, M, ops, m, h),
                       lambda m, h: (M.labels[m], H.labels[h]))
    if is_commutative(H) and is_cocommutative(H):
        report.extend(long_conditions(H, M))
    logger.debug('%s: LR(H) object passed=%s', M.name, report.passed)
    return report
