"""
Produits tensoriels d'objets, tressages canoniques en matrices et critère
de pseudosymétrie.

Les vecteurs de M⊗N sont aplatis en m·dim N + n, ceux de X⊗Y⊗Z en
(x·dim Y + y)·dim Z + z, ce qui est l'ordre de SparseMatrix.kron.
"""
import logging
from dataclasses import dataclass, field
from itertools import product

from hopfcore.algebra import permute_legs
from hopfcore.exceptions import CrossCheckError, StructureError
from hopfcore.linalg import SparseMatrix
from hopfcore.reports import CheckReport
from hopfcore.tensors import Tensor
from hopfcore.workers import max_threads, run_jobs

from .modules import KINDS, HostOps, apply_at, as_column, merge_legs, split_index

logger = logging.getLogger(__name__)


def _same_kind(H, *objects):
    kinds = {M.kind for M in objects}
    if len(kinds) != 1:
        raise StructureError(f'objects of different kinds: {", ".join(sorted(kinds))}')
    for M in objects:
        if M.host is not H and M.host != H:
            raise StructureError(f'{M.name} lives over another Hopf algebra')
    return kinds.pop()


def tensor_object(H, M, N, verify=True):
    """M⊗N avec les structures produit de la catégorie de M et N"""
    kind = _same_kind(H, M, N)
    ops = HostOps(H)
    dH, dM, dN = H.dim, M.dim, N.dim
    cond = H.conductor
    pairs = list(product(range(dM), range(dN)))
    structures = {}

    # h·(m⊗n) = h₁·m ⊗ h₂·n
    def left(h, m, n):
        t = apply_at(Tensor((dH, dM, dN), {(h, m, n): 1}, cond), 1, ops.comul, (dH, dH))
        t = apply_at(permute_legs(t, (1, 3, 2, 4)), 1, M.act, (dM,), 2)
        return as_column(merge_legs(apply_at(t, 2, N.act, (dN,), 2), 1))

    structures['left_action'] = [
        SparseMatrix._build(dM * dN, dM * dN, cond, {m * dN + n: left(h, m, n) for m, n in pairs})
        for h in range(dH)
    ]

    if kind == 'lrobj':
        # (m⊗n)·h = m·h₁ ⊗ n·h₂
        def right(h, m, n):
            t = apply_at(Tensor((dM, dN, dH), {(m, n, h): 1}, cond), 3, ops.comul, (dH, dH))
            t = apply_at(permute_legs(t, (1, 3, 2, 4)), 1, M.ract, (dM,), 2)
            return as_column(merge_legs(apply_at(t, 2, N.ract, (dN,), 2), 1))

        structures['right_action'] = [
            SparseMatrix._build(dM * dN, dM * dN, cond, {m * dN + n: right(h, m, n) for m, n in pairs})
            for h in range(dH)
        ]

    if kind in ('ll', 'lrobj'):
        # m⁽⁻¹⁾n⁽⁻¹⁾ ⊗ m⁽⁰⁾ ⊗ n⁽⁰⁾
        def left_co(m, n):
            t = apply_at(Tensor((dM, dN), {(m, n): 1}, cond), 1, M.lco, (dH, dM))
            t = apply_at(t, 3, N.lco, (dH, dN))
            t = apply_at(permute_legs(t, (1, 3, 2, 4)), 1, ops.mul, (dH,), 2)
            return merge_legs(t, 2)

        structures['left_coaction'] = {m * dN + n: left_co(m, n) for m, n in pairs}

    if kind in ('lr', 'lrobj'):
        # ll-YD : m₍₀₎ ⊗ n₍₀₎ ⊗ n₍₁₎m₍₁₎ ; LR(H) : m^{<0>} ⊗ n^{<0>} ⊗ m^{<1>}n^{<1>}
        order = (1, 3, 4, 2) if kind == 'lr' else (1, 3, 2, 4)

        def right_co(m, n):
            t = apply_at(Tensor((dM, dN), {(m, n): 1}, cond), 1, M.rco, (dM, dH))
            t = apply_at(t, 3, N.rco, (dN, dH))
            t = apply_at(permute_legs(t, order), 3, ops.mul, (dH,), 2)
            return merge_legs(t, 1)

        structures['right_coaction'] = {m * dN + n: right_co(m, n) for m, n in pairs}

    labels = [f'{M.labels[m]}⊗{N.labels[n]}' for m, n in pairs]
    cls = KINDS[kind]
    result = cls(H, dM * dN, labels=labels, name=f'{M.name}⊗{N.name}',
                 **{attr: structures[attr] for attr in cls.required})
    if verify:
        result.check().raise_for_failure()
    return result


def _braid(H, ops, M, N, kind, m, n):
    """c_{M,N}(m⊗n), tenseur de dims (dim N, dim M)"""
    dH, dM, dN = H.dim, M.dim, N.dim
    t = Tensor((dM, dN), {(m, n): 1}, H.conductor)
    if kind == 'll':
        # m⁽⁻¹⁾·n ⊗ m⁽⁰⁾
        t = apply_at(t, 1, M.lco, (dH, dM))
        return apply_at(permute_legs(t, (1, 3, 2)), 1, N.act, (dN,), 2)
    if kind == 'lr':
        # n₍₀₎ ⊗ n₍₁₎·m
        t = apply_at(t, 2, N.rco, (dN, dH))
        return apply_at(permute_legs(t, (2, 3, 1)), 2, M.act, (dM,), 2)
    # m⁽⁻¹⁾·n^{<0>} ⊗ m⁽⁰⁾·n^{<1>}
    t = apply_at(apply_at(t, 1, M.lco, (dH, dM)), 3, N.rco, (dN, dH))
    t = apply_at(permute_legs(t, (1, 3, 2, 4)), 1, N.act, (dN,), 2)
    return apply_at(t, 2, M.ract, (dM,), 2)


def _braid_inverse(H, ops, M, N, kind, n, m):
    """c⁻¹_{M,N}(n⊗m), tenseur de dims (dim M, dim N)"""
    dH, dM, dN = H.dim, M.dim, N.dim
    t = Tensor((dN, dM), {(n, m): 1}, H.conductor)
    if kind == 'll':
        # m⁽⁰⁾ ⊗ S⁻¹(m⁽⁻¹⁾)·n
        t = apply_at(apply_at(t, 2, M.lco, (dH, dM)), 2, ops.antipode_inverse, (dH,))
        return apply_at(permute_legs(t, (3, 2, 1)), 2, N.act, (dN,), 2)
    if kind == 'lr':
        # S(n₍₁₎)·m ⊗ n₍₀₎
        t = apply_at(apply_at(t, 1, N.rco, (dN, dH)), 2, ops.antipode, (dH,))
        return apply_at(permute_legs(t, (2, 3, 1)), 1, M.act, (dM,), 2)
    # m⁽⁰⁾·S⁻¹(n^{<1>}) ⊗ S⁻¹(m⁽⁻¹⁾)·n^{<0>}
    t = apply_at(apply_at(t, 1, N.rco, (dN, dH)), 3, M.lco, (dH, dM))
    t = apply_at(apply_at(t, 2, ops.antipode_inverse, (dH,)), 3, ops.antipode_inverse, (dH,))
    t = apply_at(permute_legs(t, (4, 2, 3, 1)), 1, M.ract, (dM,), 2)
    return apply_at(t, 2, N.act, (dN,), 2)


def braiding_matrix(H, M, N):
    """
    (c, c⁻¹) : c_{M,N} de M⊗N dans N⊗M et son inverse construit par la
    formule inverse ; les deux compositions sont exigées égales à l'identité.
    """
    kind = _same_kind(H, M, N)
    ops = HostOps(H)
    dM, dN = M.dim, N.dim
    size = dM * dN
    forward = SparseMatrix._build(size, size, H.conductor, {
        m * dN + n: as_column(merge_legs(_braid(H, ops, M, N, kind, m, n), 1))
        for m, n in product(range(dM), range(dN))
    })
    backward = SparseMatrix._build(size, size, H.conductor, {
        n * dM + m: as_column(merge_legs(_braid_inverse(H, ops, M, N, kind, n, m), 1))
        for n, m in product(range(dN), range(dM))
    })
    if not (backward @ forward).is_identity() or not (forward @ backward).is_identity():
        raise CrossCheckError(f'inverse braiding formula does not invert c_{{{M.name},{N.name}}}')
    return forward, backward


def _identity(M):
    return SparseMatrix.identity(M.dim, M.host.conductor)


def _failing_triples(A, B, objects):
    dims = tuple(M.dim for M in objects)
    out = []
    for j in sorted(set(A.columns) | set(B.columns)):
        if A.column(j) != B.column(j):
            out.append(tuple(M.labels[i] for M, i in zip(objects, split_index(j, dims))))
    return tuple(out)


@dataclass(frozen=True)
class PseudoSymmetry:
    passed: bool
    witness: tuple = None
    t_witness: tuple = None
    failures: tuple = field(default=(), repr=False)
    t_failures: tuple = field(default=(), repr=False)

    def as_dict(self):
        data = {'passed': self.passed}
        if self.witness:
            data['witness'] = list(self.witness)
        if self.t_witness:
            data['t_witness'] = list(self.t_witness)
        return data


def pseudosymmetry_check(H, X, Y, Z):
    """
    (c_{Y,Z}⊗id)(id⊗c⁻¹_{Z,X})(c_{X,Y}⊗id) = (id⊗c_{X,Y})(c⁻¹_{Z,X}⊗id)(id⊗c_{Y,Z})
    sur X⊗Y⊗Z, et commutation de T_{Z,Y}⊗id avec id⊗T_{Y,X} sur Z⊗Y⊗X,
    où T_{U,V} = c_{V,U}c_{U,V}. Les deux verdicts doivent coïncider.
    """
    _same_kind(H, X, Y, Z)
    c_xy, _ = braiding_matrix(H, X, Y)
    c_yz, _ = braiding_matrix(H, Y, Z)
    _, cinv_zx = braiding_matrix(H, Z, X)
    c_yx, _ = braiding_matrix(H, Y, X)
    c_zy, _ = braiding_matrix(H, Z, Y)
    ix, iy, iz = _identity(X), _identity(Y), _identity(Z)

    lhs = c_yz.kron(ix) @ iy.kron(cinv_zx) @ c_xy.kron(iz)
    rhs = iz.kron(c_xy) @ cinv_zx.kron(iy) @ ix.kron(c_yz)
    failures = _failing_triples(lhs, rhs, (X, Y, Z))

    t_zy = c_yz @ c_zy
    t_yx = c_xy @ c_yx
    first = t_zy.kron(ix) @ iz.kron(t_yx)
    second = iz.kron(t_yx) @ t_zy.kron(ix)
    t_failures = _failing_triples(first, second, (Z, Y, X))

    if bool(failures) != bool(t_failures):
        raise CrossCheckError(f'{X.name}, {Y.name}, {Z.name}: braid equation and T commutation disagree')
    logger.debug('pseudosymmetry on (%s, %s, %s): %d failing triples', X.name, Y.name, Z.name, len(failures))
    return PseudoSymmetry(not failures, failures[0] if failures else None,
                          t_failures[0] if t_failures else None, failures, t_failures)


def hexagon_check(H, X, Y, Z):
    """c_{X⊗Y,Z} = (c_{X,Z}⊗id)(id⊗c_{Y,Z}) et c_{X,Y⊗Z} = (id⊗c_{X,Z})(c_{X,Y}⊗id)"""
    _same_kind(H, X, Y, Z)
    report = CheckReport(subject=f'hexagons {X.name}, {Y.name}, {Z.name}')
    c_xz, _ = braiding_matrix(H, X, Z)
    c_yz, _ = braiding_matrix(H, Y, Z)
    c_xy, _ = braiding_matrix(H, X, Y)
    ix, iy, iz = _identity(X), _identity(Y), _identity(Z)

    whole, _ = braiding_matrix(H, tensor_object(H, X, Y, verify=False), Z)
    failures = _failing_triples(whole, c_xz.kron(iy) @ ix.kron(c_yz), (X, Y, Z))
    report.record('hexagon_left', not failures, failures[0] if failures else None)

    whole, _ = braiding_matrix(H, X, tensor_object(H, Y, Z, verify=False))
    failures = _failing_triples(whole, iy.kron(c_xz) @ c_xy.kron(iz), (X, Y, Z))
    report.record('hexagon_right', not failures, failures[0] if failures else None)
    return report


@dataclass(frozen=True)
class WitnessSearch:
    status: str
    triple: tuple = None
    witness: tuple = None

    @property
    def found(self):
        return self.status == 'witness'

    def as_dict(self):
        data = {'status': self.status}
        if self.found:
            data['triple'] = list(self.triple)
            data['witness'] = list(self.witness)
        return data


def witness_search(H, objects):
    """
    Premier triplet du catalogue (ordre lexicographique sur `objects`) qui
    viole la pseudosymétrie ; 'inconclusive' si aucun ne la viole.
    """
    objects = list(objects)
    triples = list(product(objects, repeat=3))
    batch = max_threads()
    for start in range(0, len(triples), batch):
        chunk = triples[start:start + batch]
        verdicts = run_jobs([lambda t=t: pseudosymmetry_check(H, *t) for t in chunk])
        for triple, verdict in zip(chunk, verdicts):
            if not verdict.passed:
                return WitnessSearch('witness', tuple(M.name for M in triple), verdict.witness)
    return WitnessSearch('inconclusive')
