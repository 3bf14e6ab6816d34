"""
Structures quasi-triangulaires positives R(ξ, η) sur H(G; G₊, G₋), leur
critère de pseudotriangularité par conditions sur les groupes, le cas normal
et le double de k[G]*.

Notations des actions (voir factorization) :
    ˣu = left_on_plus(x, u)     xᵘ = right_on_minus(x, u)
    ᵘx = left_on_minus(u, x)    uˣ = right_on_plus(u, x)
"""
import logging
from itertools import product

from hopfcore.exceptions import AxiomFailure, CrossCheckError, StructureError
from hopfcore.reports import CheckReport
from hopfcore.tensors import Tensor
from hopfcore.workers import run_jobs
from quasitri.checks import QtStructure, double_braiding, pseudotriangularity

from .factorization import verify_unique_factorization
from .groups import direct_product
from .hopf import build_positive_hopf

logger = logging.getLogger(__name__)


class HomPair:
    """ξ, η : G₊ → G₋, donnés par {u: image} en indices de G"""

    __slots__ = ('xi', 'eta', 'identity')

    def __init__(self, xi, eta, identity):
        self.xi = dict(xi)
        self.eta = dict(eta)
        self.identity = identity

    @property
    def is_normal(self):
        return all(x == self.identity for x in self.xi.values())

    @property
    def is_symmetric(self):
        return self.xi == self.eta

    def __eq__(self, other):
        if not isinstance(other, HomPair):
            return NotImplemented
        return self.xi == other.xi and self.eta == other.eta

    def __hash__(self):
        return hash((tuple(sorted(self.xi.items())), tuple(sorted(self.eta.items()))))

    def describe(self, G):
        return {
            'xi': {G.label(u): G.label(x) for u, x in sorted(self.xi.items())},
            'eta': {G.label(u): G.label(x) for u, x in sorted(self.eta.items())},
        }

    def __repr__(self):
        return f'HomPair(xi={self.xi}, eta={self.eta})'


def _extend(G, generators, images):
    """Prolonge générateurs ↦ images en un morphisme, ou None"""
    mapping = {G.identity: G.identity}
    frontier = [G.identity]
    while frontier:
        g = frontier.pop()
        for h, image in zip(generators, images):
            gh, value = G.mul(g, h), G.mul(mapping[g], image)
            if gh in mapping:
                if mapping[gh] != value:
                    return None
            else:
                mapping[gh] = value
                frontier.append(gh)
    for a, b in product(mapping, repeat=2):
        if mapping[G.mul(a, b)] != G.mul(mapping[a], mapping[b]):
            return None
    return mapping


def homomorphisms(G, source, target):
    """Tous les morphismes de groupes source → target (sous-groupes de G)"""
    generators = G.generating_set(source)
    found = []
    for images in product(sorted(target), repeat=len(generators)):
        mapping = _extend(G, generators, images)
        if mapping is not None:
            found.append(mapping)
    return found


def relation_report(UF, pair):
    G = UF.group
    mul = G.mul
    xi, eta = pair.xi, pair.eta
    lp, rm = UF.left_on_plus, UF.right_on_minus
    lm, rp = UF.left_on_minus, UF.right_on_plus
    plus2 = list(product(UF.plus, UF.plus))
    plus_minus = list(product(UF.plus, UF.minus))
    relations = [
        ('rel6', plus2, lambda u, v: rm(xi[u], v) == xi[rp(u, eta[v])]),
        ('rel7', plus2, lambda u, v: lm(u, eta[v]) == eta[lp(xi[u], v)]),
        ('rel8', plus2, lambda u, v: mul(u, v) == mul(lp(xi[u], v), rp(u, eta[v]))),
        ('rel9', plus_minus, lambda u, x: mul(xi[lp(x, u)], rm(x, u)) == mul(x, xi[u])),
        ('rel10', plus_minus, lambda u, x: mul(eta[lp(x, u)], rm(x, u)) == mul(x, eta[u])),
        ('rel11', plus2, lambda u, v: lm(v, xi[u]) == xi[lp(eta[v], u)]),
        ('rel12', plus2, lambda u, v: rm(eta[v], u) == eta[rp(v, xi[u])]),
        ('rel13', plus2, lambda u, v: mul(u, v) == mul(lp(eta[u], v), rp(u, xi[v]))),
        ('rel14', plus_minus, lambda u, x: mul(lm(u, x), xi[rp(u, x)]) == mul(xi[u], x)),
        ('rel15', plus_minus, lambda u, x: mul(lm(u, x), eta[rp(u, x)]) == mul(eta[u], x)),
    ]
    report = CheckReport(subject=f'{G.name} relations')
    for name, domain, holds in relations:
        witness = next((UF.labels(*args) for args in domain if not holds(*args)), None)
        report.record(name, witness is None, witness)
    return report


QT_RELATIONS = ('rel6', 'rel7', 'rel8', 'rel9', 'rel10')
EQUIVALENT_RELATIONS = ('rel11', 'rel12', 'rel13', 'rel14', 'rel15')


def enumerate_hom_pairs(UF):
    G = UF.group
    homs = homomorphisms(G, UF.plus, UF.minus)
    pairs = []
    for xi, eta in product(homs, repeat=2):
        pair = HomPair(xi, eta, G.identity)
        report = relation_report(UF, pair)
        if not all(report[name].passed for name in QT_RELATIONS):
            continue
        failed = [name for name in EQUIVALENT_RELATIONS if not report[name].passed]
        if failed:
            raise CrossCheckError(f'{G.name}: pair satisfies rel6-rel10 but not {", ".join(failed)}')
        pairs.append(pair)
    logger.debug('%s: %d homomorphisms, %d admissible pairs', G.name, len(homs), len(pairs))
    return pairs


def R_terms(UF, pair):
    """(u, v) ↦ ({u(η(v)ᵘ)⁻¹}, {vξ(u)})"""
    G = UF.group
    return {
        (u, v): (G.mul(u, G.inverse(UF.right_on_minus(pair.eta[v], u))), G.mul(v, pair.xi[u]))
        for u, v in product(UF.plus, UF.plus)
    }


def build_R_xi_eta(UF, pair, hopf=None):
    """R(ξ,η) = Σ_{u,v ∈ G₊} {u(η(v)ᵘ)⁻¹} ⊗ {vξ(u)}, positivité vérifiée"""
    G = UF.group
    H = hopf or build_positive_hopf(UF)
    terms = R_terms(UF, pair)
    keys = list(terms.values())
    if len(set(keys)) != len(keys):
        seen = {}
        for (u, v), key in terms.items():
            if key in seen:
                raise AxiomFailure(f'R terms collide on {G.label(key[0])}⊗{G.label(key[1])} '
                                   f'for {UF.labels(*seen[key])} and {UF.labels(u, v)}')
            seen[key] = (u, v)
    R = Tensor(H.dims(2), {key: 1 for key in keys})
    structure = QtStructure(H, R, name=f'{H.name} R(xi,eta)')
    return structure.require()


def closed_form_F(UF, pair):
    """
    F = R₂₁R = Σ_{u,v} {vξ(u)(η(v̄)^ū)⁻¹} ⊗ {u(η(v)ᵘ)⁻¹ξ(ū)}
    avec ū = v^{ξ(u)} et v̄ = ^{η(v)}u
    """
    G = UF.group
    mul, inv = G.mul, G.inverse
    xi, eta = pair.xi, pair.eta
    counts = {}
    for u, v in product(UF.plus, UF.plus):
        u_bar = UF.right_on_plus(v, xi[u])
        v_bar = UF.left_on_plus(eta[v], u)
        first = mul(v, xi[u], inv(UF.right_on_minus(eta[v_bar], u_bar)))
        second = mul(u, inv(UF.right_on_minus(eta[v], u)), xi[u_bar])
        counts[first, second] = counts.get((first, second), 0) + 1
    return Tensor((G.order, G.order), counts)


def check_pseudo_conditions(UF, pair):
    """
    Les trois conditions sur (u, v, s) ∈ G₊³, avec
    t = u^{(η(v)ᵘ)⁻¹ξ(v^{ξ(u)})} et c = u^{ξ(s)(η(^{η(u)}s)^{(u^{ξ(s)})})⁻¹}.
    Renvoie (verdict, témoin (u, v, s)).
    """
    G = UF.group
    mul, inv = G.mul, G.inverse
    xi, eta = pair.xi, pair.eta
    lp, rm, rp = UF.left_on_plus, UF.right_on_minus, UF.right_on_plus

    def first_minus(a, b):
        # ξ(a)(η(^{η(b)}a)^{(b^{ξ(a)})})⁻¹
        return mul(xi[a], inv(rm(eta[lp(eta[b], a)], rp(b, xi[a]))))

    def second_minus(a, b):
        # (η(b)^a)⁻¹ξ(b^{ξ(a)})
        return mul(inv(rm(eta[b], a)), xi[rp(b, xi[a])])

    for u, v, s in product(UF.plus, repeat=3):
        t = rp(u, second_minus(u, v))
        c = rp(u, first_minus(s, u))
        conditions = (
            first_minus(u, v) == first_minus(c, v),
            mul(second_minus(u, v), first_minus(s, t)) == mul(first_minus(s, u), second_minus(c, v)),
            second_minus(s, t) == second_minus(s, u),
        )
        if not all(conditions):
            return False, UF.labels(u, v, s)
    return True, None


def normal_pseudo_witness(UF, pair):
    """Premier couple (u, v) avec η(uv) ≠ η(vu), ou None"""
    G = UF.group
    return next((UF.labels(u, v) for u, v in product(UF.plus, UF.plus)
                 if pair.eta[G.mul(u, v)] != pair.eta[G.mul(v, u)]), None)


def normal_pseudo_criterion(UF, pair, hopf=None, cross_check=True):
    """η(uv) = η(vu) pour tous u, v ∈ G₊, pour une paire normale"""
    if not pair.is_normal:
        raise StructureError('the criterion only applies to normal pairs (xi trivial)')
    witness = normal_pseudo_witness(UF, pair)
    verdict = witness is None
    if cross_check:
        qt = build_R_xi_eta(UF, pair, hopf)
        generic, _ = pseudotriangularity(qt.host, qt.R)
        if generic != verdict:
            raise CrossCheckError(f'{UF.group.name}: normal criterion says {verdict}, generic says {generic}')
    return verdict


def normal_relations(UF, pair):
    """Relations simplifiées valables quand ξ est trivial"""
    if not pair.is_normal:
        raise StructureError('simplified relations only hold for normal pairs')
    G = UF.group
    eta = pair.eta
    plus2 = list(product(UF.plus, UF.plus))
    relations = [
        ('eta_left_invariant', lambda u, v: UF.left_on_minus(u, eta[v]) == eta[v]),
        ('product_right_twist', lambda u, v: G.mul(u, v) == G.mul(v, UF.right_on_plus(u, eta[v]))),
        ('eta_right_invariant', lambda u, v: UF.right_on_minus(eta[v], u) == eta[v]),
        ('product_left_twist', lambda u, v: G.mul(u, v) == G.mul(UF.left_on_plus(eta[u], v), u)),
    ]
    report = CheckReport(subject=f'{G.name} normal relations')
    for name, holds in relations:
        witness = next((UF.labels(u, v) for u, v in plus2 if not holds(u, v)), None)
        report.record(name, witness is None, witness)
    return report


def build_double(G):
    """
    G̃ = G×G, G̃₊ = G×{e}, G̃₋ = {(g, g)}, ξ(g,e) = (e,e), η(g,e) = (g,g).
    H(G̃; G̃₊, G̃₋) est le double de k[G]* et R(ξ,η) sa structure canonique.
    """
    doubled = direct_product(G, G, name=f'{G.name}x{G.name}')
    e = G.identity

    def pair(g, h):
        return g * G.order + h

    plus = [pair(g, e) for g in G.elements]
    minus = [pair(g, g) for g in G.elements]
    UF = verify_unique_factorization(doubled, plus, minus)
    hom_pair = HomPair({pair(g, e): pair(e, e) for g in G.elements},
                       {pair(g, e): pair(g, g) for g in G.elements}, doubled.identity)
    H = build_positive_hopf(UF, name=f'D(k[{G.name}]*)')
    return UF, hom_pair, build_R_xi_eta(UF, hom_pair, H)


def pair_report(UF, pair, hopf):
    """Verdicts d'une paire : relations, axiomes, triangularité, pseudotriangularité"""
    G = UF.group
    report = CheckReport(subject=f'{G.name} pair')
    report.extend(relation_report(UF, pair))
    qt = build_R_xi_eta(UF, pair, hopf)
    report.extend(qt.report)
    report.record('triangular_iff_xi_equals_eta', qt.triangular == pair.is_symmetric,
                  (f'triangular={qt.triangular}',))
    if closed_form_F(UF, pair) != double_braiding(qt.host, qt.R):
        raise CrossCheckError(f'{G.name}: closed form of R21 R disagrees with the product')
    pseudo, witness = pseudotriangularity(qt.host, qt.R)
    conditions, condition_witness = check_pseudo_conditions(UF, pair)
    if conditions != pseudo:
        raise CrossCheckError(f'{G.name}: group conditions say {conditions}, generic criteria say {pseudo}')
    report.record('pseudotriangular', pseudo, condition_witness or witness)
    if pair.is_normal:
        report.extend(normal_relations(UF, pair))
        report.record('normal_criterion', normal_pseudo_criterion(UF, pair, hopf, cross_check=False) == pseudo,
                      normal_pseudo_witness(UF, pair))
    return report


def scan_pairs(UF, hopf=None):
    """Rapports de toutes les paires admissibles, dans l'ordre d'énumération"""
    H = hopf or build_positive_hopf(UF)
    pairs = enumerate_hom_pairs(UF)
    return pairs, run_jobs([lambda pair=pair: pair_report(UF, pair, H) for pair in pairs])
