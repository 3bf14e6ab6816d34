"""
Factorisations uniques G = G₊G₋ et les quatre actions qu'elles induisent :

    xu = (ˣu)(xᵘ)  pour x ∈ G₋, u ∈ G₊
    ux = (ᵘx)(uˣ)  pour u ∈ G₊, x ∈ G₋
"""
import logging
from itertools import product

from hopfcore.exceptions import GroupError
from hopfcore.reports import CheckReport

logger = logging.getLogger(__name__)


def _as_indices(G, subset):
    return sorted({G.index(s) if isinstance(s, str) else int(s) for s in subset})


class UniqueFactorization:
    def __init__(self, group, plus, minus, plus_part, minus_part, bar_minus, bar_plus):
        self.group = group
        self.plus = tuple(plus)
        self.minus = tuple(minus)
        # g = g₊g₋ = ḡ₋ḡ₊
        self.plus_part = plus_part
        self.minus_part = minus_part
        self.bar_minus = bar_minus
        self.bar_plus = bar_plus

    # ˣu
    def left_on_plus(self, x, u):
        return self.plus_part[self.group.mul(x, u)]

    # xᵘ
    def right_on_minus(self, x, u):
        return self.minus_part[self.group.mul(x, u)]

    # ᵘx
    def left_on_minus(self, u, x):
        return self.bar_minus[self.group.mul(u, x)]

    # uˣ
    def right_on_plus(self, u, x):
        return self.bar_plus[self.group.mul(u, x)]

    @property
    def is_trivial(self):
        return len(self.plus) == 1 or len(self.minus) == 1

    def labels(self, *elements):
        return tuple(self.group.label(g) for g in elements)

    def __repr__(self):
        G = self.group
        return (f'<UniqueFactorization {G.name} = {{{",".join(self.labels(*self.plus))}}}'
                f'{{{",".join(self.labels(*self.minus))}}}>')


def verify_unique_factorization(G, plus, minus):
    plus = _as_indices(G, plus)
    minus = _as_indices(G, minus)
    for name, subset in (('G+', plus), ('G-', minus)):
        if not G.is_subgroup(subset):
            raise GroupError(f'{name} is not a subgroup of {G.name}',
                             witness=tuple(G.label(g) for g in subset))
    plus_part, minus_part = {}, {}
    for u, x in product(plus, minus):
        g = G.mul(u, x)
        if g in plus_part:
            raise GroupError('factorization is not unique',
                             witness=(G.label(g), G.label(plus_part[g]), G.label(u)))
        plus_part[g], minus_part[g] = u, x
    missing = [g for g in G.elements if g not in plus_part]
    if missing:
        raise GroupError(f'products of G+ and G- cover {len(plus_part)} of {G.order} elements',
                         witness=(G.label(missing[0]),))
    bar_minus, bar_plus = {}, {}
    for x, u in product(minus, plus):
        g = G.mul(x, u)
        bar_minus[g], bar_plus[g] = x, u
    logger.debug('unique factorization of %s: |G+|=%d |G-|=%d', G.name, len(plus), len(minus))
    return UniqueFactorization(G, plus, minus, plus_part, minus_part, bar_minus, bar_plus)


def action_tables(UF):
    G = UF.group
    return {
        'left_on_plus': {(x, u): UF.left_on_plus(x, u) for x in UF.minus for u in UF.plus},
        'right_on_minus': {(x, u): UF.right_on_minus(x, u) for x in UF.minus for u in UF.plus},
        'left_on_minus': {(u, x): UF.left_on_minus(u, x) for u in UF.plus for x in UF.minus},
        'right_on_plus': {(u, x): UF.right_on_plus(u, x) for u in UF.plus for x in UF.minus},
        'labels': G.labels,
    }


def derived_actions(UF):
    """Tables des actions et rapport des six identités qui les relient aux décompositions"""
    G = UF.group
    report = CheckReport(subject=f'{G.name} actions')
    identities = {
        # ^{ḡ₋}ḡ₊ = g₊
        'bar_left_action': lambda g: UF.left_on_plus(UF.bar_minus[g], UF.bar_plus[g]) == UF.plus_part[g],
        # ḡ₋^{ḡ₊} = g₋
        'bar_right_action': lambda g: UF.right_on_minus(UF.bar_minus[g], UF.bar_plus[g]) == UF.minus_part[g],
        # g₊^{g₋} = ḡ₊
        'plus_right_action': lambda g: UF.right_on_plus(UF.plus_part[g], UF.minus_part[g]) == UF.bar_plus[g],
        # ^{g₊}g₋ = ḡ₋
        'plus_left_action': lambda g: UF.left_on_minus(UF.plus_part[g], UF.minus_part[g]) == UF.bar_minus[g],
        # (^{g₊}g₋)(g₊^{g₋}) = g₊g₋
        'plus_minus_product': lambda g: G.mul(UF.left_on_minus(UF.plus_part[g], UF.minus_part[g]),
                                              UF.right_on_plus(UF.plus_part[g], UF.minus_part[g]))
                                        == G.mul(UF.plus_part[g], UF.minus_part[g]),
    }
    for name, holds in identities.items():
        witness = next(((G.label(g),) for g in G.elements if not holds(g)), None)
        report.record(name, witness is None, witness)
    # (^{g₋}g₊)(g₋^{g₊}) = g₋g₊
    witness = next((UF.labels(x, u) for x, u in product(UF.minus, UF.plus)
                    if G.mul(UF.left_on_plus(x, u), UF.right_on_minus(x, u)) != G.mul(x, u)), None)
    report.record('minus_plus_product', witness is None, witness)
    return action_tables(UF), report
