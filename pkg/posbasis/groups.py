"""
Groupes finis donnés par table de multiplication.
"""
import logging
from itertools import product

from hopfcore.exceptions import GroupError

logger = logging.getLogger(__name__)


class FiniteGroup:
    """
    Éléments indexés 0..n-1, étiquettes distinctes, table[a][b] = indice de ab.
    La table est validée à la construction (fermeture, neutre, inverses,
    associativité) ; un échec lève GroupError avec un témoin.
    """

    def __init__(self, labels, table, identity=None, name=''):
        self.labels = tuple(str(label) for label in labels)
        self.order = len(self.labels)
        self.name = name or f'G{self.order}'
        if self.order == 0 or len(set(self.labels)) != self.order:
            raise GroupError('labels must be distinct and non empty')
        if len(table) != self.order or any(len(row) != self.order for row in table):
            raise GroupError(f'table must be {self.order}x{self.order}')
        self.table = tuple(tuple(int(c) for c in row) for row in table)
        for a, b in product(self.elements, repeat=2):
            if not 0 <= self.table[a][b] < self.order:
                raise GroupError('product out of range', witness=(self.labels[a], self.labels[b]))
        if identity is None:
            identity = next((e for e in self.elements
                             if all(self.table[e][g] == g == self.table[g][e] for g in self.elements)), None)
            if identity is None:
                raise GroupError('no identity element')
        self.identity = identity
        for g in self.elements:
            if self.table[identity][g] != g or self.table[g][identity] != g:
                raise GroupError('identity is not neutral', witness=(self.labels[identity], self.labels[g]))
        self.inverses = []
        for g in self.elements:
            inverse = next((h for h in self.elements if self.table[g][h] == identity), None)
            if inverse is None or self.table[inverse][g] != identity:
                raise GroupError('element has no inverse', witness=(self.labels[g],))
            self.inverses.append(inverse)
        for a, b, c in product(self.elements, repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise GroupError('table is not associative',
                                 witness=(self.labels[a], self.labels[b], self.labels[c]))

    @property
    def elements(self):
        return range(self.order)

    def mul(self, *elements):
        result = self.identity
        for g in elements:
            result = self.table[result][g]
        return result

    def inverse(self, g):
        return self.inverses[g]

    def index(self, label):
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise GroupError(f'unknown element {label!r} in {self.name}') from None

    def label(self, g):
        return self.labels[g]

    def indices(self, labels):
        return [self.index(label) for label in labels]

    def commutation_witness(self):
        return next(((self.labels[a], self.labels[b]) for a, b in product(self.elements, repeat=2)
                     if self.table[a][b] != self.table[b][a]), None)

    def is_abelian(self):
        return self.commutation_witness() is None

    def closure(self, generators):
        """Sous-groupe engendré (ordonné selon l'ordre des éléments de G)"""
        found = {self.identity}
        frontier = [self.identity]
        while frontier:
            g = frontier.pop()
            for h in generators:
                gh = self.table[g][h]
                if gh not in found:
                    found.add(gh)
                    frontier.append(gh)
        return sorted(found)

    def is_subgroup(self, subset):
        subset = set(subset)
        return self.identity in subset and all(self.table[a][b] in subset for a in subset for b in subset)

    def generating_set(self, subset):
        """Générateurs choisis gloutonnement dans l'ordre de G"""
        generators = []
        span = {self.identity}
        for g in sorted(subset):
            if g not in span:
                generators.append(g)
                span = set(self.closure(generators))
        return generators

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.labels == other.labels and self.table == other.table and self.identity == other.identity

    __hash__ = None

    def __repr__(self):
        return f'<FiniteGroup {self.name} order={self.order}>'


def cyclic(n, letter='c'):
    labels = ['e'] + [letter if k == 1 else f'{letter}{k}' for k in range(1, n)]
    return FiniteGroup(labels, [[(a + b) % n for b in range(n)] for a in range(n)], 0, name=f'C{n}')


def s3():
    """S₃ = ⟨r, s | r³ = s² = e, sr = r²s⟩, éléments s^b r^a rangés à l'indice 3b + a"""
    labels = ['e', 'r', 'r2', 's', 'sr', 'sr2']
    table = [[0] * 6 for _ in range(6)]
    for b, a, d, c in product(range(2), range(3), range(2), range(3)):
        table[3 * b + a][3 * d + c] = 3 * ((b + d) % 2) + ((-1) ** d * a + c) % 3
    return FiniteGroup(labels, table, 0, name='S3')


def direct_product(G, H, name=''):
    """G×H, (g, h) à l'indice g * |H| + h, étiquettes '(g,h)'"""
    pairs = list(product(G.elements, H.elements))
    labels = [f'({G.labels[g]},{H.labels[h]})' for g, h in pairs]
    table = [[G.table[g1][g2] * H.order + H.table[h1][h2] for g2, h2 in pairs] for g1, h1 in pairs]
    return FiniteGroup(labels, table, G.identity * H.order + H.identity,
                       name=name or f'{G.name}x{H.name}')


def pair_index(G, H, g, h):
    return g * H.order + h
