"""
Mots de tresses sur n brins et le quotient PS_n = B_n / [P_n, P_n].

Deux mots sont égaux dans PS_n ssi ils induisent la même permutation et le
même nombre signé de croisements pour chaque paire de brins : le mot
différence est alors pur, d'enlacements tous nuls.
Les brins sont étiquetés par leur position de départ (1..n).
"""
import re
from collections import Counter
from dataclasses import dataclass

from hopfcore.exceptions import StructureError

TOKEN = re.compile(r'^s(\d+)(?:\^(-?1))?$')


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise StructureError('a braid needs at least one strand')
        letters = tuple((int(k), int(sign)) for k, sign in self.letters)
        for k, sign in letters:
            if not 1 <= k < self.n:
                raise StructureError(f'generator s{k} out of range for {self.n} strands')
            if sign not in (1, -1):
                raise StructureError(f'exponent of s{k} must be 1 or -1')
        object.__setattr__(self, 'letters', letters)

    @classmethod
    def parse(cls, text, n):
        """« s1 s2^-1 s1 » ; la chaîne vide donne le mot vide"""
        letters = []
        for token in text.split():
            match = TOKEN.match(token)
            if match is None:
                raise StructureError(f'cannot read braid letter {token!r}')
            letters.append((int(match.group(1)), int(match.group(2) or 1)))
        return cls(n, tuple(letters))

    @classmethod
    def identity(cls, n):
        return cls(n)

    def _same_strands(self, other):
        if self.n != other.n:
            raise StructureError(f'braids on {self.n} and {other.n} strands')

    def __mul__(self, other):
        self._same_strands(other)
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k):
        word = self if k >= 0 else self.inverse()
        return BraidWord(self.n, word.letters * abs(k))

    def inverse(self):
        return BraidWord(self.n, tuple((k, -sign) for k, sign in reversed(self.letters)))

    def commutator(self, other):
        """[a, b] = a b a⁻¹ b⁻¹"""
        return self * other * self.inverse() * other.inverse()

    @property
    def exponent_sum(self):
        return sum(sign for _, sign in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return ' '.join(f's{k}' if sign == 1 else f's{k}^-1' for k, sign in self.letters)


def word(text, n):
    return BraidWord.parse(text, n)


@dataclass(frozen=True)
class PsInvariant:
    """
    perm[i - 1] : position d'arrivée du brin parti de i.
    crossings : ((i, j), compte signé) pour i < j, compte non nul, trié.
    """
    n: int
    perm: tuple
    crossings: tuple

    def crossing(self, i, j):
        return dict(self.crossings).get((min(i, j), max(i, j)), 0)

    @property
    def is_pure(self):
        return self.perm == tuple(range(1, self.n + 1))

    @property
    def total(self):
        return sum(count for _, count in self.crossings)

    def as_dict(self):
        return {
            'n': self.n,
            'perm': list(self.perm),
            'crossings': [[i, j, count] for (i, j), count in self.crossings],
        }


def ps_invariant(w):
    """Parcourt le mot en suivant quel brin occupe chaque position"""
    at = list(range(1, w.n + 1))
    counts = Counter()
    for k, sign in w.letters:
        a, b = at[k - 1], at[k]
        counts[min(a, b), max(a, b)] += sign
        at[k - 1], at[k] = b, a
    perm = [0] * w.n
    for position, strand in enumerate(at, start=1):
        perm[strand - 1] = position
    crossings = tuple(sorted((pair, c) for pair, c in counts.items() if c))
    return PsInvariant(w.n, tuple(perm), crossings)


def ps_equal(w1, w2):
    w1._same_strands(w2)
    return ps_invariant(w1) == ps_invariant(w2)


def pure_coordinates(w):
    """Nombres d'enlacement {(i, j): croisements / 2} d'une tresse pure"""
    invariant = ps_invariant(w)
    if not invariant.is_pure:
        raise StructureError(f'{w} is not a pure braid')
    return {pair: count // 2 for pair, count in invariant.crossings}


def canonical_braiding_word(n, m):
    """c_{n,m} : pour j = 1..n, le bloc σ_{m+j-1} σ_{m+j-2} ⋯ σ_j"""
    if n < 0 or m < 0:
        raise StructureError('block sizes must be non-negative')
    letters = []
    if n and m:
        for j in range(1, n + 1):
            letters.extend((k, 1) for k in range(m + j - 1, j - 1, -1))
    return BraidWord(max(n + m, 1), tuple(letters))


def pure_generator(n, i, j):
    """A_ij = σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j-1}⁻¹"""
    if not 1 <= i < j <= n:
        raise StructureError(f'A_{i}{j} needs 1 <= i < j <= {n}')
    down = tuple((k, 1) for k in range(j - 1, i, -1))
    up = tuple((k, -1) for k in range(i + 1, j))
    return BraidWord(n, down + ((i, 1), (i, 1)) + up)


def defining_relations(n):
    """
    Couples (nom, gauche, droite) égaux dans PS_n : tresse, commutation
    lointaine, simplification libre, et la relation σᵢσᵢ₊₁⁻¹σᵢ = σᵢ₊₁σᵢ⁻¹σᵢ₊₁.
    """
    def s(*letters):
        return BraidWord(n, letters)

    relations = []
    for i in range(1, n):
        relations.append((f'cancel_{i}', s((i, 1), (i, -1)), s()))
        relations.append((f'cancel_inverse_{i}', s((i, -1), (i, 1)), s()))
    for i in range(1, n - 1):
        relations.append((f'braid_{i}', s((i, 1), (i + 1, 1), (i, 1)), s((i + 1, 1), (i, 1), (i + 1, 1))))
        relations.append((f'pseudosymmetric_{i}', s((i, 1), (i + 1, -1), (i, 1)),
                          s((i + 1, 1), (i, -1), (i + 1, 1))))
    for i in range(1, n):
        for j in range(i + 2, n):
            relations.append((f'far_{i}_{j}', s((i, 1), (j, 1)), s((j, 1), (i, 1))))
    return relations


def pure_commutator_pairs(n):
    """(nom, w, w·[A_ij, A_kl]) pour quelques couples de générateurs purs"""
    pairs = []
    generators = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for a, b in zip(generators, generators[1:]):
        commutator = pure_generator(n, *a).commutator(pure_generator(n, *b))
        base = canonical_braiding_word(1, n - 1)
        pairs.append((f'commutator_A{a[0]}{a[1]}_A{b[0]}{b[1]}', base, base * commutator))
    return pairs
