"""
Rapport d'une commande : l'écho de la commande, puis une entrée par
vérification. Chaque entrée porte l'énoncé qu'elle vérifie (`paper_anchor`) ;
un témoin n'apparaît que sur un verdict en échec.
"""
import time
from dataclasses import dataclass

from django.conf import settings

ANCHORS = {
    'hopf': 'structure constants define a Hopf algebra',
    'quasitriangular': 'R satisfies the quasitriangular axioms',
    'radford_triangular': 'R_{s,beta} on H_nu is triangular exactly when s = nu',
    'radford_pseudotriangular': 'every R_{s,beta} on H_nu is pseudotriangular',
    'positive_pair': 'admissible pairs (xi, eta) give quasitriangular structures on H(G; G+, G-)',
    'positive_pseudotriangular': 'R(xi, eta) is pseudotriangular iff the group conditions on (xi, eta) hold',
    'double_pseudotriangular': 'the canonical R of the double of k[G]* is pseudotriangular iff G is abelian',
    'yetter_drinfeld': 'Yetter-Drinfeld and LR(H) compatibility axioms',
    'pseudosymmetry': 'c_{Y,Z} c^-1_{Z,X} c_{X,Y} = c_{X,Y} c^-1_{Z,X} c_{Y,Z} on X⊗Y⊗Z',
    'ps_word_problem': 'equality in B_n/[P_n,P_n] is decided by permutation and pairwise crossings',
    'yang_baxter': 'braid relation and both pseudosymmetric relations of sigma on V⊗V⊗V',
}


def timings_enabled():
    return bool(getattr(settings, 'QHOPF', {}).get('REPORT_TIMINGS', False))


def verdict_text(passed):
    return 'pass' if passed else 'fail'


@dataclass
class Entry:
    name: str
    anchor: str
    passed: bool
    expected: bool = None
    witness: tuple = None
    runtime_ms: float = None

    @property
    def matches(self):
        return self.expected is None or self.expected == self.passed

    def as_dict(self, timings=False):
        data = {'name': self.name, 'paper_anchor': ANCHORS[self.anchor], 'verdict': verdict_text(self.passed)}
        if self.expected is not None:
            data['expected'] = verdict_text(self.expected)
        if not self.passed:
            data['witness'] = [str(w) for w in (self.witness or ('?',))]
        if timings and self.runtime_ms is not None:
            data['runtime_ms'] = round(self.runtime_ms, 3)
        return data


class Report:
    def __init__(self, command):
        self.command = command
        self.entries = []
        self.data = {}

    def add(self, name, anchor, passed, witness=None, expected=True, runtime_ms=None):
        passed = bool(passed)
        entry = Entry(name, anchor, passed, expected, None if passed else tuple(witness or ('?',)), runtime_ms)
        self.entries.append(entry)
        return entry

    def extend(self, check_report, anchor, prefix='', expected=True, runtime_ms=None):
        """
        Reprend les verdicts d'un CheckReport ; `expected` est un booléen,
        None, ou un dict {nom: attendu} (True pour les noms absents).
        """
        for verdict in check_report:
            wanted = expected.get(verdict.name, True) if isinstance(expected, dict) else expected
            where = anchor.get(verdict.name, anchor['*']) if isinstance(anchor, dict) else anchor
            self.add(prefix + verdict.name, where, verdict.passed, verdict.witness, wanted, runtime_ms)
        return self

    @staticmethod
    def timed(fn, *args, **kwargs):
        """(résultat, durée en ms)"""
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        return result, (time.perf_counter() - start) * 1000

    @property
    def ok(self):
        return all(entry.matches for entry in self.entries)

    def mismatches(self):
        return [entry for entry in self.entries if not entry.matches]

    def as_dict(self):
        timings = timings_enabled()
        return {
            'command': self.command,
            **self.data,
            'entries': [entry.as_dict(timings) for entry in self.entries],
            'ok': self.ok,
        }

    def summary(self):
        lines = []
        for entry in self.entries:
            line = f'{entry.name}: {verdict_text(entry.passed)}'
            if not entry.matches:
                line += f' (expected {verdict_text(entry.expected)})'
            if entry.runtime_ms is not None:
                line += f' [{entry.runtime_ms:.1f} ms]'
            lines.append(line)
        mismatches = len(self.mismatches())
        lines.append(f'{len(self.entries)} checks, {mismatches} unexpected')
        return '\n'.join(lines)
