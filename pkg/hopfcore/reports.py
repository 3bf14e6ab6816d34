"""
Rapports de vérification : une liste ordonnée de verdicts nommés. Un verdict
en échec porte un témoin (étiquettes de base), un verdict réussi n'en porte
jamais.
"""
from dataclasses import dataclass

from .exceptions import AxiomFailure
from .signals import check_completed


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    witness: tuple = None
    detail: str = ''

    def as_dict(self):
        data = {'name': self.name, 'passed': self.passed}
        if self.witness is not None:
            data['witness'] = list(self.witness)
        if self.detail:
            data['detail'] = self.detail
        return data


class CheckReport:
    def __init__(self, subject=''):
        self.subject = subject
        self.verdicts = []

    def record(self, name, passed, witness=None, detail=''):
        passed = bool(passed)
        verdict = Verdict(name, passed, None if passed else tuple(witness or ('?',)), detail)
        self.verdicts.append(verdict)
        check_completed.send(sender=CheckReport, subject=self.subject, verdict=verdict)
        return verdict

    def extend(self, other, prefix=''):
        for verdict in other.verdicts:
            self.verdicts.append(Verdict(prefix + verdict.name, verdict.passed,
                                         verdict.witness, verdict.detail))
        return self

    @property
    def passed(self):
        return all(v.passed for v in self.verdicts)

    def failures(self):
        return [v for v in self.verdicts if not v.passed]

    def first_failure(self):
        return next(iter(self.failures()), None)

    def names(self):
        return [v.name for v in self.verdicts]

    def __getitem__(self, name):
        for verdict in self.verdicts:
            if verdict.name == name:
                return verdict
        raise KeyError(name)

    def __contains__(self, name):
        return any(v.name == name for v in self.verdicts)

    def __iter__(self):
        return iter(self.verdicts)

    def __len__(self):
        return len(self.verdicts)

    def as_dict(self):
        return {'subject': self.subject, 'passed': self.passed,
                'checks': [v.as_dict() for v in self.verdicts]}

    def raise_for_failure(self, message=None):
        failure = self.first_failure()
        if failure is not None:
            text = message or f'{self.subject}: {failure.name} fails'
            raise AxiomFailure(f'{text} (witness {", ".join(map(str, failure.witness))})', report=self)
        return self

    def __repr__(self):
        return f'<CheckReport {self.subject} {len(self.verdicts)} checks passed={self.passed}>'
