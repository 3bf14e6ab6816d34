"""
Base des commandes de vérification : JSON sur stdout, résumé lisible sur
stderr, erreurs traduites en codes de sortie.

    0  tous les verdicts conformes
    1  un verdict diffère de l'attendu
    2  usage (mot mal formé, paramètre hors domaine)
    3  fichier illisible, schéma invalide, axiome violé au chargement
    4  deux critères indépendants en désaccord
"""
import logging

from django.core.management.base import BaseCommand, CommandError

from hopfcore.exceptions import (
    AxiomFailure, CrossCheckError, GroupError, NotInvertible, SchemaError, StructureError,
)

from .loaders import dumps
from .reports import Report

logger = logging.getLogger(__name__)

EXPECTATION_MISMATCH = 1
USAGE = 2
PARSE = 3
CROSS_CHECK = 4

DJANGO_OPTIONS = {'verbosity', 'settings', 'pythonpath', 'traceback', 'no_color', 'force_color', 'skip_checks', 'stdout', 'stderr'}


class ReportCommand(BaseCommand):
    requires_system_checks = []

    def run(self, report, **options):
        """Remplit le rapport ; renvoyer un document l'écrit à la place du rapport"""
        raise NotImplementedError

    def command_echo(self, options):
        name = self.__module__.rsplit('.', 1)[-1]
        arguments = {key: value for key, value in sorted(options.items())
                     if key not in DJANGO_OPTIONS and key != 'action' and value is not None}
        return {'name': name, 'action': options.get('action'), 'arguments': arguments}

    def handle(self, *args, **options):
        report = Report(self.command_echo(options))
        try:
            document = self.run(report, **options)
        except CrossCheckError as exc:
            raise CommandError(f'cross-check failed: {exc}', returncode=CROSS_CHECK) from exc
        except (SchemaError, AxiomFailure, GroupError) as exc:
            raise CommandError(str(exc), returncode=PARSE) from exc
        except (StructureError, NotInvertible) as exc:
            raise CommandError(str(exc), returncode=USAGE) from exc
        if document is not None:
            self.stdout.write(dumps(document))
            return
        self.stdout.write(dumps(report.as_dict()))
        self.stderr.write(report.summary())
        if not report.ok:
            names = ', '.join(entry.name for entry in report.mismatches())
            raise CommandError(f'unexpected verdicts: {names}', returncode=EXPECTATION_MISMATCH)
