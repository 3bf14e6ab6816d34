import logging

from django.dispatch import receiver

from hopfcore.reports import CheckReport
from hopfcore.signals import check_completed

logger = logging.getLogger(__name__)


@receiver(check_completed, sender=CheckReport)
def trace_verdict(sender, subject, verdict, **kwargs):
    """
    Trace chaque vérification nommée : DEBUG si elle passe, INFO avec le
    témoin sinon
    """
    if verdict.passed:
        logger.debug('%s: %s passed', subject, verdict.name)
    else:
        logger.info('%s: %s failed, witness %s', subject, verdict.name, ', '.join(map(str, verdict.witness)))
