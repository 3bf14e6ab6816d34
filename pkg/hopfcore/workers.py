import logging
from concurrent.futures import ThreadPoolExecutor

from django.conf import settings

logger = logging.getLogger(__name__)


def max_threads():
    config = getattr(settings, 'QHOPF', {})
    return max(1, int(config.get('THREADS', 1)))


def run_jobs(jobs, threads=None):
    """Exécute des callables indépendants, résultats dans l'ordre de soumission"""
    jobs = list(jobs)
    threads = min(threads or max_threads(), len(jobs) or 1)
    if threads <= 1:
        return [job() for job in jobs]
    logger.debug('running %d jobs on %d threads', len(jobs), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(job) for job in jobs]
        return [future.result() for future in futures]
