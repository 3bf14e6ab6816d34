"""
Django settings for the qhopf project.

The project carries no web surface: Django provides the settings layer, the
management-command CLI, the signal dispatcher and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def env_flag(name, default=False):
    value = os.environ.get(name)
    if value is None:
        return default
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


def env_int(name, default):
    try:
        return int(os.environ.get(name, default))
    except (TypeError, ValueError):
        return default


# Aucun secret n'est manipulé, la clé ne sert qu'à satisfaire Django
SECRET_KEY = os.environ.get('QHOPF_SECRET_KEY', 'qhopf-local-only')

DEBUG = env_flag('QHOPF_DEBUG')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'scalar',
    'hopfcore',
    'quasitri',
    'radford',
    'posbasis',
    'ydmod',
    'psbraid',
    'cli',
]

# Pas de base de données : les structures sont calculées en mémoire
DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Configuration du calcul
QHOPF = {
    # Nombre maximal de threads pour les balayages
    'THREADS': max(1, env_int('QHOPF_THREADS', 1)),
    # Test de représentation nu = 3 (1728 x 1728), désactivé par défaut
    'SLOW_TESTS': env_flag('QHOPF_SLOW_TESTS'),
    # runtime_ms dans le corps JSON des rapports
    'REPORT_TIMINGS': env_flag('QHOPF_REPORT_TIMINGS'),
}


# Journalisation
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': os.environ.get('QHOPF_LOG_LEVEL', 'WARNING'),
    },
}
