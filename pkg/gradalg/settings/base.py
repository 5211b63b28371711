"""
Base settings for the gradalg project.

Only the pieces of Django that the command-line tooling needs are enabled:
the app registry, management commands and logging. There is no database.
"""

import os
from pathlib import Path

from django.core.exceptions import ImproperlyConfigured
from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# Load environment variables from .env file
load_dotenv(BASE_DIR / '.env')


def _positive_int(name, default):
    raw = os.getenv(name, str(default))
    try:
        value = int(raw)
    except ValueError:
        raise ImproperlyConfigured(f"{name} must be a positive integer, got {raw!r}")
    if value <= 0:
        raise ImproperlyConfigured(f"{name} must be a positive integer, got {raw!r}")
    return value


SECRET_KEY = os.getenv('SECRET_KEY', 'gradalg-insecure-no-sessions-or-signing-in-use')

DEBUG = False

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'exactfield',      # exact scalars and dense linear algebra
    'category',        # grading categories
    'graded',          # graded algebras, modules, homs, free functor
    'radical',         # Jacobson radicals
    'idempotents',     # idempotent lifting and decompositions
    'covers',          # projective covers and minimal resolutions
    'perfectness',     # semiperfect / perfect verdicts
    'counterexample',  # the Z-graded module without projective cover
    'scenes',          # scene files and management commands
]

# No models are persisted.
DATABASES = {}

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Computation settings

# Caps internal parallelism (per-arrow certificates, search partitions).
GRADALG_THREADS = _positive_int('GRADALG_THREADS', 1)

# Base seed for every pseudorandom choice; mixed with a digest of the algebra.
GRADALG_SEED = int(os.getenv('GRADALG_SEED', str(0x5EED)), 0)

# 'iterate' runs the iterated trace-form radical in every characteristic,
# 'refuse' raises CharacteristicTooSmall when p <= dim.
GRADALG_SMALL_CHARACTERISTIC = os.getenv('GRADALG_SMALL_CHARACTERISTIC', 'iterate')
if GRADALG_SMALL_CHARACTERISTIC not in ('iterate', 'refuse'):
    raise ImproperlyConfigured(
        "GRADALG_SMALL_CHARACTERISTIC must be 'iterate' or 'refuse', "
        f"got {GRADALG_SMALL_CHARACTERISTIC!r}"
    )

# Brute-force bounds
GRADALG_ORACLE_MAX_DIM = _positive_int('GRADALG_ORACLE_MAX_DIM', 6)
GRADALG_ORACLE_MAX_FIELD = _positive_int('GRADALG_ORACLE_MAX_FIELD', 3)
GRADALG_SEARCH_MAX_D = _positive_int('GRADALG_SEARCH_MAX_D', 3)

GRADALG_LOG_LEVEL = os.getenv('GRADALG_LOG_LEVEL', 'INFO')

# Logs go to stderr so JSON on stdout stays byte-stable.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': GRADALG_LOG_LEVEL,
            'propagate': False,
        }
        for app in INSTALLED_APPS
    },
}
