"""
Development settings for gradalg project.
"""

from .base import *  # noqa: F403, F401

DEBUG = True

GRADALG_LOG_LEVEL = 'DEBUG'
for _logger in LOGGING['loggers'].values():  # noqa: F405
    _logger['level'] = GRADALG_LOG_LEVEL
