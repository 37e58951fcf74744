"""
Django settings for the fpslab project.
"""

from pathlib import Path
import os

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('FPSLAB_SECRET_KEY', 'fpslab-insecure-local-only')

DEBUG = os.getenv("DEBUG") == "True"

# Application definition
INSTALLED_APPS = [
    # Local apps
    'fps',
    'funcsolve',
    'picard',
    'rungekutta',
    'pade',
    'cli',
]

# Everything is computed in memory; nothing is persisted.
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# Logging
LOG_LEVEL = os.getenv('FPSLAB_LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False}
        for app in ['fps', 'funcsolve', 'picard', 'rungekutta', 'pade', 'cli']
    },
}

# Formal solver defaults
SOLVE_DEFAULT_ORDER = int(os.getenv('FPSLAB_SOLVE_ORDER', '13'))
SEQUENCE_DEFAULT_ORDER = int(os.getenv('FPSLAB_SEQUENCE_ORDER', '100'))

# Numerical Picard iteration on [0, PICARD_XMAX]
PICARD_ITERATIONS = int(os.getenv('FPSLAB_PICARD_ITERATIONS', '8'))
PICARD_XMAX = float(os.getenv('FPSLAB_PICARD_XMAX', '1.0'))
PICARD_GRID = int(os.getenv('FPSLAB_PICARD_GRID', '1000'))

# Runge-Kutta benchmark
RK_STEP = os.getenv('FPSLAB_RK_STEP', '1/10')
RK_STEPS = int(os.getenv('FPSLAB_RK_STEPS', '10'))
RK_METHOD = os.getenv('FPSLAB_RK_METHOD', 'rk4')

# Pade degrees
PADE_NUM = int(os.getenv('FPSLAB_PADE_NUM', '3'))
PADE_DEN = int(os.getenv('FPSLAB_PADE_DEN', '3'))

# Reference data consumed by `manage.py verify`
GOLDEN_DATA_DIR = Path(os.getenv('FPSLAB_GOLDEN_DIR', BASE_DIR / 'cli' / 'golden'))
