"""
Django settings for the propcalc project.
"""

import os
from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('DJANGO_SECRET_KEY', default='django-insecure-propcalc-dev-key')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config('DJANGO_DEBUG', default=True, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost,127.0.0.1').split(',')

# Application definition
INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',

    # Third party apps
    'rest_framework',

    # Local apps
    'groups.apps.GroupsConfig',
    'ordmaps.apps.OrdmapsConfig',
    'braids.apps.BraidsConfig',
    'crossed.apps.CrossedConfig',
    'composites.apps.CompositesConfig',
    'ncsets.apps.NcsetsConfig',
    'semantics.apps.SemanticsConfig',
    'cli.apps.CliConfig',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'propcalc.urls'

WSGI_APPLICATION = 'propcalc.wsgi.application'

# Nothing is persisted; the database only satisfies contrib.auth.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True

# Default primary key field type
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework configuration
REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': (
        'rest_framework.permissions.AllowAny',
    ),
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_THROTTLE_CLASSES': [
        'rest_framework.throttling.AnonRateThrottle',
    ],
    'DEFAULT_THROTTLE_RATES': {
        'anon': '1000/day',
    },
}

# Redis & Celery Configuration
REDIS_URL = config('REDIS_URL', default='redis://localhost:6379/0')
CELERY_BROKER_URL = REDIS_URL
CELERY_RESULT_BACKEND = REDIS_URL
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = TIME_ZONE
CELERY_TASK_ALWAYS_EAGER = config('CELERY_TASK_ALWAYS_EAGER', default=True, cast=bool)

# Calculus settings
PROPCALC = {
    'PRIME': config('PROPCALC_PRIME', default=5, cast=int),
    'SEED': config('PROPCALC_SEED', default=0, cast=int),
    'SAMPLES': config('PROPCALC_SAMPLES', default=200, cast=int),
    'MAX_N': config('PROPCALC_MAX_N', default=3, cast=int),
    'REWRITE_BUDGET': config('PROPCALC_REWRITE_BUDGET', default=20000, cast=int),
    'MAX_TENSOR_ENTRIES': config('PROPCALC_MAX_TENSOR_ENTRIES', default=4_000_000, cast=int),
}

PROPCALC_LOG_LEVEL = config('PROPCALC_LOG_LEVEL', default='INFO')

# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file': {
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': os.path.join(BASE_DIR, 'logs', 'propcalc.log'),
            'maxBytes': 1024 * 1024 * 10,  # 10 MB
            'backupCount': 10,
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console', 'file'],
            'level': 'INFO',
        },
        **{
            app: {
                'handlers': ['console', 'file'],
                'level': PROPCALC_LOG_LEVEL,
                'propagate': False,
            }
            for app in (
                'groups', 'ordmaps', 'braids', 'crossed',
                'composites', 'ncsets', 'semantics', 'cli',
            )
        },
    },
}

# Create logs directory if it doesn't exist
os.makedirs(os.path.join(BASE_DIR, 'logs'), exist_ok=True)
