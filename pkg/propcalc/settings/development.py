from .base import *

DEBUG = True

# Verification suites run in-process while developing
CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True

LOGGING['loggers']['cli']['level'] = 'DEBUG'
