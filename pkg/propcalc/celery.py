"""
Celery app for running verification suites off the request path.

The only task module is cli.tasks; with CELERY_TASK_ALWAYS_EAGER (the
default) suites run inline and no broker is contacted.
"""
import os

from celery import Celery

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'propcalc.settings')

app = Celery('propcalc')

app.config_from_object('django.conf:settings', namespace='CELERY')

# cli.tasks holds run_suite
app.autodiscover_tasks(['cli'])
