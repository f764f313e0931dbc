import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'propcalc.settings')
django.setup()

# Mirror `manage.py test`, which prepares the test environment (e.g. the
# 'testserver' host) before running SimpleTestCase suites.
from django.test.utils import setup_test_environment  # noqa: E402

setup_test_environment()
