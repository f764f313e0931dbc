"""
WSGI config for propcalc project.
"""

import os
from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'propcalc.settings')

application = get_wsgi_application()
