"""
URL configuration for propcalc.
"""
from django.urls import path, include

urlpatterns = [
    # API endpoints
    path('api/v1/', include('cli.urls')),
]
