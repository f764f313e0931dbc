from django.urls import path

from cli import views

urlpatterns = [
    path('terms/normalize/', views.NormalizeView.as_view(), name='terms-normalize'),
    path('terms/equal/', views.EqualityView.as_view(), name='terms-equal'),
    path('suites/', views.SuiteView.as_view(), name='suites'),
]
