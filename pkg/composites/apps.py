from django.apps import AppConfig


class CompositesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'composites'
    verbose_name = 'Composite categories of pairs and spans'
