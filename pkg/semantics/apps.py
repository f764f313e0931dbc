from django.apps import AppConfig


class SemanticsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'semantics'
    verbose_name = 'Matrix models over Z/p'
