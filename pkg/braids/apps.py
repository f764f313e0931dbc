from django.apps import AppConfig


class BraidsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'braids'
    verbose_name = 'Braid and ribbon braid words'
