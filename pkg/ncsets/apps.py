from django.apps import AppConfig


class NcsetsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'ncsets'
    verbose_name = 'Labelled non-commutative sets and pullback spans'
