from django.apps import AppConfig


class OrdmapsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'ordmaps'
    verbose_name = 'Finite ordinals and monotone maps'
