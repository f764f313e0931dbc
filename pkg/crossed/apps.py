from django.apps import AppConfig


class CrossedConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'crossed'
    verbose_name = 'Crossed families and their distributive laws'
