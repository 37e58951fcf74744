from django.apps import AppConfig


class FpsConfig(AppConfig):
    name = 'fps'
    verbose_name = 'Truncated formal power series'
