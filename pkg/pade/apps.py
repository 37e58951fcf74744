from django.apps import AppConfig


class PadeConfig(AppConfig):
    name = 'pade'
    verbose_name = 'Exact Padé approximants'
