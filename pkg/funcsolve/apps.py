from django.apps import AppConfig


class FuncsolveConfig(AppConfig):
    name = 'funcsolve'
    verbose_name = 'Formal solvers for functional differential equations'
