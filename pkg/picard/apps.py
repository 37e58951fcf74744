from django.apps import AppConfig


class PicardConfig(AppConfig):
    name = 'picard'
    verbose_name = 'Numerical Picard iteration'
