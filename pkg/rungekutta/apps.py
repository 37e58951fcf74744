from django.apps import AppConfig


class RungekuttaConfig(AppConfig):
    name = 'rungekutta'
    verbose_name = 'Explicit Runge-Kutta integration'
