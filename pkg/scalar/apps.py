from django.apps import AppConfig


class ScalarConfig(AppConfig):
    name = 'scalar'
