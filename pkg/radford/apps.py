from django.apps import AppConfig


class RadfordConfig(AppConfig):
    name = 'radford'
