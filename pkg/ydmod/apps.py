from django.apps import AppConfig


class YdmodConfig(AppConfig):
    name = 'ydmod'
