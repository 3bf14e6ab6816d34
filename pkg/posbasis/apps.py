from django.apps import AppConfig


class PosbasisConfig(AppConfig):
    name = 'posbasis'
