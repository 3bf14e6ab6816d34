from django.apps import AppConfig


class QuasitriConfig(AppConfig):
    name = 'quasitri'
