from django.apps import AppConfig


class HopfcoreConfig(AppConfig):
    name = 'hopfcore'
