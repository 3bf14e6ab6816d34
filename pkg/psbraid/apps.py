from django.apps import AppConfig


class PsbraidConfig(AppConfig):
    name = 'psbraid'
