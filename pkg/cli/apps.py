from django.apps import AppConfig


class CliConfig(AppConfig):
    name = 'cli'

    def ready(self):
        import cli.signals  # noqa: F401
