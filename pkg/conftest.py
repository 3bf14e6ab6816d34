import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "qhopf.settings")
django.setup()
