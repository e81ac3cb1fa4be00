from django.apps import AppConfig


class AlgebraConfig(AppConfig):
    name = 'algebra'
    verbose_name = 'Leavitt path algebra engine'
