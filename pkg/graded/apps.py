from django.apps import AppConfig


class GradedConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "graded"
    verbose_name = "Graded algebras and modules"
