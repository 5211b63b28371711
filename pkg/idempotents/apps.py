from django.apps import AppConfig


class IdempotentsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "idempotents"
    verbose_name = "Idempotents and decompositions"
