from django.apps import AppConfig


class PerfectnessConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "perfectness"
    verbose_name = "Perfectness verdicts"
