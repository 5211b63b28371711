from django.apps import AppConfig


class ExactfieldConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "exactfield"
    verbose_name = "Exact fields and linear algebra"
