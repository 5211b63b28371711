from django.apps import AppConfig


class RadicalConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "radical"
    verbose_name = "Jacobson radicals"
