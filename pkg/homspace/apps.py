from django.apps import AppConfig


class HomspaceConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "homspace"
    verbose_name = "Homogeneous space bounds"
