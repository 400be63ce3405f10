from django.apps import AppConfig


class HandlebodyConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "handlebody"
    verbose_name = "Free actions on handlebodies"
