from django.conf import settings

DEFAULTS = {
    "ORDER_CAP": 64,
    "STATE_CAP": 2**24,
    "VALIDATE_GROUPS": True,
    "DEFAULT_FORMAT": "table",
}


def get_setting(name):
    """Read one key of ``settings.HANDLEBODY``, falling back to DEFAULTS."""
    configured = getattr(settings, "HANDLEBODY", {})
    return configured.get(name, DEFAULTS[name])


def resolve_cap(name, override=None):
    return get_setting(name) if override is None else int(override)
