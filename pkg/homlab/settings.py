from pathlib import Path
import os

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get("HOMLAB_SECRET_KEY", "dev-secret-key-homlab-change-in-prod")
DEBUG = os.environ.get("HOMLAB_DEBUG", "1") == "1"
ALLOWED_HOSTS = []

INSTALLED_APPS = [
    "homspace",
]

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {},
    },
]

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": str(BASE_DIR / "db.sqlite3"),
    }
}

LANGUAGE_CODE = "en"
USE_I18N = False
TIME_ZONE = "UTC"
USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# Sweep configuration
HOMSPACE_MAX_RANK = int(os.environ.get("HOMSPACE_MAX_RANK", "12"))
HOMSPACE_SAMPLE_LIMIT = int(os.environ.get("HOMSPACE_SAMPLE_LIMIT", "4096"))
HOMSPACE_SAMPLE_SEED = int(os.environ.get("HOMSPACE_SAMPLE_SEED", "0"))

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain"},
    },
    "loggers": {
        "homspace": {
            "handlers": ["console"],
            "level": os.environ.get("HOMSPACE_LOG_LEVEL", "WARNING"),
            "propagate": False,
        },
    },
}
