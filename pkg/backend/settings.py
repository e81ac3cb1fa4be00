"""
Django settings for the Leavitt path algebra engine.

Generated originally by 'django-admin startproject'; trimmed to what the engine,
its management command and the JSON API need. No database is configured.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Cargar archivo .env
load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent

# Parámetros del motor (ver .env.example)
LEAVITT_HS_CAP = int(os.getenv("LEAVITT_HS_CAP", 16))
LEAVITT_FIELD = os.getenv("LEAVITT_FIELD", "rationals")
LEAVITT_SEED = int(os.getenv("LEAVITT_SEED", 1729))
LEAVITT_SPAN_DEPTH = int(os.getenv("LEAVITT_SPAN_DEPTH", 2))
LEAVITT_POINT_SIZE = int(os.getenv("LEAVITT_POINT_SIZE", 6))
LEAVITT_LOG_LEVEL = os.getenv("LEAVITT_LOG_LEVEL", "WARNING")

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv(
    "DJANGO_SECRET_KEY",
    "django-insecure-leavitt-engine-development-key-change-me",
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv("DJANGO_DEBUG", "False").lower() in ("1", "true", "yes")

ALLOWED_HOSTS = [h for h in os.getenv("DJANGO_ALLOWED_HOSTS", "localhost,127.0.0.1").split(",") if h]


# Application definition

INSTALLED_APPS = [
    'algebra',
    'api',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'backend.urls'

TEMPLATES = []

WSGI_APPLICATION = 'backend.wsgi.application'


# Database
# El motor es puramente simbólico: no hay base de datos.

DATABASES = {}


# Logging
# https://docs.djangoproject.com/en/5.2/topics/logging/

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'algebra': {
            'handlers': ['console'],
            'level': LEAVITT_LOG_LEVEL,
            'propagate': False,
        },
        'api': {
            'handlers': ['console'],
            'level': LEAVITT_LOG_LEVEL,
            'propagate': False,
        },
    },
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'
