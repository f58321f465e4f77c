from .base import *  # noqa
from .base import env

# С этими настройками тесты выполняются быстрее
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
SECRET_KEY = env(
    "DJANGO_SECRET_KEY",
    default="7pgzYudekwHkuslFVx56lWXZiz8edYo34dWJqkvjccZ28yPy0MgtpgCfIoroIHDJ",
)
# https://docs.djangoproject.com/en/dev/ref/settings/#test-runner
TEST_RUNNER = "django.test.runner.DiscoverRunner"

DATABASES = {"default": env.db("DATABASE_URL", default="sqlite://:memory:")}

# PASSWORDS
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#password-hashers
PASSWORD_HASHERS = ["django.contrib.auth.hashers.MD5PasswordHasher"]

# Celery
# ------------------------------------------------------------------------------
# Задачи выполняются синхронно в процессе теста
CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_BROKER_URL = "memory://"
CELERY_RESULT_BACKEND = "cache+memory://"

# EXPLORATION
# ------------------------------------------------------------------------------
EXPLORATION_SWEEP_WORKERS = 1
EXPLORATION_TASK_WORKERS = 1

# LOGGING
# ------------------------------------------------------------------------------
# Записи проекта доходят до корневого логгера, где их перехватывает caplog
LOGGING["loggers"]["knowledge_walks"]["propagate"] = True  # noqa: F405
