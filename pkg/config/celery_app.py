import os

from celery import Celery

# Установка модуля настроек Django по умолчанию для Celery.
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")

app = Celery("knowledge_walks")

# namespace='CELERY' означает, что все ключи конфигурации Celery должны иметь префикс `CELERY_`.
app.config_from_object("django.conf:settings", namespace="CELERY")

# Задачи серий лежат в knowledge_walks.experiments.tasks
app.autodiscover_tasks()
