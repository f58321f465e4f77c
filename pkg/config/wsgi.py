"""
Конфигурация WSGI для проекта Knowledge Walks.

Модуль содержит WSGI приложение для сервера разработки Django и production деплойментов.
Должен предоставлять переменную уровня модуля ``application``. Команда ``runserver``
находит приложение через настройку ``WSGI_APPLICATION``.
"""

import os
import sys
from pathlib import Path

from django.core.wsgi import get_wsgi_application

BASE_DIR = Path(__file__).resolve(strict=True).parent.parent
sys.path.append(str(BASE_DIR / "knowledge_walks"))
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.production")

application = get_wsgi_application()
