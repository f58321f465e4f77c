"""
Исключения предметной области.

Все ошибки значений наследуют ``ValueError``, поэтому вызывающий код без знания
иерархии может ловить их как обычные ошибки аргументов. Команды управления
переводят их в коды возврата (см. ``knowledge_walks.utils.commands``).
"""


class KnowledgeWalksError(Exception):
    """Базовое исключение проекта."""


class GraphFormatError(KnowledgeWalksError, ValueError):
    """Некорректная строка в файле списка рёбер."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class NodeIndexError(KnowledgeWalksError, ValueError):
    """Конец ребра вне диапазона [0, n)."""

    def __init__(self, pair: tuple[int, int], n: int):
        self.pair = pair
        self.n = n
        super().__init__(f"edge {pair} references a node outside [0, {n})")


class GeneratorSpecError(KnowledgeWalksError, ValueError):
    """Параметры генератора сети нарушают ограничения модели."""


class InfeasibleSpecError(KnowledgeWalksError, ValueError):
    """Параметры допустимы формально, но не реализуемы (например, beta > 1)."""


class DynamicsParameterError(KnowledgeWalksError, ValueError):
    """Параметры динамики или предусловие операции нарушены."""


class SweepError(KnowledgeWalksError):
    """Ошибка выполнения серии экспериментов."""

    def __init__(self, message: str, point_key: str | None = None):
        self.point_key = point_key
        if point_key is not None:
            message = f"[{point_key}] {message}"
        super().__init__(message)


class ResultFileError(KnowledgeWalksError, ValueError):
    """Файл результатов серии не является JSON-документом результата."""
