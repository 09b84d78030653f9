"""
@file: errors.py
@description: Иерархия исключений MutVis
@created: 2026-10-18
"""


class MutvisError(Exception):
    """Базовое исключение библиотеки"""


class GraphValidationError(MutvisError, ValueError):
    """Некорректный граф: асимметрия, петли, кратные ребра"""


class DisconnectedGraphError(GraphValidationError):
    """Граф несвязен"""


class InvalidDimensionError(MutvisError, ValueError):
    """Размерность ниже минимальной для семейства"""


class ResourceGuardError(MutvisError):
    """Превышен ограничитель ресурсов"""


class LabelParseError(MutvisError, ValueError):
    """Метка вершины не разбирается"""


class UnsupportedError(MutvisError):
    """Операция не поддерживается для данных параметров"""


class VerificationError(MutvisError):
    """Самопроверка конструкции не прошла"""


class CertificateFormatError(MutvisError):
    """Сертификат не соответствует схеме"""


class InvalidArgumentError(MutvisError, ValueError):
    """Недопустимый аргумент операции (пустое множество, индекс вне графа)"""
