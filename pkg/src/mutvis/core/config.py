"""
Конфигурация приложения MutVis
"""

from typing import Optional
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Настройки приложения"""

    # Основные настройки
    project_name: str = Field(default="MutVis", description="Название проекта")
    version: str = Field(default="1.0.0", description="Версия приложения")
    debug: bool = Field(default=False, description="Режим отладки: конструкции проверяют себя чекером")
    log_level: str = Field(default="WARNING", description="Уровень логирования")
    log_json: bool = Field(default=False, description="JSON-логи structlog вместо консольных")

    # Параллелизм
    threads: int = Field(default=1, ge=1, description="Максимальное число потоков солвера (MUTVIS_THREADS)")

    # Ограничители ресурсов
    solver_max_vertices: int = Field(default=40, ge=1, description="Максимум вершин для точного солвера")
    brute_force_max_vertices: int = Field(default=16, ge=1, description="Максимум вершин для полного перебора")
    hypercube_max_dimension: int = Field(default=24, ge=1, description="Максимальная размерность Q_d")
    ccc_max_dimension: int = Field(default=16, ge=3, description="Максимальная размерность CCC_d")
    butterfly_max_dimension: int = Field(default=16, ge=1, description="Максимальная размерность BF(d)")

    # Бюджеты солвера по умолчанию
    default_node_budget: Optional[int] = Field(default=None, gt=0, description="Лимит узлов поиска")
    default_time_budget: Optional[float] = Field(default=None, gt=0, description="Лимит времени поиска, секунды")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="MUTVIS_",
        case_sensitive=False,
        extra="ignore",  # Игнорируем дополнительные поля из .env
    )


# Создаем экземпляр настроек
settings = Settings()


def get_settings() -> Settings:
    """Получить настройки приложения"""
    return settings


class Constants:
    """Константы приложения"""

    # Команды CLI
    COMMAND_GEN = "gen"
    COMMAND_CONSTRUCT = "construct"
    COMMAND_VERIFY = "verify"
    COMMAND_SOLVE = "solve"
    COMMAND_BOUNDS = "bounds"
    COMMAND_BYPASS = "bypass"

    # Семейства графов
    KIND_HYPERCUBE = "hypercube"
    KIND_CCC = "ccc"
    KIND_BUTTERFLY = "butterfly"
    KIND_GENERIC = "generic"

    # Типы множеств
    SET_KIND_MUTUAL = "mutual"
    SET_KIND_TOTAL = "total"

    # Конструкции
    CONSTRUCTION_HC_MIDDLE_LAYERS = "hc-middle-layers"
    CONSTRUCTION_HC_STORED = "hc-stored"
    CONSTRUCTION_CCC_LEVEL0 = "ccc-level0"
    CONSTRUCTION_CCC3_STORED = "ccc3-stored"
    CONSTRUCTION_BF_MV = "bf-mv"
    CONSTRUCTION_BF_TOTAL = "bf-total"

    # Формат сертификата
    CERTIFICATE_FORMAT = "mutvis-cert/1"
    STORED_SOURCE = "stored-from-paper"

    # Коды выхода CLI
    EXIT_OK = 0
    EXIT_INVALID = 1
    EXIT_ERROR = 2


# Создаем экземпляр констант
constants = Constants()
