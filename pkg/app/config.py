from typing import Optional

from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class CoefficientSettings(BaseModel):
    """Настройки вычисления коэффициентов Стирлинга"""

    default_k_max: int = Field(
        default=12, description="Максимальный k для таблицы и проверки по умолчанию"
    )
    parallel: bool = Field(
        default=True, description="Вычислять шесть формул для одного k параллельно"
    )
    max_workers: int = Field(default=6, description="Размер пула потоков")
    decimal_digits: int = Field(
        default=20, description="Число значащих цифр в десятичном представлении"
    )

    @field_validator("default_k_max")
    @classmethod
    def validate_k_max(cls, v):
        if v < 0:
            raise ValueError("default_k_max должен быть неотрицательным")
        return v

    @field_validator("max_workers", "decimal_digits")
    @classmethod
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError("Значение должно быть положительным")
        return v


class SeriesSettings(BaseModel):
    """Настройки вычисления усеченного ряда Стирлинга"""

    default_precision: int = Field(
        default=30, description="Рабочая точность в десятичных цифрах"
    )
    guard_digits: int = Field(
        default=10, description="Защитные цифры для констант pi и e"
    )
    default_terms: int = Field(default=5, description="Число членов ряда по умолчанию")
    error_digits: int = Field(
        default=6, description="Значащие цифры при выводе относительной ошибки"
    )

    @field_validator("default_precision")
    @classmethod
    def validate_precision(cls, v):
        if v < 10:
            raise ValueError("Точность должна быть не меньше 10 цифр")
        return v

    @field_validator("guard_digits")
    @classmethod
    def validate_guard_digits(cls, v):
        if v < 0:
            raise ValueError("guard_digits должен быть неотрицательным")
        return v


class BenchSettings(BaseModel):
    """Настройки бенчмарка"""

    default_reps: int = Field(default=3, description="Число повторений замера")


class LoggingSettings(BaseModel):
    """Настройки логирования"""

    level: str = Field(default="WARNING", description="Уровень логирования")
    format: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        description="Формат лог-сообщений",
    )
    file_path: Optional[str] = Field(default=None, description="Путь к файлу логов")
    max_file_size: int = Field(
        default=10485760, description="Максимальный размер файла логов (10MB)"
    )
    backup_count: int = Field(default=5, description="Количество архивных файлов логов")

    @field_validator("level")
    @classmethod
    def validate_log_level(cls, v):
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(
                f"Уровень логирования должен быть одним из: {valid_levels}"
            )
        return v.upper()


class Settings(BaseSettings):
    """Основные настройки приложения"""

    app_name: str = Field(default="stirling", description="Название приложения")
    version: str = Field(default="0.1.0", description="Версия приложения")
    environment: str = Field(
        default="development", description="Окружение (development/production)"
    )

    coefficients: CoefficientSettings = Field(default_factory=CoefficientSettings)
    series: SeriesSettings = Field(default_factory=SeriesSettings)
    bench: BenchSettings = Field(default_factory=BenchSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v):
        valid_environments = ["development", "production", "testing"]
        if v not in valid_environments:
            raise ValueError(f"Environment должен быть одним из: {valid_environments}")
        return v

    model_config = SettingsConfigDict(
        env_prefix="STIRLING_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",  # STIRLING_SERIES__GUARD_DIGITS
        case_sensitive=False,
        extra="ignore",
    )


settings = Settings()
