"""
Configuration settings for isoclass
"""

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings

    Only diagnostics, parallelism and range caps live here. Results never
    depend on these values; a cap that is too low raises instead.
    """

    # Application
    APP_NAME: str = "isoclass"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    # Performance
    SLOW_COMMAND_THRESHOLD: float = 5.0  # seconds
    SWEEP_WORKERS: int = 1

    # Supported ranges
    HMINUS_MAX_P: int = 200
    MAX_ENUMERATION_NORM: int = 100_000

    # Caches
    ENUMERATION_CACHE_SIZE: int = 32  # lattices kept by the vector oracle

    class Config:
        env_file = ".env"
        env_prefix = "ISOCLASS_"
        case_sensitive = True


# Global settings instance
settings = Settings()
