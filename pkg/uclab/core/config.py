"""
Application configuration using Pydantic Settings.
Loads size guards and output defaults from environment variables and .env file.
"""

from pydantic_settings import BaseSettings
from functools import lru_cache


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Constructor guards
    POWER_SET_MAX: int = 20
    NAIVE_MAX: int = 20

    # Enumeration guards
    ENUM_UNION_CLOSED_MAX: int = 5
    ENUM_NORMALIZED_MAX: int = 6
    NAIVE_ENUM_MAX: int = 4
    DESCPOWER_MAX: int = 5

    # Sampled oracle runs
    SAMPLE_SIZE: int = 200
    RANDOM_SEED: int = 20240601

    # Batch checks
    WORKERS: int = 1

    # Output
    LOG_LEVEL: str = "WARNING"
    OUTPUT_FORMAT: str = "text"

    class Config:
        env_file = ".env"
        env_prefix = "UCLAB_"
        case_sensitive = True


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
