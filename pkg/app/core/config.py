from typing import Any, Literal

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    # Output
    OUTPUT_FORMAT: Literal["text", "json"] = "text"
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"

    # Benchmark
    BENCH_REPS: int = Field(3, ge=1)

    # Verify grid
    VERIFY_K_MAX: int = Field(4, ge=1)
    VERIFY_A_MAX: int = Field(5, ge=1)
    VERIFY_N_MAX: int = Field(20, ge=1)
    VERIFY_M_MAX: int = Field(20, ge=1)
    VERIFY_WORKERS: int = Field(1, ge=1)

    model_config = SettingsConfigDict(case_sensitive=True)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # The CLI reads no environment variables and no files.
        return (init_settings,)

    def with_overrides(self, **overrides: Any) -> "Settings":
        """Validated copy with the non-None overrides applied."""
        values = self.model_dump()
        values.update({key: v for key, v in overrides.items() if v is not None})
        return Settings(**values)


settings = Settings()
