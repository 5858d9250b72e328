from pydantic_settings import BaseSettings
from functools import lru_cache


class Settings(BaseSettings):
    # ============================================
    # Logging
    # ============================================
    log_level: str = "INFO"
    log_to_file: bool = False
    logs_dir: str = "logs"

    # ============================================
    # Exhaustive Regimes
    # ============================================
    anti_rc_max_m: int = 8
    exact_search_max_m: int = 6
    greedy_search_max_m: int = 10
    brute_count_max_n: int = 12
    ssa_count_max_n: int = 10

    # ============================================
    # Characteristic Root (bisection)
    # ============================================
    root_tolerance: float = 1e-9
    root_max_iterations: int = 200

    # ============================================
    # CLI Output
    # ============================================
    table_max_n: int = 512
    default_format: str = "text"

    class Config:
        env_file = ".env"
        env_prefix = "SSA_"
        case_sensitive = False
        extra = "ignore"


@lru_cache()
def get_settings() -> Settings:
    return Settings()
