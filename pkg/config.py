from pydantic_settings import BaseSettings
from typing import Literal


class Settings(BaseSettings):
    """Toolkit configuration settings"""

    # Dense oracle configuration
    dense_cap: int = 4096  # largest matrix dimension the dense module will build
    haar_max_k: int = 4

    # Numerical tolerances
    tolerance: float = 1e-10
    pinv_rtol: float = 1e-12
    condition_bound: float = 1e12

    # Rewriting configuration
    normal_form_node_cap: int = 20000
    normal_form_max_extensions: int = 4

    # Execution configuration
    workers: int = 1
    seed: int = 0
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"

    # Test configuration
    slow_tests: bool = False

    class Config:
        env_file = ".env"
        env_prefix = "COMMUTANT_"
        case_sensitive = False


settings = Settings()
