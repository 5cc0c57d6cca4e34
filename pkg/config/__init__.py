from config.env_loader import load_environment_variables, get_env_var, get_int_env_var
from config.engine_config import EngineConfig, AppConfig

__all__ = [
    'load_environment_variables',
    'get_env_var',
    'get_int_env_var',
    'EngineConfig',
    'AppConfig',
]
