import os
import logging
from pathlib import Path
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# 설정되지 않은 환경변수의 기본값
DEFAULTS = {
    "TRANSVERSAL_MAX_ORDER": "24",
    "TRANSVERSAL_ORACLE_MAX_ORDER": "8",
    "TRANSVERSAL_WORKERS": "1",
    "TRANSVERSAL_PROP2_SAMPLES": "2000",
    "TRANSVERSAL_PROP2_SEED": "20160",
    "TRANSVERSAL_RANDOM_SEED": "7",
    "SECRET_KEY": "dev-flask-secret-key-change-in-production",
}

_loaded = False


def load_environment_variables():
    """환경변수를 안전하게 로드"""
    global _loaded
    if _loaded:
        return

    # .env 파일 경로 찾기
    env_paths = [
        Path.cwd() / ".env",
        Path(__file__).parent.parent / ".env",
    ]

    for env_path in env_paths:
        if env_path.exists():
            load_dotenv(env_path)
            logger.info(f"환경변수 파일 로드됨: {env_path}")
            break
    else:
        logger.debug(".env 파일을 찾을 수 없습니다. 시스템 환경변수를 사용합니다.")

    for var_name, default_value in DEFAULTS.items():
        if not os.getenv(var_name):
            os.environ[var_name] = default_value
            logger.debug(f"{var_name} 환경변수가 설정되지 않아 기본값을 사용합니다.")

    _loaded = True


def get_env_var(var_name, default=None, required=False):
    """환경변수를 안전하게 가져오기"""
    value = os.getenv(var_name, default)

    if required and not value:
        raise ValueError(f"필수 환경변수 {var_name}이 설정되지 않았습니다.")

    return value


def get_int_env_var(var_name, default):
    """정수 환경변수 읽기"""
    raw = get_env_var(var_name, DEFAULTS.get(var_name, str(default)))
    try:
        return int(raw)
    except (TypeError, ValueError):
        logger.warning(f"{var_name}={raw!r}은(는) 정수가 아닙니다. 기본값 {default}을(를) 사용합니다.")
        return default
