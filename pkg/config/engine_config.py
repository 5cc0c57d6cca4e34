import os
from .env_loader import get_int_env_var, load_environment_variables

load_environment_variables()


class EngineConfig:
    """횡단선 계산 엔진 설정"""

    # 탐색 한도
    MAX_ORDER = get_int_env_var('TRANSVERSAL_MAX_ORDER', 24)
    ORACLE_MAX_ORDER = get_int_env_var('TRANSVERSAL_ORACLE_MAX_ORDER', 8)

    # 병렬 작업자 수 (0 = CPU 수)
    DEFAULT_WORKERS = get_int_env_var('TRANSVERSAL_WORKERS', 1)

    # 부분 평행류 표본 검증
    PROP2_SAMPLE_SIZE = get_int_env_var('TRANSVERSAL_PROP2_SAMPLES', 2000)
    PROP2_SEED = get_int_env_var('TRANSVERSAL_PROP2_SEED', 20160)

    # 무작위 방진 코퍼스
    RANDOM_SQUARE_SEED = get_int_env_var('TRANSVERSAL_RANDOM_SEED', 7)

    @classmethod
    def resolve_workers(cls, workers=None):
        """작업자 수 결정 (None = 설정값, 0 = CPU 수)"""
        if workers is None:
            workers = cls.DEFAULT_WORKERS
        if workers <= 0:
            return os.cpu_count() or 1
        return workers


class AppConfig:
    """Flask 앱 설정"""
    SECRET_KEY = os.environ.get('SECRET_KEY') or 'dev-secret-key-change-in-production'
    DEBUG = os.environ.get('DEBUG', 'False').lower() == 'true'
    JSON_SORT_KEYS = False
