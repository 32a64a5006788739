"""
Sadic - Configuration
Budgets, worker counts and logging for the S-adic substitution toolkit
"""
import os

# Load .env file
from dotenv import load_dotenv
load_dotenv()

from sadic.errors import ConfigurationError


def _env_int(name, default):
    value = os.environ.get(name)
    if value in (None, ''):
        return default
    try:
        return int(value)
    except ValueError:
        raise ConfigurationError(name, value) from None


class Config:
    """Base configuration"""

    # Enumeration budgets (hard errors when exceeded, never silent truncation)
    ENUMERATION_BUDGET = _env_int('SADIC_ENUMERATION_BUDGET', 200000)
    PARSE_BUDGET = _env_int('SADIC_PARSE_BUDGET', 10000)
    PROPERTY_A_BUDGET = _env_int('SADIC_PROPERTY_A_BUDGET', 500000)

    # Sequence recovery
    RECOVERY_MIN_LEVEL = _env_int('SADIC_RECOVERY_MIN_LEVEL', 1)
    RECOVERY_MAX_LEVEL = _env_int('SADIC_RECOVERY_MAX_LEVEL', 6)

    # Parallelism (joblib worker count, 1 = serial)
    N_JOBS = _env_int('SADIC_N_JOBS', 1)

    # System documents
    DEFAULT_NON_DEGENERATE = True

    # Rendering
    PPM_MAX_VALUE = 255

    # Logging
    LOG_LEVEL = os.environ.get('SADIC_LOG_LEVEL', 'WARNING')
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


class DevelopmentConfig(Config):
    """Development configuration"""
    LOG_LEVEL = os.environ.get('SADIC_LOG_LEVEL', 'INFO')


class ProductionConfig(Config):
    """Production configuration"""
    N_JOBS = _env_int('SADIC_N_JOBS', -1)


class TestingConfig(Config):
    """Testing configuration"""
    ENUMERATION_BUDGET = 50000
    RECOVERY_MAX_LEVEL = 5
    LOG_LEVEL = 'DEBUG'


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': Config
}
