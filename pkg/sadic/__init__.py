"""
Sadic - Multidimensional S-adic Substitution Toolkit
Application factory: resolves configuration and wires logging
"""
import logging
from dataclasses import dataclass

__version__ = '0.3.0'

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AppContext:
    """Resolved settings for one CLI invocation"""
    config_name: str
    enumeration_budget: int
    parse_budget: int
    property_a_budget: int
    recovery_min_level: int
    recovery_max_level: int
    n_jobs: int
    non_degenerate: bool
    ppm_max_value: int


def create_app(config_name='default', **overrides):
    """Application factory pattern

    Args:
        config_name: key into ``config.config``
        **overrides: lowercase AppContext field names overriding the config class

    Returns:
        AppContext with logging configured
    """
    from config import config

    settings = config[config_name]
    _configure_logging(settings.LOG_LEVEL, settings.LOG_FORMAT)

    values = dict(
        config_name=config_name,
        enumeration_budget=settings.ENUMERATION_BUDGET,
        parse_budget=settings.PARSE_BUDGET,
        property_a_budget=settings.PROPERTY_A_BUDGET,
        recovery_min_level=settings.RECOVERY_MIN_LEVEL,
        recovery_max_level=settings.RECOVERY_MAX_LEVEL,
        n_jobs=settings.N_JOBS,
        non_degenerate=settings.DEFAULT_NON_DEGENERATE,
        ppm_max_value=settings.PPM_MAX_VALUE,
    )
    values.update({key: value for key, value in overrides.items() if value is not None})
    context = AppContext(**values)
    logger.debug("Created context %s", context)
    return context


def _configure_logging(level, fmt):
    root = logging.getLogger('sadic')
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(fmt))
        root.addHandler(handler)
    root.setLevel(level)
