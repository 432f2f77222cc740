"""
Configuration settings for the potential-positivity toolkit
Values come from the environment (optionally a .env file)
"""
import os
import logging
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Set up logging
logger = logging.getLogger(__name__)


def _int_env(name: str, default: int) -> int:
    try:
        return int(os.getenv(name, str(default)))
    except ValueError:
        return default


# Enumeration Configuration
PPGROWTH_BUDGET = _int_env('PPGROWTH_BUDGET', 2000000)
PPGROWTH_WORKERS = _int_env('PPGROWTH_WORKERS', 1)

# Spectral Configuration
PPGROWTH_DIGITS = _int_env('PPGROWTH_DIGITS', 12)
PPGROWTH_POWER_ITERATIONS = _int_env('PPGROWTH_POWER_ITERATIONS', 10000)

# Decision Procedure Configuration
PPGROWTH_MAX_STEPS_FACTOR = _int_env('PPGROWTH_MAX_STEPS_FACTOR', 10)
PPGROWTH_MAX_STEPS_BASE = _int_env('PPGROWTH_MAX_STEPS_BASE', 100)

# Logging Configuration
PPGROWTH_LOG_LEVEL = os.getenv('PPGROWTH_LOG_LEVEL', 'INFO')
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

NUMERIC_SETTINGS = [
    'PPGROWTH_BUDGET',
    'PPGROWTH_WORKERS',
    'PPGROWTH_DIGITS',
    'PPGROWTH_POWER_ITERATIONS',
    'PPGROWTH_MAX_STEPS_FACTOR',
    'PPGROWTH_MAX_STEPS_BASE',
]


def enumeration_budget() -> int:
    """Current enumeration budget; re-read so a CLI override takes effect."""
    return _int_env('PPGROWTH_BUDGET', PPGROWTH_BUDGET)


def default_max_steps(length: int) -> int:
    """Step cap for the decision loop on a word of the given length."""
    return PPGROWTH_MAX_STEPS_FACTOR * length + PPGROWTH_MAX_STEPS_BASE


# Validate numeric environment variables
def validate_config():
    """Validate that numeric settings are positive integers"""
    bad_vars = []
    for var in NUMERIC_SETTINGS:
        raw = os.getenv(var)
        if raw is None:
            continue
        try:
            if int(raw) <= 0:
                bad_vars.append(var)
        except ValueError:
            bad_vars.append(var)

    if PPGROWTH_LOG_LEVEL.upper() not in logging._nameToLevel:
        bad_vars.append('PPGROWTH_LOG_LEVEL')

    if bad_vars:
        raise ValueError(f"Invalid values for environment variables: {', '.join(bad_vars)}")

    return True


# Auto-validate on import
if __name__ != "__main__":
    try:
        validate_config()
    except ValueError as e:
        logger.warning(f"Configuration warning: {e}")
