import os
from dataclasses import dataclass

from minfill.errors import ConfigError


@dataclass(frozen=True)
class Settings:
    """
    Runtime settings read from the environment.

    The entry script calls load_dotenv() first, so a local .env file works
    the same way as exported variables.
    """
    jobs: int = 1
    log_level: str = 'WARNING'
    seed: int = 20240501
    random_spaces: int = 200
    theorem_spaces: int = 100


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {value!r}")


def get_settings():
    """
    Build Settings from MINFILL_* environment variables.

    Returns:
        Settings: the current configuration

    Raises:
        ConfigError: if a numeric variable does not hold an integer
    """
    return Settings(
        jobs=max(1, _env_int('MINFILL_JOBS', 1)),
        log_level=os.environ.get('MINFILL_LOG_LEVEL', 'WARNING').upper(),
        seed=_env_int('MINFILL_SEED', 20240501),
        random_spaces=_env_int('MINFILL_RANDOM_SPACES', 200),
        theorem_spaces=_env_int('MINFILL_THEOREM_SPACES', 100),
    )
