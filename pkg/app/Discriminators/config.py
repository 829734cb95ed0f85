"""
Runtime settings for the discriminator library.

Values come from environment variables, optionally loaded from a `.env` file in
the working directory. Every operation that consumes one of these constants also
accepts an explicit keyword override, so the settings only supply defaults.
"""

import os
from dataclasses import dataclass

from dotenv import load_dotenv

from .errors import ConfigurationError

load_dotenv()

ENV_PREFIX = "HYPERDISC_"


@dataclass(frozen=True)
class Settings:
    """
    Immutable snapshot of the configurable constants.

    Attributes:
        enumeration_budget (int): Maximum number of tuples an exact kernel may range over.
        vc_universe_cap (int): Largest universe the exact VC search accepts.
        calibration_constant (float): The C in m(eps, delta) = C * rho * k^2 / eps^2 * ln(1/delta).
        holdout_constant (float): The H in the holdout size H * k^2 / eps^2 * ln(4/delta).
        default_replicates (int): Monte Carlo replicates per experiment row.
        game_size_constant (float): The c of the ground-set size condition of the minimax construction.
        disjoint_max_retries (int): Attempts for the sampling-based disjoint pair.
        log_level (str): Root log level used by the CLI.
    """

    enumeration_budget: int = 10**8
    vc_universe_cap: int = 20
    calibration_constant: float = 8.0
    holdout_constant: float = 18.0
    default_replicates: int = 200
    game_size_constant: float = 1.0
    disjoint_max_retries: int = 200
    log_level: str = "WARNING"


def _read(name: str, default, cast):
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = cast(raw.strip())
    except ValueError as e:
        raise ConfigurationError(
            f"{ENV_PREFIX + name}={raw!r} is not a valid {cast.__name__}"
        ) from e
    if isinstance(value, (int, float)) and value <= 0:
        raise ConfigurationError(f"{ENV_PREFIX + name} must be positive, got {raw!r}")
    return value


def get_settings() -> Settings:
    """
    Reads the current settings from the environment.

    Returns:
        Settings: Defaults overridden by any `HYPERDISC_*` variables that are set.

    Raises:
        ConfigurationError: If a variable is set to a malformed or non-positive value.
    """
    defaults = Settings()
    return Settings(
        enumeration_budget=_read("ENUMERATION_BUDGET", defaults.enumeration_budget, int),
        vc_universe_cap=_read("VC_UNIVERSE_CAP", defaults.vc_universe_cap, int),
        calibration_constant=_read(
            "CALIBRATION_CONSTANT", defaults.calibration_constant, float
        ),
        holdout_constant=_read("HOLDOUT_CONSTANT", defaults.holdout_constant, float),
        default_replicates=_read("DEFAULT_REPLICATES", defaults.default_replicates, int),
        game_size_constant=_read(
            "GAME_SIZE_CONSTANT", defaults.game_size_constant, float
        ),
        disjoint_max_retries=_read(
            "DISJOINT_MAX_RETRIES", defaults.disjoint_max_retries, int
        ),
        log_level=_read("LOG_LEVEL", defaults.log_level, str).upper(),
    )
