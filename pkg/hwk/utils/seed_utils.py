"""
Seed resolution.
"""

import logging
import os

from hwk.utils.errors import ConfigError

SEED_ENV_VAR = 'HWK_SEED'
FALLBACK_SEED = 0


def resolve_seed(flag_seed=None, config_seed=None):
    """
    Picks the run seed: the --seed flag, then run.seed from the config, then HWK_SEED, then 0.

    Args:
        flag_seed(int): value of the --seed flag
        config_seed(int): run.seed from the configuration file

    Returns:
        int: the seed
    """
    if flag_seed is not None:
        return int(flag_seed)
    if config_seed is not None:
        return int(config_seed)

    value = os.environ.get(SEED_ENV_VAR)
    if value is not None and value.strip():
        try:
            return int(value)
        except ValueError:
            raise ConfigError("{} must be an integer, got {!r}".format(SEED_ENV_VAR, value))

    logging.warning("No seed given (flag, run.seed or {}); using {}".format(SEED_ENV_VAR, FALLBACK_SEED))
    return FALLBACK_SEED
