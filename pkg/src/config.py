import os
import logging

import attrs

BRUTE_MAX_ITEMS_ENV = "AGREEABLE_BRUTE_MAX_ITEMS"
DP_MAX_AGENTS_ENV = "AGREEABLE_DP_MAX_AGENTS"
DP_MAX_CELLS_ENV = "AGREEABLE_DP_MAX_CELLS"
COVER_MAX_BLOCKS_ENV = "AGREEABLE_COVER_MAX_BLOCKS"
RESAMPLE_CAP_ENV = "AGREEABLE_RESAMPLE_CAP"
ORDINAL_DET_MAX_AGENTS_ENV = "AGREEABLE_ORDINAL_DET_MAX_AGENTS"


def _positive_int(instance, attribute, value):
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{attribute.name} must be a positive integer, got {value!r}")


@attrs.frozen
class Caps:
    """Hard limits on the exponential and pseudo-polynomial solvers.

    Every field can be overridden through the environment variable named
    next to it; explicit keyword arguments passed to a solver win over both.
    """

    brute_max_items: int = attrs.field(default=24, validator=_positive_int)  # AGREEABLE_BRUTE_MAX_ITEMS
    dp_max_agents: int = attrs.field(default=4, validator=_positive_int)  # AGREEABLE_DP_MAX_AGENTS
    dp_max_cells: int = attrs.field(default=10**9, validator=_positive_int)  # AGREEABLE_DP_MAX_CELLS
    cover_max_blocks: int = attrs.field(default=10**6, validator=_positive_int)  # AGREEABLE_COVER_MAX_BLOCKS
    resample_cap: int = attrs.field(default=64, validator=_positive_int)  # AGREEABLE_RESAMPLE_CAP
    ordinal_det_max_agents: int = attrs.field(default=12, validator=_positive_int)  # AGREEABLE_ORDINAL_DET_MAX_AGENTS

    @classmethod
    def from_env(cls, environ=None) -> "Caps":
        """Builds caps from environment variables, falling back to the defaults.

        Args:
            environ (Mapping, optional): Environment to read. Defaults to ``os.environ``.

        Returns:
            Caps: The resolved caps.
        """
        environ = os.environ if environ is None else environ
        overrides = {}
        for field_name, env_var in _ENV_VARS.items():
            raw = environ.get(env_var)
            if raw is None or raw.strip() == "":
                continue
            try:
                overrides[field_name] = int(raw)
            except ValueError:
                raise ValueError(f"{env_var} must be an integer, got {raw!r}") from None
            logging.debug(f"cap override {env_var}={raw}")
        return cls(**overrides)


_ENV_VARS = {
    "brute_max_items": BRUTE_MAX_ITEMS_ENV,
    "dp_max_agents": DP_MAX_AGENTS_ENV,
    "dp_max_cells": DP_MAX_CELLS_ENV,
    "cover_max_blocks": COVER_MAX_BLOCKS_ENV,
    "resample_cap": RESAMPLE_CAP_ENV,
    "ordinal_det_max_agents": ORDINAL_DET_MAX_AGENTS_ENV,
}


def get_caps() -> Caps:
    """Current caps; the environment is re-read on every call."""
    return Caps.from_env()
