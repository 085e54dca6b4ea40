"""Manages the configuration for wsat runs."""
import collections
import logging
import os
from typing import Any, Optional

import yaml

from wsat.core.utils import WsatConfig, get_config_dir

DEFAULT_LOG_LEVEL = "INFO"
DEFAULT_RESULTS_LOG = "wsat-results.log"

# Settings filled from the environment when the YAML leaves them null.
ENV_FALLBACKS = {
    "log_level": ("WSAT_LOG_LEVEL", DEFAULT_LOG_LEVEL),
    "results_log": ("WSAT_RESULTS_LOG", DEFAULT_RESULTS_LOG),
}


class ConfigurationManager:
    """Loads YAML settings, applies overrides and validates the result.

    A custom settings file is laid over the packaged defaults, so it only
    needs the keys it changes.
    """

    DEFAULT_SETTINGS_CONFIG = "wsat_settings.yaml"

    def __init__(self, config_path: Optional[str] = None) -> None:
        self.default_path = os.path.join(
            get_config_dir(),
            "settings",
            ConfigurationManager.DEFAULT_SETTINGS_CONFIG,
        )
        self.config_path = config_path or self.default_path
        self.load_config()

    @staticmethod
    def _read_settings(path: str) -> dict:
        with open(path, "r") as file:
            try:
                settings = yaml.safe_load(file) or {}
            except yaml.YAMLError as e:
                raise ValueError(f"Cannot parse settings file {path}: {e}")
        if not isinstance(settings, dict):
            raise ValueError(
                f"Settings file {path} must hold a mapping, got {type(settings).__name__}."
            )
        return settings

    def load_config(self) -> Any:
        """Load the packaged defaults, then the custom settings file."""
        config: Any = WsatConfig(self._read_settings(self.default_path))
        if self.config_path != self.default_path:
            config.update(self._read_settings(self.config_path))
        for key, (env_name, default) in ENV_FALLBACKS.items():
            if getattr(config, key, None) is None:
                config.add_field(key, os.environ.get(env_name) or default)
        self.config = config
        return config

    def update(self, overrides: dict) -> Any:
        """Apply command line overrides; `None` values keep the settings."""
        self.config.update(overrides)
        return self.config

    def validate_config(self, logger: logging.Logger) -> None:
        """Validate the configuration."""
        if not self.config:
            raise ValueError("No configuration loaded.")
        if int(self.config.workers) < 1:
            raise ValueError(
                f"workers must be at least 1, got {self.config.workers}."
            )
        if int(self.config.prefix_length) < 0:
            raise ValueError(
                f"prefix_length must be non-negative, got {self.config.prefix_length}."
            )
        if not 1 <= int(self.config.max_order) <= 64:
            raise ValueError(
                f"max_order must be in 1..64, got {self.config.max_order}."
            )
        if not 1 <= int(self.config.table_max_order) <= 64:
            raise ValueError(
                f"table_max_order must be in 1..64, got {self.config.table_max_order}."
            )
        level = logging.getLevelName(str(self.config.log_level).upper())
        if not isinstance(level, int):
            raise ValueError(f"Unknown log level {self.config.log_level!r}.")

        summary = collections.OrderedDict()
        summary["Results Log"] = self.config.results_log
        summary["Workers"] = self.config.workers
        summary["Dedup"] = self.config.dedup
        summary["Prune Connected"] = self.config.prune_connected
        summary["Independent"] = self.config.independent
        summary["Prefix Length"] = self.config.prefix_length
        summary["Max Order"] = self.config.max_order
        summary["Table Max Order"] = self.config.table_max_order

        logger.debug("Effective configuration:")
        for key, value in summary.items():
            logger.debug(f"{key}: {value}")
