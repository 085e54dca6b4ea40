"""A module which defines utilities for the library."""
import json
import os
from typing import Any


def load_existing_jsonl(file_path: str) -> list[dict]:
    """Load existing records from a jsonl file."""
    if os.path.exists(file_path):
        with open(file_path, "r") as json_file:
            return [json.loads(line) for line in json_file if line.strip()]
    return []


def get_config_dir() -> str:
    """Get the path to the root of the config directory."""
    script_dir = os.path.dirname(os.path.realpath(__file__))
    return os.path.join(script_dir, "..", "config")


def ensure_directory_exists(filepath: str) -> None:
    """Ensures the directory of the given filepath exists."""
    directory = os.path.dirname(filepath)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)


class WsatConfig:
    """Configuration class for wsat runs."""

    def __init__(self, dictionary: dict) -> None:
        for key, value in dictionary.items():
            if isinstance(value, dict):
                value = WsatConfig(value)
            else:
                value = self._cast_to_appropriate_type(value)
            setattr(self, key, value)

    @staticmethod
    def _cast_to_appropriate_type(value: Any) -> Any:
        """Automatically cast a value to its appropriate type."""
        if isinstance(value, str) and value.isdigit():
            return int(value)
        return value

    def _update_from_dict(self, dictionary: dict) -> None:
        """Update fields using a dictionary."""
        for key, value in dictionary.items():
            if value is None:
                continue
            if isinstance(value, dict):
                existing_value = getattr(self, key, None)
                if existing_value and isinstance(existing_value, WsatConfig):
                    existing_value.update(value)
                else:
                    setattr(self, key, WsatConfig(value))
            else:
                setattr(self, key, self._cast_to_appropriate_type(value))

    def add_field(self, key: str, value: Any) -> None:
        """Add a field to the configuration."""
        setattr(self, key, value)

    def update(self, new_config_dict: dict) -> None:
        """Update fields using a dictionary; `None` values are ignored."""
        self._update_from_dict(new_config_dict)

    def to_dict(self) -> dict:
        return {
            key: value.to_dict() if isinstance(value, WsatConfig) else value
            for key, value in vars(self).items()
        }

