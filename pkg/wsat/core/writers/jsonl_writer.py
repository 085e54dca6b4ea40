"""A module which facilitates JSONL record writing."""
import json

from wsat.core.writers.base import DataWriter


class JsonlDataWriter(DataWriter):
    """A class to append records to a JSONL file."""

    def write(self, data: list[dict]) -> str:
        """
        Append the provided records to the output path.

        Args:
            data (list): List of records to be written, one per line.
        """
        path = self._prepare_path()

        with open(path, "a") as f:
            for entry in data:
                f.write(json.dumps(entry, sort_keys=True) + "\n")
        return path
