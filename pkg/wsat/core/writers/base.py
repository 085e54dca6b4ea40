"""A module which defines the abstract base class for data writers."""
import os
import time
from abc import ABC, abstractmethod

from wsat.core.utils import ensure_directory_exists


class DataWriter(ABC):
    """An abstract class for result writers.

    Writers always append. With `reuse_path=False` an existing file is left
    untouched and the data goes to a timestamped sibling path instead.
    """

    def __init__(self, output_path: str, reuse_path: bool = True) -> None:
        self.output_path = output_path
        self.reuse_path = reuse_path

    def _get_modified_path(self) -> str:
        """Pick a fresh path if the file exists and may not be reused."""
        if not self.reuse_path and os.path.exists(self.output_path):
            base_name, ext = os.path.splitext(self.output_path)
            return f"{base_name}_{int(time.time())}{ext}"
        return self.output_path

    def _prepare_path(self) -> str:
        path = self._get_modified_path()
        ensure_directory_exists(path)
        return path

    @abstractmethod
    def write(self, data) -> str:
        """Append data to the chosen path, returning the path used."""
        pass
