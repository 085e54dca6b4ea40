"""A module which facilitates raw text writing."""
from wsat.core.writers.base import DataWriter


class RawDataWriter(DataWriter):
    """A class to write plain text, such as graph6 lines or tables."""

    def write(self, data: str) -> str:
        """
        Append the provided text, followed by a newline.

        Args:
            data (str): The text to be written.
        """
        path = self._prepare_path()

        with open(path, "a") as f:
            f.write(data + "\n")
        return path
