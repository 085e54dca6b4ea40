from wsat.core.writers.jsonl_writer import JsonlDataWriter
from wsat.core.writers.raw_writer import RawDataWriter

__all__ = ["JsonlDataWriter", "RawDataWriter"]
