from wsat.core.base import (
    CapacityError,
    CertificateViolation,
    ClassicalKind,
    ConstructionError,
    FamilyName,
    Graph6Error,
    NotWeaklySaturatedError,
    PatternError,
    PatternKind,
    SearchError,
)
from wsat.core.utils import WsatConfig, load_existing_jsonl
from wsat.core.writers import JsonlDataWriter, RawDataWriter

__all__ = [
    # Enums
    "PatternKind",
    "FamilyName",
    "ClassicalKind",
    "CertificateViolation",
    # Errors
    "CapacityError",
    "Graph6Error",
    "PatternError",
    "ConstructionError",
    "SearchError",
    "NotWeaklySaturatedError",
    # Utilities
    "WsatConfig",
    "load_existing_jsonl",
    # Writers
    "JsonlDataWriter",
    "RawDataWriter",
]
