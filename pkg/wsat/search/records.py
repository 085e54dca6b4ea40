"""Run records persisted to the line-delimited results log."""
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Optional

from wsat.core.base import ENGINE_VERSION
from wsat.core.utils import load_existing_jsonl
from wsat.core.writers import JsonlDataWriter

logger = logging.getLogger(__name__)


@dataclass
class RunRecord:
    """One command invocation, or one completed search level.

    `level` is set on per-level progress records of a search and holds
    the level's m, graphs_tested and found counts.
    """

    command: str
    params: dict[str, Any]
    outputs: list[str] = field(default_factory=list)
    timing: float = 0.0
    engine_version: str = ENGINE_VERSION
    level: Optional[dict[str, Any]] = None
    result: Optional[dict[str, Any]] = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunRecord":
        return cls(
            command=data["command"],
            params=dict(data.get("params", {})),
            outputs=list(data.get("outputs", [])),
            timing=float(data.get("timing", 0.0)),
            engine_version=data.get("engine_version", ENGINE_VERSION),
            level=data.get("level"),
            result=data.get("result"),
        )


def append_run_records(path: str, records: Iterable[RunRecord]) -> str:
    return JsonlDataWriter(path).write([r.to_dict() for r in records])


def read_run_records(path: str) -> list[RunRecord]:
    return [RunRecord.from_dict(data) for data in load_existing_jsonl(path)]


def resume_level(
    records: Iterable[RunRecord], params: dict[str, Any], m_lo: int
) -> tuple[int, int]:
    """First level still to scan for a search with these params.

    Walks the contiguous run of hit-free levels recorded from `m_lo`
    upwards and returns (next m, graphs tested on the skipped levels).
    """
    empty: dict[int, int] = {}
    for record in records:
        if record.command != "search" or record.params != params:
            continue
        if record.level is None or record.level.get("found"):
            continue
        empty[int(record.level["m"])] = int(record.level["graphs_tested"])
    m, tested = m_lo, 0
    while m in empty:
        tested += empty[m]
        m += 1
    if m > m_lo:
        logger.info(f"Resuming search at m={m} from the results log.")
    return m, tested
