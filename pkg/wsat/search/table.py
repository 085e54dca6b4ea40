"""Predicted versus exact weak saturation numbers, row by row."""
import logging
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Optional

import pandas as pd

from wsat.core.base import SearchError
from wsat.pattern.base import PatternSpec
from wsat.search.exact import SearchConfig, wsat_exact
from wsat.search.predictions import predicted_wsat_diag, predicted_wsat_k2t

logger = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"

TABLE_COLUMNS = [
    "s",
    "t",
    "n",
    "predicted",
    "exact",
    "status",
    "graphs_tested",
    "wall_time",
]


@dataclass
class TableRow:
    s: int
    t: int
    n: int
    predicted: int
    exact: Optional[int]
    status: str
    graphs_tested: int = 0
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


def rows_to_frame(rows: Iterable[TableRow]) -> pd.DataFrame:
    frame = pd.DataFrame(
        [row.to_dict() for row in rows], columns=TABLE_COLUMNS
    )
    frame["exact"] = frame["exact"].astype("Int64")
    frame["wall_time"] = frame["wall_time"].astype(float).round(3)
    return frame


def render_table(rows: Iterable[TableRow]) -> str:
    """Plain-text table, one row per (s, t, n)."""
    frame = rows_to_frame(rows)
    frame["exact"] = frame["exact"].map(
        lambda v: "-" if pd.isna(v) else str(int(v))
    )
    return frame.to_string(index=False)


def render_json_lines(rows: Iterable[TableRow]) -> str:
    return rows_to_frame(rows).to_json(orient="records", lines=True).strip()


def table_cases(
    t_max: int,
    n_max: int,
    t_min: int = 3,
    n_min: Optional[int] = None,
    include_diagonal: bool = False,
) -> list[tuple[int, int, int, int]]:
    """(s, t, n, predicted) for every row the table covers."""
    if t_min < 3 or t_max < t_min:
        raise SearchError(f"Need 3 <= t_min <= t_max, got {t_min}..{t_max}.")
    cases = []
    for t in range(t_min, t_max + 1):
        if n_max < t + 2:
            raise SearchError(
                f"n <= {n_max} is outside the K_(2,{t}) range n >= {t + 2}."
            )
        first = max(t + 2, n_min or 0)
        for n in range(first, n_max + 1):
            cases.append((2, t, n, predicted_wsat_k2t(n, t)))
    if include_diagonal:
        for total in range(2, n_max + 1):
            for s in range(1, total // 2 + 1):
                t = total - s
                cases.append((s, t, total, predicted_wsat_diag(s, t)))
    return cases


def reproduce_table(
    t_max: int,
    n_max: int,
    t_min: int = 3,
    n_min: Optional[int] = None,
    include_diagonal: bool = False,
    max_order: int = 9,
    worker_count: int = 1,
    dedup: bool = True,
    show_progress: bool = False,
    on_row: Optional[Callable[[TableRow], None]] = None,
) -> list[TableRow]:
    """Run an independent exact search for every covered (s, t, n).

    Rows with n above `max_order` are reported as SKIP.
    """
    rows = []
    for s, t, n, predicted in table_cases(
        t_max, n_max, t_min, n_min, include_diagonal
    ):
        if n > max_order:
            row = TableRow(s, t, n, predicted, None, SKIP)
        else:
            cfg = SearchConfig(
                n,
                PatternSpec(s, t),
                worker_count=worker_count,
                dedup=dedup,
                independent=True,
                show_progress=show_progress,
            )
            result = wsat_exact(cfg, with_certificate=False)
            status = PASS if result.value == predicted else FAIL
            row = TableRow(
                s,
                t,
                n,
                predicted,
                result.value,
                status,
                result.graphs_tested,
                result.wall_time,
            )
        if row.status == FAIL:
            logger.error(
                f"Mismatch for K_({s},{t}), n={n}: predicted {predicted}, exact {row.exact}."
            )
        if on_row is not None:
            on_row(row)
        rows.append(row)
    return rows
