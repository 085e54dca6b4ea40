from wsat.search.exact import (
    LevelReport,
    SearchConfig,
    WsatResult,
    degree_floor,
    first_level,
    verify_no_smaller,
    wsat_exact,
)
from wsat.search.predictions import (
    predicted_classical,
    predicted_wsat,
    predicted_wsat_diag,
    predicted_wsat_k2t,
)
from wsat.search.records import (
    RunRecord,
    append_run_records,
    read_run_records,
    resume_level,
)
from wsat.search.table import (
    TableRow,
    render_json_lines,
    render_table,
    reproduce_table,
    rows_to_frame,
    table_cases,
)

__all__ = [
    # Exact search
    "SearchConfig",
    "WsatResult",
    "LevelReport",
    "wsat_exact",
    "verify_no_smaller",
    "degree_floor",
    "first_level",
    # Closed forms
    "predicted_wsat_k2t",
    "predicted_wsat_diag",
    "predicted_classical",
    "predicted_wsat",
    # Tables
    "TableRow",
    "table_cases",
    "reproduce_table",
    "rows_to_frame",
    "render_table",
    "render_json_lines",
    # Run records
    "RunRecord",
    "append_run_records",
    "read_run_records",
    "resume_level",
]
