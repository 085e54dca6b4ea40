"""Command line front end for constructions, closures, certificates and searches.

Examples:
    wsat construct --family complement-path --s 2 --t 3
    wsat construct --family gnt --n 7 --t 3 | wsat closure --s 2 --t 3
    wsat closure --in graph.g6 --s 2 --t 3 --cert cert.jsonl
    wsat verify --in cert.jsonl
    wsat search --n 5 --s 2 --t 3 --independent
    wsat table --t 3 --n 5..7
"""
import logging
import os
import sys
import time
from json import dumps
from typing import Any, Optional, Union

import fire

from wsat.constructions import FamilyManager
from wsat.core.base import ConstructionError, PatternKind
from wsat.core.config_manager import ConfigurationManager
from wsat.core.writers import RawDataWriter
from wsat.graph import graph6_decode, graph6_encode, num_edges
from wsat.pattern import PatternSpec, is_kst_free
from wsat.percolation import (
    certificate_from_order,
    closure,
    extract_certificate,
    read_certificates,
    verify_certificate,
    write_certificates,
)
from wsat.search import (
    RunRecord,
    SearchConfig,
    append_run_records,
    first_level,
    read_run_records,
    render_json_lines,
    render_table,
    reproduce_table,
    resume_level,
    wsat_exact,
)
from wsat.search.table import FAIL

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"
EXIT_FAILURE = 1
EXIT_USAGE = 2


class CommandFailed(Exception):
    """A command ran but its verdict is negative (exit code 1)."""


def parse_range(value: Union[int, str, tuple]) -> tuple[int, int]:
    """Accept `5`, `"5..7"` or `(5, 7)`."""
    if isinstance(value, (tuple, list)) and len(value) == 2:
        low, high = value
    elif isinstance(value, int):
        low = high = value
    elif isinstance(value, str) and ".." in value:
        low, high = value.split("..", 1)
    elif isinstance(value, str):
        low = high = value
    else:
        raise ValueError(f"Cannot parse range {value!r}; use A or A..B.")
    try:
        low, high = int(low), int(high)
    except (TypeError, ValueError):
        raise ValueError(f"Cannot parse range {value!r}; use A or A..B.")
    if low > high:
        raise ValueError(f"Empty range {value!r}.")
    return low, high


def build_pattern(
    s: Optional[int], t: Optional[int], kind: str = "bipartite"
) -> PatternSpec:
    if PatternKind(kind) == PatternKind.CLIQUE:
        if t is None:
            raise ValueError("Clique patterns need --t r.")
        return PatternSpec.clique(int(t))
    if s is None or t is None:
        raise ValueError("Bipartite patterns need both --s and --t.")
    return PatternSpec.of(int(s), int(t))


def read_graph_text(input_path: Optional[str]) -> str:
    """First non-empty line of the input file, or of stdin."""
    if input_path:
        with open(input_path, "r") as file:
            lines = file.readlines()
    else:
        lines = sys.stdin.readlines()
    for line in lines:
        if line.strip():
            return line.strip()
    raise ValueError("No graph6 input found.")


def _input_path(
    input_path: Optional[str], extra: dict[str, Any]
) -> Optional[str]:
    path = extra.pop("in", None) or input_path
    if extra:
        raise ValueError(f"Unknown flags: {', '.join(sorted(extra))}.")
    return path


class WsatCli:
    """Weak saturation toolkit: construct, closure, verify, search, table."""

    def __init__(
        self,
        config_path: Optional[str] = None,
        log_level: Optional[str] = None,
    ) -> None:
        self.manager = ConfigurationManager(config_path)
        self.config = self.manager.update({"log_level": log_level})
        logging.basicConfig(
            level=str(self.config.log_level).upper(), format=LOG_FORMAT
        )
        self.manager.validate_config(logger)

    def _results_log(self, log: Optional[str]) -> str:
        return log or self.config.results_log

    def construct(
        self,
        family: str,
        emit_order: bool = False,
        cert: Optional[str] = None,
        out: Optional[str] = None,
        json: bool = False,
        **params: int,
    ) -> None:
        """Build a family instance and print it as graph6.

        `--out` also appends the graph6 line to a file.
        """
        instance = FamilyManager.build(family, **params)
        text = graph6_encode(instance.graph)
        if json:
            print(
                dumps(
                    {
                        **instance.to_dict(),
                        "graph6": text,
                        "n": instance.graph.n,
                        "edges": num_edges(instance.graph),
                    },
                    sort_keys=True,
                )
            )
        else:
            print(text)
        if out:
            RawDataWriter(out).write(text)

        if not emit_order:
            return
        if instance.suggested_order is None or instance.pattern is None:
            raise ConstructionError(
                f"Family '{family}' with {params} carries no saturating order."
            )
        certificate = certificate_from_order(
            instance.graph,
            instance.pattern,
            instance.suggested_order,
            instance.suggested_witnesses,
        )
        if not json:
            print(
                "order: "
                + " ".join(f"{e.u}-{e.v}" for e in instance.suggested_order)
            )
        path = write_certificates(
            cert or f"{instance.name.value}-certificate.jsonl", [certificate]
        )
        logger.info(
            f"Wrote certificate with {len(certificate)} steps to {path}."
        )

    def closure(
        self,
        s: Optional[int] = None,
        t: Optional[int] = None,
        kind: str = "bipartite",
        cert: Optional[str] = None,
        json: bool = False,
        input_path: Optional[str] = None,
        **kwargs: Any,
    ) -> None:
        """Run the percolation closure on a graph6 input."""
        path = _input_path(input_path, kwargs)
        graph = graph6_decode(read_graph_text(path))
        pattern = build_pattern(s, t, kind)
        outcome = closure(graph, pattern)
        free = is_kst_free(graph, pattern)

        if json:
            print(
                dumps(
                    {
                        "n": graph.n,
                        "pattern": pattern.to_dict(),
                        "edges": num_edges(graph),
                        "final_edges": num_edges(outcome.final),
                        "complete": outcome.complete,
                        "pattern_free": free,
                        "steps": [
                            {"edge": e.to_list(), **w.to_dict()}
                            for e, w in outcome.added
                        ],
                    },
                    sort_keys=True,
                )
            )
        else:
            print(f"pattern: {pattern.label}")
            print(f"edges: {num_edges(graph)}")
            print(f"final edges: {num_edges(outcome.final)}")
            print(f"pattern-free: {str(free).lower()}")
            print(f"complete: {str(outcome.complete).lower()}")
            print(f"steps: {len(outcome.added)}")
            for number, (e, w) in enumerate(outcome.added, start=1):
                print(
                    f"  {number}. {e.u}-{e.v} side_s={list(w.side_s)} side_t={list(w.side_t)}"
                )

        if cert:
            if not (free and outcome.complete):
                logger.warning(
                    "Graph is not weakly saturated; no certificate written."
                )
                return
            written = write_certificates(
                cert, [extract_certificate(graph, pattern)]
            )
            logger.info(f"Wrote certificate to {written}.")

    def verify(
        self, input_path: Optional[str] = None, **kwargs: Any
    ) -> None:
        """Check every certificate in a JSONL file."""
        path = _input_path(input_path, kwargs)
        if not path:
            raise ValueError("verify needs --in CERTIFICATE_FILE.")
        if not os.path.exists(path):
            raise ValueError(f"Certificate file {path} not found.")
        certificates = read_certificates(path)
        if not certificates:
            raise ValueError(f"No certificates found in {path}.")
        failures = 0
        for certificate in certificates:
            result = verify_certificate(certificate)
            if result:
                print("VALID")
            else:
                failures += 1
                print(f"INVALID: {result.message}")
        if failures:
            raise CommandFailed(
                f"{failures} of {len(certificates)} certificates failed."
            )

    def search(
        self,
        n: int,
        s: Optional[int] = None,
        t: Optional[int] = None,
        kind: str = "bipartite",
        m_lo: int = 0,
        m_hi: Optional[int] = None,
        workers: Optional[int] = None,
        dedup: Optional[bool] = None,
        prune_connected: Optional[bool] = None,
        independent: Optional[bool] = None,
        prefix_length: Optional[int] = None,
        resume: bool = True,
        cert: Optional[str] = None,
        json: bool = False,
        log: Optional[str] = None,
    ) -> None:
        """Compute wsat(n, F) exactly and append run records to the log."""
        self.config.update(
            {
                "workers": workers,
                "dedup": dedup,
                "prune_connected": prune_connected,
                "independent": independent,
                "prefix_length": prefix_length,
            }
        )
        self.manager.validate_config(logger)
        cfg = SearchConfig(
            int(n),
            build_pattern(s, t, kind),
            m_lo=int(m_lo),
            m_hi=None if m_hi is None else int(m_hi),
            dedup=bool(self.config.dedup),
            prune_connected=bool(self.config.prune_connected),
            worker_count=int(self.config.workers),
            independent=bool(self.config.independent),
            prefix_length=int(self.config.prefix_length),
            show_progress=bool(self.config.show_progress),
        )
        if cfg.n > int(self.config.max_order):
            logger.warning(
                f"n={cfg.n} exceeds max_order={self.config.max_order}; expect a long run."
            )
        results_log = self._results_log(log)
        params = cfg.to_dict()
        start = first_level(cfg)
        skipped_tested = 0
        if resume:
            start, skipped_tested = resume_level(
                read_run_records(results_log), params, start
            )

        def record_level(report: Any) -> None:
            append_run_records(
                results_log,
                [
                    RunRecord(
                        "search",
                        params,
                        timing=report.wall_time,
                        level=report.to_dict(),
                    )
                ],
            )

        began = time.perf_counter()
        result = wsat_exact(cfg, on_level=record_level, start_m=start)
        result.graphs_tested += skipped_tested
        if not cfg.independent and result.start_m > cfg.m_lo:
            logger.warning(
                f"Fast mode: levels below m={result.start_m} were not scanned."
            )

        outputs = []
        if cert and result.certificate is not None:
            outputs.append(write_certificates(cert, [result.certificate]))
        append_run_records(
            results_log,
            [
                RunRecord(
                    "search",
                    params,
                    outputs=outputs,
                    timing=time.perf_counter() - began,
                    result=result.to_dict(),
                )
            ],
        )

        if json:
            print(dumps(result.to_dict(), sort_keys=True))
            return
        print(result.summary())
        if result.witness is not None:
            print(f"witness: {graph6_encode(result.witness)}")
            print(f"minimum graphs: {len(result.witnesses)}")
        print(f"graphs tested: {result.graphs_tested}")

    def table(
        self,
        t: Union[int, str],
        n: Union[int, str],
        workers: Optional[int] = None,
        diagonal: bool = False,
        max_order: Optional[int] = None,
        json: bool = False,
        log: Optional[str] = None,
    ) -> None:
        """Predicted versus exact wsat(n, K_{2,t}) for ranges of t and n."""
        t_min, t_max = parse_range(t)
        n_min, n_max = parse_range(n)
        self.config.update({"workers": workers, "table_max_order": max_order})
        self.manager.validate_config(logger)
        began = time.perf_counter()
        rows = reproduce_table(
            t_max,
            n_max,
            t_min=t_min,
            n_min=n_min,
            include_diagonal=diagonal,
            max_order=int(self.config.table_max_order),
            worker_count=int(self.config.workers),
            dedup=bool(self.config.dedup),
            show_progress=bool(self.config.show_progress),
        )
        print(render_json_lines(rows) if json else render_table(rows))

        append_run_records(
            self._results_log(log),
            [
                RunRecord(
                    "table",
                    {
                        "t": [t_min, t_max],
                        "n": [n_min, n_max],
                        "diagonal": diagonal,
                    },
                    timing=time.perf_counter() - began,
                    result={"rows": [row.to_dict() for row in rows]},
                )
            ],
        )
        failed = [row for row in rows if row.status == FAIL]
        if failed:
            raise CommandFailed(f"{len(failed)} table rows failed.")


def main(argv: Optional[list[str]] = None) -> None:
    try:
        fire.Fire(WsatCli, command=argv)
    except CommandFailed as e:
        logger.error(str(e))
        sys.exit(EXIT_FAILURE)
    except (ValueError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.exit(EXIT_USAGE)


if __name__ == "__main__":
    main()
