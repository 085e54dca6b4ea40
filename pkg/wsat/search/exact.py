"""Exact weak saturation numbers by exhaustive enumeration.

Levels m = m_lo, m_lo + 1, ... are scanned in ascending order. A level is
the set of m-edge graphs on n labeled vertices, enumerated as
lexicographic combinations of edge indices and split into work units by
a fixed-length index prefix. Units are spread over a process pool; each
chunk keeps its own seen-set of canonical forms.
"""
import logging
import time
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool
from typing import Any, Callable, Iterable, Iterator, Optional

from tqdm import tqdm

from wsat.core.base import PatternError, SearchError
from wsat.graph.base import MAX_VERTICES, Graph, all_pairs, num_pairs
from wsat.graph.canonical import canonical_form
from wsat.graph.graph6 import graph6_decode
from wsat.pattern.base import PatternSpec
from wsat.pattern.detection import find_copy
from wsat.percolation.certificate import Certificate, extract_certificate
from wsat.percolation.closure import is_full, percolate
from wsat.search.predictions import predicted_wsat

logger = logging.getLogger(__name__)

ADVISORY_MAX_ORDER = 12


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one exact search; `m_hi` defaults to C(n, 2)."""

    n: int
    pattern: PatternSpec
    m_lo: int = 0
    m_hi: Optional[int] = None
    dedup: bool = True
    prune_connected: bool = False
    worker_count: int = 1
    independent: bool = True
    prefix_length: int = 2
    show_progress: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise SearchError(
                f"capacity exceeded: n must be in 1..{MAX_VERTICES}, got {self.n}"
            )
        if self.pattern.order > self.n:
            raise PatternError(
                f"pattern larger than graph: {self.pattern.label} needs {self.pattern.order} vertices, n={self.n}"
            )
        if self.m_hi is None:
            object.__setattr__(self, "m_hi", num_pairs(self.n))
        if not 0 <= self.m_lo <= self.m_hi <= num_pairs(self.n):
            raise SearchError(
                f"Need 0 <= m_lo <= m_hi <= {num_pairs(self.n)}, got m_lo={self.m_lo}, m_hi={self.m_hi}."
            )
        if self.worker_count < 1:
            raise SearchError(
                f"worker_count must be at least 1, got {self.worker_count}."
            )
        if self.prefix_length < 0:
            raise SearchError(
                f"prefix_length must be non-negative, got {self.prefix_length}."
            )
        if self.n > ADVISORY_MAX_ORDER:
            logger.warning(
                f"n={self.n} is above the advisory limit of {ADVISORY_MAX_ORDER}; the scan may not finish."
            )

    @property
    def m_top(self) -> int:
        assert self.m_hi is not None
        return self.m_hi

    @property
    def uses_connected_prune(self) -> bool:
        """The connectivity prune applies to K_{2,t} only."""
        return (
            self.prune_connected
            and not self.pattern.is_clique
            and self.pattern.s == 2
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "s": self.pattern.s,
            "t": self.pattern.t,
            "kind": self.pattern.kind.value,
            "m_lo": self.m_lo,
            "m_hi": self.m_hi,
            "dedup": self.dedup,
            "prune_connected": self.prune_connected,
            "independent": self.independent,
        }


@dataclass(frozen=True)
class LevelReport:
    """Summary of one fully scanned edge count."""

    m: int
    graphs_enumerated: int
    graphs_tested: int
    found: int
    wall_time: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "graphs_enumerated": self.graphs_enumerated,
            "graphs_tested": self.graphs_tested,
            "found": self.found,
            "wall_time": round(self.wall_time, 6),
        }


@dataclass
class WsatResult:
    """Outcome of `wsat_exact`; `value` is None when the range has no hit."""

    config: SearchConfig
    value: Optional[int]
    witnesses: tuple[Graph, ...] = ()
    graphs_tested: int = 0
    graphs_enumerated: int = 0
    certificate: Optional[Certificate] = None
    start_m: int = 0
    wall_time: float = 0.0
    levels: list[LevelReport] = field(default_factory=list)

    @property
    def witness(self) -> Optional[Graph]:
        return self.witnesses[0] if self.witnesses else None

    @property
    def found(self) -> bool:
        return self.value is not None

    def summary(self) -> str:
        if self.value is None:
            return (
                f"wsat: none in range [{self.config.m_lo}, {self.config.m_hi}]"
            )
        return f"wsat = {self.value}"

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.config.to_dict(),
            "value": self.value,
            "witness": canonical_form(self.witness) if self.witness else None,
            "witnesses": [canonical_form(g) for g in self.witnesses],
            "graphs_tested": self.graphs_tested,
            "graphs_enumerated": self.graphs_enumerated,
            "start_m": self.start_m,
            "wall_time": round(self.wall_time, 6),
        }


@dataclass(frozen=True)
class _ScanTask:
    n: int
    pattern: PatternSpec
    m: int
    prefixes: tuple[tuple[int, ...], ...]
    dedup: bool
    prune_connected: bool
    degree_floor: int


@dataclass(frozen=True)
class _ChunkResult:
    graphs_enumerated: int
    graphs_tested: int
    hits: tuple[str, ...]


def degree_floor(pattern: PatternSpec) -> int:
    """Minimum degree of any weakly F-saturated graph: δ(F) - 1.

    A vertex of smaller degree can never gain an edge, since the copy of F
    created through that edge would need the vertex to have degree δ(F).
    """
    return pattern.min_degree - 1


def _is_connected(adj: list[int]) -> bool:
    reached = frontier = 1
    while frontier:
        grow = 0
        for v in range(len(adj)):
            if frontier >> v & 1:
                grow |= adj[v]
        frontier = grow & ~reached
        reached |= frontier
    return reached == (1 << len(adj)) - 1


def _prefixes(n_pairs: int, m: int, length: int) -> list[tuple[int, ...]]:
    """Index prefixes that can still be completed to m edges."""
    length = min(length, m)
    last_allowed = n_pairs - (m - length) - 1
    return [
        prefix
        for prefix in combinations(range(n_pairs), length)
        if not prefix or prefix[-1] <= last_allowed
    ]


def _candidates(
    n_pairs: int, m: int, prefix: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    start = prefix[-1] + 1 if prefix else 0
    for tail in combinations(range(start, n_pairs), m - len(prefix)):
        yield prefix + tail


def _scan_units(task: _ScanTask, seen: set[str]) -> _ChunkResult:
    n, pattern = task.n, task.pattern
    pairs = all_pairs(n)
    enumerated = tested = 0
    hits: set[str] = set()
    for prefix in task.prefixes:
        for combo in _candidates(len(pairs), task.m, prefix):
            enumerated += 1
            adj = [0] * n
            for index in combo:
                u, v = pairs[index]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            if any(row.bit_count() < task.degree_floor for row in adj):
                continue
            if task.prune_connected and not _is_connected(adj):
                continue
            key = None
            if task.dedup:
                key = canonical_form(Graph(n, tuple(adj)))
                if key in seen:
                    continue
                seen.add(key)
            tested += 1
            if find_copy(adj, pattern) is not None:
                continue
            work = list(adj)
            percolate(work, pattern)
            if not is_full(work):
                continue
            hits.add(key or canonical_form(Graph(n, tuple(adj))))
    return _ChunkResult(enumerated, tested, tuple(sorted(hits)))


def _scan_chunk(task: _ScanTask) -> _ChunkResult:
    return _scan_units(task, set())


def _merge(results: Iterable[_ChunkResult]) -> _ChunkResult:
    enumerated = tested = 0
    hits: set[str] = set()
    for result in results:
        enumerated += result.graphs_enumerated
        tested += result.graphs_tested
        hits.update(result.hits)
    return _ChunkResult(enumerated, tested, tuple(sorted(hits)))


class LevelScanner:
    """Scans single edge-count levels, in-process or over a worker pool."""

    def __init__(self, cfg: SearchConfig) -> None:
        self.cfg = cfg
        self.pool: Optional[Any] = None

    def __enter__(self) -> "LevelScanner":
        if self.cfg.worker_count > 1:
            self.pool = Pool(processes=self.cfg.worker_count)
        return self

    def __exit__(self, *exc_info: Any) -> None:
        if self.pool is not None:
            self.pool.close()
            self.pool.join()
            self.pool = None

    def _task(self, m: int, prefixes: Iterable[tuple[int, ...]]) -> _ScanTask:
        cfg = self.cfg
        return _ScanTask(
            cfg.n,
            cfg.pattern,
            m,
            tuple(prefixes),
            cfg.dedup,
            cfg.uses_connected_prune,
            degree_floor(cfg.pattern),
        )

    def scan(self, m: int) -> tuple[LevelReport, tuple[str, ...]]:
        """Scan every m-edge graph; returns the report and canonical hits."""
        start = time.perf_counter()
        units = _prefixes(num_pairs(self.cfg.n), m, self.cfg.prefix_length)
        progress = dict(
            desc=f"m={m}", leave=False, disable=not self.cfg.show_progress
        )
        if self.pool is None:
            seen: set[str] = set()
            merged = _merge(
                _scan_units(self._task(m, [unit]), seen)
                for unit in tqdm(units, **progress)
            )
        else:
            n_chunks = max(1, min(len(units), self.cfg.worker_count * 4))
            tasks = [
                self._task(m, units[i::n_chunks]) for i in range(n_chunks)
            ]
            logger.debug(
                f"Dispatching {len(units)} work units in {n_chunks} chunks for m={m}."
            )
            merged = _merge(
                tqdm(
                    self.pool.imap_unordered(_scan_chunk, tasks),
                    total=len(tasks),
                    **progress,
                )
            )
        report = LevelReport(
            m,
            merged.graphs_enumerated,
            merged.graphs_tested,
            len(merged.hits),
            time.perf_counter() - start,
        )
        return report, merged.hits


def first_level(cfg: SearchConfig) -> int:
    start = cfg.m_lo
    if not cfg.independent:
        predicted = predicted_wsat(cfg.n, cfg.pattern)
        if predicted is not None and cfg.m_lo < predicted <= cfg.m_top:
            logger.info(
                f"Fast mode: starting at the predicted value {predicted}."
            )
            start = predicted
    return start


def wsat_exact(
    cfg: SearchConfig,
    on_level: Optional[Callable[[LevelReport], None]] = None,
    with_certificate: bool = True,
    start_m: Optional[int] = None,
) -> WsatResult:
    """Smallest m in [m_lo, m_hi] admitting a weakly saturated graph.

    `start_m` resumes a scan whose lower levels are already known to be
    empty. Every canonical minimum graph is returned, sorted by key.
    """
    began = time.perf_counter()
    first = start_m if start_m is not None else first_level(cfg)
    if not cfg.m_lo <= first <= cfg.m_top + 1:
        raise SearchError(
            f"Resume level {first} outside [{cfg.m_lo}, {cfg.m_top + 1}]."
        )
    floor_edges = -(-cfg.n * degree_floor(cfg.pattern) // 2)
    result = WsatResult(cfg, None, start_m=first)
    logger.info(
        f"Searching wsat({cfg.n}, {cfg.pattern.label}) over m={first}..{cfg.m_hi}."
    )

    with LevelScanner(cfg) as scanner:
        for m in range(first, cfg.m_top + 1):
            if m < floor_edges:
                report, hits = LevelReport(m, 0, 0, 0), ()
            else:
                report, hits = scanner.scan(m)
            result.levels.append(report)
            result.graphs_tested += report.graphs_tested
            result.graphs_enumerated += report.graphs_enumerated
            logger.info(
                f"m={m}: tested {report.graphs_tested} graphs, {report.found} weakly saturated."
            )
            if on_level is not None:
                on_level(report)
            if hits:
                result.value = m
                result.witnesses = tuple(graph6_decode(h) for h in hits)
                break

    if result.witness is not None and with_certificate:
        result.certificate = extract_certificate(result.witness, cfg.pattern)
    result.wall_time = time.perf_counter() - began
    logger.info(f"{result.summary()} ({result.wall_time:.2f}s)")
    return result


def verify_no_smaller(cfg: SearchConfig, m: int) -> bool:
    """True when no m-edge graph on cfg.n vertices is weakly saturated."""
    if not 0 <= m <= num_pairs(cfg.n):
        raise SearchError(f"m={m} outside 0..{num_pairs(cfg.n)}.")
    if m < -(-cfg.n * degree_floor(cfg.pattern) // 2):
        return True
    with LevelScanner(cfg) as scanner:
        report, _ = scanner.scan(m)
    return report.found == 0

