"""Step-by-step weak saturation certificates and their independent checker."""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from wsat.core.base import CertificateViolation, NotWeaklySaturatedError
from wsat.core.utils import load_existing_jsonl
from wsat.core.writers import JsonlDataWriter
from wsat.graph.base import (
    Edge,
    EdgeLike,
    Graph,
    as_edge,
    num_edges,
    num_pairs,
)
from wsat.graph.graph6 import graph6_decode, graph6_encode
from wsat.pattern.base import PatternSpec, Witness, witness_holds
from wsat.pattern.detection import edge_witness, find_copy
from wsat.percolation.closure import check_pattern_fits, closure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CertificateStep:
    edge: Edge
    witness: Witness

    def to_dict(self) -> dict:
        return {"edge": self.edge.to_list(), **self.witness.to_dict()}


@dataclass(frozen=True)
class Certificate:
    """An ordering of the missing edges of `base`, each with its copy of F."""

    pattern: PatternSpec
    base: Graph
    steps: tuple[CertificateStep, ...]

    @property
    def n(self) -> int:
        return self.base.n

    def __len__(self) -> int:
        return len(self.steps)

    def to_dict(self) -> dict:
        return {
            "n": self.base.n,
            "pattern": self.pattern.to_dict(),
            "base": graph6_encode(self.base),
            "steps": [step.to_dict() for step in self.steps],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        """Parse the JSON form; malformed records raise `ValueError`."""
        try:
            base = graph6_decode(data["base"])
            pattern = PatternSpec.from_dict(data["pattern"])
            records = data["steps"]
        except (AttributeError, KeyError, TypeError) as e:
            raise ValueError(f"Malformed certificate record: {e!r}.")
        if not isinstance(records, list):
            raise ValueError(
                "Malformed certificate record: steps must be a list."
            )
        if "n" in data and int(data["n"]) != base.n:
            raise ValueError(
                f"Certificate declares n={data['n']} but its base has {base.n} vertices."
            )
        steps = tuple(
            _step_from_dict(number, record)
            for number, record in enumerate(records, start=1)
        )
        return cls(pattern, base, steps)


def _step_from_dict(number: int, record: dict) -> CertificateStep:
    try:
        edge = [int(v) for v in record["edge"]]
        side_s = [int(v) for v in record["side_s"]]
        side_t = [int(v) for v in record["side_t"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ValueError(f"Malformed certificate step {number}: {e!r}.")
    if len(edge) != 2:
        raise ValueError(
            f"Malformed certificate step {number}: edge {edge} needs two endpoints."
        )
    return CertificateStep(Edge(*sorted(edge)), Witness.of(side_s, side_t))


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of `verify_certificate`; `step` is 1-based."""

    valid: bool
    reason: Optional[CertificateViolation] = None
    step: Optional[int] = None

    def __bool__(self) -> bool:
        return self.valid

    @property
    def message(self) -> str:
        if self.valid:
            return "certificate valid"
        if self.step is None:
            return self.reason.value
        return f"{self.reason.value} (step {self.step})"


def certificate_to_dict(certificate: Certificate) -> dict:
    return certificate.to_dict()


def certificate_from_dict(data: dict) -> Certificate:
    return Certificate.from_dict(data)


def _has_copy_pairwise(adj: Sequence[int], pattern: PatternSpec) -> bool:
    """Plain enumeration of vertex sets, kept apart from the finders."""
    n = len(adj)

    def linked(a: int, b: int) -> bool:
        return bool(adj[a] >> b & 1)

    if pattern.is_clique:
        return any(
            all(linked(a, b) for a, b in combinations(group, 2))
            for group in combinations(range(n), pattern.order)
        )
    for side_s in combinations(range(n), pattern.s):
        shared = [
            y
            for y in range(n)
            if y not in side_s and all(linked(x, y) for x in side_s)
        ]
        if len(shared) >= pattern.t:
            return True
    return False


def verify_certificate(certificate: Certificate) -> VerificationResult:
    """Re-check every certificate invariant without running the closure."""
    pattern, base = certificate.pattern, certificate.base
    n = base.n
    if pattern.order > n:
        return VerificationResult(
            False, CertificateViolation.PATTERN_TOO_LARGE
        )
    if _has_copy_pairwise(base.adj, pattern):
        return VerificationResult(
            False, CertificateViolation.BASE_NOT_PATTERN_FREE
        )

    adj = list(base.adj)
    seen: set[Edge] = set()
    for number, step in enumerate(certificate.steps, start=1):
        u, v = step.edge
        if not 0 <= u < v < n:
            return VerificationResult(
                False, CertificateViolation.INVALID_STEP_EDGE, number
            )
        if step.edge in seen:
            return VerificationResult(
                False, CertificateViolation.DUPLICATE_STEP_EDGE, number
            )
        if base.adj[u] >> v & 1:
            return VerificationResult(
                False, CertificateViolation.STEP_EDGE_IN_BASE, number
            )
        if (
            len(step.witness.side_s) != pattern.s
            or len(step.witness.side_t) != pattern.t
            or len(set(step.witness.vertices)) != pattern.order
            or not all(0 <= x < n for x in step.witness.vertices)
        ):
            return VerificationResult(
                False, CertificateViolation.WITNESS_SHAPE, number
            )
        if not step.witness.separates(step.edge, pattern):
            return VerificationResult(
                False, CertificateViolation.WITNESS_MISSES_EDGE, number
            )
        if not witness_holds(adj, step.witness, pattern, extra=step.edge):
            return VerificationResult(
                False, CertificateViolation.WITNESS_EDGE_MISSING, number
            )
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        seen.add(step.edge)

    if num_edges(base) + len(seen) != num_pairs(n):
        return VerificationResult(
            False, CertificateViolation.CLOSURE_INCOMPLETE
        )
    return VerificationResult(True)


def extract_certificate(G: Graph, pattern: PatternSpec) -> Certificate:
    """Certificate built from the deterministic closure order."""
    check_pattern_fits(G, pattern)
    if find_copy(G.adj, pattern) is not None:
        raise NotWeaklySaturatedError(
            CertificateViolation.BASE_NOT_PATTERN_FREE,
            f"not weakly saturated: graph contains {pattern.label}",
        )
    outcome = closure(G, pattern)
    if not outcome.complete:
        raise NotWeaklySaturatedError(
            CertificateViolation.CLOSURE_INCOMPLETE,
            f"not weakly saturated: closure stops after {len(outcome.added)} "
            f"of the missing edges under {pattern.label}",
        )
    steps = tuple(CertificateStep(edge, w) for edge, w in outcome.added)
    return Certificate(pattern, G, steps)


def certificate_from_order(
    G: Graph,
    pattern: PatternSpec,
    order: Iterable[EdgeLike],
    witnesses: Optional[Sequence[Optional[Witness]]] = None,
) -> Certificate:
    """Replay an explicit edge order into a certificate.

    A supplied witness is used as is when it holds at its step; otherwise
    the finder supplies one. A step with no witness at all raises.
    """
    check_pattern_fits(G, pattern)
    if find_copy(G.adj, pattern) is not None:
        raise NotWeaklySaturatedError(
            CertificateViolation.BASE_NOT_PATTERN_FREE,
            f"not weakly saturated: graph contains {pattern.label}",
        )
    adj = list(G.adj)
    steps = []
    for number, e in enumerate(order, start=1):
        edge = as_edge(e)
        if edge.v >= G.n:
            raise NotWeaklySaturatedError(
                CertificateViolation.INVALID_STEP_EDGE,
                f"step {number}: edge {tuple(edge)} is outside 0..{G.n - 1}",
                number,
            )
        if adj[edge.u] >> edge.v & 1:
            raise NotWeaklySaturatedError(
                CertificateViolation.STEP_EDGE_IN_BASE,
                f"step {number}: edge {tuple(edge)} is already present",
                number,
            )
        suggested = witnesses[number - 1] if witnesses else None
        witness: Optional[Witness] = None
        if suggested is not None:
            if suggested.separates(edge, pattern) and witness_holds(
                adj, suggested, pattern, extra=edge
            ):
                witness = suggested
            else:
                logger.warning(
                    f"Suggested witness for step {number} does not hold; searching instead."
                )
        if witness is None:
            witness = edge_witness(adj, edge.u, edge.v, pattern)
        if witness is None:
            raise NotWeaklySaturatedError(
                CertificateViolation.WITNESS_EDGE_MISSING,
                f"step {number}: edge {tuple(edge)} creates no {pattern.label}",
                number,
            )
        adj[edge.u] |= 1 << edge.v
        adj[edge.v] |= 1 << edge.u
        steps.append(CertificateStep(edge, witness))
    return Certificate(pattern, G, tuple(steps))


def write_certificates(
    output_path: str, certificates: Iterable[Certificate]
) -> str:
    """Append certificates to a JSONL file, one object per line."""
    writer = JsonlDataWriter(output_path)
    return writer.write([c.to_dict() for c in certificates])


def read_certificates(input_path: str) -> list[Certificate]:
    return [Certificate.from_dict(r) for r in load_existing_jsonl(input_path)]
