"""Pattern and witness types for complete bipartite (and clique) copies."""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from wsat.core.base import PatternError, PatternKind
from wsat.graph.base import MAX_VERTICES, Edge


@dataclass(frozen=True)
class PatternSpec:
    """The forbidden graph F.

    For `PatternKind.BIPARTITE` this is K_{s,t} with 1 <= s <= t. A clique
    K_r is stored as s = 2, t = r - 2 so that a copy through an edge uv
    splits into the edge itself and r - 2 common neighbours.
    """

    s: int
    t: int
    kind: PatternKind = PatternKind.BIPARTITE

    def __post_init__(self) -> None:
        if self.kind == PatternKind.CLIQUE:
            if self.s != 2 or self.t < 0:
                raise PatternError(
                    f"Clique patterns are stored as (2, r - 2), got ({self.s}, {self.t})."
                )
        elif not 1 <= self.s <= self.t:
            raise PatternError(
                f"K_(s,t) needs 1 <= s <= t, got s={self.s}, t={self.t}."
            )
        if self.s + self.t > MAX_VERTICES:
            raise PatternError(
                f"Pattern order {self.s + self.t} exceeds {MAX_VERTICES}."
            )

    @classmethod
    def of(cls, s: int, t: int) -> "PatternSpec":
        """K_{s,t} with the sides put in order."""
        return cls(min(s, t), max(s, t))

    @classmethod
    def clique(cls, r: int) -> "PatternSpec":
        if r < 2:
            raise PatternError(f"Clique patterns need r >= 2, got {r}.")
        return cls(2, r - 2, PatternKind.CLIQUE)

    @property
    def is_clique(self) -> bool:
        return self.kind == PatternKind.CLIQUE

    @property
    def order(self) -> int:
        return self.s + self.t

    @property
    def min_degree(self) -> int:
        """δ(F)."""
        return self.order - 1 if self.is_clique else self.s

    @property
    def label(self) -> str:
        if self.is_clique:
            return f"K_{self.order}"
        return f"K_{{{self.s},{self.t}}}"

    def to_dict(self) -> dict:
        return {"s": self.s, "t": self.t, "kind": self.kind.value}

    @classmethod
    def from_dict(cls, data: dict) -> "PatternSpec":
        kind = PatternKind(data.get("kind", PatternKind.BIPARTITE.value))
        return cls(int(data["s"]), int(data["t"]), kind)


@dataclass(frozen=True, order=True)
class Witness:
    """An explicit copy of the pattern.

    For K_{s,t} every vertex of `side_s` is adjacent to every vertex of
    `side_t`. For a clique every pair of witness vertices is adjacent and
    `side_s` holds the two endpoints of the certified edge.
    """

    side_s: tuple[int, ...]
    side_t: tuple[int, ...]

    @classmethod
    def of(cls, side_s: Iterable[int], side_t: Iterable[int]) -> "Witness":
        return cls(tuple(sorted(side_s)), tuple(sorted(side_t)))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.side_s + self.side_t))

    def separates(self, e: Edge, pattern: PatternSpec) -> bool:
        """Whether the copy uses `e` as one of its edges."""
        u, v = e
        if pattern.is_clique:
            return u in self.side_s and v in self.side_s
        return (u in self.side_s and v in self.side_t) or (
            v in self.side_s and u in self.side_t
        )

    def required_pairs(self, pattern: PatternSpec) -> list[Edge]:
        """Every vertex pair that must be an edge for the copy to exist."""
        if pattern.is_clique:
            return [Edge.of(a, b) for a, b in combinations(self.vertices, 2)]
        return [Edge.of(a, b) for a in self.side_s for b in self.side_t]

    def to_dict(self) -> dict:
        return {"side_s": list(self.side_s), "side_t": list(self.side_t)}


def witness_shape_ok(witness: Witness, pattern: PatternSpec, n: int) -> bool:
    """Sizes, disjointness and vertex range of a witness."""
    sides = witness.side_s + witness.side_t
    return (
        len(witness.side_s) == pattern.s
        and len(witness.side_t) == pattern.t
        and len(set(sides)) == len(sides)
        and all(0 <= v < n for v in sides)
    )


def witness_holds(
    adj: Sequence[int],
    witness: Witness,
    pattern: PatternSpec,
    extra: Optional[Edge] = None,
) -> bool:
    """Check a witness pair by pair against `adj` (plus an optional edge)."""
    if not witness_shape_ok(witness, pattern, len(adj)):
        return False
    for a, b in witness.required_pairs(pattern):
        if (a, b) == extra:
            continue
        if not adj[a] >> b & 1:
            return False
    return True
