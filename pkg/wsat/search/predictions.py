"""Closed-form weak saturation numbers for cross-checking exact searches."""
from math import comb, gcd
from typing import Optional, Union

from wsat.core.base import ClassicalKind, SearchError
from wsat.pattern.base import PatternSpec


def predicted_wsat_k2t(n: int, t: int) -> int:
    """wsat(n, K_{2,t}) for t >= 3 and n >= t + 2."""
    if t < 3 or n < t + 2:
        raise SearchError(
            f"K_(2,t) formula needs t >= 3 and n >= t + 2, got n={n}, t={t}."
        )
    if t % 2 == 0 and n <= 2 * t - 2:
        return n - 1 + comb(t, 2)
    return n - 2 + comb(t, 2)


def predicted_wsat_diag(s: int, t: int) -> int:
    """wsat(s + t, K_{s,t})."""
    if s < 1 or t < 1:
        raise SearchError(f"Need s, t >= 1, got s={s}, t={t}.")
    base = comb(s + t - 1, 2)
    return base if gcd(s, t) == 1 else base + 1


def predicted_classical(
    kind: Union[ClassicalKind, str], n: int, r_or_t: Optional[int] = None
) -> int:
    """The classical values for cliques, stars, K_{2,2} and K_{2,3}."""
    kind = ClassicalKind(kind)
    if kind == ClassicalKind.CLIQUE:
        r = _require(kind, r_or_t)
        if r < 2 or n < r:
            raise SearchError(
                f"Clique formula needs 2 <= r <= n, got r={r}, n={n}."
            )
        return (r - 2) * n - comb(r - 1, 2)
    if kind == ClassicalKind.STAR:
        t = _require(kind, r_or_t)
        if t < 1 or n < t + 1:
            raise SearchError(
                f"Star formula needs 1 <= t <= n - 1, got t={t}, n={n}."
            )
        return comb(t, 2)
    if kind == ClassicalKind.K22:
        if n < 4:
            raise SearchError(f"K_(2,2) formula needs n >= 4, got n={n}.")
        return n
    if n < 5:
        raise SearchError(f"K_(2,3) formula needs n >= 5, got n={n}.")
    return n + 1


def _require(kind: ClassicalKind, value: Optional[int]) -> int:
    if value is None:
        raise SearchError(f"The {kind.value} formula needs a size parameter.")
    return value


def predicted_wsat(n: int, pattern: PatternSpec) -> Optional[int]:
    """The applicable closed form for wsat(n, F), or None."""
    if pattern.order > n:
        return None
    if pattern.is_clique:
        return predicted_classical(ClassicalKind.CLIQUE, n, pattern.order)
    s, t = pattern.s, pattern.t
    if s == 1:
        return predicted_classical(ClassicalKind.STAR, n, t)
    if s == 2 and t == 2:
        return predicted_classical(ClassicalKind.K22, n)
    if s == 2 and n >= t + 2:
        return predicted_wsat_k2t(n, t)
    if n == s + t:
        return predicted_wsat_diag(s, t)
    return None
