"""A module which defines graph families and the registry that builds them."""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from wsat.core.base import ConstructionError, FamilyName
from wsat.graph.base import Edge, Graph
from wsat.pattern.base import PatternSpec, Witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyInstance:
    """A constructed graph together with the ordering its proof supplies.

    `suggested_order`, when present, is a permutation of the missing edges
    of `graph` that saturates it under `pattern`; `suggested_witnesses`
    aligns with it step by step.
    """

    graph: Graph
    name: FamilyName
    params: dict[str, int] = field(default_factory=dict)
    pattern: Optional[PatternSpec] = None
    suggested_order: Optional[tuple[Edge, ...]] = None
    suggested_witnesses: Optional[tuple[Witness, ...]] = None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "family": self.name.value,
            "params": dict(self.params),
        }
        if self.pattern is not None:
            data["pattern"] = self.pattern.to_dict()
        if self.suggested_order is not None:
            data["order"] = [edge.to_list() for edge in self.suggested_order]
        return data


FamilyBuilder = Callable[..., FamilyInstance]


class FamilyManager:
    """A class to manage the registered construction families."""

    family_registry: dict[FamilyName, FamilyBuilder] = {}

    @staticmethod
    def register_family(
        name: FamilyName,
    ) -> Callable[[FamilyBuilder], FamilyBuilder]:
        """Register a builder for `name` with the FamilyManager."""

        def decorator(builder: FamilyBuilder) -> FamilyBuilder:
            FamilyManager.family_registry[name] = builder
            return builder

        return decorator

    @staticmethod
    def names() -> list[str]:
        return sorted(name.value for name in FamilyManager.family_registry)

    @staticmethod
    def get_builder(name: str | FamilyName) -> FamilyBuilder:
        try:
            family = FamilyName(name)
        except ValueError:
            raise ConstructionError(
                f"Unknown family '{name}'. Available: {', '.join(FamilyManager.names())}."
            )
        builder = FamilyManager.family_registry.get(family)
        if not builder:
            raise ConstructionError(f"Family '{family.value}' has no builder.")
        return builder

    @staticmethod
    def build(name: str | FamilyName, **params: int) -> FamilyInstance:
        """Build a family instance from keyword parameters."""
        builder = FamilyManager.get_builder(name)
        logger.debug(f"Building family '{name}' with params {params}.")
        try:
            return builder(**params)
        except TypeError as e:
            raise ConstructionError(
                f"Bad parameters {params} for family '{name}': {e}"
            )


register_family = FamilyManager.register_family
