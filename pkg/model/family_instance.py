from dataclasses import dataclass
from typing import Any, Optional, Tuple

from .graph import Graph
from .verdict import OnePlanarWitness


@dataclass(frozen=True)
class ExpectedProperty:
    """Machine-checkable claim about a family instance.

    kind is one of: edge_count (value int), one_planar / outer_one_planar (value bool),
    join_one_planar (factor name, value bool), witness_crossings (value int).
    """

    kind: str
    value: Any
    factor: str = ''


@dataclass(frozen=True)
class FamilyInstance:
    name: str
    graph: Graph
    provenance: str
    witness: Optional[OnePlanarWitness] = None
    expected_properties: Tuple[ExpectedProperty, ...] = ()
    join_witness: Optional[OnePlanarWitness] = None
    join_factor: str = ''

    def expected(self, kind: str, factor: str = '') -> Optional[Any]:
        for prop in self.expected_properties:
            if prop.kind == kind and prop.factor == factor:
                return prop.value
        return None
