from dataclasses import dataclass
from typing import FrozenSet, List, NamedTuple, Optional, Set, Tuple

import networkx as nx

from .graph import Edge, edge_key

HalfEdge = Tuple[int, int]


class Face(NamedTuple):
    vertices: Tuple[int, ...]
    half_edges: Tuple[HalfEdge, ...]

    @property
    def edges(self) -> FrozenSet[Edge]:
        return frozenset(edge_key(u, v) for u, v in self.half_edges)


@dataclass(frozen=True)
class PlaneEmbedding:
    """Rotation system (clockwise neighbor order per vertex) plus the designated outer face.

    outer_face holds one half-edge per connected component with edges; components are
    drawn side by side, so the outer region is bounded by all of these walks.
    """

    rotation: Tuple[Tuple[int, ...], ...]
    outer_face: Tuple[HalfEdge, ...] = ()

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    @classmethod
    def from_rotation(cls, rotation, outer_face: Optional[Tuple[HalfEdge, ...]] = None) -> 'PlaneEmbedding':
        rotation = tuple(tuple(r) for r in rotation)
        if outer_face is None:
            outer_face = default_outer_face(rotation)
        return cls(rotation, tuple(outer_face))

    @classmethod
    def from_networkx(cls, embedding: nx.PlanarEmbedding, vertex_count: int) -> 'PlaneEmbedding':
        data = embedding.get_data()
        return cls.from_rotation([data.get(v, []) for v in range(vertex_count)])

    def to_networkx(self) -> nx.PlanarEmbedding:
        embedding = nx.PlanarEmbedding()
        embedding.add_nodes_from(range(self.vertex_count))
        embedding.set_data({v: list(r) for v, r in enumerate(self.rotation)})
        return embedding

    def with_outer_face(self, outer_face: Tuple[HalfEdge, ...]) -> 'PlaneEmbedding':
        return PlaneEmbedding(self.rotation, tuple(outer_face))

    def to_dict(self) -> dict:
        return {'rotation': {str(v): list(r) for v, r in enumerate(self.rotation)},
                'outer_face': [list(h) for h in self.outer_face]}


def _components(rotation) -> List[List[int]]:
    seen: Set[int] = set()
    result = []
    for start in range(len(rotation)):
        if start in seen:
            continue
        stack, component = [start], []
        seen.add(start)
        while stack:
            v = stack.pop()
            component.append(v)
            for w in rotation[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        result.append(sorted(component))
    return result


def default_outer_face(rotation) -> Tuple[HalfEdge, ...]:
    """Per component, the face traversing its lexicographically smallest half-edge"""
    outer = []
    for component in _components(rotation):
        half_edges = [(v, w) for v in component for w in rotation[v]]
        if half_edges:
            outer.append(min(half_edges))
    return tuple(outer)


def components(embedding: PlaneEmbedding) -> List[List[int]]:
    return _components(embedding.rotation)
