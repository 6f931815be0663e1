from dataclasses import dataclass
from functools import cached_property
from typing import Tuple, FrozenSet, Iterable, Sequence

import networkx as nx

from .exceptions import GraphConstructionError

Edge = Tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..vertex_count-1 with canonically ordered edges"""

    vertex_count: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphConstructionError(f'negative vertex count {self.vertex_count}')
        previous = None
        for u, v in self.edges:
            if u == v:
                raise GraphConstructionError(f'self-loop at vertex {u}')
            if u > v:
                raise GraphConstructionError(f'edge ({u}, {v}) is not canonical')
            if v >= self.vertex_count or u < 0:
                raise GraphConstructionError(f'edge ({u}, {v}) out of range for {self.vertex_count} vertices')
            if previous is not None and (u, v) <= previous:
                raise GraphConstructionError('edges must be sorted and unique')
            previous = (u, v)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set

    def to_networkx(self) -> nx.Graph:
        """Fresh networkx copy; callers may mutate it"""
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> 'Graph':
        index = {node: i for i, node in enumerate(sorted(g.nodes))}
        return make_graph(len(index), [(index[u], index[v]) for u, v in g.edges])

    def subgraph(self, keep: Iterable[int]) -> 'Graph':
        """Induced subgraph, relabeled in increasing vertex order"""
        kept = sorted(set(keep))
        index = {v: i for i, v in enumerate(kept)}
        return make_graph(len(kept), [(index[u], index[v]) for u, v in self.edges if u in index and v in index])

    def without_edge(self, edge: Edge) -> 'Graph':
        return Graph(self.vertex_count, tuple(e for e in self.edges if e != edge_key(*edge)))

    def with_edges(self, edges: Iterable[Edge], extra_vertices: int = 0) -> 'Graph':
        return make_graph(self.vertex_count + extra_vertices, list(self.edges) + list(edges))

    def __repr__(self):
        return f'Graph[n={self.vertex_count}; m={self.edge_count}]'


def make_graph(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    canonical = set()
    for pair in edges:
        if len(pair) != 2:
            raise GraphConstructionError(f'edge {pair!r} must have exactly two endpoints')
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise GraphConstructionError(f'self-loop at vertex {u}')
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphConstructionError(f'edge ({u}, {v}) out of range for {vertex_count} vertices')
        canonical.add(edge_key(u, v))
    return Graph(vertex_count, tuple(sorted(canonical)))


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes of a complete multipartite graph, non-increasing"""

    parts: Tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise GraphConstructionError('partition needs at least one part')
        if any(p < 1 for p in self.parts):
            raise GraphConstructionError(f'part sizes must be positive: {self.parts}')
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise GraphConstructionError(f'part sizes must be non-increasing: {self.parts}')

    @classmethod
    def of(cls, *parts: int) -> 'PartitionSpec':
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def vertex_count(self) -> int:
        return sum(self.parts)

    @property
    def label(self) -> str:
        if all(p == 1 for p in self.parts):
            return f'K{self.k}'
        return 'K_{' + ','.join(map(str, self.parts)) + '}'

    def merged(self, other: 'PartitionSpec') -> 'PartitionSpec':
        """Parts of the join of two complete multipartite graphs"""
        return PartitionSpec.of(*(self.parts + other.parts))
