from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .crossing_plan import EdgePair
from .embedding import PlaneEmbedding
from .graph import Edge, Graph, make_graph


@dataclass(frozen=True)
class Planarization:
    """Plane graph obtained by replacing every crossing with a false vertex.

    True vertices keep their labels 0..n-1; the false vertex of the i-th pair (in canonical
    pair order) is labeled n + i.
    """

    graph: Graph
    truth_mark: Tuple[bool, ...]
    pairs: Tuple[EdgePair, ...] = ()
    embedding: Optional[PlaneEmbedding] = None

    @property
    def true_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v, mark in enumerate(self.truth_mark) if mark)

    @property
    def false_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v, mark in enumerate(self.truth_mark) if not mark)

    @property
    def crossing_count(self) -> int:
        return len(self.pairs)

    def false_vertex_of(self, pair: EdgePair) -> int:
        return len(self.true_vertices) + self.pairs.index(pair)

    def with_embedding(self, embedding: PlaneEmbedding) -> 'Planarization':
        return Planarization(self.graph, self.truth_mark, self.pairs, embedding)


def build_planarization(graph: Graph, pairs: Sequence[EdgePair],
                        orders: Optional[Dict[Edge, Iterable[Edge]]] = None) -> Planarization:
    """Split every crossed edge into a path through its false vertices.

    Pairs must already be validated and canonically sorted. orders gives, per edge, its
    crossing partners from the smaller endpoint outwards; missing edges use sorted partner order.
    """
    n = graph.vertex_count
    label = {pair: n + i for i, pair in enumerate(pairs)}
    along: Dict[Edge, list] = {}
    for pair in pairs:
        e, f = pair
        along.setdefault(e, []).append((f, label[pair]))
        along.setdefault(f, []).append((e, label[pair]))

    orders = orders or {}
    edges = []
    for edge in graph.edges:
        if edge not in along:
            edges.append(edge)
            continue
        by_partner = dict(along[edge])
        partner_order = list(orders.get(edge, sorted(by_partner)))
        path = [edge[0]] + [by_partner[p] for p in partner_order] + [edge[1]]
        edges.extend(zip(path, path[1:]))

    return Planarization(make_graph(n + len(pairs), edges),
                         tuple([True] * n + [False] * len(pairs)),
                         tuple(pairs))
