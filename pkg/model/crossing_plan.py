from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Tuple

from .exceptions import PlanError
from .graph import Edge, Graph, edge_key

EdgePair = Tuple[Edge, Edge]


def pair_key(e: Iterable[int], f: Iterable[int]) -> EdgePair:
    a, b = edge_key(*e), edge_key(*f)
    return (a, b) if a < b else (b, a)


def independent(e: Edge, f: Edge) -> bool:
    return not set(e) & set(f)


def _check_pairs(graph: Graph, pairs: Iterable[EdgePair]):
    for e, f in pairs:
        for edge in (e, f):
            if edge not in graph.edge_set:
                raise PlanError(f'edge {edge} is not an edge of {graph!r}')
        if e == f:
            raise PlanError(f'edge {e} cannot cross itself')
        if not independent(e, f):
            raise PlanError(f'adjacent edges {e} and {f} cannot cross')


@dataclass(frozen=True)
class CrossingPlan:
    """Pairs of independent edges that cross; every edge crosses at most once"""

    pairs: Tuple[EdgePair, ...] = ()

    @classmethod
    def of(cls, pairs: Iterable[Tuple[Iterable[int], Iterable[int]]]) -> 'CrossingPlan':
        return cls(tuple(sorted({pair_key(e, f) for e, f in pairs})))

    @property
    def crossing_count(self) -> int:
        return len(self.pairs)

    @property
    def partners(self) -> Dict[Edge, Edge]:
        result = {}
        for e, f in self.pairs:
            result[e] = f
            result[f] = e
        return result

    @property
    def crossed_edges(self) -> FrozenSet[Edge]:
        return frozenset(self.partners)

    def validate_for(self, graph: Graph):
        _check_pairs(graph, self.pairs)
        seen = set()
        for e, f in self.pairs:
            for edge in (e, f):
                if edge in seen:
                    raise PlanError(f'edge {edge} is crossed more than once')
                seen.add(edge)


@dataclass(frozen=True)
class MultiCrossingPlan:
    """Good-drawing crossing structure: edges may cross several times, each pair at most once.

    orders holds, for every edge crossed at least twice, its partners listed along the edge
    from its smaller endpoint to its larger one.
    """

    pairs: Tuple[EdgePair, ...] = ()
    orders: Tuple[Tuple[Edge, Tuple[Edge, ...]], ...] = ()

    @classmethod
    def of(cls, pairs, orders: Dict[Edge, Iterable[Edge]] = None) -> 'MultiCrossingPlan':
        orders = orders or {}
        return cls(tuple(sorted({pair_key(e, f) for e, f in pairs})),
                   tuple(sorted((edge_key(*e), tuple(edge_key(*p) for p in ps)) for e, ps in orders.items())))

    @property
    def crossing_count(self) -> int:
        return len(self.pairs)

    def partners(self) -> Dict[Edge, Tuple[Edge, ...]]:
        result: Dict[Edge, list] = {}
        for e, f in self.pairs:
            result.setdefault(e, []).append(f)
            result.setdefault(f, []).append(e)
        return {e: tuple(sorted(ps)) for e, ps in result.items()}

    def order_of(self, edge: Edge) -> Tuple[Edge, ...]:
        return dict(self.orders).get(edge, self.partners().get(edge, ()))

    def validate_for(self, graph: Graph):
        _check_pairs(graph, self.pairs)
        if len(set(self.pairs)) != len(self.pairs):
            raise PlanError('repeated crossing pair')
        partners = self.partners()
        multi = {e for e, ps in partners.items() if len(ps) >= 2}
        ordered = dict(self.orders)
        if set(ordered) != multi:
            raise PlanError(f'orders must cover exactly the multiply crossed edges {sorted(multi)}')
        for e, order in ordered.items():
            if sorted(order) != list(partners[e]):
                raise PlanError(f'order for {e} is not a permutation of its partners')

    @classmethod
    def from_crossing_plan(cls, plan: CrossingPlan) -> 'MultiCrossingPlan':
        return cls(plan.pairs, ())
