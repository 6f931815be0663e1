"""Graph construction operators, subgraph matching and isomorphism-class helpers"""
import itertools
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .exceptions import GraphConstructionError
from .graph import Graph, PartitionSpec, make_graph

STANDARD_KINDS = ('cycle', 'path', 'complete', 'empty')


def join(g: Graph, h: Graph) -> Graph:
    """G's vertices keep their labels, H's are offset by |V(G)|"""
    m = g.vertex_count
    edges = list(g.edges)
    edges += [(u + m, v + m) for u, v in h.edges]
    edges += [(u, m + v) for u in range(m) for v in range(h.vertex_count)]
    return make_graph(m + h.vertex_count, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    edges = []
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.vertex_count
    return make_graph(offset, edges)


def copies(g: Graph, k: int) -> Graph:
    """kG: k disjoint copies of G"""
    if k < 0:
        raise GraphConstructionError(f'negative multiplicity {k}')
    return disjoint_union(*([g] * k))


def complete_multipartite(spec: PartitionSpec) -> Graph:
    owner = [i for i, size in enumerate(spec.parts) for _ in range(size)]
    n = len(owner)
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]])


def standard_graph(kind: str, n: int) -> Graph:
    if kind not in STANDARD_KINDS:
        raise GraphConstructionError(f'unknown standard graph kind "{kind}"')
    if n < 1:
        raise GraphConstructionError(f'{kind} graph needs at least one vertex')
    if kind == 'cycle':
        if n < 3:
            raise GraphConstructionError(f'cycle needs at least 3 vertices, got {n}')
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == 'path':
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == 'complete':
        return make_graph(n, itertools.combinations(range(n), 2))
    return make_graph(n, [])


def subgraph_map(g: Graph, pattern: Graph) -> Optional[Dict[int, int]]:
    """Injective map pattern -> G carrying pattern edges onto G edges (not necessarily induced)"""
    if pattern.vertex_count > g.vertex_count or pattern.edge_count > g.edge_count:
        return None
    if pattern.max_degree > g.max_degree:
        return None
    matcher = GraphMatcher(g.to_networkx(), pattern.to_networkx())
    for mapping in matcher.subgraph_monomorphisms_iter():
        return {p: host for host, p in sorted(mapping.items())}
    return None


def contains_subgraph(g: Graph, pattern: Graph) -> bool:
    return subgraph_map(g, pattern) is not None


def automorphisms(g: Graph, limit: int) -> Optional[List[Tuple[int, ...]]]:
    """All automorphisms as vertex permutations, or None when the group exceeds limit"""
    nx_graph = g.to_networkx()
    result = []
    for mapping in GraphMatcher(nx_graph, nx_graph).isomorphisms_iter():
        result.append(tuple(mapping[v] for v in range(g.vertex_count)))
        if len(result) > limit:
            return None
    return sorted(result)


def canonical_form(g: Graph) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """Lexicographically least relabeled edge list over relabelings that sort vertices by degree"""
    classes: Dict[int, List[int]] = {}
    for v in g.vertices:
        classes.setdefault(g.degree(v), []).append(v)
    ordered = [classes[d] for d in sorted(classes, reverse=True)]
    best = None
    for choice in itertools.product(*(itertools.permutations(c) for c in ordered)):
        order = [v for block in choice for v in block]
        position = {v: i for i, v in enumerate(order)}
        key = tuple(sorted(tuple(sorted((position[u], position[v]))) for u, v in g.edges))
        if best is None or key < best:
            best = key
    return g.vertex_count, best or ()


def isomorphism_classes(vertex_count: int) -> Iterator[Graph]:
    """One representative per isomorphism class on exactly vertex_count vertices (up to 7)"""
    if not 0 <= vertex_count <= 7:
        raise GraphConstructionError('graph atlas covers 0..7 vertices')
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == vertex_count:
            yield Graph.from_networkx(g)
