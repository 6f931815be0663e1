"""Exact 1-planarity and outer-1-planarity by branch-and-bound over crossing plans"""
import itertools
import logging
import math
import time
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from model.crossing_plan import CrossingPlan, EdgePair, independent, pair_key
from model.exceptions import PlanError
from model.graph import Edge, Graph, edge_key
from model.operators import automorphisms
from model.planarization import Planarization, build_planarization
from model.verdict import (Answer, OnePlanarWitness, Refutation, RefutationKind, SearchBudget, SearchStats,
                           Verdict)
from .planarity import common_face_embedding, is_planar, is_valid_embedding, outer_vertices

log = logging.getLogger(__name__)

DEFAULT_MAX_AUTOMORPHISMS = 5000

Pairs = FrozenSet[EdgePair]
Permutation = Tuple[int, ...]


class BudgetExhausted(Exception):
    pass


def planarize(graph: Graph, plan: CrossingPlan) -> Planarization:
    plan.validate_for(graph)
    planarization = build_planarization(graph, plan.pairs)
    false = set(planarization.false_vertices)
    for x in false:
        if planarization.graph.degree(x) != 4:
            raise PlanError(f'false vertex {x} must have degree 4')
        if planarization.graph.adjacency[x] & false:
            raise PlanError('false vertices must not be adjacent')
    return planarization


def one_planar_edge_bound(vertex_count: int) -> Optional[int]:
    return 4 * vertex_count - 8 if vertex_count >= 3 else None


def outer_one_planar_edge_bound(vertex_count: int) -> Optional[int]:
    return math.ceil(5 * vertex_count / 2) - 4 if vertex_count >= 2 else None


def edge_order(graph: Graph) -> List[Edge]:
    """Descending endpoint-degree sum, ties by canonical edge order"""
    return sorted(graph.edges, key=lambda e: (-(graph.degree(e[0]) + graph.degree(e[1])), e))


def kuratowski_subgraph(graph: nx.Graph, removal_order: Sequence[Edge]) -> nx.Graph:
    """Edge-minimal non-planar subgraph, a subdivision of K5 or K3,3.

    Edges are tried for removal in the given order, so the ones listed first are the least likely
    to remain. Every edge of the graph must be listed.
    """
    kuratowski = graph.copy()
    for u, v in removal_order:
        kuratowski.remove_edge(u, v)
        if kuratowski.degree(u) == 0 or kuratowski.degree(v) == 0:
            continue
        if nx.check_planarity(kuratowski)[0]:
            kuratowski.add_edge(u, v)
    kuratowski.remove_nodes_from([v for v in graph if kuratowski.degree(v) == 0])
    return kuratowski


def kuratowski_paths(kuratowski: nx.Graph) -> List[Tuple[FrozenSet[int], List[Edge]]]:
    """End vertices and edges of every subdivided edge of a Kuratowski subgraph"""
    branch = {v for v in kuratowski if kuratowski.degree(v) > 2}
    seen: Set[Edge] = set()
    paths = []
    for b in sorted(branch):
        for w in sorted(kuratowski[b]):
            if edge_key(b, w) in seen:
                continue
            walk = [b, w]
            while walk[-1] not in branch:
                walk.append(next(u for u in kuratowski[walk[-1]] if u != walk[-2]))
            edges = [edge_key(x, y) for x, y in zip(walk, walk[1:])]
            seen.update(edges)
            paths.append((frozenset((walk[0], walk[-1])), edges))
    return paths


def _image(perm: Permutation, pair: EdgePair) -> EdgePair:
    (a, b), (c, d) = pair
    return pair_key((perm[a], perm[b]), (perm[c], perm[d]))


class PlanSearch:
    """Search over crossing plans that commits one crossing per node.

    A node holds the committed pairs and the pairs excluded by earlier siblings. When its
    planarization is not planar, every completion has to cross two uncrossed edges of one
    Kuratowski subgraph, lying on two of its paths that share no end vertex; the children commit
    those pairs in turn, each child excluding the pairs its elder siblings committed. Siblings
    that an automorphism fixing the node maps onto an elder sibling are skipped.
    """

    def __init__(self, graph: Graph, budget: SearchBudget, outer: bool = False, prune: bool = True,
                 max_automorphisms: int = DEFAULT_MAX_AUTOMORPHISMS):
        self.graph = graph
        self.budget = budget
        self.outer = outer
        self.prune = prune
        self.max_automorphisms = max_automorphisms
        self.rank = {e: i for i, e in enumerate(edge_order(graph))}
        self.stats = SearchStats()
        self._started = 0.0
        self._symmetries: Optional[List[Permutation]] = None

        n, m = graph.vertex_count, graph.edge_count
        if outer:
            self.required_crossings = m - 2 * n + 3 if n >= 2 else 0
        else:
            self.required_crossings = m - 3 * n + 6 if n >= 3 else 0
        self.max_crossings = max(n - 2, 0)

    @property
    def log(self):
        return logging.getLogger(f'{__name__}.{self.__class__.__name__}')

    @property
    def symmetries(self) -> List[Permutation]:
        """Non-identity automorphisms; empty when pruning is off or the group is over the cap"""
        if self._symmetries is None:
            perms = automorphisms(self.graph, self.max_automorphisms) if self.prune else None
            if perms is None and self.prune:
                self.log.info(f'{self.graph!r}: more than {self.max_automorphisms} automorphisms, '
                              f'symmetry pruning disabled')
            identity = tuple(self.graph.vertices)
            self._symmetries = [p for p in perms or [] if p != identity]
        return self._symmetries

    def run(self) -> Optional[CrossingPlan]:
        self._started = time.monotonic()
        try:
            found = self._search(frozenset(), frozenset(), None)
            return None if found is None else CrossingPlan.of(found)
        finally:
            self.stats.elapsed = time.monotonic() - self._started

    def _tick(self):
        self.stats.nodes += 1
        if self.stats.nodes > self.budget.max_nodes:
            raise BudgetExhausted(f'node budget {self.budget.max_nodes} exhausted')
        if time.monotonic() - self._started > self.budget.max_seconds:
            raise BudgetExhausted(f'time budget {self.budget.max_seconds}s exhausted')

    def _planarization(self, committed: Pairs, uncrossed: Iterable[Edge]) -> nx.Graph:
        """True vertices 0..n-1, false vertices n.. in pair order, the apex last in outer mode"""
        n = self.graph.vertex_count
        planarization = nx.Graph()
        planarization.add_nodes_from(self.graph.vertices)
        for x, (e, f) in enumerate(sorted(committed), start=n):
            planarization.add_edges_from((v, x) for v in e + f)
        planarization.add_edges_from(uncrossed)
        if self.outer:
            apex = n + len(committed)
            planarization.add_edges_from((v, apex) for v in self.graph.vertices)
        return planarization

    def _allowed_partners(self, crossed: Set[Edge], excluded: Pairs) -> Dict[Edge, List[Edge]]:
        uncrossed = [e for e in self.graph.edges if e not in crossed]
        return {e: [f for f in uncrossed if independent(e, f) and pair_key(e, f) not in excluded]
                for e in uncrossed}

    def _within_bounds(self, committed: Pairs, allowed: Dict[Edge, List[Edge]]) -> bool:
        """Counting bounds every completion has to meet.

        The crossed edges, split at their false vertices, form a simple bipartite plane graph,
        so c crossings need at least c + 2 true end vertices.
        """
        c = len(committed)
        if c > self.max_crossings:
            return False
        if c and c > len({v for pair in committed for e in pair for v in e}) - 2:
            return False
        crossable = sum(1 for partners in allowed.values() if partners)
        return c + min(crossable // 2, self.max_crossings - c) >= self.required_crossings

    def _candidates(self, kuratowski: nx.Graph, allowed: Dict[Edge, List[Edge]]) -> List[EdgePair]:
        usable = [(ends, [e for e in edges if allowed.get(e)]) for ends, edges in kuratowski_paths(kuratowski)]
        if self.prune:
            path_pairs = ((a, b) for (ends_a, a), (ends_b, b) in itertools.combinations(usable, 2)
                          if not ends_a & ends_b)
        else:
            everything = [e for _, edges in usable for e in edges]
            path_pairs = [(everything, everything)]
        result = {pair_key(e, f) for a, b in path_pairs for e in a for f in b if f in allowed[e]}
        return sorted(result, key=lambda p: (self.rank[p[0]] + self.rank[p[1]], p))

    def _search(self, committed: Pairs, excluded: Pairs,
                symmetries: Optional[List[Permutation]]) -> Optional[Pairs]:
        self._tick()
        crossed = {e for pair in committed for e in pair}
        allowed = self._allowed_partners(crossed, excluded)
        if self.prune and not self._within_bounds(committed, allowed):
            self.stats.pruned += 1
            return None

        planarization = self._planarization(committed, allowed)
        if nx.check_planarity(planarization)[0]:
            return committed
        fixed = [e for e, partners in allowed.items() if not partners]
        if self.prune and len(fixed) < len(allowed) and \
                not nx.check_planarity(self._planarization(committed, fixed))[0]:
            self.stats.pruned += 1
            return None

        crossable = sorted((e for e in allowed if allowed[e]), key=lambda e: (-len(allowed[e]), self.rank[e]))
        rest = [e for e in planarization.edges if edge_key(*e) not in allowed or not allowed[edge_key(*e)]]
        candidates = self._candidates(kuratowski_subgraph(planarization, crossable + rest), allowed)

        if symmetries is None:
            symmetries = self.symmetries
        elder: List[EdgePair] = []
        for pair in candidates:
            elder_set = set(elder)
            if any(_image(perm, pair) in elder_set for perm in symmetries):
                self.stats.pruned += 1
                elder.append(pair)
                continue
            fixing = [perm for perm in symmetries
                      if _image(perm, pair) == pair and all(_image(perm, q) in elder_set for q in elder)]
            found = self._search(committed | {pair}, excluded | elder_set, fixing)
            if found is not None:
                return found
            elder.append(pair)
        return None


def _witness_for(graph: Graph, plan: CrossingPlan, outer: bool) -> OnePlanarWitness:
    planarization = planarize(graph, plan)
    if outer:
        embedding = common_face_embedding(planarization.graph, planarization.true_vertices)
    else:
        embedding = is_planar(planarization.graph)
    assert embedding is not None, 'accepted plan must planarize'
    return OnePlanarWitness(plan, embedding)


def _decide(graph: Graph, budget: SearchBudget, outer: bool, prune: bool, max_automorphisms: int) -> Verdict:
    kind = 'outer-1-planarity' if outer else '1-planarity'
    bound = (outer_one_planar_edge_bound if outer else one_planar_edge_bound)(graph.vertex_count)
    if prune and bound is not None and graph.edge_count > bound:
        log.info(f'{graph!r}: {kind} refuted by edge bound {graph.edge_count} > {bound}')
        return Verdict(Answer.NOT_ONE_PLANAR,
                       refutation=Refutation(RefutationKind.EDGE_BOUND, f'{graph.edge_count} > {bound}'))

    search = PlanSearch(graph, budget, outer=outer, prune=prune, max_automorphisms=max_automorphisms)
    log.info(f'{graph!r}: starting {kind} search')
    try:
        plan = search.run()
    except BudgetExhausted as e:
        log.warning(f'{graph!r}: {kind} search inconclusive after {search.stats.nodes} nodes: {e}')
        return Verdict(Answer.INCONCLUSIVE, stats=search.stats)

    log.info(f'{graph!r}: {kind} search finished after {search.stats.nodes} nodes')
    if plan is None:
        return Verdict(Answer.NOT_ONE_PLANAR, refutation=Refutation(RefutationKind.SEARCH_EXHAUSTED),
                       stats=search.stats)
    return Verdict(Answer.ONE_PLANAR, witness=_witness_for(graph, plan, outer), stats=search.stats)


def is_one_planar(graph: Graph, budget: SearchBudget = SearchBudget(), prune: bool = True,
                  max_automorphisms: int = DEFAULT_MAX_AUTOMORPHISMS) -> Verdict:
    return _decide(graph, budget, outer=False, prune=prune, max_automorphisms=max_automorphisms)


def is_outer_one_planar(graph: Graph, budget: SearchBudget = SearchBudget(), prune: bool = True,
                        max_automorphisms: int = DEFAULT_MAX_AUTOMORPHISMS) -> Verdict:
    return _decide(graph, budget, outer=True, prune=prune, max_automorphisms=max_automorphisms)


def validate_witness(graph: Graph, witness: OnePlanarWitness, outer: bool = False) -> bool:
    """Independent re-check of a witness; shares no state with the search"""
    try:
        planarization = planarize(graph, witness.plan)
    except PlanError:
        return False
    embedding = witness.planarization_embedding
    if not is_valid_embedding(planarization.graph, embedding):
        return False
    if outer and not set(planarization.true_vertices) <= outer_vertices(embedding):
        return False
    return True


def enumerate_crossing_plans(graph: Graph) -> Iterator[CrossingPlan]:
    """Every valid crossing plan, in canonical edge order"""
    edges = list(graph.edges)
    used = [False] * len(edges)
    pairs = []

    def extend(i: int):
        while i < len(edges) and used[i]:
            i += 1
        if i == len(edges):
            yield CrossingPlan.of(pairs)
            return
        used[i] = True
        yield from extend(i + 1)
        for j in range(i + 1, len(edges)):
            if used[j] or not independent(edges[i], edges[j]):
                continue
            used[j] = True
            pairs.append((edges[i], edges[j]))
            yield from extend(i + 1)
            pairs.pop()
            used[j] = False
        used[i] = False

    yield from extend(0)


def naive_verdict(graph: Graph, outer: bool = False) -> Answer:
    """Reference answer by trying every crossing plan outright"""
    for plan in enumerate_crossing_plans(graph):
        planarization = planarize(graph, plan)
        if outer:
            accepted = common_face_embedding(planarization.graph, planarization.true_vertices) is not None
        else:
            accepted = is_planar(planarization.graph) is not None
        if accepted:
            return Answer.ONE_PLANAR
    return Answer.NOT_ONE_PLANAR
