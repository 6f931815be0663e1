"""Exact crossing numbers of small graphs by iterative deepening over good-drawing planarizations"""
import itertools
import logging
import time
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from model.crossing_plan import EdgePair, MultiCrossingPlan, independent, pair_key
from model.graph import Edge, Graph, edge_key
from model.operators import automorphisms
from model.planarization import Planarization, build_planarization
from model.verdict import CrResult, SearchBudget, SearchStats
from .planarity import is_planar
from .solver import DEFAULT_MAX_AUTOMORPHISMS, BudgetExhausted, is_one_planar

log = logging.getLogger(__name__)

FALLBACK_MAX_NODES = 20_000
FALLBACK_MAX_SECONDS = 30.0

PairPermutation = Dict[EdgePair, EdgePair]


def planarize_multi(graph: Graph, plan: MultiCrossingPlan) -> Planarization:
    plan.validate_for(graph)
    return build_planarization(graph, plan.pairs, dict(plan.orders))


def candidate_pairs(graph: Graph) -> List[EdgePair]:
    return [pair_key(e, f) for e, f in itertools.combinations(graph.edges, 2) if independent(e, f)]


def crossing_lower_bound(graph: Graph) -> int:
    """Fewest crossings compatible with the planar edge bound of the planarization"""
    n, m = graph.vertex_count, graph.edge_count
    return max(0, m - 3 * n + 6) if n >= 3 else 0


def _pair_permutations(graph: Graph, pairs: Sequence[EdgePair], limit: int) -> List[PairPermutation]:
    vertex_perms = automorphisms(graph, limit)
    if vertex_perms is None:
        log.info(f'{graph!r}: automorphism group exceeds {limit}, symmetry reduction disabled')
        return []
    result = []
    for perm in vertex_perms:
        if list(perm) == list(range(graph.vertex_count)):
            continue
        result.append({p: pair_key(edge_key(perm[p[0][0]], perm[p[0][1]]),
                                   edge_key(perm[p[1][0]], perm[p[1][1]])) for p in pairs})
    return result


def reduced_pair_sets(candidates: Sequence[EdgePair], k: int,
                      group: List[PairPermutation]) -> Iterator[Tuple[EdgePair, ...]]:
    """k-subsets of candidates, one or more per orbit under the group, in lexicographic order.

    The smallest pair of a yielded set is the least element of its orbit; the remaining pairs are
    chosen the same way under the stabilizer of that pair.
    """
    if k == 0:
        yield ()
        return
    if not group:
        yield from itertools.combinations(candidates, k)
        return
    rep = {q: min(g[q] for g in group) for q in candidates}
    for i, r in enumerate(candidates):
        if rep[r] < r:
            continue
        rest = [q for q in candidates[i + 1:] if min(rep[q], q) >= r]
        if len(rest) < k - 1:
            continue
        stabilizer = [g for g in group if g[r] == r]
        for tail in reduced_pair_sets(rest, k - 1, stabilizer):
            yield (r,) + tail


class CrossingSearch:
    def __init__(self, graph: Graph, budget: SearchBudget, max_automorphisms: int = DEFAULT_MAX_AUTOMORPHISMS,
                 use_symmetry: bool = True):
        self.graph = graph
        self.budget = budget
        self.candidates = candidate_pairs(graph)
        self.group = _pair_permutations(graph, self.candidates, max_automorphisms) if use_symmetry else []
        self.stats = SearchStats()
        self._started = time.monotonic()

    @property
    def log(self):
        return logging.getLogger(f'{__name__}.{self.__class__.__name__}')

    def _tick(self):
        self.stats.nodes += 1
        if self.stats.nodes > self.budget.max_nodes:
            raise BudgetExhausted(f'node budget {self.budget.max_nodes} exhausted')
        if self.stats.nodes % 64 == 0 and time.monotonic() - self._started > self.budget.max_seconds:
            raise BudgetExhausted(f'time budget {self.budget.max_seconds}s exhausted')

    def _core_planar(self, pairs: Sequence[EdgePair], partners: Dict[Edge, List[Edge]]) -> bool:
        """Planarity with multiply crossed edges removed; needed by every choice of crossing orders"""
        multi = {e for e, ps in partners.items() if len(ps) >= 2}
        core = nx.Graph()
        core.add_nodes_from(self.graph.vertices)
        core.add_edges_from(e for e in self.graph.edges if e not in multi and e not in partners)
        for index, (e, f) in enumerate(pairs):
            if e in multi or f in multi:
                core.add_edges_from(x for x in (e, f) if x not in multi)
                continue
            crossing = ('cross', index)
            core.add_edges_from((crossing, v) for v in e + f)
        return nx.check_planarity(core)[0]

    def search_level(self, k: int) -> Optional[MultiCrossingPlan]:
        for pairs in reduced_pair_sets(self.candidates, k, self.group):
            self._tick()
            partners: Dict[Edge, List[Edge]] = {}
            for e, f in pairs:
                partners.setdefault(e, []).append(f)
                partners.setdefault(f, []).append(e)
            if not self._core_planar(pairs, partners):
                self.stats.pruned += 1
                continue
            multi = sorted(e for e, ps in partners.items() if len(ps) >= 2)
            choices = [itertools.permutations(sorted(partners[e])) for e in multi]
            for orders in itertools.product(*choices):
                if orders:
                    self._tick()
                plan = MultiCrossingPlan(tuple(pairs), tuple(zip(multi, orders)))
                planarization = build_planarization(self.graph, plan.pairs, dict(plan.orders))
                if nx.check_planarity(planarization.graph.to_networkx())[0]:
                    return plan
        return None


def crossing_number(graph: Graph, max_k: int, budget: SearchBudget = SearchBudget(),
                    max_automorphisms: int = DEFAULT_MAX_AUTOMORPHISMS, use_symmetry: bool = True) -> CrResult:
    if max_k < 0:
        raise ValueError(f'max_k must be non-negative, got {max_k}')
    search = CrossingSearch(graph, budget, max_automorphisms, use_symmetry)
    lower = crossing_lower_bound(graph)
    log.info(f'{graph!r}: crossing number search from level {lower} up to {max_k}')

    k = lower
    try:
        while k <= max_k:
            plan = search.search_level(k)
            if plan is not None:
                search.stats.elapsed = time.monotonic() - search._started
                embedding = is_planar(planarize_multi(graph, plan).graph)
                log.info(f'{graph!r}: crossing number {k} after {search.stats.nodes} nodes')
                return CrResult(k, k, plan, embedding, search.stats)
            log.info(f'{graph!r}: level {k} exhausted')
            k += 1
    except BudgetExhausted as e:
        log.warning(f'{graph!r}: crossing number search stopped at level {k}: {e}')

    search.stats.elapsed = time.monotonic() - search._started
    return _with_one_planar_upper_bound(graph, k, budget, max_automorphisms, search.stats)


def _with_one_planar_upper_bound(graph: Graph, lower: int, budget: SearchBudget, max_automorphisms: int,
                                 stats: SearchStats) -> CrResult:
    """Interval result, closed above by a 1-planar drawing when a short search finds one"""
    fallback = SearchBudget(min(budget.max_nodes, FALLBACK_MAX_NODES), min(budget.max_seconds, FALLBACK_MAX_SECONDS))
    verdict = is_one_planar(graph, fallback, max_automorphisms=max_automorphisms)
    if verdict.witness is None:
        return CrResult(lower, None, stats=stats)
    plan = MultiCrossingPlan.of(verdict.witness.plan.pairs)
    log.info(f'{graph!r}: 1-planar drawing bounds the crossing number by {len(plan.pairs)}')
    return CrResult(lower, len(plan.pairs), plan, is_planar(planarize_multi(graph, plan).graph), stats)
