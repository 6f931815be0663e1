"""Decision procedures for graph joins: the major-pair theorem and the small-factor condition battery"""
import logging
from typing import Dict, List, Optional, Set, Tuple

from model.codec import witness_to_dict
from model.crossing_plan import CrossingPlan
from model.embedding import PlaneEmbedding
from model.exceptions import InvalidEmbeddingError
from model.graph import Edge, Graph, PartitionSpec, edge_key
from model.join_decision import ConditionReport, JoinDecision, MajorPair, Reason, ReasonKind
from model.operators import complete_multipartite, contains_subgraph, disjoint_union, join, standard_graph, \
    subgraph_map
from model.verdict import Answer, OnePlanarWitness, SearchBudget, Verdict
from .exceptions import ConstructionError, DomainError, PreconditionError
from .multipartite import FACTOR_PARTS, table_forbidden_patterns
from .planarity import faces, is_outerplanar, is_planar, is_valid_embedding, outer_faces
from .solver import is_one_planar, is_outer_one_planar, planarize, validate_witness

log = logging.getLogger(__name__)

MAX_DEGREE = 6


def _major_pairs() -> Tuple[MajorPair, ...]:
    c3, c4, p3 = standard_graph('cycle', 3), standard_graph('cycle', 4), standard_graph('path', 3)
    return (MajorPair(disjoint_union(c3, c3), c3, 'C3∪C3 + C3'),
            MajorPair(c4, c4, 'C4 + C4'),
            MajorPair(c4, c3, 'C4 + C3'),
            MajorPair(complete_multipartite(PartitionSpec.of(2, 1, 1)), p3, 'K_{2,1,1} + P3'))


MAJOR_PAIRS = _major_pairs()

LISTED_FORBIDDEN = {
    'P1': (),
    '2P1': (PartitionSpec.of(7, 1), PartitionSpec.of(3, 3)),
    'P2': (PartitionSpec.of(7, 1), PartitionSpec.of(3, 3), PartitionSpec.of(4, 2), PartitionSpec.of(3, 1, 1)),
}


def size_rule(m: int, n: int) -> bool:
    """Sizes for which no join of factors with m and n vertices is 1-planar"""
    m, n = max(m, n), min(m, n)
    return (m >= 5 and n >= 4) or (m >= 7 and n >= 3)


def majorized_by(g: Graph, h: Graph) -> Optional[MajorPair]:
    if g.vertex_count < 3 or h.vertex_count < 3:
        raise DomainError(f'majorization needs factors with at least 3 vertices, got {g!r} and {h!r}')
    for pair in MAJOR_PAIRS:
        if contains_subgraph(pair.left, g) and contains_subgraph(pair.right, h):
            return pair
        if contains_subgraph(pair.right, g) and contains_subgraph(pair.left, h):
            return pair
    return None


def factor_name(h: Graph) -> str:
    if h.vertex_count == 1:
        return 'P1'
    if h.vertex_count == 2:
        return 'P2' if h.edge_count else '2P1'
    raise DomainError(f'small factor must have one or two vertices, got {h!r}')


def edge_bound(vertex_count: int, factor: str) -> Optional[int]:
    """Largest |E(G)| allowed by the 4n - 8 bound on G + factor; None when the join is too small"""
    if vertex_count + sum(FACTOR_PARTS[factor]) < 3:
        return None
    return {'P1': 3 * vertex_count - 4, '2P1': 2 * vertex_count, 'P2': 2 * vertex_count - 1}[factor]


def _forbidden_report(g: Graph, pattern: PartitionSpec, factor: str, prefix: str) -> ConditionReport:
    mapping = subgraph_map(g, complete_multipartite(pattern))
    extra = PartitionSpec.of(*FACTOR_PARTS[factor])
    return ConditionReport(f'{prefix}-{pattern.label}', mapping is None,
                           {'pattern': pattern.label, 'join_contains': pattern.merged(extra).label,
                            'map': {str(k): v for k, v in mapping.items()} if mapping else None},
                           ReasonKind.FORBIDDEN_SUBGRAPH)


def necessary_conditions(g: Graph, factor: str) -> List[ConditionReport]:
    """Conditions on G that hold whenever G + factor is 1-planar, cheapest first"""
    if factor not in FACTOR_PARTS:
        raise DomainError(f'factor must be one of {", ".join(FACTOR_PARTS)}, got "{factor}"')
    reports = []
    if factor in ('2P1', 'P2'):
        reports.append(ConditionReport('max-degree', g.max_degree <= MAX_DEGREE,
                                       {'max_degree': g.max_degree, 'bound': MAX_DEGREE},
                                       ReasonKind.DEGREE_BOUND))

    bound = edge_bound(g.vertex_count, factor)
    if bound is not None:
        reports.append(ConditionReport(f'edge-bound-{factor}', g.edge_count <= bound,
                                       {'edges': g.edge_count, 'vertices': g.vertex_count, 'bound': bound},
                                       ReasonKind.EDGE_BOUND))

    listed = LISTED_FORBIDDEN[factor]
    reports += [_forbidden_report(g, pattern, factor, 'forbidden') for pattern in listed]
    reports += [_forbidden_report(g, pattern, factor, 'table-forbidden')
                for pattern in table_forbidden_patterns(factor) if pattern not in listed]
    return reports


def _solver_witness(g: Graph, h: Graph, budget: SearchBudget) -> Optional[OnePlanarWitness]:
    verdict = is_one_planar(join(g, h), budget)
    return verdict.witness


def decide_join(g: Graph, h: Graph, budget: SearchBudget = SearchBudget(), with_witness: bool = False) -> JoinDecision:
    m, n = g.vertex_count, h.vertex_count
    if min(m, n) >= 3:
        pair = majorized_by(g, h)
        if pair is None:
            kind = ReasonKind.SIZE_RULE if size_rule(m, n) else ReasonKind.NOT_MAJORIZED
            return JoinDecision(Answer.NOT_ONE_PLANAR, Reason(kind))
        witness = _solver_witness(g, h, budget) if with_witness else None
        return JoinDecision(Answer.ONE_PLANAR, Reason(ReasonKind.MATCHED_PAIR, pair.name, pair), witness)

    big, small = (g, h) if m >= n else (h, g)
    if big.vertex_count <= 4:
        witness = _solver_witness(g, h, budget) if with_witness else None
        return JoinDecision(Answer.ONE_PLANAR, Reason(ReasonKind.SIZE_RULE, 'subgraph of K6'), witness)

    conditions: Tuple[ConditionReport, ...] = ()
    if small.vertex_count:
        conditions = tuple(necessary_conditions(big, factor_name(small)))
        for report in conditions:
            if not report.holds:
                log.info(f'{g!r} + {h!r} refuted by {report.name}')
                return JoinDecision(Answer.NOT_ONE_PLANAR, Reason(report.kind, report.name), conditions=conditions)

    verdict = is_one_planar(join(g, h), budget)
    witness = verdict.witness if with_witness else None
    return JoinDecision(verdict.answer, Reason(ReasonKind.SOLVER, verdict=verdict), witness, conditions)


def is_exposed(face_edges: Set[Edge], outer_edges: Set[Edge]) -> bool:
    """A face is exposed when it shares at least one edge with the outer face"""
    return bool(face_edges & outer_edges)


def _face_structure(graph: Graph, embedding: PlaneEmbedding, plan: CrossingPlan):
    planarization = planarize(graph, plan)
    if not is_valid_embedding(planarization.graph, embedding):
        raise InvalidEmbeddingError(f'embedding does not match the planarization of {graph!r}')
    outer = outer_faces(embedding)
    outer_keys = {frozenset(f.half_edges) for f in outer}
    outer_edges = {e for f in outer for e in f.edges}
    outer_vertex_set = {v for f in outer for v in f.vertices}
    inner = [f for f in faces(embedding) if f.half_edges and frozenset(f.half_edges) not in outer_keys]
    return planarization, outer_edges, outer_vertex_set, inner


def _crossable_edges(graph: Graph, plan: CrossingPlan) -> Set[Edge]:
    return set(graph.edges) - plan.crossed_edges


def p_square_check(graph: Graph, embedding: PlaneEmbedding, plan: CrossingPlan = CrossingPlan()) -> ConditionReport:
    """Membership of a drawing in the P-square family.

    With a plan, embedding is an embedding of the planarization; only true vertices count as inner
    vertices and only true uncrossed edges count as common edges.
    """
    planarization, outer_edges, outer_vertex_set, inner = _face_structure(graph, embedding, plan)
    true_vertices = set(planarization.true_vertices)
    crossable = _crossable_edges(graph, plan)

    second_layer = planarization.graph.subgraph(set(planarization.graph.vertices) - outer_vertex_set)
    two_outerplanar = is_outerplanar(second_layer)

    violations, exposed = [], []
    for face in inner:
        if not is_exposed(face.edges, outer_edges):
            continue
        inner_vertices = sorted(set(face.vertices) & true_vertices - outer_vertex_set)
        common = sorted(face.edges & outer_edges & crossable)
        record = {'face': list(face.vertices), 'inner_vertices': inner_vertices,
                  'common_edges': [list(e) for e in common]}
        exposed.append(record)
        if len(inner_vertices) > len(common):
            violations.append(record)

    holds = two_outerplanar and not violations
    return ConditionReport('p-square', holds,
                           {'two_outerplanar': two_outerplanar, 'outer_vertices': sorted(outer_vertex_set),
                            'exposed_faces': exposed, 'violations': violations})


def construct_apex_drawing(graph: Graph, embedding: PlaneEmbedding,
                           plan: CrossingPlan = CrossingPlan()) -> OnePlanarWitness:
    """Witness for G + P1: the apex joins the outer true vertices directly and reaches every other
    true vertex through a distinct true uncrossed edge of an exposed face holding it"""
    report = p_square_check(graph, embedding, plan)
    if not report.holds:
        raise PreconditionError(f'drawing of {graph!r} is not in the P-square family: {report.detail["violations"]}')

    planarization, outer_edges, outer_vertex_set, inner = _face_structure(graph, embedding, plan)
    crossable = _crossable_edges(graph, plan)
    apex = graph.vertex_count
    outer_true = sorted(set(planarization.true_vertices) & outer_vertex_set)
    hidden = sorted(set(planarization.true_vertices) - outer_vertex_set)

    options: Dict[int, List[Edge]] = {v: [] for v in hidden}
    for face in inner:
        if not is_exposed(face.edges, outer_edges):
            continue
        common = sorted(face.edges & outer_edges & crossable)
        for v in set(face.vertices) & set(hidden):
            options[v] += [e for e in common if e not in options[v]]
    unreachable = [v for v in hidden if not options[v]]
    if unreachable:
        raise ConstructionError(f'vertices {unreachable} of {graph!r} lie on no exposed face')

    def partial_plan(assigned: Dict[int, Edge]) -> Tuple[Graph, CrossingPlan]:
        reached = outer_true + sorted(assigned)
        partial = graph.with_edges([(v, apex) for v in reached], extra_vertices=1)
        pairs = list(plan.pairs) + [(edge_key(v, apex), e) for v, e in assigned.items()]
        return partial, CrossingPlan.of(pairs)

    def assign(i: int, assigned: Dict[int, Edge]) -> Optional[Dict[int, Edge]]:
        if i == len(hidden):
            return dict(assigned)
        v = hidden[i]
        used = set(assigned.values())
        for e in options[v]:
            if e in used:
                continue
            assigned[v] = e
            partial, partial_pairs = partial_plan(assigned)
            if is_planar(planarize(partial, partial_pairs).graph) is not None:
                found = assign(i + 1, assigned)
                if found is not None:
                    return found
            del assigned[v]
        return None

    assignment = assign(0, {})
    if assignment is None:
        raise ConstructionError(f'no apex edge assignment found for {graph!r}')

    target, join_plan = partial_plan(assignment)
    embedding_of_join = is_planar(planarize(target, join_plan).graph)
    witness = OnePlanarWitness(join_plan, embedding_of_join)
    if not validate_witness(join(graph, standard_graph('empty', 1)), witness):
        raise ConstructionError(f'apex drawing of {graph!r} failed validation')
    log.debug(f'{graph!r}: apex drawing with {join_plan.crossing_count} crossings')
    return witness


def outer_join_witness(graph: Graph, witness: OnePlanarWitness) -> OnePlanarWitness:
    """G + P1 drawing from an outer-1-planar drawing of G: the apex sits in the outer face"""
    apex = graph.vertex_count
    target = graph.with_edges([(v, apex) for v in graph.vertices], extra_vertices=1)
    embedding = is_planar(planarize(target, witness.plan).graph)
    if embedding is None:
        raise ConstructionError(f'outer-1-planar drawing of {graph!r} does not extend to the join with P1')
    return OnePlanarWitness(witness.plan, embedding)


def sufficient_outer1p(graph: Graph, budget: SearchBudget = SearchBudget()) -> ConditionReport:
    verdict: Verdict = is_outer_one_planar(graph, budget)
    detail = {'outer_one_planar': verdict.answer.value}
    if verdict.answer is not Answer.ONE_PLANAR:
        return ConditionReport('outer-1-planar', False, detail)

    join_witness = outer_join_witness(graph, verdict.witness)
    detail['join_witness'] = witness_to_dict(join_witness)
    detail['join_witness_valid'] = validate_witness(join(graph, standard_graph('empty', 1)), join_witness)

    decision = decide_join(graph, standard_graph('empty', 1), budget)
    detail['decide_join'] = decision.answer.value
    if decision.answer is Answer.NOT_ONE_PLANAR:
        log.error(f'{graph!r} is outer-1-planar but the join with P1 was refuted by {decision.reason.kind.value}')
    return ConditionReport('outer-1-planar', True, detail)
