"""Catalogue of checkable claims run by the verification harness"""
import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

import networkx as nx

from model.codec import decode_graph6, encode_graph6, witness_from_dict, witness_to_dict
from model.exceptions import PlanError
from model.graph import Graph, PartitionSpec
from model.operators import canonical_form, isomorphism_classes, join, standard_graph
from model.report import ClaimStatus
from model.verdict import Answer, OnePlanarWitness, SearchBudget, Verdict
from .characterization import (construct_apex_drawing, decide_join, majorized_by, necessary_conditions,
                               p_square_check, sufficient_outer1p)
from .crossing_number import crossing_number
from .expressions import normalize, parse_graph, split_join
from .families import chorded_cycle, cycle_square, ladder_join_instance, named, wheel
from .multipartite import in_multipartite_table
from .planarity import common_face_embedding, is_planar
from .solver import is_one_planar, is_outer_one_planar, naive_verdict, planarize, validate_witness

log = logging.getLogger(__name__)

GROUPS = ('theorem', 'lemma', 'join', 'table1', 'cr', 'construction', 'soundness', 'oracle', 'witness')

LEMMA_GRAPHS = (
    ('(C3∪P1)+4P1', False), ('(P4∪P1)+C3', False), ('(P4∪P1)+P3', False), ('(P4∪P1)+(P2∪P1)', False),
    ('(P4∪P1)+3P1', False), ('(K_{3,1}∪P1)+3P1', False), ('3P2+3P1', False),
    ('(C3∪P2)+C3', True), ('(C3∪C3)+C3', True), ('(C3∪P1)+C3', True),
)

TABLE_POSITIVE = ((6, 3), (4, 4), (6, 2, 1), (4, 2, 2), (3, 3, 1), (6, 1, 1, 1), (3, 2, 1, 1), (2, 2, 2, 2),
                   (2, 2, 1, 1, 1), (1, 1, 1, 1, 1, 1))
TABLE_NEGATIVE = ((4, 3, 1), (3, 3, 2), (5, 2, 2), (4, 2, 1, 1), (3, 1, 1, 1, 1), (5, 4))

FACTOR_GRAPHS = {
    'P1': lambda: standard_graph('empty', 1),
    '2P1': lambda: standard_graph('empty', 2),
    'P2': lambda: standard_graph('path', 2),
}


class Outcome(NamedTuple):
    computed: Any
    status: ClaimStatus
    stats: Optional[Dict[str, Any]] = None


@dataclass(frozen=True)
class Claim:
    claim_id: str
    anchor: str
    expected: Any
    check: Callable[..., Outcome]
    args: Tuple = ()
    stretch: bool = False
    budget_section: str = 'default'

    def evaluate(self, budget: SearchBudget) -> Outcome:
        return self.check(budget, *self.args)


def _answer(verdict: Verdict) -> str:
    return verdict.answer.value


def _solver_outcome(graph: Graph, verdict: Verdict, expected_one_planar: bool, outer: bool = False) -> Outcome:
    stats = {'nodes': verdict.stats.nodes}
    if verdict.refutation is not None:
        stats['refutation'] = verdict.refutation.kind.value
    if verdict.witness is not None:
        stats['crossings'] = verdict.witness.crossing_count
    if verdict.answer is Answer.INCONCLUSIVE:
        return Outcome(_answer(verdict), ClaimStatus.INCONCLUSIVE, stats)
    agrees = (verdict.answer is Answer.ONE_PLANAR) == expected_one_planar
    if verdict.witness is not None and not validate_witness(graph, verdict.witness, outer=outer):
        stats['witness_valid'] = False
        agrees = False
    return Outcome(_answer(verdict), ClaimStatus.PASS if agrees else ClaimStatus.FAIL, stats)


def _expected_answer(one_planar: bool) -> str:
    return (Answer.ONE_PLANAR if one_planar else Answer.NOT_ONE_PLANAR).value


def check_solver(budget: SearchBudget, expression: str, expected_one_planar: bool) -> Outcome:
    graph = parse_graph(expression)
    return _solver_outcome(graph, is_one_planar(graph, budget), expected_one_planar)


def check_theorem(budget: SearchBudget, g6_left: str, g6_right: str, expected_one_planar: bool) -> Outcome:
    target = join(decode_graph6(g6_left), decode_graph6(g6_right))
    return _solver_outcome(target, is_one_planar(target, budget), expected_one_planar)


def check_decision(budget: SearchBudget, expression: str, expected_one_planar: bool) -> Outcome:
    left, right = split_join(expression)
    decision = decide_join(parse_graph(left), parse_graph(right), budget)
    if decision.answer is Answer.INCONCLUSIVE:
        return Outcome(decision.answer.value, ClaimStatus.INCONCLUSIVE, {'reason': decision.reason.kind.value})
    ok = (decision.answer is Answer.ONE_PLANAR) == expected_one_planar
    return Outcome(decision.answer.value, ClaimStatus.PASS if ok else ClaimStatus.FAIL,
                   {'reason': decision.reason.kind.value, 'name': decision.reason.name})


def check_table_predicate(budget: SearchBudget) -> Outcome:
    mismatches = [PartitionSpec(p).label for p in TABLE_POSITIVE if not in_multipartite_table(PartitionSpec(p))]
    mismatches += [PartitionSpec(p).label for p in TABLE_NEGATIVE if in_multipartite_table(PartitionSpec(p))]
    mismatches += ['K7'] if in_multipartite_table(PartitionSpec((1,) * 7)) else []
    return Outcome({'mismatches': mismatches}, ClaimStatus.FAIL if mismatches else ClaimStatus.PASS)


def check_crossing_number(budget: SearchBudget, expression: str, expected: int) -> Outcome:
    result = crossing_number(parse_graph(expression), expected, budget)
    stats = {'nodes': result.stats.nodes, 'pruned': result.stats.pruned}
    computed = result.value if result.value is not None else [result.lower_bound, result.upper_bound]
    if result.value is not None:
        return Outcome(computed, ClaimStatus.PASS if result.value == expected else ClaimStatus.FAIL, stats)
    status = ClaimStatus.FAIL if result.lower_bound > expected else ClaimStatus.INCONCLUSIVE
    return Outcome(computed, status, stats)


def check_ladder(budget: SearchBudget, n: int) -> Outcome:
    instance = ladder_join_instance(n)
    k = n // 2
    base = instance.witness.plan.crossing_count
    computed = {
        'edges': instance.graph.edge_count,
        'witness_valid': validate_witness(instance.graph, instance.witness),
        'crossings': base,
        'join_witness_valid': validate_witness(join(instance.graph, standard_graph('empty', 1)),
                                               instance.join_witness),
        'apex_crossings': instance.join_witness.plan.crossing_count - base,
    }
    expected = {'edges': 3 * n - 5, 'witness_valid': True, 'crossings': k - 1, 'join_witness_valid': True,
                'apex_crossings': k - 1}
    return Outcome(computed, ClaimStatus.PASS if computed == expected else ClaimStatus.FAIL)


def check_cycle_square(budget: SearchBudget, n: int) -> Outcome:
    instance = cycle_square(n)
    target = join(instance.graph, standard_graph('empty', 2))
    verdict = is_one_planar(target, budget)
    computed = {
        'edges': instance.graph.edge_count,
        'join_edges': target.edge_count,
        'shipped_witness_valid': validate_witness(target, instance.join_witness),
        'solver': _answer(verdict),
    }
    if verdict.witness is not None:
        computed['solver_witness_valid'] = validate_witness(target, verdict.witness)
    ok = (computed['edges'] == 2 * n and computed['join_edges'] == 4 * (n + 2) - 8
          and computed['shipped_witness_valid'] and computed.get('solver_witness_valid', True))
    if not ok or verdict.answer is Answer.NOT_ONE_PLANAR:
        return Outcome(computed, ClaimStatus.FAIL, {'nodes': verdict.stats.nodes})
    status = ClaimStatus.PASS if verdict.answer is Answer.ONE_PLANAR else ClaimStatus.INCONCLUSIVE
    return Outcome(computed, status, {'nodes': verdict.stats.nodes})


def check_chorded_cycle(budget: SearchBudget, n: int) -> Outcome:
    instance = chorded_cycle(n)
    target = join(instance.graph, standard_graph('path', 2))
    outcome = _solver_outcome(target, is_one_planar(target, budget), True)
    computed = {'edges': instance.graph.edge_count, 'join': outcome.computed}
    if instance.graph.edge_count != 2 * n - 2:
        return Outcome(computed, ClaimStatus.FAIL, outcome.stats)
    return Outcome(computed, outcome.status, outcome.stats)


def check_wheel_apex(budget: SearchBudget, n: int) -> Outcome:
    graph = wheel(n)
    embedding = common_face_embedding(graph, range(n - 1))
    report = p_square_check(graph, embedding)
    witness = construct_apex_drawing(graph, embedding)
    computed = {'p_square': report.holds, 'crossings': witness.crossing_count,
                'valid': validate_witness(join(graph, standard_graph('empty', 1)), witness)}
    ok = computed == {'p_square': True, 'crossings': 1, 'valid': True}
    return Outcome(computed, ClaimStatus.PASS if ok else ClaimStatus.FAIL)


def check_outer1p(budget: SearchBudget, expression: str, expected_holds: bool) -> Outcome:
    graph = parse_graph(expression)
    report = sufficient_outer1p(graph, budget)
    computed = {'holds': report.holds, 'outer_one_planar': report.detail['outer_one_planar']}
    if report.holds:
        computed['join_witness_valid'] = report.detail['join_witness_valid']
        computed['decide_join'] = report.detail['decide_join']
    if report.detail['outer_one_planar'] == Answer.INCONCLUSIVE.value:
        return Outcome(computed, ClaimStatus.INCONCLUSIVE)
    ok = report.holds == expected_holds and computed.get('join_witness_valid', True) \
        and computed.get('decide_join') != Answer.NOT_ONE_PLANAR.value
    return Outcome(computed, ClaimStatus.PASS if ok else ClaimStatus.FAIL)


def check_soundness(budget: SearchBudget, factor: str, vertex_count: int) -> Outcome:
    """Graphs violating a necessary condition must not yield a certified 1-planar join"""
    counterexamples, inconclusive, solved = [], 0, 0
    factor_graph = FACTOR_GRAPHS[factor]()
    for graph in isomorphism_classes(vertex_count):
        if all(report.holds for report in necessary_conditions(graph, factor)):
            continue
        verdict = is_one_planar(join(graph, factor_graph), budget)
        solved += 1
        if verdict.answer is Answer.ONE_PLANAR:
            counterexamples.append(encode_graph6(graph))
        elif verdict.answer is Answer.INCONCLUSIVE:
            inconclusive += 1
    computed = {'counterexamples': counterexamples, 'solver_runs': solved, 'inconclusive': inconclusive}
    if counterexamples:
        return Outcome(computed, ClaimStatus.FAIL)
    return Outcome(computed, ClaimStatus.INCONCLUSIVE if inconclusive else ClaimStatus.PASS)


def check_oracle(budget: SearchBudget, vertex_count: int, max_edges: int = 8, unpruned_max_edges: int = 7) -> Outcome:
    """Branch-and-bound against full plan enumeration, and pruned against unpruned search"""
    mismatches, inconclusive, compared = [], 0, 0
    for graph in isomorphism_classes(vertex_count):
        if graph.edge_count > max_edges:
            continue
        for outer in (False, True):
            decide = is_outer_one_planar if outer else is_one_planar
            verdict = decide(graph, budget)
            if verdict.answer is Answer.INCONCLUSIVE:
                inconclusive += 1
                continue
            compared += 1
            mode = 'outer' if outer else 'plain'
            if verdict.answer is not naive_verdict(graph, outer):
                mismatches.append(f'{encode_graph6(graph)}:{mode}:naive')
            if graph.edge_count <= unpruned_max_edges:
                unpruned = decide(graph, budget, prune=False)
                if unpruned.answer.is_definite and unpruned.answer is not verdict.answer:
                    mismatches.append(f'{encode_graph6(graph)}:{mode}:unpruned')
    computed = {'mismatches': mismatches, 'compared': compared, 'inconclusive': inconclusive}
    if mismatches:
        return Outcome(computed, ClaimStatus.FAIL)
    return Outcome(computed, ClaimStatus.INCONCLUSIVE if inconclusive else ClaimStatus.PASS)


def witness_integrity_violations(graph: Graph, witness: OnePlanarWitness) -> List[str]:
    try:
        planarization = planarize(graph, witness.plan)
    except (PlanError, ValueError) as e:
        return [f'plan: {e}']
    c = witness.crossing_count
    violations = []
    if witness_from_dict(witness_to_dict(witness)) != witness:
        violations.append('serialization')
    if planarization.graph.vertex_count != graph.vertex_count + c:
        violations.append('vertex count')
    if planarization.graph.edge_count != graph.edge_count + 2 * c:
        violations.append('edge count')
    false = set(planarization.false_vertices)
    if any(planarization.graph.degree(x) != 4 for x in false):
        violations.append('false vertex degree')
    if any(planarization.graph.adjacency[x] & false for x in false):
        violations.append('adjacent false vertices')
    if is_planar(planarization.graph) is None:
        violations.append('planarity')
    return violations


def check_witness_integrity(budget: SearchBudget, samples: int, seed: int = 0) -> Outcome:
    rng = random.Random(seed)
    found, attempts, violations = 0, 0, []
    seen = set()
    while found < samples and attempts < 10 * samples:
        attempts += 1
        n = rng.randint(5, 8)
        m = rng.randint(n, 4 * n - 8)
        graph = Graph.from_networkx(nx.gnm_random_graph(n, m, seed=rng.randrange(2 ** 31)))
        key = canonical_form(graph)
        if key in seen:
            continue
        seen.add(key)
        verdict = is_one_planar(graph, budget)
        if verdict.witness is None:
            continue
        found += 1
        problems = witness_integrity_violations(graph, verdict.witness)
        if problems:
            violations.append({'graph6': encode_graph6(graph), 'problems': problems})
    computed = {'witnesses': found, 'attempts': attempts, 'violations': violations}
    if violations:
        return Outcome(computed, ClaimStatus.FAIL)
    return Outcome(computed, ClaimStatus.PASS if found >= samples else ClaimStatus.INCONCLUSIVE)


def _theorem_claims(max_vertices: int) -> List[Claim]:
    classes = [g for v in range(3, max_vertices + 1) for g in isomorphism_classes(v)]
    claims = []
    for g in classes:
        for h in classes:
            expected = majorized_by(g, h) is not None
            claims.append(Claim(f'theorem-{encode_graph6(g)}+{encode_graph6(h)}',
                                'G+H is 1-planar iff [G,H] is subgraph-majorized by a major pair',
                                _expected_answer(expected), check_theorem,
                                (encode_graph6(g), encode_graph6(h), expected)))
    return claims


def build_claims(groups=GROUPS, suite: Optional[Dict[str, Any]] = None) -> List[Claim]:
    """Claims of the selected groups; suite holds the sizes of the exhaustive claims"""
    suite = suite or {}
    claims: List[Claim] = []
    if 'theorem' in groups:
        claims += _theorem_claims(int(suite.get('theorem_max_vertices', 4)))
    if 'lemma' in groups:
        for expression, one_planar in LEMMA_GRAPHS:
            anchor = named(expression).provenance
            claims.append(Claim(f'lemma-{normalize(expression)}', anchor, _expected_answer(one_planar),
                                check_solver, (expression, one_planar)))
    if 'join' in groups:
        for expression, one_planar in LEMMA_GRAPHS + (('C4+C4', True), ('K_{2,1,1}+P3', True), ('C5+P1', True)):
            claims.append(Claim(f'join-{normalize(expression)}', 'decide_join on the named join',
                                _expected_answer(one_planar), check_decision, (expression, one_planar)))
    if 'table1' in groups:
        claims.append(Claim('table1-predicate', '1-planar complete k-partite graphs', {'mismatches': []},
                            check_table_predicate))
        for parts, one_planar in [(p, True) for p in TABLE_POSITIVE] + [(p, False) for p in TABLE_NEGATIVE]:
            label = PartitionSpec(parts).label
            claims.append(Claim(f'table1-{label}', '1-planar complete k-partite graphs',
                                _expected_answer(one_planar), check_solver, (label, one_planar)))
    if 'cr' in groups:
        claims.append(Claim('cr-K_{5,3}', 'K_{5,3} whose crossing number is four', 4, check_crossing_number,
                            ('K_{5,3}', 4), budget_section='crossing_number'))
        claims.append(Claim('cr-K_{6,3}', 'cr(K_{6,3}) = 6', 6, check_crossing_number, ('K_{6,3}', 6),
                            stretch=True, budget_section='crossing_number'))
        claims.append(Claim(f'cr-{normalize("(C3∪P1)+4P1")}', 'cr((C3 ∪ P1)+4P1) = 6', 6, check_crossing_number,
                            ('(C3∪P1)+4P1', 6), stretch=True, budget_section='crossing_number'))
    if 'construction' in groups:
        claims.append(Claim('construction-ladder-10', 'The graph G_10 and its join with P1', 'valid',
                            check_ladder, (10,)))
        claims.append(Claim('construction-cycle-square-8', 'The second power of the cycle C_8; bound is sharp',
                            'one_planar', check_cycle_square, (8,)))
        for n in (5, 6):
            claims.append(Claim(f'construction-chorded-cycle-{n}', 'G_n + P2 is 1-planar with 2n - 2 edges',
                                'one_planar', check_chorded_cycle, (n,)))
        claims.append(Claim('construction-p-square-W5', 'insert a new vertex x into the outerface', 'valid',
                            check_wheel_apex, (5,)))
        for expression, holds in (('C4', True), ('K4', True), ('K5', False)):
            claims.append(Claim(f'construction-outer1p-{expression}',
                                'If G is outer-1-planar, then G + P1 is 1-planar',
                                holds, check_outer1p, (expression, holds)))
    if 'soundness' in groups:
        for factor in FACTOR_GRAPHS:
            for v in range(1, int(suite.get('soundness_max_vertices', 6)) + 1):
                claims.append(Claim(f'soundness-{factor}-n{v}', 'necessary conditions for G + P1, G + 2P1, G + P2',
                                    {'counterexamples': []}, check_soundness, (factor, v)))
    if 'oracle' in groups:
        for v in range(1, int(suite.get('oracle_max_vertices', 7)) + 1):
            claims.append(Claim(f'oracle-n{v}', 'each edge is crossed at most once', {'mismatches': []},
                                check_oracle, (v,)))
    if 'witness' in groups:
        samples = int(suite.get('witness_samples', 1000))
        claims.append(Claim('witness-integrity', 'V(D×) = V + c and E(D×) = E + 2c', {'violations': []},
                            check_witness_integrity, (samples, int(suite.get('seed', 0)))))
    return claims


def select(claims: List[Claim], only: Optional[List[str]]) -> List[Claim]:
    """Exact ids or id prefixes; every claim when only is empty"""
    if not only:
        return claims
    wanted = [normalize(o) if '(' in o or '∪' in o else o for o in only]
    return [c for c in claims if any(c.claim_id == w or c.claim_id.startswith(w) for w in wanted)]
