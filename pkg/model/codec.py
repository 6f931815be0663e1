"""Serialization: graph6, edge-JSON, witness JSON, result dictionaries and DOT"""
import json
from json import JSONDecodeError
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from .crossing_plan import CrossingPlan, MultiCrossingPlan
from .embedding import PlaneEmbedding
from .exceptions import GraphConstructionError, GraphParseError
from .family_instance import FamilyInstance
from .graph import Graph, make_graph
from .join_decision import ConditionReport, JoinDecision
from .planarization import Planarization
from .report import VerificationReport
from .verdict import CrResult, OnePlanarWitness, SearchStats, Verdict

GRAPH6_HEADER = b'>>graph6<<'
FORMATS = ('graph6', 'edge-json')


def _graph6_size(data: bytes, start: int) -> Tuple[int, int]:
    """Vertex count and the offset where the adjacency bytes begin"""
    if len(data) <= start:
        raise GraphParseError('empty graph6 payload', start)
    if data[start] != 126:
        return data[start] - 63, start + 1
    if len(data) > start + 1 and data[start + 1] == 126:
        width, begin = 6, start + 2
    else:
        width, begin = 3, start + 1
    if len(data) < begin + width:
        raise GraphParseError('truncated graph6 vertex count', len(data))
    n = 0
    for byte in data[begin:begin + width]:
        n = (n << 6) | (byte - 63)
    return n, begin + width


def decode_graph6(payload) -> Graph:
    data = payload.encode('ascii', errors='replace') if isinstance(payload, str) else bytes(payload)
    data = data.rstrip(b'\r\n ')
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER) else 0
    for offset in range(start, len(data)):
        if not 63 <= data[offset] <= 126:
            raise GraphParseError(f'invalid graph6 byte {data[offset]!r}', offset)
    n, body = _graph6_size(data, start)
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(data) - body != expected:
        raise GraphParseError(f'graph6 payload for {n} vertices needs {expected} adjacency bytes, '
                              f'got {len(data) - body}', min(len(data), body + expected))
    return Graph.from_networkx(nx.from_graph6_bytes(data[start:]))


def encode_graph6(graph: Graph) -> str:
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode('ascii').rstrip('\n')


def decode_edge_json(payload) -> Graph:
    text = payload.decode('utf-8') if isinstance(payload, bytes) else payload
    try:
        obj = json.loads(text)
    except JSONDecodeError as e:
        raise GraphParseError(f'malformed JSON: {e.msg}', e.pos)
    if not isinstance(obj, dict) or not isinstance(obj.get('n'), int) or not isinstance(obj.get('edges'), list):
        raise GraphParseError('edge-JSON must be an object {"n": int, "edges": [[u, v], ...]}', 0)
    try:
        return make_graph(obj['n'], obj['edges'])
    except (GraphConstructionError, TypeError) as e:
        raise GraphParseError(f'invalid edge list: {e}', 0)


def encode_edge_json(graph: Graph) -> str:
    return json.dumps({'n': graph.vertex_count, 'edges': [list(e) for e in graph.edges]})


def codec(direction: str, fmt: str, payload):
    """encode: Graph -> text; decode: text or bytes -> Graph"""
    if fmt not in FORMATS:
        raise ValueError(f'unknown graph format "{fmt}"')
    if direction == 'encode':
        return encode_graph6(payload) if fmt == 'graph6' else encode_edge_json(payload)
    if direction == 'decode':
        return decode_graph6(payload) if fmt == 'graph6' else decode_edge_json(payload)
    raise ValueError(f'unknown codec direction "{direction}"')


def decode_graph_file_content(content: bytes) -> Graph:
    """Edge-JSON when the content looks like JSON, otherwise the first graph6 line"""
    stripped = content.lstrip()
    if stripped.startswith(b'{'):
        return decode_edge_json(stripped)
    lines = [line for line in content.splitlines() if line.strip()]
    if not lines:
        raise GraphParseError('empty graph file', 0)
    return decode_graph6(lines[0].strip())


def embedding_from_dict(obj: dict) -> PlaneEmbedding:
    rotation = obj['rotation']
    n = len(rotation)
    return PlaneEmbedding.from_rotation([rotation[str(v)] for v in range(n)],
                                        tuple(tuple(h) for h in obj.get('outer_face', ())) or None)


def plan_to_list(plan) -> List[List[List[int]]]:
    return [[list(e), list(f)] for e, f in plan.pairs]


def witness_to_dict(witness: OnePlanarWitness) -> Dict[str, Any]:
    return {'plan': plan_to_list(witness.plan),
            'embedding': witness.planarization_embedding.to_dict(),
            'c': witness.crossing_count}


def witness_from_dict(obj: dict) -> OnePlanarWitness:
    return OnePlanarWitness(CrossingPlan.of(obj['plan']), embedding_from_dict(obj['embedding']))


def multi_plan_to_dict(plan: MultiCrossingPlan) -> Dict[str, Any]:
    return {'plan': plan_to_list(plan),
            'orders': [[list(e), [list(p) for p in ps]] for e, ps in plan.orders],
            'c': plan.crossing_count}


def stats_to_dict(stats: SearchStats, include_timings: bool = True) -> Dict[str, Any]:
    result = {'nodes': stats.nodes, 'pruned': stats.pruned}
    if include_timings:
        result['elapsed'] = round(stats.elapsed, 3)
    return result


def verdict_to_dict(verdict: Verdict, include_timings: bool = True) -> Dict[str, Any]:
    result = {'answer': verdict.answer.value, 'stats': stats_to_dict(verdict.stats, include_timings)}
    if verdict.witness is not None:
        result['witness'] = witness_to_dict(verdict.witness)
    if verdict.refutation is not None:
        result['refutation'] = {'kind': verdict.refutation.kind.value, 'detail': verdict.refutation.detail}
    return result


def condition_to_dict(report: ConditionReport) -> Dict[str, Any]:
    return {'name': report.name, 'holds': report.holds,
            'kind': report.kind.value if report.kind else None, 'detail': report.detail}


def decision_to_dict(decision: JoinDecision, include_timings: bool = True) -> Dict[str, Any]:
    reason = {'kind': decision.reason.kind.value}
    if decision.reason.name:
        reason['name'] = decision.reason.name
    if decision.reason.pair is not None:
        reason['pair'] = decision.reason.pair.name
    if decision.reason.verdict is not None:
        reason['verdict'] = verdict_to_dict(decision.reason.verdict, include_timings)
    result = {'answer': decision.answer.value, 'reason': reason,
              'conditions': [condition_to_dict(c) for c in decision.conditions]}
    if decision.witness is not None:
        result['witness'] = witness_to_dict(decision.witness)
    return result


def cr_result_to_dict(result: CrResult, include_timings: bool = True) -> Dict[str, Any]:
    obj = {'value': result.value, 'lower_bound': result.lower_bound,
           'upper_bound': result.upper_bound, 'stats': stats_to_dict(result.stats, include_timings)}
    if result.witness is not None:
        obj['witness'] = multi_plan_to_dict(result.witness)
        if result.embedding is not None:
            obj['witness']['embedding'] = result.embedding.to_dict()
    return obj


def family_to_dict(instance: FamilyInstance) -> Dict[str, Any]:
    obj = {'name': instance.name, 'provenance': instance.provenance,
           'graph6': encode_graph6(instance.graph),
           'expected': [{'kind': p.kind, 'value': p.value, **({'factor': p.factor} if p.factor else {})}
                        for p in instance.expected_properties]}
    if instance.witness is not None:
        obj['witness'] = witness_to_dict(instance.witness)
    if instance.join_witness is not None:
        obj['join_witness'] = {'factor': instance.join_factor, **witness_to_dict(instance.join_witness)}
    return obj


def report_to_dict(report: VerificationReport, include_timings: bool = False) -> Dict[str, Any]:
    claims = []
    for record in sorted(report.records, key=lambda r: r.claim_id):
        claim = {'id': record.claim_id, 'anchor': record.anchor, 'expected': record.expected,
                 'computed': record.computed, 'status': record.status.value, 'stretch': record.stretch,
                 'stats': record.stats}
        if include_timings:
            claim['elapsed'] = round(record.elapsed, 3)
        claims.append(claim)
    return {'profile': report.profile, 'claims': claims, 'summary': report.totals}


def dumps(obj: Dict[str, Any]) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def to_dot(planarization: Planarization, name: str = 'planarization') -> str:
    """Graphviz source; false vertices are drawn as squares"""
    lines = [f'graph "{name}" {{']
    for v, mark in enumerate(planarization.truth_mark):
        shape = 'circle' if mark else 'square'
        label = str(v) if mark else ''
        lines.append(f'  {v} [shape={shape}, label="{label}"];')
    for u, v in planarization.graph.edges:
        lines.append(f'  {u} -- {v};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def graph_to_dot(graph: Graph, name: Optional[str] = None) -> str:
    return to_dot(Planarization(graph, tuple([True] * graph.vertex_count)), name or 'graph')
