"""Generators for the named graphs and constructions, with constructive witnesses where a drawing is known"""
import logging
import math
import re
from dataclasses import replace
from typing import Dict, List, NamedTuple, Optional, Tuple

from model.crossing_plan import CrossingPlan
from model.embedding import PlaneEmbedding
from model.family_instance import ExpectedProperty, FamilyInstance
from model.graph import Graph, PartitionSpec, edge_key, make_graph
from model.operators import complete_multipartite, join, standard_graph
from model.verdict import OnePlanarWitness
from .exceptions import ConstructionError, DomainError, UnknownFamilyError
from .multipartite import in_multipartite_table
from .planarity import faces, is_planar
from .solver import planarize

log = logging.getLogger(__name__)

FOUR_VERTEX_EDGES = {
    1: [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],  # K4
    2: [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],  # K_{2,1,1}
    3: [(0, 1), (0, 2), (1, 2), (0, 3)],  # paw
    4: [(0, 1), (1, 2), (2, 3), (0, 3)],  # C4
    5: [(0, 1), (0, 2), (0, 3)],  # K_{3,1}
    6: [(0, 1), (1, 2), (2, 3)],  # P4
}


def four_vertex_graph(i: int) -> Graph:
    if i not in FOUR_VERTEX_EDGES:
        raise DomainError(f'connected four-vertex graphs are numbered 1..6, got {i}')
    return make_graph(4, FOUR_VERTEX_EDGES[i])


def wheel(n: int) -> Graph:
    """W_n: a cycle on n - 1 vertices plus a hub (the hub is the last vertex)"""
    if n < 4:
        raise DomainError(f'wheel needs at least 4 vertices, got {n}')
    return join(standard_graph('cycle', n - 1), standard_graph('empty', 1))


def _rotation_from_angles(graph: Graph, angle) -> Tuple[Tuple[int, ...], ...]:
    """Clockwise neighbor order from the departure angle of every half-edge"""
    return tuple(tuple(sorted(graph.adjacency[v], key=lambda w: -angle(v, w))) for v in graph.vertices)


def ladder_family(n: int) -> FamilyInstance:
    if n % 2:
        raise DomainError(f'ladder size must be even, got {n}')
    k = n // 2
    if k < 3 or k % 2 == 0:
        raise DomainError(f'ladder needs n = 2k with k odd and at least 3, got n = {n}')

    def a(i):
        return i - 1

    def b(i):
        return k + i - 1

    edges = [(a(k), b(k))]
    for i in range(1, k):
        edges += [(a(i), a(i + 1)), (b(i), b(i + 1)), (a(i), b(i)), (a(i), b(i + 1)), (a(i + 1), b(i))]
    chords = [(a(j), a(j + 2)) for j in range(1, k - 1, 2)] + [(b(j), b(j + 2)) for j in range(1, k - 1, 2)]
    graph = make_graph(n, edges + chords)
    plan = CrossingPlan.of([((a(i), b(i + 1)), (a(i + 1), b(i))) for i in range(1, k)])
    planarization = planarize(graph, plan)

    position: Dict[int, Tuple[float, float]] = {}
    for i in range(1, k + 1):
        position[a(i)] = (i, 1.0)
        position[b(i)] = (i, 0.0)
    for pair in plan.pairs:
        i = pair[0][0] + 1
        position[planarization.false_vertex_of(pair)] = (i + 0.5, 0.5)
    chord_set = {edge_key(*c) for c in chords}

    def angle(v, w):
        if edge_key(v, w) in chord_set:
            rising = 1 if v < k else -1
            return math.atan2(rising * math.sqrt(3), 1 if w > v else -1)
        (x1, y1), (x2, y2) = position[v], position[w]
        return math.atan2(y2 - y1, x2 - x1)

    embedding = PlaneEmbedding.from_rotation(_rotation_from_angles(planarization.graph, angle))
    top, bottom = edge_key(a(1), a(3)), edge_key(b(1), b(3))
    outer = [f for f in faces(embedding) if top in f.edges and bottom in f.edges]
    if len(outer) != 1:
        raise ConstructionError(f'ladder drawing for n = {n} has no unique outer face')
    embedding = embedding.with_outer_face((min(outer[0].half_edges),))

    return FamilyInstance(f'ladder-{n}', graph, 'The graph G_n: ladder of paths a_1..a_k and b_1..b_k',
                          OnePlanarWitness(plan, embedding),
                          (ExpectedProperty('edge_count', 3 * n - 5),
                           ExpectedProperty('one_planar', True),
                           ExpectedProperty('witness_crossings', k - 1),
                           ExpectedProperty('join_one_planar', True, 'P1')))


def ladder_join_instance(n: int) -> FamilyInstance:
    """Ladder with the apex drawing of G_n + P1 attached"""
    from .characterization import construct_apex_drawing

    instance = ladder_family(n)
    join_witness = construct_apex_drawing(instance.graph, instance.witness.planarization_embedding,
                                          instance.witness.plan)
    return replace(instance, join_witness=join_witness, join_factor='P1')


def cycle_square(n: int) -> FamilyInstance:
    if n < 6 or n % 2:
        raise DomainError(f'cycle square needs an even n >= 6, got {n}')
    graph = make_graph(n, [(i, (i + 1) % n) for i in range(n)] + [(i, (i + 2) % n) for i in range(n)])

    u, w = n, n + 1
    target = join(graph, standard_graph('empty', 2))
    pairs = []
    for i in range(n // 2):
        pairs.append(((u, 2 * i + 1), (2 * i, (2 * i + 2) % n)))
        pairs.append(((w, 2 * i), ((2 * i - 1) % n, 2 * i + 1)))
    plan = CrossingPlan.of(pairs)
    embedding = is_planar(planarize(target, plan).graph)
    if embedding is None:
        raise ConstructionError(f'double-wheel drawing of C_{n}^2 + 2P1 is not planar')

    return FamilyInstance(f'cycle-square-{n}', graph, 'The second power of the cycle C_n',
                          OnePlanarWitness(CrossingPlan(), is_planar(graph)),
                          (ExpectedProperty('edge_count', 2 * n),
                           ExpectedProperty('one_planar', True),
                           ExpectedProperty('join_one_planar', True, '2P1')),
                          OnePlanarWitness(plan, embedding), '2P1')


def chorded_cycle(n: int) -> FamilyInstance:
    if n < 5:
        raise DomainError(f'chorded cycle needs n >= 5, got {n}')

    def v(i):
        return i - 1

    edges = [(v(i), v(i % n + 1)) for i in range(1, n + 1)]
    edges += [(v(i), v(i + 2)) for i in range(1, 2 * ((n - 1) // 2), 2)]
    edges += [(v(j), v(j + 2)) for j in range(2, 2 * (n // 2) - 1, 2)]
    graph = make_graph(n, edges)
    return FamilyInstance(f'chorded-cycle-{n}', graph, 'Cycle C_n with alternating outer and inner chords',
                          OnePlanarWitness(CrossingPlan(), is_planar(graph)),
                          (ExpectedProperty('edge_count', 2 * n - 2),
                           ExpectedProperty('one_planar', True),
                           ExpectedProperty('join_one_planar', True, 'P2')))


class Entry(NamedTuple):
    expression: str
    one_planar: bool
    anchor: str
    crossing_number: Optional[int] = None


REGISTRY: Dict[str, Entry] = {}


def _register(name: str, one_planar: bool, anchor: str, crossing_number: Optional[int] = None,
              expression: Optional[str] = None):
    from .expressions import normalize

    REGISTRY[normalize(name)] = Entry(expression or name, one_planar, anchor, crossing_number)


_register('(C3∪P1)+4P1', False, '(C3 ∪ P1)+4P1 is not 1-planar', 6)
_register('(P4∪P1)+C3', False, '(P4 ∪ P1)+C3 is not 1-planar')
_register('(P4∪P1)+P3', False, '(P4 ∪ P1)+P3 is not 1-planar')
_register('(P4∪P1)+(P2∪P1)', False, '(P4 ∪ P1)+(P2 ∪ P1) is not 1-planar')
_register('(P4∪P1)+3P1', False, '(P4 ∪ P1)+3P1 is not 1-planar')
_register('(K_{3,1}∪P1)+3P1', False, '(K_{3,1} ∪ P1)+3P1 is not 1-planar')
_register('3P2+3P1', False, '3P2+3P1 is not 1-planar')
_register('(C3∪P2)+C3', True, '(C3 ∪ P2)+C3 is 1-planar')
_register('(C3∪C3)+C3', True, '(C3 ∪ C3)+C3 is 1-planar')
_register('(C3∪P1)+C3', True, 'A 1-planar drawing of (C3 ∪ P1)+C3')
_register('C4+C4', True, 'G+H is 1-planar if and only if G, H ⊆ C4')
_register('C4+C3', True, 'major pair [C4, C3]')
_register('K_{2,1,1}+P3', True, 'major pair [K_{2,1,1}, P3]')
_register('G2+C3', False, 'If H = C3, then G+H = K_{2,1,1,1,1,1} which is not 1-planar')
_register('G3+C3', False, 'G3+C3 is not 1-planar')
_register('W5', True, 'wheel: 4-cycle with a hub')
for _i in range(1, 7):
    _register(f'G{_i}', True, 'Connected graphs on four vertices')

MULTIPARTITE_CROSSING_NUMBERS = {(5, 3): 4, (6, 3): 6}


def named(name: str) -> FamilyInstance:
    from .expressions import normalize, parse_graph

    key = normalize(name)
    if key in REGISTRY:
        entry = REGISTRY[key]
        properties = [ExpectedProperty('one_planar', entry.one_planar)]
        if entry.crossing_number is not None:
            properties.append(ExpectedProperty('crossing_number', entry.crossing_number))
        return FamilyInstance(key, parse_graph(entry.expression), entry.anchor,
                              expected_properties=tuple(properties))

    spec = _multipartite_spec(key)
    if spec is None:
        raise UnknownFamilyError(name, sorted(REGISTRY) + ['K_{a,b,...}', 'Kn'])
    properties = [ExpectedProperty('one_planar', in_multipartite_table(spec))]
    if spec.parts in MULTIPARTITE_CROSSING_NUMBERS:
        properties.append(ExpectedProperty('crossing_number', MULTIPARTITE_CROSSING_NUMBERS[spec.parts]))
    return FamilyInstance(spec.label, complete_multipartite(spec), '1-planar complete k-partite graphs',
                          expected_properties=tuple(properties))


def _multipartite_spec(key: str) -> Optional[PartitionSpec]:
    m = re.fullmatch(r'K_\{([0-9,]+)\}', key)
    if m:
        return PartitionSpec.of(*(int(p) for p in m.group(1).split(',')))
    m = re.fullmatch(r'K([0-9]+)', key)
    if m and int(m.group(1)) >= 1:
        return PartitionSpec((1,) * int(m.group(1)))
    return None


FAMILIES = {
    'ladder': ladder_family,
    'cycle-square': cycle_square,
    'chorded-cycle': chorded_cycle,
}


def generate(family: str, params: List[str]) -> FamilyInstance:
    if family == 'named':
        if len(params) != 1:
            raise UnknownFamilyError(' '.join(params) or family)
        return named(params[0])
    if family not in FAMILIES:
        raise UnknownFamilyError(family, list(FAMILIES) + ['named'])
    try:
        size, = (int(p) for p in params)
    except ValueError:
        raise DomainError(f'family "{family}" takes one integer size, got {params}')
    if family == 'ladder':
        return ladder_join_instance(size)
    return FAMILIES[family](size)
