"""Embedding-producing planarity test and the tests derived from it"""
import logging
from typing import Iterable, List, Optional, Set

import networkx as nx

from model.embedding import Face, HalfEdge, PlaneEmbedding, components
from model.graph import Graph

log = logging.getLogger(__name__)


def is_planar(graph: Graph) -> Optional[PlaneEmbedding]:
    planar, embedding = nx.check_planarity(graph.to_networkx())
    if not planar:
        return None
    return PlaneEmbedding.from_networkx(embedding, graph.vertex_count)


def faces(embedding: PlaneEmbedding) -> List[Face]:
    """Face walks in order of their smallest half-edge; isolated vertices form a face of their own"""
    nx_embedding = embedding.to_networkx()
    visited: Set[HalfEdge] = set()
    result = []
    for v in range(embedding.vertex_count):
        if not embedding.rotation[v]:
            result.append(Face((v,), ()))
            continue
        for w in sorted(embedding.rotation[v]):
            if (v, w) in visited:
                continue
            walk = nx_embedding.traverse_face(v, w, mark_half_edges=visited)
            half_edges = tuple(zip(walk, walk[1:] + walk[:1]))
            result.append(Face(tuple(walk), half_edges))
    return result


def face_of(embedding: PlaneEmbedding, half_edge: HalfEdge) -> Face:
    walk = embedding.to_networkx().traverse_face(*half_edge)
    return Face(tuple(walk), tuple(zip(walk, walk[1:] + walk[:1])))


def outer_faces(embedding: PlaneEmbedding) -> List[Face]:
    """Walks bounding the outer region, including isolated vertices"""
    result = [face_of(embedding, h) for h in embedding.outer_face]
    result += [Face((v,), ()) for v in range(embedding.vertex_count) if not embedding.rotation[v]]
    return result


def outer_vertices(embedding: PlaneEmbedding) -> Set[int]:
    return {v for face in outer_faces(embedding) for v in face.vertices}


def euler_holds(embedding: PlaneEmbedding, face_list: Optional[List[Face]] = None) -> bool:
    """|V| - |E| + |F| = 1 + C with the outer faces of all components counted once"""
    face_list = faces(embedding) if face_list is None else face_list
    v = embedding.vertex_count
    e = sum(len(r) for r in embedding.rotation) // 2
    c = len(components(embedding))
    # the null graph still has the single unbounded face
    f = len(face_list) - max(c - 1, 0) if c else 1
    return v - e + f == 1 + c


def is_valid_embedding(graph: Graph, embedding: PlaneEmbedding) -> bool:
    if embedding.vertex_count != graph.vertex_count:
        return False
    for v, rotation in enumerate(embedding.rotation):
        if len(rotation) != len(set(rotation)) or set(rotation) != graph.adjacency[v]:
            return False
    try:
        embedding.to_networkx().check_structure()
    except nx.NetworkXException:
        return False

    edge_components = [c for c in components(embedding) if embedding.rotation[c[0]]]
    if len(embedding.outer_face) != len(edge_components):
        return False
    owner = {v: i for i, c in enumerate(edge_components) for v in c}
    seen = set()
    for u, w in embedding.outer_face:
        if not graph.has_edge(u, w) or owner[u] in seen:
            return False
        seen.add(owner[u])
    return True


def _with_apex(graph: Graph, vertices: Iterable[int]) -> Graph:
    apex = graph.vertex_count
    return graph.with_edges([(v, apex) for v in vertices], extra_vertices=1)


def common_face_test(graph: Graph, vertices: Iterable[int]) -> bool:
    """True iff G has a plane embedding with every given vertex on one face"""
    return is_planar(_with_apex(graph, set(vertices))) is not None


def common_face_embedding(graph: Graph, vertices: Iterable[int]) -> Optional[PlaneEmbedding]:
    """Embedding of G whose designated outer face holds every given vertex, if one exists"""
    targets = set(vertices)
    apex_embedding = is_planar(_with_apex(graph, targets))
    if apex_embedding is None:
        return None
    apex = graph.vertex_count
    rotation = [tuple(w for w in r if w != apex) for r in apex_embedding.rotation[:apex]]
    embedding = PlaneEmbedding.from_rotation(rotation)

    face_list = faces(embedding)
    outer = []
    for component in components(embedding):
        if not embedding.rotation[component[0]]:
            continue
        wanted = targets.intersection(component)
        candidates = [f for f in face_list if f.half_edges and f.half_edges[0][0] in component
                      and wanted <= set(f.vertices)]
        chosen = min(candidates, key=lambda f: min(f.half_edges))
        outer.append(min(chosen.half_edges))
    return embedding.with_outer_face(tuple(outer))


def is_outerplanar(graph: Graph) -> bool:
    return common_face_test(graph, graph.vertices)
