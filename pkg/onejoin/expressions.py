"""Graph-name expressions such as "(C3∪P1)+4P1", "3P2+3P1", "K_{4,3,1}" or "K6".

Grammar (whitespace ignored, "∪" and "u" both mean disjoint union):

    expr   := union ('+' union)*
    union  := factor ('u' factor)*
    factor := [count] atom
    atom   := '(' expr ')' | 'K_{' int (',' int)* '}' | ('K' | 'C' | 'P' | 'W' | 'G') int
"""
import re
from typing import List, Tuple

from model.graph import Graph, PartitionSpec
from model.operators import complete_multipartite, copies, disjoint_union, join, standard_graph
from .exceptions import UnknownFamilyError

_TOKEN = re.compile(r'K_\{[0-9,]+\}|[KCPWG][0-9]+|[0-9]+|[()+u]')


def normalize(name: str) -> str:
    """Canonical spelling: no spaces, "u" for union, multipartite parts non-increasing"""
    name = re.sub(r'\s+', '', name).replace('∪', 'u')

    def sort_parts(m):
        parts = sorted((int(p) for p in m.group(1).split(',')), reverse=True)
        return PartitionSpec(tuple(parts)).label

    return re.sub(r'K_\{([0-9,]+)\}', sort_parts, name)


def _tokenize(text: str) -> List[str]:
    tokens, position = [], 0
    while position < len(text):
        m = _TOKEN.match(text, position)
        if not m:
            raise UnknownFamilyError(text)
        tokens.append(m.group(0))
        position = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.position = 0

    def peek(self) -> str:
        return self.tokens[self.position] if self.position < len(self.tokens) else ''

    def take(self) -> str:
        token = self.peek()
        if not token:
            raise UnknownFamilyError(self.text)
        self.position += 1
        return token

    def parse(self) -> Graph:
        graph = self.expr()
        if self.peek():
            raise UnknownFamilyError(self.text)
        return graph

    def expr(self) -> Graph:
        graph = self.union()
        while self.peek() == '+':
            self.take()
            graph = join(graph, self.union())
        return graph

    def union(self) -> Graph:
        graph = self.factor()
        while self.peek() == 'u':
            self.take()
            graph = disjoint_union(graph, self.factor())
        return graph

    def factor(self) -> Graph:
        count = int(self.take()) if self.peek().isdigit() else 1
        return copies(self.atom(), count)

    def atom(self) -> Graph:
        token = self.take()
        if token == '(':
            graph = self.expr()
            if self.take() != ')':
                raise UnknownFamilyError(self.text)
            return graph
        if token.startswith('K_{'):
            return complete_multipartite(PartitionSpec.of(*(int(p) for p in token[3:-1].split(','))))
        if token[0] not in 'KCPWG':
            raise UnknownFamilyError(self.text)
        return _atom(token[0], int(token[1:]), self.text)


def _atom(kind: str, size: int, text: str) -> Graph:
    from .families import four_vertex_graph, wheel

    try:
        if kind == 'K':
            return standard_graph('complete', size)
        if kind == 'C':
            return standard_graph('cycle', size)
        if kind == 'P':
            return standard_graph('path', size)
        if kind == 'W':
            return wheel(size)
        if kind == 'G':
            return four_vertex_graph(size)
    except ValueError as e:
        raise UnknownFamilyError(f'{text} ({e})')
    raise UnknownFamilyError(text)


def parse_graph(name: str) -> Graph:
    return _Parser(normalize(name)).parse()


def split_join(name: str) -> Tuple[str, str]:
    """Factors of a top-level join "A+B", or ValueError when the name is not a join"""
    text = normalize(name)
    depth = 0
    for i, ch in enumerate(text):
        depth += {'(': 1, ')': -1}.get(ch, 0)
        if ch == '+' and depth == 0:
            return text[:i], text[i + 1:]
    raise ValueError(f'"{name}" is not a join of two factors')
