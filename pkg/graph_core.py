"""
SBSS Toolkit - Graph Core
Неизменяемый ориентированный граф, обращение дуг, неориентированная основа,
подграфы по подмножеству дуг и индуцированные подграфы.

Вершины - плотные целые 0..n-1 (метки 1..n живут только в файлах и сообщениях).
Порядок дуг - порядок ввода (первое вхождение), от него зависит весь tie-breaking.
"""

import logging
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from errors import ContractError, InvalidGraphError

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]
Edge = Tuple[int, int]  # всегда (min, max)


# ============ ОРИЕНТИРОВАННЫЙ ГРАФ ============

class Digraph:
    """G=(V,E): n вершин и упорядоченный список уникальных дуг без петель"""

    __slots__ = ('_n', '_arcs', '_index', '_out', '_in')

    def __init__(self, n: int, arcs: Sequence[Arc]):
        # Конструктор доверяет входу, проверки - в build_digraph
        self._n = n
        self._arcs: Tuple[Arc, ...] = tuple(arcs)
        self._index: Dict[Arc, int] = {a: i for i, a in enumerate(self._arcs)}
        out: List[List[int]] = [[] for _ in range(n)]
        inc: List[List[int]] = [[] for _ in range(n)]
        for i, (u, w) in enumerate(self._arcs):
            out[u].append(i)
            inc[w].append(i)
        self._out = tuple(tuple(x) for x in out)
        self._in = tuple(tuple(x) for x in inc)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._arcs)

    @property
    def arcs(self) -> Tuple[Arc, ...]:
        return self._arcs

    def arc(self, index: int) -> Arc:
        return self._arcs[index]

    def arc_index(self, tail: int, head: int) -> Optional[int]:
        """Индекс дуги (tail, head) или None"""
        return self._index.get((tail, head))

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self._index

    def out_arcs(self, v: int) -> Tuple[int, ...]:
        """Индексы исходящих дуг v в порядке индексов"""
        return self._out[v]

    def in_arcs(self, v: int) -> Tuple[int, ...]:
        return self._in[v]

    def successors(self, v: int) -> List[int]:
        return [self._arcs[i][1] for i in self._out[v]]

    def predecessors(self, v: int) -> List[int]:
        return [self._arcs[i][0] for i in self._in[v]]

    def arc_set(self) -> FrozenSet[Arc]:
        return frozenset(self._arcs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self.arc_set() == other.arc_set()

    def __hash__(self) -> int:
        return hash((self._n, self.arc_set()))

    def __repr__(self) -> str:
        return f"Digraph(n={self._n}, m={self.m})"


def build_digraph(n: int, arcs: Iterable[Arc]) -> Digraph:
    """Построить граф с проверкой: концы в [0, n), без петель, дубликаты схлопываются"""
    if n < 1:
        raise InvalidGraphError(f"vertex count must be positive, got {n}")

    unique: List[Arc] = []
    seen = set()
    duplicates = 0
    for tail, head in arcs:
        tail, head = int(tail), int(head)
        if not (0 <= tail < n and 0 <= head < n):
            raise InvalidGraphError(f"arc ({tail}, {head}) has an endpoint outside [0, {n})")
        if tail == head:
            raise InvalidGraphError(f"self-loop at vertex {tail + 1} is not allowed")
        if (tail, head) in seen:
            duplicates += 1
            continue
        seen.add((tail, head))
        unique.append((tail, head))

    if duplicates:
        logger.debug(f"Схлопнуто дубликатов дуг: {duplicates}")
    return Digraph(n, unique)


def reverse(g: Digraph) -> Digraph:
    """G_r: дуга (u,w) есть iff в G есть (w,u); индекс дуги сохраняется"""
    return Digraph(g.n, [(w, u) for u, w in g.arcs])


# ============ ПОДМНОЖЕСТВО ДУГ ============

class ArcSubset:
    """H ⊆ E: множество индексов дуг родительского графа (значение, не меняется)"""

    __slots__ = ('_parent', '_members')

    def __init__(self, parent: Digraph, members: Iterable[int] = ()):
        members = frozenset(members)
        for i in members:
            if not 0 <= i < parent.m:
                raise ContractError(f"arc index {i} is out of range for a graph with {parent.m} arcs")
        self._parent = parent
        self._members: FrozenSet[int] = members

    @classmethod
    def full(cls, g: Digraph) -> 'ArcSubset':
        return cls(g, range(g.m))

    @classmethod
    def from_arcs(cls, g: Digraph, arcs: Iterable[Arc]) -> 'ArcSubset':
        """Подмножество по парам вершин; каждая пара обязана быть дугой g"""
        indices = []
        for tail, head in arcs:
            idx = g.arc_index(tail, head)
            if idx is None:
                raise ContractError(f"arc {tail + 1}->{head + 1} is not an arc of the parent graph")
            indices.append(idx)
        return cls(g, indices)

    @property
    def parent(self) -> Digraph:
        return self._parent

    @property
    def members(self) -> FrozenSet[int]:
        return self._members

    def arcs(self) -> List[Arc]:
        """Дуги в порядке индексов"""
        return [self._parent.arc(i) for i in sorted(self._members)]

    def union(self, other: 'ArcSubset') -> 'ArcSubset':
        _check_parent(self._parent, other)
        return ArcSubset(self._parent, self._members | other._members)

    def with_arc(self, index: int) -> 'ArcSubset':
        return ArcSubset(self._parent, self._members | {index})

    def without(self, index: int) -> 'ArcSubset':
        return ArcSubset(self._parent, self._members - {index})

    def __contains__(self, index) -> bool:
        return index in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._members))

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArcSubset):
            return NotImplemented
        return _same_graph(self._parent, other._parent) and self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"ArcSubset(size={len(self._members)}, parent={self._parent!r})"


def _same_graph(a: Digraph, b: Digraph) -> bool:
    # Индексы дуг совпадают только при одинаковом порядке дуг
    return a is b or (a.n == b.n and a.arcs == b.arcs)


def _check_parent(g: Digraph, h: ArcSubset):
    if not _same_graph(h.parent, g):
        raise ContractError("arc subset belongs to a different graph")


def subgraph(g: Digraph, h: ArcSubset) -> Digraph:
    """(V,H): тот же n, ровно дуги из H (в порядке индексов g)"""
    _check_parent(g, h)
    return Digraph(g.n, h.arcs())


def induced(g: Digraph, vertices: Iterable[int]) -> Tuple[Digraph, List[int]]:
    """
    Индуцированный подграф g[S].
    Возвращает (граф на 0..|S|-1, список исходных вершин по новым id)
    """
    original = sorted(set(vertices))
    local = {v: i for i, v in enumerate(original)}
    arcs = [(local[u], local[w]) for u, w in g.arcs if u in local and w in local]
    return Digraph(max(len(original), 1), arcs), original


# ============ НЕОРИЕНТИРОВАННАЯ ОСНОВА ============

class UndirectedView:
    """Простой неориентированный граф: антипараллельные дуги дают одно ребро"""

    __slots__ = ('_n', '_edges', '_adj')

    def __init__(self, n: int, edges: Iterable[Edge]):
        normalized = set()
        for u, w in edges:
            if u == w:
                raise InvalidGraphError(f"self-loop at vertex {u + 1} is not allowed")
            if not (0 <= u < n and 0 <= w < n):
                raise InvalidGraphError(f"edge ({u}, {w}) has an endpoint outside [0, {n})")
            normalized.add((u, w) if u < w else (w, u))
        self._n = n
        self._edges: Tuple[Edge, ...] = tuple(sorted(normalized))
        adj: List[List[int]] = [[] for _ in range(n)]
        for u, w in self._edges:
            adj[u].append(w)
            adj[w].append(u)
        self._adj = tuple(tuple(sorted(x)) for x in adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Рёбра (u, w), u < w, отсортированы"""
        return self._edges

    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self._edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adj[v]

    def __eq__(self, other) -> bool:
        if not isinstance(other, UndirectedView):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"UndirectedView(n={self._n}, edges={len(self._edges)})"


def underlying(g: Digraph) -> UndirectedView:
    """Основа G: одно ребро на каждую неупорядоченную пару, встречающуюся в любой ориентации"""
    return UndirectedView(g.n, g.arcs)
