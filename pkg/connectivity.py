"""
SBSS Toolkit - Connectivity
Сильно связные компоненты (Тарьян), точки сочленения и блоки (Хопкрофт-Тарьян),
сильные точки сочленения и сильные мосты (наивно: удалить и проверить),
предикат сильной двусвязности и разложение на части (итерация SCC/блоки до неподвижной точки).

Все функции чистые, входы неизменяемы.
"""

import logging
from typing import FrozenSet, List, NamedTuple, Optional, Sequence, Set, Tuple

from errors import DisconnectedGraphError, PreconditionError
from graph_core import Arc, Digraph, UndirectedView, induced, underlying

logger = logging.getLogger(__name__)


# ============ ТИПЫ ============

class SccPartition(NamedTuple):
    """Разбиение на сильно связные компоненты; номера упорядочены по наименьшей вершине"""
    component_of: Tuple[int, ...]
    count: int

    def components(self) -> List[List[int]]:
        groups: List[List[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.component_of):
            groups[c].append(v)
        return groups


class BlockSet(NamedTuple):
    """Блоки неориентированного графа и его точки сочленения"""
    blocks: Tuple[Tuple[int, ...], ...]
    articulation_points: FrozenSet[int]


class SbcDecomposition(NamedTuple):
    """Части - неподвижная точка оператора уточнения (могут пересекаться)"""
    parts: Tuple[Tuple[int, ...], ...]


# ============ БЫСТРЫЕ ПРЕДИКАТЫ ============
# Работают на голых списках дуг/рёбер: их вызывает точный перебор миллионы раз

def _reaches_all(n: int, adj: Sequence[Sequence[int]], src: int = 0) -> Optional[int]:
    """Обход из src; возвращает первую недостижимую вершину или None"""
    seen = [False] * n
    seen[src] = True
    stack = [src]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    for v in range(n):
        if not seen[v]:
            return v
    return None


def _strongly_connected_arcs(n: int, arcs: Sequence[Arc]) -> bool:
    """Сильная связность: всё достижимо из 0 и 0 достижима из всех"""
    if n == 1:
        return True
    out: List[List[int]] = [[] for _ in range(n)]
    inc: List[List[int]] = [[] for _ in range(n)]
    for u, w in arcs:
        out[u].append(w)
        inc[w].append(u)
    return _reaches_all(n, out) is None and _reaches_all(n, inc) is None


def _undirected_adjacency(n: int, pairs: Sequence[Tuple[int, int]]) -> List[List[int]]:
    """Списки соседей простого графа (антипараллельные пары схлопываются)"""
    nbrs: List[Set[int]] = [set() for _ in range(n)]
    for u, w in pairs:
        nbrs[u].add(w)
        nbrs[w].add(u)
    return [sorted(x) for x in nbrs]


def _block_decomposition(n: int, adj: Sequence[Sequence[int]]) -> Tuple[List[Tuple[int, ...]], Set[int], int]:
    """
    Итеративный DFS Хопкрофта-Тарьяна со стеком рёбер.
    Возвращает (блоки, точки сочленения, число компонент связности).
    Изолированная вершина - отдельный блок из одной вершины.
    """
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    blocks: List[Tuple[int, ...]] = []
    cut: Set[int] = set()
    components = 0
    clock = 0

    for start in range(n):
        if disc[start] != -1:
            continue
        components += 1
        disc[start] = low[start] = clock
        clock += 1
        if not adj[start]:
            blocks.append((start,))
            continue

        root_children = 0
        edge_stack: List[Tuple[int, int]] = []
        stack = [(start, iter(adj[start]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append((v, w))
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
                if w != parent[v] and disc[w] < disc[v]:
                    # обратное ребро
                    low[v] = min(low[v], disc[w])
                    edge_stack.append((v, w))
            if advanced:
                continue

            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                # p отделяет поддерево v: снимаем блок со стека рёбер
                block = set()
                while True:
                    e = edge_stack.pop()
                    block.update(e)
                    if e == (p, v):
                        break
                blocks.append(tuple(sorted(block)))
                if p == start:
                    root_children += 1
                else:
                    cut.add(p)
        if root_children >= 2:
            cut.add(start)

    blocks.sort(key=lambda b: (b[0], b))
    return blocks, cut, components


def _biconnected_edges(n: int, pairs: Sequence[Tuple[int, int]]) -> bool:
    """Основа связна и без точек сочленения (n=1 и K2 - двусвязны)"""
    if n == 1:
        return True
    _, cut, components = _block_decomposition(n, _undirected_adjacency(n, pairs))
    return components == 1 and not cut


# ============ СИЛЬНО СВЯЗНЫЕ КОМПОНЕНТЫ ============

def scc(g: Digraph) -> SccPartition:
    """Итеративный алгоритм Тарьяна; компоненты нумеруются по наименьшей вершине"""
    n = g.n
    arcs = g.arcs
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    found: List[List[int]] = []
    counter = 0

    for s in range(n):
        if index[s] != -1:
            continue
        index[s] = low[s] = counter
        counter += 1
        stack.append(s)
        on_stack[s] = True
        work = [(s, 0)]
        while work:
            v, pos = work[-1]
            succ = g.out_arcs(v)
            if pos < len(succ):
                work[-1] = (v, pos + 1)
                w = arcs[succ[pos]][1]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue

            work.pop()
            if work:
                p = work[-1][0]
                low[p] = min(low[p], low[v])
            if low[v] == index[v]:
                members = []
                while True:
                    x = stack.pop()
                    on_stack[x] = False
                    members.append(x)
                    if x == v:
                        break
                found.append(members)

    found.sort(key=min)
    component_of = [0] * n
    for c, members in enumerate(found):
        for v in members:
            component_of[v] = c
    return SccPartition(tuple(component_of), len(found))


def is_strongly_connected(g: Digraph) -> bool:
    return g.n >= 1 and scc(g).count == 1


# ============ БЛОКИ И ТОЧКИ СОЧЛЕНЕНИЯ ============

def articulation_points(u: UndirectedView) -> BlockSet:
    """Все блоки и точки сочленения связного неориентированного графа"""
    adj = [u.neighbors(v) for v in range(u.n)]
    blocks, cut, components = _block_decomposition(u.n, adj)
    if components > 1:
        missing = _reaches_all(u.n, adj)
        raise DisconnectedGraphError(
            f"undirected graph is disconnected: vertex {missing + 1} is unreachable from vertex 1"
        )
    return BlockSet(tuple(blocks), frozenset(cut))


def is_biconnected(u: UndirectedView) -> bool:
    """Связен и без точек сочленения; одна вершина и K2 считаются двусвязными"""
    if u.n == 1:
        return True
    try:
        return not articulation_points(u).articulation_points
    except DisconnectedGraphError:
        return False


def is_strongly_biconnected(g: Digraph) -> bool:
    """Сильно связен и основа не имеет точек сочленения"""
    return is_strongly_connected(g) and is_biconnected(underlying(g))


def explain_not_strongly_biconnected(g: Digraph) -> Optional[str]:
    """Причина, по которой g не сильно двусвязен (метки 1..n), или None"""
    out = [g.successors(v) for v in range(g.n)]
    inc = [g.predecessors(v) for v in range(g.n)]
    missing = _reaches_all(g.n, out)
    if missing is not None:
        return f"not strongly connected: vertex {missing + 1} is unreachable from vertex 1"
    missing = _reaches_all(g.n, inc)
    if missing is not None:
        return f"not strongly connected: vertex {missing + 1} cannot reach vertex 1"
    if g.n == 1:
        return None
    cut = articulation_points(underlying(g)).articulation_points
    if cut:
        return f"articulation point {min(cut) + 1} in underlying graph"
    return None


# ============ СИЛЬНЫЕ ТОЧКИ СОЧЛЕНЕНИЯ И МОСТЫ ============

def _require_strongly_connected(g: Digraph):
    if not is_strongly_connected(g):
        reason = explain_not_strongly_biconnected(g)
        raise PreconditionError(f"input is {reason}")


def strong_articulation_points(g: Digraph) -> FrozenSet[int]:
    """v, после удаления которой оставшийся граф не сильно связен (O(n(n+m)))"""
    _require_strongly_connected(g)
    result = set()
    if g.n <= 2:
        return frozenset()
    for v in range(g.n):
        rest, _ = induced(g, [x for x in range(g.n) if x != v])
        if not _strongly_connected_arcs(rest.n, rest.arcs):
            result.add(v)
    return frozenset(result)


def strong_bridges(g: Digraph) -> FrozenSet[int]:
    """Индексы дуг, удаление которых разрушает сильную связность"""
    _require_strongly_connected(g)
    result = set()
    for i in range(g.m):
        rest = g.arcs[:i] + g.arcs[i + 1:]
        if not _strongly_connected_arcs(g.n, rest):
            result.add(i)
    return frozenset(result)


# ============ РАЗЛОЖЕНИЕ НА СИЛЬНО ДВУСВЯЗНЫЕ ЧАСТИ ============

def _sorted_parts(parts) -> Tuple[Tuple[int, ...], ...]:
    return tuple(sorted(set(parts), key=lambda p: (p[0], p)))


def refine_once(g: Digraph, parts: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """
    Один раунд уточнения: блоки основы индуцированного подграфа каждой части,
    затем разбиение каждого блока по SCC. Части, строго вложенные в другие, отбрасываются.
    """
    fresh = set()
    for part in parts:
        sub, original = induced(g, part)
        adj = _undirected_adjacency(sub.n, sub.arcs)
        blocks, _, _ = _block_decomposition(sub.n, adj)
        for block in blocks:
            inner, inner_original = induced(g, [original[b] for b in block])
            for comp in scc(inner).components():
                fresh.add(tuple(sorted(inner_original[c] for c in comp)))

    as_sets = {p: set(p) for p in fresh}
    kept = [p for p in fresh if not any(as_sets[p] < as_sets[q] for q in fresh)]
    return _sorted_parts(kept)


def sbc_decomposition(g: Digraph) -> SbcDecomposition:
    """Итерация refine_once от классов SCC до неподвижной точки"""
    parts = _sorted_parts(tuple(c) for c in scc(g).components())
    rounds = 0
    while True:
        nxt = refine_once(g, parts)
        rounds += 1
        if nxt == parts:
            break
        parts = nxt
    logger.debug(f"Разложение: {len(parts)} частей за {rounds} раундов")
    return SbcDecomposition(parts)
