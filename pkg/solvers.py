"""
SBSS Toolkit - Solvers
3-аппроксимация (out-дерево ∪ in-дерево + достройка до двусвязности),
достройка произвольного сильно связного подграфа (t-аппроксимация -> (1+t)h),
объединение SCSS и 2VCSS основы с подключаемыми подрешателями.

Достройка: на каждом шаге добавляется дуга из E∖E_v с наименьшим индексом,
концы которой не лежат в общем блоке основы G_v. Такая дуга сливает все блоки
на пути дерева блоков, так что число блоков строго убывает.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict

from config import Config
from connectivity import (
    _biconnected_edges, _block_decomposition, _strongly_connected_arcs,
    _undirected_adjacency, explain_not_strongly_biconnected, is_biconnected,
    is_strongly_biconnected,
)
from errors import (
    ContractError, NotStronglyBiconnectedError, PreconditionError, UnreachableVertexError,
)
from exact_oracle import _greedy_delete
from graph_core import ArcSubset, Digraph, Edge, UndirectedView, _check_parent, reverse, subgraph

logger = logging.getLogger(__name__)

E = Config.EMOJIS


# ============ МОДЕЛИ ============

class SpanningTree:
    """Остовная арборесценция: parent_arc[v] - индекс дуги g, через которую v подвешена"""

    __slots__ = ('root', 'parent_arc', 'orientation', '_graph')

    def __init__(self, graph: Digraph, root: int, parent_arc: Dict[int, int], orientation: str):
        self._graph = graph
        self.root = root
        self.parent_arc = parent_arc
        self.orientation = orientation  # 'out' - от корня, 'in' - к корню

    def arcs(self) -> ArcSubset:
        return ArcSubset(self._graph, self.parent_arc.values())

    def __len__(self) -> int:
        return len(self.parent_arc)

    def __repr__(self) -> str:
        return f"SpanningTree(root={self.root}, orientation={self.orientation!r}, arcs={len(self)})"


class SolveReport(BaseModel):
    """Результат решателя; solution всегда сильно двусвязен"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    algorithm: str
    solution: ArcSubset
    size: int
    n: int
    m: int
    bound_3n_minus_3_ok: bool
    strongly_biconnected: bool
    iterations_of_augment: int = 0
    root_used: Optional[int] = None
    seed_size: Optional[int] = None      # |E_1| до достройки (t-часть в (1+t)h)
    arcs_added: int = 0                  # добавлено достройкой (≤ n-1)
    block_counts: List[int] = []         # число блоков основы перед каждым шагом и в конце
    scss_size: Optional[int] = None      # i при точных подрешателях
    two_vcss_size: Optional[int] = None  # s при точных подрешателях
    lifted_new: Optional[int] = None     # сколько рёбер 2VCSS потребовали новую дугу

    def as_dict(self) -> dict:
        """Плоский словарь для CLI (метки 1..n)"""
        data = {
            'algorithm': self.algorithm,
            'n': self.n,
            'm': self.m,
            'size': self.size,
            'bound_3n_minus_3': 3 * (self.n - 1),
            'bound_3n_minus_3_ok': self.bound_3n_minus_3_ok,
            'strongly_biconnected': self.strongly_biconnected,
            'iterations_of_augment': self.iterations_of_augment,
            'arcs_added': self.arcs_added,
        }
        if self.root_used is not None:
            data['root'] = self.root_used + 1
        if self.seed_size is not None:
            data['seed_size'] = self.seed_size
        if self.scss_size is not None:
            data['scss_size'] = self.scss_size
        if self.two_vcss_size is not None:
            data['two_vcss_size'] = self.two_vcss_size
        data['arcs'] = [[u + 1, w + 1] for u, w in self.solution.arcs()]
        return data


# ============ ОСТОВНЫЕ ДЕРЕВЬЯ ============

def _dfs_parent_arcs(g: Digraph, v: int, direction: str) -> Dict[int, int]:
    """DFS из v, соседи в порядке индексов дуг"""
    if not 0 <= v < g.n:
        raise PreconditionError(f"root {v + 1} is outside [1, {g.n}]")
    seen = [False] * g.n
    seen[v] = True
    parent_arc: Dict[int, int] = {}
    work = [(v, 0)]
    while work:
        x, pos = work[-1]
        succ = g.out_arcs(x)
        if pos >= len(succ):
            work.pop()
            continue
        work[-1] = (x, pos + 1)
        i = succ[pos]
        w = g.arc(i)[1]
        if not seen[w]:
            seen[w] = True
            parent_arc[w] = i
            work.append((w, 0))

    for u in range(g.n):
        if not seen[u]:
            raise UnreachableVertexError(u, v, direction)
    return parent_arc


def out_tree(g: Digraph, v: int) -> SpanningTree:
    """Остовное out-дерево с корнем v (DFS, соседи в порядке индексов дуг)"""
    return SpanningTree(g, v, _dfs_parent_arcs(g, v, 'out'), 'out')


def in_tree(g: Digraph, v: int) -> SpanningTree:
    """In-дерево к корню v: DFS по обращённому графу, дуги в исходной ориентации"""
    # reverse сохраняет индексы, поэтому индекс дуги G_r - это индекс дуги G
    return SpanningTree(g, v, _dfs_parent_arcs(reverse(g), v, 'in'), 'in')


def branching_union(g: Digraph, v: int) -> ArcSubset:
    """Объединение out- и in-дерева: сильно связный остовный подграф, не более 2(n-1) дуг"""
    return out_tree(g, v).arcs().union(in_tree(g, v).arcs())


# ============ ДОСТРОЙКА ДО ДВУСВЯЗНОСТИ ============

def _augment(g: Digraph, members: Set[int]) -> Tuple[Set[int], List[int], List[int]]:
    """
    Цикл достройки. Возвращает (итоговые индексы, добавленные дуги, число блоков по шагам).
    members должен задавать сильно связный подграф.
    """
    current = set(members)
    added: List[int] = []
    block_counts: List[int] = []
    while True:
        adj = _undirected_adjacency(g.n, [g.arc(i) for i in current])
        blocks, cut, components = _block_decomposition(g.n, adj)
        block_counts.append(len(blocks))
        if components == 1 and not cut:
            break

        where: List[Set[int]] = [set() for _ in range(g.n)]
        for b_id, block in enumerate(blocks):
            for x in block:
                where[x].add(b_id)

        candidate = None
        for i in range(g.m):
            if i in current:
                continue
            u, w = g.arc(i)
            if where[u].isdisjoint(where[w]):
                candidate = i
                break
        if candidate is None:
            raise NotStronglyBiconnectedError(
                f"articulation point {min(cut) + 1} cannot be bypassed by any arc of the input"
            )

        current.add(candidate)
        added.append(candidate)
        u, w = g.arc(candidate)
        logger.debug(f"{E['link']} Добавлена дуга {u + 1}->{w + 1}, блоков было {len(blocks)}")

    return current, added, block_counts


def _require_strongly_biconnected(g: Digraph):
    reason = explain_not_strongly_biconnected(g)
    if reason is not None:
        raise NotStronglyBiconnectedError(reason)


def _report(g: Digraph, algorithm: str, members: Iterable[int], **fields) -> SolveReport:
    solution = ArcSubset(g, members)
    sb = is_strongly_biconnected(subgraph(g, solution))
    if not sb:
        raise ContractError(f"{algorithm}: result is not strongly biconnected")
    return SolveReport(
        algorithm=algorithm,
        solution=solution,
        size=len(solution),
        n=g.n,
        m=g.m,
        bound_3n_minus_3_ok=len(solution) <= 3 * (g.n - 1),
        strongly_biconnected=sb,
        **fields,
    )


def augment_to_biconnected(g: Digraph, seed: ArcSubset) -> SolveReport:
    """Достроить сильно связный подграф seed до сильно двусвязного (не более n-1 новых дуг)"""
    _check_parent(g, seed)
    _require_strongly_biconnected(g)
    if not _strongly_connected_arcs(g.n, seed.arcs()):
        reason = explain_not_strongly_biconnected(subgraph(g, seed))
        raise PreconditionError(f"seed subgraph is {reason}")

    members, added, block_counts = _augment(g, set(seed.members))
    logger.info(f"{E['ok']} Достройка: +{len(added)} дуг, итог {len(members)}")
    return _report(
        g, 'augment', members,
        iterations_of_augment=len(added),
        seed_size=len(seed),
        arcs_added=len(added),
        block_counts=block_counts,
    )


# ============ АЛГОРИТМ 1 ============

def algorithm1(g: Digraph, v: int) -> SolveReport:
    """3-аппроксимация: out-дерево ∪ in-дерево корня v, затем достройка"""
    _require_strongly_biconnected(g)
    if not 0 <= v < g.n:
        raise PreconditionError(f"root {v + 1} is outside [1, {g.n}]")

    t_out = out_tree(g, v)
    t_in = in_tree(g, v)
    seed = t_out.arcs().union(t_in.arcs())
    logger.info(f"{E['tree']} Корень {v + 1}: |T|={len(t_out)}, |T_v|={len(t_in)}, объединение {len(seed)}")

    members, added, block_counts = _augment(g, set(seed.members))
    report = _report(
        g, 'alg1', members,
        iterations_of_augment=len(added),
        root_used=v,
        seed_size=len(seed),
        arcs_added=len(added),
        block_counts=block_counts,
    )
    logger.info(f"{E['ok']} Алгоритм 1: {report.size} дуг (граница {3 * (g.n - 1)})")
    return report


# ============ ОБЪЕДИНЕНИЕ SCSS И 2VCSS ============

def _normalize_edges(edges: Iterable[Tuple[int, int]]) -> FrozenSet[Edge]:
    return frozenset((u, w) if u < w else (w, u) for u, w in edges)


def combine_and_augment(g: Digraph, scss: ArcSubset, two_vcss: Iterable[Tuple[int, int]]) -> SolveReport:
    """
    scss ∪ lift(two_vcss). Ребро {u,w} поднимается в дугу g: если одна из ориентаций
    уже в scss - бесплатно, иначе берётся лексикографически меньшая существующая.
    """
    _check_parent(g, scss)
    edges = _normalize_edges(two_vcss)

    if not _strongly_connected_arcs(g.n, scss.arcs()):
        reason = explain_not_strongly_biconnected(subgraph(g, scss))
        raise PreconditionError(f"scss subgraph is {reason}")
    foreign = sorted(edges - UndirectedView(g.n, g.arcs).edge_set())
    if foreign:
        u, w = foreign[0]
        raise PreconditionError(f"two_vcss edge {u + 1}-{w + 1} is not an edge of the underlying graph")
    if not _biconnected_edges(g.n, sorted(edges)):
        raise PreconditionError("two_vcss is not a biconnected spanning subgraph of the underlying graph")

    members = set(scss.members)
    lifted_new = 0
    for u, w in sorted(edges):
        forward = g.arc_index(u, w)
        backward = g.arc_index(w, u)
        if (forward is not None and forward in members) or (backward is not None and backward in members):
            continue
        members.add(forward if forward is not None else backward)
        lifted_new += 1

    logger.info(f"{E['link']} Объединение: |scss|={len(scss)}, |2vcss|={len(edges)}, новых дуг {lifted_new}")
    return _report(
        g, 'combine', members,
        scss_size=len(scss),
        two_vcss_size=len(edges),
        lifted_new=lifted_new,
        arcs_added=lifted_new,
    )


# ============ ЭВРИСТИЧЕСКИЕ ПОДРЕШАТЕЛИ ============

def greedy_scss(g: Digraph) -> ArcSubset:
    """1-минимальный сильно связный остовный подграф (удаление по убыванию индекса)"""
    if not _strongly_connected_arcs(g.n, g.arcs):
        raise PreconditionError(f"input is {explain_not_strongly_biconnected(g)}")
    kept = _greedy_delete(
        range(g.m),
        sorted(range(g.m), reverse=True),
        lambda members: _strongly_connected_arcs(g.n, [g.arc(i) for i in members]),
    )
    return ArcSubset(g, kept)


def greedy_2vcss(u: UndirectedView) -> FrozenSet[Edge]:
    """1-минимальный двусвязный остовный подграф основы"""
    if not is_biconnected(u):
        raise PreconditionError("underlying graph is not biconnected")
    edges = list(u.edges)
    kept = _greedy_delete(
        range(len(edges)),
        sorted(range(len(edges)), reverse=True),
        lambda members: _biconnected_edges(u.n, [edges[i] for i in members]),
    )
    return frozenset(edges[i] for i in kept)
