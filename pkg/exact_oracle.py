"""
SBSS Toolkit - Exact Oracle
Точные решения перебором для небольших экземпляров:
- MSBSS: минимальный сильно двусвязный остовный подграф (h)
- MSCSS: минимальный сильно связный остовный подграф (i, он же t)
- 2VCSS: минимальный двусвязный остовный подграф основы (s)
и жадный поиск 1-минимальных решений (отчёт об отношении к 2n, гипотеза не проверяется).

Перебор: размеры k = n, n+1, ...; k-подмножества в лексикографическом порядке
(сначала "взять дугу", потом "не брать"), отсечение по степеням:
у каждой вершины должна остаться входящая и исходящая дуга, а в основе - не меньше
двух соседей (для n ≥ 3). Первое найденное решение минимально по размеру и
лексикографически наименьшее среди минимальных.
"""

import logging
import random
from fractions import Fraction
from typing import Callable, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict

from config import Config
from connectivity import _biconnected_edges, _strongly_connected_arcs, explain_not_strongly_biconnected, is_biconnected
from errors import InstanceTooLargeError, NotStronglyBiconnectedError, PreconditionError
from graph_core import ArcSubset, Digraph, UndirectedView, _check_parent

logger = logging.getLogger(__name__)

E = Config.EMOJIS


# ============ МОДЕЛИ ============

class ExactResult(BaseModel):
    """Оптимум и свидетель; instances_explored - сколько полных подмножеств проверено"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    problem: str  # msbss / mscss / 2vcss
    optimum_size: int
    witness: Union[ArcSubset, FrozenSet[Tuple[int, int]]]
    instances_explored: int

    def witness_pairs(self) -> List[Tuple[int, int]]:
        if isinstance(self.witness, ArcSubset):
            return self.witness.arcs()
        return sorted(self.witness)


class MinimalityReport(BaseModel):
    """1-минимальное решение и его размер относительно 2n"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    minimal_solution: ArcSubset
    size: int
    ratio_to_2n: Fraction


# ============ ПЕРЕБОР ============

def _degrees_ok(n: int, pairs: Sequence[Tuple[int, int]], directed: bool, min_nbrs: int) -> bool:
    if directed and n >= 2:
        has_out = [False] * n
        has_in = [False] * n
        for u, w in pairs:
            has_out[u] = True
            has_in[w] = True
        if not (all(has_out) and all(has_in)):
            return False
    if min_nbrs:
        nbrs = [set() for _ in range(n)]
        for u, w in pairs:
            nbrs[u].add(w)
            nbrs[w].add(u)
        if any(len(x) < min_nbrs for x in nbrs):
            return False
    return True


def _search_size(n: int, items: Sequence[Tuple[int, int]], k: int, directed: bool, min_nbrs: int,
                 feasible: Callable[[List[Tuple[int, int]]], bool], stats: dict) -> Optional[List[int]]:
    """Лексикографически первое k-подмножество items, удовлетворяющее feasible"""
    m = len(items)
    avail_out = [0] * n
    avail_in = [0] * n
    pair_avail = {}
    for u, w in items:
        avail_out[u] += 1
        avail_in[w] += 1
        key = (u, w) if u < w else (w, u)
        pair_avail[key] = pair_avail.get(key, 0) + 1
    nb_avail = [0] * n
    for a, b in pair_avail:
        nb_avail[a] += 1
        nb_avail[b] += 1

    chosen: List[int] = []

    def exclude(i: int) -> bool:
        u, w = items[i]
        ok = True
        if directed:
            avail_out[u] -= 1
            avail_in[w] -= 1
            if avail_out[u] == 0 or avail_in[w] == 0:
                ok = False
        key = (u, w) if u < w else (w, u)
        pair_avail[key] -= 1
        if pair_avail[key] == 0:
            nb_avail[u] -= 1
            nb_avail[w] -= 1
            if nb_avail[u] < min_nbrs or nb_avail[w] < min_nbrs:
                ok = False
        return ok

    def restore(i: int):
        u, w = items[i]
        if directed:
            avail_out[u] += 1
            avail_in[w] += 1
        key = (u, w) if u < w else (w, u)
        if pair_avail[key] == 0:
            nb_avail[u] += 1
            nb_avail[w] += 1
        pair_avail[key] += 1

    def rec(i: int) -> bool:
        if len(chosen) == k:
            # все оставшиеся элементы исключены
            stats['explored'] += 1
            pairs = [items[j] for j in chosen]
            return _degrees_ok(n, pairs, directed, min_nbrs) and feasible(pairs)
        if m - i < k - len(chosen):
            return False

        chosen.append(i)
        if rec(i + 1):
            return True
        chosen.pop()

        found = exclude(i) and rec(i + 1)
        restore(i)
        return found

    return list(chosen) if rec(0) else None


def _minimum_subset(n: int, items: Sequence[Tuple[int, int]], k_from: int, directed: bool, min_nbrs: int,
                    feasible: Callable[[List[Tuple[int, int]]], bool], label: str) -> Tuple[List[int], int]:
    stats = {'explored': 0}
    for k in range(k_from, len(items) + 1):
        found = _search_size(n, items, k, directed, min_nbrs, feasible, stats)
        logger.debug(f"{E['search']} {label}: размер {k}, проверено {stats['explored']}")
        if found is not None:
            logger.info(f"{E['ok']} {label}: оптимум {k} (проверено {stats['explored']} подмножеств)")
            return found, stats['explored']
    # при выполненных предусловиях полный набор допустим
    raise PreconditionError(f"{label}: no feasible subset exists")


def _cap(cap: Optional[int]) -> int:
    return Config.EXACT_ARC_CAP if cap is None else cap


def _min_neighbours(n: int) -> int:
    if n >= 3:
        return 2
    return 1 if n == 2 else 0


# ============ ТОЧНЫЕ РЕШАТЕЛИ ============

def exact_msbss(g: Digraph, cap: Optional[int] = None) -> ExactResult:
    """h: минимальное H ⊆ E, для которого (V,H) сильно двусвязен"""
    cap = _cap(cap)
    if g.m > cap:
        raise InstanceTooLargeError(g.m, cap)
    reason = explain_not_strongly_biconnected(g)
    if reason is not None:
        raise NotStronglyBiconnectedError(reason)

    n = g.n
    found, explored = _minimum_subset(
        n, g.arcs, n if n >= 2 else 0, True, _min_neighbours(n),
        lambda pairs: _strongly_connected_arcs(n, pairs) and _biconnected_edges(n, pairs),
        'MSBSS',
    )
    return ExactResult(problem='msbss', optimum_size=len(found), witness=ArcSubset(g, found),
                       instances_explored=explored)


def exact_msccs(g: Digraph, cap: Optional[int] = None) -> ExactResult:
    """i: минимальное H ⊆ E, для которого (V,H) сильно связен"""
    cap = _cap(cap)
    if g.m > cap:
        raise InstanceTooLargeError(g.m, cap)
    if not _strongly_connected_arcs(g.n, g.arcs):
        raise PreconditionError(f"input is {explain_not_strongly_biconnected(g)}")

    n = g.n
    found, explored = _minimum_subset(
        n, g.arcs, n if n >= 2 else 0, True, 1 if n >= 2 else 0,
        lambda pairs: _strongly_connected_arcs(n, pairs),
        'MSCSS',
    )
    return ExactResult(problem='mscss', optimum_size=len(found), witness=ArcSubset(g, found),
                       instances_explored=explored)


def exact_2vcss(u: UndirectedView, cap: Optional[int] = None) -> ExactResult:
    """s: минимальный двусвязный остовный подграф неориентированного графа"""
    cap = _cap(cap)
    if len(u.edges) > cap:
        raise InstanceTooLargeError(len(u.edges), cap, 'edges')
    if not is_biconnected(u):
        raise PreconditionError("undirected graph is not biconnected")

    n = u.n
    # для n ≥ 3 двусвязному остовному подграфу нужно не меньше n рёбер
    k_from = n if n >= 3 else n - 1
    found, explored = _minimum_subset(
        n, u.edges, k_from, False, _min_neighbours(n),
        lambda pairs: _biconnected_edges(n, pairs),
        '2VCSS',
    )
    return ExactResult(problem='2vcss', optimum_size=len(found),
                       witness=frozenset(u.edges[i] for i in found), instances_explored=explored)


# ============ МИНИМАЛЬНОСТЬ ============

def _greedy_delete(members: Iterable[int], order: Sequence[int],
                   keep: Callable[[List[int]], bool]) -> List[int]:
    """
    Один проход удаления в порядке order: элемент удаляется, если keep(остаток) истинно.
    Для монотонных предикатов результат 1-минимален.
    """
    current = set(members)
    for i in order:
        if i not in current:
            continue
        current.discard(i)
        if not keep(sorted(current)):
            current.add(i)
    return sorted(current)


def minimalize(g: Digraph, start: ArcSubset, seed: Optional[int] = None) -> MinimalityReport:
    """
    Жадно удаляет дуги (по убыванию индекса, либо в случайном порядке при заданном seed),
    пока подграф остаётся сильно двусвязным.
    """
    _check_parent(g, start)
    n = g.n
    pairs = start.arcs()
    if not (_strongly_connected_arcs(n, pairs) and _biconnected_edges(n, pairs)):
        raise PreconditionError("start subgraph is not strongly biconnected")

    order = sorted(start.members, reverse=True)
    if seed is not None:
        random.Random(seed).shuffle(order)

    def keep(members: List[int]) -> bool:
        arcs = [g.arc(i) for i in members]
        return _strongly_connected_arcs(n, arcs) and _biconnected_edges(n, arcs)

    kept = _greedy_delete(start.members, order, keep)
    solution = ArcSubset(g, kept)
    ratio = Fraction(len(kept), 2 * n)
    logger.info(f"{E['stats']} Минимальное решение: {len(kept)} дуг, отношение к 2n = {ratio}")
    return MinimalityReport(minimal_solution=solution, size=len(kept), ratio_to_2n=ratio)
