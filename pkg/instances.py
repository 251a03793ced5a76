"""
SBSS Toolkit - Instances
Формат файла (UTF-8):
    n m          # заголовок
    u w          # m строк с дугами, метки 1..n
'#' - комментарий до конца строки, пустые строки пропускаются.
Повтор дуги - предупреждение в лог, дубликат схлопывается.

Генераторы детерминированы при фиксированном seed:
- hamiltonian-chords: цикл 0→1→...→n-1→0 + хорды (оптимум MSBSS = n)
- random-sb: гамильтонов цикл по случайной перестановке + случайные дуги до target_m
- random-ear: цикл + открытые ориентированные уши (обычно без гамильтонова цикла)
- figure1: эталонный граф на 13 вершинах с 16 дугами
"""

import logging
import random
from typing import FrozenSet, List, Literal, Optional, Tuple

from pydantic import BaseModel

from config import Config
from errors import GeneratorError, InvalidGraphError, ParseError
from graph_core import Arc, ArcSubset, Digraph, Edge, build_digraph

logger = logging.getLogger(__name__)

E = Config.EMOJIS


# ============ РАЗБОР ============

def _parse_pairs(text: str) -> Tuple[int, int, List[Tuple[int, int, int]]]:
    """Заголовок и пары (u, w, номер строки) в id 0..n-1, без проверки дубликатов"""
    header: Optional[Tuple[int, int]] = None
    pairs: List[Tuple[int, int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            expected = "header 'n m'" if header is None else "arc line 'u w'"
            raise ParseError(f"expected {expected}, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer value in {line!r}", lineno)

        if header is None:
            if a < 1 or b < 0:
                raise ParseError(f"invalid header: n={a}, m={b}", lineno)
            header = (a, b)
            continue

        n = header[0]
        for label in (a, b):
            if not 1 <= label <= n:
                raise ParseError(f"label {label} is out of range [1, {n}]", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a} is not allowed", lineno)
        pairs.append((a - 1, b - 1, lineno))

    if header is None:
        raise ParseError("empty input: missing header 'n m'")
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"header declares {m} lines but {len(pairs)} were found")
    return n, m, pairs


def parse_edge_list(text: str) -> Digraph:
    """Текст EdgeListFile -> Digraph (метка k -> id k-1)"""
    n, _, pairs = _parse_pairs(text)
    seen = set()
    arcs: List[Arc] = []
    for u, w, lineno in pairs:
        if (u, w) in seen:
            logger.warning(f"{E['warning']} line {lineno}: duplicate arc {u + 1} {w + 1} ignored")
            continue
        seen.add((u, w))
        arcs.append((u, w))
    return build_digraph(n, arcs)


def parse_undirected_edge_list(text: str) -> Tuple[int, FrozenSet[Edge]]:
    """Тот же формат, строки - неориентированные рёбера (для готового 2VCSS)"""
    n, _, pairs = _parse_pairs(text)
    edges = set()
    for u, w, lineno in pairs:
        key = (u, w) if u < w else (w, u)
        if key in edges:
            logger.warning(f"{E['warning']} line {lineno}: duplicate edge {u + 1} {w + 1} ignored")
        edges.add(key)
    return n, frozenset(edges)


def _decode(raw: bytes) -> str:
    try:
        return raw.decode('utf-8')
    except UnicodeDecodeError as e:
        line = raw[:e.start].count(b'\n') + 1
        raise ParseError(f"invalid UTF-8 byte 0x{raw[e.start]:02x} at offset {e.start}", line)


def read_edge_list(path: str) -> Digraph:
    with open(path, 'rb') as f:
        g = parse_edge_list(_decode(f.read()))
    logger.info(f"{E['file']} {path}: n={g.n}, m={g.m}")
    return g


def read_undirected_edge_list(path: str) -> Tuple[int, FrozenSet[Edge]]:
    with open(path, 'rb') as f:
        return parse_undirected_edge_list(_decode(f.read()))


def write_edge_list(path: str, g: Digraph):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(emit_edge_list(g) + '\n')
    logger.info(f"{E['file']} Записан {path}: n={g.n}, m={g.m}")


# ============ ВЫВОД ============

def emit_edge_list(g: Digraph) -> str:
    """Каноническая форма: дуги отсортированы по (tail, head), метки 1..n"""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u + 1} {w + 1}" for u, w in sorted(g.arcs))
    return '\n'.join(lines)


def emit_dot(g: Digraph, highlight: Optional[ArcSubset] = None) -> str:
    """DOT digraph; выделенные дуги получают атрибуты Config.DOT_HIGHLIGHT"""
    marked = highlight.members if highlight is not None else frozenset()
    lines = ['digraph G {']
    lines.extend(f"  {v + 1};" for v in range(g.n))
    for i, (u, w) in enumerate(g.arcs):
        if i in marked:
            lines.append(f"  {u + 1} -> {w + 1} [{Config.DOT_HIGHLIGHT}];")
        else:
            lines.append(f"  {u + 1} -> {w + 1};")
    lines.append('}')
    return '\n'.join(lines) + '\n'


# ============ ЭТАЛОН FIGURE1 ============

# Дуги, которых нет в оптимумах (метки 1..n)
FIGURE1_NOT_IN_SCSS = ((12, 2), (7, 8))
FIGURE1_NOT_IN_SBSS = ((7, 8),)


def load_figure1(path: Optional[str] = None) -> Digraph:
    """Эталонный граф: 13 вершин, 16 дуг"""
    return read_edge_list(path or Config.FIGURE1_PATH)


def _figure1_without(g: Digraph, dropped) -> ArcSubset:
    drop = {g.arc_index(u - 1, w - 1) for u, w in dropped}
    if None in drop:
        raise InvalidGraphError("graph is not the figure1 fixture")
    return ArcSubset(g, [i for i in range(g.m) if i not in drop])


def figure1_scss(g: Digraph) -> ArcSubset:
    """Оптимальный SCSS эталона (14 дуг): без 12→2 и 7→8"""
    return _figure1_without(g, FIGURE1_NOT_IN_SCSS)


def figure1_sbss(g: Digraph) -> ArcSubset:
    """Оптимальный SBSS эталона (15 дуг): без 7→8"""
    return _figure1_without(g, FIGURE1_NOT_IN_SBSS)


# ============ ГЕНЕРАТОРЫ ============

class GenSpec(BaseModel):
    family: Literal['hamiltonian-chords', 'random-sb', 'random-ear', 'figure1']
    n: int = 13
    extra_edges: int = 0
    seed: int = Config.DEFAULT_SEED


def _sample_missing(rng: random.Random, n: int, existing: set, count: int) -> List[Arc]:
    candidates = [(u, w) for u in range(n) for w in range(n) if u != w and (u, w) not in existing]
    if count > len(candidates):
        raise GeneratorError(f"cannot add {count} arcs: only {len(candidates)} free pairs")
    return sorted(rng.sample(candidates, count))


def gen_hamiltonian_chords(n: int, extra: int, seed: int) -> Digraph:
    """Цикл 0→1→...→n-1→0 и extra случайных хорд; оптимум MSBSS равен n"""
    if n < 3:
        raise GeneratorError(f"n must be at least 3, got {n}")
    if not 0 <= extra <= n * (n - 1) - n:
        raise GeneratorError(f"extra must be in [0, {n * (n - 1) - n}], got {extra}")
    rng = random.Random(seed)
    cycle = [(i, (i + 1) % n) for i in range(n)]
    chords = _sample_missing(rng, n, set(cycle), extra)
    return build_digraph(n, cycle + chords)


def gen_random_sb(n: int, target_m: int, seed: int) -> Digraph:
    """Гамильтонов цикл по случайной перестановке, затем случайные дуги до target_m"""
    if n < 3:
        raise GeneratorError(f"n must be at least 3, got {n}")
    if not n <= target_m <= n * (n - 1):
        raise GeneratorError(f"target_m must be in [{n}, {n * (n - 1)}], got {target_m}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    cycle = [(order[i], order[(i + 1) % n]) for i in range(n)]
    extra = _sample_missing(rng, n, set(cycle), target_m - n)
    return build_digraph(n, cycle + extra)


def gen_random_ear(n: int, extra: int, seed: int) -> Digraph:
    """
    Открытое ориентированное ушное разложение: цикл на части вершин,
    затем пути u→новые вершины→w между различными уже использованными u, w.
    Каждое ухо сохраняет сильную связность и двусвязность основы.
    """
    if n < 3:
        raise GeneratorError(f"n must be at least 3, got {n}")
    if extra < 0:
        raise GeneratorError(f"extra must be non-negative, got {extra}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)

    cycle_len = rng.randint(3, max(3, (n + 1) // 2))
    used = order[:cycle_len]
    rest = order[cycle_len:]
    arcs: List[Arc] = [(used[i], used[(i + 1) % cycle_len]) for i in range(cycle_len)]

    while rest:
        length = rng.randint(1, min(len(rest), max(1, n // 3)))
        inner, rest = rest[:length], rest[length:]
        u, w = rng.sample(used, 2)
        path = [u] + inner + [w]
        arcs.extend(zip(path, path[1:]))
        used.extend(inner)

    arcs.extend(_sample_missing(rng, n, set(arcs), extra))
    return build_digraph(n, arcs)


def generate(spec: GenSpec) -> Digraph:
    """Экземпляр по GenSpec"""
    if spec.family == 'figure1':
        return load_figure1()
    if spec.family == 'hamiltonian-chords':
        return gen_hamiltonian_chords(spec.n, spec.extra_edges, spec.seed)
    if spec.family == 'random-sb':
        return gen_random_sb(spec.n, spec.n + spec.extra_edges, spec.seed)
    return gen_random_ear(spec.n, spec.extra_edges, spec.seed)
