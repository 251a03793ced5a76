#!/usr/bin/env python3
"""
SBSS Toolkit - CLI
Запуск: python cli.py <command> [flags]

Команды:
    check     предикаты, точки сочленения, сильные точки сочленения и мосты, части разложения
    solve     --alg alg1|augment|combine
    exact     h, i, s и свидетели (в пределах --cap)
    minimize  1-минимальное решение и отношение к 2n
    gen       генерация экземпляра
    stats     пакетный CSV по каталогу *.txt
    export    DOT

Коды выхода: 0 - готово, 1 - не выполнено предусловие, 2 - ошибка использования.
"""

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Tuple

from config import Config
from connectivity import (
    articulation_points, explain_not_strongly_biconnected, is_biconnected,
    is_strongly_biconnected, is_strongly_connected, sbc_decomposition,
    strong_articulation_points, strong_bridges,
)
from errors import DisconnectedGraphError, SbssError
from exact_oracle import exact_2vcss, exact_msbss, exact_msccs, minimalize
from graph_core import ArcSubset, Digraph, underlying
from instances import (
    GenSpec, emit_dot, emit_edge_list, generate, read_edge_list,
    read_undirected_edge_list, write_edge_list,
)
from solvers import algorithm1, augment_to_biconnected, combine_and_augment, greedy_2vcss, greedy_scss

logger = logging.getLogger(__name__)

E = Config.EMOJIS

STATS_HEADER = ['instance', 'n', 'm', 'alg1_size', 'exact_h', 'ratio']


class UsageError(Exception):
    """Флаги не прошли проверку (код выхода 2)"""


# ============ АРГУМЕНТЫ ============

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--input', metavar='PATH', help='edge list file (stats: directory)')
    common.add_argument('--seed', type=int, default=None, help='generator / minimize order seed')
    common.add_argument('--root', type=int, default=None, help='root label for alg1 (1-indexed)')
    common.add_argument('--alg', choices=['alg1', 'augment', 'combine'], default='alg1')
    common.add_argument('--cap', type=int, default=None, help='exact oracle arc cap')
    common.add_argument('--format', choices=['text', 'json'], default='text')

    parser = argparse.ArgumentParser(prog='sbss', description='Strongly biconnected spanning subgraphs')
    sub = parser.add_subparsers(dest='command', required=True)

    sub.add_parser('check', parents=[common], help='connectivity report')

    solve = sub.add_parser('solve', parents=[common], help='run a solver')
    solve.add_argument('--two-vcss', metavar='PATH', help='undirected edge list with a 2VCSS (combine)')

    sub.add_parser('exact', parents=[common], help='exact h, i, s')

    minimize = sub.add_parser('minimize', parents=[common], help='1-minimal solution')
    minimize.add_argument('--from', dest='start', choices=['all', 'alg1'], default='all')

    gen = sub.add_parser('gen', parents=[common], help='generate an instance')
    gen.add_argument('--family', choices=['hamiltonian-chords', 'random-sb', 'random-ear', 'figure1'],
                     default='random-sb')
    gen.add_argument('--n', type=int, default=8)
    gen.add_argument('--extra', type=int, default=4)
    gen.add_argument('--output', metavar='PATH')

    stats = sub.add_parser('stats', parents=[common], help='batch CSV over a directory')
    stats.add_argument('--workers', type=int, default=None)

    export = sub.add_parser('export', parents=[common], help='DOT output')
    export.add_argument('--highlight', choices=['none', 'alg1', 'exact', 'minimal'], default='none')

    return parser


def _validate(args):
    if args.cap is not None and args.cap < 0:
        raise UsageError("--cap must be non-negative")
    if args.command not in ('gen',) and not args.input:
        raise UsageError(f"{args.command} requires --input")
    if args.command == 'gen':
        _validate_gen(args)
    if args.command == 'stats':
        if not os.path.isdir(args.input):
            raise UsageError(f"--input {args.input} is not a directory")
        if args.workers is not None and args.workers < 1:
            raise UsageError("--workers must be positive")
    elif args.input and not os.path.isfile(args.input):
        raise UsageError(f"--input {args.input} does not exist")


def _validate_gen(args):
    if args.family == 'figure1':
        return
    if args.n < 3:
        raise UsageError(f"--n {args.n}: {args.family} needs at least 3 vertices")
    if args.extra < 0:
        raise UsageError("--extra must be non-negative")
    free = args.n * (args.n - 1) - args.n
    # random-ear: остальные пары известны только после построения ушей
    if args.extra > free:
        raise UsageError(f"--extra {args.extra} exceeds {free} free ordered pairs for n={args.n}")


def _root(args, g: Digraph) -> int:
    label = Config.DEFAULT_ROOT if args.root is None else args.root
    if not 1 <= label <= g.n:
        raise UsageError(f"--root {label} is outside [1, {g.n}]")
    return label - 1


def _cap(args) -> int:
    return Config.EXACT_ARC_CAP if args.cap is None else args.cap


def _labels(vertices) -> List[int]:
    return [v + 1 for v in sorted(vertices)]


def _arc_labels(g: Digraph, indices) -> List[List[int]]:
    return [[g.arc(i)[0] + 1, g.arc(i)[1] + 1] for i in sorted(indices)]


# ============ КОМАНДЫ ============

def cmd_check(args) -> Dict:
    g = read_edge_list(args.input)
    sc = is_strongly_connected(g)
    view = underlying(g)
    try:
        cut = _labels(articulation_points(view).articulation_points)
    except DisconnectedGraphError:
        cut = []
    report = {
        'command': 'check',
        'n': g.n,
        'm': g.m,
        'strongly_connected': sc,
        'underlying_biconnected': is_biconnected(view),
        'strongly_biconnected': is_strongly_biconnected(g),
        'articulation_points': cut,
        'strong_articulation_points': _labels(strong_articulation_points(g)) if sc else [],
        'strong_bridges': _arc_labels(g, strong_bridges(g)) if sc else [],
        'sbc_parts': [_labels(p) for p in sbc_decomposition(g).parts],
        'reason': explain_not_strongly_biconnected(g),
    }
    return report


def _scss_for(g: Digraph, cap: int) -> ArcSubset:
    """Точный MSCSS в пределах cap, иначе жадный 1-минимальный"""
    if g.m <= cap:
        return exact_msccs(g, cap).witness
    logger.info(f"{E['warning']} m={g.m} > cap={cap}: жадный SCSS вместо точного")
    return greedy_scss(g)


def cmd_solve(args) -> Dict:
    g = read_edge_list(args.input)
    cap = _cap(args)
    if args.alg == 'alg1':
        report = algorithm1(g, _root(args, g))
    elif args.alg == 'augment':
        report = augment_to_biconnected(g, _scss_for(g, cap))
    else:
        if args.two_vcss:
            n2, edges = read_undirected_edge_list(args.two_vcss)
            if n2 != g.n:
                raise UsageError(f"--two-vcss has n={n2}, input has n={g.n}")
        else:
            view = underlying(g)
            if len(view.edges) <= cap:
                edges = exact_2vcss(view, cap).witness
            else:
                logger.info(f"{E['warning']} {len(view.edges)} рёбер > cap={cap}: жадный 2VCSS вместо точного")
                edges = greedy_2vcss(view)
        report = combine_and_augment(g, _scss_for(g, cap), edges)
    return {'command': 'solve', **report.as_dict()}


def cmd_exact(args) -> Dict:
    g = read_edge_list(args.input)
    cap = _cap(args)
    h = exact_msbss(g, cap)
    i = exact_msccs(g, cap)
    s = exact_2vcss(underlying(g), cap)
    return {
        'command': 'exact',
        'n': g.n,
        'm': g.m,
        'h': h.optimum_size,
        'i': i.optimum_size,
        's': s.optimum_size,
        'h_witness': [[u + 1, w + 1] for u, w in h.witness_pairs()],
        'i_witness': [[u + 1, w + 1] for u, w in i.witness_pairs()],
        's_witness': [[u + 1, w + 1] for u, w in s.witness_pairs()],
        'explored': h.instances_explored + i.instances_explored + s.instances_explored,
    }


def cmd_minimize(args) -> Dict:
    g = read_edge_list(args.input)
    if args.start == 'alg1':
        start = algorithm1(g, _root(args, g)).solution
    else:
        start = ArcSubset.full(g)
    result = minimalize(g, start, seed=args.seed)
    return {
        'command': 'minimize',
        'n': g.n,
        'm': g.m,
        'start_size': len(start),
        'size': result.size,
        'ratio_to_2n': str(result.ratio_to_2n),
        'ratio_to_2n_value': round(float(result.ratio_to_2n), 6),
        'arcs': [[u + 1, w + 1] for u, w in result.minimal_solution.arcs()],
    }


def cmd_gen(args) -> Optional[Dict]:
    spec = GenSpec(
        family=args.family,
        n=args.n,
        extra_edges=args.extra,
        seed=Config.DEFAULT_SEED if args.seed is None else args.seed,
    )
    g = generate(spec)
    if not args.output:
        if args.format == 'json':
            return {'command': 'gen', 'family': spec.family, 'seed': spec.seed, 'n': g.n, 'm': g.m,
                    'edge_list': emit_edge_list(g)}
        print(emit_edge_list(g))
        return None
    write_edge_list(args.output, g)
    return {'command': 'gen', 'family': spec.family, 'seed': spec.seed, 'n': g.n, 'm': g.m,
            'output': args.output}


def _stats_row(path: str, root_label: Optional[int], cap: int) -> Tuple[Dict, bool]:
    """Строка CSV и флаг ошибки; упавший экземпляр оставляет пустые поля"""
    row = {'instance': os.path.basename(path), 'n': '', 'm': '', 'alg1_size': '', 'exact_h': '', 'ratio': ''}
    try:
        g = read_edge_list(path)
        row['n'], row['m'] = g.n, g.m
        label = Config.DEFAULT_ROOT if root_label is None else root_label
        clamped = min(max(label, 1), g.n)
        if clamped != label:
            logger.warning(f"{E['warning']} {path}: корень {label} вне [1, {g.n}], берём {clamped}")
        alg1 = algorithm1(g, clamped - 1).size
        row['alg1_size'] = alg1
        if g.m <= cap:
            h = exact_msbss(g, cap).optimum_size
            row['exact_h'] = h
            row['ratio'] = f"{alg1 / h:.4f}"
    except SbssError as e:
        logger.error(f"{E['fail']} {path}: {e}")
        return row, True
    return row, False


def cmd_stats(args) -> Dict:
    files = sorted(f for f in os.listdir(args.input) if f.endswith('.txt'))
    paths = [os.path.join(args.input, f) for f in files]
    workers = args.workers or Config.STATS_WORKERS
    cap = _cap(args)
    logger.info(f"{E['stats']} stats: {len(paths)} экземпляров, потоков {workers}")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # map сохраняет порядок имён файлов независимо от порядка завершения
        results = list(pool.map(lambda p: _stats_row(p, args.root, cap), paths))
    failed = sum(1 for _, bad in results if bad)
    if failed:
        logger.warning(f"{E['warning']} stats: {failed} из {len(paths)} экземпляров с ошибкой")
    return {'command': 'stats', 'rows': [row for row, _ in results], 'failed': failed}


def cmd_export(args) -> Optional[Dict]:
    g = read_edge_list(args.input)
    highlight = None
    if args.highlight == 'alg1':
        highlight = algorithm1(g, _root(args, g)).solution
    elif args.highlight == 'exact':
        highlight = exact_msbss(g, _cap(args)).witness
    elif args.highlight == 'minimal':
        highlight = minimalize(g, ArcSubset.full(g), seed=args.seed).minimal_solution
    if args.format == 'json':
        return {'command': 'export', 'dot': emit_dot(g, highlight)}
    sys.stdout.write(emit_dot(g, highlight))
    return None


COMMANDS = {
    'check': cmd_check,
    'solve': cmd_solve,
    'exact': cmd_exact,
    'minimize': cmd_minimize,
    'gen': cmd_gen,
    'stats': cmd_stats,
    'export': cmd_export,
}


# ============ ВЫВОД ============

def _text_value(key: str, value) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return ''
    if isinstance(value, list):
        if key == 'sbc_parts':
            return ' | '.join(' '.join(str(x) for x in part) for part in value)
        if value and isinstance(value[0], list):
            return ', '.join(f"{a}->{b}" for a, b in value)
        return ' '.join(str(x) for x in value)
    return str(value)


def render(report: Dict, fmt: str) -> str:
    if fmt == 'json':
        return json.dumps(report, ensure_ascii=False)
    if report.get('command') == 'stats':
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=STATS_HEADER, lineterminator='\n')
        writer.writeheader()
        writer.writerows(report['rows'])
        return buf.getvalue().rstrip('\n')
    return '\n'.join(f"{key}: {_text_value(key, value)}" for key, value in report.items() if key != 'command')


def run(argv: List[str]) -> int:
    """Точка входа без sys.exit: код выхода + отчёт в stdout"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    try:
        _validate(args)
        report = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except SbssError as e:
        logger.error(f"{E['fail']} {args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    if report is not None:
        print(render(report, args.format))
        # stats печатает все строки, но код выхода отражает упавшие экземпляры
        if report.get('failed'):
            return 1
    return 0


def main() -> int:
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=getattr(logging, Config.LOG_LEVEL.upper(), logging.WARNING)
    )
    return run(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())
