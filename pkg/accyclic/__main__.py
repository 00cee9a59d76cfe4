from pathlib import Path
from typing import (
    Any,
    Callable,
    List,
    Optional,
    Sequence,
)
import argparse
import logging
import sys
from dataclasses import dataclass
from .accyc import (
    Mode,
    Verdict,
    is_almost_cyclic,
    parse_mode,
)
from .bounds import (
    Status,
    load_registry,
    screen,
)
from .bounds.screen import rule_result
from .bounds.grid import parse_override
from .config_file import (
    ToolkitConfig,
    get_config,
)
from .errors import AccyclicError
from .groupscan import (
    ScanReport,
    closure_enumerate,
    eta_oracle,
    parse_policy,
    scan_almost_cyclic,
)
from .numth import (
    EXCEPTIONAL_FAMILIES,
    OrderCap,
    eta_gl,
    eta_sl,
    mu_classical,
    order_cap_exceptional,
)
from .shell import (
    Encoding,
    fetch,
    ingest,
    list_fixtures,
    load_fixtures,
    load_group,
    verify_all,
)
from .verbosity import (
    add_verbosity_args,
    calculate_log_level,
)

_l = logging.getLogger(name='accyclic')

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

FORMATS = ('plain', 'tsv')


def _bool(v: bool) -> str:
    return 'true' if v else 'false'


def _emit(lines: Sequence[str]) -> None:
    for line in lines:
        print(line)


def _config(args: Any) -> ToolkitConfig:
    return get_config(args.path)


@dataclass(frozen=True)
class MainTestMatrixArgs:
    path: Path
    files: Sequence[Path]
    mode: Optional[str]
    encoding: str
    format: str


def _verdict_line(name: str, v: Verdict, fmt: str) -> str:
    alpha = '-' if v.alpha is None else str(v.alpha)
    if fmt == 'tsv':
        return '\t'.join([name, _bool(v.almost_cyclic), v.mode.value, alpha, str(v.k), _bool(v.is_cyclic), _bool(v.is_scalar)])
    return (f'{name}: almost_cyclic={_bool(v.almost_cyclic)} mode={v.mode.value} alpha={alpha} k={v.k} '
            f'cyclic={_bool(v.is_cyclic)} scalar={_bool(v.is_scalar)}')


def main_test_matrix(args: MainTestMatrixArgs) -> int:
    config = _config(args)
    mode = parse_mode(args.mode) if args.mode is not None else config.mode
    lines = []
    for f in args.files:
        record = ingest(f, Encoding(args.encoding))
        for i, m in enumerate(record.mats):
            name = str(f) if len(record.mats) == 1 else f'{f}#{i}'
            lines.append(_verdict_line(name, is_almost_cyclic(m, mode), args.format))
    _emit(lines)
    return EXIT_OK


@dataclass(frozen=True)
class MainScanArgs:
    path: Path
    gens: Path
    mode: Optional[str]
    policy: str
    orders: Optional[str]
    seed: Optional[int]
    samples: Optional[int]
    cap: Optional[int]
    workers: Optional[int]
    sample: bool
    expect: Optional[str]
    format: str


def _parse_orders(raw: Optional[str]) -> Optional[List[int]]:
    if raw is None:
        return None
    return [int(v) for v in raw.split(',') if v.strip()]


def _scan_lines(report: ScanReport, fmt: str) -> List[str]:
    seed = '-' if report.seed is None else str(report.seed)
    lines = []
    if fmt == 'tsv':
        for f in report.fingerprints:
            verdicts = [o.value for _, o in f.outcomes]
            lines.append('\t'.join([str(f.order), f.charpoly, str(f.count), *verdicts, f.witness]))
        return lines
    lines.append(f'group={report.group} mode={report.mode.value} complete={_bool(report.complete)} '
                 f'surveyed={report.surveyed} seed={seed}')
    for f in report.fingerprints:
        verdicts = ' '.join(f'{m.value}={o.value}' for m, o in f.outcomes)
        lines.append(f'order={f.order} charpoly={f.charpoly} count={f.count} {verdicts} witness={f.witness}')
    return lines


def main_scan(args: MainScanArgs) -> int:
    config = _config(args)
    mode = parse_mode(args.mode) if args.mode is not None else config.mode
    spec = load_group(args.gens)
    report = scan_almost_cyclic(
        spec,
        mode,
        parse_policy(args.policy, _parse_orders(args.orders)),
        cap=args.cap if args.cap is not None else config.closure_cap,
        samples=args.samples if args.samples is not None else config.samples,
        seed=args.seed if args.seed is not None else config.seed,
        exhaustive=False if args.sample else None,
        order_cap=config.order_cap,
        workers=args.workers if args.workers is not None else config.workers,
    )
    _emit(_scan_lines(report, args.format))
    if args.expect == 'almost-cyclic' and not report.all_almost_cyclic():
        return EXIT_CHECK_FAILED
    return EXIT_OK


@dataclass(frozen=True)
class MainScreenArgs:
    path: Path
    rules: Sequence[str]
    registry: Optional[Path]
    grid: Sequence[str]
    format: str


def _keys(keys: Sequence[Sequence[int]]) -> str:
    return '{' + ', '.join(str(k[0]) if len(k) == 1 else '(' + ','.join(str(v) for v in k) + ')' for k in keys) + '}'


def main_screen(args: MainScreenArgs) -> int:
    config = _config(args)
    registry = load_registry(args.registry if args.registry is not None else config.registry)
    rules = [registry.get(r) for r in args.rules] if args.rules else list(registry)
    if args.grid and len(rules) != 1:
        raise ValueError('--grid needs exactly one --rule')
    ok = True
    lines = []
    for rule in rules:
        grid = rule.grid
        for raw in args.grid:
            grid = grid.with_axes(parse_override(raw, grid.axes))
        report = screen(rule, grid, config.workers)
        passed = report.status == Status.OK if args.grid else rule_result(report).passed
        ok = ok and passed
        if args.format == 'tsv':
            lines.append('\t'.join([rule.id, report.status.value, _keys(report.survivors), _keys(report.expected)]))
        else:
            lines.append(f'{rule.id}: status={report.status.value} survivors={_keys(report.survivors)} '
                         f'expected={_keys(report.expected)} passed={_bool(passed)}')
    _emit(lines)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


@dataclass(frozen=True)
class MainFixturesArgs:
    path: Path
    action: str
    registry: Optional[Path]
    fixtures: Optional[Path]
    full: bool


def main_fixtures(args: MainFixturesArgs) -> int:
    config = _config(args)
    registry = load_registry(args.registry if args.registry is not None else config.registry)
    bundle = load_fixtures(args.fixtures if args.fixtures is not None else config.fixtures)
    if args.action == 'list':
        _emit(list_fixtures(registry, bundle))
        return EXIT_OK
    report = verify_all(registry, bundle, full=args.full, closure_cap=config.closure_cap, workers=config.workers)
    _emit(report.lines())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


@dataclass(frozen=True)
class MainEtaArgs:
    path: Path
    p: int
    n: int
    q: int
    family: str
    oracle: bool


def main_eta(args: MainEtaArgs) -> int:
    config = _config(args)
    if args.oracle:
        if args.family != 'gl':
            raise ValueError('the enumeration oracle covers GL only')
        value = eta_oracle(args.n, args.q, args.p, config.closure_cap)
    elif args.family == 'gl':
        value = eta_gl(args.p, args.n, args.q)
    else:
        value = eta_sl(args.p, args.n, args.q)
    print(value)
    return EXIT_OK


@dataclass(frozen=True)
class MainCapArgs:
    path: Path
    family: str
    params: Sequence[int]
    format: str


def main_cap(args: MainCapArgs) -> int:
    if args.family in EXCEPTIONAL_FAMILIES:
        if len(args.params) != 1:
            raise ValueError(f'{args.family} takes Q only')
        cap: OrderCap = order_cap_exceptional(args.family, args.params[0])
    else:
        if len(args.params) != 2:
            raise ValueError(f'{args.family} takes N Q')
        cap = mu_classical(args.family, args.params[0], args.params[1])
    params = ' '.join(str(v) for v in cap.params)
    if args.format == 'tsv':
        print('\t'.join([cap.family, params, str(cap.cap), cap.cite]))
    else:
        print(f'{cap.family}({params}): cap={cap.cap} cite={cap.cite}')
    return EXIT_OK


@dataclass(frozen=True)
class MainEnumerateArgs:
    path: Path
    gens: Path
    cap: Optional[int]
    format: str


def main_enumerate(args: MainEnumerateArgs) -> int:
    config = _config(args)
    spec = load_group(args.gens)
    closure = closure_enumerate(spec, args.cap if args.cap is not None else config.closure_cap, config.order_cap)
    if args.format == 'tsv':
        _emit([f'{o}\t{c}' for o, c in sorted(closure.histogram.items())])
    else:
        _emit([f'group={spec.label} order={closure.order}'] + [f'  {o}: {c}' for o, c in sorted(closure.histogram.items())])
    if spec.order is not None and spec.order != closure.order:
        _l.error(f'{spec.label}: expected order {spec.order}, closure has {closure.order}')
        return EXIT_CHECK_FAILED
    return EXIT_OK


@dataclass(frozen=True)
class MainFetchArgs:
    path: Path
    url: str
    dest: Path
    sha512: Optional[str]


def main_fetch(args: MainFetchArgs) -> int:
    config = _config(args)
    dest = args.dest if args.dest.is_absolute() else config.cache_dir / args.dest
    print(fetch(args.url, dest, args.sha512))
    return EXIT_OK


def _common(p: argparse.ArgumentParser, func: Callable[[Any], int], formats: bool = True) -> None:
    p.set_defaults(func=func)
    p.add_argument('--path', '-p', type=Path, default=Path.cwd())
    if formats:
        p.add_argument('--format', choices=FORMATS, default='plain')
    add_verbosity_args(p)


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog='accyclic')
    subparsers = p.add_subparsers()
    modes = [m.value for m in Mode]

    test_matrix_p = subparsers.add_parser('test-matrix', help='decide almost-cyclicity of matrix files')
    _common(test_matrix_p, main_test_matrix)
    test_matrix_p.add_argument('--mode', choices=modes)
    test_matrix_p.add_argument('--encoding', choices=[e.value for e in Encoding], default='canonical')
    test_matrix_p.add_argument('files', nargs='+', type=Path)

    scan_p = subparsers.add_parser('scan', help='survey the elements of a matrix group')
    _common(scan_p, main_scan)
    scan_p.add_argument('--gens', type=Path, required=True)
    scan_p.add_argument('--mode', choices=modes)
    scan_p.add_argument('--policy', default='default', help='default, all, or flags order2,any-order,char-multiples')
    scan_p.add_argument('--orders', help='comma-separated element orders; overrides the policy flags')
    scan_p.add_argument('--seed', type=int)
    scan_p.add_argument('--samples', type=int)
    scan_p.add_argument('--cap', type=int, help='closure cap above which the scan samples')
    scan_p.add_argument('--workers', '-j', type=int)
    scan_p.add_argument('--sample', action='store_true', help='sample even when the closure would fit')
    scan_p.add_argument('--expect', choices=['almost-cyclic'])

    screen_p = subparsers.add_parser('screen', help='run the screening inequality over rule grids')
    _common(screen_p, main_screen)
    screen_p.add_argument('--rule', dest='rules', action='append', default=[])
    screen_p.add_argument('--registry', type=Path)
    screen_p.add_argument('--grid', action='append', default=[], help='NAME=LO..HI or NAME=V1,V2')

    fixtures_p = subparsers.add_parser('fixtures', help='verify or list the bundled fixtures')
    _common(fixtures_p, main_fixtures, formats=False)
    fixtures_p.add_argument('action', choices=['verify', 'list'])
    fixtures_p.add_argument('--registry', type=Path)
    fixtures_p.add_argument('--fixtures', type=Path)
    fixtures_p.add_argument('--full', action='store_true', help='include the slow scans')

    eta_p = subparsers.add_parser('eta', help='exponent of a Sylow p-subgroup of GL_n(q) or SL_n(q)')
    _common(eta_p, main_eta, formats=False)
    eta_p.add_argument('p', type=int)
    eta_p.add_argument('n', type=int)
    eta_p.add_argument('q', type=int)
    eta_p.add_argument('--family', choices=['gl', 'sl'], default='gl')
    eta_p.add_argument('--oracle', action='store_true', help='enumerate GL_n(q) instead of using the formula')

    cap_p = subparsers.add_parser('cap', help='element-order cap: FAMILY N Q, or FAMILY Q for exceptional tags')
    _common(cap_p, main_cap)
    cap_p.add_argument('family')
    cap_p.add_argument('params', nargs='+', type=int)

    enumerate_p = subparsers.add_parser('enumerate', help='closure and order histogram of a matrix group')
    _common(enumerate_p, main_enumerate)
    enumerate_p.add_argument('--gens', type=Path, required=True)
    enumerate_p.add_argument('--cap', type=int)

    fetch_p = subparsers.add_parser('fetch', help='download a representation file')
    _common(fetch_p, main_fetch, formats=False)
    fetch_p.add_argument('url')
    fetch_p.add_argument('dest', type=Path)
    fetch_p.add_argument('--sha512')

    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    p = make_parser()
    args = p.parse_args(argv)

    logging.basicConfig(
        level=calculate_log_level(args),
    )

    if not hasattr(args, 'func') or args.func is None:
        p.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        return args.func(args)
    except (AccyclicError, OSError, ValueError) as e:
        _l.debug('command failed', exc_info=True)
        print(f'accyclic: error: {e}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
