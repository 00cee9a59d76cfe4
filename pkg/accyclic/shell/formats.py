"""
Text formats for matrices and groups.

gfmat:     `gfmat p k rows cols`, then rows lines of cols canonical encodings.
group:     `group p k dim ngen [name] [order]`, then ngen gfmat bodies. An
           order needs a name before it, and names are never bare numbers.
MeatAxe:   mode-1 ASCII, `1 q rows cols`, then single digits per entry when
           q < 10 and whitespace-separated integers otherwise.

`#` starts a comment in gfmat and group files.
"""

import enum
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import (
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from ..errors import (
    AmbiguousEncoding,
    BadHeader,
    CountMismatch,
    EntryOutOfRange,
    FormatError,
    UnsupportedMode,
)
from ..gf import (
    FieldCtx,
    field_create,
    field_of_order,
)
from ..groupscan import GroupSpec
from ..json import Json
from ..matgf import Mat
from ..numth import prime_power

_l = logging.getLogger(__name__)

Token = Tuple[int, str]


class Format(enum.Enum):
    GFMAT = 'gfmat'
    GROUP = 'group'
    MEATAXE = 'meataxe'

    def json(self) -> Json:
        return self.value


class Encoding(enum.Enum):
    CANONICAL = 'canonical'
    POWER = 'power'
    AUTO = 'auto'


def _tokens(text: str, comments: bool = True) -> List[Token]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if comments:
            line = line.split('#', 1)[0]
        out.extend((lineno, tok) for tok in line.split())
    return out


def _int(tok: Token, what: str) -> int:
    lineno, raw = tok
    try:
        return int(raw)
    except ValueError:
        raise BadHeader(f'{what} must be an integer, got {raw!r}', lineno)


def _size(tok: Token, what: str) -> int:
    n = _int(tok, what)
    if n < 0:
        raise BadHeader(f'{what} must not be negative, got {n}', tok[0])
    return n


def _entries(ctx: FieldCtx, toks: Sequence[Token], count: int, start: int, last_line: Optional[int]) -> List[int]:
    body = toks[start:start + count]
    if len(body) < count:
        raise CountMismatch(f'expected {count} entries, found {len(body)}', last_line)
    values = []
    for lineno, raw in body:
        try:
            v = int(raw)
        except ValueError:
            raise FormatError(f'entry {raw!r} is not an integer', lineno)
        if not 0 <= v < ctx.q:
            raise EntryOutOfRange(f'entry {v} is not an element of GF({ctx.q})', lineno)
        values.append(v)
    return values


def _last_line(toks: Sequence[Token]) -> Optional[int]:
    return toks[-1][0] if toks else None


def _field(p_tok: Token, k_tok: Token) -> FieldCtx:
    p = _int(p_tok, 'p')
    k = _int(k_tok, 'k')
    try:
        return field_create(p, k)
    except ValueError as e:
        raise BadHeader(str(e), p_tok[0]) from e


def parse_gfmat(text: str) -> Mat:
    toks = _tokens(text)
    if len(toks) < 5 or toks[0][1] != 'gfmat':
        raise BadHeader('expected header `gfmat p k rows cols`', toks[0][0] if toks else None)
    ctx = _field(toks[1], toks[2])
    rows, cols = _size(toks[3], 'rows'), _size(toks[4], 'cols')
    count = rows * cols
    values = _entries(ctx, toks, count, 5, _last_line(toks))
    if len(toks) > 5 + count:
        raise CountMismatch(f'expected {count} entries, found {len(toks) - 5}', toks[5 + count][0])
    return Mat(ctx, rows, cols, tuple(values))


def _body(m: Mat) -> str:
    return ''.join(' '.join(str(e) for e in m.row(i)) + '\n' for i in range(m.rows))


def write_gfmat(m: Mat) -> str:
    return f'gfmat {m.ctx.p} {m.ctx.k} {m.rows} {m.cols}\n' + _body(m)


def parse_group(text: str) -> GroupSpec:
    toks = _tokens(text)
    if len(toks) < 5 or toks[0][1] != 'group':
        raise BadHeader('expected header `group p k dim ngen [name] [order]`', toks[0][0] if toks else None)
    header_line = toks[0][0]
    header = [t for t in toks if t[0] == header_line]
    if len(header) > 7:
        raise BadHeader(f'too many header fields ({len(header)})', header_line)
    ctx = _field(header[1], header[2])
    dim, ngen = _size(header[3], 'dim'), _int(header[4], 'ngen')
    if ngen < 1:
        raise BadHeader('a group needs at least one generator', header_line)
    name = header[5][1] if len(header) > 5 else None
    if name is not None and name.isdigit():
        raise BadHeader(f'group name must not be a bare number, got {name!r}; the order follows the name', header_line)
    order = _int(header[6], 'order') if len(header) > 6 else None

    start = len(header)
    count = dim * dim
    expected = start + ngen * count
    if len(toks) != expected:
        raise CountMismatch(f'expected {ngen} matrices of {count} entries, found {len(toks) - start} entries',
                            _last_line(toks))
    gens = []
    for g in range(ngen):
        values = _entries(ctx, toks, count, start + g * count, _last_line(toks))
        gens.append(Mat(ctx, dim, dim, tuple(values)))
    return GroupSpec(ctx, tuple(gens), name, order)


def write_group(spec: GroupSpec) -> str:
    header = ['group', str(spec.ctx.p), str(spec.ctx.k), str(spec.dim), str(len(spec.gens))]
    if spec.name is not None:
        header.append(spec.name)
        if spec.order is not None:
            header.append(str(spec.order))
    return ' '.join(header) + '\n' + '\n'.join(_body(g) for g in spec.gens)


def _power_decoder(ctx: FieldCtx) -> List[int]:
    """Generator-power numbering: 0 is zero, i >= 1 is w^(i-1) for the primitive w."""
    w = ctx.primitive_element()
    return [0] + [ctx.pow(w, i) for i in range(ctx.q - 1)]


def _decode(ctx: FieldCtx, values: List[int], encoding: Encoding, line: Optional[int]) -> List[int]:
    if ctx.is_prime_field or encoding == Encoding.CANONICAL:
        return values
    power = _power_decoder(ctx)
    if encoding == Encoding.POWER:
        return [power[v] for v in values]
    differing = sorted({v for v in values if power[v] != v})
    if differing:
        shown = ', '.join(f'{v} -> canonical {v} or power {power[v]}' for v in differing[:4])
        raise AmbiguousEncoding(f'GF({ctx.q}) entries read two ways: {shown}', line)
    return values


def _meataxe_blocks(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Split concatenated mode-1 matrices: yields (header line number, [header, body lines...])."""
    lines = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    pos = 0
    while pos < len(lines):
        lineno, header = lines[pos]
        fields = header.split()
        if len(fields) != 4:
            raise BadHeader(f'expected four header integers `1 q rows cols`, got {header!r}', lineno)
        try:
            mode, q, rows, cols = (int(f) for f in fields)
        except ValueError:
            raise BadHeader(f'header fields must be integers, got {header!r}', lineno)
        if mode != 1:
            raise UnsupportedMode(f'only mode-1 matrices are supported, got mode {mode}', lineno)
        if rows < 0 or cols < 0:
            raise BadHeader(f'rows and cols must not be negative, got {rows}x{cols}', lineno)
        need = rows * cols
        body: List[str] = []
        got = 0
        pos += 1
        while got < need and pos < len(lines):
            chunk = lines[pos][1]
            got += len(chunk.replace(' ', '')) if q < 10 else len(chunk.split())
            body.append(chunk)
            pos += 1
        yield lineno, [header] + body


def _parse_meataxe_block(lineno: int, block: List[str], encoding: Encoding) -> Mat:
    _, q, rows, cols = (int(f) for f in block[0].split())
    try:
        ctx = field_of_order(q)
    except ValueError as e:
        raise BadHeader(str(e), lineno) from e
    if q < 10:
        raw = [c for c in ''.join(block[1:]) if not c.isspace()]
    else:
        raw = ' '.join(block[1:]).split()
    need = rows * cols
    if len(raw) != need:
        raise CountMismatch(f'expected {need} entries, found {len(raw)}', lineno)
    values = []
    for r in raw:
        try:
            v = int(r)
        except ValueError:
            raise FormatError(f'entry {r!r} is not an integer', lineno)
        if not 0 <= v < q:
            raise EntryOutOfRange(f'entry {v} is not an element of GF({q})', lineno)
        values.append(v)
    return Mat(ctx, rows, cols, tuple(_decode(ctx, values, encoding, lineno)))


def parse_meataxe_all(text: str, encoding: Encoding = Encoding.CANONICAL) -> List[Mat]:
    mats = [_parse_meataxe_block(lineno, block, encoding) for lineno, block in _meataxe_blocks(text)]
    if not mats:
        raise BadHeader('empty MeatAxe file')
    return mats


def parse_meataxe_ascii(text: str, encoding: Encoding = Encoding.CANONICAL) -> Mat:
    mats = parse_meataxe_all(text, encoding)
    if len(mats) != 1:
        raise CountMismatch(f'expected one matrix, found {len(mats)}')
    return mats[0]


def write_meataxe_ascii(m: Mat) -> str:
    lines = [f'1 {m.ctx.q} {m.rows} {m.cols}']
    sep = '' if m.ctx.q < 10 else ' '
    lines.extend(sep.join(str(e) for e in m.row(i)) for i in range(m.rows))
    return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class IngestRecord:
    source: Path
    format: Format
    ctx: FieldCtx
    mats: Tuple[Mat, ...]
    warnings: Tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        for m in self.mats:
            if m.ctx != self.ctx:
                raise FormatError(f'{self.source}: matrices over different fields')
            if (m.rows, m.cols) != (self.mats[0].rows, self.mats[0].cols):
                raise FormatError(f'{self.source}: matrices of different sizes')

    def as_group(self, name: Optional[str] = None) -> GroupSpec:
        return GroupSpec(self.ctx, self.mats, name if name is not None else self.source.stem)

    def json(self) -> Json:
        return {
            'source': str(self.source),
            'format': self.format.json(),
            'q': self.ctx.q,
            'count': len(self.mats),
            'warnings': list(self.warnings),
        }


def detect_format(text: str) -> Format:
    toks = _tokens(text)
    if not toks:
        raise BadHeader('empty file')
    head = toks[0][1]
    if head == 'gfmat':
        return Format.GFMAT
    elif head == 'group':
        return Format.GROUP
    elif head.isdigit():
        return Format.MEATAXE
    raise BadHeader(f'unrecognised header {head!r}', toks[0][0])


def ingest(path: Path, encoding: Encoding = Encoding.CANONICAL) -> IngestRecord:
    text = path.read_text()
    fmt = detect_format(text)
    warnings = []
    if fmt == Format.GFMAT:
        mats: Sequence[Mat] = [parse_gfmat(text)]
    elif fmt == Format.GROUP:
        mats = parse_group(text).gens
    else:
        mats = parse_meataxe_all(text, encoding)
        q = mats[0].ctx.q
        if prime_power(q)[1] > 1 and encoding == Encoding.CANONICAL:
            warnings.append(f'GF({q}) entries read as canonical polynomial-basis encodings')
    for w in warnings:
        _l.warning(f'{path}: {w}')
    return IngestRecord(path, fmt, mats[0].ctx, tuple(mats), tuple(warnings))


def load_group(path: Path, encoding: Encoding = Encoding.CANONICAL) -> GroupSpec:
    """A group file as is, or every matrix of any other ingestible file taken as a generator."""
    text = path.read_text()
    if detect_format(text) == Format.GROUP:
        return parse_group(text)
    return ingest(path, encoding).as_group()
