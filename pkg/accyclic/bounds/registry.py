import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import (
    Any,
    FrozenSet,
    Iterator,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import accyclic.toml as toml
from ..errors import RegistryError
from ..json import Json, json_hash
from .alpha import DESCRIPTORS
from .caps import CAPS
from .formulas import DIM_BOUNDS
from .grid import (
    DERIVATIONS,
    REQUIREMENTS,
    Grid,
    Point,
    parse_axis,
)

_l = logging.getLogger(__name__)

Key = Tuple[int, ...]


@dataclass(frozen=True)
class Rule:
    id: str
    family: str
    dim: str
    alpha: str
    cap: str
    cite: str
    key: Tuple[str, ...]
    expect: FrozenSet[Key]
    grid: Grid
    window: Grid
    cap_shift: int = 1
    alpha_override: Optional[int] = None
    ell: Optional[int] = None
    note: Optional[str] = None

    def key_of(self, point: Point) -> Key:
        return tuple(point[k] for k in self.key)

    def json(self) -> Json:
        return {
            'id': self.id,
            'family': self.family,
            'dim': self.dim,
            'alpha': self.alpha,
            'cap': self.cap,
            'cite': self.cite,
            'key': list(self.key),
            'expect': [list(k) for k in sorted(self.expect)],
            'grid': self.grid.json(),
            'window': self.window.json(),
            'cap_shift': self.cap_shift,
            'alpha_override': self.alpha_override,
            'ell': self.ell,
        }


@dataclass(frozen=True)
class Registry:
    rules: Tuple[Rule, ...]
    source: Optional[Path] = field(default=None, compare=False)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def get(self, rule_id: str) -> Rule:
        for rule in self.rules:
            if rule.id == rule_id:
                return rule
        raise RegistryError(f'No rule {rule_id!r} in registry, have {[r.id for r in self.rules]}')

    def json(self) -> Json:
        return [rule.json() for rule in self.rules]

    def digest(self) -> str:
        return json_hash(self.json())


def _key(raw: Any) -> Key:
    if isinstance(raw, (list, tuple)):
        return tuple(int(v) for v in raw)
    return (int(raw),)


def _grid(raw_axes: Sequence[Mapping[str, Any]], raw_rule: Mapping[str, Any]) -> Grid:
    return Grid(
        axes=tuple(parse_axis(a) for a in raw_axes),
        fixed={k: int(v) for k, v in raw_rule.get('fixed', {}).items()},
        derive=tuple(raw_rule.get('derive', ())),
        require=tuple(raw_rule.get('require', ())),
        exclude=tuple({k: int(v) for k, v in ex.items()} for ex in raw_rule.get('exclude', ())),
    )


def parse_rule(raw: Mapping[str, Any]) -> Rule:
    return Rule(
        id=raw['id'],
        family=raw['family'],
        dim=raw['dim'],
        alpha=raw['alpha'],
        cap=raw['cap'],
        cite=raw['cite'],
        key=tuple(raw['key']),
        expect=frozenset(_key(k) for k in raw['expect']),
        grid=_grid(raw['grid'], raw),
        window=_grid(raw.get('window', ()), raw),
        cap_shift=int(raw.get('cap_shift', 1)),
        alpha_override=raw.get('alpha_override'),
        ell=raw.get('ell'),
        note=raw.get('note'),
    )


def validate_rule(rule: Rule) -> None:
    if rule.dim not in DIM_BOUNDS:
        raise RegistryError(f'rule {rule.id}: unknown dimension formula {rule.dim!r}')
    if rule.cap not in CAPS:
        raise RegistryError(f'rule {rule.id}: unknown order cap {rule.cap!r}')
    if rule.alpha not in DESCRIPTORS:
        raise RegistryError(f'rule {rule.id}: unknown element descriptor {rule.alpha!r}')
    for name in rule.grid.derive:
        if name not in DERIVATIONS:
            raise RegistryError(f'rule {rule.id}: unknown derivation {name!r}')
    for name in rule.grid.require:
        if name not in REQUIREMENTS:
            raise RegistryError(f'rule {rule.id}: unknown requirement {name!r}')
    if rule.alpha_override is not None and rule.alpha_override < 2:
        raise RegistryError(f'rule {rule.id}: alpha override must be at least 2')

    try:
        reachable = {rule.key_of(p) for p in rule.grid.points()}
    except KeyError as e:
        raise RegistryError(f'rule {rule.id}: key {rule.key} names a missing parameter') from e
    outside = rule.expect - reachable
    if outside:
        raise RegistryError(f'rule {rule.id}: expected survivors outside the grid: {sorted(outside)}')


def parse_registry(raw: Mapping[str, Any], source: Optional[Path] = None) -> Registry:
    rules = tuple(parse_rule(r) for r in raw.get('rule', []))
    seen = set()
    for rule in rules:
        if rule.id in seen:
            raise RegistryError(f'duplicate rule id {rule.id!r}')
        seen.add(rule.id)
        validate_rule(rule)
    return Registry(rules=rules, source=source)


def load_registry(path: Path) -> Registry:
    try:
        raw = toml.load_path(path)
    except toml.TOMLDecodeError as e:
        raise RegistryError(f'Failed to load registry {path}') from e
    try:
        registry = parse_registry(raw, source=path)
    except (KeyError, ValueError) as e:
        raise RegistryError(f'Failed to parse rule in {path}') from e
    _l.debug(f'Loaded {len(registry)} rules from {path}')
    return registry
