from pathlib import Path
from dataclasses import dataclass
from typing import (
    Optional,
    Iterator,
)
import io
import logging
import accyclic.toml as toml
from .accyc import Mode, parse_mode

_l = logging.getLogger(__name__)

CONFIG_FILENAME = '.accyclic.toml'

DATA_DIR = Path(__file__).resolve().parent / 'data'


@dataclass(frozen=True)
class ToolkitConfig:
    base: Optional[Path] = None
    _closure_cap: Optional[int] = None
    _order_cap: Optional[int] = None
    _seed: Optional[int] = None
    _samples: Optional[int] = None
    _mode: Optional[str] = None
    _workers: Optional[int] = None
    _registry: Optional[Path] = None
    _fixtures: Optional[Path] = None
    _cache_dir: Optional[Path] = None

    @property
    def closure_cap(self) -> int:
        if self._closure_cap is None:
            return 2 * 10 ** 6
        else:
            assert self._closure_cap >= 1
            return self._closure_cap

    @property
    def order_cap(self) -> int:
        if self._order_cap is None:
            return 10 ** 6
        else:
            return self._order_cap

    @property
    def seed(self) -> int:
        if self._seed is None:
            return 0
        else:
            return self._seed

    @property
    def samples(self) -> int:
        if self._samples is None:
            return 2000
        else:
            return self._samples

    @property
    def mode(self) -> Mode:
        if self._mode is None:
            return Mode.STRICT
        else:
            return parse_mode(self._mode)

    @property
    def workers(self) -> int:
        if self._workers is None:
            return 1
        else:
            return self._workers

    @property
    def registry(self) -> Path:
        if self._registry is None:
            return DATA_DIR / 'registry.toml'
        else:
            return self._relative(self._registry)

    @property
    def fixtures(self) -> Path:
        if self._fixtures is None:
            return DATA_DIR / 'fixtures.toml'
        else:
            return self._relative(self._fixtures)

    @property
    def cache_dir(self) -> Path:
        if self._cache_dir is not None:
            return self._relative(self._cache_dir)
        elif self.base is not None:
            return self.base / '.accyclic' / 'cache'
        else:
            return Path.cwd() / '.accyclic' / 'cache'

    def _relative(self, p: Path) -> Path:
        if p.is_absolute() or self.base is None:
            return p
        return self.base / p


def _possible_config_paths(d: Path) -> Iterator[Path]:
    d = Path(d).resolve()
    assert d.is_absolute()

    for _d in [d, *d.parents]:
        yield _d / CONFIG_FILENAME


def find_config_root(d: Path) -> Optional[Path]:
    for possible_config in _possible_config_paths(d):
        if possible_config.is_file():
            return possible_config.parent

    return None


def _not_found(d: Path) -> FileNotFoundError:
    s = io.StringIO()
    s.write('Could not find config file at any of the following paths:\n')
    for searched_path in _possible_config_paths(d):
        s.write(f'- {searched_path}\n')
    return FileNotFoundError(s.getvalue())


def get_config_root(d: Path) -> Path:
    config_root = find_config_root(d)

    if config_root is None:
        raise _not_found(d)
    else:
        return config_root


def _optional_path(raw: Optional[str]) -> Optional[Path]:
    if raw is None:
        return None
    return Path(raw)


def _load_config(d: Path) -> Optional[ToolkitConfig]:
    config_root = find_config_root(d)
    if config_root is None:
        return None

    raw = toml.load_path(config_root / CONFIG_FILENAME)
    _l.debug(f'Loaded config from {config_root / CONFIG_FILENAME}')
    return ToolkitConfig(
        base=config_root,
        _closure_cap=raw.get('closure_cap'),
        _order_cap=raw.get('order_cap'),
        _seed=raw.get('seed'),
        _samples=raw.get('samples'),
        _mode=raw.get('mode'),
        _workers=raw.get('workers'),
        _registry=_optional_path(raw.get('registry')),
        _fixtures=_optional_path(raw.get('fixtures')),
        _cache_dir=_optional_path(raw.get('cache_dir')),
    )


def load_config(d: Path) -> ToolkitConfig:
    config = _load_config(d)

    if config is None:
        raise _not_found(d)
    else:
        return config


def get_config(d: Path) -> ToolkitConfig:
    """The config governing d, or the built-in defaults when there is none."""
    config = _load_config(Path(d).absolute())
    if config is None:
        return ToolkitConfig()
    return config
