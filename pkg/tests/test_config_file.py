from pathlib import Path

import pytest

from accyclic.accyc import Mode
from accyclic.config_file import (
    CONFIG_FILENAME,
    DATA_DIR,
    ToolkitConfig,
    find_config_root,
    get_config,
    get_config_root,
    load_config,
)


def test_defaults():
    config = ToolkitConfig()
    assert config.closure_cap == 2 * 10 ** 6
    assert config.order_cap == 10 ** 6
    assert config.seed == 0
    assert config.samples == 2000
    assert config.mode == Mode.STRICT
    assert config.workers == 1
    assert config.registry == DATA_DIR / 'registry.toml'
    assert config.fixtures == DATA_DIR / 'fixtures.toml'
    assert config.cache_dir == Path.cwd() / '.accyclic' / 'cache'


def test_config_file_is_found_from_subdirectories(tmp_path):
    root = tmp_path.resolve()
    (root / CONFIG_FILENAME).write_text(
        'closure_cap = 5000\n'
        'seed = 7\n'
        'mode = "appendix"\n'
        'registry = "rules/registry.toml"\n'
        f'fixtures = "{root / "elsewhere" / "fixtures.toml"}"\n'
    )
    sub = root / 'a' / 'b'
    sub.mkdir(parents=True)

    assert find_config_root(sub) == root
    assert get_config_root(sub) == root
    config = get_config(sub)
    assert config == load_config(sub)
    assert config.base == root
    assert config.closure_cap == 5000
    assert config.seed == 7
    assert config.samples == 2000
    assert config.mode == Mode.APPENDIX
    assert config.registry == root / 'rules' / 'registry.toml'
    assert config.fixtures == root / 'elsewhere' / 'fixtures.toml'
    assert config.cache_dir == root / '.accyclic' / 'cache'


def test_missing_config(tmp_path):
    if find_config_root(tmp_path) is not None:
        pytest.skip(f'{CONFIG_FILENAME} above {tmp_path}')
    with pytest.raises(FileNotFoundError) as info:
        get_config_root(tmp_path)
    assert CONFIG_FILENAME in str(info.value)
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path)
    assert get_config(tmp_path) == ToolkitConfig()


def test_bad_mode_is_reported_on_use(tmp_path):
    (tmp_path / CONFIG_FILENAME).write_text('mode = "loose"\n')
    config = get_config(tmp_path)
    with pytest.raises(ValueError):
        config.mode
