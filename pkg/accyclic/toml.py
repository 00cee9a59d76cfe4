import sys
from pathlib import Path
from typing import Any, Dict

if sys.version_info[:2] >= (3, 11):
    from tomllib import (
        loads as loads,
        TOMLDecodeError as TOMLDecodeError,
    )
else:
    from toml import (
        loads as loads,
        TomlDecodeError as TOMLDecodeError,
    )


def load_path(path: Path) -> Dict[str, Any]:
    with path.open('r') as f:
        return loads(f.read())
