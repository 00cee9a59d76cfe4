import hashlib
from pathlib import Path
from typing import Optional

from .matgf import Mat


def mat_hash(m: Mat) -> str:
    """md5 over the canonical entry stream, prefixed by the shape and field."""
    digest = hashlib.md5(f'{m.ctx.p} {m.ctx.k} {m.rows} {m.cols}\n'.encode('ascii'))
    digest.update(' '.join(str(e) for e in m.entries).encode('ascii'))
    return digest.hexdigest()


def file_checksum(path: Path) -> Optional[str]:
    try:
        with path.open("rb") as f:
            digest = hashlib.sha512(f.read())
        return digest.hexdigest()
    except FileNotFoundError:
        return None
