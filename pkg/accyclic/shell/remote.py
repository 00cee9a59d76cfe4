import logging
import subprocess
from pathlib import Path
from typing import Optional

from ..errors import FetchFailed
from ..hash import file_checksum

_l = logging.getLogger(__name__)


def download(url: str, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    try:
        _l.debug(f"Trying to download {url} to {path} via wget")
        subprocess.check_call(["wget", "-q", url, "-O", str(path.absolute())])
        return
    except subprocess.CalledProcessError:
        _l.debug("wget command failed")
    except FileNotFoundError:
        _l.debug('Could not find wget in $PATH')

    try:
        _l.debug(f"Trying to download {url} to {path} via curl")
        subprocess.check_call(["curl", "-sSfL", url, "-o", str(path.absolute())])
        return
    except subprocess.CalledProcessError:
        _l.debug("curl command failed")
    except FileNotFoundError:
        _l.debug('Could not find curl in $PATH')

    raise FetchFailed(f"Failed to download {url} with both wget and curl. Is at least one of wget and curl installed?")


def fetch(url: str, dest: Path, sha512: Optional[str] = None) -> Path:
    """Download a representation file unless dest already holds it; verify against sha512 when given."""
    if sha512 is not None and file_checksum(dest) == sha512.lower():
        _l.info(f"{dest} already present, no need to download")
        return dest
    download(url, dest)
    if sha512 is not None:
        checksum = file_checksum(dest)
        if checksum != sha512.lower():
            dest.unlink()
            raise FetchFailed(f"Downloaded file (checksum {checksum}) does not match expected checksum {sha512}")
    _l.info(f"Fetched {url} to {dest}")
    return dest
