import hashlib
import json
from typing import Mapping, Sequence, Union

from typing_extensions import TypeAlias

Json: TypeAlias = Union[Mapping[str, "Json"], Sequence["Json"], str, int, float, bool, None]


def dumps(j: Json) -> str:
    return json.dumps(j, sort_keys=True, separators=(',', ':'))


def json_hash(j: Json) -> str:
    """md5 of the key-sorted compact dump; stable across runs and dict orders."""
    return hashlib.md5(dumps(j).encode('utf-8')).hexdigest()
