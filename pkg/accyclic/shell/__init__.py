from .remote import fetch
from .fixtures import (
    FixtureBundle,
    FixtureReport,
    check_scan,
    list_fixtures,
    load_fixtures,
    validate_items,
    verify_all,
)
from .formats import (
    Encoding,
    Format,
    IngestRecord,
    detect_format,
    ingest,
    load_group,
    parse_gfmat,
    parse_group,
    parse_meataxe_all,
    parse_meataxe_ascii,
    write_gfmat,
    write_group,
    write_meataxe_ascii,
)

__all__ = [
    'Encoding',
    'FixtureBundle',
    'FixtureReport',
    'Format',
    'IngestRecord',
    'check_scan',
    'detect_format',
    'fetch',
    'ingest',
    'list_fixtures',
    'load_fixtures',
    'load_group',
    'parse_gfmat',
    'parse_group',
    'parse_meataxe_all',
    'parse_meataxe_ascii',
    'validate_items',
    'verify_all',
    'write_gfmat',
    'write_group',
    'write_meataxe_ascii',
]
