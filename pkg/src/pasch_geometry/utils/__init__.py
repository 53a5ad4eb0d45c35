"""Text formats and logging setup."""
from pasch_geometry.utils.serialization import (
    MapFile,
    parse_geometry,
    serialize_geometry,
    read_map_file,
    resolve_map,
    parse_map,
    serialize_map,
    load_geometry,
    load_map,
    write_text,
)
from pasch_geometry.utils.logging import setup_logger, LogRunContext

__all__ = [
    "MapFile",
    "parse_geometry",
    "serialize_geometry",
    "read_map_file",
    "resolve_map",
    "parse_map",
    "serialize_map",
    "load_geometry",
    "load_map",
    "write_text",
    "setup_logger",
    "LogRunContext",
]
