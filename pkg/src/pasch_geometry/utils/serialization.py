"""Text formats for geometries (`pasch 1`) and maps (`paschmap 1`).

Geometry file, in order: `pasch 1`, optional `name <token>`,
`elements <tok> ...`, `identity <tok>`, `triples <count>`, then exactly
count lines `<tok> <tok> <tok>`. Map file: `paschmap 1`, `source <path>`,
`target <path>`, `pairs <count>`, then lines `<srcTok> <tgtTok>`.
`#` starts a comment, blank lines are ignored, LF and CRLF are accepted.
Serialization is canonical: no comments, single spaces, LF endings,
triples in lexicographic index order.
"""
from dataclasses import dataclass
from pathlib import Path
from pasch_geometry.category.morphisms import GeometryMap
from pasch_geometry.core.geometry import Geometry
from pasch_geometry.core.triples import TripleSet
from pasch_geometry.exceptions import ParseError, ShapeError

GEOMETRY_HEADER = 'pasch'
MAP_HEADER = 'paschmap'
FORMAT_VERSION = '1'

Line = tuple[int, list[str]]


def _content_lines(text: str) -> list[Line]:
    """Non-blank lines with comments removed, as (line number, tokens)."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split('#', 1)[0].split()
        if tokens:
            lines.append((number, tokens))
    return lines


class _Cursor:
    """Sequential reader over content lines."""

    def __init__(self, lines: list[Line]):
        self._lines = lines
        self._pos = 0

    @property
    def last_line(self) -> int:
        return self._lines[-1][0] if self._lines else 0

    def peek(self) -> Line | None:
        return self._lines[self._pos] if self._pos < len(self._lines) else None

    def take(self) -> Line | None:
        line = self.peek()
        if line is not None:
            self._pos += 1
        return line

    def directive(self, name: str, arity: int | None = 1) -> tuple[int, list[str]]:
        """Next line must be `name <args>`; arity None means one or more args."""
        line = self.take()
        if line is None:
            raise ParseError(f"missing directive '{name}'", self.last_line)
        number, tokens = line
        if tokens[0] != name:
            raise ParseError(f"unknown directive '{tokens[0]}', expected '{name}'", number)
        args = tokens[1:]
        if (arity is None and not args) or (arity is not None and len(args) != arity):
            raise ParseError(f"malformed '{name}' directive", number)
        return number, args

    def header(self, name: str) -> None:
        number, (version,) = self.directive(name)
        if version != FORMAT_VERSION:
            raise ParseError(f"unsupported {name} version '{version}'", number)

    def count(self, name: str) -> tuple[int, int]:
        number, (value,) = self.directive(name)
        if not value.isdigit():
            raise ParseError(f"'{name}' needs a non-negative count", number)
        return number, int(value)

    def rows(self, count: int, width: int, what: str) -> list[Line]:
        rows = []
        for _ in range(count):
            line = self.take()
            if line is None:
                raise ParseError(f"{what} count mismatch", self.last_line)
            number, tokens = line
            if len(tokens) != width:
                raise ParseError(f"expected {width} tokens per {what} line", number)
            rows.append(line)
        extra = self.peek()
        if extra is not None:
            raise ParseError(f"{what} count mismatch", extra[0])
        return rows


def parse_geometry(text: str) -> Geometry:
    """
    Parse a geometry file.

    Raises:
        ParseError: With the offending line number
    """
    cursor = _Cursor(_content_lines(text))
    cursor.header(GEOMETRY_HEADER)

    name = None
    nxt = cursor.peek()
    if nxt is not None and nxt[1][0] == 'name':
        _, (name,) = cursor.directive('name')

    elements_line, elements = cursor.directive('elements', arity=None)
    position: dict[str, int] = {}
    for label in elements:
        if label in position:
            raise ParseError(f"duplicate element '{label}'", elements_line)
        position[label] = len(position)

    identity_line, (identity,) = cursor.directive('identity')
    if identity not in position:
        raise ParseError(f"unknown element '{identity}' in identity", identity_line)

    _, count = cursor.count('triples')
    triples: set[tuple[int, int, int]] = set()
    for number, tokens in cursor.rows(count, 3, 'triple'):
        for token in tokens:
            if token not in position:
                raise ParseError(f"unknown element '{token}' in triple", number)
        triple = tuple(position[t] for t in tokens)
        if triple in triples:
            raise ParseError("duplicate triple", number)
        triples.add(triple)

    return Geometry(tuple(elements), position[identity], TripleSet(len(elements), triples), name)


def _token(value: str) -> str:
    return '_'.join(value.replace('#', '_').split())


def serialize_geometry(geometry: Geometry) -> str:
    """Canonical text of a geometry, byte-identical across platforms."""
    lines = [f"{GEOMETRY_HEADER} {FORMAT_VERSION}"]
    name = _token(geometry.name or '')
    if name:
        lines.append(f"name {name}")
    lines.append("elements " + ' '.join(geometry.elements))
    lines.append(f"identity {geometry.label(geometry.identity)}")
    lines.append(f"triples {len(geometry.delta)}")
    lines.extend(' '.join(geometry.labelled(t)) for t in geometry.delta)
    return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class MapFile:
    """A parsed map file before its geometries are resolved."""
    source_path: str
    target_path: str
    pairs: tuple[tuple[int, str, str], ...]


def read_map_file(text: str) -> MapFile:
    """
    Parse the map grammar without touching the referenced geometries.

    Raises:
        ParseError: With the offending line number
    """
    cursor = _Cursor(_content_lines(text))
    cursor.header(MAP_HEADER)
    _, (source_path,) = cursor.directive('source')
    _, (target_path,) = cursor.directive('target')
    _, count = cursor.count('pairs')
    pairs = tuple((number, src, tgt) for number, (src, tgt) in cursor.rows(count, 2, 'pair'))
    return MapFile(source_path, target_path, pairs)


def resolve_map(mapfile: MapFile, source: Geometry, target: Geometry) -> GeometryMap:
    """
    Build the map; every source element must appear exactly once.

    Raises:
        ParseError: On unknown, duplicate or unmapped elements
    """
    table: dict[int, int] = {}
    for number, src, tgt in mapfile.pairs:
        try:
            x = source.index(src)
        except KeyError:
            raise ParseError(f"unknown source element '{src}'", number) from None
        try:
            y = target.index(tgt)
        except KeyError:
            raise ParseError(f"unknown target element '{tgt}'", number) from None
        if x in table:
            raise ParseError(f"duplicate source element '{src}'", number)
        table[x] = y
    for x in range(source.size):
        if x not in table:
            raise ParseError(f"source element {source.label(x)} unmapped")
    return GeometryMap(source, target, tuple(table[x] for x in range(source.size)))


def parse_map(
    text: str,
    base_dir: Path | None = None,
    source: Geometry | None = None,
    target: Geometry | None = None,
) -> GeometryMap:
    """
    Parse a map file, loading the geometries it references.

    Paths are resolved against base_dir (default: current directory)
    unless the source or target geometry is given explicitly.
    """
    mapfile = read_map_file(text)
    base = base_dir or Path('.')
    if source is None:
        source = load_geometry(base / mapfile.source_path)
    if target is None:
        target = load_geometry(base / mapfile.target_path)
    return resolve_map(mapfile, source, target)


def serialize_map(f: GeometryMap, source_path: str, target_path: str) -> str:
    """Canonical text of a map, pairs in source index order."""
    lines = [
        f"{MAP_HEADER} {FORMAT_VERSION}",
        f"source {source_path}",
        f"target {target_path}",
        f"pairs {f.source.size}",
    ]
    lines.extend(f"{x} {y}" for x, y in f.pairs())
    return '\n'.join(lines) + '\n'


def _read_text(path: Path) -> str:
    if not path.exists():
        raise ParseError(f"file not found: {path}")
    try:
        return path.read_bytes().decode('utf-8')
    except UnicodeDecodeError as e:
        raise ParseError(f"{path}: not UTF-8 text ({e.reason})") from None


def load_geometry(path: Path) -> Geometry:
    """Read and parse a geometry file; errors name the file."""
    path = Path(path)
    try:
        return parse_geometry(_read_text(path))
    except ParseError as e:
        if str(path) in str(e):
            raise
        raise ParseError(f"{path}: {e}") from None
    except ValueError as e:
        raise ParseError(f"{path}: {e}") from None


def load_map(path: Path) -> GeometryMap:
    """Read a map file and the geometry files it references (relative to it)."""
    path = Path(path)
    try:
        return parse_map(_read_text(path), base_dir=path.parent)
    except ParseError as e:
        if str(path) in str(e):
            raise
        raise ParseError(f"{path}: {e}") from None
    except ShapeError as e:
        raise ParseError(f"{path}: {e}") from None


def write_text(path: Path, text: str) -> Path:
    """Write with LF endings regardless of platform."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
    return path
