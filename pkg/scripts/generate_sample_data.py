"""Generate sample geometry and map files for tutorials and documentation.

Writes every built-in fixture geometry as a `pasch 1` file, a few example
`paschmap 1` files between them, and one deliberately broken geometry for
demonstrating axiom failures.
"""
import logging
from pathlib import Path

import click

from pasch_geometry.category.morphisms import GeometryMap
from pasch_geometry.core.constructions import fixture_geometries
from pasch_geometry.core.geometry import Geometry
from pasch_geometry.core.triples import TripleSet
from pasch_geometry.utils.serialization import serialize_geometry, serialize_map, write_text

logger = logging.getLogger(__name__)

FILE_NAMES = {
    '1': 'trivial',
    'Z2': 'z2',
    'L': 'sign',
    'Z3': 'z3',
    'Z4': 'z4',
    'V4': 'klein',
    'Z5': 'z5',
    'Z6': 'z6',
    'S3': 's3',
}


def write_fixture_geometries(output_dir: Path) -> dict[str, Path]:
    """Write each fixture as <file name>.pg.

    Args:
        output_dir: Directory to write into (created if missing)

    Returns:
        Fixture key -> written path
    """
    written = {}
    for key, geometry in fixture_geometries().items():
        path = output_dir / f"{FILE_NAMES[key]}.pg"
        write_text(path, serialize_geometry(geometry))
        written[key] = path
        logger.info(f"Wrote geometry | name: {key} | path: {path}")
    return written


def example_maps() -> dict[str, tuple[GeometryMap, str, str]]:
    """Example maps keyed by file stem, with source and target fixture keys."""
    fixtures = fixture_geometries()
    z2, z4, sign = fixtures['Z2'], fixtures['Z4'], fixtures['L']
    return {
        'mod2': (GeometryMap.from_labels(z4, z2, {'0': 'e', '1': 'a', '2': 'e', '3': 'a'}), 'Z4', 'Z2'),
        'const_z4_z2': (GeometryMap.constant(z4, z2), 'Z4', 'Z2'),
        'id_z2': (GeometryMap.identity(z2), 'Z2', 'Z2'),
        'z2_to_sign': (GeometryMap.from_labels(z2, sign, {'e': 'e', 'a': 'x'}), 'Z2', 'L'),
    }


def write_example_maps(output_dir: Path) -> dict[str, Path]:
    """Write example maps as <stem>.map, referencing the fixture files beside them."""
    written = {}
    for stem, (f, source_key, target_key) in example_maps().items():
        path = output_dir / f"{stem}.map"
        text = serialize_map(f, f"{FILE_NAMES[source_key]}.pg", f"{FILE_NAMES[target_key]}.pg")
        write_text(path, text)
        written[stem] = path
        logger.info(f"Wrote map | name: {stem} | path: {path}")
    return written


def broken_geometry() -> Geometry:
    """Z2 with (e, a, a) dropped: axiom 3 fails since its rotations remain."""
    z2 = fixture_geometries()['Z2']
    kept = [t for t in z2.delta if t != (0, 1, 1)]
    return Geometry(z2.elements, z2.identity, TripleSet(2, kept), 'broken')


@click.command(name='generate-sample-data')
@click.option(
    '--output-dir',
    default='samples',
    type=click.Path(file_okay=False),
    help='Output directory for samples (default: samples/)'
)
@click.option(
    '--no-broken',
    is_flag=True,
    help='Skip the deliberately broken geometry'
)
def cli(output_dir: str, no_broken: bool):
    """Generate sample geometry and map files."""
    logging.basicConfig(level=logging.INFO)

    output_root = Path(output_dir)
    click.echo(f"Output directory: {output_root}")

    geometries = write_fixture_geometries(output_root)
    click.secho(f"✓ Wrote {len(geometries)} geometries", fg="green")

    maps = write_example_maps(output_root)
    click.secho(f"✓ Wrote {len(maps)} maps", fg="green")

    if not no_broken:
        path = write_text(output_root / 'broken.pg', serialize_geometry(broken_geometry()))
        click.secho(f"✓ Wrote broken sample: {path}", fg="green")


if __name__ == '__main__':
    cli()
