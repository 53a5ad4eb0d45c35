"""Command-line interface for pasch-geometry.

Artifacts (geometry and map text, reports) go to stdout, diagnostics to
stderr. Exit codes: 0 success or property holds, 1 property fails,
2 parse/shape/input error, 3 size limit exceeded.
"""
import click
import functools
import sys
from itertools import product as cartesian
from pathlib import Path
from pydantic import ValidationError
from pasch_geometry import __version__
from pasch_geometry.category import (
    ConeCheckSpec,
    GeometryMap,
    MapKind,
    check_equalizer_universal,
    check_product_universal,
    check_pullback_universal,
    check_subcategory_closure,
    check_zero_object,
    enumerate_maps,
    equalizer,
    equivalence_classes,
    find_isomorphism,
    image,
    kernel,
    pullback,
    verify_congruence,
)
from pasch_geometry.core import (
    PaschSettings,
    SearchLimits,
    cyclic_geometry,
    double_coset_geometry,
    fixture_family,
    is_abelian,
    is_normal,
    is_sharp,
    is_subgeometry,
    klein_geometry,
    load_settings_from_yaml,
    product,
    require_valid,
    sign_geometry,
    symmetric_geometry,
    to_group_table,
    trivial_geometry,
    validate_axioms,
)
from pasch_geometry.core.geometry import Geometry, involution_candidates
from pasch_geometry.exceptions import (
    ConstructionError,
    NotAMorphismError,
    PaschGeometryError,
    SizeLimitError,
)
from pasch_geometry.utils.logging import setup_logger, LogRunContext
from pasch_geometry.utils.serialization import (
    load_geometry,
    load_map,
    read_map_file,
    serialize_geometry,
    serialize_map,
    write_text,
)

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3

GEOMETRY_FILE = click.Path(exists=True, dir_okay=False, path_type=Path)


def exit_codes(func):
    """Run a command inside LogRunContext and translate its outcome to an exit code.

    The command returns False when the checked property fails.
    """
    @functools.wraps(func)
    def wrapper(ctx: click.Context, *args, **kwargs):
        logger = ctx.obj['logger']
        with LogRunContext(logger, ctx.command_path, ctx.obj.get('config_path')):
            try:
                passed = func(ctx, *args, **kwargs)
            except SizeLimitError as e:
                click.echo(click.style(f"✗ Size limit exceeded: {e}", fg='red'), err=True)
                sys.exit(EXIT_LIMIT)
            except (NotAMorphismError, ConstructionError) as e:
                click.echo(click.style(f"✗ {e}", fg='red'))
                sys.exit(EXIT_PROPERTY)
            except PaschGeometryError as e:
                click.echo(click.style(f"✗ {type(e).__name__}: {e}", fg='red'), err=True)
                sys.exit(EXIT_INPUT)
            except ValidationError as e:
                click.echo(click.style(f"✗ Invalid input: {e}", fg='red'), err=True)
                sys.exit(EXIT_INPUT)
            sys.exit(EXIT_PROPERTY if passed is False else EXIT_OK)
    return wrapper


def limit_options(func):
    """--limit / --target-limit overriding the configured search bounds."""
    func = click.option(
        '--target-limit',
        type=click.IntRange(min=1),
        default=None,
        help='Largest target carrier for exhaustive map search'
    )(func)
    return click.option(
        '--limit',
        type=click.IntRange(min=1),
        default=None,
        help='Largest source carrier for exhaustive map search'
    )(func)


def _limits(ctx: click.Context, limit: int | None, target_limit: int | None) -> SearchLimits:
    base: SearchLimits = ctx.obj['settings'].limits
    return SearchLimits(
        max_source=limit or base.max_source,
        max_target=target_limit or base.max_target,
    )


def _geometry(path: Path) -> Geometry:
    """Load a geometry file and require the axioms; named after the file stem when unnamed."""
    geometry = load_geometry(path)
    if geometry.name is None:
        geometry = geometry.renamed(path.stem)
    return require_valid(geometry)


def _map(path: Path) -> GeometryMap:
    """Load a map file; unnamed geometries are named after the files it references."""
    f = load_map(path)
    mapfile = read_map_file(Path(path).read_text(encoding='utf-8'))
    source, target = f.source, f.target
    if source.name is None:
        source = source.renamed(Path(mapfile.source_path).stem)
    if target.name is None:
        target = target.renamed(Path(mapfile.target_path).stem)
    require_valid(source)
    require_valid(target)
    return GeometryMap(source, target, f.table)


def _map_line(f: GeometryMap) -> str:
    return ' '.join(f"{x}->{y}" for x, y in f.pairs())


def _status(passed: bool, what: str) -> None:
    if passed:
        click.echo(click.style(f"✓ {what}: pass", fg='green'))
    else:
        click.echo(click.style(f"✗ {what}: fail", fg='red'))


def _cone_spec(
    ctx: click.Context,
    apex: tuple[Path, ...],
    morphisms: bool,
    limit: int | None,
    target_limit: int | None,
) -> ConeCheckSpec:
    settings: PaschSettings = ctx.obj['settings']
    kind = MapKind.MORPHISM if morphisms else MapKind.HOMOMORPHISM
    limits = _limits(ctx, limit, target_limit)
    if apex:
        return ConeCheckSpec(apexes=[_geometry(p) for p in apex], map_kind=kind, limits=limits)
    return ConeCheckSpec.default(settings.apex_max_size, map_kind=kind, limits=limits)


@click.group()
@click.version_option(version=__version__, prog_name='pasch-geometry')
@click.option(
    '--log-level',
    type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
    default=None,
    help='Set logging level (overrides the settings file)'
)
@click.option(
    '--config',
    'config_path',
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help='Settings YAML (limits, apex family bound, logging)'
)
@click.pass_context
def cli(ctx, log_level, config_path):
    """
    pasch-geometry - Finite Pasch geometries, morphisms and categorical checks.

    Examples:

        # Validate a geometry file
        pasch-geometry check z2.pg

        # Homomorphisms Z2 -> L
        pasch-geometry maps z2.pg sign.pg --homs

        # Product universal property over two apexes
        pasch-geometry verify product z2.pg z2.pg --apex trivial.pg --apex z4.pg
    """
    ctx.ensure_object(dict)
    try:
        settings = load_settings_from_yaml(config_path) if config_path else PaschSettings()
    except PaschGeometryError as e:
        click.echo(click.style(f"✗ Configuration error: {e}", fg='red'), err=True)
        sys.exit(EXIT_INPUT)
    if log_level:
        settings.logging.level = log_level.upper()
    ctx.obj['settings'] = settings
    ctx.obj['config_path'] = str(config_path) if config_path else None
    ctx.obj['logger'] = setup_logger(settings)


@cli.command('check')
@click.argument('geometry_file', type=GEOMETRY_FILE)
@click.pass_context
@exit_codes
def check(ctx, geometry_file):
    """
    Validate axioms 1-4 and the derived properties 5-6.

    Arguments:
        geometry_file: Path to a pasch 1 geometry file
    """
    report = validate_axioms(load_geometry(geometry_file))
    for line in report.lines():
        click.echo(line)
    _status(report.all_pass, 'axioms')
    return report.all_pass


@cli.command('info')
@click.argument('geometry_file', type=GEOMETRY_FILE)
@click.pass_context
@exit_codes
def info(ctx, geometry_file):
    """Size, relation size, abelian/sharp flags and the involution table."""
    geometry = load_geometry(geometry_file)
    abelian, sharp = is_abelian(geometry), is_sharp(geometry)
    click.echo(f"name: {geometry.name or geometry_file.stem}")
    click.echo(f"elements: {geometry.size}")
    click.echo(f"triples: {len(geometry.delta)}")
    click.echo(f"abelian: {str(abelian).lower()}")
    click.echo(f"sharp: {str(sharp).lower()}")
    click.echo(f"P1: {str(abelian).lower()}")
    click.echo(f"P2: {str(sharp).lower()}")
    click.echo("involution:")
    for a in range(geometry.size):
        candidates = involution_candidates(geometry, a)
        shown = geometry.label(candidates[0]) if len(candidates) == 1 else 'undefined'
        click.echo(f"  {geometry.label(a)}# = {shown}")


@cli.group('gen')
def gen():
    """Emit a built-in geometry to stdout."""


def _emit(geometry: Geometry) -> None:
    click.echo(serialize_geometry(geometry), nl=False)


@gen.command('trivial')
@click.pass_context
@exit_codes
def gen_trivial(ctx):
    """The one-element geometry."""
    _emit(trivial_geometry())


@gen.command('cyclic')
@click.argument('n', type=click.IntRange(min=1))
@click.pass_context
@exit_codes
def gen_cyclic(ctx, n):
    """Sharp geometry of Z_n, elements 0..n-1."""
    _emit(cyclic_geometry(n))


@gen.command('klein')
@click.pass_context
@exit_codes
def gen_klein(ctx):
    """Klein four geometry Z2 x Z2."""
    _emit(klein_geometry())


@gen.command('sign')
@click.pass_context
@exit_codes
def gen_sign(ctx):
    """The two-element non-sharp geometry L."""
    _emit(sign_geometry())


@gen.command('sym')
@click.argument('n', type=click.IntRange(min=1, max=4))
@click.pass_context
@exit_codes
def gen_sym(ctx, n):
    """Sharp geometry of S_n, n <= 4."""
    _emit(symmetric_geometry(n))


@gen.command('dcoset')
@click.argument('geometry_file', type=GEOMETRY_FILE)
@click.argument('subgroup', nargs=-1, required=True)
@click.pass_context
@exit_codes
def gen_dcoset(ctx, geometry_file, subgroup):
    """
    Double coset geometry of a sharp geometry's group over a subgroup.

    Arguments:
        geometry_file: A sharp geometry file
        subgroup: Labels of the subgroup elements (the identity is added)
    """
    geometry = _geometry(geometry_file)
    table = to_group_table(geometry)
    try:
        members = {geometry.index(label) for label in subgroup} | {geometry.identity}
    except KeyError as e:
        raise click.BadParameter(f"unknown element {e.args[0]}", param_hint='SUBGROUP')
    _emit(double_coset_geometry(table, members, name=f"{geometry.name}dc"))


@cli.command('product')
@click.argument('left_file', type=GEOMETRY_FILE)
@click.argument('right_file', type=GEOMETRY_FILE)
@click.pass_context
@exit_codes
def product_cmd(ctx, left_file, right_file):
    """Product geometry A x B, elements in row-major order."""
    _emit(product(_geometry(left_file), _geometry(right_file)))


def _write_outputs(out_dir: Path, geometries: dict[str, Geometry], maps: dict[str, tuple]) -> None:
    """Write geometries as <key>.pg and maps as <key>.map referencing them."""
    for key, geometry in geometries.items():
        write_text(out_dir / f"{key}.pg", serialize_geometry(geometry))
    for key, (f, source_key, target_key) in maps.items():
        write_text(out_dir / f"{key}.map", serialize_map(f, f"{source_key}.pg", f"{target_key}.pg"))


def _emit_result(geometries: dict[str, Geometry], maps: dict[str, tuple]) -> None:
    """Result geometry then each map, every document under a '# <file>' comment."""
    first = next(iter(geometries))
    click.echo(f"# {first}.pg")
    _emit(geometries[first])
    for key, (f, source_key, target_key) in maps.items():
        click.echo(f"# {key}.map")
        click.echo(serialize_map(f, f"{source_key}.pg", f"{target_key}.pg"), nl=False)


@cli.command('equalizer')
@click.argument('f_file', type=GEOMETRY_FILE)
@click.argument('g_file', type=GEOMETRY_FILE)
@click.option('--allow-non-sharp', is_flag=True, help='Diagnostic mode for non-sharp inputs')
@click.option(
    '--out-dir',
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help='Also write the result geometry and inclusion map here'
)
@click.pass_context
@exit_codes
def equalizer_cmd(ctx, f_file, g_file, allow_non_sharp, out_dir):
    """
    Equalizer E = {x : f(x) = g(x)} of two map files, with its inclusion.

    Arguments:
        f_file: Map file A -> B
        g_file: Map file A -> B
    """
    eq = equalizer(_map(f_file), _map(g_file), allow_non_sharp)
    geometries = {'equalizer': eq.geometry, 'domain': eq.inclusion.target}
    maps = {'inclusion': (eq.inclusion, 'equalizer', 'domain')}
    _emit_result(geometries, maps)
    if out_dir:
        _write_outputs(out_dir, geometries, maps)
    if allow_non_sharp:
        for name, ok in eq.diagnostics.items():
            click.echo(f"# {name}: {str(ok).lower()}")
        return all(eq.diagnostics.values())


@cli.command('pullback')
@click.argument('f_file', type=GEOMETRY_FILE)
@click.argument('g_file', type=GEOMETRY_FILE)
@click.option('--allow-non-sharp', is_flag=True, help='Diagnostic mode for non-sharp inputs')
@click.option(
    '--out-dir',
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help='Also write the result geometry and both legs here'
)
@click.pass_context
@exit_codes
def pullback_cmd(ctx, f_file, g_file, allow_non_sharp, out_dir):
    """
    Pullback Y = {(a, b) : f(a) = g(b)} of a cospan, with legs alpha and beta.

    Arguments:
        f_file: Map file A -> X
        g_file: Map file B -> X
    """
    pb = pullback(_map(f_file), _map(g_file), allow_non_sharp)
    geometries = {'pullback': pb.geometry, 'left': pb.alpha.target, 'right': pb.beta.target}
    maps = {
        'alpha': (pb.alpha, 'pullback', 'left'),
        'beta': (pb.beta, 'pullback', 'right'),
    }
    _emit_result(geometries, maps)
    if out_dir:
        _write_outputs(out_dir, geometries, maps)
    if allow_non_sharp:
        for name, ok in pb.diagnostics.items():
            click.echo(f"# {name}: {str(ok).lower()}")
        return all(pb.diagnostics.values())


@cli.command('maps')
@click.argument('source_file', type=GEOMETRY_FILE)
@click.argument('target_file', type=GEOMETRY_FILE)
@click.option('--homs', is_flag=True, help='Only homomorphisms (default: all morphisms)')
@limit_options
@click.pass_context
@exit_codes
def maps_cmd(ctx, source_file, target_file, homs, limit, target_limit):
    """List every morphism (or homomorphism) A -> B, one map per line."""
    kind = MapKind.HOMOMORPHISM if homs else MapKind.MORPHISM
    found = enumerate_maps(
        _geometry(source_file), _geometry(target_file), kind, _limits(ctx, limit, target_limit)
    )
    for f in found:
        click.echo(_map_line(f))
    click.echo(f"total: {len(found)}")


@cli.command('iso')
@click.argument('source_file', type=GEOMETRY_FILE)
@click.argument('target_file', type=GEOMETRY_FILE)
@click.pass_context
@exit_codes
def iso_cmd(ctx, source_file, target_file):
    """Find an isomorphism A -> B; exit 1 when there is none."""
    f = find_isomorphism(_geometry(source_file), _geometry(target_file))
    if f is None:
        click.echo("no isomorphism")
        return False
    click.echo(_map_line(f))


def _subset_lines(label: str, geometry: Geometry, members: tuple[int, ...]) -> None:
    click.echo(f"{label}: {' '.join(geometry.label(i) for i in members)}")


@cli.command('kernel')
@click.argument('map_file', type=GEOMETRY_FILE)
@click.pass_context
@exit_codes
def kernel_cmd(ctx, map_file):
    """Kernel {a : f(a) = e} of a morphism, with its normality."""
    f = _map(map_file)
    k = kernel(f)
    _subset_lines('kernel', f.source, k.members)
    click.echo("subgeometry: true")
    click.echo(f"normal: {str(is_normal(f.source, k)).lower()}")


@cli.command('image')
@click.argument('map_file', type=GEOMETRY_FILE)
@click.pass_context
@exit_codes
def image_cmd(ctx, map_file):
    """Image {f(a)} of a morphism; whether it is a subgeometry is reported."""
    f = _map(map_file)
    im = image(f)
    _subset_lines('image', f.target, im.members)
    click.echo(f"subgeometry: {str(is_subgeometry(f.target, im)).lower()}")


@cli.command('classes')
@click.argument('source_file', type=GEOMETRY_FILE)
@click.argument('target_file', type=GEOMETRY_FILE)
@limit_options
@click.pass_context
@exit_codes
def classes_cmd(ctx, source_file, target_file, limit, target_limit):
    """Conjugacy classes of homomorphisms A -> B (sharp B)."""
    classes = equivalence_classes(
        _geometry(source_file), _geometry(target_file), _limits(ctx, limit, target_limit)
    )
    for i, hom_class in enumerate(classes, start=1):
        click.echo(f"class {i} (size {len(hom_class)}): {_map_line(hom_class.representative)}")
        for member in hom_class.members:
            click.echo(f"  {_map_line(member)}")
    click.echo(f"total: {len(classes)}")


@cli.group('verify')
def verify():
    """Exhaustive universal-property and congruence checks."""


def cone_options(func):
    func = limit_options(func)
    func = click.option(
        '--morphisms',
        is_flag=True,
        help='Count morphisms instead of homomorphisms (diagnostic)'
    )(func)
    return click.option(
        '--apex',
        multiple=True,
        type=GEOMETRY_FILE,
        help='Apex geometry (repeatable; default: built-in fixtures)'
    )(func)


def _report(report) -> bool:
    for line in report.lines():
        click.echo(line)
    return report.passed


@verify.command('product')
@click.argument('left_file', type=GEOMETRY_FILE)
@click.argument('right_file', type=GEOMETRY_FILE)
@cone_options
@click.pass_context
@exit_codes
def verify_product(ctx, left_file, right_file, apex, morphisms, limit, target_limit):
    """Every cone D -> A, D -> B factors uniquely through A x B."""
    spec = _cone_spec(ctx, apex, morphisms, limit, target_limit)
    return _report(check_product_universal(_geometry(left_file), _geometry(right_file), spec))


@verify.command('equalizer')
@click.argument('f_file', type=GEOMETRY_FILE)
@click.argument('g_file', type=GEOMETRY_FILE)
@click.option('--allow-non-sharp', is_flag=True, help='Diagnostic mode for non-sharp inputs')
@cone_options
@click.pass_context
@exit_codes
def verify_equalizer(ctx, f_file, g_file, allow_non_sharp, apex, morphisms, limit, target_limit):
    """Every k with f ∘ k = g ∘ k factors uniquely through E."""
    spec = _cone_spec(ctx, apex, morphisms, limit, target_limit)
    return _report(check_equalizer_universal(_map(f_file), _map(g_file), spec, allow_non_sharp))


@verify.command('pullback')
@click.argument('f_file', type=GEOMETRY_FILE)
@click.argument('g_file', type=GEOMETRY_FILE)
@click.option('--allow-non-sharp', is_flag=True, help='Diagnostic mode for non-sharp inputs')
@cone_options
@click.pass_context
@exit_codes
def verify_pullback(ctx, f_file, g_file, allow_non_sharp, apex, morphisms, limit, target_limit):
    """Every commuting square over the cospan factors uniquely through Y."""
    spec = _cone_spec(ctx, apex, morphisms, limit, target_limit)
    return _report(check_pullback_universal(_map(f_file), _map(g_file), spec, allow_non_sharp))


def _fixtures(ctx: click.Context, files: tuple[Path, ...]) -> list[Geometry]:
    if files:
        return [_geometry(p) for p in files]
    return fixture_family(ctx.obj['settings'].apex_max_size)


@verify.command('zero')
@click.argument('geometry_files', nargs=-1, type=GEOMETRY_FILE)
@click.option('--morphisms', is_flag=True, help='Count morphisms instead of homomorphisms')
@limit_options
@click.pass_context
@exit_codes
def verify_zero(ctx, geometry_files, morphisms, limit, target_limit):
    """The one-element geometry is initial and terminal for every given geometry."""
    kind = MapKind.MORPHISM if morphisms else MapKind.HOMOMORPHISM
    fixtures = _fixtures(ctx, geometry_files)
    return _report(check_zero_object(fixtures, kind, _limits(ctx, limit, target_limit)))


@verify.command('congruence')
@click.argument('geometry_files', nargs=-1, type=GEOMETRY_FILE)
@limit_options
@click.pass_context
@exit_codes
def verify_congruence_cmd(ctx, geometry_files, limit, target_limit):
    """
    Conjugacy is a congruence on every composable triple A -> B -> C of
    the given geometries with B and C sharp.
    """
    fixtures = _fixtures(ctx, geometry_files)
    sharp = [g for g in fixtures if is_sharp(g)]
    triples = [(a, b, c) for a, (b, c) in cartesian(fixtures, cartesian(sharp, repeat=2))]
    return _report(verify_congruence(triples, _limits(ctx, limit, target_limit)))


@verify.command('subcategory')
@click.argument('geometry_files', nargs=-1, type=GEOMETRY_FILE)
@limit_options
@click.pass_context
@exit_codes
def verify_subcategory(ctx, geometry_files, limit, target_limit):
    """Abelian (P1) and sharp (P2) geometries are closed under identities, composites, products."""
    fixtures = _fixtures(ctx, geometry_files)
    return _report(check_subcategory_closure(fixtures, _limits(ctx, limit, target_limit)))


if __name__ == '__main__':
    cli()
