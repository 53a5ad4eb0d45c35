"""Tests for CLI interface."""
import logging
import pytest
from click.testing import CliRunner
from pasch_geometry.category.morphisms import GeometryMap
from pasch_geometry.cli import cli
from pasch_geometry.core.constructions import cyclic_geometry, product, symmetric_geometry
from pasch_geometry.utils.serialization import (
    load_geometry,
    load_map,
    parse_geometry,
    serialize_geometry,
    serialize_map,
    write_text,
)
from tests.fixtures.geometries import SHORT_TRIPLES_TEXT, mod2, write_sample_files, z2, z4


@pytest.fixture(autouse=True)
def reset_logger():
    """Drop handlers bound to the runner's streams after each invocation."""
    yield
    logging.getLogger('pasch_geometry').handlers = []
    logging.getLogger('pasch_geometry').setLevel(logging.NOTSET)


@pytest.fixture
def samples(tmp_path):
    return {key: str(path) for key, path in write_sample_files(tmp_path).items()}


def run(*args):
    return CliRunner().invoke(cli, [str(a) for a in args])


def test_cli_main_help():
    """Test CLI shows help message."""
    result = run('--help')

    assert result.exit_code == 0
    assert 'pasch-geometry' in result.output
    for command in ('check', 'info', 'gen', 'maps', 'equalizer', 'pullback', 'verify'):
        assert command in result.output


def test_cli_version():
    """Test CLI shows version."""
    result = run('--version')

    assert result.exit_code == 0
    assert '1.0.0' in result.output


def test_check_valid(samples):
    """Test check passes Z2 with exit code 0."""
    result = run('check', samples['z2'])

    assert result.exit_code == 0
    assert 'axiom 1 (unique involution): pass' in result.stdout
    assert 'axiom 6 (totality): pass' in result.stdout
    assert '✓ axioms: pass' in result.stdout


def test_check_broken(samples):
    """Test check reports the failing axiom with exit code 1."""
    result = run('check', samples['broken'])

    assert result.exit_code == 1
    assert 'axiom 3 (cyclic invariance): fail' in result.stdout
    assert '✗ axioms: fail' in result.stdout


def test_check_parse_error(tmp_path):
    """Test a malformed file exits 2 with the line on stderr."""
    path = write_text(tmp_path / 'short.pg', SHORT_TRIPLES_TEXT)

    result = run('check', path)

    assert result.exit_code == 2
    assert 'ParseError' in result.stderr
    assert 'line 7' in result.stderr
    assert result.stdout == ''


def test_check_missing_file(tmp_path):
    """Test a missing file is a usage error."""
    assert run('check', tmp_path / 'absent.pg').exit_code == 2


def test_info_sharp(samples):
    """Test info on Z3."""
    result = run('info', samples['z3'])

    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert 'name: Z3' in lines
    assert 'elements: 3' in lines
    assert 'triples: 9' in lines
    assert 'sharp: true' in lines
    assert '  a# = b' in lines


def test_info_non_sharp(samples):
    """Test info on L."""
    result = run('info', samples['sign'])

    lines = result.stdout.splitlines()
    assert 'triples: 5' in lines
    assert 'abelian: true' in lines
    assert 'sharp: false' in lines
    assert '  x# = x' in lines


def test_gen_cyclic():
    """Test gen cyclic emits the canonical Z_n text."""
    result = run('gen', 'cyclic', 3)

    assert result.exit_code == 0
    assert parse_geometry(result.stdout) == cyclic_geometry(3)


def test_gen_sym_out_of_range():
    """Test S_n is bounded."""
    assert run('gen', 'sym', 5).exit_code == 2


@pytest.mark.parametrize("name, size", [('trivial', 1), ('klein', 4), ('sign', 2)])
def test_gen_builtins(name, size):
    """Test the parameterless generators."""
    result = run('gen', name)

    assert result.exit_code == 0
    assert parse_geometry(result.stdout).size == size


def test_gen_dcoset(samples):
    """Test the double coset geometry of S3 over <(12)> is L."""
    result = run('gen', 'dcoset', samples['s3'], '(12)')

    assert result.exit_code == 0
    g = parse_geometry(result.stdout)
    assert g.elements == ('[e]', '[(23)]')
    assert len(g.delta) == 5


def test_gen_dcoset_unknown_label(samples):
    """Test unknown subgroup labels are a usage error."""
    result = run('gen', 'dcoset', samples['s3'], '(45)')

    assert result.exit_code == 2


def test_product(samples):
    """Test product emits A x B."""
    result = run('product', samples['z2'], samples['z2'])

    assert result.exit_code == 0
    assert parse_geometry(result.stdout) == product(z2(), z2())


def test_maps_morphisms(samples):
    """Test both maps Z2 -> L are morphisms."""
    result = run('maps', samples['z2'], samples['sign'])

    assert result.exit_code == 0
    assert result.stdout.splitlines() == ['e->e a->e', 'e->e a->x', 'total: 2']


def test_maps_homomorphisms(samples):
    """Test only the constant map Z2 -> L is a homomorphism."""
    result = run('maps', samples['z2'], samples['sign'], '--homs')

    assert result.stdout.splitlines() == ['e->e a->e', 'total: 1']


def test_maps_size_limit(samples):
    """Test exceeding the search limit exits 3."""
    result = run('maps', samples['z4'], samples['z2'], '--limit', 2)

    assert result.exit_code == 3
    assert 'Size limit exceeded' in result.stderr


def test_iso(samples):
    """Test Z2 is isomorphic to itself and Z4 is not V4."""
    same = run('iso', samples['z2'], samples['z2'])
    different = run('iso', samples['z4'], samples['v4'])

    assert same.exit_code == 0
    assert same.stdout.strip() == 'e->e a->a'
    assert different.exit_code == 1
    assert different.stdout.strip() == 'no isomorphism'


def test_kernel(samples):
    """Test the kernel of Z4 -> Z2 is {0, 2} and normal."""
    result = run('kernel', samples['mod2'])

    assert result.exit_code == 0
    assert result.stdout.splitlines() == ['kernel: 0 2', 'subgeometry: true', 'normal: true']


def test_image(samples):
    """Test the image of the constant map is {e}."""
    result = run('image', samples['const'])

    assert result.exit_code == 0
    assert result.stdout.splitlines() == ['image: e', 'subgeometry: true']


def test_classes(samples):
    """Test End(Z2) has two singleton classes."""
    result = run('classes', samples['z2'], samples['z2'])

    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == 'class 1 (size 1): e->e a->e'
    assert lines[-1] == 'total: 2'


def test_classes_non_sharp_target(samples):
    """Test classes into L is an input error."""
    result = run('classes', samples['z2'], samples['sign'])

    assert result.exit_code == 2
    assert 'NotSharpError' in result.stderr


def test_equalizer(samples, tmp_path):
    """Test the equalizer of mod2 and the constant map is {0, 2}."""
    out_dir = tmp_path / 'out'

    result = run('equalizer', samples['mod2'], samples['const'], '--out-dir', out_dir)

    assert result.exit_code == 0
    assert result.stdout.startswith('# equalizer.pg\npasch 1\nname E\nelements 0 2\n')
    assert '# inclusion.map' in result.stdout
    assert load_geometry(out_dir / 'equalizer.pg').elements == ('0', '2')
    assert load_map(out_dir / 'inclusion.map').table == (0, 2)


def test_equalizer_of_non_homomorphism(samples):
    """Test a morphism that is not a homomorphism fails with exit 1."""
    result = run('equalizer', samples['z2_to_sign'], samples['z2_to_sign'])

    assert result.exit_code == 1
    assert '✗' in result.stdout


def test_pullback(samples, tmp_path):
    """Test the pullback of mod2 and id_Z2 with both legs."""
    out_dir = tmp_path / 'out'

    result = run('pullback', samples['mod2'], samples['id_z2'], '--out-dir', out_dir)

    assert result.exit_code == 0
    assert '# alpha.map' in result.stdout
    assert '# beta.map' in result.stdout
    y = load_geometry(out_dir / 'pullback.pg')
    assert y.elements == ('(0,e)', '(1,a)', '(2,e)', '(3,a)')
    alpha = load_map(out_dir / 'alpha.map')
    assert alpha.table == (0, 1, 2, 3)
    assert alpha.target == mod2().source
    assert load_map(out_dir / 'beta.map').table == (0, 1, 0, 1)


def test_verify_product(samples):
    """Test the product universal property over given apexes."""
    result = run(
        'verify', 'product', samples['z2'], samples['z2'],
        '--apex', samples['trivial'], '--apex', samples['z3'],
    )

    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == 'product Z2 x Z2: pass'


def test_verify_equalizer(samples):
    """Test the equalizer universal property over given apexes."""
    result = run('verify', 'equalizer', samples['mod2'], samples['const'], '--apex', samples['z2'])

    assert result.exit_code == 0
    assert 'pass' in result.stdout.splitlines()[0]


def test_verify_equalizer_names_unnamed_geometries_after_files(tmp_path):
    """Test geometries loaded through a map file without a name line take the file stem."""
    write_text(tmp_path / 'z4.pg', serialize_geometry(z4().renamed(None)))
    write_text(tmp_path / 'z2.pg', serialize_geometry(z2().renamed(None)))
    f_file = write_text(tmp_path / 'f.map', serialize_map(mod2(), 'z4.pg', 'z2.pg'))

    result = run('verify', 'equalizer', f_file, f_file, '--apex', tmp_path / 'z2.pg')

    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == 'equalizer over z4: pass'


def test_verify_pullback(samples):
    """Test the pullback universal property over given apexes."""
    result = run('verify', 'pullback', samples['mod2'], samples['id_z2'], '--apex', samples['z2'])

    assert result.exit_code == 0


def test_verify_zero(samples):
    """Test the trivial geometry is a zero object."""
    result = run('verify', 'zero', samples['z2'], samples['z3'], samples['sign'])

    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == 'zero object: pass'


def test_verify_zero_large_geometry(tmp_path):
    """Test the zero-object check on S4 is not stopped by the search limits."""
    s4 = write_text(tmp_path / 's4.pg', serialize_geometry(symmetric_geometry(4)))

    result = run('verify', 'zero', s4)

    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == 'zero object: pass'


def test_verify_congruence(samples):
    """Test conjugacy is a congruence over small sharp geometries."""
    result = run('verify', 'congruence', samples['z2'], samples['z3'])

    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == 'congruence: pass'


def test_verify_subcategory(samples):
    """Test the P1 and P2 closure check."""
    result = run('verify', 'subcategory', samples['z2'], samples['sign'])

    assert result.exit_code == 0


def test_config_limits(samples, tmp_path):
    """Test limits from a settings file apply to map search."""
    config = write_text(tmp_path / 'settings.yaml', "limits:\n  max_source: 2\n")

    result = run('--config', config, 'maps', samples['z4'], samples['z2'])

    assert result.exit_code == 3


def test_invalid_config(samples, tmp_path):
    """Test an invalid settings file exits 2."""
    config = write_text(tmp_path / 'settings.yaml', "limits:\n  max_source: zero\n")

    result = run('--config', config, 'check', samples['z2'])

    assert result.exit_code == 2
    assert 'Configuration error' in result.stderr


def test_log_level_reaches_stderr(samples):
    """Test --log-level INFO logs the run on stderr only."""
    result = run('--log-level', 'INFO', 'check', samples['z2'])

    assert result.exit_code == 0
    assert 'Command completed' in result.stderr
    assert 'Command completed' not in result.stdout


def test_map_line_matches_pairs():
    """Test map lines use source->target tokens."""
    from pasch_geometry.cli import _map_line

    assert _map_line(GeometryMap.identity(z2())) == 'e->e a->a'
