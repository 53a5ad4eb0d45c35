"""Tests for conjugacy of homomorphisms and the quotient composition."""
import logging
import pytest
from pasch_geometry.category import congruence
from pasch_geometry.category.congruence import (
    are_equivalent,
    conjugate_map,
    equivalence_classes,
    hyper_equivalent,
    quotient_compose,
    verify_congruence,
)
from pasch_geometry.category.morphisms import GeometryMap
from pasch_geometry.core.groups import symmetric_group_table
from pasch_geometry.exceptions import NotSharpError, ShapeError
from tests.fixtures.geometries import (
    S3_12,
    S3_123,
    mod2,
    s3,
    sign,
    trivial,
    z2,
    z2_to_sign,
    z3,
    z3_embedding,
    z3_embedding_swapped,
    z4,
)


def test_conjugation_by_identity():
    """Test b = e leaves the map unchanged."""
    g = z3_embedding()

    assert conjugate_map(0, g) == g


def test_conjugation_swaps_three_cycles():
    """Test (12)(123)(12) = (132)."""
    assert conjugate_map(S3_12, z3_embedding()) == z3_embedding_swapped()


def test_conjugation_trivial_on_abelian_target():
    """Test every conjugate equals the map when the target is abelian."""
    f = mod2()

    assert all(conjugate_map(b, f) == f for b in range(2))


def test_conjugation_action_law():
    """Test conjugating by d then b equals conjugating by b·d."""
    table = symmetric_group_table(3)
    g = z3_embedding()

    for b in range(6):
        for d in range(6):
            assert conjugate_map(b, conjugate_map(d, g)) == conjugate_map(table.mul(b, d), g)


def test_conjugation_needs_sharp_target():
    """Test L as a target is refused."""
    with pytest.raises(NotSharpError):
        conjugate_map(1, z2_to_sign())


def test_are_equivalent():
    """Test the two embeddings are conjugate and the trivial map is alone."""
    constant = GeometryMap.constant(z3(), s3())

    assert are_equivalent(z3_embedding(), z3_embedding())
    assert are_equivalent(z3_embedding(), z3_embedding_swapped())
    assert not are_equivalent(constant, z3_embedding())


def test_are_equivalent_shape_mismatch():
    """Test maps with different sources cannot be compared."""
    with pytest.raises(ShapeError):
        are_equivalent(mod2(), GeometryMap.identity(z2()))


def test_hyper_equivalence_on_non_sharp_target():
    """Test the experimental variant relates the two maps Z2 -> L."""
    constant = GeometryMap.constant(z2(), sign())

    assert hyper_equivalent(z2_to_sign(), z2_to_sign())
    assert are_equivalent(constant, z2_to_sign(), experimental_hyper=True)


def test_classes_z3_to_s3():
    """Test Hom(Z3, S3) splits into the trivial map and the two embeddings."""
    classes = equivalence_classes(z3(), s3())

    assert [len(c) for c in classes] == [1, 2]
    assert classes[0].representative.table == (0, 0, 0)
    assert classes[1].representative == z3_embedding()
    assert z3_embedding_swapped() in classes[1]


def test_classes_abelian_target_are_singletons():
    """Test Hom(Z2, Z2) has two singleton classes."""
    assert [len(c) for c in equivalence_classes(z2(), z2())] == [1, 1]


def test_classes_to_trivial():
    """Test Hom(A, 1) is one class."""
    assert len(equivalence_classes(z4(), trivial())) == 1


def test_classes_partition_hom_set():
    """Test End(S3) has 10 maps in classes of sizes 1, 3 and 6."""
    classes = equivalence_classes(s3(), s3())

    assert sorted(len(c) for c in classes) == [1, 3, 6]
    assert sum(len(c) for c in classes) == 10


def test_classes_need_sharp_target():
    """Test classes into L are refused."""
    with pytest.raises(NotSharpError):
        equivalence_classes(z2(), sign())


def test_verify_congruence():
    """Test ~ is a congruence on Z3 -> S3 -> S3."""
    report = verify_congruence([(z3(), s3(), s3())])

    assert report.passed
    assert report.checked_composites > 0
    assert report.lines()[0] == "congruence: pass"


def test_verify_congruence_vacuous():
    """Test no triples means nothing to check."""
    report = verify_congruence([])

    assert report.passed
    assert report.checked_composites == 0


def test_quotient_compose_with_identity_class():
    """Test [id] ∘ [f] = [f], the identity class being the inner automorphisms."""
    classes = equivalence_classes(s3(), s3())
    identity_class = next(c for c in classes if GeometryMap.identity(s3()) in c)
    embedding_class = equivalence_classes(z3(), s3())[1]

    result = quotient_compose(identity_class, embedding_class)

    assert len(identity_class) == 6
    assert result.representative == embedding_class.representative
    assert set(result.members) == set(embedding_class.members)


def test_quotient_compose_embedding_after_identity():
    """Test [embedding] ∘ [id on Z3] = [embedding]."""
    id_class = equivalence_classes(z3(), z3())[1]
    assert GeometryMap.identity(z3()) in id_class
    embedding_class = equivalence_classes(z3(), s3())[1]

    assert quotient_compose(embedding_class, id_class).representative == z3_embedding()


def test_quotient_compose_mismatch():
    """Test non-composable classes raise ShapeError."""
    zs = equivalence_classes(z3(), s3())[0]

    with pytest.raises(ShapeError):
        quotient_compose(zs, zs)


def test_conjugating_by_a_rotation():
    """Test conjugating a rotation embedding by a rotation is trivial."""
    assert conjugate_map(S3_123, z3_embedding()) == z3_embedding()


def test_failed_congruence_logs_warning(monkeypatch, caplog):
    """Test a failed congruence check is logged at WARNING."""
    monkeypatch.setattr(logging.getLogger('pasch_geometry'), 'propagate', True)
    monkeypatch.setattr(congruence, '_orbit', lambda g: frozenset())

    with caplog.at_level(logging.INFO, logger='pasch_geometry'):
        report = verify_congruence([(z2(), z2(), z2())])

    assert not report.passed
    assert [r.levelno for r in caplog.records if 'Verified congruence' in r.message] == [
        logging.WARNING
    ]
