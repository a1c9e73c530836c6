from fractions import Fraction

import pytest

from endolift.cases import g2_families, ikeda
from endolift.charsets import CharSet, CharType
from endolift.errors import DomainError, PreconditionError
from endolift.lifts import (
    FREE,
    MUST_BE_ONE,
    SIGN_CONSTRAINED,
    LiftFamily,
    SquareClass,
    b1_classical_weight,
    c1_classical_weight,
    d2_classical_weights,
    endoscopic_grouping,
    enumerate_families,
    g3_weight_table,
    lefschetz_bd,
    lefschetz_bd_factor,
    lefschetz_c,
    lefschetz_c_factor,
    make_octuple,
    multiplicity,
    product_constraint_satisfiable,
    validate_family,
)

from . import oracles

H = Fraction(1, 2)


def test_make_octuple_constraints():
    o = make_octuple(CharSet.of([0]), 5)
    assert o.kind == CharType("C", 0) and o.d_constraint == FREE and o.image_rank == 2
    assert o.group_labels == ("PGL_{1}", "Sp_{0}")
    o = make_octuple(CharSet.of([-3 * H, 3 * H]), 2)
    assert o.d_constraint == MUST_BE_ONE and o.d_sign == 1 and o.image_rank == 2
    o = make_octuple(CharSet.of([-2, 2]), 1)
    assert o.d_constraint == SIGN_CONSTRAINED and o.d_sign == -1
    o = make_octuple(CharSet.of([-4, -2, 2, 4]), 1)
    assert o.d_sign == 1
    with pytest.raises(PreconditionError):
        make_octuple(CharSet.of([0]), 2)
    with pytest.raises(PreconditionError):
        make_octuple(CharSet.of([-3 * H, 3 * H]), 1)
    with pytest.raises(PreconditionError):
        make_octuple(CharSet.of([-2, 2]), 2)


def test_product_constraint():
    d1 = make_octuple(CharSet.of([-2, 2]), 1)
    d2 = make_octuple(CharSet.of([-4, -2, 2, 4]), 1)
    assert not product_constraint_satisfiable([d1, d2])
    assert product_constraint_satisfiable([d1, d1])
    assert product_constraint_satisfiable([make_octuple(CharSet.of([0]), 1), d1])


def _family_key(fam):
    return frozenset((tuple(x.to_fraction() for x in o.seed_set), o.n) for o in fam.octuples)


@pytest.mark.parametrize(
    "values",
    [
        [0],
        [-1, 0, 1],
        [-2, -1, 0, 1, 2],
        [-3, -1, 0, 1, 3],
        [-3, -2, -1, 0, 1, 2, 3],
        [-4, -3, -1, 0, 1, 3, 4],
        [-4, -3, -2, -1, 0, 1, 2, 3, 4],
        [-6, -5, -2, -1, 0, 1, 2, 5, 6],
    ],
)
def test_families_match_brute_force(values):
    s = CharSet.of(values)
    found = enumerate_families(s)
    brute = oracles.brute_families([Fraction(v) for v in values])
    assert sorted(map(sorted, map(_family_key, found))) == sorted(map(sorted, brute))
    for fam in found:
        assert validate_family(fam, s) == []
        assert 2 * fam.g + 1 == len(s)


def test_validate_family_detects_problems():
    s = CharSet.of([-2, -1, 0, 1, 2])
    fam = enumerate_families(s)[0]
    assert validate_family(fam, CharSet.of([-3, -1, 0, 1, 3])) != []
    broken = LiftFamily(fam.octuples + fam.octuples, fam.g)
    assert validate_family(broken, s) != []


def test_thread_count_does_not_change_output(monkeypatch):
    s = CharSet.of([-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5])
    reference = [f.to_json() for f in enumerate_families(s, threads=1)]
    for threads in (2, 4):
        assert [f.to_json() for f in enumerate_families(s, threads=threads)] == reference
    monkeypatch.setenv("ENDOLIFT_THREADS", "3")
    assert [f.to_json() for f in enumerate_families(s)] == reference


def test_g2_generic_labels():
    for a, b in [(2, 1), (5, 3), (7, 1)]:
        fams = g2_families(a, b)
        assert sorted(f.tags[0] for f in fams) == ["a", "b", "c", "d", "e"]


def test_g2_refinements():
    assert "b'" in [f.tags[0] for f in g2_families(3, 3)]
    assert "d'" in [f.tags[0] for f in g2_families(3, 0)]
    tags = sorted(f.tags[0] for f in g2_families(0, 0))
    assert tags == ["a", "a'", "b", "b'", "c", "d", "d'", "e"]
    with pytest.raises(DomainError):
        g2_families(1, 2)


def test_multiplicity_in_family_json():
    fam = g2_families(2, 1)[0]
    data = fam.to_json()
    assert data["multiplicity"] == multiplicity(fam.g, fam.r)
    assert data["multiplicity_status"] == "conjectural"


def test_lefschetz_closed_forms():
    assert lefschetz_c(0) == 1 and lefschetz_c(2) == 4
    assert lefschetz_bd(1) == 1 and lefschetz_bd(3) == 4
    assert lefschetz_c_factor(7, 5) == 2**7
    assert lefschetz_c_factor(5, 11) == 32
    assert lefschetz_bd_factor(4, 2) == 8
    with pytest.raises(DomainError):
        lefschetz_c_factor(5, 5)
    with pytest.raises(DomainError):
        lefschetz_bd_factor(4, 3)
    with pytest.raises(DomainError):
        lefschetz_bd(0)


def test_multiplicity_examples():
    assert multiplicity(2, 1) == 4
    assert multiplicity(3, 4) == 1
    assert multiplicity(3, 2) == 4
    with pytest.raises(DomainError):
        multiplicity(2, 4)


def test_square_class():
    assert str(SquareClass.of(12)) == "3"
    assert str(SquareClass.of(-8)) == "-2"
    assert SquareClass.of(Fraction(1, 3)) == SquareClass.of(3)
    assert SquareClass.of(50).two_component == 1
    assert (SquareClass.of(6) * SquareClass.of(15)) == SquareClass.of(10)
    assert SquareClass.of(49).is_trivial
    with pytest.raises(DomainError):
        SquareClass.of(0)
    with pytest.raises(DomainError):
        SquareClass(1, frozenset({4}))


def test_endoscopic_examples():
    d = SquareClass.of(5)
    eg = endoscopic_grouping([SquareClass(), d, d, d], 3)
    assert set(eg.sigma_q) == {frozenset(), frozenset({2, 3}), frozenset({2, 4}), frozenset({3, 4})}
    assert eg.dim == 2 and eg.cosets == 4
    eg = endoscopic_grouping([SquareClass()] * 3, 4)
    assert len(eg.sigma_q) == 4 and eg.dim == 2**4 // 2**2
    eg = endoscopic_grouping([SquareClass.of(-1)], 2)
    assert eg.sigma_q == (frozenset(),) and eg.dim == 4
    with pytest.raises(DomainError):
        endoscopic_grouping([SquareClass()] * 4, 2)


def test_classical_weights():
    assert b1_classical_weight(CharSet.of([-3 * H, 3 * H])) == 4
    assert c1_classical_weight(CharSet.of([-3, 0, 3])) == 4
    assert d2_classical_weights(CharSet.of([-2, -1, 1, 2])) == (4, 2)
    for a in range(4):
        for b in range(a + 1):
            block = CharSet.of([-a - 2, -b - 1, b + 1, a + 2])
            assert d2_classical_weights(block) == (a + b + 4, a - b + 2)
    with pytest.raises(PreconditionError):
        c1_classical_weight(CharSet.of([-1, 1]))


def test_g3_table_zero():
    rows = g3_weight_table(0, 0, 0)
    assert [(r.scalar,) + r.pair for r in rows] == [(4, 4, 2), (3, 5, 3), (2, 6, 2)]
    with pytest.raises(DomainError):
        g3_weight_table(0, 1, 0)


def test_ikeda_small():
    report = ikeda(1, 0)
    assert report.weight == 4 and report.label == "saito-kurokawa"
    assert ikeda(2, 1).label == "ikeda"
    with pytest.raises(DomainError):
        ikeda(0, 1)
