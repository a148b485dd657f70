import pytest

from curvemilnor import ade, engine
from curvemilnor.ade import ADEClass
from curvemilnor.corpus import catalog_curves, extra_curves
from curvemilnor.curve import curve_from_lists
from curvemilnor.errors import UnsupportedCharacteristic, ValidationError
from curvemilnor.series import RATIONALS, FieldSpec

CATALOG = catalog_curves()


def test_parse_and_format():
    assert ADEClass.parse("E7") == ADEClass("E", 7)
    assert ADEClass.parse("d_5") == ADEClass("D", 5)
    assert str(ADEClass("A", 3)) == "A3"
    for bad in ("E9", "D3", "A0", "F4", "x"):
        with pytest.raises(ValidationError):
            ADEClass.parse(bad)


@pytest.mark.parametrize("cls", ade.catalog_classes(), ids=str)
def test_catalog_matches_table(cls):
    c = CATALOG[str(cls)]
    exp = ade.expected_invariants(cls)
    assert engine.milnor_number(c) == exp["mu"] == cls.index
    assert c.r == exp["r"] == cls.r
    assert engine.multiplicity(c) == exp["mult"]
    assert engine.relative_milnor_vector(c) == exp["mu_vec"]
    assert ade.classify(c) == cls


@pytest.mark.parametrize("cls", [c for c in ade.catalog_classes() if c.family != "D"], ids=str)
def test_closed_forms(cls):
    assert engine.value_semigroup(CATALOG[str(cls)]).equals(ade.closed_form_value_semigroup(cls))


def test_d_family_engine_derived():
    assert ade.closed_form_value_semigroup(ADEClass("D", 6)) == ade.ENGINE_DERIVED
    for k, gamma in ((4, (2, 2, 2)), (5, (2, 4)), (6, (2, 3, 3)), (7, (2, 6)), (8, (2, 4, 4))):
        nu = ade.reference_value_semigroup(ADEClass("D", k))
        assert nu.gamma == gamma
        assert nu.gorenstein_symmetry(gamma)


def test_printed_d_forms_reported():
    assert ade.d_form_diff(ADEClass("D", 5), ade.reference_value_semigroup(ADEClass("D", 5))) == []
    assert len(ade.d_form_diff(ADEClass("D", 6), ade.reference_value_semigroup(ADEClass("D", 6)))) == 15
    with pytest.raises(ValueError):
        ade.printed_d_membership(ADEClass("E", 6))


def test_d7_versus_e7():
    assert ade.candidate_classes(3, 2, 7) == [ADEClass("E", 7), ADEClass("D", 7)]
    assert ade.classify(CATALOG["D7"]) == ADEClass("D", 7)
    assert ade.classify(CATALOG["E7"]) == ADEClass("E", 7)


def test_not_ade():
    extra = extra_curves()
    for name in ("t3_t7", "t4_t6+t7", "lines4", "space_axes3", "smooth"):
        assert ade.classify(extra[name]) is None
    assert ade.classify(extra["t2_t11"]) == ADEClass("A", 10)


def test_classify_longer_families():
    for k in range(9, 13):
        for fam in "AD":
            cls = ADEClass(fam, k)
            assert ade.classify(ade.catalog_curve(cls)) == cls


def test_equisingular_changes_of_coordinates():
    # E8 with a higher-order perturbation and swapped coordinates
    e8b = curve_from_lists(RATIONALS, [[{3: 1, 4: 2}, {5: 1, 7: -1}]])
    assert ade.classify(e8b) == ADEClass("E", 8)
    assert ade.equisingular(e8b, CATALOG["E8"])
    assert not ade.equisingular(CATALOG["E6"], CATALOG["E8"])
    d4 = curve_from_lists(RATIONALS, [[{1: 1}, {1: 2}], [{1: 1}, {1: -1}], [{1: 1}, {1: 5}]])
    assert ade.equisingular(d4, CATALOG["D4"])


def test_fingerprint_is_branch_order_independent():
    c = CATALOG["D8"]
    swapped = c.subcurve([2, 0, 1])
    assert ade.fingerprint(engine.value_semigroup(c)) == ade.fingerprint(engine.value_semigroup(swapped))
    assert len(ade.fingerprint(engine.value_semigroup(c))) == 16


def test_characteristic_restrictions():
    with pytest.raises(UnsupportedCharacteristic):
        ade.catalog_curve(ADEClass("E", 8), FieldSpec(5))
    with pytest.raises(UnsupportedCharacteristic):
        ade.catalog_curve(ADEClass("E", 6), FieldSpec(3))
    assert ade.classify(ade.catalog_curve(ADEClass("D", 6), FieldSpec(3))) == ADEClass("D", 6)


@pytest.mark.parametrize("p", [7, 101])
def test_prime_fields(p):
    F = FieldSpec(p)
    for name, c in catalog_curves(F, "AE" if p == 7 else "ADE").items():
        assert str(ade.classify(c)) == name


def test_fcm_check():
    assert ade.fcm_classification_check(CATALOG["E6"]) == {"ade": "E6", "finite_cm_type": True, "status": "ok"}
    extra = extra_curves()
    assert ade.fcm_classification_check(extra["smooth"])["status"] == "regular"
    assert ade.fcm_classification_check(extra["t3_t7"]) == {"ade": None, "finite_cm_type": False,
                                                             "status": "ok"}
    # three coordinate axes in space: finite CM type, but not a plane ADE curve
    assert ade.fcm_classification_check(extra["space_axes3"])["status"] == "VIOLATION"
