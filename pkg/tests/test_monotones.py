"""Screening additive measures and validating complete families."""

import pytest

from pcdres import (
    BUILTIN_MEASURES,
    NEGATIVE_CONTROLS,
    CandidateMeasure,
    FinFun,
    MeasureRejected,
    Profile,
    TheoryVariant,
    check_complete_family,
    check_measure,
    default_family,
    identity,
    induce_monotone,
    phi_profile,
)

BIJ = TheoryVariant.SET_BIJ
INJ = TheoryVariant.SET_INJ


def test_builtin_registry():
    assert len(BUILTIN_MEASURES) == 20  # phi_0..8, gamma_0..8, two sizes
    assert BUILTIN_MEASURES["phi_2"](FinFun.from_map([0, 0], 1)) == 1.0
    assert BUILTIN_MEASURES["gamma_1"](FinFun.from_map([0, 0], 1)) == 1.0
    assert BUILTIN_MEASURES["dom_size"](identity(3)) == 3.0
    assert set(NEGATIVE_CONTROLS) <= set(BUILTIN_MEASURES)


def test_phi_2_passes_screening():
    report = check_measure(BIJ, BUILTIN_MEASURES["phi_2"], 3)
    assert report.passed
    assert report.render().splitlines()[0] == "measure phi_2 [set-bij] size limit 3: PASS"


def test_phi_1_fails_the_unit_condition():
    report = check_measure(BIJ, BUILTIN_MEASURES["phi_1"], 2)
    assert not report.passed
    assert report.additivity.passed
    assert not report.unit.passed
    assert report.unit.counterexample == (identity(1),)
    assert "mu = 1.0 on the identity of size 1" in report.unit.note
    assert report.monotonicity.passed


def test_gamma_0_fails_monotonicity_under_injections():
    report = check_measure(INJ, BUILTIN_MEASURES["gamma_0"], 2)
    assert not report.unit.passed
    assert not report.monotonicity.passed
    # adjoining a fresh unhit output is free and raises the count
    assert report.monotonicity.counterexample == (
        FinFun.from_map([], 0),
        FinFun.from_map([], 1),
    )
    assert report.monotonicity.note == "post-composition raises mu from 0.0 to 1.0"


def test_negative_controls_fail_under_both_variants():
    for name in NEGATIVE_CONTROLS:
        for variant in (BIJ, INJ):
            assert not check_measure(variant, BUILTIN_MEASURES[name], 2).passed


def test_phi_2_is_variant_sensitive():
    # with injections free a large fiber may be cut down to size exactly 2,
    # which needs a 3-fiber and so only shows at size limit 3
    assert check_measure(INJ, BUILTIN_MEASURES["phi_2"], 2).passed
    report = check_measure(INJ, BUILTIN_MEASURES["phi_2"], 3)
    assert not report.passed
    assert report.monotonicity.counterexample == (
        FinFun.from_map([0, 0, 0], 1),
        FinFun.from_map([0, 1], 3),
    )
    assert report.monotonicity.note.startswith("pre-composition raises mu")


def test_additivity_failure_is_reported():
    squared = CandidateMeasure("squared", lambda f: float(f.dom.size**2))
    report = check_measure(BIJ, squared, 1)
    assert not report.additivity.passed
    assert report.additivity.counterexample == (identity(1), identity(1))
    assert "mu(f+g) = 4.0 but mu(f) + mu(g) = 2.0" in report.additivity.note


def test_tolerance_semantics():
    noisy = CandidateMeasure("noisy", lambda f: phi_profile(f)[2] + 1e-12)
    assert check_measure(BIJ, noisy, 2).passed  # noise below default tolerance
    assert not check_measure(BIJ, noisy, 2, tolerance=1e-15).passed
    loud = CandidateMeasure("loud", lambda f: phi_profile(f)[2] + 1e-6)
    report = check_measure(BIJ, loud, 2)
    assert not report.unit.passed


def test_induced_monotone_values():
    M = induce_monotone(BIJ, BUILTIN_MEASURES["phi_2"], 2)
    assert M(Profile()) == 0.0
    assert M(Profile({2: 1})) == 1.0
    assert M(Profile({0: 2, 2: 3})) == 3.0
    N = induce_monotone(INJ, BUILTIN_MEASURES["gamma_3"], 2)
    assert N(Profile({2: 2, 3: 1})) == 1.0


def test_induced_monotone_is_additive_on_forms():
    M = induce_monotone(BIJ, BUILTIN_MEASURES["phi_2"], 2)
    forms = [Profile(), Profile({2: 1}), Profile({0: 1}), Profile({0: 2, 2: 2})]
    for p in forms:
        for q in forms:
            assert M(p + q) == M(p) + M(q)


def test_induce_rejects_failing_measures():
    with pytest.raises(MeasureRejected) as exc:
        induce_monotone(BIJ, BUILTIN_MEASURES["phi_1"], 2)
    assert exc.value.report is not None
    assert not exc.value.report.unit.passed


# -- families ----------------------------------------------------------------


def test_default_families_are_complete():
    report = check_complete_family(BIJ, default_family(BIJ), 3)
    assert report.passed
    assert report.measures == ("phi_0", "phi_2", "phi_3", "phi_4")
    assert report.render() == "family {phi_0, phi_2, phi_3, phi_4} [set-bij] size limit 3: PASS"
    report = check_complete_family(INJ, default_family(INJ), 3)
    assert report.passed
    assert report.measures == ("gamma_2", "gamma_3", "gamma_4")


def test_single_member_families_are_incomplete():
    report = check_complete_family(BIJ, [BUILTIN_MEASURES["phi_2"]], 3)
    assert not report.passed
    # phi_2 alone cannot see the unhit output that blocks this conversion
    assert report.counterexample == (FinFun.from_map([], 0), FinFun.from_map([], 1))
    assert report.note == "all measures dominate but f does not convert to g"

    report = check_complete_family(INJ, [BUILTIN_MEASURES["gamma_2"]], 3)
    assert not report.passed
    # gamma_2 alone cannot see the 3-fiber the target needs
    assert report.counterexample == (
        FinFun.from_map([0, 0], 1),
        FinFun.from_map([0, 0, 0], 1),
    )


def test_family_completeness_depends_on_the_size_limit():
    # at sizes <= 2 no 3-fiber exists, so gamma_2 alone is already complete
    assert check_complete_family(INJ, [BUILTIN_MEASURES["gamma_2"]], 2).passed


def test_family_members_are_screened_first():
    with pytest.raises(MeasureRejected, match="family member phi_1 fails screening"):
        check_complete_family(BIJ, [BUILTIN_MEASURES["phi_1"]], 2)
    with pytest.raises(MeasureRejected):
        check_complete_family(
            BIJ, [BUILTIN_MEASURES["phi_2"], BUILTIN_MEASURES["dom_size"]], 2
        )


def test_family_report_render_shows_counterexample():
    report = check_complete_family(BIJ, [BUILTIN_MEASURES["phi_2"]], 2)
    rendered = report.render()
    assert rendered.splitlines()[0] == "family {phi_2} [set-bij] size limit 2: FAIL"
    assert '{"dom":0,"cod":0,"map":[]} vs {"dom":0,"cod":1,"map":[]}' in rendered
