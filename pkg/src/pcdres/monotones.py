"""Screening candidate resource measures by exhaustive small-instance search.

A real-valued function on processes induces an additive monotone on
convertibility classes exactly when it is additive under disjoint union,
vanishes on identities, and never increases under free pre- or
post-composition.  :func:`check_measure` tests the three conditions over
every process up to a size limit and reports the first counterexample for
each failing one; :func:`induce_monotone` packages a passing measure as a
function of normal forms; :func:`check_complete_family` tests whether a
family of passing measures jointly characterizes convertibility.

The built-in registry carries the multiplicity and tail counts ``phi_i`` and
``gamma_i`` for ``i <= 8`` together with deliberate non-monotones (``phi_1``,
``gamma_0``, ``gamma_1``, domain size, codomain size) that the checks are
expected to reject.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Callable, Iterable
from dataclasses import dataclass

from .convert import TheoryVariant, decide, normal_form, representative
from .finset import (
    FinFun,
    compose,
    disjoint_union,
    enumerate_all_functions,
    finfun_to_dict,
    identity,
)
from .profiles import Profile, gamma_profile, phi_profile

TOLERANCE = 1e-9


@dataclass(frozen=True)
class CandidateMeasure:
    """A named real-valued function on processes."""

    name: str
    fn: Callable[[FinFun], float]

    def __call__(self, f: FinFun) -> float:
        return self.fn(f)


class MeasureRejected(ValueError):
    """A measure failed screening; carries the offending report when available."""

    def __init__(self, message: str, report: CheckReport | None = None) -> None:
        super().__init__(message)
        self.report = report


def _fmt(f: FinFun) -> str:
    return json.dumps(finfun_to_dict(f), separators=(",", ":"))


@dataclass(frozen=True)
class ConditionResult:
    passed: bool
    counterexample: tuple[FinFun, ...] = ()
    note: str = ""

    def render(self) -> str:
        if self.passed:
            return "pass"
        shown = " ".join(_fmt(m) for m in self.counterexample)
        return f"FAIL {self.note} [{shown}]"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of the three-condition screen for one measure."""

    measure: str
    variant: TheoryVariant
    size_limit: int
    additivity: ConditionResult
    unit: ConditionResult
    monotonicity: ConditionResult

    @property
    def passed(self) -> bool:
        return self.additivity.passed and self.unit.passed and self.monotonicity.passed

    def render(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return "\n".join(
            [
                f"measure {self.measure} [{self.variant.value}] "
                f"size limit {self.size_limit}: {verdict}",
                f"  additivity: {self.additivity.render()}",
                f"  unit: {self.unit.render()}",
                f"  free monotonicity: {self.monotonicity.render()}",
            ]
        )


def _check_additivity(
    mu: CandidateMeasure, funs: list[FinFun], tolerance: float
) -> ConditionResult:
    for f, g in itertools.product(funs, funs):
        lhs = mu(disjoint_union(f, g))
        rhs = mu(f) + mu(g)
        if abs(lhs - rhs) > tolerance:
            return ConditionResult(
                False, (f, g), f"mu(f+g) = {lhs} but mu(f) + mu(g) = {rhs}"
            )
    return ConditionResult(True)


def _check_unit(
    mu: CandidateMeasure, size_limit: int, tolerance: float
) -> ConditionResult:
    for z in range(size_limit + 1):
        value = mu(identity(z))
        if abs(value) > tolerance:
            return ConditionResult(
                False, (identity(z),), f"mu = {value} on the identity of size {z}"
            )
    return ConditionResult(True)


def _check_monotonicity(
    variant: TheoryVariant,
    mu: CandidateMeasure,
    funs: list[FinFun],
    size_limit: int,
    tolerance: float,
) -> ConditionResult:
    for f in funs:
        base = mu(f)
        for other in range(size_limit + 1):
            for xi in variant.free_morphisms(f.cod, other):
                value = mu(compose(xi, f))
                if base < value - tolerance:
                    return ConditionResult(
                        False,
                        (f, xi),
                        f"post-composition raises mu from {base} to {value}",
                    )
            for xi in variant.free_morphisms(other, f.dom):
                value = mu(compose(f, xi))
                if base < value - tolerance:
                    return ConditionResult(
                        False,
                        (f, xi),
                        f"pre-composition raises mu from {base} to {value}",
                    )
    return ConditionResult(True)


def check_measure(
    variant: TheoryVariant,
    mu: CandidateMeasure,
    size_limit: int,
    tolerance: float = TOLERANCE,
) -> CheckReport:
    """Screen ``mu`` exhaustively over processes with sizes up to ``size_limit``."""
    funs = list(enumerate_all_functions(size_limit))
    return CheckReport(
        measure=mu.name,
        variant=variant,
        size_limit=size_limit,
        additivity=_check_additivity(mu, funs, tolerance),
        unit=_check_unit(mu, size_limit, tolerance),
        monotonicity=_check_monotonicity(variant, mu, funs, size_limit, tolerance),
    )


@dataclass(frozen=True)
class InducedMonotone:
    """A passing measure read as a function of normal forms."""

    variant: TheoryVariant
    measure: CandidateMeasure

    def __call__(self, form: Profile) -> float:
        return self.measure(representative(self.variant, form))


def induce_monotone(
    variant: TheoryVariant,
    mu: CandidateMeasure,
    size_limit: int,
    tolerance: float = TOLERANCE,
) -> InducedMonotone:
    """Package ``mu`` as a monotone on normal forms, verifying it is well defined.

    The screen must pass at ``size_limit``, and ``mu`` must be constant on
    every enumerated class (equal normal forms); either failure raises
    :class:`MeasureRejected`.
    """
    report = check_measure(variant, mu, size_limit, tolerance)
    if not report.passed:
        raise MeasureRejected(f"measure {mu.name} fails screening", report)
    classes: dict[Profile, tuple[FinFun, float]] = {}
    for f in enumerate_all_functions(size_limit):
        form = normal_form(variant, f)
        value = mu(f)
        if form in classes:
            first, base = classes[form]
            if abs(value - base) > tolerance:
                raise MeasureRejected(
                    f"measure {mu.name} is not well defined on classes: "
                    f"mu = {base} on {_fmt(first)} but {value} on {_fmt(f)}",
                    report,
                )
        else:
            classes[form] = (f, value)
    return InducedMonotone(variant, mu)


@dataclass(frozen=True)
class FamilyReport:
    """Outcome of a completeness check for a family of measures."""

    variant: TheoryVariant
    size_limit: int
    measures: tuple[str, ...]
    passed: bool
    counterexample: tuple[FinFun, FinFun] | None = None
    note: str = ""

    def render(self) -> str:
        head = (
            f"family {{{', '.join(self.measures)}}} [{self.variant.value}] "
            f"size limit {self.size_limit}: {'PASS' if self.passed else 'FAIL'}"
        )
        if self.passed:
            return head
        f, g = self.counterexample
        return f"{head}\n  {self.note} [{_fmt(f)} vs {_fmt(g)}]"


def check_complete_family(
    variant: TheoryVariant,
    measures: Iterable[CandidateMeasure],
    size_limit: int,
    tolerance: float = TOLERANCE,
) -> FamilyReport:
    """Test whether joint dominance of the measures coincides with ``decide``.

    Every member must individually pass :func:`check_measure`; a member that
    does not is rejected up front rather than reported as incompleteness.
    """
    measures = tuple(measures)
    for mu in measures:
        report = check_measure(variant, mu, size_limit, tolerance)
        if not report.passed:
            raise MeasureRejected(
                f"family member {mu.name} fails screening", report
            )
    names = tuple(mu.name for mu in measures)
    funs = list(enumerate_all_functions(size_limit))
    values = [tuple(mu(f) for mu in measures) for f in funs]
    for (f, vf), (g, vg) in itertools.product(zip(funs, values), repeat=2):
        dominates = all(a >= b - tolerance for a, b in zip(vf, vg))
        converts = decide(variant, f, g)
        if converts and not dominates:
            drop = next(
                name for name, a, b in zip(names, vf, vg) if a < b - tolerance
            )
            return FamilyReport(
                variant,
                size_limit,
                names,
                False,
                (f, g),
                f"{drop} decreases along a conversion",
            )
        if dominates and not converts:
            return FamilyReport(
                variant,
                size_limit,
                names,
                False,
                (f, g),
                "all measures dominate but f does not convert to g",
            )
    return FamilyReport(variant, size_limit, names, True)


def _phi_measure(i: int) -> CandidateMeasure:
    return CandidateMeasure(f"phi_{i}", lambda f, i=i: float(phi_profile(f)[i]))


def _gamma_measure(i: int) -> CandidateMeasure:
    return CandidateMeasure(f"gamma_{i}", lambda f, i=i: float(gamma_profile(f)[i]))


def _registry() -> dict[str, CandidateMeasure]:
    reg = {}
    for i in range(9):
        phi = _phi_measure(i)
        gamma = _gamma_measure(i)
        reg[phi.name] = phi
        reg[gamma.name] = gamma
    reg["dom_size"] = CandidateMeasure("dom_size", lambda f: float(f.dom.size))
    reg["cod_size"] = CandidateMeasure("cod_size", lambda f: float(f.cod.size))
    return reg


BUILTIN_MEASURES: dict[str, CandidateMeasure] = _registry()

# these are expected to fail screening; tests use them as controls
NEGATIVE_CONTROLS: tuple[str, ...] = (
    "phi_1",
    "gamma_0",
    "gamma_1",
    "dom_size",
    "cod_size",
)


def default_family(variant: TheoryVariant) -> tuple[CandidateMeasure, ...]:
    """The canonical complete family for small-instance checks."""
    if variant is TheoryVariant.SET_BIJ:
        names = ("phi_0", "phi_2", "phi_3", "phi_4")
    else:
        names = ("gamma_2", "gamma_3", "gamma_4")
    return tuple(BUILTIN_MEASURES[name] for name in names)
