"""Codegrees, the bounded-codegree criterion and the sharpness scan."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from codegree import catalog
from codegree.exact import FactoredInteger, Ordering, RationalLike, rat, rat_cmp


class CodegreeError(ValueError):
    """Raised for data that cannot come from a genuine character."""


@dataclass(frozen=True)
class CharEntry:
    degree: int
    kernel_index: int
    label: str = ""

    def __post_init__(self):
        if self.degree < 1 or self.kernel_index < 1:
            raise CodegreeError(f"degree and kernel index must be positive: {self}")


def codegree(e: CharEntry) -> int:
    """``|G : ker chi| / chi(1)``."""
    quot, rem = divmod(e.kernel_index, e.degree)
    if rem:
        raise CodegreeError(f"degree {e.degree} does not divide kernel index {e.kernel_index}")
    return quot


A_NUMERATOR = FactoredInteger({2: 9, 3: 2, 19: 2})
A_DENOMINATOR = FactoredInteger({5: 1, 7: 3, 11: 1, 31: 1})


def constant_a() -> Fraction:
    """The threshold 2^9*3^2*19^2 / (5*7^3*11*31)."""
    return Fraction(A_NUMERATOR.value, A_DENOMINATOR.value)


@dataclass(frozen=True)
class Violation:
    entry: CharEntry
    lhs: Fraction
    rhs: int


@dataclass
class CriterionReport:
    k: Fraction
    s: int
    checked: int
    violations: list[Violation] = field(default_factory=list)
    equalities: list[CharEntry] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def criterion_holds(entries: Iterable[CharEntry], k: RationalLike, s: int = 2) -> CriterionReport:
    """Check ``k * cod(chi) <= chi(1)**s`` for every nonlinear entry.

    Equality cases are kept separately so the closed boundary can be studied.
    """
    k = rat(k)
    if k <= 0:
        raise ValueError("k must be positive")
    if s < 1:
        raise ValueError("s must be at least 1")
    report = CriterionReport(k=k, s=s, checked=0)
    for e in entries:
        if e.degree == 1:
            continue
        report.checked += 1
        lhs = k * codegree(e)
        rhs = e.degree**s
        verdict = rat_cmp(lhs, rhs)
        if verdict is Ordering.GREATER:
            report.violations.append(Violation(e, lhs, rhs))
        elif verdict is Ordering.EQUAL:
            report.equalities.append(e)
    return report


def cube_equiv(order: FactoredInteger | int, degree: int, k: RationalLike) -> Ordering:
    """Ordering of ``k*|G|`` against ``degree**3``.

    For a faithful character this is the ordering of ``k*cod`` against
    ``degree**2``, since ``cod = |G| / degree``.
    """
    value = order.value if isinstance(order, FactoredInteger) else order
    if value % degree:
        raise CodegreeError(f"degree {degree} does not divide {value}")
    return rat_cmp(rat(k) * value, degree**3)


@dataclass(frozen=True)
class SharpnessRow:
    name: str
    degree: int
    order: FactoredInteger
    ratio: Fraction


@dataclass
class SharpnessReport:
    rows: list[SharpnessRow]
    maximum: Fraction
    argmax: list[str]
    fi22_ratio: Fraction
    a: Fraction = field(default_factory=constant_a)

    @property
    def max_equals_a(self) -> bool:
        return self.maximum == self.a

    @property
    def unique_at_on(self) -> bool:
        return self.argmax == ["ON"]

    @property
    def fi22_exceeds_a(self) -> bool:
        return self.fi22_ratio > self.a

    @property
    def ok(self) -> bool:
        return self.max_equals_a and self.unique_at_on and self.fi22_exceeds_a


def sharpness_scan(degree_override: dict[str, int] | None = None) -> SharpnessReport:
    """Maximize ``degree**3 / |S|`` over the sporadic rows other than Fi22.

    ``degree_override`` swaps in other degrees; used to confirm the maximum
    is sensitive to the exact O'N degree.
    """
    degree_override = degree_override or {}
    rows = []
    fi22_ratio = None
    for name in sorted(catalog.sporadic_names()):
        row = catalog.sporadic_row(name)
        degree = degree_override.get(name, row.min_ext_degree)
        ratio = Fraction(degree**3, row.order.value)
        if name == "Fi22":
            fi22_ratio = ratio
            continue
        rows.append(SharpnessRow(name, degree, row.order, ratio))
    maximum = max(r.ratio for r in rows)
    argmax = [r.name for r in rows if r.ratio == maximum]
    return SharpnessReport(rows=rows, maximum=maximum, argmax=argmax, fi22_ratio=fi22_ratio)
