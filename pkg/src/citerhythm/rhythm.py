"""R-sequences: yearly observed/expected citation ratios and their summaries.

A rhythm is internal when observed and expected values come from one matrix
(the expectation step merely redistributes the actor's own citations over
its publication years, so the totals balance) and cross when the per-age
averages come from a second matrix, which turns the ratio into a comparison
against that other matrix's citation level.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlignmentError, WindowError
from .pcmatrix import CkProfile, PCMatrix, _check_aligned, ck_profile, observed_citations

__all__ = [
    "RhythmPoint",
    "RhythmSequence",
    "WindowSeries",
    "INTERNAL",
    "CROSS",
    "expected_citations",
    "internal_rhythm",
    "cross_rhythm",
    "summary_i1",
    "summary_i2",
    "summary_i2_lenient",
    "sliding_windows",
]

INTERNAL = "internal"
CROSS = "cross"


@dataclass(frozen=True)
class RhythmPoint:
    """One publication year: observed citations, expected citations, and
    their ratio. The ratio is None exactly when expected is 0 (it is never
    coerced to 0 or infinity)."""

    year: int
    observed: float
    expected: float
    ratio: float | None


@dataclass(frozen=True)
class RhythmSequence:
    """A full R-sequence with its two summary indicators.

    ``i1`` is the ratio of sums (total observed over total expected), None
    when nothing is expected. ``i2`` is the plain average of the yearly
    ratios, None as soon as any ratio is undefined; see
    :func:`summary_i2_lenient` for the average over defined years only.
    """

    points: tuple[RhythmPoint, ...]
    kind: str  # INTERNAL or CROSS
    observed_label: str
    expectation_label: str
    i1: float | None
    i2: float | None
    undefined_years: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def years(self) -> tuple[int, ...]:
        return tuple(p.year for p in self.points)

    @property
    def ratios(self) -> tuple[float | None, ...]:
        return tuple(p.ratio for p in self.points)

    @property
    def observed_total(self) -> float:
        return sum(p.observed for p in self.points)

    @property
    def expected_total(self) -> float:
        return sum(p.expected for p in self.points)


@dataclass(frozen=True)
class WindowSeries:
    """Rhythms of consecutive equal-width sub-windows, oldest start first."""

    window_length: int
    entries: tuple[tuple[int, RhythmSequence], ...]


def expected_citations(pubs_source: PCMatrix, profile: CkProfile, year: int) -> float:
    """Citations ``year``'s publications would earn at the profile's average
    rate: the publication count times the per-age averages summed over the
    ages that still fit in the window."""
    if profile.n != pubs_source.n:
        raise AlignmentError(
            f"profile covers {profile.n} ages but matrix covers {pubs_source.n} years"
        )
    t = pubs_source._offset(year)
    return pubs_source.pubs[t] * profile.cumulative(pubs_source.n - t)


def _assemble(
    observed_source: PCMatrix,
    profile: CkProfile,
    kind: str,
    expectation_label: str,
) -> RhythmSequence:
    points = []
    undefined = []
    for year in observed_source.years:
        obs = observed_citations(observed_source, year)
        exp = expected_citations(observed_source, profile, year)
        ratio = obs / exp if exp > 0 else None
        if ratio is None:
            undefined.append(year)
        points.append(RhythmPoint(year=year, observed=obs, expected=exp, ratio=ratio))
    total_expected = sum(p.expected for p in points)
    i1 = sum(p.observed for p in points) / total_expected if total_expected > 0 else None
    i2 = None
    if not undefined:
        i2 = sum(p.ratio for p in points) / len(points)
    return RhythmSequence(
        points=tuple(points),
        kind=kind,
        observed_label=observed_source.label,
        expectation_label=expectation_label,
        i1=i1,
        i2=i2,
        undefined_years=tuple(undefined),
    )


def internal_rhythm(m: PCMatrix) -> RhythmSequence:
    """R-sequence of a matrix against its own per-age averages."""
    return _assemble(m, ck_profile(m), INTERNAL, m.label)


def cross_rhythm(observed_source: PCMatrix, expectation_source: PCMatrix) -> RhythmSequence:
    """R-sequence with observed values from one matrix and the expectation
    profile from another covering the same window."""
    _check_aligned(observed_source, expectation_source)
    return _assemble(
        observed_source,
        ck_profile(expectation_source),
        CROSS,
        expectation_source.label,
    )


def summary_i1(seq: RhythmSequence) -> float | None:
    """Ratio-of-sums summary; None when total expected is 0."""
    return seq.i1


def summary_i2(seq: RhythmSequence) -> float | None:
    """Average-of-ratios summary over all n years; None when any ratio is
    undefined (strict mode)."""
    return seq.i2


def summary_i2_lenient(seq: RhythmSequence) -> tuple[float, int] | None:
    """Average over the defined ratios only, with the count of years that
    entered the average; None when no ratio is defined."""
    defined = [p.ratio for p in seq.points if p.ratio is not None]
    if not defined:
        return None
    return sum(defined) / len(defined), len(defined)


def sliding_windows(
    m: PCMatrix,
    window: int,
    expectation_source: PCMatrix | None = None,
) -> WindowSeries:
    """Rhythms of every width-``window`` sub-matrix, shifted one year at a
    time. Per-age profiles are recomputed inside each window, since each
    sub-window is a self-contained p-c matrix."""
    if window < 1 or window > m.n:
        raise WindowError(f"window width {window} outside 1..{m.n}")
    if expectation_source is not None:
        _check_aligned(m, expectation_source)
    entries = []
    for start in range(m.first_year, m.last_year - window + 2):
        sub = m.window(start, window)
        if expectation_source is None:
            seq = internal_rhythm(sub)
        else:
            seq = cross_rhythm(sub, expectation_source.window(start, window))
        entries.append((start, seq))
    return WindowSeries(window_length=window, entries=tuple(entries))
