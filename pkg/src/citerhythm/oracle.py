"""Event-level brute-force oracle and seeded synthetic corpus generator.

Everything here recomputes observed/expected values by direct summation
over individual citation events, sharing no arithmetic with the matrix
path, so agreement between the two is evidence rather than tautology.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AlignmentError, DataConsistencyError, DomainError
from .pcmatrix import PCMatrix
from .rhythm import CROSS, INTERNAL, RhythmPoint, RhythmSequence

__all__ = [
    "CitationEvent",
    "EventCorpus",
    "CorpusSpec",
    "default_age_curve",
    "aggregate",
    "corpus_from_matrix",
    "brute_force_rhythm",
    "generate",
    "parse_events_csv",
    "max_relative_difference",
]


@dataclass(frozen=True)
class CitationEvent:
    """One citation (or a weighted bundle of identical ones): something
    published in ``published_year`` was cited in ``citing_year``."""

    published_year: int
    citing_year: int
    weight: float = 1.0

    def __post_init__(self) -> None:
        if self.citing_year < self.published_year:
            raise DomainError(
                f"citing year {self.citing_year} precedes publication year "
                f"{self.published_year}"
            )
        if not math.isfinite(self.weight) or self.weight <= 0:
            raise DomainError(f"event weight must be positive, got {self.weight!r}")


@dataclass(frozen=True)
class EventCorpus:
    """Per-year publication weights plus a flat list of citation events."""

    first_year: int
    pub_weights: tuple[float, ...]
    events: tuple[CitationEvent, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        for w in self.pub_weights:
            if not math.isfinite(w) or w < 0:
                raise DomainError(f"publication weight must be non-negative, got {w!r}")
        last = self.first_year + len(self.pub_weights) - 1
        for ev in self.events:
            if not self.first_year <= ev.published_year <= last:
                raise DomainError(
                    f"event published in {ev.published_year}, outside window "
                    f"{self.first_year}-{last}"
                )
            if ev.citing_year > last:
                raise DomainError(
                    f"event cited in {ev.citing_year}, outside window "
                    f"{self.first_year}-{last}"
                )

    @property
    def n(self) -> int:
        return len(self.pub_weights)


def aggregate(corpus: EventCorpus) -> PCMatrix:
    """Tally events into a p-c matrix: cell (i, j) is the weight of all
    events published in year i and cited in year j."""
    n = corpus.n
    rows = [[0.0] * (n - t) for t in range(n)]
    for ev in corpus.events:
        t = ev.published_year - corpus.first_year
        rows[t][ev.citing_year - ev.published_year] += ev.weight
    return PCMatrix(
        first_year=corpus.first_year,
        pubs=corpus.pub_weights,
        cites=tuple(tuple(r) for r in rows),
        label=corpus.label,
    )


def corpus_from_matrix(m: PCMatrix) -> EventCorpus:
    """Re-express a matrix as one weighted event per non-zero cell."""
    events = []
    for t, row in enumerate(m.cites):
        for o, value in enumerate(row):
            if value > 0:
                year = m.first_year + t
                events.append(CitationEvent(year, year + o, weight=value))
    return EventCorpus(
        first_year=m.first_year,
        pub_weights=m.pubs,
        events=tuple(events),
        label=m.label,
    )


def brute_force_rhythm(
    corpus_b: EventCorpus, corpus_a: EventCorpus | None = None
) -> RhythmSequence:
    """R-sequence computed by literal nested loops over events.

    Internal mode when ``corpus_a`` is omitted; otherwise the per-age
    averages come from ``corpus_a``. Deliberately naive and independent of
    the matrix-based implementation.
    """
    n = corpus_b.n
    first = corpus_b.first_year
    expectation = corpus_b if corpus_a is None else corpus_a
    if corpus_a is not None and (
        corpus_a.first_year != first or corpus_a.n != n
    ):
        raise AlignmentError(
            f"corpora cover different windows: {first}+{n} vs "
            f"{corpus_a.first_year}+{corpus_a.n}"
        )

    observed = [0.0] * n
    for ev in corpus_b.events:
        observed[ev.published_year - first] += ev.weight

    per_age_average = []
    for k in range(1, n + 1):
        cited_weight = 0.0
        for ev in expectation.events:
            if ev.citing_year - ev.published_year == k - 1:
                cited_weight += ev.weight
        paper_weight = 0.0
        for t in range(n - k + 1):
            paper_weight += expectation.pub_weights[t]
        if paper_weight == 0:
            if cited_weight > 0:
                raise DataConsistencyError(
                    f"age {k}: {cited_weight} citations but no publications"
                )
            per_age_average.append(0.0)
        else:
            per_age_average.append(cited_weight / paper_weight)

    points = []
    undefined = []
    for t in range(n):
        cumulative = 0.0
        for k in range(n - t):
            cumulative += per_age_average[k]
        expected = corpus_b.pub_weights[t] * cumulative
        ratio = observed[t] / expected if expected > 0 else None
        year = first + t
        if ratio is None:
            undefined.append(year)
        points.append(
            RhythmPoint(year=year, observed=observed[t], expected=expected, ratio=ratio)
        )

    total_observed = 0.0
    total_expected = 0.0
    for p in points:
        total_observed += p.observed
        total_expected += p.expected
    i1 = total_observed / total_expected if total_expected > 0 else None
    i2 = None
    if not undefined:
        acc = 0.0
        for p in points:
            acc += p.ratio
        i2 = acc / n

    return RhythmSequence(
        points=tuple(points),
        kind=INTERNAL if corpus_a is None else CROSS,
        observed_label=corpus_b.label,
        expectation_label=expectation.label,
        i1=i1,
        i2=i2,
        undefined_years=tuple(undefined),
    )


def default_age_curve(
    n: int, peak_age: float = 2.0, per_paper_total: float = 5.0, spread: float = 0.8
) -> tuple[float, ...]:
    """Rise-and-decay expected citations per paper by age (age 0 is the
    publication year), normalized to sum to ``per_paper_total``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    raw = [
        math.exp(-((math.log((a + 1) / peak_age)) ** 2) / (2 * spread**2)) / (a + 1)
        for a in range(n)
    ]
    scale = per_paper_total / sum(raw)
    return tuple(r * scale for r in raw)


@dataclass(frozen=True)
class CorpusSpec:
    """Shape of a synthetic corpus: window length, publications per year
    (inclusive integer range), expected citations per paper by age, and an
    optional share of "citation magnet" papers whose rates are inflated by
    a heavy-tailed factor."""

    n: int
    pubs_range: tuple[int, int]
    age_curve: tuple[float, ...]
    first_year: int = 2000
    magnet_share: float = 0.0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        lo, hi = self.pubs_range
        if lo < 0 or hi < lo:
            raise ValueError(f"degenerate publications range {self.pubs_range}")
        if len(self.age_curve) < self.n:
            raise ValueError(
                f"age curve has {len(self.age_curve)} entries, needs >= {self.n}"
            )
        if any(v < 0 for v in self.age_curve):
            raise ValueError("age curve must be non-negative")
        if not 0.0 <= self.magnet_share <= 1.0:
            raise ValueError("magnet_share must be within [0, 1]")


def generate(seed: int, spec: CorpusSpec) -> EventCorpus:
    """Deterministic synthetic corpus: same seed, same corpus.

    Each paper draws a Poisson citation count per remaining age from the
    curve; magnet papers multiply their rates by 10x a Pareto factor, which
    reproduces how a single extremely highly cited paper can bend a whole
    R-sequence.
    """
    rng = np.random.default_rng(seed)
    lo, hi = spec.pubs_range
    pub_counts = rng.integers(lo, hi + 1, size=spec.n)
    events = []
    for t in range(spec.n):
        year = spec.first_year + t
        rates = np.asarray(spec.age_curve[: spec.n - t])
        for _ in range(int(pub_counts[t])):
            factor = 1.0
            if spec.magnet_share > 0 and rng.random() < spec.magnet_share:
                factor = 10.0 * (1.0 + rng.pareto(1.5))
            counts = rng.poisson(rates * factor)
            for age, count in enumerate(counts):
                if count > 0:
                    events.append(
                        CitationEvent(year, year + age, weight=float(count))
                    )
    return EventCorpus(
        first_year=spec.first_year,
        pub_weights=tuple(float(c) for c in pub_counts),
        events=tuple(events),
        label=f"synthetic(seed={seed})",
    )


def _rel_diff(a: float | None, b: float | None) -> float:
    if a is None and b is None:
        return 0.0
    if a is None or b is None:
        return math.inf
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def max_relative_difference(a: RhythmSequence, b: RhythmSequence) -> float:
    """Worst relative disagreement between two sequences over every defined
    ratio plus both summary indicators; infinite when one side defines a
    value the other does not."""
    if a.years != b.years:
        return math.inf
    worst = max(_rel_diff(a.i1, b.i1), _rel_diff(a.i2, b.i2))
    for pa, pb in zip(a.points, b.points):
        worst = max(worst, _rel_diff(pa.ratio, pb.ratio))
    return worst


def parse_events_csv(text: str, first_year: int, pub_weights: tuple[float, ...]) -> EventCorpus:
    """Read an event list (``published_year,citing_year[,weight]``) into a
    corpus over the given window."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or header[:2] != ["published_year", "citing_year"]:
        raise DomainError('event CSV header must be "published_year,citing_year[,weight]"')
    events = []
    for row in reader:
        if not row:
            continue
        weight = float(row[2]) if len(row) > 2 and row[2] != "" else 1.0
        events.append(CitationEvent(int(row[0]), int(row[1]), weight=weight))
    return EventCorpus(
        first_year=first_year, pub_weights=pub_weights, events=tuple(events)
    )
