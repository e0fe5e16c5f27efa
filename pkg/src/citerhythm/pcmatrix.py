"""Publication-citation matrices and their elementary derived quantities.

A p-c matrix covers n consecutive years. Row i holds the publication count
of year i and, for every citing year j >= i inside the window, the citations
those publications received in year j. Counts are non-negative reals so
fractional counting and additive scores (e.g. altmetrics) work unchanged;
integer data is the common special case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .errors import (
    AlignmentError,
    DataConsistencyError,
    DomainError,
    SubsetError,
    WindowError,
    YearOutOfRangeError,
)

__all__ = [
    "PCMatrix",
    "CkProfile",
    "observed_citations",
    "observed_all",
    "ck_profile",
    "add",
    "subtract",
]


def _check_count(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{what} must be finite, got {value!r}")
    if value < 0:
        raise DomainError(f"{what} must be non-negative, got {value!r}")
    return value


@dataclass(frozen=True)
class PCMatrix:
    """Upper-triangular publication-citation table for one actor.

    ``pubs[t]`` is the publication count of year ``first_year + t``;
    ``cites[t][a]`` holds the citations received ``a`` years after
    publication by that row's publications (so row ``t`` stores ``n - t``
    cells, citing years ``first_year + t .. first_year + n - 1``).
    Instances are immutable and safe to share between threads.
    """

    first_year: int
    pubs: tuple[float, ...]
    cites: tuple[tuple[float, ...], ...]
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        pubs = tuple(_check_count(p, "publication count") for p in self.pubs)
        if not pubs:
            raise ValueError("matrix must cover at least one year")
        n = len(pubs)
        if len(self.cites) != n:
            raise ValueError(f"expected {n} citation rows, got {len(self.cites)}")
        rows = []
        for t, row in enumerate(self.cites):
            if len(row) != n - t:
                raise ValueError(
                    f"citation row {t} must have {n - t} cells, got {len(row)}"
                )
            rows.append(tuple(_check_count(c, "citation count") for c in row))
        object.__setattr__(self, "pubs", pubs)
        object.__setattr__(self, "cites", tuple(rows))

    @classmethod
    def zero(cls, first_year: int, n: int, label: str = "") -> "PCMatrix":
        """All-zero matrix over ``n`` years starting at ``first_year``."""
        if n < 1:
            raise ValueError("n must be >= 1")
        return cls(
            first_year=first_year,
            pubs=(0.0,) * n,
            cites=tuple((0.0,) * (n - t) for t in range(n)),
            label=label,
        )

    @property
    def n(self) -> int:
        return len(self.pubs)

    @property
    def last_year(self) -> int:
        return self.first_year + self.n - 1

    @property
    def years(self) -> tuple[int, ...]:
        return tuple(range(self.first_year, self.first_year + self.n))

    def _offset(self, year: int) -> int:
        if not self.first_year <= year <= self.last_year:
            raise YearOutOfRangeError(
                f"year {year} outside window {self.first_year}-{self.last_year}"
            )
        return year - self.first_year

    def pub_count(self, year: int) -> float:
        return self.pubs[self._offset(year)]

    def cite_count(self, pub_year: int, citing_year: int) -> float:
        """Citations received in ``citing_year`` by ``pub_year`` publications."""
        i = self._offset(pub_year)
        j = self._offset(citing_year)
        if j < i:
            raise YearOutOfRangeError(
                f"citing year {citing_year} precedes publication year {pub_year}"
            )
        return self.cites[i][j - i]

    @property
    def total_pubs(self) -> float:
        return sum(self.pubs)

    @property
    def total_cites(self) -> float:
        return sum(sum(row) for row in self.cites)

    def window(self, start_year: int, length: int) -> "PCMatrix":
        """Square sub-matrix covering publication and citing years
        ``start_year .. start_year + length - 1``."""
        if length < 1 or length > self.n:
            raise WindowError(f"window length {length} outside 1..{self.n}")
        s = self._offset(start_year)
        if s + length > self.n:
            raise WindowError(
                f"window {start_year}+{length} overruns year {self.last_year}"
            )
        return replace(
            self,
            first_year=start_year,
            pubs=self.pubs[s : s + length],
            cites=tuple(
                self.cites[s + t][: length - t] for t in range(length)
            ),
            label=self.label,
        )

    def relabeled(self, label: str) -> "PCMatrix":
        return replace(self, label=label)


@dataclass(frozen=True)
class CkProfile:
    """Average citations per paper in the k-th year after publication
    (k = 1 is the publication year itself), one value per year of the
    source matrix's window."""

    values: tuple[float, ...]
    source_label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "values", tuple(_check_count(v, "profile value") for v in self.values)
        )

    @property
    def n(self) -> int:
        return len(self.values)

    def cumulative(self, count: int) -> float:
        """Sum of the first ``count`` per-age averages."""
        return sum(self.values[:count])


def observed_citations(m: PCMatrix, year: int) -> float:
    """Total citations received within the window by ``year``'s publications
    (the row sum of that publication year)."""
    return sum(m.cites[m._offset(year)])


def observed_all(m: PCMatrix) -> tuple[float, ...]:
    """Row sums for every publication year, oldest first."""
    return tuple(sum(row) for row in m.cites)


def ck_profile(m: PCMatrix) -> CkProfile:
    """Per-age citation averages of a matrix.

    For age k (1-based), only the first n-k+1 publication years have a k-th
    year inside the window, so the average runs over exactly those years:
    the k-th diagonal's sum divided by those years' publication total.
    A span with no publications and no citations yields 0; citations without
    publications are rejected as inconsistent data.
    """
    n = m.n
    values = []
    for k in range(1, n + 1):
        numerator = sum(m.cites[t][k - 1] for t in range(n - k + 1))
        denominator = sum(m.pubs[: n - k + 1])
        if denominator == 0:
            if numerator > 0:
                raise DataConsistencyError(
                    f"{m.label or 'matrix'}: age {k} has {numerator} citations "
                    "but no publications in the contributing years"
                )
            values.append(0.0)
        else:
            values.append(numerator / denominator)
    return CkProfile(values=tuple(values), source_label=m.label)


def _check_aligned(a: PCMatrix, b: PCMatrix) -> None:
    if a.first_year != b.first_year or a.n != b.n:
        raise AlignmentError(
            f"windows differ: {a.label or 'a'} covers {a.first_year}-{a.last_year}, "
            f"{b.label or 'b'} covers {b.first_year}-{b.last_year}"
        )


def add(a: PCMatrix, b: PCMatrix) -> PCMatrix:
    """Elementwise sum of two matrices over the same window."""
    _check_aligned(a, b)
    return PCMatrix(
        first_year=a.first_year,
        pubs=tuple(x + y for x, y in zip(a.pubs, b.pubs)),
        cites=tuple(
            tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.cites, b.cites)
        ),
        label=f"{a.label}+{b.label}" if a.label and b.label else (a.label or b.label),
    )


def subtract(a: PCMatrix, b: PCMatrix) -> PCMatrix:
    """Elementwise difference ``a - b``; ``b`` must be contained in ``a``."""
    _check_aligned(a, b)
    pubs = []
    for t, (x, y) in enumerate(zip(a.pubs, b.pubs)):
        if y > x:
            raise SubsetError(
                f"publications of year {a.first_year + t}: {y} > {x}; "
                f"{b.label or 'subtrahend'} is not contained in {a.label or 'minuend'}"
            )
        pubs.append(x - y)
    cites = []
    for t, (ra, rb) in enumerate(zip(a.cites, b.cites)):
        row = []
        for o, (x, y) in enumerate(zip(ra, rb)):
            if y > x:
                raise SubsetError(
                    f"citations ({a.first_year + t}, {a.first_year + t + o}): "
                    f"{y} > {x}; {b.label or 'subtrahend'} is not contained in "
                    f"{a.label or 'minuend'}"
                )
            row.append(x - y)
        cites.append(tuple(row))
    return PCMatrix(
        first_year=a.first_year,
        pubs=tuple(pubs),
        cites=tuple(cites),
        label=f"{a.label}-{b.label}" if a.label and b.label else a.label,
    )
