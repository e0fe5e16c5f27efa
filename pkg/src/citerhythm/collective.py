"""Collectives, complements, and actor comparisons.

A collective is a total p-c matrix plus named, disjoint constituent
matrices. Comparisons never judge an actor against data that includes the
actor itself: the expectation source is always the complement (total minus
the compared actors), so a one-vs-rest and a pairwise comparison use
different baselines by construction.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import AlignmentError, UnknownActorError
from .pcmatrix import PCMatrix, add, subtract
from .rhythm import RhythmSequence, cross_rhythm

__all__ = [
    "Collective",
    "ComparisonResult",
    "Finding",
    "ValidationReport",
    "complement",
    "actor_vs_collective",
    "actor_vs_actor",
    "validate_collective",
    "DEFAULT_TIE_TOLERANCE",
    "DEFAULT_DOMINANCE_SHARE",
    "DEFAULT_MIN_COMPLEMENT_PUBS",
]

DEFAULT_TIE_TOLERANCE = 1e-9
DEFAULT_DOMINANCE_SHARE = 0.80
DEFAULT_MIN_COMPLEMENT_PUBS = 20.0


@dataclass(frozen=True)
class Collective:
    """A named total matrix with named constituent actors.

    Constituents need not cover the whole total: actors without a named
    matrix simply stay inside every complement. Use :func:`validate_collective`
    for subset/partition/dominance diagnostics. Immutable once built.
    """

    label: str
    total: PCMatrix
    constituents: dict[str, PCMatrix]

    def __post_init__(self) -> None:
        for actor_id, m in self.constituents.items():
            if m.first_year != self.total.first_year or m.n != self.total.n:
                raise AlignmentError(
                    f"constituent {actor_id!r} covers {m.first_year}-{m.last_year}, "
                    f"total covers {self.total.first_year}-{self.total.last_year}"
                )

    @classmethod
    def build(
        cls,
        label: str,
        constituents: dict[str, PCMatrix],
        total: PCMatrix | None = None,
    ) -> "Collective":
        """Build a collective, reconstructing the total as the sum of the
        constituents when no explicit total is given."""
        if not constituents:
            raise ValueError("a collective needs at least one constituent")
        if total is None:
            matrices = list(constituents.values())
            acc = matrices[0]
            for m in matrices[1:]:
                acc = add(acc, m)
            total = acc.relabeled(label)
        return cls(label=label, total=total, constituents=dict(constituents))

    @property
    def actor_ids(self) -> tuple[str, ...]:
        return tuple(self.constituents)

    def actor(self, actor_id: str) -> PCMatrix:
        try:
            return self.constituents[actor_id]
        except KeyError:
            known = ", ".join(self.constituents) or "none"
            raise UnknownActorError(
                f"unknown actor {actor_id!r}; known actors: {known}"
            ) from None


@dataclass(frozen=True)
class ComparisonResult:
    """Two external rhythms computed against one shared complement, plus the
    per-year winner (None marks a tie or an undefined year)."""

    baseline_label: str
    sequences: dict[str, RhythmSequence]
    per_year_winner: tuple[str | None, ...]

    @property
    def years(self) -> tuple[int, ...]:
        return next(iter(self.sequences.values())).years


@dataclass(frozen=True)
class Finding:
    severity: str  # "error" | "warning" | "info"
    code: str  # "alignment" | "subset" | "partition" | "dominance" | "smallness"
    message: str


@dataclass(frozen=True)
class ValidationReport:
    collective_label: str
    first_year: int
    n: int
    constituent_count: int
    findings: tuple[Finding, ...] = field(default=())

    @property
    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == "error")

    @property
    def warnings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == "warning")

    @property
    def ok(self) -> bool:
        return not self.errors


def complement(c: Collective, actor_ids: Iterable[str]) -> PCMatrix:
    """Total minus the named constituents: the rest of the collective."""
    ids = sorted(set(actor_ids))
    if not ids:
        raise ValueError("actor_ids must name at least one actor")
    removed = None
    for actor_id in ids:
        m = c.actor(actor_id)
        removed = m if removed is None else add(removed, m)
    rest = subtract(c.total, removed)
    return rest.relabeled(f"{c.label} \\ {{{', '.join(ids)}}}")


def actor_vs_collective(c: Collective, actor_id: str) -> RhythmSequence:
    """External rhythm of one actor against the rest of its collective.

    A yearly ratio above 1 means the actor outperformed the collective's
    average citation level that year; below 1, it lagged it.
    """
    return cross_rhythm(c.actor(actor_id), complement(c, {actor_id}))


def actor_vs_actor(
    c: Collective,
    u: str,
    v: str,
    tie_tolerance: float = DEFAULT_TIE_TOLERANCE,
) -> ComparisonResult:
    """External rhythms of two actors against the shared complement with
    both actors removed, so neither is compared partly to itself and both
    are judged against the same baseline."""
    if u == v:
        raise ValueError(f"cannot compare actor {u!r} with itself")
    baseline = complement(c, {u, v})
    seq_u = cross_rhythm(c.actor(u), baseline)
    seq_v = cross_rhythm(c.actor(v), baseline)
    winners: list[str | None] = []
    for pu, pv in zip(seq_u.points, seq_v.points):
        if pu.ratio is None or pv.ratio is None:
            winners.append(None)
        elif abs(pu.ratio - pv.ratio) <= tie_tolerance:
            winners.append(None)
        else:
            winners.append(u if pu.ratio > pv.ratio else v)
    return ComparisonResult(
        baseline_label=baseline.label,
        sequences={u: seq_u, v: seq_v},
        per_year_winner=tuple(winners),
    )


def _first_subset_violation(total: PCMatrix, part: PCMatrix) -> str | None:
    for t, (x, y) in enumerate(zip(total.pubs, part.pubs)):
        if y > x:
            return f"publications of {total.first_year + t}: {y} > {x}"
    for t, (ra, rb) in enumerate(zip(total.cites, part.cites)):
        for o, (x, y) in enumerate(zip(ra, rb)):
            if y > x:
                i = total.first_year + t
                return f"citations ({i}, {i + o}): {y} > {x}"
    return None


def validate_collective(
    c: Collective,
    assert_partition: bool = False,
    *,
    dominance_share: float = DEFAULT_DOMINANCE_SHARE,
    min_complement_pubs: float = DEFAULT_MIN_COMPLEMENT_PUBS,
) -> ValidationReport:
    """Diagnostic report for a collective.

    Errors: a constituent exceeding the total somewhere, and (with
    ``assert_partition``) any residual between the total and the constituent
    sum. Warnings: a constituent so dominant or a complement so small that
    comparing against the rest is meaningless. Warnings never fail a load.
    """
    findings: list[Finding] = []
    total_pubs = c.total.total_pubs

    findings.append(
        Finding(
            "info",
            "alignment",
            f"{len(c.constituents)} constituents aligned on window "
            f"{c.total.first_year}-{c.total.last_year}",
        )
    )

    for actor_id, m in c.constituents.items():
        violation = _first_subset_violation(c.total, m)
        if violation is not None:
            findings.append(
                Finding(
                    "error",
                    "subset",
                    f"constituent {actor_id!r} exceeds the total: {violation}",
                )
            )

    if assert_partition:
        mismatch = None
        for t in range(c.total.n):
            part_sum = sum(m.pubs[t] for m in c.constituents.values())
            if part_sum != c.total.pubs[t]:
                mismatch = f"publications of {c.total.first_year + t}: " \
                           f"constituents sum to {part_sum}, total has {c.total.pubs[t]}"
                break
            for o in range(c.total.n - t):
                cell_sum = sum(m.cites[t][o] for m in c.constituents.values())
                if cell_sum != c.total.cites[t][o]:
                    i = c.total.first_year + t
                    mismatch = f"citations ({i}, {i + o}): constituents sum to " \
                               f"{cell_sum}, total has {c.total.cites[t][o]}"
                    break
            if mismatch:
                break
        if mismatch:
            findings.append(
                Finding("error", "partition", f"partition residual: {mismatch}")
            )

    for actor_id, m in c.constituents.items():
        actor_pubs = m.total_pubs
        share = actor_pubs / total_pubs if total_pubs > 0 else 1.0
        if share > dominance_share:
            findings.append(
                Finding(
                    "warning",
                    "dominance",
                    f"constituent {actor_id!r} holds {share:.0%} of all publications; "
                    "comparisons against the rest are not meaningful",
                )
            )
        rest_pubs = total_pubs - actor_pubs
        if rest_pubs < min_complement_pubs:
            findings.append(
                Finding(
                    "warning",
                    "smallness",
                    f"complement of {actor_id!r} has only {rest_pubs:g} publications; "
                    "comparisons against the rest are not meaningful",
                )
            )

    return ValidationReport(
        collective_label=c.label,
        first_year=c.total.first_year,
        n=c.total.n,
        constituent_count=len(c.constituents),
        findings=tuple(findings),
    )
