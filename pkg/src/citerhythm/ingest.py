"""Matrix CSV and collective-manifest I/O, plus the bundled fixture corpus.

Matrix CSV layout mirrors the way p-c tables are usually printed: one data
row per publication year (ascending), citing years as columns, and blank
cells below the diagonal. A blank below the diagonal means "structurally
impossible"; a zero on or above it must be written out. The bundled
fixtures cover the journal Scientometrics (SCIM) 2015-2024, split by
corresponding-author country.
"""

from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .collective import Collective, validate_collective
from .errors import DomainError, LayoutError, ManifestError, MatrixParseError
from .pcmatrix import PCMatrix

__all__ = [
    "MatrixFile",
    "ManifestActor",
    "CollectiveManifest",
    "parse_matrix",
    "write_matrix",
    "read_matrix",
    "read_matrix_file",
    "parse_manifest",
    "build_collective",
    "load_manifest",
    "fixture_path",
]


@dataclass(frozen=True)
class MatrixFile:
    """A parsed matrix together with where it came from and a checksum of
    the exact bytes that were read."""

    path: Path
    matrix: PCMatrix
    sha256: str


@dataclass(frozen=True)
class ManifestActor:
    actor_id: str
    label: str
    path: Path


@dataclass(frozen=True)
class CollectiveManifest:
    label: str
    total_path: Path | None
    actors: tuple[ManifestActor, ...]
    assert_partition: bool = False


def _cell_value(cell: str, line: int, column: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise MatrixParseError(f"not a number: {cell!r}", line, column) from None
    if value < 0:
        raise DomainError(f"line {line}, column {column}: negative count {cell!r}")
    return value


def parse_matrix(text: str, label: str = "") -> PCMatrix:
    """Parse a matrix CSV document into a :class:`PCMatrix`."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise LayoutError("empty document", 1)
    header = rows[0]
    if len(header) < 3 or header[0] != "year" or header[1] != "pubs":
        raise LayoutError('header must be "year,pubs,<first citing year>,..."', 1)
    try:
        citing_years = [int(y) for y in header[2:]]
    except ValueError:
        raise LayoutError("citing-year columns must be integers", 1) from None
    n = len(citing_years)
    if citing_years != list(range(citing_years[0], citing_years[0] + n)):
        raise LayoutError("citing years must be consecutive and ascending", 1)

    data = rows[1:]
    if len(data) != n:
        raise LayoutError(f"expected {n} data rows, found {len(data)}", len(rows))

    pubs: list[float] = []
    cites: list[tuple[float, ...]] = []
    for t, row in enumerate(data):
        line = t + 2
        if len(row) != n + 2:
            raise LayoutError(f"expected {n + 2} cells, found {len(row)}", line)
        try:
            year = int(row[0])
        except ValueError:
            raise MatrixParseError(f"not a year: {row[0]!r}", line, 1) from None
        if year != citing_years[t]:
            raise LayoutError(
                f"publication year {year} out of order, expected {citing_years[t]}",
                line,
                1,
            )
        pubs.append(_cell_value(row[1], line, 2))
        cells = []
        for j, cell in enumerate(row[2:]):
            column = j + 3
            if j < t:
                if cell != "":
                    raise LayoutError(
                        "cell below the diagonal must be blank", line, column
                    )
            else:
                cells.append(_cell_value(cell, line, column))
        cites.append(tuple(cells))

    return PCMatrix(
        first_year=citing_years[0],
        pubs=tuple(pubs),
        cites=tuple(cites),
        label=label,
    )


def _format_count(value: float) -> str:
    # Integers without a decimal point; everything else as the shortest
    # decimal that round-trips.
    return str(int(value)) if value == int(value) else repr(value)


def write_matrix(m: PCMatrix) -> str:
    """Render a matrix as canonical CSV (LF endings, blank cells below the
    diagonal); parsing the result reproduces the matrix exactly."""
    lines = ["year,pubs," + ",".join(str(y) for y in m.years)]
    for t, year in enumerate(m.years):
        cells = [str(year), _format_count(m.pubs[t])]
        cells.extend([""] * t)
        cells.extend(_format_count(v) for v in m.cites[t])
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def read_matrix_file(path: str | Path, label: str | None = None) -> MatrixFile:
    """Read and parse a matrix CSV file; the label defaults to the file stem."""
    path = Path(path)
    raw = path.read_bytes()
    matrix = parse_matrix(raw.decode("utf-8"), label=label or path.stem)
    return MatrixFile(path=path, matrix=matrix, sha256=hashlib.sha256(raw).hexdigest())


_BOOL_VALUES = {"true": True, "false": False}


def parse_manifest(path: str | Path) -> CollectiveManifest:
    """Parse a collective manifest.

    The format is line-based: a single ``[collective]`` section (keys
    ``label``, optional ``total``, optional ``assert_partition``) followed
    by one ``[actor]`` section per constituent (keys ``id``, ``label``,
    ``path``). ``#`` and ``;`` start comments; matrix paths are resolved
    relative to the manifest file.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc}") from exc
    base = path.parent

    collective: dict[str, str] | None = None
    actors: list[dict[str, str]] = []
    current: dict[str, str] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith(";"):
            continue
        if line == "[collective]":
            if collective is not None:
                raise ManifestError(f"line {lineno}: duplicate [collective] section")
            collective = {}
            current = collective
        elif line == "[actor]":
            actors.append({})
            current = actors[-1]
        elif line.startswith("["):
            raise ManifestError(f"line {lineno}: unknown section {line}")
        else:
            if current is None:
                raise ManifestError(f"line {lineno}: key outside any section")
            key, sep, value = line.partition("=")
            if not sep:
                raise ManifestError(f"line {lineno}: expected key = value, got {line!r}")
            current[key.strip()] = value.strip()

    if collective is None:
        raise ManifestError("manifest has no [collective] section")
    if "label" not in collective:
        raise ManifestError("[collective] section needs a label")
    assert_partition = False
    if "assert_partition" in collective:
        flag = collective["assert_partition"].lower()
        if flag not in _BOOL_VALUES:
            raise ManifestError(f"assert_partition must be true or false, got {flag!r}")
        assert_partition = _BOOL_VALUES[flag]
    total_path = base / collective["total"] if "total" in collective else None

    parsed_actors: list[ManifestActor] = []
    seen: set[str] = set()
    for idx, actor in enumerate(actors, start=1):
        missing = [k for k in ("id", "label", "path") if k not in actor]
        if missing:
            raise ManifestError(f"actor #{idx} is missing {', '.join(missing)}")
        if actor["id"] in seen:
            raise ManifestError(f"duplicate actor id {actor['id']!r}")
        seen.add(actor["id"])
        parsed_actors.append(
            ManifestActor(actor_id=actor["id"], label=actor["label"], path=base / actor["path"])
        )
    if not parsed_actors:
        raise ManifestError("manifest names no actors")

    return CollectiveManifest(
        label=collective["label"],
        total_path=total_path,
        actors=tuple(parsed_actors),
        assert_partition=assert_partition,
    )


def _read_referenced(path: Path, label: str) -> PCMatrix:
    try:
        return read_matrix_file(path, label=label).matrix
    except FileNotFoundError:
        raise ManifestError(f"referenced matrix file not found: {path}") from None
    except OSError as exc:
        raise ManifestError(f"cannot read {path}: {exc}") from exc


def build_collective(manifest: CollectiveManifest) -> Collective:
    """Load every referenced matrix and assemble the collective (without
    running validation)."""
    constituents = {
        a.actor_id: _read_referenced(a.path, a.label) for a in manifest.actors
    }
    total = None
    if manifest.total_path is not None:
        total = _read_referenced(manifest.total_path, manifest.label)
    return Collective.build(manifest.label, constituents, total=total)


def load_manifest(path: str | Path) -> Collective:
    """Parse a manifest, load its matrices, validate, and return the
    collective. Error-severity findings raise; warnings do not."""
    manifest = parse_manifest(path)
    c = build_collective(manifest)
    report = validate_collective(c, assert_partition=manifest.assert_partition)
    if not report.ok:
        problems = "; ".join(f.message for f in report.errors)
        raise ManifestError(f"manifest {path} failed validation: {problems}")
    return c


def read_matrix(path: str | Path, label: str | None = None) -> PCMatrix:
    """Like :func:`read_matrix_file`, for callers that only need the matrix."""
    return read_matrix_file(path, label=label).matrix


def fixture_path(name: str) -> Path:
    """Path of a bundled data file (matrix CSVs, scim.manifest, golden
    values for the SCIM corpus)."""
    p = Path(str(resources.files(__package__) / "fixtures" / name))
    if not p.is_file():
        raise FileNotFoundError(f"no bundled fixture named {name!r}")
    return p
