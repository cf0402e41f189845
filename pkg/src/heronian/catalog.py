"""Persisted index of Heronian triangles, keyed by perimeter and by area.

The on-disk format is JSON Lines: one header object on the first line,
then one record object per line, records sorted by (perimeter, a, b, c).
Building twice with the same bound produces identical bytes except for
the header timestamp, so catalogs diff cleanly.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

from heronian.core import Triangle, classify, heron_area
from heronian.enumeration import triangles_with_perimeter

__all__ = [
    "Catalog",
    "CatalogFormatError",
    "CatalogRecord",
    "CatalogVersionError",
    "FORMAT_VERSION",
    "build",
    "load",
    "save",
]

FORMAT_VERSION = 1

_RECORD_FIELDS = ("a", "b", "c", "perimeter", "area", "classification")


class CatalogFormatError(ValueError):
    """Raised for malformed catalog files; the message names the line."""


class CatalogVersionError(CatalogFormatError):
    """Raised when a catalog file's format version is unsupported."""


@dataclass(frozen=True, order=True)
class CatalogRecord:
    a: int
    b: int
    c: int
    perimeter: int
    area: int
    classification: str

    @classmethod
    def from_triangle(cls, t: Triangle) -> CatalogRecord:
        area = heron_area(t)
        if area is None:
            raise ValueError(f"{t} is not Heronian")
        return cls(t.a, t.b, t.c, t.perimeter, area, classify(t).value)

    def triangle(self) -> Triangle:
        return Triangle(self.a, self.b, self.c)


@dataclass
class Catalog:
    """Immutable-by-convention index over a perimeter-bounded record set.

    Equality compares the bound and the records; the build timestamp is
    informational only and excluded.
    """

    p_max: int
    records: tuple[CatalogRecord, ...]
    built_at: str = field(compare=False, default="")
    _by_perimeter: dict = field(compare=False, repr=False, default_factory=dict)
    _by_area: dict = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        for r in self.records:
            self._by_perimeter.setdefault(r.perimeter, []).append(r.triangle())
            self._by_area.setdefault(r.area, []).append(r.triangle())

    def __len__(self) -> int:
        return len(self.records)

    def query_by_perimeter(self, p: int) -> tuple[list[Triangle], bool]:
        """Triangles with perimeter p, plus a completeness flag.

        The answer is complete exactly when p is inside the built range.
        """
        return sorted(self._by_perimeter.get(p, [])), p <= self.p_max

    def query_by_area(self, area: int) -> tuple[list[Triangle], bool]:
        """Triangles with the given area, plus a completeness flag.

        Every Heronian triangle of a given area has perimeter at most
        2*area^2, so the answer is guaranteed complete only when that
        bound fits inside the built range; otherwise it is best-effort
        and the flag is False rather than silently truncating.
        """
        return sorted(self._by_area.get(area, [])), 2 * area * area <= self.p_max


def _records_for_range(bounds: tuple[int, int]) -> list[CatalogRecord]:
    """Records for even perimeters in [start, stop); a parallel work unit."""
    start, stop = bounds
    out = []
    for p in range(start + start % 2, stop, 2):
        out.extend(CatalogRecord.from_triangle(t) for t in triangles_with_perimeter(p))
    return out


def build(p_max: int, workers: int = 1) -> Catalog:
    """Index every Heronian triangle with perimeter <= p_max.

    With workers > 1 the perimeter range is split into chunks processed
    by a process pool; the final sort makes the result independent of
    worker scheduling.
    """
    if p_max < 1:
        raise ValueError("p_max must be positive")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if workers == 1:
        records = _records_for_range((1, p_max + 1))
    else:
        step = max(2, (p_max // workers + 1) & ~1)
        chunks = [(lo, min(lo + step, p_max + 1)) for lo in range(1, p_max + 1, step)]
        records = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_records_for_range, chunks):
                records.extend(part)
    records.sort(key=lambda r: (r.perimeter, r.a, r.b, r.c))
    built_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return Catalog(p_max, tuple(records), built_at)


def save(cat: Catalog, path) -> None:
    """Write a catalog as JSON Lines (header line, then one record per line)."""
    header = {
        "format_version": FORMAT_VERSION,
        "p_max": cat.p_max,
        "count": len(cat.records),
        "built_at": cat.built_at,
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(header, separators=(",", ":")) + "\n")
        for r in cat.records:
            row = {name: getattr(r, name) for name in _RECORD_FIELDS}
            fh.write(json.dumps(row, separators=(",", ":")) + "\n")


def _parse_line(line: str, lineno: int, expected_keys: tuple[str, ...]) -> dict:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CatalogFormatError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
    if not isinstance(obj, dict) or tuple(obj.keys()) != expected_keys:
        raise CatalogFormatError(
            f"line {lineno}: expected keys {list(expected_keys)}, got "
            f"{list(obj) if isinstance(obj, dict) else type(obj).__name__}"
        )
    return obj


def load(path) -> Catalog:
    """Read a catalog written by save, validating structure line by line."""
    with open(path, "r", encoding="utf-8") as fh:
        header_line = fh.readline()
        if not header_line.strip():
            raise CatalogFormatError("line 1: missing header")
        header = _parse_line(
            header_line, 1, ("format_version", "p_max", "count", "built_at")
        )
        if header["format_version"] != FORMAT_VERSION:
            raise CatalogVersionError(
                f"unsupported format version {header['format_version']!r}, "
                f"expected {FORMAT_VERSION}"
            )
        records = []
        for lineno, line in enumerate(fh, start=2):
            if not line.strip():
                raise CatalogFormatError(f"line {lineno}: blank record line")
            row = _parse_line(line, lineno, _RECORD_FIELDS)
            try:
                record = CatalogRecord(**row)
            except (TypeError, ValueError) as exc:
                raise CatalogFormatError(f"line {lineno}: bad record ({exc})") from exc
            if record.perimeter != record.a + record.b + record.c:
                raise CatalogFormatError(
                    f"line {lineno}: perimeter {record.perimeter} does not match sides"
                )
            records.append(record)
    if len(records) != header["count"]:
        raise CatalogFormatError(
            f"line {len(records) + 1}: header count {header['count']} does not "
            f"match {len(records)} record lines (truncated file?)"
        )
    return Catalog(header["p_max"], tuple(records), header["built_at"])
