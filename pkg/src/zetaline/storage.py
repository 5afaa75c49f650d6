"""Reading and writing zero tables, and comparing two tables.

Two formats are supported. Plain text holds one decimal ordinate per line,
with '#' comment lines and blank lines ignored. The cached binary format is

    b"ZTBL"                       magic
    u32  format_version (1)
    f64  range_lo
    f64  range_hi
    u64  count
    u32  label length, then the UTF-8 label
    count x f64                   ordinates
    u64  FNV-1a hash of every byte above

all little-endian. The checksum covers the header as well as the ordinates,
so a corrupted count or range is caught just like a corrupted ordinate.
"""

from __future__ import annotations

import hashlib
import logging
import os
import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import DEFAULT_CONFIG, EvalConfig
from .errors import ChecksumMismatch, NonMonotoneInput, ParseError
from .zeros import ZeroTable, default_grid_step, first_index_estimate, scan_zeros

log = logging.getLogger(__name__)

MAGIC = b"ZTBL"
FORMAT_VERSION = 1
FORMATS = ("plain_text", "cached")
CACHE_ENV = "ZETALINE_CACHE_DIR"
_HEAD = struct.Struct("<4sIddQI")
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class ZeroFileHeader:
    format_version: int
    range_lo: float
    range_hi: float
    count: int
    source_label: str
    checksum: int


@dataclass(frozen=True)
class CrossCheckReport:
    matched: int
    max_deviation: float
    unmatched_computed: np.ndarray = field(repr=False)
    unmatched_ingested: np.ndarray = field(repr=False)

    @property
    def discrepancies(self):
        return self.unmatched_computed.size + self.unmatched_ingested.size


def fnv1a_64(data: bytes) -> int:
    """64-bit FNV-1a hash."""
    h = _FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * _FNV_PRIME) & _MASK
    return h


def checksum(data: bytes) -> int:
    return fnv1a_64(data)


def encode_table(table: ZeroTable, label: str | None = None) -> bytes:
    """Cached-format bytes for ``table``; identical tables give identical bytes."""
    label = table.source if label is None else label
    raw_label = label.encode("utf-8")
    g = np.ascontiguousarray(table.ordinates, dtype="<f8")
    body = (
        _HEAD.pack(MAGIC, FORMAT_VERSION, table.range_lo, table.range_hi, g.size, len(raw_label))
        + raw_label
        + g.tobytes()
    )
    return body + struct.pack("<Q", checksum(body))


def decode_table(data: bytes):
    """Parse cached-format bytes into ``(header, ordinates)``."""
    if len(data) < _HEAD.size + 8:
        raise ParseError("file too short for a zero table header")
    magic, version, lo, hi, count, nlabel = _HEAD.unpack_from(data)
    if magic != MAGIC:
        raise ParseError(f"bad magic {magic!r}")
    body, tail = data[:-8], data[-8:]
    (stored,) = struct.unpack("<Q", tail)
    if checksum(body) != stored:
        raise ChecksumMismatch(f"checksum {stored:#018x} does not match the contents")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {version}")
    start = _HEAD.size + nlabel
    if len(body) != start + 8 * count:
        raise ParseError(f"header declares {count} ordinates but the payload differs")
    label = body[_HEAD.size : start].decode("utf-8")
    g = np.frombuffer(body, dtype="<f8", count=count, offset=start).astype(float)
    return ZeroFileHeader(version, lo, hi, count, label, stored), g


def save_zero_table(table: ZeroTable, path, label: str | None = None) -> None:
    """Write ``table`` in the cached binary format."""
    Path(path).write_bytes(encode_table(table, label))


def parse_plain_text(text: str) -> np.ndarray:
    """Ordinates from plain text, checking they increase strictly."""
    values = []
    prev = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            x = float(s)
        except ValueError:
            raise ParseError(f"cannot parse {s!r} as a number", line=lineno) from None
        if not np.isfinite(x) or x <= 0:
            raise ParseError(f"ordinate {s!r} is not a positive finite number", line=lineno)
        if prev is not None and x <= prev:
            raise NonMonotoneInput(f"{x!r} does not exceed the previous {prev!r}", line=lineno)
        values.append(x)
        prev = x
    return np.array(values, dtype=float)


def load_zero_table(path, format: str = "plain_text") -> ZeroTable:
    """Read a table; the result is tagged ``ingested`` and not yet complete."""
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    path = Path(path)
    if format == "plain_text":
        g = parse_plain_text(path.read_text(encoding="utf-8"))
        hi = float(g[-1]) if g.size else 1.0
        return ZeroTable(0.0, hi, g, source="ingested")
    header, g = decode_table(path.read_bytes())
    try:
        return ZeroTable(header.range_lo, header.range_hi, g, source="ingested")
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def cross_check(
    computed: ZeroTable, ingested: ZeroTable, tol: float = 1e-6
) -> CrossCheckReport:
    """Match ordinates of the two tables in order within ``tol`` over their common range.

    The range is widened by ``tol`` at both ends so that a zero sitting on
    the boundary of one table is not lost to rounding in the other.
    """
    lo = max(computed.range_lo, ingested.range_lo) - tol
    hi = min(computed.range_hi, ingested.range_hi) + tol
    a = computed.ordinates[(computed.ordinates > lo) & (computed.ordinates <= hi)]
    b = ingested.ordinates[(ingested.ordinates > lo) & (ingested.ordinates <= hi)]
    i = j = 0
    miss_a, miss_b, dev = [], [], []
    while i < a.size and j < b.size:
        d = a[i] - b[j]
        if abs(d) <= tol:
            dev.append(abs(d))
            i += 1
            j += 1
        elif d < 0:
            miss_a.append(a[i])
            i += 1
        else:
            miss_b.append(b[j])
            j += 1
    miss_a.extend(a[i:])
    miss_b.extend(b[j:])
    return CrossCheckReport(
        matched=len(dev),
        max_deviation=max(dev, default=0.0),
        unmatched_computed=np.array(miss_a, dtype=float),
        unmatched_ingested=np.array(miss_b, dtype=float),
    )


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "zetaline"


def cache_key(t_lo, t_hi, grid_step, rs_corrections) -> str:
    text = f"{t_lo!r}:{t_hi!r}:{grid_step!r}:{rs_corrections}"
    return hashlib.sha256(text.encode()).hexdigest()[:20]


def load_or_scan(
    t_lo: float,
    t_hi: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    grid_step: float | None = None,
    cache_dir=None,
    jobs: int = 1,
) -> ZeroTable:
    """Scan (t_lo, t_hi] for zeros, reusing a cached table when one exists.

    Only complete tables are cached. ``cache_dir=False`` disables caching.
    """
    step = default_grid_step(t_hi) if grid_step is None else float(grid_step)
    path = None
    if cache_dir is not False:
        root = default_cache_dir() if cache_dir is None else Path(cache_dir)
        path = root / f"zeros-{cache_key(t_lo, t_hi, step, cfg.rs_corrections)}.ztbl"
        if path.exists():
            try:
                header, g = decode_table(path.read_bytes())
                if header.source_label == "computed":
                    return ZeroTable(
                        t_lo, t_hi, g, first_index=first_index_estimate(t_lo), complete=True
                    )
            except (ParseError, ChecksumMismatch, ValueError) as exc:
                log.warning("ignoring unreadable cache file %s: %s", path, exc)
    table = scan_zeros(t_lo, t_hi, cfg, grid_step=step, jobs=jobs)
    if path is not None and table.complete:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".{os.getpid()}.tmp")
        save_zero_table(table, tmp, label="computed")
        os.replace(tmp, path)
    return table

