"""Serialising result objects to CSV or JSON.

Every report is first flattened into scalar fields plus equal-length columns.
CSV output has one header row naming every field and one row per column
entry, with the scalar fields repeated on each row; a report without columns
is a single row. JSON output is one object with the scalars followed by the
columns as arrays. Floats are always written with 17 significant digits and
non-finite floats as empty CSV cells or JSON null, so identical reports give
identical bytes.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math

import numpy as np

from .core import ZetaSample
from .gaps import ABDCounts, ABMeasure, GapReport, PairCorrelationReport, StarredSum
from .storage import CrossCheckReport
from .values import DistributionReport, IntegralReport, MeasureEstimate, MomentReport
from .zeros import CompletenessReport, ZeroTable

FORMATS = ("csv", "json")


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return format(x, ".17g") if math.isfinite(x) else ""
    return str(x)


def _scalars(obj, skip=()):
    out = {}
    for f in dataclasses.fields(obj):
        if f.name in skip:
            continue
        v = getattr(obj, f.name)
        if isinstance(v, (np.ndarray, list, tuple, dict)):
            continue
        out[f.name] = v
    return out


def flatten(report):
    """``(scalars, columns)`` view of a report, both insertion-ordered dicts."""
    if isinstance(report, ZeroTable):
        scalars = {
            "range_lo": report.range_lo,
            "range_hi": report.range_hi,
            "first_index": report.first_index,
            "complete": report.complete,
            "source": report.source,
        }
        n = np.arange(report.first_index, report.first_index + len(report))
        return scalars, {"n": n, "ordinate": report.ordinates}
    if isinstance(report, DistributionReport):
        return _scalars(report), {
            "y": report.y_grid,
            "empirical_cdf": report.empirical_cdf,
            "phi_cdf": report.phi_cdf,
        }
    if isinstance(report, GapReport):
        scalars = _scalars(report)
        scalars["gap_count"] = report.gaps.size
        alphas = sorted(report.power_sums)
        return scalars, {
            "alpha": np.array(alphas, dtype=float),
            "power_sum": np.array([report.power_sums[a] for a in alphas], dtype=float),
        }
    if isinstance(report, PairCorrelationReport):
        scalars = _scalars(report)
        scalars["max_deviation"] = report.max_deviation
        return scalars, {
            "alpha": report.alpha_grid,
            "empirical": report.empirical,
            "gue_prediction": report.gue_prediction,
        }
    if isinstance(report, ABMeasure):
        return {
            "T": report.a.T,
            "measure_A": report.a.value,
            "measure_B": report.b.value,
            "excluded": report.excluded,
            "uncertainty": report.a.uncertainty,
            "resolution": report.a.resolution,
            "ratio_A_to_T": report.a.value / report.a.T,
        }, {}
    if isinstance(report, CrossCheckReport):
        return {
            "matched": report.matched,
            "max_deviation": report.max_deviation,
            "unmatched_computed_count": report.unmatched_computed.size,
            "unmatched_ingested_count": report.unmatched_ingested.size,
        }, {}
    if isinstance(report, MeasureEstimate):
        scalars = _scalars(report)
        scalars["ratio_to_T"] = report.ratio_to_T
        return scalars, {}
    if isinstance(report, (MomentReport, IntegralReport)):
        scalars = _scalars(report)
        extra = "ratio" if isinstance(report, MomentReport) else "ratio_to_T"
        scalars[extra] = getattr(report, extra)
        return scalars, {}
    if isinstance(report, ZetaSample):
        return _scalars(report), {}
    if isinstance(report, (ABDCounts, StarredSum, CompletenessReport)):
        return _scalars(report), {}
    if isinstance(report, (list, tuple)) and report and dataclasses.is_dataclass(report[0]):
        names = [f.name for f in dataclasses.fields(report[0])]
        return {}, {n: [getattr(r, n) for r in report] for n in names}
    if isinstance(report, dict):
        scalars = {k: v for k, v in report.items() if not isinstance(v, (list, np.ndarray))}
        columns = {k: v for k, v in report.items() if isinstance(v, (list, np.ndarray))}
        return scalars, columns
    raise TypeError(f"cannot emit a report of type {type(report).__name__}")


def _json_value(v):
    if isinstance(v, (np.ndarray, list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    if isinstance(v, (bool, np.bool_, int, np.integer)):
        return _fmt(v)
    if isinstance(v, (float, np.floating)):
        return _fmt(v) or "null"
    if v is None:
        return "null"
    return json.dumps(str(v))


def emit_report(report, format: str = "csv") -> bytes:
    """Bytes of ``report`` in ``csv`` or ``json``."""
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    scalars, columns = flatten(report)
    if format == "json":
        items = list(scalars.items()) + list(columns.items())
        body = ",\n".join(f"  {json.dumps(k)}: {_json_value(v)}" for k, v in items)
        return ("{\n" + body + "\n}\n").encode("utf-8")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(scalars) + list(columns))
    head = [_fmt(v) for v in scalars.values()]
    lengths = {len(c) for c in columns.values()}
    if len(lengths) > 1:
        raise ValueError("report columns differ in length")
    nrows = lengths.pop() if lengths else 0
    if not columns:
        writer.writerow(head)
    for i in range(nrows):
        writer.writerow(head + [_fmt(c[i]) for c in columns.values()])
    return buf.getvalue().encode("utf-8")
