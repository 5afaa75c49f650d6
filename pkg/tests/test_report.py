import csv
import io
import json

import numpy as np
import pytest

from zetaline.core import z_function
from zetaline.gaps import gap_report
from zetaline.report import emit_report, flatten
from zetaline.values import clt_distribution, level_set_measure, sample_grid


@pytest.fixture(scope="module")
def distribution():
    return clt_distribution(1000.0, y_grid=np.linspace(-2, 2, 9), samples=sample_grid(1000.0))


def rows(data):
    return list(csv.DictReader(io.StringIO(data.decode())))


def test_distribution_columns(distribution):
    r = rows(emit_report(distribution))
    assert len(r) == 9
    assert {"y", "empirical_cdf", "phi_cdf", "ks_distance", "T"} <= set(r[0])
    assert float(r[4]["phi_cdf"]) == 0.5


def test_deterministic(distribution):
    assert emit_report(distribution) == emit_report(distribution)
    assert emit_report(distribution, "json") == emit_report(distribution, "json")


def test_floats_round_trip():
    est = level_set_measure(200.0, 1.0)
    (row,) = rows(emit_report(est))
    assert float(row["value"]) == est.value
    assert float(row["ratio_to_T"]) == est.ratio_to_T


def test_gap_report_one_row_per_alpha(table_1e3):
    rep = gap_report(table_1e3, 1000.0, alphas=(1.0, 1.5, 2.0), counts=False)
    r = rows(emit_report(rep))
    assert [float(x["alpha"]) for x in r] == [1.0, 1.5, 2.0]
    assert float(r[2]["power_sum"]) == rep.power_sums[2.0]


def test_json_key_order_and_types():
    s = z_function(1000.0)
    obj = json.loads(emit_report(s, "json"))
    scalars, _ = flatten(s)
    assert list(obj) == list(scalars)
    assert obj["t"] == 1000.0


def test_table_rows(table_100):
    r = rows(emit_report(table_100))
    assert len(r) == 29
    assert r[0]["n"] == "1" and float(r[0]["ordinate"]) == table_100.ordinates[0]


def test_unknown_format(table_100):
    with pytest.raises(ValueError):
        emit_report(table_100, "xml")


def test_unknown_type():
    with pytest.raises(TypeError):
        emit_report(object())
