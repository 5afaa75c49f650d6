import struct

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaline.errors import ChecksumMismatch, NonMonotoneInput, ParseError, ZeroFileError
from zetaline.storage import (
    cross_check,
    decode_table,
    encode_table,
    fnv1a_64,
    load_or_scan,
    load_zero_table,
    parse_plain_text,
    save_zero_table,
)
from zetaline.zeros import ZeroTable


def test_fnv1a_reference_vectors():
    # published FNV-1a 64-bit test vectors
    assert fnv1a_64(b"") == 0xCBF29CE484222325
    assert fnv1a_64(b"a") == 0xAF63DC4C8601EC8C
    assert fnv1a_64(b"foobar") == 0x85944171F73967E8


class TestPlainText:
    def test_parse(self):
        g = parse_plain_text("# header\n14.134725142\n\n21.022039639\n25.010857580\n")
        assert g.tolist() == [14.134725142, 21.022039639, 25.010857580]

    def test_non_monotone_reports_line(self):
        with pytest.raises(NonMonotoneInput) as info:
            parse_plain_text("21.0\n14.1\n")
        assert info.value.line == 2

    @pytest.mark.parametrize("text,line", [("14.1\nabc\n", 2), ("-3\n", 1), ("nan\n", 1)])
    def test_bad_values(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_plain_text(text)
        assert info.value.line == line

    def test_load(self, tmp_path, table_100):
        p = tmp_path / "zeros.txt"
        p.write_text("\n".join(repr(float(x)) for x in table_100.ordinates))
        t = load_zero_table(p)
        assert t.source == "ingested" and not t.complete
        assert np.array_equal(t.ordinates, table_100.ordinates)
        assert t.range_hi == table_100.ordinates[-1]


class TestCached:
    def test_round_trip_bit_exact(self, tmp_path, table_1e3):
        p = tmp_path / "t.ztbl"
        save_zero_table(table_1e3, p)
        t = load_zero_table(p, "cached")
        assert t.ordinates.tobytes() == table_1e3.ordinates.tobytes()
        assert (t.range_lo, t.range_hi) == (table_1e3.range_lo, table_1e3.range_hi)
        header, _ = decode_table(p.read_bytes())
        assert header.count == len(table_1e3) and header.source_label == "computed"

    def test_identical_bytes(self, table_100):
        assert encode_table(table_100) == encode_table(ZeroTable(0.0, 100.0, table_100.ordinates.copy()))

    def test_header_corruption_caught(self, table_100):
        data = bytearray(encode_table(table_100))
        struct.pack_into("<Q", data, 24, 28)  # count field
        with pytest.raises(ChecksumMismatch):
            decode_table(bytes(data))

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_any_single_byte_corruption_detected(self, table_100, data):
        raw = bytearray(encode_table(table_100))
        pos = data.draw(st.integers(4, len(raw) - 1))
        flip = data.draw(st.integers(1, 255))
        raw[pos] ^= flip
        with pytest.raises(ZeroFileError):
            decode_table(bytes(raw))

    def test_truncated(self, table_100):
        with pytest.raises(ParseError):
            decode_table(encode_table(table_100)[:10])

    def test_bad_magic(self, table_100):
        with pytest.raises(ParseError):
            decode_table(b"XXXX" + encode_table(table_100)[4:])


class TestCrossCheck:
    def test_identical(self, table_100):
        r = cross_check(table_100, table_100)
        assert r.matched == 29 and r.discrepancies == 0 and r.max_deviation == 0

    def test_perturbed_and_missing(self, table_100):
        g = table_100.ordinates.copy()
        g[3] += 5e-7
        g = np.delete(g, 10)
        other = ZeroTable(0.0, 100.0, np.append(g, 99.99))
        r = cross_check(table_100, other)
        assert r.matched == 28
        assert r.max_deviation == pytest.approx(5e-7, rel=1e-6)
        assert r.unmatched_computed.tolist() == [table_100.ordinates[10]]
        assert r.unmatched_ingested.tolist() == [99.99]

    @settings(max_examples=40)
    @given(
        st.lists(st.floats(1, 99), max_size=30, unique=True),
        st.lists(st.floats(1, 99), max_size=30, unique=True),
    )
    def test_symmetric(self, xs, ys):
        a = ZeroTable(0.0, 100.0, np.unique(xs))
        b = ZeroTable(0.0, 100.0, np.unique(ys))
        ab, ba = cross_check(a, b), cross_check(b, a)
        assert ab.matched == ba.matched
        assert np.array_equal(ab.unmatched_computed, ba.unmatched_ingested)

    def test_common_range_only(self, table_100):
        half = ZeroTable(0.0, 50.0, table_100.ordinates[table_100.ordinates <= 50])
        r = cross_check(table_100, half)
        assert r.discrepancies == 0 and r.matched == len(half)


class TestCache:
    def test_hit_returns_same_table(self, tmp_path):
        a = load_or_scan(0.0, 200.0, cache_dir=tmp_path)
        files = list(tmp_path.iterdir())
        assert len(files) == 1
        mtime = files[0].stat().st_mtime_ns
        b = load_or_scan(0.0, 200.0, cache_dir=tmp_path)
        assert np.array_equal(a.ordinates, b.ordinates) and b.complete
        assert files[0].stat().st_mtime_ns == mtime

    def test_corrupt_cache_is_rescanned(self, tmp_path):
        a = load_or_scan(0.0, 150.0, cache_dir=tmp_path)
        (f,) = tmp_path.iterdir()
        f.write_bytes(f.read_bytes()[:-1] + b"\0")
        b = load_or_scan(0.0, 150.0, cache_dir=tmp_path)
        assert np.array_equal(a.ordinates, b.ordinates)

    def test_disabled(self, tmp_path, monkeypatch):
        monkeypatch.setenv("ZETALINE_CACHE_DIR", str(tmp_path))
        load_or_scan(0.0, 120.0, cache_dir=False)
        assert list(tmp_path.iterdir()) == []
