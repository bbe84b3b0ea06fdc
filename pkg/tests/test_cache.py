import struct

from hypothesis import given, strategies as st

from verlinde import cache


def test_record_layout():
    rec = cache.encode_record("G2", 2, (1, 0), {(1, 0): 1, (0, 0): 300})
    (size,) = struct.unpack(">I", rec[:4])
    assert size == len(rec) - 4
    assert rec[4:5] == b"G" and rec[5] == 2
    assert struct.unpack(">2i", rec[6:14]) == (1, 0)
    assert struct.unpack(">I", rec[14:18]) == (2,)
    # entries sorted: (0,0) first, multiplicity 300 in two bytes
    assert struct.unpack(">2iH", rec[18:28]) == (0, 0, 2)
    assert int.from_bytes(rec[28:30], "big") == 300


def test_exceptional_labels_recovered():
    data = cache.encode_record("E7", 7, (0,) * 7, {(0,) * 7: 1}) + cache.encode_record("A", 7, (0,) * 7, {(0,) * 7: 1})
    keys = sorted(cache.decode_records(data))
    assert keys == [("A", 7, (0,) * 7), ("E7", 7, (0,) * 7)]


def test_truncated_tail_ignored():
    good = cache.encode_record("B", 3, (1, 0, 0), {(1, 0, 0): 1, (0, 0, 0): 1})
    bad = cache.encode_record("C", 3, (0, 1, 0), {(0, 1, 0): 1})
    out = cache.decode_records(good + bad[:-3])
    assert list(out) == [("B", 3, (1, 0, 0))]


@given(
    st.dictionaries(
        st.tuples(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50)),
        st.integers(1, 10**30),
        min_size=1,
        max_size=20,
    )
)
def test_round_trip(entries):
    rec = cache.encode_record("D", 3, (1, 2, 3), entries)
    assert cache.decode_records(rec) == {("D", 3, (1, 2, 3)): entries}


def test_disabled_without_env(monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    assert cache.cache_path() is None
    assert cache.load() == {}
    cache.store("A", 1, (1,), {(1,): 1})  # no-op
