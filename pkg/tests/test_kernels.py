import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from verlinde import _kernels
from verlinde.liealg import bracket_nonzero, bracket_support


def test_binomial_table():
    t = _kernels.binomial_table_mod(11)
    for a in range(11):
        for b in range(11):
            assert t[a, b] == comb(a, b) % 11


@pytest.mark.parametrize("n,p", [(2, 5), (5, 11), (7, 17), (10, 23), (12, 29), (20, 41)])
def test_support_paths_agree(n, p):
    binom = _kernels.binomial_table_mod(p)
    a = _kernels._support_table_numba(n, p, binom)
    b = _kernels._support_table_numpy(n, p, binom)
    assert a.shape == (n, n, n)
    assert np.array_equal(a, b)


@pytest.mark.parametrize("n,p", [(5, 11), (7, 17), (10, 23), (9, 29)])
def test_support_matches_big_integer_sum(n, p):
    # the kernel reduces the top binomial with Lucas; the reference keeps big integers
    table = bracket_support(n, p).table
    for i, j, k in itertools.product(range(1, n), repeat=3):
        assert bool(table[i, j, k]) == bracket_nonzero(n, i, j, k, p)


@pytest.mark.parametrize("n,p", [(4, 11), (7, 17), (10, 23), (12, 37)])
def test_closed_mask_paths_agree(n, p):
    forced = bracket_support(n, p).forced()
    a = _kernels._closed_masks_numba(np.ascontiguousarray(forced, dtype=np.int64), n)
    b = _kernels._closed_masks_numpy(forced, n)
    assert sorted(a.tolist()) == sorted(b.tolist())
    assert all(m & 2 for m in a.tolist())


def _brute(weights, d, kind):
    combos = (itertools.combinations if kind == 0 else itertools.combinations_with_replacement)(range(len(weights)), d)
    out = {}
    for c in combos:
        e = sum(weights[i] for i in c)
        out[e] = out.get(e, 0) + 1
    return out


def _as_dict(coeffs, off):
    return {e - off: int(c) for e, c in enumerate(coeffs) if c}


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=7), st.integers(1, 4), st.sampled_from([0, 1]))
def test_power_char_against_brute_force(weights, d, kind):
    want = _brute(weights, d, kind)
    w = np.asarray(weights, dtype=np.int64)
    assert _as_dict(*_kernels._power_char_numba(w, d, kind)) == want
    assert _as_dict(*_kernels._power_char_numpy(w, d, kind)) == want
    assert _as_dict(*_kernels.power_char(weights, d, kind, exact=True)) == want


def test_flag_selects_path(monkeypatch):
    monkeypatch.setenv("VERLINDE_NO_NUMBA", "1")
    assert not _kernels.numba_enabled()
    slow = _kernels.support_table(8, 19)
    monkeypatch.setenv("VERLINDE_NO_NUMBA", "0")
    assert _kernels.numba_enabled() == _kernels.NUMBA_AVAILABLE
    assert np.array_equal(slow, _kernels.support_table(8, 19))
