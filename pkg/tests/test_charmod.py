from collections import Counter

import pytest
from hypothesis import given, strategies as st

from verlinde import cache
from verlinde.charmod import (
    clear_memo,
    dominant_character,
    dominant_representative,
    weight_multiplicity,
    weyl_dimension,
    weyl_orbit,
)
from verlinde.rootsys import RootSystemError, build_root_datum, minuscule_weights


def full_char(d, lam):
    return Counter(dict(dominant_character(d, lam).weights(d)))


def product(c1, c2):
    out = Counter()
    for x, m in c1.items():
        for y, n in c2.items():
            out[tuple(a + b for a, b in zip(x, y))] += m * n
    return out


def test_a1_strings():
    a1 = build_root_datum("A", 1)
    for k in range(7):
        assert full_char(a1, (k,)) == Counter({(w,): 1 for w in range(-k, k + 1, 2)})


def test_g2_adjoint():
    g2 = build_root_datum("G2")
    ch = dominant_character(g2, (0, 1))
    assert ch.dimension(g2) == 14
    assert ch.entries[(0, 0)] == 2
    assert ch.highest_weight == (0, 1) and ch.entries[(0, 1)] == 1


@pytest.mark.parametrize("r", [4, 5, 6])
def test_halfspin_single_orbit(r):
    d = build_root_datum("D", r)
    lam = tuple(int(i == r - 1) for i in range(r))
    ch = dominant_character(d, lam)
    assert ch.entries == {lam: 1}
    assert len(weyl_orbit(d, lam)) == 2 ** (r - 1)


@pytest.mark.parametrize("t,r", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G2", None), ("F4", None), ("E6", None)])
def test_adjoint_multiplicities(t, r):
    d = build_root_datum(t, r)
    theta = d.highest_long_root
    assert weight_multiplicity(d, theta, (0,) * d.rank) == d.rank
    for root in d.positive_roots:
        x = d.root_weight(root.root)
        assert weight_multiplicity(d, theta, x) == 1
        assert weight_multiplicity(d, theta, tuple(-v for v in x)) == 1
    assert weight_multiplicity(d, theta, theta) == 1
    assert weight_multiplicity(d, theta, tuple(3 * v for v in theta)) == 0


@pytest.mark.parametrize("t,r", [("A", 4), ("B", 3), ("C", 4), ("D", 5), ("E6", None), ("E7", None)])
def test_minuscule_characters_are_orbits(t, r):
    d = build_root_datum(t, r)
    for w in minuscule_weights(d):
        ch = dominant_character(d, w)
        assert ch.entries == {w: 1}
        assert ch.dimension(d) == weyl_dimension(d, w)


def test_tensor_square_oracles():
    # independent check through tensor-product rules over the integers
    a3 = build_root_datum("A", 3)
    v = full_char(a3, (1, 0, 0))
    assert product(v, v) == full_char(a3, (2, 0, 0)) + full_char(a3, (0, 1, 0))
    g2 = build_root_datum("G2")
    v = full_char(g2, (1, 0))
    assert product(v, v) == full_char(g2, (2, 0)) + full_char(g2, (0, 1)) + full_char(g2, (1, 0)) + full_char(g2, (0, 0))
    b2 = build_root_datum("B", 2)
    s = full_char(b2, (0, 1))  # spin, dimension 4
    assert product(s, s) == full_char(b2, (0, 2)) + full_char(b2, (1, 0)) + full_char(b2, (0, 0))


@pytest.mark.parametrize("t,r,lam", [("B", 3, (1, 1, 0)), ("C", 3, (0, 1, 1)), ("F4", None, (1, 0, 0, 1)),
                                     ("G2", None, (2, 1)), ("E8", None, (0,) * 7 + (1,))])
def test_dimension_matches_weyl(t, r, lam):
    d = build_root_datum(t, r)
    assert dominant_character(d, lam).dimension(d) == weyl_dimension(d, lam)


def test_known_dimensions():
    assert weyl_dimension(build_root_datum("E8"), (0,) * 7 + (1,)) == 248
    assert weyl_dimension(build_root_datum("E7"), (0,) * 6 + (1,)) == 56
    assert weyl_dimension(build_root_datum("F4"), (3, 0, 0, 0)) == 12376


@given(st.lists(st.integers(0, 2), min_size=3, max_size=3), st.lists(st.integers(-4, 4), min_size=3, max_size=3),
       st.lists(st.integers(0, 2), min_size=1, max_size=6))
def test_weyl_invariance(lam, x, word):
    d = build_root_datum("B", 3)
    y = tuple(x)
    for i in word:
        y = d.reflect(y, i)
    assert weight_multiplicity(d, lam, x) == weight_multiplicity(d, lam, y)
    assert dominant_representative(d, x) == dominant_representative(d, y)


def test_non_dominant_rejected():
    with pytest.raises(RootSystemError):
        dominant_character(build_root_datum("A", 2), (1, -1))


def test_disk_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    clear_memo()
    d = build_root_datum("C", 3)
    first = dominant_character(d, (1, 1, 1)).entries
    assert (tmp_path / cache.FILENAME).exists()
    clear_memo()
    loaded = cache.load()
    assert loaded[("C", 3, (1, 1, 1))] == dict(first)
    assert dominant_character(d, (1, 1, 1)).entries == first
    monkeypatch.delenv(cache.ENV_VAR)
    clear_memo()
