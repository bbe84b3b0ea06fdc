import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from verlinde.verp import (
    Profile,
    VerpError,
    VerpObject,
    dim_mod_p,
    direct_sum,
    fuse,
    integer_dim,
    invariants_profile,
    sym_ext_power,
)

PRIMES = [5, 7, 11, 13]


def test_object_basics():
    x = VerpObject.from_dict(13, {2: 1, 10: 1})
    assert str(x) == "L_2 + L_10"
    assert str(VerpObject.zero(7)) == "0"
    assert VerpObject.simple(7, 5).is_invertible() and VerpObject.simple(7, 0).is_invertible()
    assert not VerpObject.simple(7, 1).is_invertible()
    with pytest.raises(VerpError):
        VerpObject.simple(7, 6)
    with pytest.raises(VerpError):
        VerpObject.zero(9)
    assert str(VerpObject.from_dict(7, {3: 2})) == "2*L_3"


def test_fusion_examples():
    assert fuse(3, 0, 11) == VerpObject.simple(11, 3)
    assert fuse(2, 2, 7) == VerpObject.from_dict(7, {0: 1, 2: 1, 4: 1})
    for p in PRIMES:
        assert fuse(p - 2, p - 2, p) == VerpObject.simple(p, 0)
    with pytest.raises(VerpError):
        fuse(6, 0, 7)


@pytest.mark.parametrize("p", PRIMES)
def test_fusion_commutative_associative(p):
    s = [VerpObject.simple(p, c) for c in range(p - 1)]
    for a, b in itertools.product(range(p - 1), repeat=2):
        assert fuse(a, b, p) == fuse(b, a, p)
    for a, b, c in itertools.product(range(p - 1), repeat=3):
        assert (s[a] * s[b]) * s[c] == s[a] * (s[b] * s[c])


@given(st.sampled_from(PRIMES), st.data())
def test_dim_is_ring_homomorphism(p, data):
    obj = st.dictionaries(st.integers(0, p - 2), st.integers(1, 3), max_size=3)
    x = VerpObject.from_dict(p, data.draw(obj))
    y = VerpObject.from_dict(p, data.draw(obj))
    assert dim_mod_p(x * y) == dim_mod_p(x) * dim_mod_p(y) % p
    assert dim_mod_p(x + y) == (dim_mod_p(x) + dim_mod_p(y)) % p


def test_dim_examples():
    assert dim_mod_p(VerpObject.simple(7, 0)) == 1
    assert dim_mod_p(VerpObject.simple(7, 5)) == 6
    assert dim_mod_p(fuse(2, 2, 7)) == 2
    assert integer_dim(fuse(2, 2, 7)) == 9


def test_power_examples():
    assert sym_ext_power(VerpObject.simple(7, 2), 3, "ext") == VerpObject.simple(7, 0)
    assert sym_ext_power(VerpObject.simple(7, 2), 5, "sym").is_zero()
    for c in range(5):
        assert sym_ext_power(VerpObject.simple(7, c), 1, "ext") == VerpObject.simple(7, c)
    x = VerpObject.simple(7, 1)
    with pytest.raises(VerpError):
        sym_ext_power(x, 7, "sym")
    with pytest.raises(VerpError):
        sym_ext_power(x, 0, "ext")
    with pytest.raises(VerpError):
        sym_ext_power(x, 2, "divided")


def _naive_ext(x, d):
    # brute-force oracle: ext^d of a multiset of weights by explicit subsets
    from verlinde.principal import WeylString, verp_image, weyl_strings, SL2Char
    from collections import Counter

    weights = []
    for c, m in x.as_dict().items():
        weights += list(range(-c, c + 1, 2)) * m
    chi = Counter(sum(s) for s in itertools.combinations(weights, d))
    return verp_image(weyl_strings(SL2Char(chi)), x.p)


@pytest.mark.parametrize("p", [5, 7])
def test_ext_against_subsets(p):
    for c in range(p - 1):
        x = VerpObject.simple(p, c)
        for d in range(1, min(p, c + 2)):
            assert sym_ext_power(x, d, "ext") == _naive_ext(x, d)
    x = VerpObject.from_dict(p, {1: 1, 2: 1})
    for d in range(1, p):
        assert sym_ext_power(x, d, "ext") == _naive_ext(x, d)


@pytest.mark.parametrize("p", PRIMES)
def test_dimension_formulas(p):
    objs = [VerpObject.simple(p, c) for c in range(p - 1)] + [VerpObject.from_dict(p, {1: 1, 2: 1})]
    for x in objs:
        n = integer_dim(x)
        for d in range(1, p):
            assert dim_mod_p(sym_ext_power(x, d, "sym")) == comb(n + d - 1, d) % p
            assert dim_mod_p(sym_ext_power(x, d, "ext")) == comb(n, d) % p


@pytest.mark.parametrize("p", PRIMES)
def test_profiles_of_simples(p):
    for c in range(1, p - 2):
        x = VerpObject.simple(p, c)
        prof = invariants_profile(x)
        assert prof.N == p
        assert prof.top_ext_parity == "even"
        n = c + 1
        if n % 2 == 1:
            assert (prof.m, prof.n) == (p - n, n)
        inv = [d for d in range(1, p) if sym_ext_power(x, d, "sym").is_invertible()]
        assert inv == [prof.m]


def test_profile_examples():
    assert invariants_profile(VerpObject.simple(7, 1)) == Profile(5, 2, 7, "even")
    unit = invariants_profile(VerpObject.simple(7, 0))
    assert unit.m is None and unit.n == 1 and unit.N is None
    assert unit.describe()["m"] == ">=p-1"
    with pytest.raises(VerpError):
        invariants_profile(VerpObject.zero(7))


def test_large_multiplicities_use_exact_path():
    x = VerpObject.from_dict(13, {11: 3, 10: 2})
    y = sym_ext_power(x, 12, "sym")
    assert dim_mod_p(y) == comb(integer_dim(x) + 11, 12) % 13


def test_direct_sum():
    p = 7
    assert direct_sum([VerpObject.simple(p, 1), VerpObject.simple(p, 1)], p) == VerpObject.from_dict(p, {1: 2})
