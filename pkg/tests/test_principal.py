from collections import Counter

import pytest
from hypothesis import given, strategies as st

from verlinde.charmod import dominant_character
from verlinde.principal import (
    CyclotomicInt,
    ImageError,
    SL2Char,
    WeylString,
    character_at_root,
    halfspin_expected,
    halfspin_image,
    image_of,
    restrict_principal,
    verp_image,
    verp_image_cyclotomic,
    weyl_strings,
)
from verlinde.rootsys import build_root_datum, paper_to_bourbaki, fundamental_weight
from verlinde.verp import VerpError, VerpObject


def strings_of(t, r, lam):
    d = build_root_datum(t, r)
    return list(weyl_strings(restrict_principal(d, dominant_character(d, lam))).factors)


def test_restriction_examples():
    a4 = build_root_datum("A", 4)
    chi = restrict_principal(a4, dominant_character(a4, (1, 0, 0, 0)))
    assert chi.coeffs == {w: 1 for w in range(-4, 5, 2)}
    assert restrict_principal(a4, dominant_character(a4, (0,) * 4)).coeffs == {0: 1}
    e7 = build_root_datum("E7")
    lam = fundamental_weight(e7, paper_to_bourbaki(e7, 1))
    chi = restrict_principal(e7, dominant_character(e7, lam))
    assert chi == WeylString((9, 17, 27)).character()
    assert chi.dimension() == 56


def test_weyl_string_examples():
    assert list(weyl_strings(WeylString((6,)).character())) == [6]
    assert strings_of("G2", None, (0, 1)) == [2, 10]
    for r in range(3, 7):
        assert strings_of("B", r, (0, 1) + (0,) * (r - 2)) == list(range(2, 4 * r - 1, 4))


def test_weyl_strings_rejects_bad_characters():
    with pytest.raises(ImageError):
        weyl_strings(SL2Char({2: 1, 0: 1}))
    with pytest.raises(ImageError):
        weyl_strings(SL2Char({2: 1, 0: 0, -2: 1}))


@given(st.lists(st.integers(0, 30), max_size=8))
def test_strings_round_trip(factors):
    s = WeylString(tuple(factors))
    assert weyl_strings(s.character()) == s


def test_image_examples():
    assert verp_image([9, 17, 27], 23) == VerpObject.simple(23, 9)
    assert str(verp_image([2, 10], 13)) == "L_2 + L_10"
    assert verp_image([6], 7).is_zero()
    with pytest.raises(ImageError):
        verp_image([20], 13)
    with pytest.raises(VerpError):
        verp_image([1], 3)


@given(st.sampled_from([5, 7, 11, 13]), st.data())
def test_cyclotomic_route_agrees(p, data):
    # build a tilting-consistent multiset: simples plus negligible pairs and Delta_{ap-1}
    simples = data.draw(st.lists(st.integers(0, p - 2), max_size=4))
    factors = list(simples)
    for _ in range(data.draw(st.integers(0, 3))):
        a = data.draw(st.integers(1, 2))
        b = data.draw(st.integers(1, p - 1))
        factors += [a * p + b - 1, a * p - b - 1]
    factors += [a * p - 1 for a in data.draw(st.lists(st.integers(1, 3), max_size=2))]
    chi = WeylString(tuple(factors)).character()
    want = VerpObject.from_dict(p, Counter(simples))
    assert verp_image(factors, p) == want
    assert verp_image_cyclotomic(chi, p) == want


def test_negligible_pair_vanishes_at_root_of_unity():
    p = 11
    for a in (1, 2):
        for b in range(1, p):
            pair = WeylString((a * p + b - 1, a * p - b - 1)).character()
            shifted = character_at_root(pair, p) * (CyclotomicInt.omega(p) - CyclotomicInt.omega(p, -1))
            assert shifted.is_zero()


def test_cyclotomic_ring():
    p = 7
    one = CyclotomicInt.one(p)
    w = CyclotomicInt.omega(p)
    total = one
    x = one
    for _ in range(p - 1):
        x = x * w
        total = total + x
    assert total.is_zero()
    assert x * w == one
    assert (w * 3 - w * 3).is_zero()
    with pytest.raises(ValueError):
        CyclotomicInt(p, [1, 2])


def test_parity_split_needed():
    # L_0 + L_{p-2} evaluates to zero at the root of unity, yet the split solve recovers it
    p = 7
    chi = WeylString((0, p - 2)).character()
    assert verp_image_cyclotomic(chi, p) == VerpObject.from_dict(p, {0: 1, p - 2: 1})


@pytest.mark.parametrize("r", [3, 5, 6, 8, 9, 11])
def test_halfspin(r):
    assert halfspin_image(r) == halfspin_expected(r)


def test_halfspin_examples_and_errors():
    assert halfspin_image(5) == 4
    assert halfspin_image(3) == 3
    assert halfspin_image(6) == 5
    with pytest.raises(VerpError):
        halfspin_image(4)


@pytest.mark.parametrize("t,r,p", [("A", 5, 11), ("C", 3, 13), ("D", 5, 11), ("F4", None, 13), ("E6", None, 13)])
def test_adjoint_images_are_even(t, r, p):
    d = build_root_datum(t, r)
    _, image = image_of(d, d.highest_long_root, p)
    assert all(c % 2 == 0 for c in image.as_dict())


def test_e7_and_g2_images():
    e7 = build_root_datum("E7")
    assert str(image_of(e7, e7.highest_long_root, 23)[1]) == "L_2 + L_14"
    g2 = build_root_datum("G2")
    for p in (13, 17, 19):
        assert str(image_of(g2, (0, 1), p)[1]) == "L_2 + L_10"
    assert str(image_of(g2, (1, 0), 19)[1]) == "L_6"
