import itertools

import pytest
from hypothesis import given, strategies as st

from verlinde.rootsys import RootSystemError, alcove_weights, build_root_datum, minuscule_weights, paper_to_bourbaki
from verlinde.verlinde_g import (
    StraightenResult,
    dim_mod,
    dual_weight,
    expected_invertibles,
    invertibles,
    minuscule_table,
    sigma_dot,
    straighten_dot,
    tensor_decompose,
    tensor_multiplicity,
    verify_minuscule_symmetry,
)
from verlinde.verp import VerpObject, fuse

A1 = build_root_datum("A", 1)
A2 = build_root_datum("A", 2)


def test_straighten_examples():
    assert straighten_dot(A2, (1, 2), 7) == StraightenResult("interior", (1, 2), 1)
    assert straighten_dot(A1, (4,), 5).status == "wall"
    assert straighten_dot(A1, (6,), 5) == StraightenResult("interior", (2,), -1)
    assert straighten_dot(A1, (-1,), 5).status == "wall"
    assert straighten_dot(A1, (-3,), 5) == StraightenResult("interior", (1,), -1)
    with pytest.raises(RootSystemError):
        straighten_dot(A2, (0, 0), 3)


@given(st.sampled_from([("A", 2, 7), ("B", 2, 7), ("G2", None, 11), ("C", 3, 11)]), st.data())
def test_straighten_lands_in_alcove(case, data):
    t, r, p = case
    d = build_root_datum(t, r)
    xi = tuple(data.draw(st.integers(-3 * p, 3 * p)) for _ in range(d.rank))
    res = straighten_dot(d, xi, p)
    if res.status == "interior":
        assert res.target in alcove_weights(d, p)
        assert res.sign in (1, -1)
    else:
        assert res.target is None


def test_tensor_examples():
    assert tensor_multiplicity(A2, (1, 1), (0, 0), (1, 1), 7) == 1
    assert tensor_decompose(A1, (2,), (2,), 5) == {(0,): 1, (2,): 1}
    theta = A2.highest_long_root
    zeros = [mu for mu in alcove_weights(A2, 5) if tensor_multiplicity(A2, theta, mu, mu, 5) == 0]
    assert zeros == [(0, 0), (0, 2), (2, 0)]
    with pytest.raises(RootSystemError):
        tensor_decompose(A2, (3, 0), (0, 0), 5)


@pytest.mark.parametrize("t,r,p", [("A", 1, 5), ("A", 1, 7), ("A", 2, 5), ("A", 2, 7), ("C", 2, 5), ("C", 2, 7), ("G2", None, 7)])
def test_commutative_with_unit(t, r, p):
    d = build_root_datum(t, r)
    alcove = alcove_weights(d, p)
    zero = (0,) * d.rank
    for lam in alcove:
        assert tensor_decompose(d, zero, lam, p) == {lam: 1}
    for lam, mu in itertools.combinations(alcove, 2):
        assert tensor_decompose(d, lam, mu, p) == tensor_decompose(d, mu, lam, p)


@pytest.mark.parametrize("t,r,p", [("A", 2, 7), ("B", 2, 7), ("A", 3, 7), ("G2", None, 11), ("B", 3, 11)])
def test_dimension_homomorphism(t, r, p):
    d = build_root_datum(t, r)
    alcove = alcove_weights(d, p)
    for lam, mu in itertools.islice(itertools.combinations_with_replacement(alcove, 2), 40):
        total = sum(m * dim_mod(d, nu, p) for nu, m in tensor_decompose(d, lam, mu, p).items())
        assert total % p == dim_mod(d, lam, p) * dim_mod(d, mu, p) % p


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_a1_matches_fusion_rule(p):
    for a, b in itertools.product(range(p - 1), repeat=2):
        got = VerpObject.from_dict(p, {nu[0]: m for nu, m in tensor_decompose(A1, (a,), (b,), p).items()})
        assert got == fuse(a, b, p)


def _invertible_cases():
    for t, r in [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 3), ("B", 4), ("C", 2), ("C", 3), ("C", 4), ("D", 4),
                 ("F4", None), ("G2", None)]:
        d = build_root_datum(t, r)
        for p in (5, 7, 11, 13):
            if p > d.coxeter_number:
                yield d, p


@pytest.mark.parametrize("d,p", list(_invertible_cases()), ids=lambda x: getattr(x, "name", x))
def test_invertibles(d, p):
    found = invertibles(d, p)
    assert found == expected_invertibles(d, p)
    assert len(found) == d.fundamental_group_order
    for mu in found:
        assert tensor_decompose(d, mu, dual_weight(d, mu), p) == {(0,) * d.rank: 1}


def test_invertible_examples():
    assert invertibles(A2, 5) == [(0, 0), (0, 2), (2, 0)]
    assert invertibles(build_root_datum("G2"), 13) == [(0, 0)]
    d4 = build_root_datum("D", 4)
    assert invertibles(d4, 7) == alcove_weights(d4, 7)
    with pytest.raises(RootSystemError):
        invertibles(A2, 3)


def test_dual_weight():
    a3 = build_root_datum("A", 3)
    assert dual_weight(a3, (1, 2, 0)) == (0, 2, 1)
    e6 = build_root_datum("E6")
    w = tuple(int(i == 0) for i in range(6))
    assert dual_weight(e6, w) == tuple(int(i == 5) for i in range(6))
    d5 = build_root_datum("D", 5)
    assert dual_weight(d5, (0, 0, 0, 0, 1)) == (0, 0, 0, 1, 0)


def test_minuscule_examples():
    assert verify_minuscule_symmetry(A1, 5, (1,), [1])
    assert sigma_dot(A1, 5, (1,), [1], (0,)) == (3,)
    assert verify_minuscule_symmetry(A2, 5, (0, 1), [1, 2, 1, 2])
    e7 = build_root_datum("E7")
    (row,) = minuscule_table(e7)
    assert len(row["paper_word"]) == 27
    assert row["node"] == paper_to_bourbaki(e7, 1) == 7
    assert verify_minuscule_symmetry(e7, 19, row["varpi"], row["word"])
    with pytest.raises(RootSystemError):
        verify_minuscule_symmetry(A2, 5, (0, 1), [1, 3])


def test_wrong_word_fails():
    a3 = build_root_datum("A", 3)
    assert not verify_minuscule_symmetry(a3, 7, (1, 0, 0), [1, 2])


@pytest.mark.parametrize("t,r", [("A", 1), ("A", 4), ("B", 2), ("B", 4), ("C", 3), ("D", 4), ("D", 5), ("D", 6), ("E6", None), ("E7", None)])
def test_table_covers_every_minuscule(t, r):
    d = build_root_datum(t, r)
    rows = minuscule_table(d)
    covered = sorted(row["varpi"] for row in rows)
    assert covered == sorted(w for w in minuscule_weights(d) if any(w))
    p = d.coxeter_number + 1
    while not all(p % q for q in range(2, p)):
        p += 1
    for row in rows:
        assert verify_minuscule_symmetry(d, p, row["varpi"], row["word"], spot_checks=2)
