"""Fusion in Ver_p(G) through the affine Weyl group, and its invertible objects."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from verlinde.charmod import dominant_character, dominant_representative, weyl_dimension
from verlinde.rootsys import (
    RootDatum,
    RootSystemError,
    Weight,
    alcove_weights,
    in_alcove,
    pair,
    paper_to_bourbaki,
)

_MAX_STEPS = 100_000


@dataclass(frozen=True)
class StraightenResult:
    status: str  # "interior" or "wall"
    target: Weight | None = None
    sign: int | None = None


def straighten_dot(datum: RootDatum, xi: Sequence[int], p: int) -> StraightenResult:
    """Move xi into the fundamental alcove under the dot action of the affine Weyl group."""
    if p <= datum.coxeter_number:
        raise RootSystemError(f"p={p} must exceed h={datum.coxeter_number}")
    v = [x + 1 for x in xi]
    theta = datum.highest_short_root
    k = datum.highest_short_coroot
    a = datum.cartan_matrix
    r = datum.rank
    sign = 1
    for _ in range(_MAX_STEPS):
        for i in range(r):
            if v[i] < 0:
                c = v[i]
                v = [v[t] - c * a[t][i] for t in range(r)]
                sign = -sign
                break
        else:
            if 0 in v:
                return StraightenResult("wall")
            q = sum(x * y for x, y in zip(v, k))
            if q == p:
                return StraightenResult("wall")
            if q < p:
                return StraightenResult("interior", tuple(x - 1 for x in v), sign)
            v = [x - (q - p) * y for x, y in zip(v, theta)]
            sign = -sign
    raise RuntimeError(f"straightening of {tuple(xi)} did not terminate")


def _require_alcove(datum, p, *weights):
    for w in weights:
        if len(w) != datum.rank or not in_alcove(datum, w, p):
            raise RootSystemError(f"{tuple(w)} is not in the fundamental alcove for p={p}")


def tensor_decompose(datum: RootDatum, lam: Sequence[int], mu: Sequence[int], p: int) -> dict[Weight, int]:
    """L(lam) (x) L(mu) in Ver_p(G) as {nu: multiplicity}."""
    lam, mu = tuple(lam), tuple(mu)
    _require_alcove(datum, p, lam, mu)
    buckets: dict[Weight, int] = defaultdict(int)
    for eta, m in dominant_character(datum, lam).weights(datum):
        res = straighten_dot(datum, [x + y for x, y in zip(mu, eta)], p)
        if res.status == "interior":
            buckets[res.target] += res.sign * m
    out = {}
    for nu, m in sorted(buckets.items()):
        if m < 0:
            raise AssertionError(f"negative fusion multiplicity {m} at {nu}")
        if m:
            out[nu] = m
    return out


def tensor_multiplicity(datum: RootDatum, lam, mu, nu, p: int) -> int:
    _require_alcove(datum, p, tuple(nu))
    return tensor_decompose(datum, lam, mu, p).get(tuple(nu), 0)


def dual_weight(datum: RootDatum, lam: Sequence[int]) -> Weight:
    """-w_0(lam): the dominant weight in the finite Weyl orbit of -lam."""
    return dominant_representative(datum, [-x for x in lam])


def invertibles(datum: RootDatum, p: int) -> list[Weight]:
    """Alcove weights mu with L(mu) invertible, found by brute force."""
    alcove = alcove_weights(datum, p)
    if p == datum.coxeter_number + 1:
        return alcove
    theta = datum.highest_long_root
    if not in_alcove(datum, theta, p):
        raise RootSystemError(f"theta_l is outside the alcove for p={p}")
    return [mu for mu in alcove if tensor_multiplicity(datum, theta, mu, mu, p) == 0]


def expected_invertibles(datum: RootDatum, p: int) -> list[Weight]:
    s = p - datum.coxeter_number
    return sorted(tuple(s * x for x in w) for w in datum.minuscule_list)


def dim_mod(datum: RootDatum, lam, p: int) -> int:
    return weyl_dimension(datum, lam) % p


# ---------------------------------------------------------------------------
# symmetries of the alcove from the minuscule table


def _apply_word(datum: RootDatum, word: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """Apply s_{w1} s_{w2} ... s_{wk} (1-based indices), rightmost letter first."""
    v = tuple(v)
    for i in reversed(word):
        v = datum.reflect(v, i - 1)
    return v


def sigma_dot(datum: RootDatum, p: int, varpi: Sequence[int], word: Sequence[int], lam: Sequence[int]) -> Weight:
    """(t_{p varpi} w) . lam = w(lam + rho) - rho + p varpi."""
    v = _apply_word(datum, word, [x + 1 for x in lam])
    return tuple(x - 1 + p * y for x, y in zip(v, varpi))


def verify_minuscule_symmetry(
    datum: RootDatum, p: int, varpi: Sequence[int], word: Sequence[int], spot_checks: int = 3
) -> bool:
    """sigma . A = A, sigma . 0 = (p-h) varpi, and L(sigma.lam) = L(sigma.0) (x) L(lam) on a few lam."""
    for i in word:
        if not 1 <= i <= datum.rank:
            raise RootSystemError(f"word letter {i} is not a simple reflection of {datum.name}")
    alcove = alcove_weights(datum, p)
    images = [sigma_dot(datum, p, varpi, word, lam) for lam in alcove]
    if sorted(images) != alcove:
        return False
    zero = sigma_dot(datum, p, varpi, word, (0,) * datum.rank)
    if zero != tuple((p - datum.coxeter_number) * x for x in varpi):
        return False
    if spot_checks <= 0:
        return True
    picks = sorted(set(alcove[:: max(1, len(alcove) // spot_checks)][:spot_checks] + [alcove[-1]]))
    for lam, img in zip(alcove, images):
        if lam in picks and tensor_decompose(datum, zero, lam, p) != {img: 1}:
            return False
    return True


def _classical_rows(datum: RootDatum) -> list[tuple[int, list[int]]]:
    r = datum.rank
    t = datum.type_label
    if t == "A":
        return [(i, list(range(1, r + 1)) * i) for i in range(1, r + 1)]
    if t == "B":
        word = []
        for i in range(r, 0, -1):
            word += list(range(i, r + 1))
        return [(r, word)]
    if t == "C":
        return [(1, list(range(1, r + 1)) + list(range(r - 1, 0, -1)))]
    if t == "D":

        def w(sign, i):
            return list(range(i, r - 1)) + [r if sign > 0 else r - 1]

        rows = [(1, list(range(1, r - 1)) + [r] + list(range(r - 1, 0, -1)))]
        for start, first in ((r - 1, 1), (r, -1)):
            word = [start]
            sign = first
            for i in range(r - 2, 0, -1):
                word += w(sign, i)
                sign = -sign
            rows.append((start, word))
        return rows
    return []


# words in the alternative node labels (see data/paper_labels.json)
_EXCEPTIONAL_ROWS = {
    "E6": [
        (1, [1, 2, 3, 4, 5, 6, 3, 2, 4, 3, 6, 1, 2, 3, 4, 5]),
        (5, [5, 4, 3, 2, 1, 6, 3, 2, 4, 3, 6, 5, 4, 3, 2, 1]),
    ],
    "E7": [
        (1, [1, 2, 3, 4, 5, 6, 7, 4, 5, 3, 4, 2, 1, 7, 3, 2, 4, 3, 5, 4, 7, 6, 5, 4, 3, 2, 1]),
    ],
}


def minuscule_table(datum: RootDatum) -> list[dict]:
    """Rows of the minuscule table for this datum, translated to Bourbaki labels."""
    rows = []
    if datum.type_label in _EXCEPTIONAL_ROWS:
        for label, word in _EXCEPTIONAL_ROWS[datum.type_label]:
            node = paper_to_bourbaki(datum, label)
            rows.append(
                {
                    "paper_label": label,
                    "node": node,
                    "paper_word": list(word),
                    "word": [paper_to_bourbaki(datum, i) for i in word],
                }
            )
    else:
        for node, word in _classical_rows(datum):
            rows.append({"paper_label": node, "node": node, "paper_word": word, "word": word})
    for row in rows:
        row["varpi"] = tuple(int(k == row["node"] - 1) for k in range(datum.rank))
    return rows
