"""Root data of the simple types A-G in Bourbaki numbering.

Weights are integer tuples in fundamental-weight coordinates, so the pairing of
a weight with the i-th simple coroot is just its i-th entry. Roots are stored
twice: in simple-root coordinates and, for their coroots, in simple-coroot
coordinates. No floating point is used anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import product
from typing import Sequence

Weight = tuple[int, ...]

EXCEPTIONAL_RANKS = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
MIN_CLASSICAL_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
TYPE_LABELS = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class PositiveRoot:
    root: tuple[int, ...]  # simple-root coordinates
    coroot: tuple[int, ...]  # simple-coroot coordinates of the coroot

    @property
    def height(self) -> int:
        return sum(self.root)


@dataclass(frozen=True)
class RootDatum:
    type_label: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[PositiveRoot, ...]
    rho: Weight
    highest_long_root: Weight
    highest_short_coroot: tuple[int, ...]
    coxeter_number: int
    fundamental_group_order: int
    minuscule_list: tuple[Weight, ...]
    # derived tables, not part of the canonical dump
    root_lengths: tuple[int, ...] = field(repr=False, default=())
    highest_short_root: Weight = field(repr=False, default=())
    principal_vector: tuple[int, ...] = field(repr=False, default=())

    @property
    def name(self) -> str:
        if self.type_label in EXCEPTIONAL_RANKS:
            return self.type_label
        return f"{self.type_label}{self.rank}"

    def simple_root(self, i: int) -> Weight:
        """Fundamental-weight coordinates of the simple root alpha_i (0-based)."""
        return tuple(self.cartan_matrix[k][i] for k in range(self.rank))

    def root_weight(self, root: Sequence[int]) -> Weight:
        """Fundamental-weight coordinates of a root given in simple-root coordinates."""
        a = self.cartan_matrix
        return tuple(sum(a[k][j] * root[j] for j in range(self.rank)) for k in range(self.rank))

    def reflect(self, weight: Sequence[int], i: int) -> Weight:
        c = weight[i]
        if c == 0:
            return tuple(weight)
        a = self.cartan_matrix
        return tuple(weight[k] - c * a[k][i] for k in range(self.rank))

    def inner(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """Invariant form on weights, normalised so short roots have length 2."""
        g = _weight_gram(self)
        return Fraction(
            sum(x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)),
            _gram_scale(self),
        )

    def to_json(self) -> str:
        payload = {
            "type_label": self.type_label,
            "rank": self.rank,
            "cartan_matrix": [list(row) for row in self.cartan_matrix],
            "positive_roots": [
                {"root": list(r.root), "coroot": list(r.coroot)} for r in self.positive_roots
            ],
            "rho": list(self.rho),
            "highest_long_root": list(self.highest_long_root),
            "highest_short_coroot": list(self.highest_short_coroot),
            "coxeter_number": self.coxeter_number,
            "fundamental_group_order": self.fundamental_group_order,
            "minuscule_list": [list(w) for w in self.minuscule_list],
        }
        return json.dumps(payload, separators=(",", ":"))


def _normalise(type_label: str, rank: int | None) -> tuple[str, int]:
    label = type_label.strip().upper()
    if label == "E" and rank in (6, 7, 8):
        label = f"E{rank}"
    if label in ("F", "G") and rank is not None:
        label = f"{label}{rank}"
    if label in EXCEPTIONAL_RANKS:
        expected = EXCEPTIONAL_RANKS[label]
        if rank is not None and rank != expected:
            raise RootSystemError(f"type {label} has rank {expected}, not {rank}")
        return label, expected
    if label not in MIN_CLASSICAL_RANK:
        raise RootSystemError(f"unknown Cartan type {type_label!r}")
    if rank is None:
        raise RootSystemError(f"type {label} needs an explicit rank")
    if rank < MIN_CLASSICAL_RANK[label]:
        raise RootSystemError(
            f"type {label} requires rank >= {MIN_CLASSICAL_RANK[label]}, got {rank}"
        )
    return label, rank


def _gram_matrix(label: str, r: int) -> list[list[int]]:
    """Symmetric matrix (alpha_i, alpha_j) with short roots of squared length 2."""
    g = [[0] * r for _ in range(r)]

    def link(i: int, j: int, value: int) -> None:
        g[i][j] = g[j][i] = value

    if label == "A":
        for i in range(r):
            g[i][i] = 2
        for i in range(r - 1):
            link(i, i + 1, -1)
    elif label == "B":
        for i in range(r):
            g[i][i] = 4
        g[r - 1][r - 1] = 2
        for i in range(r - 1):
            link(i, i + 1, -2)
    elif label == "C":
        for i in range(r):
            g[i][i] = 2
        g[r - 1][r - 1] = 4
        for i in range(r - 1):
            link(i, i + 1, -1)
        link(r - 2, r - 1, -2)
    elif label == "D":
        for i in range(r):
            g[i][i] = 2
        for i in range(r - 2):
            link(i, i + 1, -1)
        link(r - 3, r - 1, -1)
    elif label.startswith("E"):
        for i in range(r):
            g[i][i] = 2
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, r - 1):
            link(i, i + 1, -1)
    elif label == "F4":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        link(0, 1, -2)
        link(1, 2, -2)
        link(2, 3, -1)
    elif label == "G2":
        g[0][0] = 2
        g[1][1] = 6
        link(0, 1, -3)
    return g


def _positive_roots(cartan: list[list[int]], lengths: list[int]) -> list[PositiveRoot]:
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # <beta, alpha_i^vee> = sum_j beta_j A_ij
                pairing = sum(beta[j] * cartan[i][j] for j in range(r))
                down = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in found:
                        down += 1
                    else:
                        break
                if down - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    roots = sorted(found, key=lambda c: (sum(c), c))
    result = []
    for c in roots:
        # (alpha, alpha)/2 in units where short simple roots give 1
        norm2 = sum(c[i] * c[j] * lengths[i] * cartan[i][j] for i in range(r) for j in range(r))
        assert norm2 % 2 == 0
        length = norm2 // 2
        coroot = []
        for i in range(r):
            num = c[i] * lengths[i]
            assert num % length == 0
            coroot.append(num // length)
        result.append(PositiveRoot(root=c, coroot=tuple(coroot)))
    return result


def _det(m: list[list[int]]) -> int:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((row for row in range(col, n) if a[row][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for row in range(col + 1, n):
            f = a[row][col] / a[col][col]
            for k in range(col, n):
                a[row][k] -= f * a[col][k]
    assert det.denominator == 1
    return int(det)


@lru_cache(maxsize=None)
def build_root_datum(type_label: str, rank: int | None = None) -> RootDatum:
    """Construct the root datum of a simple type.

    >>> build_root_datum("G2").coxeter_number
    6
    """
    label, r = _normalise(type_label, rank)
    family = "E" if label.startswith("E") else label
    gram = _gram_matrix(family if family != "E" else label, r)
    cartan = [[2 * gram[i][j] // gram[i][i] for j in range(r)] for i in range(r)]
    lengths = [gram[i][i] // 2 for i in range(r)]
    roots = _positive_roots(cartan, lengths)

    def to_weight(c):
        return tuple(sum(cartan[k][j] * c[j] for j in range(r)) for k in range(r))

    top = max(roots, key=lambda x: x.height)
    short = [x for x in roots if _root_length(x, cartan, lengths) == 1]
    top_short = max(short, key=lambda x: x.height)
    theta_s_coroot = top_short.coroot
    h = 1 + top.height
    if 1 + sum(theta_s_coroot) != h:
        raise AssertionError(f"Coxeter number mismatch for {label}{r}")
    order = _det(cartan)
    minuscule = [tuple([0] * r)]
    for i in range(r):
        if theta_s_coroot[i] == 1:
            minuscule.append(tuple(int(k == i) for k in range(r)))
    principal = tuple(sum(x.coroot[i] for x in roots) for i in range(r))
    return RootDatum(
        type_label=label if label in EXCEPTIONAL_RANKS else family,
        rank=r,
        cartan_matrix=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(roots),
        rho=tuple([1] * r),
        highest_long_root=to_weight(top.root),
        highest_short_coroot=tuple(theta_s_coroot),
        coxeter_number=h,
        fundamental_group_order=order,
        minuscule_list=tuple(minuscule),
        root_lengths=tuple(lengths),
        highest_short_root=to_weight(top_short.root),
        principal_vector=principal,
    )


def _root_length(x: PositiveRoot, cartan, lengths) -> int:
    r = len(cartan)
    c = x.root
    return sum(c[i] * c[j] * lengths[i] * cartan[i][j] for i in range(r) for j in range(r)) // 2


@lru_cache(maxsize=None)
def _weight_gram(datum: RootDatum) -> tuple[tuple[int, ...], ...]:
    # (w_i, w_j) = (A^{-1})_{ij} * l_i, scaled by det(A) to stay integral
    r = datum.rank
    a = [[Fraction(x) for x in row] for row in datum.cartan_matrix]
    inv = _invert(a)
    d = datum.fundamental_group_order
    g = [[inv[i][j] * datum.root_lengths[i] * d for j in range(r)] for i in range(r)]
    for row in g:
        for x in row:
            assert x.denominator == 1
    return tuple(tuple(int(x) for x in row) for row in g)


def _gram_scale(datum: RootDatum) -> int:
    return datum.fundamental_group_order


def _invert(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    m = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(row for row in range(col, n) if m[row][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        f = m[col][col]
        m[col] = [x / f for x in m[col]]
        for row in range(n):
            if row != col and m[row][col] != 0:
                g = m[row][col]
                m[row] = [x - g * y for x, y in zip(m[row], m[col])]
    return [row[n:] for row in m]


def pair(datum: RootDatum, weight: Sequence[int], coroot: Sequence[int]) -> int:
    """<weight, coroot> for a coroot in simple-coroot coordinates."""
    if len(weight) != datum.rank or len(coroot) != datum.rank:
        raise RootSystemError(
            f"dimension mismatch: rank {datum.rank}, got {len(weight)} and {len(coroot)}"
        )
    return sum(w * c for w, c in zip(weight, coroot))


def minuscule_weights(datum: RootDatum) -> list[Weight]:
    return list(datum.minuscule_list)


def fundamental_weight(datum: RootDatum, i: int) -> Weight:
    """Fundamental weight for a 1-based Bourbaki index."""
    if not 1 <= i <= datum.rank:
        raise RootSystemError(f"fundamental weight index {i} out of range for {datum.name}")
    return tuple(int(k == i - 1) for k in range(datum.rank))


def is_dominant(weight: Sequence[int]) -> bool:
    return all(c >= 0 for c in weight)


def in_alcove(datum: RootDatum, weight: Sequence[int], p: int) -> bool:
    return is_dominant(weight) and pair(datum, weight, datum.highest_short_coroot) <= p - datum.coxeter_number


def alcove_weights(datum: RootDatum, p: int) -> list[Weight]:
    """Dominant weights with <lambda, theta_s^vee> <= p - h, sorted lexicographically."""
    h = datum.coxeter_number
    if p <= h:
        raise RootSystemError(f"p={p} must exceed the Coxeter number h={h} of {datum.name}")
    bound = p - h
    k = datum.highest_short_coroot
    ranges = [range(bound // k[i] + 1) for i in range(datum.rank)]
    out = [w for w in product(*ranges) if sum(a * b for a, b in zip(w, k)) <= bound]
    return sorted(out)


@lru_cache(maxsize=1)
def _label_table() -> dict[str, dict[int, int]]:
    raw = json.loads(resources.files("verlinde").joinpath("data/paper_labels.json").read_text())
    return {t: {int(k): v for k, v in m.items()} for t, m in raw.items() if not t.startswith("_")}


def paper_to_bourbaki(datum: RootDatum, index: int) -> int:
    """Translate a 1-based node label from the alternative labelling to Bourbaki."""
    if not 1 <= index <= datum.rank:
        raise RootSystemError(f"node label {index} out of range for {datum.name}")
    return _label_table().get(datum.type_label, {}).get(index, index)


def bourbaki_to_paper(datum: RootDatum, index: int) -> int:
    table = _label_table().get(datum.type_label, {})
    for k, v in table.items():
        if v == index:
            return k
    return index
