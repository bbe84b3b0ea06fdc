"""Restriction to a principal SL2 and the induced functor Ver_p(G) -> Ver_p.

Two independent routes compute the image of a tilting SL2-module: peeling the
character into Weyl strings and cancelling negligible pairs, or evaluating the
character at a primitive p-th root of unity. Both are exposed so callers can
check one against the other.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from verlinde.charmod import DominantCharacter, dominant_character
from verlinde.rootsys import RootDatum, build_root_datum
from verlinde.verp import VerpError, VerpObject, _check_p


class ImageError(ValueError):
    pass


@dataclass(frozen=True)
class SL2Char:
    coeffs: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {w: m for w, m in sorted(self.coeffs.items()) if m})

    def dimension(self) -> int:
        return sum(self.coeffs.values())

    def is_symmetric(self) -> bool:
        return all(self.coeffs.get(-w) == m for w, m in self.coeffs.items())

    def parity_part(self, parity: int) -> "SL2Char":
        return SL2Char({w: m for w, m in self.coeffs.items() if w % 2 == parity})

    def __add__(self, other: "SL2Char") -> "SL2Char":
        total = Counter(self.coeffs)
        total.update(other.coeffs)
        return SL2Char(total)

    def __eq__(self, other) -> bool:
        return isinstance(other, SL2Char) and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))


@dataclass(frozen=True)
class WeylString:
    """Multiset of Weyl factors Delta_m, stored sorted."""

    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    def character(self) -> SL2Char:
        total = Counter()
        for m in self.factors:
            total.update(range(-m, m + 1, 2))
        return SL2Char(total)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


class CyclotomicInt:
    """Element of Z[w], w a primitive p-th root of unity, in the basis 1, w, ..., w^(p-2)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int]):
        c = list(coeffs)
        if len(c) == p:  # fold w^(p-1) = -(1 + w + ... + w^(p-2))
            top = c.pop()
            c = [x - top for x in c]
        if len(c) != p - 1:
            raise ValueError(f"need {p - 1} coefficients, got {len(c)}")
        self.p = p
        self.coeffs = tuple(c)

    @classmethod
    def from_exponents(cls, p: int, terms: Mapping[int, int]) -> "CyclotomicInt":
        v = [0] * p
        for e, c in terms.items():
            v[e % p] += c
        return cls(p, v)

    @classmethod
    def one(cls, p: int) -> "CyclotomicInt":
        return cls.from_exponents(p, {0: 1})

    @classmethod
    def omega(cls, p: int, k: int = 1) -> "CyclotomicInt":
        return cls.from_exponents(p, {k: 1})

    def _full(self) -> list[int]:
        return list(self.coeffs) + [0]

    def __add__(self, other):
        return CyclotomicInt(self.p, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CyclotomicInt(self.p, (-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.p, (a * other for a in self.coeffs))
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % p] += a * b
        return CyclotomicInt(p, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, CyclotomicInt) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        return f"CyclotomicInt(p={self.p}, {list(self.coeffs)})"


def character_at_root(chi: SL2Char, p: int) -> CyclotomicInt:
    return CyclotomicInt.from_exponents(p, chi.coeffs)


def restrict_principal(datum: RootDatum, chi: DominantCharacter) -> SL2Char:
    vec = datum.principal_vector
    total = Counter()
    for x, m in chi.weights(datum):
        total[sum(a * b for a, b in zip(x, vec))] += m
    return SL2Char(total)


def string_counts(chi: SL2Char) -> Counter:
    """Multiplicity of each Weyl factor Delta_m, peeled off the top of a symmetric character."""
    if not chi.is_symmetric():
        raise ImageError("character is not symmetric under w -> -w")
    residual = Counter(chi.coeffs)
    counts = Counter()
    for top in sorted((w for w in chi.coeffs if w >= 0), reverse=True):
        k = residual[top]
        if k < 0:
            raise ImageError("not a non-negative Weyl-string decomposition")
        if k == 0:
            continue
        counts[top] = k
        for w in range(top, -top - 1, -2):
            residual[w] -= k
            if residual[w] < 0:
                raise ImageError("not a non-negative Weyl-string decomposition")
    if any(residual.values()):
        raise ImageError("not a non-negative Weyl-string decomposition")
    return counts


def weyl_strings(chi: SL2Char) -> WeylString:
    """Peel Weyl strings off the top of a symmetric character."""
    counts = string_counts(chi)
    return WeylString(tuple(m for m in sorted(counts) for _ in range(counts[m])))


def verp_image(strings: WeylString | Mapping[int, int] | Iterable[int], p: int) -> VerpObject:
    """Drop Delta_{ap-1}, cancel negligible pairs largest first, read off the rest.

    ``strings`` is a multiset of factor indices, either listed or as a count map.
    """
    _check_p(p)
    items = strings.items() if isinstance(strings, Mapping) else Counter(strings).items()
    counts = Counter({m: k for m, k in items if k and (m + 1) % p != 0})
    while counts:
        m = max(counts)
        if m <= p - 2:
            break
        a, b = divmod(m + 1, p)
        partner = a * p - b - 1
        k = counts[m]
        if counts[partner] < k:
            raise ImageError(
                f"character not realizable as tilting image: Delta_{m} has no partner Delta_{partner}"
            )
        del counts[m]
        counts[partner] -= k
        if counts[partner] == 0:
            del counts[partner]
    return VerpObject.from_dict(p, counts)


def verp_image_cyclotomic(chi: SL2Char, p: int) -> VerpObject:
    """Image in Ver_p from the value of the character at a primitive p-th root of unity.

    The value alone cannot separate L_c from L_{p-2-c} (their contributions
    differ by a sign), so each weight-parity class is solved separately: a
    tilting module in one class only has summands L_c of that parity.
    """
    _check_p(p)
    out = [0] * (p - 1)
    half = (p - 1) // 2
    for parity in (0, 1):
        part = chi.parity_part(parity)
        if not part.coeffs:
            continue
        v = [0] * p
        for w, c in part.coeffs.items():
            v[(w + 1) % p] += c
            v[(w - 1) % p] -= c
        # normalise modulo the all-ones relation so the w^0 slot vanishes
        v = [x - v[0] for x in v]
        # basis b_c = w^(c+1) - w^(-c-1), c < half, occupies slots c+1 and p-c-1
        e = [v[c + 1] for c in range(half)]
        residual = v[:]
        for c in range(half):
            residual[c + 1] -= e[c]
            residual[p - c - 1] += e[c]
        if any(residual):
            raise ImageError("cyclotomic value is not in the span of the simples")
        for c in range(half):
            if e[c] == 0:
                continue
            if c % 2 == parity:
                target, value = c, e[c]
            else:
                target, value = p - 2 - c, -e[c]
            if value < 0:
                raise ImageError(f"negative multiplicity {value} for L_{target}")
            out[target] += value
    return VerpObject(p, tuple(out))


def image_of(datum: RootDatum, weight, p: int) -> tuple[WeylString, VerpObject]:
    chi = restrict_principal(datum, dominant_character(datum, weight))
    strings = weyl_strings(chi)
    return strings, verp_image(strings, p)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, int(n**0.5) + 1))


def halfspin_image(r: int) -> int:
    """Index c with L(w_r) of type D_r mapping to L_c in Ver_{2r+1}.

    D_3 is A_3, whose half-spin representations are the natural one and its dual.
    """
    p = 2 * r + 1
    if not _is_prime(p) or p < 7:
        raise VerpError(f"2r+1={p} must be a prime >= 7")
    if r == 3:
        datum = build_root_datum("A", 3)
        weight = (1, 0, 0)
    else:
        datum = build_root_datum("D", r)
        weight = tuple(int(i == r - 1) for i in range(r))
    _, image = image_of(datum, weight, p)
    support = image.as_dict()
    if len(support) != 1 or next(iter(support.values())) != 1:
        raise ImageError(f"half-spin image {image} is not simple")
    return next(iter(support))


def halfspin_expected(r: int) -> int:
    return r - 1 if r % 4 in (1, 2) else r
