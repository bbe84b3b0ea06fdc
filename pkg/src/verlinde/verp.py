"""The fusion ring of Ver_p = Ver_p(SL2), plethysm and the invariants m, n, N."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from verlinde import _kernels

# int64 is safe while every coefficient of e_d / h_d stays below this
_INT64_SAFE = 1 << 62


class VerpError(ValueError):
    pass


def _check_p(p: int) -> None:
    if p < 5 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise VerpError(f"p={p} must be a prime >= 5")


@dataclass(frozen=True)
class VerpObject:
    """Multiplicities of the simples L_0, ..., L_{p-2}."""

    p: int
    mult: tuple[int, ...]

    def __post_init__(self):
        _check_p(self.p)
        if len(self.mult) != self.p - 1:
            raise VerpError(f"expected {self.p - 1} multiplicities, got {len(self.mult)}")
        if any(m < 0 for m in self.mult):
            raise VerpError(f"negative multiplicity in {self.mult}")

    @classmethod
    def zero(cls, p: int) -> "VerpObject":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def simple(cls, p: int, c: int) -> "VerpObject":
        if not 0 <= c <= p - 2:
            raise VerpError(f"L_{c} does not exist in Ver_{p}")
        return cls(p, tuple(int(k == c) for k in range(p - 1)))

    @classmethod
    def from_dict(cls, p: int, entries: Mapping[int, int]) -> "VerpObject":
        mult = [0] * (p - 1)
        for c, m in entries.items():
            if not 0 <= c <= p - 2:
                raise VerpError(f"L_{c} does not exist in Ver_{p}")
            mult[c] += m
        return cls(p, tuple(mult))

    def as_dict(self) -> dict[int, int]:
        return {c: m for c, m in enumerate(self.mult) if m}

    def is_zero(self) -> bool:
        return not any(self.mult)

    def is_simple(self) -> bool:
        return sum(self.mult) == 1

    def is_invertible(self) -> bool:
        d = self.as_dict()
        return len(d) == 1 and next(iter(d)) in (0, self.p - 2) and next(iter(d.values())) == 1

    def __add__(self, other: "VerpObject") -> "VerpObject":
        _same_p(self, other)
        return VerpObject(self.p, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __mul__(self, other: "VerpObject") -> "VerpObject":
        _same_p(self, other)
        out = [0] * (self.p - 1)
        for a, ma in self.as_dict().items():
            for b, mb in other.as_dict().items():
                for c in _fusion_range(a, b, self.p):
                    out[c] += ma * mb
        return VerpObject(self.p, tuple(out))

    def __str__(self) -> str:
        parts = []
        for c, m in self.as_dict().items():
            parts.append(f"L_{c}" if m == 1 else f"{m}*L_{c}")
        return " + ".join(parts) if parts else "0"


def _same_p(x: VerpObject, y: VerpObject) -> None:
    if x.p != y.p:
        raise VerpError(f"objects live in Ver_{x.p} and Ver_{y.p}")


def _fusion_range(a: int, b: int, p: int) -> range:
    return range(abs(a - b), min(a + b, 2 * p - 4 - a - b) + 1, 2)


def fuse(a: int, b: int, p: int) -> VerpObject:
    """L_a (x) L_b in Ver_p."""
    _check_p(p)
    for x in (a, b):
        if not 0 <= x <= p - 2:
            raise VerpError(f"index {x} outside 0..{p - 2}")
    return VerpObject.from_dict(p, {c: 1 for c in _fusion_range(a, b, p)})


def dim_mod_p(x: VerpObject) -> int:
    return sum(m * (c + 1) for c, m in enumerate(x.mult)) % x.p


def integer_dim(x: VerpObject) -> int:
    """Dimension of the lift to tilting modules, sum of mult[c] * (c + 1)."""
    return sum(m * (c + 1) for c, m in enumerate(x.mult))


def _lifted_weights(x: VerpObject) -> list[int]:
    out = []
    for c, m in x.as_dict().items():
        out.extend(list(range(c, -c - 1, -2)) * m)
    return out


def sym_ext_power(x: VerpObject, d: int, kind: str) -> VerpObject:
    """Sym^d X (kind "sym") or Lambda^d X (kind "ext") for 1 <= d <= p-1."""
    from verlinde.principal import SL2Char, string_counts, verp_image

    if kind not in ("sym", "ext"):
        raise VerpError(f"kind must be 'sym' or 'ext', not {kind!r}")
    if d <= 0:
        raise VerpError(f"degree {d} must be positive")
    if d >= x.p:
        raise VerpError(f"degree out of validity range: d={d} >= p={x.p}")
    weights = _lifted_weights(x)
    size = len(weights)
    bound = comb(size + d - 1, d) if kind == "sym" else comb(size, d)
    code = 0 if kind == "ext" else 1
    coeffs, off = _kernels.power_char(weights, d, code, exact=bound >= _INT64_SAFE)
    char = SL2Char({e - off: int(c) for e, c in enumerate(coeffs) if c})
    return verp_image(string_counts(char), x.p)


@dataclass(frozen=True)
class Profile:
    """Invariants of X; ``None`` in m or n means "at least p-1, undetermined"."""

    m: int | None
    n: int | None
    N: int | None
    top_ext_parity: str | None  # "even" or "odd", known once n is

    def describe(self) -> dict:
        return {
            "m": self.m if self.m is not None else ">=p-1",
            "n": self.n if self.n is not None else ">=p-1",
            "N": self.N,
            "top_ext_parity": self.top_ext_parity,
        }


def _top_degree(x: VerpObject, kind: str) -> int | None:
    for d in range(1, x.p):
        if sym_ext_power(x, d, kind).is_zero():
            return d - 1
    return None


def invariants_profile(x: VerpObject) -> Profile:
    if x.is_zero():
        raise VerpError("the zero object has no invariants")
    m = _top_degree(x, "sym")
    n = _top_degree(x, "ext")
    parity = None
    if n is not None:
        top = sym_ext_power(x, n, "ext") if n > 0 else VerpObject.simple(x.p, 0)
        dim = dim_mod_p(top)
        if dim == 1:
            parity = "even"
        elif dim == x.p - 1:
            parity = "odd"
    total = m + n if m is not None and n is not None else None
    return Profile(m, n, total, parity)


def fusion_table(p: int) -> dict[tuple[int, int], VerpObject]:
    return {(a, b): fuse(a, b, p) for a in range(p - 1) for b in range(p - 1)}


def direct_sum(objects: Iterable[VerpObject], p: int) -> VerpObject:
    total = Counter()
    for x in objects:
        total.update(x.as_dict())
    return VerpObject.from_dict(p, total)
