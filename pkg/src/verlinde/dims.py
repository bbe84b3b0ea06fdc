"""Mod-p dimension series of symmetric and exterior powers and divisibility of N(X)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ModPSeries:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [x % self.p for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs


def _poly_mul(a: list[int], b: list[int], p: int, cap: int | None) -> list[int]:
    n = len(a) + len(b) - 1
    if cap is not None:
        n = min(n, cap + 1)
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j in range(min(len(b), n - i)):
                out[i + j] = (out[i + j] + x * b[j]) % p
    return out


def _binomial_power(exponent: int, sign: int, p: int, cap: int | None = None) -> ModPSeries:
    """(1 + sign*t)^exponent in F_p[t], truncated above t^cap when cap is given."""
    result, base = [1], [1, sign % p]
    e = exponent
    while e:
        if e & 1:
            result = _poly_mul(result, base, p, cap)
        e >>= 1
        if e:
            base = _poly_mul(base, base, p, cap)
    return ModPSeries(p, tuple(result))


def power_series(m: int, n: int, p: int) -> tuple[ModPSeries, ModPSeries, ModPSeries]:
    """Coefficients of (1-t)^m, (1+t)^n and (1+t)^(m+n) in F_p[t]."""
    if m < 0 or n < 0:
        raise ValueError("exponents must be non-negative")
    return _binomial_power(m, -1, p), _binomial_power(n, 1, p), _binomial_power(m + n, 1, p)


def lucas_binomial(a: int, b: int, p: int) -> int:
    """C(a, b) mod p digit by digit."""
    out = 1
    while a or b:
        x, y = a % p, b % p
        if y > x:
            return 0
        num = den = 1
        for t in range(y):
            num = num * (x - t) % p
            den = den * (t + 1) % p
        out = out * num * pow(den, -1, p) % p
        a //= p
        b //= p
    return out


def divisibility_check(m: int, n: int, p: int, r: int) -> bool:
    """All coefficients of t^d, 0 < d <= p^r, in (1+t)^(m+n) vanish mod p."""
    if r < 0:
        raise ValueError("r must be non-negative")
    total = _binomial_power(m + n, 1, p, cap=p**r)
    return all(total[d] == 0 for d in range(1, p**r + 1))


def divisibility_check_lucas(m: int, n: int, p: int, r: int) -> bool:
    return all(lucas_binomial(m + n, d, p) == 0 for d in range(1, p**r + 1))


def p_adic_divides(m: int, n: int, p: int, r: int) -> bool:
    return (m + n) % p ** (r + 1) == 0


# (m, n) values computed in the small non-semisimple categories Ver_4, Ver_8, Ver_9;
# stored as test vectors only, since recomputing them needs those categories
SMALL_CATEGORY_DATA = (
    {"category": "Ver_4", "p": 2, "object": "L_1", "m": 2, "n": 2},
    {"category": "Ver_8", "p": 2, "object": "L_1", "m": 6, "n": 2},
    {"category": "Ver_8", "p": 2, "object": "L_3", "m": 4, "n": 4},
    {"category": "Ver_9", "p": 3, "object": "L_1", "m": 7, "n": 2},
    {"category": "Ver_9", "p": 3, "object": "L_2", "m": 6, "n": 3},
    {"category": "Ver_9", "p": 3, "object": "L_4", "m": 2, "n": 7},
    {"category": "Ver_9", "p": 3, "object": "L_5", "m": 3, "n": 6},
    {"category": "Ver_9", "p": 3, "object": "E_1^*", "m": 4, "n": 5},
)


def binomial_rows(p: int, n_max: int, cap: int):
    """Yield (N, coeffs of (1+t)^N mod p up to t^cap) for N = 0..n_max, one multiplication per step."""
    row = [1] + [0] * cap
    for n in range(n_max + 1):
        yield n, row
        row = [row[0]] + [(row[d] + row[d - 1]) % p for d in range(1, cap + 1)]
