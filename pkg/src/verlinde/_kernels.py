"""Hot inner loops, each in a numba-compiled and a plain numpy flavour.

The numba path is used when numba imports and ``VERLINDE_NO_NUMBA`` is unset
(or "0"). Both flavours are importable directly so tests and the benchmark can
compare them; the public names at the bottom dispatch on the flag.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover
    numba = None
    NUMBA_AVAILABLE = False


def numba_enabled() -> bool:
    return NUMBA_AVAILABLE and os.environ.get("VERLINDE_NO_NUMBA", "0") in ("", "0")


def _njit(*args, **kwargs):
    if NUMBA_AVAILABLE:
        return numba.njit(*args, cache=True, nogil=True, **kwargs)
    return lambda f: f


def binomial_table_mod(p: int) -> np.ndarray:
    """Pascal triangle mod p for arguments below p; zero when b > a."""
    t = np.zeros((p, p), dtype=np.int64)
    t[:, 0] = 1
    for a in range(1, p):
        t[a, 1 : a + 1] = (t[a - 1, 1 : a + 1] + t[a - 1, 0:a]) % p
    return t


# ---------------------------------------------------------------------------
# bracket support of sl(L_{n-1}): S(n,i,j,k) mod p for every triple
#
# The top binomial C(t+n, i+j+k+1) has lower index below p, so by Lucas it
# reduces to C((t+n) mod p, i+j+k+1).


@_njit()
def _support_table_numba(n, p, binom):
    out = np.zeros((n, n, n), dtype=np.bool_)
    for i in range(1, n):
        for j in range(1, n):
            for k in range(1, n):
                s = i + j + k
                if s % 2 == 0 or s > p - 2:
                    continue
                if k < abs(i - j) or k > i + j:
                    continue
                lo = max(max(i, j), max(k, s - n + 1))
                hi = min(min(i + j, i + k), j + k)
                acc = 0
                for t in range(lo, hi + 1):
                    term = binom[(t + n) % p, s + 1]
                    term = term * binom[i, t - j] % p
                    term = term * binom[j, t - k] % p
                    term = term * binom[k, t - i] % p
                    if t % 2 == 1:
                        acc -= term
                    else:
                        acc += term
                out[i, j, k] = acc % p != 0
    return out


def _support_table_numpy(n, p, binom):
    out = np.zeros((n, n, n), dtype=np.bool_)
    if n < 2:
        return out
    ar = np.arange(1, n)
    i, j, k = (a.ravel() for a in np.meshgrid(ar, ar, ar, indexing="ij"))
    s = i + j + k
    ok = (s % 2 == 1) & (s <= p - 2) & (k >= np.abs(i - j)) & (k <= i + j)
    i, j, k, s = i[ok], j[ok], k[ok], s[ok]
    if i.size == 0:
        return out
    lo = np.maximum(np.maximum(i, j), np.maximum(k, s - n + 1))
    hi = np.minimum(np.minimum(i + j, i + k), j + k)
    acc = np.zeros(i.size, dtype=np.int64)
    for t in range(int(lo.min()), int(hi.max()) + 1):
        live = (t >= lo) & (t <= hi)
        # clip keeps fancy indexing in range; dead lanes are masked below
        term = binom[(t + n) % p, np.minimum(s + 1, p - 1)]
        term = term * binom[i, np.clip(t - j, 0, p - 1)] % p
        term = term * binom[j, np.clip(t - k, 0, p - 1)] % p
        term = term * binom[k, np.clip(t - i, 0, p - 1)] % p
        term = np.where(live, term, 0)
        acc += -term if t % 2 else term
    out[i, j, k] = acc % p != 0
    return out


# ---------------------------------------------------------------------------
# exhaustive scan: which subsets of {1..n-1} containing 1 are bracket-closed
#
# forced[i, j] is the bitmask of indices k with a non-zero component
# L_2i (x) L_2j -> L_2k; bit b stands for the summand L_2b.


@_njit()
def _closed_masks_numba(forced, n):
    free = n - 2
    count = 0
    hits = np.empty(1 << max(free, 0), dtype=np.int64)
    for m in range(1 << max(free, 0)):
        subset = 2 | (m << 2)
        closed = True
        for a in range(1, n):
            if not (subset >> a) & 1:
                continue
            for b in range(1, n):
                if (subset >> b) & 1 and forced[a, b] & ~subset:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            hits[count] = subset
            count += 1
    return hits[:count]


def _closed_masks_numpy(forced, n):
    free = max(n - 2, 0)
    subsets = 2 | (np.arange(1 << free, dtype=np.int64) << 2)
    closed = np.ones(subsets.size, dtype=np.bool_)
    for a in range(1, n):
        has_a = (subsets >> a) & 1
        for b in range(1, n):
            f = int(forced[a, b])
            if f == 0:
                continue
            has_ab = has_a & ((subsets >> b) & 1)
            closed &= ~((has_ab == 1) & ((f & ~subsets) != 0))
    return subsets[closed]


# ---------------------------------------------------------------------------
# plethysm: elementary (kind 0) or complete homogeneous (kind 1) symmetric
# polynomial of degree d in the monomials x^w, as a Laurent coefficient array
# with offset d * max|w|.


@_njit()
def _power_char_numba(weights, d, kind):
    span = 0
    for w in weights:
        span = max(span, abs(w))
    off = d * span
    size = 2 * off + 1
    table = np.zeros((d + 1, size), dtype=np.int64)
    table[0, off] = 1
    for w in weights:
        if kind == 0:
            for deg in range(d, 0, -1):
                src = table[deg - 1]
                dst = table[deg]
                for e in range(size):
                    c = src[e]
                    if c != 0:
                        dst[e + w] += c
        else:
            for deg in range(1, d + 1):
                src = table[deg - 1]
                dst = table[deg]
                for e in range(size):
                    c = src[e]
                    if c != 0:
                        dst[e + w] += c
    return table[d], off


def _power_char_numpy(weights, d, kind, dtype=np.int64):
    weights = np.asarray(weights, dtype=np.int64)
    span = int(np.abs(weights).max()) if weights.size else 0
    off = d * span
    size = 2 * off + 1
    table = np.zeros((d + 1, size), dtype=dtype)
    table[0, off] = 1
    degrees = range(d, 0, -1) if kind == 0 else range(1, d + 1)
    for w in weights.tolist():
        for deg in degrees:
            src = table[deg - 1]
            # entries of src within `span * (deg - 1)` of the centre are the only non-zero ones
            if w >= 0:
                table[deg, w:] += src[: size - w]
            else:
                table[deg, :w] += src[-w:]
    return table[d], off


# ---------------------------------------------------------------------------
# dispatch


def support_table(n: int, p: int) -> np.ndarray:
    binom = binomial_table_mod(p)
    if numba_enabled():
        return _support_table_numba(n, p, binom)
    return _support_table_numpy(n, p, binom)


def closed_masks(forced: np.ndarray, n: int) -> np.ndarray:
    forced = np.ascontiguousarray(forced, dtype=np.int64)
    if numba_enabled():
        return _closed_masks_numba(forced, n)
    return _closed_masks_numpy(forced, n)


def power_char(weights, d: int, kind: int, exact: bool = False):
    """Returns (coefficients, offset). ``exact`` forces Python integers."""
    if exact:
        return _power_char_numpy(weights, d, kind, dtype=object)
    w = np.asarray(weights, dtype=np.int64)
    if numba_enabled():
        return _power_char_numba(w, d, kind)
    return _power_char_numpy(w, d, kind)
