"""Weight multiplicities of simple modules via Freudenthal's recursion.

Only the lowest alcove is supported by callers: there p > h makes L(lambda)
coincide with the Weyl module, so the characteristic-zero character is the
right one.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterator, Sequence

from verlinde import cache
from verlinde.rootsys import RootDatum, RootSystemError, Weight, _weight_gram


@dataclass(frozen=True)
class DominantCharacter:
    highest_weight: Weight
    entries: dict  # dominant weight -> multiplicity

    def dimension(self, datum: RootDatum) -> int:
        return sum(m * len(weyl_orbit(datum, mu)) for mu, m in self.entries.items())

    def weights(self, datum: RootDatum) -> Iterator[tuple[Weight, int]]:
        """All weights with multiplicity, orbits expanded."""
        for mu, m in self.entries.items():
            for x in weyl_orbit(datum, mu):
                yield x, m


_memo: dict[tuple[str, int, Weight], dict] = {}
_memo_lock = threading.Lock()
_disk_loaded = False


def _lookup(key):
    global _disk_loaded
    with _memo_lock:
        if not _disk_loaded:
            for k, v in cache.load().items():
                _memo.setdefault(k, v)
            _disk_loaded = True
        return _memo.get(key)


def _insert(key, entries) -> dict:
    with _memo_lock:
        existing = _memo.get(key)
        if existing is not None:
            return existing
        _memo[key] = entries
    cache.store(key[0], key[1], key[2], entries)
    return entries


def clear_memo() -> None:
    global _disk_loaded
    with _memo_lock:
        _memo.clear()
        _disk_loaded = False


def dominant_representative(datum: RootDatum, weight: Sequence[int]) -> Weight:
    w = tuple(weight)
    while True:
        for i, c in enumerate(w):
            if c < 0:
                w = datum.reflect(w, i)
                break
        else:
            return w


@lru_cache(maxsize=4096)
def weyl_orbit(datum: RootDatum, weight: Weight) -> tuple[Weight, ...]:
    seen = {weight}
    stack = [weight]
    while stack:
        w = stack.pop()
        for i in range(datum.rank):
            if w[i] != 0:
                v = datum.reflect(w, i)
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return tuple(sorted(seen))


def weyl_dimension(datum: RootDatum, weight: Sequence[int]) -> int:
    num = prod(sum(c * (x + 1) for c, x in zip(a.coroot, weight)) for a in datum.positive_roots)
    den = prod(sum(a.coroot) for a in datum.positive_roots)
    q, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"Weyl dimension {num}/{den} is not an integer")
    return q


@lru_cache(maxsize=None)
def _root_weights(datum: RootDatum) -> tuple[Weight, ...]:
    return tuple(datum.root_weight(a.root) for a in datum.positive_roots)


def _dominant_weights_below(datum: RootDatum, top: Weight) -> dict[Weight, int]:
    """Dominant mu <= top, mapped to the height of top - mu.

    Uses that any dominant mu < top lies below top - alpha for a positive
    root alpha with top - alpha still dominant, so the search never leaves
    the dominant chamber.
    """
    roots = datum.positive_roots
    rweights = _root_weights(datum)
    level = {top: 0}
    frontier = [top]
    while frontier:
        nxt = []
        for mu in frontier:
            for a, aw in zip(roots, rweights):
                nu = tuple(x - y for x, y in zip(mu, aw))
                if min(nu) < 0 or nu in level:
                    continue
                level[nu] = level[mu] + a.height
                nxt.append(nu)
        frontier = nxt
    return level


def dominant_character(datum: RootDatum, weight: Sequence[int]) -> DominantCharacter:
    lam = tuple(int(x) for x in weight)
    if len(lam) != datum.rank:
        raise RootSystemError(f"weight {lam} has wrong length for {datum.name}")
    if min(lam) < 0:
        raise RootSystemError(f"weight {lam} is not dominant")
    key = (datum.type_label, datum.rank, lam)
    hit = _lookup(key)
    if hit is not None:
        return DominantCharacter(lam, hit)
    return DominantCharacter(lam, _insert(key, _freudenthal(datum, lam)))


def _freudenthal(datum: RootDatum, lam: Weight) -> dict[Weight, int]:
    g = _weight_gram(datum)
    r = datum.rank

    def form(x, y):
        return sum(x[i] * g[i][j] * y[j] for i in range(r) for j in range(r))

    levels = _dominant_weights_below(datum, lam)
    order = sorted(levels, key=lambda mu: (levels[mu], mu))
    rweights = _root_weights(datum)
    rho = datum.rho
    lam_rho = tuple(x + 1 for x in lam)
    top_norm = form(lam_rho, lam_rho)
    mult: dict[Weight, int] = {lam: 1}
    for mu in order[1:]:
        total = 0
        for aw in rweights:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, aw))
                m = mult.get(dominant_representative(datum, nu), 0)
                if m == 0:
                    break
                total += m * form(nu, aw)
                k += 1
        mu_rho = tuple(x + y for x, y in zip(mu, rho))
        denom = top_norm - form(mu_rho, mu_rho)
        value, rem = divmod(2 * total, denom)
        if rem:
            raise AssertionError(f"non-integral Freudenthal multiplicity at {mu}")
        if value:
            mult[mu] = value
    return mult


def weight_multiplicity(datum: RootDatum, weight: Sequence[int], x: Sequence[int]) -> int:
    """Multiplicity of an arbitrary weight x in L(weight)."""
    char = dominant_character(datum, weight)
    return char.entries.get(dominant_representative(datum, x), 0)
