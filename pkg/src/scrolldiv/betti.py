"""Minimal graded Betti numbers of K^(n) from Koszul homology over GF(p).

beta_{i,D} = dim H_i(Koszul(all variables) (x) K^(n))_D for fine degrees D.
Each fine component of K^(n) is at most one-dimensional, so the strand in
degree D is the chain complex of the simplicial complex

    Delta_D = {J : D - fdeg(J) in supp K^(n)}

(see _kernels_py).  Delta_D only depends on the clipped key

    (min(e_u, sigma_u + 1))_u, min(alpha - n, cap), min(beta, cap),

cap = sum sigma_u (sigma_u + 1) / 2, because no set of variables can use more
than that.  Once |e| >= vanishing_degree(data) some block is saturated and
alpha - n or beta reaches cap, which gives Delta_D a cone point, so every
strand in that range is exact.  Tables computed through vanishing_degree - 1
are therefore complete.
"""
from __future__ import annotations

import os
from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from . import kernels
from .algebra import FineDegree
from .errors import ConfigurationError, DomainError, IncompleteError, InvariantViolation
from .scroll import ScrollData, compositions


def weight_cap(sigma: tuple) -> int:
    return sum(s * (s + 1) // 2 for s in sigma)


def vanishing_degree(data: ScrollData) -> int:
    """Smallest total degree from which every Koszul strand is provably exact."""
    cap = weight_cap(data.sigma)
    s = data.sigma[-1]
    return max(data.sigma_sum + 1, -(-(data.n + 2 * cap - 1) // s))


def expected_pd(data: ScrollData) -> int:
    return data.sigma_sum + data.ell - 2


def expected_reg(data: ScrollData) -> int:
    return -(-(data.n - 1) // data.sigma[-1]) + 1


@lru_cache(maxsize=None)
def _strand_homology(sigma: tuple, key: tuple, prime: int) -> tuple:
    e_clip, a_lim, b_lim = key
    alphas, betas, blocks = [], [], []
    for u, s in enumerate(sigma):
        for j in range(1, s + 2):
            alphas.append(s + 1 - j)
            betas.append(j - 1)
            blocks.append(u)
    return tuple(kernels.koszul_homology(alphas, betas, blocks, list(e_clip), a_lim, b_lim, prime))


def strand_key(D: FineDegree, data: ScrollData) -> tuple:
    cap = weight_cap(data.sigma)
    e = tuple(min(x, s + 1) for x, s in zip(D.e, data.sigma))
    return (e, min(D.alpha - data.n, cap), min(D.beta, cap))


def strand_homology(D: FineDegree, data: ScrollData) -> tuple:
    """dims[i] = beta_{i,D}; zero outside supp K^(n)."""
    if D.alpha < data.n or D.beta < 0 or any(x < 0 for x in D.e):
        return (0,) * (data.nvars + 1)
    if D.alpha + D.beta != sum(s * x for s, x in zip(data.sigma, D.e)):
        return (0,) * (data.nvars + 1)
    return _strand_homology(data.sigma, strand_key(D, data), data.prime)


def default_threads() -> int:
    raw = os.environ.get("SCROLLDIV_THREADS", "1")
    try:
        t = int(raw)
    except ValueError:
        raise ConfigurationError(f"SCROLLDIV_THREADS must be an integer, got {raw!r}")
    if t < 1:
        raise ConfigurationError("SCROLLDIV_THREADS must be >= 1")
    return t


@dataclass
class BettiTable:
    entries: dict            # (i, d) -> beta_{i,d}, nonzero entries only
    degree_bound: int
    complete: bool
    prime: int
    fine: dict | None = field(default=None, repr=False)  # (i, FineDegree) -> beta

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries) if self.entries else -1

    @property
    def reg(self) -> int:
        return max(d - i for i, d in self.entries)

    def row(self, i: int) -> dict:
        return {d: v for (j, d), v in sorted(self.entries.items()) if j == i}

    def total_betti(self) -> list:
        out = [0] * (self.pd + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def diagram(self) -> dict:
        """Macaulay2-style rows: {d - i: {i: beta_{i,d}}}."""
        out = defaultdict(dict)
        for (i, d), v in sorted(self.entries.items()):
            out[d - i][i] = v
        return dict(sorted(out.items()))


def koszul_betti(data: ScrollData, degree_bound: int | None = None,
                 threads: int | None = None, fine: bool = False) -> BettiTable:
    v = vanishing_degree(data)
    if degree_bound is None:
        degree_bound = v - 1
    if degree_bound < 0:
        raise DomainError("degree bound must be non-negative")
    threads = default_threads() if threads is None else threads
    multiplicity = Counter()
    fine_degrees = defaultdict(list)
    for t in range(degree_bound + 1):
        for e in compositions(t, data.ell):
            w = sum(s * x for s, x in zip(data.sigma, e))
            for alpha in range(data.n, w + 1):
                D = FineDegree(alpha, w - alpha, e)
                key = strand_key(D, data)
                multiplicity[(key, t)] += 1
                if fine:
                    fine_degrees[key].append(D)
    keys = sorted({k for k, _ in multiplicity})

    def work(key):
        return _strand_homology(data.sigma, key, data.prime)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            homology = dict(zip(keys, ex.map(work, keys)))
    else:
        homology = {k: work(k) for k in keys}
    entries = Counter()
    for (key, t), mult in multiplicity.items():
        for i, h in enumerate(homology[key]):
            if h:
                entries[(i, t)] += mult * h
    fine_entries = None
    if fine:
        fine_entries = {}
        for key, degs in fine_degrees.items():
            for i, h in enumerate(homology[key]):
                if h:
                    for D in degs:
                        fine_entries[(i, D)] = h
    return BettiTable(dict(sorted(entries.items())), degree_bound, degree_bound >= v - 1,
                      data.prime, fine_entries)


class Invariants(NamedTuple):
    pd: int
    depth: int
    reg: int


def invariants_from_betti(t: BettiTable, data: ScrollData, check: bool = True) -> Invariants:
    """(pd, depth, reg) of K^(n) as an S-module; depth via Auslander-Buchsbaum.

    With check=True, a pd other than sum(sigma) + l - 2 or a regularity
    other than ceil((n-1)/sigma_l) + 1 raises InvariantViolation.
    """
    if not t.complete:
        raise IncompleteError(
            f"Betti table through degree {t.degree_bound} is not certified complete "
            f"(need {vanishing_degree(data) - 1})")
    pd = t.pd
    inv = Invariants(pd, data.nvars - pd, t.reg)
    if check:
        want = Invariants(expected_pd(data), 2, expected_reg(data))
        if inv != want:
            raise InvariantViolation(f"Betti invariants {inv} differ from {want}")
    return inv
