"""Rank and shift data of the filtration-based resolution of K^(n).

Free modules are recorded by the fine degrees of their generators, so S(-D)
contributes the shift D.  Differentials are never built: exactness is checked
through the Euler characteristic against the fine Hilbert function of
K^(n) = A_{>=n}.

Building blocks (generator degrees, before any global offset):
  E      : (-1, 1; 0), (0, 0; 0)
  F_u    : (sigma_u - c, c; e_u)          1 <= c <= sigma_u
  G_u    : fdeg(T_{u,j})                  1 <= j <= sigma_u + 1
  Sym_q E: (-i, i; 0)                     0 <= i <= q
  D_q E* : (i, -i; 0)                     0 <= i <= q
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .algebra import FineDegree
from .errors import DomainError
from .scroll import ScrollData, compositions
from .symbolic import EligibleTuple, enumerate_eligible, make_eligible, neighbor_N

SYM = "sym"
FIRST_ROW = "first_row"


def _fsum(degs: Iterable[FineDegree], ell: int) -> FineDegree:
    a = b = 0
    e = [0] * ell
    for d in degs:
        a += d.alpha
        b += d.beta
        for i, x in enumerate(d.e):
            e[i] += x
    return FineDegree(a, b, tuple(e))


@dataclass(frozen=True)
class GradedFreeModule:
    shifts: tuple  # sorted by (total, alpha, e)

    @classmethod
    def of(cls, shifts: Iterable[FineDegree]) -> "GradedFreeModule":
        return cls(tuple(sorted(shifts, key=FineDegree.sort_key)))

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def twist(self, D: FineDegree) -> "GradedFreeModule":
        return GradedFreeModule.of(s.plus(D) for s in self.shifts)

    def tensor(self, other: "GradedFreeModule") -> "GradedFreeModule":
        return GradedFreeModule.of(a.plus(b) for a in self.shifts for b in other.shifts)

    def __add__(self, other: "GradedFreeModule") -> "GradedFreeModule":
        return GradedFreeModule.of(self.shifts + other.shifts)

    def total_degrees(self) -> Counter:
        return Counter(s.total for s in self.shifts)


@dataclass(frozen=True)
class ComplexRanks:
    modules: tuple  # of GradedFreeModule, index = homological position

    @property
    def ranks(self) -> tuple:
        return tuple(m.rank for m in self.modules)

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def twist(self, D: FineDegree) -> "ComplexRanks":
        return ComplexRanks(tuple(m.twist(D) for m in self.modules))

    def tensor(self, other: "ComplexRanks") -> "ComplexRanks":
        out = defaultdict(list)
        for p, a in enumerate(self.modules):
            for q, b in enumerate(other.modules):
                out[p + q].extend(x.plus(y) for x in a.shifts for y in b.shifts)
        top = max(out)
        return ComplexRanks(tuple(GradedFreeModule.of(out[i]) for i in range(top + 1)))

    def __add__(self, other: "ComplexRanks") -> "ComplexRanks":
        n = max(len(self.modules), len(other.modules))
        empty = GradedFreeModule(())
        mods = []
        for i in range(n):
            a = self.modules[i] if i < len(self.modules) else empty
            b = other.modules[i] if i < len(other.modules) else empty
            mods.append(a + b)
        return ComplexRanks(tuple(mods))

    def euler(self) -> dict:
        """Alternating sum of generator degrees: {FineDegree: signed count}."""
        out = defaultdict(int)
        for p, m in enumerate(self.modules):
            sign = -1 if p % 2 else 1
            for s in m.shifts:
                out[s] += sign
        return {k: v for k, v in out.items() if v}

    def regularity_bound(self) -> int:
        return max(max(s.total for s in m.shifts) - p
                   for p, m in enumerate(self.modules) if m.shifts)


# -- building blocks ---------------------------------------------------------

def _unit(data: ScrollData, u: int) -> tuple:
    e = [0] * data.ell
    e[u - 1] = 1
    return tuple(e)


def E_shifts(data: ScrollData) -> list:
    z = (0,) * data.ell
    return [FineDegree(-1, 1, z), FineDegree(0, 0, z)]


def F_shifts(data: ScrollData, u: int) -> list:
    s = data.sigma[u - 1]
    return [FineDegree(s - c, c, _unit(data, u)) for c in range(1, s + 1)]


def F_tail_shifts(data: ScrollData, k: int) -> list:
    """Generators of F_{>k} = F_{k+1} + ... + F_l."""
    return [d for u in range(k + 1, data.ell + 1) for d in F_shifts(data, u)]


def G_shifts(data: ScrollData, u: int) -> list:
    return [data.layout.var_fdegs[data.layout.flat(u, j)]
            for j in range(1, data.sigma[u - 1] + 2)]


def sym_E(data: ScrollData, q: int) -> list:
    z = (0,) * data.ell
    return [FineDegree(-i, i, z) for i in range(q + 1)]


def divided_E_dual(data: ScrollData, q: int) -> list:
    z = (0,) * data.ell
    return [FineDegree(i, -i, z) for i in range(q + 1)]


def exterior(gens: list, p: int, ell: int) -> list:
    return [_fsum(c, ell) for c in combinations(gens, p)]


def _product(a: list, b: list) -> list:
    return [x.plus(y) for x in a for y in b]


# -- complexes ---------------------------------------------------------------

def koszul_ranks(data: ScrollData, k: int) -> ComplexRanks:
    """The Koszul complex on the variables of blocks 1..k."""
    if not 0 <= k <= data.ell - 1:
        raise DomainError(f"block cutoff k={k} outside 0..{data.ell - 1}")
    gens = [d for u in range(1, k + 1) for d in G_shifts(data, u)]
    return ComplexRanks(tuple(GradedFreeModule.of(exterior(gens, q, data.ell))
                              for q in range(len(gens) + 1)))


def en_ranks(data: ScrollData, t: EligibleTuple) -> ComplexRanks:
    """Eagon-Northcott type resolution of Sym_{r-1}(coker psi_{>k}) over S.

    Positions p < r carry Sym_{r-1-p} E (x) Lambda^p F_{>k}; positions
    r <= p <= m-1 carry D_{p-r} E* (x) Lambda^{p+1} F_{>k} twisted by (1,-1;0),
    the twist making the one quadratic differential homogeneous.
    """
    k, r = t.k, t.r
    ell = data.ell
    F = F_tail_shifts(data, k)
    m = len(F)
    twist = FineDegree(1, -1, (0,) * ell)
    mods = []
    for p in range(r):
        mods.append(GradedFreeModule.of(_product(sym_E(data, r - 1 - p), exterior(F, p, ell))))
    for p in range(r, m):
        mods.append(GradedFreeModule.of(
            x.plus(twist) for x in _product(divided_E_dual(data, p - r), exterior(F, p + 1, ell))))
    return ComplexRanks(tuple(mods))


def first_row_complex_ranks(data: ScrollData, k: int) -> ComplexRanks:
    """Resolution of the ideal of S/I_2(psi_{>k}) generated by the first row of
    psi_{>k}: position p is D_p E* (x) Lambda^{p+1} F_{>k}."""
    if not 0 <= k <= data.ell - 1:
        raise DomainError(f"block cutoff k={k} outside 0..{data.ell - 1}")
    F = F_tail_shifts(data, k)
    m = len(F)
    return ComplexRanks(tuple(
        GradedFreeModule.of(_product(divided_E_dual(data, p), exterior(F, p + 1, data.ell)))
        for p in range(m)))


# -- filtrations -------------------------------------------------------------

@dataclass(frozen=True)
class FactorDescriptor:
    eligible: EligibleTuple
    kind: str
    shift: FineDegree
    j_index: int | None = None

    def describe(self) -> str:
        extra = f" j={self.j_index}" if self.kind == FIRST_ROW else ""
        return f"{self.eligible} {self.kind}{extra} shift={self.shift}"


def _eps(data: ScrollData, t: EligibleTuple, extra: int) -> tuple:
    e = list(t.a) + [0] * (data.ell - t.k)
    e[t.k] += extra
    return tuple(e)


def sym_descriptor(data: ScrollData, t: EligibleTuple) -> FactorDescriptor:
    e = _eps(data, t, t.f + 1)
    w = sum(s * x for s, x in zip(data.sigma, e))
    return FactorDescriptor(t, SYM, FineDegree(w, 0, e))


def first_row_descriptor(data: ScrollData, t: EligibleTuple, j: int) -> FactorDescriptor:
    e = _eps(data, t, t.f)
    w = sum(s * x for s, x in zip(data.sigma, e))
    return FactorDescriptor(t, FIRST_ROW, FineDegree(w + 1, -1, e), j)


def filtration_fine(data: ScrollData) -> list:
    return [sym_descriptor(data, t) for t in enumerate_eligible(data)]


def chain_depth(data: ScrollData, t: EligibleTuple) -> int:
    """Largest s with t = N^s(b) for a tuple b with r(b) = sigma_{len(b)+1}."""
    best = 0
    for s in range(1, t.k + 1):
        b = make_eligible(t.a[:t.k - s], data)
        if b.r != data.sigma[b.k]:
            continue
        c = b
        for _ in range(s):
            c = neighbor_N(c, data)
        if c.a == t.a:
            best = s
    return best


def is_eligible_prime(data: ScrollData, t: EligibleTuple) -> bool:
    return t.k == data.ell - 1 or t.r < data.sigma[t.k]


def filtration_coarse(data: ScrollData) -> list:
    out = []
    for t in enumerate_eligible(data):
        if not is_eligible_prime(data, t):
            continue
        if t.k == data.ell - 1 and t.r == data.sigma[-1]:
            s = chain_depth(data, t)
            if s >= 1:
                out.append(first_row_descriptor(data, t, data.ell - 1 - s))
                continue
        out.append(sym_descriptor(data, t))
    return out


def filtration(data: ScrollData, kind: str = "fine") -> list:
    if kind == "fine":
        return filtration_fine(data)
    if kind == "coarse":
        return filtration_coarse(data)
    raise DomainError(f"unknown filtration {kind!r}")


def factor_resolution(data: ScrollData, d: FactorDescriptor) -> ComplexRanks:
    if d.kind == SYM:
        body = en_ranks(data, d.eligible).tensor(koszul_ranks(data, d.eligible.k))
    elif d.kind == FIRST_ROW:
        body = first_row_complex_ranks(data, d.j_index).tensor(koszul_ranks(data, d.j_index))
    else:
        raise DomainError(f"unknown factor kind {d.kind!r}")
    return body.twist(d.shift)


def total_resolution(data: ScrollData, kind: str = "fine") -> ComplexRanks:
    parts = [factor_resolution(data, d) for d in filtration(data, kind)]
    out = parts[0]
    for c in parts[1:]:
        out = out + c
    return out


def expected_length(data: ScrollData) -> int:
    return data.sigma_sum + data.ell - 2


# -- Hilbert functions -------------------------------------------------------

def _series_divide(euler: dict, data: ScrollData, bound: int) -> dict:
    """euler / prod_v (1 - z^fdeg(v)), truncated at total degree <= bound."""
    cur = {d: c for d, c in euler.items() if d.total <= bound}
    for w in data.layout.var_fdegs:
        nxt = defaultdict(int)
        for d, c in cur.items():
            x = d
            while x.total <= bound:
                nxt[x] += c
                x = x.plus(w)
        cur = {d: c for d, c in nxt.items() if c}
    return cur


def complex_hilbert(cx: ComplexRanks, data: ScrollData, bound: int) -> dict:
    """Fine Hilbert function of the module resolved by cx, total degree <= bound."""
    return _series_divide(cx.euler(), data, bound)


def A_hilbert(data: ScrollData, bound: int) -> dict:
    out = {}
    for t in range(bound + 1):
        for e in compositions(t, data.ell):
            w = sum(s * x for s, x in zip(data.sigma, e))
            for alpha in range(w + 1):
                out[FineDegree(alpha, w - alpha, e)] = 1
    return out


def K_hilbert(data: ScrollData, bound: int) -> dict:
    return {d: 1 for d in A_hilbert(data, bound) if d.alpha >= data.n}


def hilbert_function(data: ScrollData, what="K", through_total_degree: int = 8,
                     fine: bool = False):
    """Hilbert function of A ("A"), K^(n) ("K") or one filtration factor.

    Returns per-total-degree dimensions, or the fine dictionary if fine=True.
    """
    if through_total_degree < 0:
        raise DomainError("degree bound must be non-negative")
    if what == "A":
        h = A_hilbert(data, through_total_degree)
    elif what == "K":
        h = K_hilbert(data, through_total_degree)
    elif isinstance(what, FactorDescriptor):
        h = complex_hilbert(factor_resolution(data, what), data, through_total_degree)
    elif isinstance(what, ComplexRanks):
        h = complex_hilbert(what, data, through_total_degree)
    else:
        raise DomainError(f"cannot take the Hilbert function of {what!r}")
    if fine:
        return h
    per = [0] * (through_total_degree + 1)
    for d, c in h.items():
        per[d.total] += c
    return per


def euler_check(data: ScrollData, kind: str = "fine", bound: int = 8) -> tuple:
    """(ok, first mismatching fine degree or None)."""
    got = complex_hilbert(total_resolution(data, kind), data, bound)
    want = K_hilbert(data, bound)
    for d in sorted(set(got) | set(want), key=FineDegree.sort_key):
        if got.get(d, 0) != want.get(d, 0):
            return False, d
    return True, None
