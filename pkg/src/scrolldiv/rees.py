"""Generators of the symbolic Rees algebra sum_n K^(n) u^n as an A-algebra.

The set consists of T_{i,j} u^k with j <= sigma_i and 1 <= k <= sigma_i + 1 - j;
since Deg T_{i,j} = sigma_i + 1 - j, each of these lies in K^(k) u^k.  Every
element T^a T_{k+1,1}^f T_{k+1,j} of L factors as

    prod_i (T_{i,1} u^sigma_i)^a_i * (T_{k+1,1} u^sigma_{k+1})^f * T_{k+1,j} u^(sigma_{k+1}+1-r).
"""
from __future__ import annotations

from typing import NamedTuple

from .algebra import Monomial
from .errors import DomainError
from .scroll import ScrollData
from .symbolic import LElement, L_elements


class ReesGenerator(NamedTuple):
    block: int
    slot: int
    power: int

    def monomial(self, data: ScrollData) -> Monomial:
        return data.layout.variable(self.block, self.slot)

    def __str__(self) -> str:
        u = "u" if self.power == 1 else f"u^{self.power}"
        return f"T{self.block}_{self.slot}*{u}"


def rees_generating_set(data: ScrollData) -> list:
    return [ReesGenerator(i, j, k)
            for i, s in enumerate(data.sigma, start=1)
            for j in range(1, s + 1)
            for k in range(1, s + 2 - j)]


def factor_over_S(g, data: ScrollData) -> list:
    """Factorization of g u^n over the Rees generators, as a list with repeats.

    g is either an LElement or a monomial of L (its eligible tuple is then
    recovered by lookup).
    """
    if isinstance(g, LElement):
        elt = g
    else:
        matches = [e for e in L_elements(data) if e.monomial == tuple(g)]
        if not matches:
            raise DomainError(f"{data.layout.format(tuple(g))} is not an element of L for n={data.n}")
        elt = matches[0]
    t, j = elt.source, elt.u
    out = []
    for i, x in enumerate(t.a, start=1):
        out.extend([ReesGenerator(i, 1, data.sigma[i - 1])] * x)
    s = data.sigma[t.k]
    out.extend([ReesGenerator(t.k + 1, 1, s)] * t.f)
    out.append(ReesGenerator(t.k + 1, j, s + 1 - t.r))
    return out


def check_factorization(g: Monomial, factors: list, data: ScrollData) -> bool:
    """Product of the factors is g u^n and every factor is a Rees generator."""
    allowed = set(rees_generating_set(data))
    if not all(f in allowed for f in factors):
        return False
    prod = [0] * data.nvars
    for f in factors:
        prod[data.layout.flat(f.block, f.slot)] += 1
    return tuple(prod) == tuple(g) and sum(f.power for f in factors) == data.n
