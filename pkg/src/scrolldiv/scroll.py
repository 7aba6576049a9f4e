"""Scroll data: the catalecticant matrix psi, the ideals H = I_2(psi) and K, and
the monomial embedding pi of A = S/H into B = k[x, y, t_1, ..., t_l]."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .algebra import DEFAULT_PRIME, FineDegree, Monomial, Polynomial, VarLayout, compare_revlex
from .errors import ConfigurationError, DomainError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class ScrollData:
    sigma: tuple
    n: int
    prime: int = DEFAULT_PRIME
    layout: VarLayout = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        try:
            sigma = tuple(int(s) for s in self.sigma)
        except (TypeError, ValueError):
            raise ConfigurationError(f"sigma must be a sequence of integers, got {self.sigma!r}")
        if not sigma:
            raise ConfigurationError("sigma must be non-empty")
        if any(s < 1 for s in sigma):
            raise ConfigurationError(f"sigma entries must be positive, got {sigma}")
        if any(a < b for a, b in zip(sigma, sigma[1:])):
            raise ConfigurationError(f"sigma must be weakly decreasing, got {sigma}")
        if not isinstance(self.n, int) or self.n < 2:
            raise ConfigurationError(
                f"n must be an integer >= 2 (symbolic powers K^(n) are studied for n >= 2), got {self.n!r}")
        if not _is_prime(self.prime):
            raise ConfigurationError(f"field characteristic must be prime, got {self.prime}")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "layout", VarLayout(sigma))

    @property
    def ell(self) -> int:
        return len(self.sigma)

    @property
    def nvars(self) -> int:
        return self.layout.nvars

    @property
    def sigma_sum(self) -> int:
        return sum(self.sigma)

    def with_prime(self, prime: int) -> "ScrollData":
        return ScrollData(self.sigma, self.n, prime)

    def with_n(self, n: int) -> "ScrollData":
        return ScrollData(self.sigma, n, self.prime)


@dataclass(frozen=True)
class ScrollMatrix:
    """psi = [psi_1 | ... | psi_l]; entries are (block, slot) variable ids."""

    sigma: tuple
    blocks: tuple  # blocks[u] = (top_row, bottom_row)

    @cached_property
    def columns(self) -> tuple:
        """Columns as ((block, slot_top), (block, slot_bottom)) in global order."""
        return tuple((top, bot) for blk in self.blocks for top, bot in zip(*blk))

    @property
    def ncols(self) -> int:
        return len(self.columns)


def build_psi(data: ScrollData) -> ScrollMatrix:
    blocks = []
    for u, s in enumerate(data.sigma, start=1):
        top = tuple((u, c) for c in range(1, s + 1))
        bot = tuple((u, c + 1) for c in range(1, s + 1))
        blocks.append((top, bot))
    return ScrollMatrix(data.sigma, tuple(blocks))


def minors_H(psi: ScrollMatrix, prime: int = DEFAULT_PRIME) -> list:
    """All 2x2 minors of psi, normalized so the lead (lower-left times
    upper-right) has coefficient +1. Ordered by column pair."""
    layout = VarLayout(psi.sigma)
    cols = psi.columns
    out = []
    for c in range(len(cols)):
        for d in range(c + 1, len(cols)):
            (tc, bc), (td, bd) = cols[c], cols[d]
            lead = layout.monomial([bc, td])
            tail = layout.monomial([tc, bd])
            assert compare_revlex(lead, tail) == 1
            out.append(Polynomial.binomial(lead, tail, prime))
    return out


def minors_of(data: ScrollData) -> list:
    return minors_H(build_psi(data), data.prime)


def K_generators(data: ScrollData) -> list:
    """The top row of psi, as degree-one monomials."""
    lay = data.layout
    return [lay.variable(u, c) for u, s in enumerate(data.sigma, start=1)
            for c in range(1, s + 1)]


def pi_image(m: Monomial, data: ScrollData) -> FineDegree:
    """Exponents (alpha, beta; e) of pi(m) = x^alpha y^beta t^e."""
    data.layout.check(m)
    return data.layout.fdeg(m)


def compositions(total: int, parts: int) -> Iterator[tuple]:
    """Non-negative integer vectors of the given length and sum, lex descending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def A_monomial_basis(data: ScrollData, total_degree: int) -> list:
    """Fine degrees of the monomials of A of the given total degree.

    Every fine-degree component of A is at most one-dimensional, so this list
    is a k-basis of A in that total degree.
    """
    if total_degree < 0:
        raise DomainError("total degree must be non-negative")
    out = []
    for e in compositions(total_degree, data.ell):
        w = sum(s * x for s, x in zip(data.sigma, e))
        for alpha in range(w, -1, -1):
            out.append(FineDegree(alpha, w - alpha, e))
    return out


def in_A_support(D: FineDegree, data: ScrollData) -> bool:
    return (D.alpha >= 0 and D.beta >= 0 and all(x >= 0 for x in D.e)
            and D.alpha + D.beta == sum(s * x for s, x in zip(data.sigma, D.e)))


def lift_fdeg(D: FineDegree, data: ScrollData) -> Monomial:
    """Some monomial of S whose fine degree is D (a preimage under pi)."""
    if not in_A_support(D, data):
        raise DomainError(f"{D} is not the fine degree of a monomial of A")
    lay = data.layout
    m = [0] * lay.nvars
    rest = D.alpha
    for i, (s, e) in enumerate(zip(data.sigma, D.e), start=1):
        a = min(rest, s * e)
        rest -= a
        q, r = divmod(a, s)
        m[lay.flat(i, 1)] += q
        used = q
        if r:
            m[lay.flat(i, s + 1 - r)] += 1
            used += 1
        m[lay.flat(i, s + 1)] += e - used
    assert rest == 0
    return tuple(m)
