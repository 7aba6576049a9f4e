"""Exponent-vector monomials and sparse polynomials over GF(p).

Monomials are plain tuples of non-negative ints indexed by the flat variable
index T_{1,1} -> 0, ..., T_{1,s1+1} -> s1, T_{2,1} -> s1+1, ...  The variable
order is T_{1,1} > T_{1,2} > ... > T_{l,s_l+1} and monomials are compared in
degree reverse lexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import ConfigurationError, DomainError

DEFAULT_PRIME = 32003

Monomial = tuple  # tuple[int, ...]


class FineDegree(NamedTuple):
    """The (x, y; t) exponent triple of the image of a monomial in k[x, y, t]."""

    alpha: int
    beta: int
    e: tuple

    @property
    def total(self) -> int:
        return sum(self.e)

    def plus(self, other: "FineDegree") -> "FineDegree":
        return FineDegree(self.alpha + other.alpha, self.beta + other.beta,
                          tuple(a + b for a, b in zip(self.e, other.e)))

    def minus(self, other: "FineDegree") -> "FineDegree":
        return FineDegree(self.alpha - other.alpha, self.beta - other.beta,
                          tuple(a - b for a, b in zip(self.e, other.e)))

    def divides(self, other: "FineDegree") -> bool:
        """Componentwise <=, i.e. divisibility of the corresponding B-monomials."""
        return (self.alpha <= other.alpha and self.beta <= other.beta
                and all(a <= b for a, b in zip(self.e, other.e)))

    def sort_key(self):
        return (self.total, self.alpha, self.e)

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta};{','.join(map(str, self.e))})"


def zero_fdeg(ell: int) -> FineDegree:
    return FineDegree(0, 0, (0,) * ell)


@dataclass(frozen=True)
class VarLayout:
    """Variable bookkeeping for the polynomial ring S = k[T_{i,j}]."""

    sigma: tuple

    @cached_property
    def ell(self) -> int:
        return len(self.sigma)

    @cached_property
    def var_ids(self) -> tuple:
        """(block, slot) pairs, 1-based, in flat order."""
        return tuple((i + 1, j) for i, s in enumerate(self.sigma)
                     for j in range(1, s + 2))

    @cached_property
    def offsets(self) -> tuple:
        out, acc = [], 0
        for s in self.sigma:
            out.append(acc)
            acc += s + 1
        return tuple(out)

    @property
    def nvars(self) -> int:
        return len(self.var_ids)

    def flat(self, block: int, slot: int) -> int:
        if not (1 <= block <= self.ell and 1 <= slot <= self.sigma[block - 1] + 1):
            raise ConfigurationError(f"no variable T[{block},{slot}] for sigma={self.sigma}")
        return self.offsets[block - 1] + slot - 1

    def var_id(self, index: int) -> tuple:
        return self.var_ids[index]

    @cached_property
    def deg_weights(self) -> tuple:
        """Deg(T_{i,j}) = sigma_i + 1 - j."""
        return tuple(self.sigma[i - 1] + 1 - j for i, j in self.var_ids)

    @cached_property
    def var_fdegs(self) -> tuple:
        ell = self.ell
        out = []
        for i, j in self.var_ids:
            e = [0] * ell
            e[i - 1] = 1
            out.append(FineDegree(self.sigma[i - 1] + 1 - j, j - 1, tuple(e)))
        return tuple(out)

    def variable(self, block: int, slot: int, power: int = 1) -> Monomial:
        m = [0] * self.nvars
        m[self.flat(block, slot)] = power
        return tuple(m)

    def one(self) -> Monomial:
        return (0,) * self.nvars

    def monomial(self, factors: Mapping[tuple, int] | Iterable[tuple]) -> Monomial:
        """Build a monomial from {(block, slot): power} or an iterable of (block, slot)."""
        m = [0] * self.nvars
        items = factors.items() if isinstance(factors, Mapping) else ((f, 1) for f in factors)
        for (i, j), power in items:
            m[self.flat(i, j)] += power
        return tuple(m)

    def check(self, m: Monomial) -> None:
        if len(m) != self.nvars:
            raise ConfigurationError(
                f"monomial has {len(m)} exponents, ring for sigma={self.sigma} has {self.nvars}")

    def fdeg(self, m: Monomial) -> FineDegree:
        alpha = beta = 0
        e = [0] * self.ell
        for idx, x in enumerate(m):
            if x:
                i, j = self.var_ids[idx]
                alpha += x * (self.sigma[i - 1] + 1 - j)
                beta += x * (j - 1)
                e[i - 1] += x
        return FineDegree(alpha, beta, tuple(e))

    def Deg(self, m: Monomial) -> int:
        return sum(x * w for x, w in zip(m, self.deg_weights))

    def format(self, m: Monomial) -> str:
        parts = []
        for idx, x in enumerate(m):
            if x:
                i, j = self.var_ids[idx]
                parts.append(f"T{i}_{j}" + (f"^{x}" if x > 1 else ""))
        return "*".join(parts) if parts else "1"


class Grading(NamedTuple):
    Deg: int
    total: int
    fdeg: FineDegree


def grade(m: Monomial, layout: VarLayout) -> Grading:
    layout.check(m)
    return Grading(layout.Deg(m), sum(m), layout.fdeg(m))


# -- monomial arithmetic ----------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_quotient(b: Monomial, a: Monomial) -> Monomial:
    """b / a, assuming a divides b."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def revlex_key(m: Monomial):
    """Sort key: larger key <=> larger monomial in degree revlex."""
    return (sum(m), tuple(-x for x in reversed(m)))


def compare_revlex(m1: Monomial, m2: Monomial) -> int:
    """Return 1, 0 or -1 as m1 is greater than, equal to or less than m2."""
    if len(m1) != len(m2):
        raise ConfigurationError("monomials live in different variable universes")
    d1, d2 = sum(m1), sum(m2)
    if d1 != d2:
        return 1 if d1 > d2 else -1
    for x, y in zip(reversed(m1), reversed(m2)):
        if x != y:
            return 1 if x < y else -1
    return 0


# -- polynomials ------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial over GF(prime)."""

    __slots__ = ("_coeffs", "prime", "_sorted")

    def __init__(self, coeffs: Mapping[Monomial, int] = (), prime: int = DEFAULT_PRIME):
        self.prime = prime
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        self._coeffs = {}
        for m, c in items:
            c %= prime
            if c:
                self._coeffs[m] = c
        self._sorted = None

    @classmethod
    def _wrap(cls, coeffs: dict, prime: int) -> "Polynomial":
        # coeffs must already be reduced and zero-free
        p = cls.__new__(cls)
        p.prime = prime
        p._coeffs = coeffs
        p._sorted = None
        return p

    @classmethod
    def monomial(cls, m: Monomial, coeff: int = 1, prime: int = DEFAULT_PRIME) -> "Polynomial":
        return cls({m: coeff}, prime)

    @classmethod
    def binomial(cls, plus: Monomial, minus: Monomial, prime: int = DEFAULT_PRIME) -> "Polynomial":
        return cls({plus: 1, minus: -1} if plus != minus else {}, prime)

    @property
    def coeffs(self) -> dict:
        return self._coeffs

    @property
    def terms(self) -> list:
        """(coefficient, monomial) pairs in strictly descending revlex order."""
        if self._sorted is None:
            self._sorted = sorted(((c, m) for m, c in self._coeffs.items()),
                                  key=lambda t: revlex_key(t[1]), reverse=True)
        return self._sorted

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    @property
    def lead_monomial(self) -> Monomial:
        if not self._coeffs:
            raise DomainError("the zero polynomial has no leading term")
        if self._sorted is not None:
            return self._sorted[0][1]
        return max(self._coeffs, key=revlex_key)

    @property
    def lead_coefficient(self) -> int:
        return self._coeffs[self.lead_monomial]

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    def monic(self) -> "Polynomial":
        if not self._coeffs:
            return self
        inv = pow(self.lead_coefficient, -1, self.prime)
        return self.scale(inv)

    def scale(self, c: int) -> "Polynomial":
        p = self.prime
        c %= p
        if not c:
            return Polynomial._wrap({}, p)
        return Polynomial._wrap({m: v * c % p for m, v in self._coeffs.items()}, p)

    def mul_term(self, c: int, mono: Monomial) -> "Polynomial":
        p = self.prime
        c %= p
        if not c:
            return Polynomial._wrap({}, p)
        return Polynomial._wrap({mono_mul(m, mono): v * c % p for m, v in self._coeffs.items()}, p)

    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        if self.prime != other.prime:
            raise ConfigurationError("polynomials over different primes")
        p = self.prime
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            v = (out.get(m, 0) + sign * c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._wrap(out, p)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return self._combine(other, 1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self._combine(other, -1)

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and self.prime == other.prime
                and self._coeffs == other._coeffs)

    def __hash__(self) -> int:
        return hash((self.prime, frozenset(self._coeffs.items())))

    def signed(self, c: int) -> int:
        """Symmetric representative of a coefficient, for display."""
        return c - self.prime if c > self.prime // 2 else c

    def format(self, layout: VarLayout) -> str:
        if not self._coeffs:
            return "0"
        out = []
        for c, m in self.terms:
            s = self.signed(c)
            body = layout.format(m)
            if body == "1":
                term = str(abs(s))
            elif abs(s) == 1:
                term = body
            else:
                term = f"{abs(s)}*{body}"
            out.append(("- " if s < 0 else "+ ") + term)
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Polynomial({dict(self._coeffs)!r}, prime={self.prime})"


def reduce(f: Polynomial, basis: Sequence[Polynomial]) -> tuple:
    """Multivariate division of f by basis.

    Returns (remainder, quotients) with f = sum(q_i * basis_i) + remainder. At
    each step the current leading term is divided by the first basis element,
    in list order, whose leading monomial divides it.
    """
    p = f.prime
    for g in basis:
        if g.is_zero():
            raise DomainError("cannot divide by the zero polynomial")
    leads = [g.lead_monomial for g in basis]
    inv_lc = [pow(g.lead_coefficient, -1, p) for g in basis]
    gterms = [list(g.coeffs.items()) for g in basis]
    work = dict(f.coeffs)
    rem = {}
    quots = [dict() for _ in basis]
    while work:
        lm = max(work, key=revlex_key)
        c = work[lm]
        for i, lead in enumerate(leads):
            if all(x <= y for x, y in zip(lead, lm)):
                shift = tuple(y - x for x, y in zip(lead, lm))
                q = c * inv_lc[i] % p
                quots[i][shift] = (quots[i].get(shift, 0) + q) % p
                for m, v in gterms[i]:
                    mm = tuple(a + b for a, b in zip(m, shift))
                    nv = (work.get(mm, 0) - q * v) % p
                    if nv:
                        work[mm] = nv
                    else:
                        work.pop(mm, None)
                break
        else:
            rem[lm] = c
            del work[lm]
    return (Polynomial._wrap(rem, p),
            [Polynomial({m: c for m, c in q.items()}, p) for q in quots])


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    return reduce(f, basis)[0]


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """(lcm/lt f) f - (lcm/lt g) g with the leading terms cancelled."""
    if f.is_zero() or g.is_zero():
        raise DomainError("S-polynomial of the zero polynomial")
    lf, lg = f.lead_monomial, g.lead_monomial
    lcm = mono_lcm(lf, lg)
    p = f.prime
    a = f.mul_term(pow(f.lead_coefficient, -1, p), mono_quotient(lcm, lf))
    b = g.mul_term(pow(g.lead_coefficient, -1, p), mono_quotient(lcm, lg))
    return a - b
