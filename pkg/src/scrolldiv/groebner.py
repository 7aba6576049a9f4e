"""Buchberger completion, basis verification, standard-monomial counts and the
depth-one certificate for A / K^(n)."""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .algebra import (FineDegree, Monomial, Polynomial, mono_coprime, mono_divides, mono_lcm,
                      mono_mul, normal_form, revlex_key, s_polynomial)
from .errors import CapacityError, DomainError, InvariantViolation
from .scroll import ScrollData, compositions, lift_fdeg, minors_of
from .symbolic import generating_set_L

DEFAULT_MAX_PAIRS = 10 ** 5


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    certified: bool

    @property
    def leads(self) -> list:
        return [g.lead_monomial for g in self.generators]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def _interreduce(basis: list) -> list:
    """Minimal, reduced, monic; sorted by lead, largest first."""
    basis = sorted(basis, key=lambda g: revlex_key(g.lead_monomial))
    kept = []
    for g in basis:
        lm = g.lead_monomial
        if not any(mono_divides(h.lead_monomial, lm) for h in kept):
            kept.append(g)
    out = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        lead = Polynomial.monomial(g.lead_monomial, g.lead_coefficient, g.prime)
        tail = normal_form(g - lead, others)
        out.append((lead + tail).monic())
    out.sort(key=lambda g: revlex_key(g.lead_monomial), reverse=True)
    return out


def buchberger(gens: Sequence[Polynomial], max_pairs: int = DEFAULT_MAX_PAIRS) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens (degree revlex).

    Pairs are processed smallest lcm first; pairs with coprime leads are
    skipped. More than max_pairs S-pair reductions raises CapacityError.
    """
    if not gens:
        raise DomainError("buchberger needs at least one generator")
    basis = [g.monic() for g in gens if not g.is_zero()]
    if not basis:
        return GroebnerBasis((), True)
    # drop duplicates up front; they only create zero S-pairs
    seen, uniq = set(), []
    for g in basis:
        if g not in seen:
            seen.add(g)
            uniq.append(g)
    basis = uniq

    heap = []

    def push_pairs(j):
        lj = basis[j].lead_monomial
        for i in range(j):
            li = basis[i].lead_monomial
            if mono_coprime(li, lj):
                continue
            heapq.heappush(heap, (revlex_key(mono_lcm(li, lj)), i, j))

    for j in range(len(basis)):
        push_pairs(j)
    done = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        done += 1
        if done > max_pairs:
            raise CapacityError(f"Buchberger exceeded the budget of {max_pairs} pair reductions")
        h = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if h:
            basis.append(h.monic())
            push_pairs(len(basis) - 1)
    return GroebnerBasis(tuple(_interreduce(basis)), True)


class GBCheck(NamedTuple):
    ok: bool
    pair: tuple | None = None
    remainder: Polynomial | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_gb(candidate: Sequence[Polynomial]) -> GBCheck:
    """Buchberger's criterion over every pair, coprime ones included.

    On failure the first pair (i, j) in lexicographic order whose S-polynomial
    has a nonzero remainder is returned with that remainder.
    """
    if not candidate:
        raise DomainError("verify_gb needs a nonempty list")
    gens = [g for g in candidate if not g.is_zero()]
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            rem = normal_form(s_polynomial(gens[i], gens[j]), gens)
            if rem:
                return GBCheck(False, (i, j), rem)
    return GBCheck(True)


def monomials_of_degree(nvars: int, d: int):
    return compositions(d, nvars)


def initial_ideal_counts(gb: GroebnerBasis, through_degree: int, nvars: int | None = None) -> list:
    """counts[d] = number of degree-d monomials outside the initial ideal."""
    if not gb.certified:
        raise DomainError("standard monomials need a certified basis")
    leads = gb.leads
    if nvars is None:
        if not leads:
            raise DomainError("cannot infer the number of variables from an empty basis")
        nvars = len(leads[0])
    counts = []
    for d in range(through_degree + 1):
        c = 0
        for m in monomials_of_degree(nvars, d):
            if not any(mono_divides(l, m) for l in leads):
                c += 1
        counts.append(c)
    return counts


def kappa_generators(data: ScrollData) -> list:
    """G together with L: generators of the preimage of K^(n) in S."""
    return minors_of(data) + [Polynomial.monomial(m, 1, data.prime)
                              for m in generating_set_L(data)]


def spair_degree_check(data: ScrollData) -> list:
    """For each (m in L, h in G) the S-polynomial is a single monomial of Deg >= n.

    Returns the list of (m, h, spoly) triples; raises InvariantViolation otherwise.
    """
    lay = data.layout
    out = []
    for m in generating_set_L(data):
        mp = Polynomial.monomial(m, 1, data.prime)
        for h in minors_of(data):
            sp = s_polynomial(mp, h)
            if sp.is_zero():
                out.append((m, h, sp))
                continue
            if not sp.is_monomial():
                raise InvariantViolation(f"S({lay.format(m)}, {h.format(lay)}) is not a monomial")
            if lay.Deg(sp.lead_monomial) < data.n:
                raise InvariantViolation(
                    f"S({lay.format(m)}, {h.format(lay)}) = {sp.format(lay)} has Deg < n")
            out.append((m, h, sp))
    return out


def socle_witness_fdeg(data: ScrollData) -> FineDegree:
    """Fine degree of a monomial spanning a socle element of
    A / (A_{>=n} + x A), x = T_{l,s_l+1}.

    With s = sigma_l and c = floor((n-2)/s) this is the block-l monomial of
    total degree c+1 with alpha = n-1; for n = 2 it is T_{l,s}.
    """
    s = data.sigma[-1]
    c = (data.n - 2) // s
    e = [0] * data.ell
    e[-1] = c + 1
    return FineDegree(data.n - 1, (c + 1) * s - data.n + 1, tuple(e))


@dataclass(frozen=True)
class DepthCertificate:
    regular_element: Monomial
    regular_on_quotient: bool
    witness: Monomial
    witness_nonzero: bool
    annihilated_by: tuple  # per-variable booleans
    basis_size: int

    @property
    def ok(self) -> bool:
        return self.regular_on_quotient and self.witness_nonzero and all(self.annihilated_by)


def depth_certificate(data: ScrollData, max_pairs: int = DEFAULT_MAX_PAIRS) -> DepthCertificate:
    """Certify depth A / K^(n) = 1.

    (i) x = T_{l,s_l+1} divides no lead of G u L, so x is regular on S/kappa;
    (ii) a monomial w is nonzero modulo kappa + (x) while every variable times
    w vanishes there, so the depth of S/(kappa + x) is 0.
    """
    lay = data.layout
    x = lay.variable(data.ell, data.sigma[-1] + 1)
    gens = kappa_generators(data)
    regular = not any(mono_divides(x, g.lead_monomial) for g in gens)
    gb = buchberger(gens + [Polynomial.monomial(x, 1, data.prime)], max_pairs)
    w = lift_fdeg(socle_witness_fdeg(data), data)
    wp = Polynomial.monomial(w, 1, data.prime)
    nonzero = not gb.normal_form(wp).is_zero()
    killed = []
    for p in range(lay.nvars):
        v = [0] * lay.nvars
        v[p] = 1
        killed.append(gb.normal_form(Polynomial.monomial(mono_mul(w, tuple(v)), 1, data.prime)).is_zero())
    cert = DepthCertificate(x, regular, w, nonzero, tuple(killed), len(gb))
    if not cert.ok:
        raise InvariantViolation(f"depth certificate failed for sigma={data.sigma}, n={data.n}: {cert}")
    return cert
