"""Eligible tuples, the monomial generating set L of K^(n), and membership in
K^(n) = A_{>=n}.

An eligible k-tuple a (0 <= k <= l-1) satisfies sum a_u sigma_u < n.  Write
s(a) for that sum; f(a) is the unique integer with
s(a) + f sigma_{k+1} < n <= s(a) + (f+1) sigma_{k+1}, and
r(a) = s(a) + (f+1) sigma_{k+1} - n + 1 lies in [1, sigma_{k+1}].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .algebra import FineDegree, Monomial, Polynomial, mono_mul
from .errors import DomainError
from .scroll import ScrollData


@dataclass(frozen=True, order=False)
class EligibleTuple:
    a: tuple
    f: int
    r: int

    @property
    def k(self) -> int:
        return len(self.a)

    def order_key(self, data: ScrollData) -> tuple:
        # missing entries count as +infinity; no entry can reach n
        return self.a + (data.n,) * (data.ell - 1 - self.k)

    def __str__(self) -> str:
        inner = ",".join(map(str, self.a))
        return f"({inner})" if self.a else "()"


def weight(a: tuple, data: ScrollData) -> int:
    return sum(x * s for x, s in zip(a, data.sigma))


def make_eligible(a, data: ScrollData) -> EligibleTuple:
    a = tuple(int(x) for x in a)
    k = len(a)
    if k > data.ell - 1 or any(x < 0 for x in a):
        raise DomainError(f"{a} is not a k-tuple with 0 <= k <= {data.ell - 1}")
    w = weight(a, data)
    if w >= data.n:
        raise DomainError(f"{a} is not eligible: weight {w} >= n = {data.n}")
    s = data.sigma[k]
    f = -(-(data.n - w) // s) - 1
    r = w + (f + 1) * s - data.n + 1
    assert 1 <= r <= s
    return EligibleTuple(a, f, r)


def enumerate_eligible(data: ScrollData) -> list:
    """All eligible tuples, largest first (so () leads and 0^(l-1) ends)."""
    found = []

    def walk(prefix, w):
        found.append(prefix)
        if len(prefix) == data.ell - 1:
            return
        s = data.sigma[len(prefix)]
        x = 0
        while w + x * s < data.n:
            walk(prefix + (x,), w + x * s)
            x += 1

    walk((), 0)
    out = [make_eligible(a, data) for a in found]
    out.sort(key=lambda t: t.order_key(data), reverse=True)
    return out


def neighbor_N(t: EligibleTuple, data: ScrollData) -> EligibleTuple:
    """N(a) = (a, f(a)), the immediate successor of a in the eligible order."""
    if t.k >= data.ell - 1:
        raise DomainError(f"N is undefined on the (l-1)-tuple {t}")
    return make_eligible(t.a + (t.f,), data)


class LElement(NamedTuple):
    source: EligibleTuple
    u: int
    monomial: Monomial


def L_elements(data: ScrollData) -> list:
    """L with provenance: T^a T_{k+1,1}^f(a) T_{k+1,u} for 1 <= u <= r(a)."""
    lay = data.layout
    out = []
    for t in enumerate_eligible(data):
        base = {(i, 1): x for i, x in enumerate(t.a, start=1) if x}
        base[(t.k + 1, 1)] = base.get((t.k + 1, 1), 0) + t.f
        stem = lay.monomial(base)
        for u in range(1, t.r + 1):
            out.append(LElement(t, u, mono_mul(stem, lay.variable(t.k + 1, u))))
    return out


def generating_set_L(data: ScrollData) -> list:
    return [e.monomial for e in L_elements(data)]


def check_minimality(L: list, data: ScrollData) -> tuple:
    """(True, None) if no image of an element of L divides the image of another
    element in k[x, y, t]; otherwise (False, (divisor, multiple))."""
    if not L:
        raise DomainError("minimality of an empty list")
    images = [data.layout.fdeg(m) for m in L]
    for i, di in enumerate(images):
        for j, dj in enumerate(images):
            if i != j and di.divides(dj):
                return False, (L[i], L[j])
    return True, None


def canonical_form(m: Monomial, data: ScrollData) -> Monomial:
    """The monomial T_{1,1}^a1 ... T_{k,v} ... T_{l,s_l+1}^bl congruent to m mod H.

    Repeatedly take the largest support variable T_{i,j} with j > 1 and the
    smallest support variable T_{u,v} with v <= sigma_u and, while T_{i,j} is
    not smaller than T_{u,v}, replace T_{i,j} T_{u,v} by T_{i,j-1} T_{u,v+1}.
    Each step swaps the lead of a minor for its tail, so the result is the
    standard monomial of m with respect to the minors.
    """
    lay = data.layout
    lay.check(m)
    if lay.Deg(m) == 0:
        raise DomainError("canonical form is only defined for Deg(m) > 0")
    ids = lay.var_ids
    sigma = data.sigma
    cur = list(m)
    while True:
        x = next((p for p, c in enumerate(cur) if c and ids[p][1] > 1), None)
        y = next((p for p in range(len(cur) - 1, -1, -1)
                  if cur[p] and ids[p][1] <= sigma[ids[p][0] - 1]), None)
        if x is None or y is None or x > y or (x == y and cur[x] < 2):
            return tuple(cur)
        cur[x] -= 1
        cur[y] -= 1
        cur[x - 1] += 1
        cur[y + 1] += 1


def in_symbolic_power(m: Monomial, data: ScrollData) -> bool:
    data.layout.check(m)
    return data.layout.Deg(m) >= data.n


def in_symbolic_power_fdeg(D: FineDegree, data: ScrollData) -> bool:
    return D.alpha >= data.n


def saturation_binomial(i: int, j: int, data: ScrollData) -> Polynomial:
    """T_{i,s+1}^(s-j) T_{i,j} - T_{i,s}^(s+1-j), s = sigma_i; it lies in H."""
    lay = data.layout
    s = data.sigma[i - 1]
    if not 1 <= j <= s:
        raise DomainError(f"slot {j} outside 1..{s}")
    left = mono_mul(lay.variable(i, s + 1, s - j), lay.variable(i, j))
    return Polynomial.binomial(left, lay.variable(i, s, s + 1 - j), data.prime)


def saturation_multiplier(g: Monomial, data: ScrollData) -> tuple:
    """(s, target): s is a product of the T_{i,s_i+1} and target is a product of
    top-row variables of degree Deg(g) with s*g = target mod H.

    For g of Deg >= n this exhibits s*g in K^n, the saturation step behind
    K^(n) = A_{>=n}.
    """
    lay = data.layout
    s = [0] * lay.nvars
    target = [0] * lay.nvars
    for p, c in enumerate(g):
        if not c:
            continue
        i, j = lay.var_ids[p]
        top = data.sigma[i - 1]
        if j == top + 1:
            # Deg 0 variable: carried along unchanged on both sides
            target[p] += c
            continue
        s[lay.flat(i, top + 1)] += c * (top - j)
        target[lay.flat(i, top)] += c * (top + 1 - j)
    return tuple(s), tuple(target)
