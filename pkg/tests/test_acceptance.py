"""Acceptance suite: criteria 1-7 over the desk configurations.

Each criterion prints one PASS/FAIL line with its runtime.  Run directly with
``python tests/test_acceptance.py`` or through pytest.
"""
import sys
import time

import pytest

from scrolldiv.algebra import Polynomial
from scrolldiv.betti import expected_pd, expected_reg, invariants_from_betti, koszul_betti
from scrolldiv.groebner import (buchberger, depth_certificate, kappa_generators,
                                spair_degree_check, verify_gb)
from scrolldiv.rees import check_factorization, factor_over_S
from scrolldiv.resolution import euler_check, expected_length, total_resolution
from scrolldiv.scroll import A_monomial_basis, ScrollData, lift_fdeg, minors_of
from scrolldiv.symbolic import check_minimality, generating_set_L

SIGMAS = [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 2, 1)]
NS = [2, 3, 4, 5]
PRIMES = [7, 101, 32003]
MAIN_PRIME = 32003


def desk(prime):
    return [ScrollData(s, n, prime) for s in SIGMAS for n in NS]


def brute_force_generator_count(d):
    """Minimal generators of A_{>=n} found by exhaustive search over fine degrees."""
    top = -(-d.n // d.sigma[-1])
    count = 0
    for k in range(top + 1):
        for D in A_monomial_basis(d, k):
            if D.alpha < d.n:
                continue
            reducible = False
            for v in d.layout.var_fdegs:
                R = D.minus(v)
                if R.alpha >= d.n and R.beta >= 0 and min(R.e) >= 0:
                    reducible = True
                    break
            count += not reducible
    return count


def criterion_1(prime):
    fails, prints = [], []
    for d in desk(prime):
        L = generating_set_L(d)
        minimal, _ = check_minimality(L, d)
        ok = (minimal and all(d.layout.Deg(m) >= d.n for m in L)
              and len(L) == brute_force_generator_count(d))
        if not ok:
            fails.append((d.sigma, d.n))
        prints.append((d.sigma, d.n, tuple(L), minimal))
    return fails, prints


def criterion_2(prime):
    fails, prints = [], []
    for d in desk(prime):
        gb = buchberger(kappa_generators(d))
        members = 0
        for k in range(6):
            for D in A_monomial_basis(d, k):
                m = lift_fdeg(D, d)
                inside = gb.normal_form(Polynomial.monomial(m, 1, prime)).is_zero()
                if inside != (d.layout.Deg(m) >= d.n):
                    fails.append((d.sigma, d.n, D))
                members += inside
        prints.append((d.sigma, d.n, members))
    return fails, prints


def criterion_3(prime):
    fails, prints = [], []
    for d in desk(prime):
        g_ok = verify_gb(minors_of(d)).ok
        gl_ok = verify_gb(kappa_generators(d)).ok
        try:
            spolys = [sp.lead_monomial for _, _, sp in spair_degree_check(d) if sp]
            s_ok = True
        except AssertionError:
            spolys, s_ok = [], False
        if not (g_ok and gl_ok and s_ok):
            fails.append((d.sigma, d.n))
        prints.append((d.sigma, d.n, g_ok, gl_ok, tuple(spolys)))
    return fails, prints


def criterion_4(prime):
    fails, prints = [], []
    for d in desk(prime):
        for kind in ("fine", "coarse"):
            t = total_resolution(d, kind)
            ok, _ = euler_check(d, kind, 8)
            ok = ok and t.length == expected_length(d)
            if kind == "fine":
                ok = ok and t.ranks[0] == len(generating_set_L(d))
            if not ok:
                fails.append((d.sigma, d.n, kind))
            prints.append((d.sigma, d.n, kind, t.ranks))
    return fails, prints


def criterion_5(prime):
    fails, prints = [], []
    for d in desk(prime):
        t = koszul_betti(d)
        inv = invariants_from_betti(t, d, check=False) if t.complete else None
        want = (expected_pd(d), 2, expected_reg(d))
        try:
            cert = depth_certificate(d)
            cert_ok = cert.ok
        except AssertionError:
            cert, cert_ok = None, False
        if inv is None or tuple(inv) != want or not cert_ok:
            fails.append((d.sigma, d.n, inv, want))
        prints.append((d.sigma, d.n, inv, tuple(sorted(t.entries.items())),
                       cert.witness if cert else None))
    return fails, prints


def criterion_6(prime):
    fails, prints = [], []
    for s in SIGMAS:
        for n in range(2, 7):
            d = ScrollData(s, n, prime)
            for g in generating_set_L(d):
                fs = factor_over_S(g, d)
                if not check_factorization(g, fs, d):
                    fails.append((s, n, g))
                prints.append((s, n, g, tuple(fs)))
    return fails, prints


CRITERIA = {
    1: ("generators: minimal, Deg >= n, count matches exhaustive search", criterion_1, 1.0),
    2: ("membership in K^(n) via Groebner normal form <=> Deg >= n (total <= 5)", criterion_2, 30.0),
    3: ("verify_gb on G and G u L; (L, G) S-pairs are monomials of Deg >= n", criterion_3, 60.0),
    4: ("resolution length, rank 0 = |L|, fine Euler characteristic (total <= 8)", criterion_4, 30.0),
    5: ("oracle pd, depth 2, reg formula; depth certificate", criterion_5, 600.0),
    6: ("Rees factorizations for n <= 6", criterion_6, 1.0),
}

_fingerprints = {}


def report(number, ok, elapsed, limit, detail="", capsys=None):
    status = "PASS" if ok else "FAIL"
    budget = f", limit {limit:.0f}s" if limit is not None else ""
    line = f"[{status}] criterion {number}: {detail} ({elapsed:.2f}s{budget})"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return line


def run_criterion(number, prime=MAIN_PRIME):
    desc, fn, limit = CRITERIA[number]
    start = time.perf_counter()
    fails, prints = fn(prime)
    elapsed = time.perf_counter() - start
    return desc, fails, prints, elapsed, limit


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    desc, fails, prints, elapsed, limit = run_criterion(number)
    _fingerprints[(number, MAIN_PRIME)] = prints
    ok = not fails and elapsed < limit
    report(number, ok, elapsed, limit, desc + (f"; failures: {fails[:3]}" if fails else ""), capsys)
    assert not fails, fails[:5]
    assert elapsed < limit


def check_cross_characteristic(capsys=None):
    start = time.perf_counter()
    mismatches = []
    for number in sorted(CRITERIA):
        base = _fingerprints.get((number, MAIN_PRIME))
        if base is None:
            base = run_criterion(number)[2]
        for p in PRIMES:
            if p == MAIN_PRIME:
                continue
            desc, fails, prints, _, _ = run_criterion(number, p)
            if fails or prints != base:
                mismatches.append((number, p))
    elapsed = time.perf_counter() - start
    report(7, not mismatches, elapsed, None,
           "criteria 1-6 identical for p in {7, 101, 32003}"
           + (f"; mismatches: {mismatches}" if mismatches else ""), capsys)
    assert not mismatches


def test_criterion_7_cross_characteristic(capsys):
    check_cross_characteristic(capsys)


if __name__ == "__main__":
    results = []
    for number in sorted(CRITERIA):
        desc, fails, prints, elapsed, limit = run_criterion(number)
        _fingerprints[(number, MAIN_PRIME)] = prints
        results.append(not fails and elapsed < limit)
        report(number, results[-1], elapsed, limit, desc)
    try:
        check_cross_characteristic()
        results.append(True)
    except AssertionError:
        results.append(False)
    sys.exit(0 if all(results) else 1)
