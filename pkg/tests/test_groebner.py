import pytest

from scrolldiv.algebra import Polynomial, mono_divides
from scrolldiv.errors import CapacityError, DomainError
from scrolldiv.groebner import (buchberger, depth_certificate, initial_ideal_counts,
                                kappa_generators, socle_witness_fdeg, spair_degree_check,
                                verify_gb)
from scrolldiv.scroll import A_monomial_basis, ScrollData, minors_of

from conftest import DESK, T


def test_minors_already_gb():
    d = ScrollData((2, 1), 2)
    G = minors_of(d)
    gb = buchberger(G)
    assert sorted(gb.leads) == sorted(g.lead_monomial for g in G)


def test_principal():
    d = ScrollData((2, 1), 2)
    f = Polynomial.monomial(T(d, (1, 1)))
    assert buchberger([f]).generators == (f,)


def test_completion_adds_lead():
    d = ScrollData((2, 1), 2)
    h = Polynomial.binomial(T(d, (1, 2), (2, 1)), T(d, (1, 1), (2, 2)))
    gb = buchberger([h, Polynomial.monomial(T(d, (1, 1)))])
    assert T(d, (1, 2), (2, 1)) in gb.leads
    assert verify_gb(list(gb.generators)).ok


def test_empty_input():
    with pytest.raises(DomainError):
        buchberger([])
    with pytest.raises(DomainError):
        verify_gb([])


def test_capacity():
    d = ScrollData((3, 2, 1), 4)
    with pytest.raises(CapacityError):
        buchberger(kappa_generators(d), max_pairs=2)


def test_verify_examples():
    assert verify_gb(minors_of(ScrollData((3, 2, 1), 2))).ok
    assert verify_gb(kappa_generators(ScrollData((2, 1), 3))).ok


def test_verify_negative_control():
    # drop the minor T12 T21 - T11 T22 and keep the rest: no longer a basis
    d = ScrollData((2, 1), 3)
    gens = kappa_generators(d)
    h = gens.pop(1)
    assert h.lead_monomial == T(d, (1, 2), (2, 1))
    res = verify_gb(gens)
    assert not res.ok
    assert res.pair is not None and not res.remainder.is_zero()
    # an honest failure: the remainder is in the ideal but escapes the leads
    assert not any(mono_divides(g.lead_monomial, res.remainder.lead_monomial) for g in gens)


def test_initial_counts_examples():
    d = ScrollData((2, 1), 2)
    gb = buchberger(minors_of(d))
    assert initial_ideal_counts(gb, 2) == [1, 5, 12]


@pytest.mark.parametrize("case", DESK, ids=str)
def test_kappa_basis_certified(case):
    d = ScrollData(*case)
    gens = kappa_generators(d)
    assert verify_gb(minors_of(d)).ok
    assert verify_gb(gens).ok
    gb = buchberger(gens)
    leads = [g.lead_monomial for g in gens]
    minimal = {m for m in leads if not any(o != m and mono_divides(o, m) for o in leads)}
    assert set(gb.leads) == minimal
    for m, h, sp in spair_degree_check(d):
        assert sp.is_zero() or (sp.is_monomial() and d.layout.Deg(sp.lead_monomial) >= d.n)
    counts = initial_ideal_counts(gb, 4, d.nvars)
    assert counts == [sum(1 for D in A_monomial_basis(d, k) if D.alpha < d.n) for k in range(5)]


def test_leads_can_shrink():
    # an element of L divides minor leads, so the reduced basis drops them
    d = ScrollData((3,), 2)
    gens = kappa_generators(d)
    gb = buchberger(gens)
    assert len(gb) < len(gens)


@pytest.mark.parametrize("case", DESK, ids=str)
def test_depth_certificate(case):
    d = ScrollData(*case)
    cert = depth_certificate(d)
    assert cert.ok
    assert d.layout.fdeg(cert.witness) == socle_witness_fdeg(d)


def test_depth_witness_examples():
    for sigma, n, w in [((2, 1), 2, "T2_1"), ((1, 1), 2, "T2_1"), ((3, 2, 1), 4, "T3_1^3"),
                        ((3, 2), 2, "T2_2"), ((2, 2), 4, "T2_1*T2_2")]:
        d = ScrollData(sigma, n)
        assert d.layout.format(depth_certificate(d).witness) == w


def test_naive_witness_fails_for_large_n():
    # the last-block variable T_{l,sigma_l} is not a socle witness once n > sigma_l + 1
    d = ScrollData((2, 1), 3)
    x = d.layout.variable(2, 2)
    gb = buchberger(kappa_generators(d) + [Polynomial.monomial(x)])
    w = d.layout.variable(2, 1)
    assert not gb.normal_form(Polynomial.monomial(T(d, (2, 1), (2, 1)))).is_zero()
    assert not gb.normal_form(Polynomial.monomial(w)).is_zero()
