from math import comb

import pytest

from scrolldiv.algebra import FineDegree, Polynomial
from scrolldiv.errors import ConfigurationError, DomainError
from scrolldiv.groebner import buchberger, initial_ideal_counts
from scrolldiv.scroll import (A_monomial_basis, K_generators, ScrollData, build_psi, lift_fdeg,
                              minors_H, minors_of, pi_image)

from conftest import DESK_SIGMAS, T


@pytest.mark.parametrize("bad", [(1, 2), (), (0,), (2, -1)])
def test_bad_sigma(bad):
    with pytest.raises(ConfigurationError):
        ScrollData(bad, 2)


@pytest.mark.parametrize("n", [1, 0, -3])
def test_bad_n(n):
    with pytest.raises(ConfigurationError):
        ScrollData((2, 1), n)


def test_bad_prime():
    with pytest.raises(ConfigurationError):
        ScrollData((2, 1), 2, prime=100)


def test_build_psi():
    psi = build_psi(ScrollData((2, 1), 2))
    assert psi.blocks == ((((1, 1), (1, 2)), ((1, 2), (1, 3))), (((2, 1),), ((2, 2),)))
    assert build_psi(ScrollData((1,), 2)).columns == (((1, 1), (1, 2)),)
    psi = build_psi(ScrollData((3, 2, 1), 2))
    assert psi.ncols == 6
    assert [len(b[0]) for b in psi.blocks] == [3, 2, 1]
    for top, bot in psi.columns:
        assert top[0] == bot[0] and bot[1] == top[1] + 1


def test_minors_examples():
    d = ScrollData((2, 1), 2)
    assert [h.format(d.layout) for h in minors_of(d)] == [
        "T1_2^2 - T1_1*T1_3", "T1_2*T2_1 - T1_1*T2_2", "T1_3*T2_1 - T1_2*T2_2"]
    d = ScrollData((1, 1), 2)
    assert [h.format(d.layout) for h in minors_of(d)] == ["T1_2*T2_1 - T1_1*T2_2"]
    assert minors_of(ScrollData((1,), 2)) == []


@pytest.mark.parametrize("sigma", DESK_SIGMAS)
def test_minor_invariants(sigma):
    d = ScrollData(sigma, 2)
    hs = minors_H(build_psi(d))
    assert len(hs) == comb(sum(sigma), 2)
    for h in hs:
        assert h.lead_coefficient == 1
        (c1, m1), (c2, m2) = h.terms
        assert pi_image(m1, d) == pi_image(m2, d)


def test_K_generators():
    fmt = lambda s: [ScrollData(s, 2).layout.format(m) for m in K_generators(ScrollData(s, 2))]
    assert fmt((2, 1)) == ["T1_1", "T1_2", "T2_1"]
    assert fmt((1, 1)) == ["T1_1", "T2_1"]
    assert fmt((3,)) == ["T1_1", "T1_2", "T1_3"]


def test_pi_image():
    d = ScrollData((2, 1), 2)
    assert pi_image(T(d, (1, 2)), d) == FineDegree(1, 1, (1, 0))
    assert pi_image(T(d, (1, 2), (2, 1)), d) == pi_image(T(d, (1, 1), (2, 2)), d) == \
        FineDegree(2, 1, (1, 1))
    assert pi_image(d.layout.one(), d) == FineDegree(0, 0, (0, 0))


def test_A_basis_counts():
    d = ScrollData((2, 1), 2)
    assert len(A_monomial_basis(d, 1)) == 5
    assert len(A_monomial_basis(d, 2)) == 12
    assert len(A_monomial_basis(d, 0)) == 1
    with pytest.raises(DomainError):
        A_monomial_basis(d, -1)


@pytest.mark.parametrize("sigma", DESK_SIGMAS)
def test_A_basis_matches_standard_monomials(sigma):
    d = ScrollData(sigma, 2)
    gb = buchberger(minors_of(d))
    counts = initial_ideal_counts(gb, 5, d.nvars)
    assert counts == [len(A_monomial_basis(d, k)) for k in range(6)]


@pytest.mark.parametrize("sigma", DESK_SIGMAS)
def test_pi_injective_on_A(sigma):
    """Monomials are congruent mod H iff their images agree."""
    d = ScrollData(sigma, 2)
    gb = buchberger(minors_of(d))
    for k in range(4):
        seen = {}
        for D in A_monomial_basis(d, k):
            m = lift_fdeg(D, d)
            assert pi_image(m, d) == D
            nf = gb.normal_form(Polynomial.monomial(m))
            assert nf.is_monomial()
            assert nf.lead_monomial not in seen
            seen[nf.lead_monomial] = D


def test_lift_outside_support():
    d = ScrollData((2, 1), 2)
    with pytest.raises(DomainError):
        lift_fdeg(FineDegree(3, 1, (1, 0)), d)
