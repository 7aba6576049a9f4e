import itertools
from collections import Counter

import pytest

from scrolldiv import _kernels_py, kernels
from scrolldiv.betti import (BettiTable, expected_pd, expected_reg, invariants_from_betti,
                             koszul_betti, strand_homology, vanishing_degree, weight_cap)
from scrolldiv.errors import ConfigurationError, IncompleteError, InvariantViolation
from scrolldiv.resolution import total_resolution
from scrolldiv.scroll import A_monomial_basis, ScrollData
from scrolldiv.symbolic import generating_set_L

from conftest import DESK, DESK_SIGMAS


def test_oracle_examples():
    d = ScrollData((1, 1), 2)
    t = koszul_betti(d)
    assert t.entries[(0, 2)] == 3
    assert invariants_from_betti(t, d) == (2, 2, 2)
    d = ScrollData((2, 1), 3)
    t = koszul_betti(d)
    assert t.row(0) == {2: 3, 3: 1}
    assert invariants_from_betti(t, d) == (3, 2, 3)
    assert invariants_from_betti(koszul_betti(ScrollData((2, 2), 3)), ScrollData((2, 2), 3)) == (4, 2, 2)
    d = ScrollData((3, 2, 1), 4)
    assert invariants_from_betti(koszul_betti(d), d) == (7, 2, 4)


def test_frozen_tables():
    # values produced by the oracle and cross-checked against the resolution
    # ranks (Betti numbers never exceed them) and the L census
    assert koszul_betti(ScrollData((2, 1), 3)).total_betti() == [4, 9, 6, 1]
    assert koszul_betti(ScrollData((2, 2), 3)).total_betti() == [6, 20, 24, 12, 2]
    assert koszul_betti(ScrollData((3, 2, 1), 4)).total_betti() == [9, 51, 122, 160, 125, 59, 16, 2]
    assert koszul_betti(ScrollData((2, 1), 3)).diagram() == {2: {0: 3, 1: 6, 2: 3}, 3: {0: 1, 1: 3, 2: 3, 3: 1}}


def test_incomplete_refused():
    d = ScrollData((2, 1), 3)
    t = koszul_betti(d, degree_bound=3)
    assert not t.complete
    with pytest.raises(IncompleteError):
        invariants_from_betti(t, d)


def test_invariant_violation_raised():
    d = ScrollData((2, 1), 3)
    t = koszul_betti(d)
    fake = BettiTable(dict(t.entries), t.degree_bound, True, t.prime)
    fake.entries[(0, 9)] = 1
    with pytest.raises(InvariantViolation):
        invariants_from_betti(fake, d)
    assert invariants_from_betti(fake, d, check=False).reg == 9


@pytest.mark.parametrize("case", DESK, ids=str)
def test_oracle_invariants(case):
    d = ScrollData(*case)
    t = koszul_betti(d)
    assert t.complete
    assert invariants_from_betti(t, d) == (expected_pd(d), 2, expected_reg(d))
    census = Counter(sum(m) for m in generating_set_L(d))
    assert t.row(0) == dict(sorted(census.items()))
    assert all(d_ >= -(-d.n // d.sigma[0]) for (_, d_) in t.entries)
    # the filtration resolution dominates the minimal one degree by degree
    for kind in ("fine", "coarse"):
        res = total_resolution(d, kind)
        for (i, deg), b in t.entries.items():
            assert i < len(res.modules)
            assert b <= res.modules[i].total_degrees()[deg]


@pytest.mark.parametrize("sigma", DESK_SIGMAS)
def test_vanishing_beyond_bound(sigma):
    """Strands past the certified bound really are exact (two extra degrees)."""
    d = ScrollData(sigma, 3)
    v = vanishing_degree(d)
    for k in (v, v + 1):
        for D in A_monomial_basis(d, k):
            if D.alpha >= d.n:
                assert not any(strand_homology(D, d))


def test_strand_outside_support_is_zero():
    d = ScrollData((2, 1), 3)
    from scrolldiv.algebra import FineDegree
    assert not any(strand_homology(FineDegree(2, 1, (1, 0)), d))
    assert not any(strand_homology(FineDegree(1, 1, (1, 0)), d))


def test_threads_env(monkeypatch):
    d = ScrollData((3, 2), 4)
    base = koszul_betti(d, threads=1)
    monkeypatch.setenv("SCROLLDIV_THREADS", "4")
    assert koszul_betti(d).entries == base.entries
    monkeypatch.setenv("SCROLLDIV_THREADS", "zero")
    with pytest.raises(ConfigurationError):
        koszul_betti(d)


@pytest.mark.parametrize("sigma", DESK_SIGMAS)
def test_cross_characteristic(sigma):
    for n in (2, 4):
        tables = [koszul_betti(ScrollData(sigma, n, p)).entries for p in (7, 101, 32003)]
        assert tables[0] == tables[1] == tables[2]


def test_fine_table():
    d = ScrollData((2, 1), 3)
    t = koszul_betti(d, fine=True)
    agg = Counter()
    for (i, D), v in t.fine.items():
        agg[(i, D.total)] += v
    assert dict(agg) == t.entries
    gens = {D for (i, D) in t.fine if i == 0}
    assert gens == {d.layout.fdeg(m) for m in generating_set_L(d)}


# -- kernel backends ---------------------------------------------------------

def _vertex_data(sigma):
    al, be, bl = [], [], []
    for u, s in enumerate(sigma):
        for j in range(1, s + 2):
            al.append(s + 1 - j)
            be.append(j - 1)
            bl.append(u)
    return al, be, bl


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled kernel not built")
@pytest.mark.parametrize("sigma", DESK_SIGMAS)
def test_backend_parity(sigma):
    from scrolldiv import _kernels
    al, be, bl = _vertex_data(sigma)
    cap = weight_cap(sigma)
    ecaps = itertools.product(*[range(s + 2) for s in sigma])
    for e in ecaps:
        for a in range(-1, cap + 1, 2):
            for b in range(0, cap + 1, 3):
                for p in (7, 32003):
                    want = _kernels_py.koszul_homology(al, be, bl, list(e), a, b, p)
                    assert _kernels.koszul_homology(al, be, bl, list(e), a, b, p) == want


def test_rank_mod_p_backends():
    rows = [{0: 1, 1: 2}, {0: 2, 1: 4}, {1: 1, 2: 5}]
    assert _kernels_py.rank_mod_p(rows, 7) == 2
    assert kernels.rank_mod_p(rows, 7) == 2
    assert _kernels_py.rank_mod_p([{0: 7}], 7) == 0
    assert kernels.rank_mod_p([], 7) == 0


def test_simplex_and_sphere():
    # full simplex on 3 vertices: acyclic; its boundary (no top face): H_1 = 1
    al, be, bl = [1, 1, 1], [0, 0, 0], [0, 1, 2]
    assert _kernels_py.koszul_homology(al, be, bl, [1, 1, 1], 3, 0, 101) == [0, 0, 0, 0]
    assert _kernels_py.koszul_homology(al, be, bl, [1, 1, 1], 2, 0, 101) == [0, 0, 1, 0]
    assert kernels.koszul_homology(al, be, bl, [1, 1, 1], 2, 0, 101) == [0, 0, 1, 0]
    # void complex
    assert kernels.koszul_homology(al, be, bl, [1, 1, 1], -1, 0, 101) == [0, 0, 0, 0]


def test_pure_python_env_switch():
    import subprocess
    import sys
    out = subprocess.run([sys.executable, "-c", "from scrolldiv import kernels; print(kernels.BACKEND)"],
                         env={"SCROLLDIV_PURE_PYTHON": "1", "PATH": ""}, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
