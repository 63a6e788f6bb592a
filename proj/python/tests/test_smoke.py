from fractions import Fraction

import pytest

import dbscells as dc


@pytest.fixture
def a2():
    return dc.Setup("A2", u=[1, 2], v=[1, 2], eps=[-1, 1, -1, 1])


@pytest.fixture
def a3():
    return dc.Setup("A3", u=[2, 3, 1, 3], v=[3, 1, 2, 1], eps=[-1, -1, 1, 1, -1, 1, -1, 1])


def test_setup_fields(a2):
    assert a2.n == 4
    assert a2.sigma_word == [1, 1, 2, 2]


def test_enumerate_counts(a2):
    recs = dc.enumerate(a2)
    assert len(recs) == 16
    # every mask is distinguished or not; positive implies distinguished
    assert all(r["distinguished"] for r in recs if r["positive"])
    assert len(dc.enumerate(a2, "positive")) == sum(r["positive"] for r in recs)


def test_profile_dimension(a2):
    p = dc.profile(a2, "0100")
    assert p["J"] == [2]
    assert p["dim"] == 3


def test_psi_strings(a3):
    psi = dc.psi(a3, "01111000")
    assert len(psi) == 8
    assert psi[0] == "z1"


def test_monomial_inverse(a3):
    rep = dc.monomial(a3, "10100010", samples=3, seed=1)
    M, L = rep["M"], rep["L"]
    s = len(M)
    for r in range(s):
        for c in range(s):
            assert sum(M[r][i] * L[i][c] for i in range(s)) == (r == c)
    assert rep["failures"] == 0


def test_factorize_round_trip(a3):
    mask = "10100010"
    xi = [0 if b == "1" else Fraction(k + 2, 3) for k, b in enumerate(mask)]
    z = dc.factorize_to_z(a3, mask, xi)
    assert all(isinstance(x, Fraction) for x in z)
    assert dc.cell_test(a3, mask, z)


def test_invalid_input():
    with pytest.raises(dc.InvalidInput):
        dc.Setup("A2", u=[1, 2], v=[1], eps=[-1, 1])
    with pytest.raises(dc.Error):
        dc.Setup("Q7", u=[], v=[], eps=[])


def test_criterion_runs():
    r = dc.run_criterion(2)
    assert r["passed"]
    assert dc.criterion_count == 14
