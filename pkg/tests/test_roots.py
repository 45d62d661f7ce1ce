from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from laxosp.roots import (
    WeightVector,
    bilinear,
    cartan_matrix,
    check_n,
    rho,
    root_data,
    root_parity,
    simple_root_decomposition,
    simple_root_labels,
    simple_roots,
)


def test_bilinear_examples():
    k = 2
    e1, d1 = WeightVector.epsilon(k), WeightVector.delta(k, 1)
    assert bilinear(e1, e1) == 1
    assert bilinear(d1, d1) == -1
    assert bilinear(e1, d1) == 0
    roots = simple_roots(4)
    assert bilinear(roots["s"], roots["t"]) == -2


def test_bilinear_rank_mismatch():
    with pytest.raises(ValueError):
        bilinear(WeightVector.zero(1), WeightVector.zero(2))


def test_simple_roots_shape():
    assert simple_root_labels(2) == ("s", "t")
    assert simple_root_labels(6) == ("a1", "a2", "s", "t")
    r = simple_roots(6)
    assert r["a1"] == WeightVector.delta(3, 1) - WeightVector.delta(3, 2)
    assert r["s"] == WeightVector.delta(3, 3) - WeightVector.epsilon(3)
    assert r["t"] == WeightVector.delta(3, 3) + WeightVector.epsilon(3)
    assert bilinear(r["s"], r["s"]) == 0 and bilinear(r["t"], r["t"]) == 0
    assert root_parity("s") == root_parity("t") == 1 and root_parity("a1") == 0


def test_cartan_examples():
    a4 = cartan_matrix(4)
    assert a4["a1", "s"] == -1
    assert a4["a1", "a1"] == 2
    a2 = cartan_matrix(2)
    assert set(a2) == {("s", "s"), ("s", "t"), ("t", "s"), ("t", "t")}
    assert a2["s", "t"] == -2 and a2["s", "s"] == 0


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_cartan_isotropic_diagonal(n):
    a = cartan_matrix(n)
    assert a["s", "s"] == 0 and a["t", "t"] == 0
    for mu in range(1, n // 2):
        assert a[f"a{mu}", f"a{mu}"] == 2


def test_rho():
    assert rho(2) == WeightVector.zero(1)
    assert rho(4) == WeightVector(Fraction(0), (Fraction(1), Fraction(0)))
    assert rho(6).deltas == (2, 1, 0)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_rho_pairs_with_simple_roots(n):
    # (rho, alpha) = (alpha, alpha)/2 for every simple root of this graded form
    for alpha in simple_roots(n).values():
        assert bilinear(rho(n), alpha) == bilinear(alpha, alpha) / 2


@given(st.sampled_from([2, 4, 6, 8]), st.data())
def test_decomposition_inverts(n, data):
    k = n // 2
    coeffs = {c: Fraction(data.draw(st.integers(-4, 4))) for c in simple_root_labels(n)}
    w = WeightVector.zero(k)
    for c, a in simple_roots(n).items():
        w = w + a * coeffs[c]
    assert simple_root_decomposition(n, w) == coeffs


def test_two_eps_is_extended_root():
    d = simple_root_decomposition(4, WeightVector.epsilon(2, 2))
    assert d == {"a1": 0, "s": -1, "t": 1}


@pytest.mark.parametrize("bad", [0, 1, 3, -2, 2.0, True, "4"])
def test_check_n(bad):
    with pytest.raises(ValueError):
        check_n(bad)


def test_root_data_cached():
    assert root_data(4) is root_data(4)
    assert root_data(4).labels == ("a1", "s", "t")
