from fractions import Fraction

import pytest

from laxosp.graded import GradedMatrix, gcomm, gdagger
from laxosp.qscalar import EvalPoint, q_power
from laxosp.roots import bilinear, root_data
from laxosp.sigma import closed_form_sigma
from laxosp.vector_rep import (
    adjoint_compact,
    adjoint_sweedler,
    check_defining_relations,
    coproduct_matrix,
    quantum_integer,
    rep_generator,
    tensor_rep,
    token_matrix,
    vector_rep,
    word_antipode,
    word_coproduct,
)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_defining_relations_symbolic(n):
    rep = check_defining_relations(n)
    assert rep.status == "pass", rep.summary()
    assert rep.instances > 0


@pytest.mark.parametrize("q", [Fraction(3, 2), Fraction(4), Fraction(2, 7)])
def test_defining_relations_numeric(q):
    assert check_defining_relations(4, EvalPoint(q)).status == "pass"


@pytest.mark.parametrize("n", [4, 6])
def test_tabulated_even_lowering_sign(n):
    # the tabulated f_mu satisfies [e_mu, f_mu] = -[h_mu]_q, which is why the default flips it
    pi = vector_rep(n)
    e = rep_generator(n, "e", "a1")
    literal = rep_generator(n, "f", "a1", literal=True)
    qint = GradedMatrix.diagonal(pi.table, 1, lambda i: quantum_integer(pi.h["a1"][i]))
    assert gcomm(e, literal) == -qint
    assert gcomm(e, pi.f["a1"]) == qint


def test_rep_generator_validation():
    with pytest.raises(ValueError):
        rep_generator(2, "e", "a1")
    with pytest.raises(ValueError):
        rep_generator(4, "x", "s")


def test_n2_vector_images():
    t = vector_rep(2).table
    e_s = rep_generator(2, "e", "s")
    # e_s = E^{mu=1}_{i=1} + (-1)^k E^{ibar}_{mubar}
    assert e_s.sorted_entries() == [(0, 1, q_power(0)), (2, 3, -q_power(0))]
    assert gdagger(vector_rep(2).e["t"]) == vector_rep(2).f["t"]
    assert t.dim == 4


@pytest.mark.parametrize("n", [2, 4])
def test_h_eigenvalues_are_weights(n):
    pi = vector_rep(n)
    rd = root_data(n)
    for c in rd.labels:
        assert pi.h[c] == tuple(bilinear(rd.simple[c], w) for w in pi.table.weights)


@pytest.mark.parametrize("n", [2, 4])
def test_coproduct_is_homomorphism(n):
    pi = vector_rep(n)
    rho = tensor_rep(pi, pi)
    rd = root_data(n)
    for a in rd.labels:
        for b in rd.labels:
            expected = GradedMatrix.zero(rho.table, 2)
            if a == b:
                expected = GradedMatrix.diagonal(rho.table, 2, lambda i: quantum_integer(rho.h[a][i]))
            assert gcomm(rho.e[a], rho.f[b]) == expected
    assert rho.e["s"] == coproduct_matrix(n, "e", "s")


def test_coproduct_matrix_kinds():
    pi = vector_rep(2)
    assert coproduct_matrix(2, "qh", "s") @ coproduct_matrix(2, "qh_inv", "s") == GradedMatrix.identity(pi.table, 2)
    h = coproduct_matrix(2, "h", "t")
    assert h == coproduct_matrix(2, "h", "t", twisted=True)
    with pytest.raises(ValueError):
        coproduct_matrix(2, "e", "a1")
    with pytest.raises(ValueError):
        coproduct_matrix(2, "z", "s")


def test_antipode_axiom():
    # m (S x id) Delta (x) = epsilon(x) = 0 for x = e_c, f_c, realised in pi
    for n in (2, 4):
        pi = vector_rep(n)
        for c in pi.labels:
            for kind in ("e", "f"):
                word = ((kind, c),)
                total = GradedMatrix.zero(pi.table)
                for coef, left, right in word_coproduct(word):
                    for cs, sl in word_antipode(n, left):
                        m = GradedMatrix.identity(pi.table)
                        for tok in sl + right:
                            m = m @ token_matrix(pi, tok)
                        total = total + m * (coef * cs)
                assert total.is_zero()


@pytest.mark.parametrize("n", [2, 4])
def test_adjoint_forms_agree(n):
    pi = vector_rep(n)
    t = pi.table
    rd = root_data(n)
    for c in rd.labels:
        for b, a in t.strict_pairs():
            X = closed_form_sigma(n, b, a)
            weight = t.weight(b) - t.weight(a)
            sweedler = adjoint_sweedler(pi, (("e", c), ("K", c, Fraction(1, 2))), X)
            assert sweedler == adjoint_compact(pi, c, X, weight)


def test_quantum_integer():
    assert quantum_integer(0).is_zero()
    assert quantum_integer(1) == q_power(0)
    assert quantum_integer(2) == q_power(1) + q_power(-1)
    assert quantum_integer(-2) == -quantum_integer(2)
