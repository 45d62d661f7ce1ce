"""The vector representation pi of U_q[osp(2|n)] and its coproduct images.

``RepImages`` is any weight representation given by matrices for e_c, f_c
and the diagonal q^{h_c/2}.  Only pi ships; ``tensor_rep`` builds
(rho (x) rho') o Delta from two of them, which is what the fusion checks use.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graded import BasisTable, GradedMatrix, basis_info, elem_matrix, gcomm, graded_twist, gtensor
from .qscalar import ONE, ZERO, EvalPoint, LaurentScalar, q_power
from .report import VerificationReport
from .roots import WeightVector, bilinear, root_data, root_parity


@dataclass(frozen=True, eq=False)
class RepImages:
    table: BasisTable
    arity: int
    labels: tuple[str, ...]
    e: dict[str, GradedMatrix]
    f: dict[str, GradedMatrix]
    h: dict[str, tuple[int, ...]]  # eigenvalue of h_c on each flat basis index
    weights: tuple[WeightVector, ...]

    def qh(self, c: str, power=Fraction(1, 2)) -> GradedMatrix:
        """Diagonal q^{power * h_c}."""
        return _qh(self, c, Fraction(power))

    def h_matrix(self, c: str) -> GradedMatrix:
        eig = self.h[c]
        return GradedMatrix.diagonal(self.table, self.arity, lambda i: LaurentScalar.const(eig[i]))

    def cartan_weight(self, w: WeightVector) -> GradedMatrix:
        """q^{h_w}: acts on a basis vector of weight lambda by q^{(w, lambda)}."""
        ws = self.weights
        return GradedMatrix.diagonal(self.table, self.arity, lambda i: q_power(bilinear(w, ws[i])))

    def E(self, c: str) -> GradedMatrix:
        """e_c q^{h_c/2}."""
        return self.e[c] @ self.qh(c)

    def F(self, c: str) -> GradedMatrix:
        """q^{h_c/2} f_c, the graded conjugate of E_c."""
        return self.qh(c) @ self.f[c]


@lru_cache(maxsize=None)
def _qh(rep: RepImages, c: str, power: Fraction) -> GradedMatrix:
    eig = rep.h[c]
    return GradedMatrix.diagonal(rep.table, rep.arity, lambda i: q_power(power * eig[i]))


def rep_generator(n: int, kind: str, root: str, literal: bool = False) -> GradedMatrix:
    """pi(e_c), pi(f_c) or pi(h_c) in basis positions.

    The customary matrix f_mu = E^{mu+1}_mu + E^{mu-bar}_{(mu+1)-bar} for an even
    simple root satisfies [e_mu, f_mu] = -(q^h - q^-h)/(q - q^-1), because
    (alpha_mu, alpha_mu) = -2 here.  By default f_mu carries the opposite sign
    so that [e_mu, f_mu] = [h_mu]_q; ``literal=True`` gives the customary one.
    """
    t = basis_info(n)
    k = t.k
    if root not in root_data(n).labels:
        raise ValueError(f"invalid simple root {root!r} for n={n}")
    if kind not in ("e", "f", "h"):
        raise ValueError(f"kind must be e, f or h, got {kind!r}")

    def E(a, b):
        return elem_matrix(t, a, b)

    i1, i1b = t.even(1), t.even(2)
    sgn = (-1) ** k
    if root.startswith("a"):
        mu = int(root[1:])
        p, p1 = t.odd(mu), t.odd(mu + 1)
        pb, p1b = t.bar(p), t.bar(p1)
        if kind == "e":
            return E(p, p1) + E(p1b, pb)
        if kind == "f":
            out = E(p1, p) + E(pb, p1b)
            return out if literal else -out
        return E(p1, p1) - E(p1b, p1b) - E(p, p) + E(pb, pb)
    mk, mkb = t.odd(k), t.bar(t.odd(k))
    if root == "s":
        if kind == "e":
            return E(mk, i1) + E(i1b, mkb) * sgn
        if kind == "f":
            return -E(i1, mk) + E(mkb, i1b) * sgn
        return -E(i1, i1) + E(i1b, i1b) - E(mk, mk) + E(mkb, mkb)
    if kind == "e":
        return E(mk, i1b) + E(i1, mkb) * sgn
    if kind == "f":
        return -E(i1b, mk) + E(mkb, i1) * sgn
    return E(i1, i1) - E(i1b, i1b) - E(mk, mk) + E(mkb, mkb)


@lru_cache(maxsize=None)
def vector_rep(n: int) -> RepImages:
    t = basis_info(n)
    labels = root_data(n).labels
    e = {c: rep_generator(n, "e", c) for c in labels}
    f = {c: rep_generator(n, "f", c) for c in labels}
    h = {}
    for c in labels:
        hm = rep_generator(n, "h", c)
        h[c] = tuple(int(hm[i, i].constant_value()) for i in range(t.dim))
    return RepImages(table=t, arity=1, labels=labels, e=e, f=f, h=h, weights=t.weights)


def tensor_rep(r1: RepImages, r2: RepImages) -> RepImages:
    """(r1 (x) r2) o Delta, on V^{(x)(arity1 + arity2)}."""
    if r1.table != r2.table:
        raise ValueError("mismatched basis tables")
    e, f, h = {}, {}, {}
    for c in r1.labels:
        e[c] = gtensor(r1.qh(c), r2.e[c]) + gtensor(r1.e[c], r2.qh(c, Fraction(-1, 2)))
        f[c] = gtensor(r1.qh(c), r2.f[c]) + gtensor(r1.f[c], r2.qh(c, Fraction(-1, 2)))
        h[c] = tuple(x + y for x in r1.h[c] for y in r2.h[c])
    weights = tuple(x + y for x in r1.weights for y in r2.weights)
    return RepImages(table=r1.table, arity=r1.arity + r2.arity, labels=r1.labels,
                     e=e, f=f, h=h, weights=weights)


def coproduct_matrix(n: int, kind: str, root: str, twisted: bool = False) -> GradedMatrix:
    """(pi (x) pi) Delta(x) for x in {e, f, h, qh, qh_inv} at a simple root.

    ``qh`` is q^{h_c/2}, ``qh_inv`` is q^{-h_c/2}.  With ``twisted`` the graded
    twist is applied, giving Delta^T(x).
    """
    pi = vector_rep(n)
    if root not in pi.labels:
        raise ValueError(f"invalid simple root {root!r} for n={n}")
    ident = GradedMatrix.identity(pi.table)
    if kind == "e":
        out = gtensor(pi.qh(root), pi.e[root]) + gtensor(pi.e[root], pi.qh(root, -Fraction(1, 2)))
    elif kind == "f":
        out = gtensor(pi.qh(root), pi.f[root]) + gtensor(pi.f[root], pi.qh(root, -Fraction(1, 2)))
    elif kind == "h":
        out = gtensor(pi.h_matrix(root), ident) + gtensor(ident, pi.h_matrix(root))
    elif kind in ("qh", "qh_inv"):
        p = Fraction(1, 2) if kind == "qh" else Fraction(-1, 2)
        out = gtensor(pi.qh(root, p), pi.qh(root, p))
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    return graded_twist(out) if twisted else out


# -- Hopf structure on words of generators, realised in pi -----------------------
#
# A token is ("e", c), ("f", c) or ("K", c, p) with K standing for q^{p h_c}.

def token_parity(tok) -> int:
    return 0 if tok[0] == "K" else root_parity(tok[1])


def token_matrix(rep: RepImages, tok) -> GradedMatrix:
    if tok[0] == "e":
        return rep.e[tok[1]]
    if tok[0] == "f":
        return rep.f[tok[1]]
    return rep.qh(tok[1], tok[2])


def token_coproduct(tok) -> list[tuple[LaurentScalar, tuple, tuple]]:
    """Sweedler components (coeff, left word, right word) of Delta(tok)."""
    if tok[0] == "K":
        return [(ONE, (tok,), (tok,))]
    c = tok[1]
    half, mhalf = ("K", c, Fraction(1, 2)), ("K", c, Fraction(-1, 2))
    return [(ONE, (half,), (tok,)), (ONE, (tok,), (mhalf,))]


def token_antipode(n: int, tok) -> list[tuple[LaurentScalar, tuple]]:
    """S(tok) as a linear combination of words."""
    if tok[0] == "K":
        return [(ONE, (("K", tok[1], -tok[2]),))]
    alpha = root_data(n).simple[tok[1]]
    norm = bilinear(alpha, alpha)
    if tok[0] == "e":
        return [(-q_power(-norm / 2), (tok,))]
    return [(-q_power(norm / 2), (tok,))]


def word_parity(word) -> int:
    return sum(token_parity(t) for t in word) % 2


def word_coproduct(word) -> list[tuple[LaurentScalar, tuple, tuple]]:
    """Delta is multiplicative with (A(x)B)(C(x)D) = (-1)^{[B][C]} AC (x) BD."""
    terms = [(ONE, (), ())]
    for tok in word:
        new = []
        for coef, l1, r1 in terms:
            for c2, l2, r2 in token_coproduct(tok):
                sign = -1 if word_parity(r1) and word_parity(l2) else 1
                new.append((coef * c2 * sign, l1 + l2, r1 + r2))
        terms = new
    return terms


def word_antipode(n: int, word) -> list[tuple[LaurentScalar, tuple]]:
    """S(ab) = (-1)^{[a][b]} S(b) S(a), applied token by token."""
    terms = [(ONE, ())]
    for tok in word:
        # S(w tok) = (-1)^{[w][tok]} S(tok) S(w)
        new = []
        for coef, sw in terms:
            sign = -1 if word_parity(sw) and token_parity(tok) else 1
            for c2, st in token_antipode(n, tok):
                new.append((coef * c2 * sign, st + sw))
        terms = new
    return terms


def word_matrix(rep: RepImages, word) -> GradedMatrix:
    out = GradedMatrix.identity(rep.table, rep.arity)
    for tok in word:
        out = out @ token_matrix(rep, tok)
    return out


def adjoint_sweedler(rep: RepImages, word, X: GradedMatrix) -> GradedMatrix:
    """ad a o X = sum_(a) (-1)^{[X][a2]} a1 X S(a2), with a given as a word."""
    n = rep.table.n
    pX = X.homogeneous_parity()
    out = GradedMatrix.zero(rep.table, rep.arity)
    for coef, a1, a2 in word_coproduct(word):
        sign = -1 if pX and word_parity(a2) else 1
        left = word_matrix(rep, a1)
        for cs, sa2 in word_antipode(n, a2):
            out = out + (left @ X @ word_matrix(rep, sa2)) * (coef * cs * sign)
    return out


def adjoint_compact(rep: RepImages, c: str, X: GradedMatrix, weight: WeightVector) -> GradedMatrix:
    """ad E_c o X = E_c X - (-1)^{[c][X]} q^{(alpha_c, wt X)} X E_c, E_c = e_c q^{h_c/2}."""
    alpha = root_data(rep.table.n).simple[c]
    Ec = rep.E(c)
    sign = -1 if root_parity(c) and X.homogeneous_parity() else 1
    return Ec @ X - (X @ Ec) * (q_power(bilinear(alpha, weight)) * sign)


def ad_e(rep: RepImages, c: str, X: GradedMatrix) -> GradedMatrix:
    return adjoint_sweedler(rep, (("e", c),), X)


def ad_f(rep: RepImages, c: str, X: GradedMatrix) -> GradedMatrix:
    return adjoint_sweedler(rep, (("f", c),), X)


def quantum_integer(m: int) -> LaurentScalar:
    """(q^m - q^{-m}) / (q - q^{-1}) as a Laurent polynomial."""
    if m < 0:
        return -quantum_integer(-m)
    return sum((q_power(m - 1 - 2 * j) for j in range(m)), ZERO)


def specialize(M: GradedMatrix, point: EvalPoint | None) -> GradedMatrix:
    return M if point is None else M.at(point)


def check_defining_relations(n: int, point: EvalPoint | None = None) -> VerificationReport:
    """Generator relations and q-Serre relations of U_q[osp(2|n)] in pi."""
    t0 = time.perf_counter()
    rd = root_data(n)
    pi = vector_rep(n)
    rep = VerificationReport("defining", n, "symbolic" if point is None else f"numeric {point}")
    ev = lambda M: specialize(M, point)
    record = lambda label, M: rep.record(label, ev(M))
    e = {c: ev(pi.e[c]) for c in rd.labels}
    f = {c: ev(pi.f[c]) for c in rd.labels}
    h = {c: ev(pi.h_matrix(c)) for c in rd.labels}
    for a in rd.labels:
        for b in rd.labels:
            ab = bilinear(rd.simple[a], rd.simple[b])
            record(f"[h_{a}, e_{b}]", gcomm(h[a], e[b]) - e[b] * ab)
            record(f"[h_{a}, f_{b}]", gcomm(h[a], f[b]) + f[b] * ab)
            record(f"[h_{a}, h_{b}]", gcomm(h[a], h[b]))
            if a == b:
                eig = pi.h[a]
                rhs = GradedMatrix.diagonal(pi.table, 1, lambda i: quantum_integer(eig[i]))
            else:
                rhs = GradedMatrix.zero(pi.table)
            record(f"[e_{a}, f_{b}]", gcomm(e[a], f[b]) - ev(rhs))
        if not bilinear(rd.simple[a], rd.simple[a]):
            record(f"[e_{a}, e_{a}]", gcomm(e[a], e[a]))
            record(f"[f_{a}, f_{a}]", gcomm(f[a], f[a]))
    # the adjoint action is built on Laurent scalars; specialize the result
    for b in rd.labels:
        if not bilinear(rd.simple[b], rd.simple[b]):
            continue
        for c in rd.labels:
            if c == b:
                continue
            power = 1 - rd.cartan[b, c]
            assert power.denominator == 1 and power >= 1
            xe, xf = pi.e[c], pi.f[c]
            for _ in range(int(power)):
                xe = ad_e(pi, b, xe)
                xf = ad_f(pi, b, xf)
            record(f"(ad e_{b})^{power} e_{c}", xe)
            record(f"(ad f_{b})^{power} f_{c}", xf)
    rep.seconds = time.perf_counter() - t0
    return rep
