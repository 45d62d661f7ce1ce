"""The sigma-hat coefficients of the Lax operator and the vector R-matrices.

The Lax operator is

    R = q^{sum h_a (x) h^a} [ I (x) I + (q - q^-1) sum_{eps_b > eps_a} (-1)^[b] E^a_b (x) sigma_ba ]

with sigma_ba in the positive Borel part.  Each sigma_ba is held as a
:class:`SigmaExpr`, a linear combination of words in the symbols
``E:c`` (= e_c q^{h_c/2}) and, after graded conjugation, ``F:c``.  Words are
never rewritten; two expressions are compared by evaluating them in a
representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graded import BasisTable, GradedMatrix, basis_info, elem_matrix, graded_twist, gtensor
from .qscalar import ONE, ZERO, LaurentScalar, Q_MINUS_QINV, q_power
from .roots import bilinear, root_data, root_parity
from .vector_rep import RepImages, vector_rep

Word = tuple[str, ...]

def dagger_sign(c: str) -> int:
    """e_c^dagger = dagger_sign(c) f_c, fixed so that pi(x^dagger) = gdagger(pi(x)).

    Even simple roots pick up a sign because pi(f_mu) carries one; composing
    with e_mu, f_mu -> -e_mu, -f_mu is a Hopf automorphism fixing the R-matrix.
    """
    return 1 if root_parity(c) else -1


def symbol_parity(sym: str) -> int:
    return root_parity(sym.split(":", 1)[1])


class SigmaExpr:
    """Linear combination of words in E:c / F:c with Laurent coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Word, LaurentScalar] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "SigmaExpr":
        return cls()

    @classmethod
    def symbol(cls, name: str, coeff=ONE) -> "SigmaExpr":
        return cls({(name,): LaurentScalar.coerce(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def symbols(self) -> set[str]:
        return {s for w in self.terms for s in w}

    def parity(self) -> int | None:
        ps = {sum(symbol_parity(s) for s in w) % 2 for w in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def __add__(self, other: "SigmaExpr") -> "SigmaExpr":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return SigmaExpr(out)

    def __neg__(self) -> "SigmaExpr":
        return SigmaExpr({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "SigmaExpr") -> "SigmaExpr":
        return self + (-other)

    def __mul__(self, other) -> "SigmaExpr":
        if isinstance(other, SigmaExpr):
            out: dict[Word, LaurentScalar] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, ZERO) + c1 * c2
            return SigmaExpr(out)
        c = LaurentScalar.coerce(other)
        return SigmaExpr({w: v * c for w, v in self.terms.items()})

    def __rmul__(self, other) -> "SigmaExpr":
        c = LaurentScalar.coerce(other)
        return SigmaExpr({w: c * v for w, v in self.terms.items()})

    def dagger(self) -> "SigmaExpr":
        """Graded conjugation: (AB)^dagger = (-1)^{[A][B]} B^dagger A^dagger,
        E:c -> F:c and F:c -> (-1)^[c] E:c."""
        out: dict[Word, LaurentScalar] = {}
        for w, c in self.terms.items():
            sign = 1
            seen = 0
            rev = []
            for sym in w:
                p = symbol_parity(sym)
                if seen and p:
                    sign = -sign
                seen ^= p
                kind, root = sym.split(":", 1)
                if kind == "E":
                    rev.append(f"F:{root}")
                else:
                    rev.append(f"E:{root}")
                    if root_parity(root):
                        sign = -sign
            nw = tuple(reversed(rev))
            out[nw] = out.get(nw, ZERO) + (c if sign > 0 else -c)
        return SigmaExpr(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SigmaExpr):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            parts.append(f"({c})*" + "*".join(w))
        return " + ".join(parts)

    __repr__ = __str__


def symbol_matrix(sym: str, rep: RepImages) -> GradedMatrix:
    kind, root = sym.split(":", 1)
    if root not in rep.labels:
        raise KeyError(f"unresolved symbol {sym!r}")
    if kind == "E":
        return rep.E(root)
    if kind == "F":
        return rep.F(root) * dagger_sign(root)
    raise KeyError(f"unresolved symbol {sym!r}")


def eval_sigma(expr: SigmaExpr, rep: RepImages, cache: dict | None = None) -> GradedMatrix:
    """Homomorphic image of ``expr`` in ``rep``; words multiply as plain matrices."""
    if cache is None:
        cache = {}
    out = GradedMatrix.zero(rep.table, rep.arity)
    for w, c in sorted(expr.terms.items()):
        m = _word_matrix(w, rep, cache)
        out = out + m * c
    return out


def _word_matrix(w: Word, rep: RepImages, cache: dict) -> GradedMatrix:
    if w in cache:
        return cache[w]
    if len(w) == 1:
        m = symbol_matrix(w[0], rep)
    else:
        m = _word_matrix(w[:-1], rep, cache) @ _word_matrix(w[-1:], rep, cache)
    cache[w] = m
    return m


# -- the sigma table -------------------------------------------------------------

@dataclass
class SigmaTable:
    n: int
    table: BasisTable
    exprs: dict[tuple[int, int], SigmaExpr] = field(default_factory=dict)
    pivots: dict[tuple[int, int], int | None] = field(default_factory=dict)
    steps: dict[tuple[int, int], int] = field(default_factory=dict)

    def complete(self) -> bool:
        return set(self.exprs) == set(self.table.strict_pairs())

    def evaluate(self, rep: RepImages) -> dict[tuple[int, int], GradedMatrix]:
        cache: dict = {}
        return {pair: eval_sigma(expr, rep, cache) for pair, expr in sorted(self.exprs.items())}

    def weight(self, pair: tuple[int, int]):
        b, a = pair
        return self.table.weight(b) - self.table.weight(a)

    def parity(self, pair: tuple[int, int]) -> int:
        b, a = pair
        return self.table.parity(b) ^ self.table.parity(a)


def named_positions(n: int) -> dict[str, int]:
    """Convenience names: 'mu=3', 'mubar=3' (the bar of odd 3), 'i', 'ibar'."""
    t = basis_info(n)
    out = {"i": t.even(1), "ibar": t.even(2)}
    for mu in range(1, t.k + 1):
        out[f"mu={mu}"] = t.odd(mu)
        out[f"mubar={mu}"] = t.bar(t.odd(mu))
    return out


def simple_sigma_exprs(n: int) -> SigmaTable:
    """The simple sigma-hat values, as multiples of E_c = e_c q^{h_c/2}."""
    t = basis_info(n)
    k = t.k
    st = SigmaTable(n=n, table=t)
    sgn = (-1) ** k
    half, mhalf = q_power(Fraction(1, 2)), q_power(Fraction(-1, 2))

    def put(pair, expr):
        st.exprs[pair] = expr
        st.pivots[pair] = None
        st.steps[pair] = 0

    for mu in range(1, k):
        p, p1 = t.odd(mu), t.odd(mu + 1)
        v = SigmaExpr.symbol(f"E:a{mu}", mhalf)
        put((p, p1), v)
        put((t.bar(p1), t.bar(p)), v)
    mk, mkb = t.odd(k), t.bar(t.odd(k))
    i1, i1b = t.even(1), t.even(2)
    vs = SigmaExpr.symbol("E:s", half)
    put((mk, i1), vs)
    put((i1b, mkb), vs * (q_power(-1) * sgn))
    vt = SigmaExpr.symbol("E:t", half)
    put((mk, i1b), vt)
    put((i1, mkb), vt * (q_power(-1) * sgn))
    put((i1, i1b), SigmaExpr.zero())
    return st


def fill_order(n: int) -> list[tuple[int, tuple[int, int]]]:
    """Non-simple pairs in the four-step order, shorter weight gaps first within a step."""
    t = basis_info(n)
    k = t.k
    odd, bar = t.odd, t.bar
    i1, i1b = t.even(1), t.even(2)
    steps: list[list[tuple[int, int]]] = [[], [], [], []]
    for nu in range(1, k + 1):
        for mu in range(nu + 1, k + 1):
            steps[0].append((odd(nu), odd(mu)))
            steps[0].append((bar(odd(mu)), bar(odd(nu))))
    for mu in range(1, k + 1):
        steps[1].append((odd(mu), i1))
        steps[1].append((i1b, bar(odd(mu))))
        steps[2].append((i1, bar(odd(mu))))
        steps[2].append((odd(mu), i1b))
        for nu in range(1, k + 1):
            steps[3].append((odd(mu), bar(odd(nu))))
    out = []
    for s, pairs in enumerate(steps, start=1):
        for pair in sorted(pairs, key=lambda ba: (ba[1] - ba[0], ba)):
            out.append((s, pair))
    return out


def admissible_pivots(table: BasisTable, b: int, a: int) -> list[int]:
    """Positions c strictly between b and a with c not in {a-bar, b-bar}."""
    return [c for c in range(b + 1, a) if c not in (table.bar(a), table.bar(b))]


def induction_coefficients(table: BasisTable, b: int, c: int, a: int) -> tuple[LaurentScalar, LaurentScalar]:
    """(x, y) with sigma_ba = x sigma_bc sigma_ca - y sigma_ca sigma_bc."""
    wb, wc, wa = table.weight(b), table.weight(c), table.weight(a)
    pb, pc, pa = table.parity(b), table.parity(c), table.parity(a)
    x = q_power(-bilinear(wb, wa))
    y = q_power(-bilinear(wc, wc))
    if (pb ^ pc) and (pa ^ pc):
        y = -y
    return x, y


def extend_sigma_table(st: SigmaTable) -> SigmaTable:
    """Fill every strict pair from the simple values by the induction relation."""
    table = st.table
    out = SigmaTable(n=st.n, table=table, exprs=dict(st.exprs), pivots=dict(st.pivots),
                     steps=dict(st.steps))
    for step, (b, a) in fill_order(st.n):
        if (b, a) in out.exprs:
            continue
        pivots = admissible_pivots(table, b, a)
        if not pivots:
            raise AssertionError(f"no admissible pivot for pair {(b, a)}")
        c = pivots[0]
        if (b, c) not in out.exprs or (c, a) not in out.exprs:
            raise AssertionError(f"pivot {c} for pair {(b, a)} uses an unfilled pair")
        x, y = induction_coefficients(table, b, c, a)
        sbc, sca = out.exprs[b, c], out.exprs[c, a]
        out.exprs[b, a] = sbc * sca * x - sca * sbc * y
        out.pivots[b, a] = c
        out.steps[b, a] = step
    assert out.complete()
    return out


def sigma_table(n: int) -> SigmaTable:
    return extend_sigma_table(simple_sigma_exprs(n))


def induction_value(mats: dict[tuple[int, int], GradedMatrix], table: BasisTable,
                    b: int, c: int, a: int) -> GradedMatrix:
    """Right-hand side of the induction relation for an evaluated table."""
    x, y = induction_coefficients(table, b, c, a)
    sbc, sca = mats[b, c], mats[c, a]
    return (sbc @ sca) * x - (sca @ sbc) * y


# -- closed forms in the vector representation ---------------------------------

def _check_pair(table: BasisTable, b: int, a: int) -> None:
    table._idx(b), table._idx(a)
    if not b < a:
        raise ValueError(f"({b}, {a}) is not a strict pair: need eps_b > eps_a")


def _bar_coefficient(table: BasisTable, b: int, a: int, sign_index: int) -> LaurentScalar:
    """(-1)^{[x]([a]+[b])} xi_a xi_b q^{(rho, eps_a - eps_b)} with x = ``sign_index``."""
    rho = root_data(table.n).rho
    pa, pb, px = table.parity(a), table.parity(b), table.parity(sign_index)
    sign = table.xi(a) * table.xi(b) * (-1 if px and (pa ^ pb) else 1)
    return q_power(bilinear(rho, table.weight(a) - table.weight(b))) * sign


def closed_form_sigma(n: int, b: int, a: int) -> GradedMatrix:
    """sigma_ba in the vector representation, in closed form."""
    t = basis_info(n)
    _check_pair(t, b, a)
    wa, wb = t.weight(a), t.weight(b)
    first = elem_matrix(t, b, a) * q_power(-bilinear(wa, wb))
    coef = _bar_coefficient(t, b, a, b) * q_power(bilinear(wa, wa))
    return first - elem_matrix(t, t.bar(a), t.bar(b)) * coef


def sigma_tilde(n: int, b: int, a: int) -> GradedMatrix:
    """E^b_a - (-1)^{[b]([a]+[b])} xi_a xi_b q^{(rho, eps_a - eps_b)} E^{a-bar}_{b-bar}."""
    t = basis_info(n)
    _check_pair(t, b, a)
    return elem_matrix(t, b, a) - elem_matrix(t, t.bar(a), t.bar(b)) * _bar_coefficient(t, b, a, b)


def sigma_tilde_opposite(n: int, b: int, a: int) -> GradedMatrix:
    """E^a_b - (-1)^{[a]([a]+[b])} xi_a xi_b q^{(rho, eps_a - eps_b)} E^{b-bar}_{a-bar}, eps_b > eps_a."""
    t = basis_info(n)
    _check_pair(t, b, a)
    return elem_matrix(t, a, b) - elem_matrix(t, t.bar(b), t.bar(a)) * _bar_coefficient(t, b, a, a)


def vector_simple_values(n: int) -> dict[tuple[int, int], GradedMatrix]:
    """The simple sigma-hat values in pi, transcribed directly as matrices."""
    t = basis_info(n)
    k = t.k
    sgn = (-1) ** k
    q = q_power(1)
    qi = q_power(-1)
    E = lambda a, b: elem_matrix(t, a, b)
    out = {}
    for mu in range(1, k):
        p, p1 = t.odd(mu), t.odd(mu + 1)
        v = E(p, p1) + E(t.bar(p1), t.bar(p))
        out[p, p1] = v
        out[t.bar(p1), t.bar(p)] = v
    mk, mkb = t.odd(k), t.bar(t.odd(k))
    i1, i1b = t.even(1), t.even(2)
    vs = E(mk, i1) + E(i1b, mkb) * (q * sgn)
    out[mk, i1] = vs
    out[i1b, mkb] = vs * (qi * sgn)
    vt = E(mk, i1b) + E(i1, mkb) * (q * sgn)
    out[mk, i1b] = vt
    out[i1, mkb] = vt * (qi * sgn)
    return out


# -- Lax operators and R-matrices ------------------------------------------------

def cartan_factor(table: BasisTable, rep: RepImages) -> GradedMatrix:
    """q^{sum h_a (x) h^a} on V (x) W: the diagonal q^{(eps_u, wt w)}."""
    size_w = rep.table.dim ** rep.arity
    ws = rep.weights
    tw = table.weights

    def entry(idx: int) -> LaurentScalar:
        u, w = divmod(idx, size_w)
        return q_power(bilinear(tw[u], ws[w]))

    return GradedMatrix.diagonal(table, 1 + rep.arity, entry)


def lax_operator(st: SigmaTable, rep: RepImages) -> GradedMatrix:
    """(pi (x) rep) of the universal R-matrix, assembled from the sigma table."""
    table = st.table
    arity = 1 + rep.arity
    mats = st.evaluate(rep)
    acc = GradedMatrix.zero(table, arity)
    for (b, a), m in mats.items():
        if m.is_zero():
            continue
        term = gtensor(elem_matrix(table, a, b), m)
        acc = acc - term if table.parity(b) else acc + term
    inner = GradedMatrix.identity(table, arity) + acc * Q_MINUS_QINV
    return cartan_factor(table, rep) @ inner


def opposite_sigma_expr(st: SigmaTable, b: int, a: int) -> SigmaExpr:
    """sigma_ab = (-1)^{[b]([a]+[b])} sigma_ba^dagger for eps_b > eps_a."""
    t = st.table
    expr = st.exprs[b, a].dagger()
    if t.parity(b) and (t.parity(a) ^ t.parity(b)):
        expr = -expr
    return expr


def opposite_lax_operator(st: SigmaTable, rep: RepImages) -> GradedMatrix:
    """(pi (x) rep) of the opposite universal R-matrix.

    sum_a E^a_a (x) q^{h_{eps_a}} + (q - q^-1) sum (-1)^[a] E^b_a (x) sigma_ab q^{h_{eps_a}}.
    """
    table = st.table
    arity = 1 + rep.arity
    out = GradedMatrix.zero(table, arity)
    for a in table.positions:
        out = out + gtensor(elem_matrix(table, a, a), rep.cartan_weight(table.weight(a)))
    cache: dict = {}
    acc = GradedMatrix.zero(table, arity)
    for (b, a) in sorted(st.exprs):
        m = eval_sigma(opposite_sigma_expr(st, b, a), rep, cache)
        if m.is_zero():
            continue
        term = gtensor(elem_matrix(table, b, a), m @ rep.cartan_weight(table.weight(a)))
        acc = acc - term if table.parity(a) else acc + term
    return out + acc * Q_MINUS_QINV


def _diagonal_part(n: int) -> GradedMatrix:
    t = basis_info(n)
    tw = t.weights
    dim = t.dim
    return GradedMatrix.diagonal(t, 2, lambda idx: q_power(bilinear(tw[idx // dim], tw[idx % dim])))


def build_vector_R(n: int, mode: str = "closed-form") -> GradedMatrix:
    """R-matrix on V (x) V, either in closed form or from the recursion-built table."""
    if mode == "closed-form":
        t = basis_info(n)
        acc = GradedMatrix.zero(t, 2)
        for b, a in t.strict_pairs():
            term = gtensor(elem_matrix(t, a, b), sigma_tilde(n, b, a))
            acc = acc - term if t.parity(b) else acc + term
        return _diagonal_part(n) + acc * Q_MINUS_QINV
    if mode == "recursion":
        return lax_operator(sigma_table(n), vector_rep(n))
    raise ValueError(f"unknown mode {mode!r}")


def build_vector_RT(n: int, mode: str = "closed-form") -> GradedMatrix:
    """Opposite R-matrix on V (x) V.

    Modes: ``closed-form``; ``dagger`` (graded twist of the R-matrix);
    ``opposite-lax`` (the opposite Lax operator evaluated in pi).
    """
    if mode == "closed-form":
        t = basis_info(n)
        acc = GradedMatrix.zero(t, 2)
        for b, a in t.strict_pairs():
            term = gtensor(elem_matrix(t, b, a), sigma_tilde_opposite(n, b, a))
            acc = acc - term if t.parity(a) else acc + term
        return _diagonal_part(n) + acc * Q_MINUS_QINV
    if mode == "dagger":
        return graded_twist(build_vector_R(n, "closed-form"))
    if mode == "opposite-lax":
        return opposite_lax_operator(sigma_table(n), vector_rep(n))
    raise ValueError(f"unknown mode {mode!r}")
