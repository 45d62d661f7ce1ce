"""The Z2-graded vector module V of U_q[osp(2|n)] and sparse matrices on V^{(x)r}.

Basis positions are 1-based and ordered by strictly decreasing weight::

    delta_1, ..., delta_k, eps1, -eps1, -delta_k, ..., -delta_1

Matrix entries are keyed by 0-based flat indices into V^{(x)arity}; a flat
index ``(u1, ..., ur)`` is ``u1 * dim**(r-1) + ... + ur`` and its parity is
the mod-2 sum of the factor parities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator

from .qscalar import ONE, ZERO, LaurentScalar
from .roots import WeightVector, check_n


class GradingError(ValueError):
    """Raised for non-homogeneous input where a homogeneous matrix is required."""


@dataclass(frozen=True)
class BasisTable:
    n: int
    k: int
    dim: int
    labels: tuple[tuple[str, int], ...]
    parities: tuple[int, ...]
    weights: tuple[WeightVector, ...]
    bars: tuple[int, ...]
    xis: tuple[int, ...]

    # 1-based accessors
    def parity(self, p: int) -> int:
        return self.parities[self._idx(p)]

    def weight(self, p: int) -> WeightVector:
        return self.weights[self._idx(p)]

    def bar(self, p: int) -> int:
        return self.bars[self._idx(p)]

    def xi(self, p: int) -> int:
        return self.xis[self._idx(p)]

    def label(self, p: int) -> tuple[str, int]:
        return self.labels[self._idx(p)]

    def _idx(self, p: int) -> int:
        if not 1 <= p <= self.dim:
            raise IndexError(f"basis position {p} outside 1..{self.dim}")
        return p - 1

    @property
    def positions(self) -> range:
        return range(1, self.dim + 1)

    # named positions
    def odd(self, mu: int) -> int:
        """Position of the odd label mu (1..n)."""
        if not 1 <= mu <= self.n:
            raise IndexError(f"odd label {mu} outside 1..{self.n}")
        return mu if mu <= self.k else mu + 2

    def even(self, i: int) -> int:
        """Position of the even label i (1 or 2)."""
        if i not in (1, 2):
            raise IndexError(f"even label {i} not in (1, 2)")
        return self.k + i

    def strict_pairs(self) -> list[tuple[int, int]]:
        """All (b, a) with eps_b > eps_a, lexicographic."""
        return [(b, a) for b in self.positions for a in range(b + 1, self.dim + 1)]

    def position_name(self, p: int) -> str:
        kind, j = self.label(p)
        return f"{'mu' if kind == 'odd' else 'i'}={j}"

    # flat indices of tensor powers
    def flat_parity(self, arity: int) -> tuple[int, ...]:
        return _flat_parity(self, arity)

    def flat_weight(self, arity: int) -> tuple[WeightVector, ...]:
        return _flat_weight(self, arity)

    def split(self, idx: int, arity: int) -> tuple[int, ...]:
        digits = []
        for _ in range(arity):
            idx, r = divmod(idx, self.dim)
            digits.append(r)
        return tuple(reversed(digits))

    def join(self, digits: Iterable[int]) -> int:
        idx = 0
        for d in digits:
            idx = idx * self.dim + d
        return idx


@lru_cache(maxsize=None)
def basis_info(n: int) -> BasisTable:
    check_n(n)
    k = n // 2
    labels: list[tuple[str, int]] = [("odd", mu) for mu in range(1, k + 1)]
    labels += [("even", 1), ("even", 2)]
    labels += [("odd", k + j) for j in range(1, k + 1)]
    parities, weights, bars, xis = [], [], [], []
    for kind, j in labels:
        if kind == "even":
            parities.append(0)
            weights.append(WeightVector.epsilon(k, 1 if j == 1 else -1))
            bars.append(k + (3 - j))
            xis.append(1)
        else:
            parities.append(1)
            if j <= k:
                weights.append(WeightVector.delta(k, j))
            else:
                weights.append(WeightVector.delta(k, n + 1 - j, -1))
            jbar = n + 1 - j
            bars.append(jbar if jbar <= k else jbar + 2)
            xis.append((-1) ** j)
    return BasisTable(n=n, k=k, dim=n + 2, labels=tuple(labels), parities=tuple(parities),
                      weights=tuple(weights), bars=tuple(bars), xis=tuple(xis))


@lru_cache(maxsize=None)
def _flat_parity(table: BasisTable, arity: int) -> tuple[int, ...]:
    return tuple(sum(ps) % 2 for ps in product(table.parities, repeat=arity))


@lru_cache(maxsize=None)
def _flat_weight(table: BasisTable, arity: int) -> tuple[WeightVector, ...]:
    zero = WeightVector.zero(table.k)
    out = []
    for ws in product(table.weights, repeat=arity):
        acc = zero
        for w in ws:
            acc = acc + w
        out.append(acc)
    return tuple(out)


Entries = dict[tuple[int, int], LaurentScalar]


class GradedMatrix:
    """Sparse square matrix over :class:`LaurentScalar` on V^{(x)arity}.

    Only nonzero entries are stored.  Instances are treated as immutable.
    """

    __slots__ = ("table", "arity", "entries")

    def __init__(self, table: BasisTable, arity: int, entries: Entries | None = None,
                 *, _trusted: bool = False):
        self.table = table
        self.arity = arity
        if entries is None:
            entries = {}
        elif not _trusted:
            size = self.size
            clean = {}
            for (r, c), v in entries.items():
                if not (0 <= r < size and 0 <= c < size):
                    raise IndexError(f"entry ({r}, {c}) outside {size}x{size}")
                v = LaurentScalar.coerce(v)
                if v:
                    clean[r, c] = v
            entries = clean
        self.entries = entries

    @property
    def size(self) -> int:
        return self.table.dim ** self.arity

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, table: BasisTable, arity: int = 1) -> "GradedMatrix":
        return cls(table, arity, {}, _trusted=True)

    @classmethod
    def identity(cls, table: BasisTable, arity: int = 1) -> "GradedMatrix":
        return cls(table, arity, {(i, i): ONE for i in range(table.dim ** arity)}, _trusted=True)

    @classmethod
    def diagonal(cls, table: BasisTable, arity: int,
                 fn: Callable[[int], LaurentScalar]) -> "GradedMatrix":
        ents = {}
        for i in range(table.dim ** arity):
            v = fn(i)
            if v:
                ents[i, i] = v
        return cls(table, arity, ents, _trusted=True)

    # -- grading -----------------------------------------------------------

    def parity(self) -> int | None:
        """0 or 1 if homogeneous (the zero matrix counts as even), else None."""
        fp = self.table.flat_parity(self.arity)
        found = None
        for r, c in self.entries:
            p = fp[r] ^ fp[c]
            if found is None:
                found = p
            elif p != found:
                return None
        return 0 if found is None else found

    def homogeneous_parity(self) -> int:
        p = self.parity()
        if p is None:
            raise GradingError("matrix is not homogeneous")
        return p

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "GradedMatrix") -> None:
        if self.table != other.table or self.arity != other.arity:
            raise ValueError("matrices live on different ambient spaces")

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check(other)
        out = dict(self.entries)
        for key, v in other.entries.items():
            w = out.get(key)
            if w is None:
                out[key] = v
            else:
                w = w + v
                if w:
                    out[key] = w
                else:
                    del out[key]
        return GradedMatrix(self.table, self.arity, out, _trusted=True)

    def __neg__(self) -> "GradedMatrix":
        return GradedMatrix(self.table, self.arity, {k: -v for k, v in self.entries.items()},
                            _trusted=True)

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        return self + (-other)

    def __mul__(self, scalar) -> "GradedMatrix":
        scalar = LaurentScalar.coerce(scalar)
        if not scalar:
            return GradedMatrix.zero(self.table, self.arity)
        out = {}
        for key, v in self.entries.items():
            w = v * scalar
            if w:
                out[key] = w
        return GradedMatrix(self.table, self.arity, out, _trusted=True)

    __rmul__ = __mul__

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check(other)
        rows: dict[int, list[tuple[int, LaurentScalar]]] = {}
        for (r, c), v in other.entries.items():
            rows.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (r, m), v in self.entries.items():
            row = rows.get(m)
            if not row:
                continue
            vt = v._terms
            for c, w in row:
                slot = acc.get((r, c))
                if slot is None:
                    slot = acc[r, c] = {}
                for ea, ca in vt.items():
                    for eb, cb in w._terms.items():
                        e = ea + eb
                        slot[e] = slot.get(e, 0) + ca * cb
        out = {}
        for key, slot in acc.items():
            terms = {e: c for e, c in slot.items() if c}
            if terms:
                out[key] = LaurentScalar(terms, _trusted=True)
        return GradedMatrix(self.table, self.arity, out, _trusted=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (self.table == other.table and self.arity == other.arity
                and self.entries == other.entries)

    __hash__ = None

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.entries

    def __getitem__(self, key: tuple[int, int]) -> LaurentScalar:
        return self.entries.get(key, ZERO)

    def nnz(self) -> int:
        return len(self.entries)

    def sorted_entries(self) -> list[tuple[int, int, LaurentScalar]]:
        return [(r, c, v) for (r, c), v in sorted(self.entries.items())]

    def first_nonzero(self) -> tuple[int, int, LaurentScalar] | None:
        if not self.entries:
            return None
        r, c = min(self.entries)
        return r, c, self.entries[r, c]

    def map_scalars(self, fn: Callable[[LaurentScalar], LaurentScalar]) -> "GradedMatrix":
        out = {}
        for key, v in self.entries.items():
            w = fn(v)
            if w:
                out[key] = w
        return GradedMatrix(self.table, self.arity, out, _trusted=True)

    def evaluate(self, s_value) -> "GradedMatrix":
        """Substitute ``s = s_value``; entries become constant scalars."""
        return self.map_scalars(lambda v: LaurentScalar.const(v.evaluate(s_value)))

    def at(self, point) -> "GradedMatrix":
        """Specialize every entry at an :class:`EvalPoint`."""
        return self.map_scalars(point.apply)

    def to_dense(self) -> list[list[LaurentScalar]]:
        size = self.size
        out = [[ZERO] * size for _ in range(size)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def __repr__(self) -> str:
        return f"GradedMatrix(n={self.table.n}, arity={self.arity}, nnz={self.nnz()})"

    def pretty(self) -> str:
        """One ``(row, col): value`` line per entry, in 1-based basis digits."""
        lines = []
        for r, c, v in self.sorted_entries():
            rd = ",".join(str(d + 1) for d in self.table.split(r, self.arity))
            cd = ",".join(str(d + 1) for d in self.table.split(c, self.arity))
            lines.append(f"({rd} | {cd}): {v}")
        return "\n".join(lines)


def elem_matrix(table: BasisTable, a: int, b: int) -> GradedMatrix:
    """E^a_b: a single 1 in row a, column b (1-based positions)."""
    table._idx(a), table._idx(b)
    return GradedMatrix(table, 1, {(a - 1, b - 1): ONE}, _trusted=True)


def _require_same_table(*ms: GradedMatrix) -> None:
    if len({m.table for m in ms}) != 1:
        raise ValueError("mismatched basis tables")


def gtensor(A: GradedMatrix, B: GradedMatrix) -> GradedMatrix:
    """Graded tensor product A (x) B.

    On basis vectors, (A (x) B)(|u> (x) |v>) = (-1)^{[B][u]} A|u> (x) B|v>, so
    that plain matrix products obey (A(x)B)(C(x)D) = (-1)^{[B][C]} AC (x) BD.
    """
    _require_same_table(A, B)
    pB = B.homogeneous_parity()
    A.homogeneous_parity()
    table = A.table
    fpA = table.flat_parity(A.arity)
    sB = B.size
    out = {}
    for (ra, ca), va in A.entries.items():
        neg = pB and fpA[ca]
        for (rb, cb), vb in B.entries.items():
            v = va * vb
            out[ra * sB + rb, ca * sB + cb] = -v if neg else v
    return GradedMatrix(table, A.arity + B.arity, out, _trusted=True)


def gtensor_all(*ms: GradedMatrix) -> GradedMatrix:
    out = ms[0]
    for m in ms[1:]:
        out = gtensor(out, m)
    return out


def graded_swap(M: GradedMatrix, left: int) -> GradedMatrix:
    """Conjugate M on V^{(x)left} (x) V^{(x)right} by the graded flip.

    The flip P sends |u> (x) |w> to (-1)^{[u][w]} |w> (x) |u>, with u the
    first ``left`` factors; the result lives on V^{(x)right} (x) V^{(x)left}.
    For arity 2 and ``left = 1`` this is the graded twist, and P is then an
    involution, so P M P^{-1} = P M P.
    """
    right = M.arity - left
    if left < 1 or right < 1:
        raise ValueError("graded_swap needs a nontrivial split")
    table = M.table
    fl = table.flat_parity(left)
    fr = table.flat_parity(right)
    sl, sr = table.dim ** left, table.dim ** right
    out = {}
    for (r, c), v in M.entries.items():
        ru, rw = divmod(r, sr)
        cu, cw = divmod(c, sr)
        sign = (fl[ru] & fr[rw]) ^ (fl[cu] & fr[cw])
        out[rw * sl + ru, cw * sl + cu] = -v if sign else v
    return GradedMatrix(table, M.arity, out, _trusted=True)


def swap_operator(table: BasisTable, left: int, right: int) -> GradedMatrix:
    """The graded flip V^{(x)left}(x)V^{(x)right} -> V^{(x)right}(x)V^{(x)left} as a matrix."""
    fl = table.flat_parity(left)
    fr = table.flat_parity(right)
    sl, sr = table.dim ** left, table.dim ** right
    out = {}
    for u in range(sl):
        for w in range(sr):
            out[w * sl + u, u * sr + w] = -ONE if fl[u] & fr[w] else ONE
    return GradedMatrix(table, left + right, out, _trusted=True)


def graded_twist(M: GradedMatrix) -> GradedMatrix:
    if M.arity != 2:
        raise ValueError(f"graded_twist needs a matrix on V(x)V, got arity {M.arity}")
    return graded_swap(M, 1)


def gdagger(M: GradedMatrix) -> GradedMatrix:
    """Graded conjugation on End V: (E^a_b)^dagger = (-1)^{[a]([a]+[b])} E^b_a."""
    if M.arity != 1:
        raise ValueError(f"gdagger acts on End V only, got arity {M.arity}")
    par = M.table.parities
    out = {}
    for (a, b), v in M.entries.items():
        out[b, a] = -v if par[a] and (par[a] ^ par[b]) else v
    return GradedMatrix(M.table, 1, out, _trusted=True)


def gcomm(A: GradedMatrix, B: GradedMatrix) -> GradedMatrix:
    """[A, B] = AB - (-1)^{[A][B]} BA."""
    pa, pb = A.homogeneous_parity(), B.homogeneous_parity()
    ab, ba = A @ B, B @ A
    return ab + ba if pa and pb else ab - ba


def elementary_terms(M: GradedMatrix) -> Iterator[tuple[LaurentScalar, tuple[int, ...], tuple[int, ...]]]:
    """Write M = sum coeff * E^{r1}_{c1} (x) ... (x) E^{rk}_{ck} with graded tensor products.

    Yields ``(coeff, row_digits, col_digits)`` with 0-based digits.
    """
    table = M.table
    par = table.parities
    for (r, c), v in M.entries.items():
        rd, cd = table.split(r, M.arity), table.split(c, M.arity)
        # sign picked up by gtensor when the later factors pass the earlier columns
        sign = 0
        tail = 0
        for j in range(M.arity - 1, -1, -1):
            sign ^= tail & par[cd[j]]
            tail ^= par[rd[j]] ^ par[cd[j]]
        yield (-v if sign else v), rd, cd


def leg_embed(M: GradedMatrix, legs: tuple[int, ...], arity: int) -> GradedMatrix:
    """Embed M on V^{(x)len(legs)} into V^{(x)arity} acting on the given (1-based) legs.

    Built term by term from graded tensor products with identity factors, so
    every grading sign comes from :func:`gtensor`.
    """
    if len(legs) != M.arity or sorted(legs) != list(legs) or not 1 <= legs[0] <= legs[-1] <= arity:
        raise ValueError(f"bad legs {legs} for arity {arity}")
    table = M.table
    ident = GradedMatrix.identity(table, 1)
    acc: dict[tuple[int, int], LaurentScalar] = {}
    for coeff, rd, cd in elementary_terms(M):
        factors = []
        j = 0
        for leg in range(1, arity + 1):
            if j < len(legs) and legs[j] == leg:
                factors.append(elem_matrix(table, rd[j] + 1, cd[j] + 1))
                j += 1
            else:
                factors.append(ident)
        term = gtensor_all(*factors)
        for key, v in term.entries.items():
            w = acc.get(key, ZERO) + coeff * v
            if w:
                acc[key] = w
            else:
                acc.pop(key, None)
    return GradedMatrix(table, arity, acc, _trusted=True)
