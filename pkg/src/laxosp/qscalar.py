"""Exact Laurent polynomials in s = q^(1/2) with rational coefficients.

Every scalar that appears in the Lax operator and the vector R-matrices is a
finite sum ``sum_e c_e s^e`` with ``e`` an integer and ``c_e`` a rational.
Half-integer powers of q are therefore ordinary integer powers of s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Number = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class LaurentScalar:
    """Immutable Laurent polynomial in ``s``.

    ``terms`` maps exponent-of-s to a nonzero :class:`Fraction`.  The zero
    element is the empty map, so structural equality is ring equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, Fraction] | None = None, *, _trusted: bool = False):
        if terms is None:
            terms = {}
        elif not _trusted:
            clean: dict[int, Fraction] = {}
            for e, c in terms.items():
                if not isinstance(e, int):
                    raise TypeError("exponents must be integers")
                c = _as_fraction(c)
                if c:
                    clean[e] = c
            terms = clean
        self._terms = terms
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: Number) -> "LaurentScalar":
        c = _as_fraction(c)
        return cls({0: c} if c else {}, _trusted=True)

    @classmethod
    def monomial(cls, exponent: int, coeff: Number = 1) -> "LaurentScalar":
        c = _as_fraction(coeff)
        return cls({exponent: c} if c else {}, _trusted=True)

    @classmethod
    def coerce(cls, x) -> "LaurentScalar":
        if isinstance(x, LaurentScalar):
            return x
        return cls.const(x)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(0, Fraction(0))

    # -- ring operations --------------------------------------------------

    def __add__(self, other) -> "LaurentScalar":
        if not isinstance(other, LaurentScalar):
            try:
                other = LaurentScalar.const(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v += c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentScalar(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar({e: -c for e, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other) -> "LaurentScalar":
        if not isinstance(other, LaurentScalar):
            try:
                other = LaurentScalar.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentScalar":
        return LaurentScalar.coerce(other) - self

    def __mul__(self, other) -> "LaurentScalar":
        if not isinstance(other, LaurentScalar):
            try:
                c = _as_fraction(other)
            except TypeError:
                return NotImplemented
            if not c:
                return ZERO
            return LaurentScalar({e: v * c for e, v in self._terms.items()}, _trusted=True)
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1:
            ((eb, cb),) = b.items()
            return LaurentScalar({ea + eb: ca * cb for ea, ca in a.items()}, _trusted=True)
        if len(a) == 1:
            ((ea, ca),) = a.items()
            return LaurentScalar({ea + eb: ca * cb for eb, cb in b.items()}, _trusted=True)
        out: dict[int, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentScalar({e: c for e, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentScalar":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            return LaurentScalar.monomial(e * k, c ** k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentScalar):
            return self._terms == other._terms
        try:
            return self._terms == LaurentScalar.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    # -- evaluation --------------------------------------------------------

    def evaluate(self, s_value: Number) -> Fraction:
        """Exact value at ``s = s_value`` (so q = s_value**2)."""
        s_value = _as_fraction(s_value)
        if s_value == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at s = 0")
        return sum((c * s_value ** e for e, c in self._terms.items()), Fraction(0))

    # -- serialization -----------------------------------------------------

    def to_triples(self) -> list[list[int]]:
        """``[[exponent_of_s, numerator, denominator], ...]`` by ascending exponent."""
        return [[e, c.numerator, c.denominator] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_triples(cls, triples: Iterable) -> "LaurentScalar":
        return laurent_normalize((int(e), Fraction(int(p), int(d))) for e, p, d in triples)

    def __repr__(self) -> str:
        return f"LaurentScalar({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e % 2 == 0:
                mono = "q" if e == 2 else f"q^{e // 2}"
            else:
                mono = f"q^({e}/2)"
            if not mono:
                coeff = str(c)
            elif c == 1:
                coeff = ""
            elif c == -1:
                coeff = "-"
            else:
                coeff = f"{c}*"
            parts.append(coeff + mono)
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


ZERO = LaurentScalar({}, _trusted=True)
ONE = LaurentScalar({0: Fraction(1)}, _trusted=True)


def laurent_normalize(terms: Iterable[tuple[int, Number]]) -> LaurentScalar:
    """Canonical form of a list of ``(exponent_of_s, coefficient)`` pairs."""
    out: dict[int, Fraction] = {}
    for e, c in terms:
        if not isinstance(e, int):
            raise TypeError("exponents must be integers")
        out[e] = out.get(e, Fraction(0)) + _as_fraction(c)
    return LaurentScalar({e: c for e, c in out.items() if c}, _trusted=True)


def laurent_mul(x: LaurentScalar, y: LaurentScalar) -> LaurentScalar:
    return x * y


def laurent_eval(x: LaurentScalar, s_value: Number) -> Fraction:
    return x.evaluate(s_value)


def q_power(h) -> LaurentScalar:
    """The monomial ``q**h`` for half-integer ``h``, i.e. ``s**(2h)``."""
    two_h = 2 * _as_fraction(h)
    if two_h.denominator != 1:
        raise ValueError(f"q-exponent {h} is not a half-integer")
    return LaurentScalar({int(two_h): Fraction(1)}, _trusted=True)


#: q - q^{-1}, the prefactor of every off-diagonal R-matrix term.
Q_MINUS_QINV = laurent_normalize([(2, 1), (-2, -1)])


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = _as_fraction(x)
    if x < 0:
        return None
    num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


@dataclass(frozen=True)
class EvalPoint:
    """A numeric value of q for exact specialization.

    When q is the square of a rational, s is that rational and every scalar
    becomes a constant.  Otherwise scalars are reduced modulo s^2 = q into
    the form a + b*s, which is still exact: the reduction is a ring
    homomorphism, and results with no odd powers of s are plain rationals.
    """

    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", _as_fraction(self.q))
        if self.q == 0:
            raise ValueError("q = 0 is not an admissible evaluation point")

    @classmethod
    def from_s(cls, s_value: Number) -> "EvalPoint":
        s_value = _as_fraction(s_value)
        if s_value <= 0:
            raise ValueError("s must be a positive rational")
        return cls(s_value * s_value)

    @classmethod
    def parse(cls, text: str) -> "EvalPoint":
        return cls(Fraction(text))

    @property
    def s(self) -> Fraction | None:
        return rational_sqrt(self.q)

    @property
    def generic(self) -> bool:
        """False at q in {1, -1}, where q - q^-1 vanishes."""
        return self.q not in (1, -1)

    def apply(self, x: LaurentScalar) -> LaurentScalar:
        s = self.s
        if s is not None:
            return LaurentScalar.const(x.evaluate(s))
        out: dict[int, Fraction] = {}
        for e, c in x.items():
            r = e % 2
            out[r] = out.get(r, Fraction(0)) + c * self.q ** (e // 2)
        return LaurentScalar({r: c for r, c in out.items() if c}, _trusted=True)

    def __str__(self) -> str:
        return f"q={self.q}"
