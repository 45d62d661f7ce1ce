"""Weights, bilinear form and simple roots of osp(2|n), n = 2k.

Weights live in the coordinate basis (eps1, delta_1, ..., delta_k); eps2 is
stored as -eps1 and delta_{n+1-mu} as -delta_mu.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache


def check_n(n) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2 or n % 2:
        raise ValueError(f"n must be an even integer >= 2, got {n!r}")
    return n


@dataclass(frozen=True)
class WeightVector:
    eps1: Fraction
    deltas: tuple[Fraction, ...]

    @classmethod
    def zero(cls, k: int) -> "WeightVector":
        return cls(Fraction(0), (Fraction(0),) * k)

    @classmethod
    def epsilon(cls, k: int, sign: int = 1) -> "WeightVector":
        return cls(Fraction(sign), (Fraction(0),) * k)

    @classmethod
    def delta(cls, k: int, mu: int, sign: int = 1) -> "WeightVector":
        """``sign * delta_mu`` for 1 <= mu <= k."""
        if not 1 <= mu <= k:
            raise ValueError(f"delta index {mu} outside 1..{k}")
        d = [Fraction(0)] * k
        d[mu - 1] = Fraction(sign)
        return cls(Fraction(0), tuple(d))

    @property
    def k(self) -> int:
        return len(self.deltas)

    def _check(self, other: "WeightVector") -> None:
        if self.k != other.k:
            raise ValueError(f"weight rank mismatch: {self.k} vs {other.k}")

    def __add__(self, other: "WeightVector") -> "WeightVector":
        self._check(other)
        return WeightVector(self.eps1 + other.eps1,
                            tuple(a + b for a, b in zip(self.deltas, other.deltas)))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return self + (-other)

    def __neg__(self) -> "WeightVector":
        return WeightVector(-self.eps1, tuple(-a for a in self.deltas))

    def __mul__(self, c) -> "WeightVector":
        c = Fraction(c)
        return WeightVector(self.eps1 * c, tuple(a * c for a in self.deltas))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.eps1 and not any(self.deltas)

    def __str__(self) -> str:
        parts = []
        if self.eps1:
            parts.append(f"{self.eps1}*e1")
        parts += [f"{c}*d{i + 1}" for i, c in enumerate(self.deltas) if c]
        return " + ".join(parts) or "0"


def bilinear(w1: WeightVector, w2: WeightVector) -> Fraction:
    """(eps1, eps1) = 1, (delta_mu, delta_nu) = -delta_{mu nu}, (eps1, delta_mu) = 0."""
    w1._check(w2)
    return w1.eps1 * w2.eps1 - sum((a * b for a, b in zip(w1.deltas, w2.deltas)), Fraction(0))


def simple_root_labels(n: int) -> tuple[str, ...]:
    """``('a1', ..., 'a{k-1}', 's', 't')``: the row order of the vector-rep table."""
    k = check_n(n) // 2
    return tuple(f"a{mu}" for mu in range(1, k)) + ("s", "t")


def simple_roots(n: int) -> dict[str, WeightVector]:
    k = check_n(n) // 2
    out = {}
    for mu in range(1, k):
        out[f"a{mu}"] = WeightVector.delta(k, mu) - WeightVector.delta(k, mu + 1)
    out["s"] = WeightVector.delta(k, k) - WeightVector.epsilon(k)
    out["t"] = WeightVector.delta(k, k) + WeightVector.epsilon(k)
    return out


def root_parity(label: str) -> int:
    """Grading of e_c, f_c: the two eps-carrying simple roots are odd."""
    return 1 if label in ("s", "t") else 0


def cartan_matrix(n: int) -> dict[tuple[str, str], Fraction]:
    roots = simple_roots(n)
    out = {}
    for b, ab in roots.items():
        norm = bilinear(ab, ab)
        for c, ac in roots.items():
            pairing = bilinear(ab, ac)
            out[b, c] = 2 * pairing / norm if norm else pairing
    return out


def rho(n: int) -> WeightVector:
    """Graded half-sum of positive roots, sum_mu (k - mu) delta_mu."""
    k = check_n(n) // 2
    return WeightVector(Fraction(0), tuple(Fraction(k - mu) for mu in range(1, k + 1)))


def simple_root_decomposition(n: int, w: WeightVector) -> dict[str, Fraction]:
    """Coefficients of ``w`` on the simple roots.

    The simple roots form a basis of the weight space, so this is a
    triangular solve: the eps1 coordinate fixes t - s, and the delta
    coordinates telescope from delta_1.
    """
    k = check_n(n) // 2
    coeff: dict[str, Fraction] = {}
    running = Fraction(0)
    for mu in range(1, k):
        running += w.deltas[mu - 1]
        coeff[f"a{mu}"] = running
    # delta_k coordinate: -a_{k-1} + s + t; eps1 coordinate: t - s
    total = running + w.deltas[k - 1]
    coeff["t"] = (total + w.eps1) / 2
    coeff["s"] = (total - w.eps1) / 2
    return coeff


@dataclass(frozen=True)
class RootData:
    n: int
    k: int
    labels: tuple[str, ...]
    simple: dict[str, WeightVector] = field(repr=False)
    cartan: dict[tuple[str, str], Fraction] = field(repr=False)
    rho: WeightVector = field(repr=False)


@lru_cache(maxsize=None)
def root_data(n: int) -> RootData:
    return RootData(n=n, k=n // 2, labels=simple_root_labels(n), simple=simple_roots(n),
                    cartan=cartan_matrix(n), rho=rho(n))
