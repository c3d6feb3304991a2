"""Exact arithmetic in Z[q^(1/2), q^(-1/2)].

Scalars are stored as a map from *doubled* exponents to integer
coefficients, so q^(e/2) is the key e.  Keeping exponents doubled means
every exponent is a plain int and no rational arithmetic is needed.
Values are immutable; all operations return new objects.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator


class QHalf:
    """An element of Z[q^(1/2), q^(-1/2)] in canonical form (no zero terms)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        clean = {}
        if terms:
            for e2, c in terms.items():
                if c:
                    clean[int(e2)] = int(c)
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of_int(c: int) -> "QHalf":
        return QHalf({0: c})

    @staticmethod
    def q_power(e2: int, coeff: int = 1) -> "QHalf":
        """coeff * q^(e2/2); e2 counts half-steps of q."""
        return QHalf({e2: coeff})

    @staticmethod
    def zero() -> "QHalf":
        return QHalf()

    @staticmethod
    def one() -> "QHalf":
        return QHalf({0: 1})

    def ring_one(self) -> "QHalf":
        return QHalf({0: 1})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, e2: int) -> int:
        return self._terms.get(e2, 0)

    def constant_value(self) -> int:
        """The integer value, assuming no q appears (raises otherwise)."""
        if not self._terms:
            return 0
        if set(self._terms) != {0}:
            raise ValueError(f"not a constant: {self}")
        return self._terms[0]

    def is_unit(self) -> bool:
        """Units of Z[q^(1/2), q^(-1/2)] are +-q^(e/2)."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def monomial_parts(self) -> tuple[int, int]:
        """(doubled exponent, coefficient) of a single-term scalar."""
        if len(self._terms) != 1:
            raise ValueError(f"not a monomial: {self}")
        ((e2, c),) = self._terms.items()
        return e2, c

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "QHalf") -> "QHalf":
        if not isinstance(other, QHalf):
            return NotImplemented
        terms = dict(self._terms)
        for e2, c in other._terms.items():
            terms[e2] = terms.get(e2, 0) + c
        return QHalf(terms)

    def __neg__(self) -> "QHalf":
        return QHalf({e2: -c for e2, c in self._terms.items()})

    def __sub__(self, other: "QHalf") -> "QHalf":
        return self + (-other)

    def __mul__(self, other: "QHalf") -> "QHalf":
        if isinstance(other, int):
            return QHalf({e2: c * other for e2, c in self._terms.items()})
        if not isinstance(other, QHalf):
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        return QHalf(terms)

    def __rmul__(self, other: int) -> "QHalf":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "QHalf":
        if k < 0:
            return self.inverse() ** (-k)
        out = QHalf.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "QHalf":
        e2, c = self.monomial_parts()
        if abs(c) != 1:
            raise ValueError(f"not a unit: {self}")
        return QHalf({-e2: c})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if not isinstance(other, QHalf):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    # -- evaluation and serialization ---------------------------------------

    def eval_sqrt(self, p: int) -> tuple[Fraction, Fraction]:
        """Value at q = p as an exact pair (a, b) meaning a + b*sqrt(p).

        sqrt(p) is irrational for p prime, so the pair representation is
        faithful; negative exponents land in Z[1/p] inside the Fractions.
        """
        a = Fraction(0)
        b = Fraction(0)
        for e2, c in self._terms.items():
            if e2 % 2 == 0:
                a += c * Fraction(p) ** (e2 // 2)
            else:
                b += c * Fraction(p) ** ((e2 - 1) // 2)
        return a, b

    def eval_generic(self, sqrt_q, one):
        """Value with q^(1/2) |-> sqrt_q in any commutative ring.

        `one` is the ring's unit; negative exponents require sqrt_q to
        support .inverse().
        """
        total = one - one
        for e2, c in self._terms.items():
            if e2 >= 0:
                term = sqrt_q ** e2
            else:
                term = sqrt_q.inverse() ** (-e2)
            total = total + term * c
        return total

    def to_json(self) -> list[dict]:
        return [{"q2": e2, "c": str(c)} for e2, c in sorted(self._terms.items())]

    @staticmethod
    def from_json(data: list[dict]) -> "QHalf":
        return QHalf({int(item["q2"]): int(item["c"]) for item in data})

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e2, c in sorted(self._terms.items()):
            if e2 == 0:
                parts.append(f"{c}")
            elif e2 % 2 == 0:
                parts.append(f"{c}*q^{e2 // 2}")
            else:
                parts.append(f"{c}*q^({e2}/2)")
        return " + ".join(parts)
