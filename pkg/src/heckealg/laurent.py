"""Multivariate Laurent polynomials over Z[q^(1/2), q^(-1/2)].

A polynomial carries an ordered tuple of variable names and a term map
from integer exponent vectors (tuples, one entry per variable) to QHalf
coefficients.  Canonical form stores no zero coefficients.  Values are
immutable and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .qhalf import QHalf


class VariableMismatch(ValueError):
    """Raised when two polynomials live over different variable tuples."""


class Laurent:
    __slots__ = ("vars", "_terms")

    def __init__(self, variables: Iterable[str], terms: dict[tuple[int, ...], QHalf] | None = None):
        self.vars = tuple(variables)
        nvars = len(self.vars)
        clean: dict[tuple[int, ...], QHalf] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} has wrong length for {self.vars}")
                if not coeff.is_zero():
                    clean[tuple(int(e) for e in exps)] = coeff
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(variables: Iterable[str]) -> "Laurent":
        return Laurent(variables)

    @staticmethod
    def constant(variables: Iterable[str], coeff: QHalf | int) -> "Laurent":
        variables = tuple(variables)
        if isinstance(coeff, int):
            coeff = QHalf.of_int(coeff)
        return Laurent(variables, {(0,) * len(variables): coeff})

    @staticmethod
    def one(variables: Iterable[str]) -> "Laurent":
        return Laurent.constant(variables, 1)

    @staticmethod
    def monomial(variables: Iterable[str], exps: Iterable[int], coeff: QHalf | int = 1) -> "Laurent":
        variables = tuple(variables)
        if isinstance(coeff, int):
            coeff = QHalf.of_int(coeff)
        return Laurent(variables, {tuple(exps): coeff})

    @staticmethod
    def variable(variables: Iterable[str], name: str, power: int = 1, coeff: QHalf | int = 1) -> "Laurent":
        variables = tuple(variables)
        idx = variables.index(name)
        exps = [0] * len(variables)
        exps[idx] = power
        return Laurent.monomial(variables, exps, coeff)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[tuple[tuple[int, ...], QHalf]]:
        return sorted(self._terms.items())

    def coefficient(self, exps: tuple[int, ...]) -> QHalf:
        return self._terms.get(tuple(exps), QHalf.zero())

    def num_terms(self) -> int:
        return len(self._terms)

    def min_exponent(self) -> int:
        """Smallest exponent appearing in any variable (0 for the zero poly)."""
        if not self._terms:
            return 0
        return min(min(exps) for exps in self._terms)

    def is_monomial_unit(self) -> bool:
        """True iff the polynomial is c*X^mu with c a unit scalar."""
        return len(self._terms) == 1 and next(iter(self._terms.values())).is_unit()

    # -- ring structure ------------------------------------------------------

    def _check_vars(self, other: "Laurent") -> None:
        if self.vars != other.vars:
            raise VariableMismatch(f"variable sets differ: {self.vars} vs {other.vars}")

    def __add__(self, other: "Laurent") -> "Laurent":
        if not isinstance(other, Laurent):
            return NotImplemented
        self._check_vars(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            cur = terms.get(exps)
            terms[exps] = coeff if cur is None else cur + coeff
        return Laurent(self.vars, terms)

    def __neg__(self) -> "Laurent":
        return Laurent(self.vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        if isinstance(other, (QHalf, int)):
            return self.scale(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        self._check_vars(other)
        terms: dict[tuple[int, ...], QHalf] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                cur = terms.get(e)
                terms[e] = prod if cur is None else cur + prod
        return Laurent(self.vars, terms)

    def __rmul__(self, other) -> "Laurent":
        if isinstance(other, (QHalf, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, coeff: QHalf | int) -> "Laurent":
        if isinstance(coeff, int):
            coeff = QHalf.of_int(coeff)
        return Laurent(self.vars, {e: c * coeff for e, c in self._terms.items()})

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            return self.inverse() ** (-k)
        out = Laurent.one(self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "Laurent":
        """Inverse of a unit monomial c*X^mu."""
        if len(self._terms) != 1:
            raise ValueError(f"not invertible: {self}")
        ((exps, coeff),) = self._terms.items()
        return Laurent.monomial(self.vars, tuple(-e for e in exps), coeff.inverse())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.vars, tuple(sorted((e, hash(c)) for e, c in self._terms.items()))))

    # -- substitution and evaluation -----------------------------------------

    def substitute(
        self,
        mapping: Mapping[str, tuple[QHalf, str, int]],
        target_vars: Iterable[str],
    ) -> "Laurent":
        """Apply a monomial substitution v |-> c * W^(+-1).

        `mapping` sends every variable of self to (scalar, target variable,
        sign in {+1, -1}).  This is a ring homomorphism; images of Laurent
        monomials are computed by raising each image to the source exponent.
        """
        target_vars = tuple(target_vars)
        for v in self.vars:
            if v not in mapping:
                raise VariableMismatch(f"no image for variable {v}")
        index = {name: i for i, name in enumerate(target_vars)}
        images = []
        for v in self.vars:
            coeff, tgt, sign = mapping[v]
            if tgt not in index:
                raise VariableMismatch(f"target variable {tgt} not in {target_vars}")
            if sign not in (1, -1):
                raise ValueError("substitution images must be c*V or c*V^-1")
            images.append((coeff, index[tgt], sign))
        terms: dict[tuple[int, ...], QHalf] = {}
        for exps, coeff in self._terms.items():
            out_exps = [0] * len(target_vars)
            out_coeff = coeff
            for e, (c, j, sign) in zip(exps, images):
                if e == 0:
                    continue
                out_exps[j] += sign * e
                out_coeff = out_coeff * (c ** e if e >= 0 else c.inverse() ** (-e))
            key = tuple(out_exps)
            cur = terms.get(key)
            terms[key] = out_coeff if cur is None else cur + out_coeff
        return Laurent(target_vars, terms)

    def rename(self, mapping: Mapping[str, str], target_vars: Iterable[str]) -> "Laurent":
        one = QHalf.one()
        return self.substitute({v: (one, mapping[v], 1) for v in self.vars}, target_vars)

    def permute_positions(self, perm: tuple[int, ...]) -> "Laurent":
        """Relabel exponent positions: new_exps[perm[i]] = exps[i] (same vars)."""
        terms: dict[tuple[int, ...], QHalf] = {}
        for exps, coeff in self._terms.items():
            out = [0] * len(exps)
            for i, e in enumerate(exps):
                out[perm[i]] = e
            terms[tuple(out)] = coeff
        return Laurent(self.vars, terms)

    def invert_position(self, pos: int) -> "Laurent":
        """Negate the exponent in one position (variable inversion)."""
        terms = {}
        for exps, coeff in self._terms.items():
            out = list(exps)
            out[pos] = -out[pos]
            terms[tuple(out)] = coeff
        return Laurent(self.vars, terms)

    def eval_generic(self, values: Mapping[str, object], sqrt_q, one):
        """Evaluate in any commutative ring.

        `values` maps each variable to a ring element (supporting * and
        .inverse()); sqrt_q is the image of q^(1/2); `one` the ring unit.
        """
        vals = [values[v] for v in self.vars]
        total = one - one
        for exps, coeff in self._terms.items():
            term = coeff.eval_generic(sqrt_q, one)
            for val, e in zip(vals, exps):
                if e > 0:
                    term = term * val ** e
                elif e < 0:
                    term = term * val.inverse() ** (-e)
            total = total + term
        return total

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exps": list(exps), "coeff": coeff.to_json()}
                for exps, coeff in sorted(self._terms.items())
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "Laurent":
        terms = {
            tuple(item["exps"]): QHalf.from_json(item["coeff"])
            for item in data["terms"]
        }
        return Laurent(tuple(data["vars"]), terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in sorted(self._terms.items()):
            monos = [
                f"{v}^{e}" if e != 1 else v
                for v, e in zip(self.vars, exps)
                if e != 0
            ]
            body = "*".join(monos) if monos else "1"
            parts.append(f"({coeff})*{body}")
        return " + ".join(parts)
