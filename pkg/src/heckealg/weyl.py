"""Symmetric and hyperoctahedral group actions on Laurent variables.

The symmetric group permutes a chosen subset of the variables; the
hyperoctahedral group S_n x (Z/2)^n additionally inverts variables.
Invariance is decided on generators only: n-1 adjacent transpositions,
plus a single inversion in the hyperoctahedral case (its conjugates under
S_n give the remaining inversions).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .laurent import Laurent
from .qhalf import QHalf

SYMMETRIC = "symmetric"
HYPEROCTAHEDRAL = "hyperoctahedral"


@dataclass(frozen=True)
class WeylAction:
    kind: str
    variables: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in (SYMMETRIC, HYPEROCTAHEDRAL):
            raise ValueError(f"unknown action kind {self.kind}")

    @staticmethod
    def symmetric(variables) -> "WeylAction":
        return WeylAction(SYMMETRIC, tuple(variables))

    @staticmethod
    def hyperoctahedral(variables) -> "WeylAction":
        return WeylAction(HYPEROCTAHEDRAL, tuple(variables))


def elementary_symmetric(i: int, variables) -> Laurent:
    """The i-th elementary symmetric polynomial e_i; e_0 = 1."""
    variables = tuple(variables)
    n = len(variables)
    if not 0 <= i <= n:
        raise ValueError(f"index {i} out of range for {n} variables")
    one = QHalf.one()
    terms = {}
    for subset in combinations(range(n), i):
        exps = [0] * n
        for j in subset:
            exps[j] = 1
        terms[tuple(exps)] = one
    return Laurent(variables, terms)


def elementary_symmetric_of(monomials: list[Laurent], i: int, variables) -> Laurent:
    """e_i evaluated on a list of monomial arguments (via prod (1 + m_k t))."""
    variables = tuple(variables)
    if not 0 <= i <= len(monomials):
        raise ValueError(f"index {i} out of range for {len(monomials)} arguments")
    # coefficients of t^0..t^i in prod_k (1 + m_k t), truncated at degree i
    coeffs = [Laurent.one(variables)] + [Laurent.zero(variables)] * i
    for m in monomials:
        for d in range(min(i, len(coeffs) - 1), 0, -1):
            coeffs[d] = coeffs[d] + coeffs[d - 1] * m
    return coeffs[i]


def is_invariant(poly: Laurent, action: WeylAction) -> bool:
    positions = [poly.vars.index(v) for v in action.variables]
    for a, b in zip(positions, positions[1:]):
        perm = list(range(len(poly.vars)))
        perm[a], perm[b] = perm[b], perm[a]
        if poly.permute_positions(tuple(perm)) != poly:
            return False
    if action.kind == HYPEROCTAHEDRAL and positions:
        if poly.invert_position(positions[0]) != poly:
            return False
    return True


def _leading_partition(poly: Laurent) -> tuple[int, ...]:
    """Largest exponent vector in lex order; for symmetric input it is sorted
    descending (a partition)."""
    return max(poly.terms())[0]


def express_in_e_basis(poly: Laurent, variables=None) -> tuple[dict[tuple[int, ...], QHalf], int]:
    """Expand a symmetric Laurent polynomial in elementary symmetric products.

    Returns (expansion, k) where expansion maps multidegrees (m_1..m_n)
    standing for e_1^m_1 * ... * e_n^m_n to scalar coefficients, and the whole
    expression is divided by e_n^k.  k is the smallest shift making
    poly * e_n^k polynomial.  Reconstruction:
    poly = (sum_m c_m * prod e_j^m_j) * e_n^(-k).
    """
    variables = poly.vars if variables is None else tuple(variables)
    if variables != poly.vars:
        raise ValueError("expansion variables must match the polynomial's")
    n = len(variables)
    if n == 0:
        raise ValueError("need at least one variable")
    if not is_invariant(poly, WeylAction.symmetric(variables)):
        raise ValueError("polynomial is not symmetric in its variables")
    k = max(0, -poly.min_exponent())
    shift = Laurent.monomial(variables, (k,) * n)
    work = poly * shift
    e_polys = [elementary_symmetric(j, variables) for j in range(n + 1)]
    expansion: dict[tuple[int, ...], QHalf] = {}
    guard = 0
    while not work.is_zero():
        guard += 1
        if guard > 100000:
            raise RuntimeError("e-basis expansion did not terminate")
        lam = _leading_partition(work)
        if any(e < 0 for e in lam) or list(lam) != sorted(lam, reverse=True):
            raise ValueError("polynomial is not symmetric: bad leading term")
        coeff = work.coefficient(lam)
        # e_1^(lam_1-lam_2) ... e_n^(lam_n) has lex-leading monomial X^lam
        multi = tuple(
            lam[j] - (lam[j + 1] if j + 1 < n else 0) for j in range(n)
        )
        prod = Laurent.one(variables)
        for j, m in enumerate(multi, start=1):
            if m:
                prod = prod * e_polys[j] ** m
        work = work - prod.scale(coeff)
        expansion[multi] = expansion.get(multi, QHalf.zero()) + coeff
    return {m: c for m, c in expansion.items() if not c.is_zero()}, k


def expand_e_expression(
    expansion: dict[tuple[int, ...], QHalf], k: int, variables
) -> Laurent:
    """Inverse of express_in_e_basis (for round-trip checking)."""
    variables = tuple(variables)
    n = len(variables)
    e_polys = [elementary_symmetric(j, variables) for j in range(n + 1)]
    total = Laurent.zero(variables)
    for multi, coeff in expansion.items():
        prod = Laurent.one(variables)
        for j, m in enumerate(multi, start=1):
            if m:
                prod = prod * e_polys[j] ** m
        total = total + prod.scale(coeff)
    if k:
        total = total * Laurent.monomial(variables, (-k,) * n)
    return total
