"""Ground-truth Hecke computations for GL_n(Q_p) by lattice enumeration.

Double cosets U\\GL_n(Q_p)/U (U = GL_n(Z_p)) are labelled by their p-adic
elementary divisor exponents, sorted ascending.  Right cosets alpha*U with
nonnegative label are enumerated as Hermite normal forms: upper triangular,
diagonal p^(d_i), entry (i, j) for i < j reduced mod p^(d_i).  Everything
downstream (convolution structure constants, constant terms along a
parabolic, normalized Satake images at q = p) is obtained by explicitly
multiplying, re-reducing, and classifying these integer matrices.

Scalars involving p^(1/2) are tracked exactly as pairs (a, b) of Fractions
meaning a + b*sqrt(p).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd
from multiprocessing import Pool

from .laurent import Laurent

Matrix = tuple[tuple[int, ...], ...]
Label = tuple[int, ...]
SqrtP = tuple[Fraction, Fraction]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = list(zip(*b))
    return tuple(
        tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a
    )


def hnf(mat) -> Matrix:
    """Canonical upper-triangular representative of the right coset mat*GL_n(Z).

    Column operations only; diagonal made positive; entry (i, j) for j > i
    reduced into [0, diag_i).
    """
    n = len(mat)
    cols = [[mat[i][j] for i in range(n)] for j in range(n)]
    for i in range(n - 1, -1, -1):
        piv = None
        for j in range(i, -1, -1):
            if cols[j][i] != 0:
                piv = j
                break
        if piv is None:
            raise ValueError("singular matrix has no Hermite form here")
        if piv != i:
            cols[piv], cols[i] = cols[i], cols[piv]
        ci = cols[i]
        for j in range(i):
            cj = cols[j]
            b = cj[i]
            if b == 0:
                continue
            a = ci[i]
            g, x, y = xgcd(a, b)
            u, v = a // g, b // g
            for k in range(i + 1):
                cik, cjk = ci[k], cj[k]
                ci[k] = x * cik + y * cjk
                cj[k] = u * cjk - v * cik
        if ci[i] < 0:
            for k in range(i + 1):
                ci[k] = -ci[k]
    for i in range(n - 2, -1, -1):
        ci = cols[i]
        d = ci[i]
        for j in range(i + 1, n):
            cj = cols[j]
            q = cj[i] // d
            if q:
                for k in range(i + 1):
                    cj[k] -= q * ci[k]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def _valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _det(mat) -> int:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = mat
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    total = 0
    for j in range(n):
        if mat[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
            total += (-1) ** j * mat[0][j] * _det(minor)
    return total


def _min_minor_valuation(mat, k: int, p: int) -> int:
    """min p-valuation over all k x k minors (assumed not all zero)."""
    n = len(mat)
    best = None
    for rows in combinations(range(n), k):
        for cols in combinations(range(n), k):
            m = [[mat[i][j] for j in cols] for i in rows]
            d = _det(m)
            if d == 0:
                continue
            v = _valuation(d, p)
            if best is None or v < best:
                best = v
                if best == 0:
                    return 0
    if best is None:
        raise ValueError("all minors vanish; matrix is singular")
    return best


def classify(mat, p: int) -> Label:
    """Elementary divisor exponents (ascending) from gcds of k x k minors."""
    n = len(mat)
    d = _det(mat)
    if d == 0:
        raise ValueError("matrix is singular")
    sums = [0]
    for k in range(1, n):
        sums.append(_min_minor_valuation(mat, k, p))
    sums.append(_valuation(d, p))
    exps = tuple(sums[k + 1] - sums[k] for k in range(n))
    if list(exps) != sorted(exps):
        raise AssertionError(f"minor valuations not convex for {mat}")
    return exps


def check_label(label) -> Label:
    label = tuple(int(a) for a in label)
    if list(label) != sorted(label):
        raise ValueError(f"label must be sorted ascending: {label}")
    if label and label[0] < 0:
        raise ValueError(
            f"negative exponents in {label}: shift by the central element first"
        )
    return label


def enumerate_cosets(n: int, p: int, label) -> list[Matrix]:
    """All HNF representatives of right cosets inside the double coset `label`.

    Diagonals are bounded by the top exponent of the label (each pivot
    divides the largest elementary divisor), so the search space is finite
    and small for desk-scale labels.
    """
    label = check_label(label)
    if len(label) != n:
        raise ValueError(f"label {label} has wrong length for n={n}")
    total = sum(label)
    cap = label[-1] if label else 0
    reps = []
    powers = [p**e for e in range(cap + 1)]

    def diagonals(prefix, remaining, slots):
        if slots == 0:
            if remaining == 0:
                yield prefix
            return
        for d in range(min(cap, remaining) + 1):
            if remaining - d <= cap * (slots - 1):
                yield from diagonals(prefix + (d,), remaining - d, slots - 1)

    for diag in diagonals((), total, n):
        ranges = []
        positions = []
        for i in range(n):
            for j in range(i + 1, n):
                positions.append((i, j))
                ranges.append(range(powers[diag[i]]))
        for fill in product(*ranges):
            mat = [[0] * n for _ in range(n)]
            for i in range(n):
                mat[i][i] = powers[diag[i]]
            for (i, j), v in zip(positions, fill):
                mat[i][j] = v
            m = tuple(tuple(row) for row in mat)
            if classify(m, p) == label:
                reps.append(m)
    reps.sort()
    return reps


# -- convolution --------------------------------------------------------------


def _count_products(args) -> dict[Matrix, int]:
    a_chunk, b_reps = args
    counts: dict[Matrix, int] = {}
    for a in a_chunk:
        for b in b_reps:
            h = hnf(mat_mul(a, b))
            counts[h] = counts.get(h, 0) + 1
    return counts


def product_coset_counts(
    n: int, p: int, a_label, b_label, threads: int = 1
) -> dict[Matrix, int]:
    """Multiplicity of every right coset gamma*U inside the product expansion.

    For UaU = ?? a_i U and UbU = ?? b_j U this is the map
    gamma |-> #{(i, j) | a_i b_j U = gamma U}; the products cover the whole
    support U a U b U, so every coset of every contributing double coset
    appears.
    """
    a_reps = enumerate_cosets(n, p, a_label)
    b_reps = enumerate_cosets(n, p, b_label)
    if threads > 1 and len(a_reps) > 2 * threads:
        chunk = (len(a_reps) + threads - 1) // threads
        jobs = [
            (a_reps[k : k + chunk], b_reps) for k in range(0, len(a_reps), chunk)
        ]
        with Pool(threads) as pool:
            partials = pool.map(_count_products, jobs)
        counts: dict[Matrix, int] = {}
        for part in partials:
            for h, c in part.items():
                counts[h] = counts.get(h, 0) + c
        return counts
    return _count_products((a_reps, b_reps))


def structure_constants_from_counts(
    counts: dict[Matrix, int], p: int
) -> tuple[dict[Label, int], dict[Label, dict[Matrix, int]]]:
    """Group per-coset counts by double coset and extract the constants.

    The count must be identical at every coset of one double coset; this is
    asserted, not assumed.
    """
    by_label: dict[Label, dict[Matrix, int]] = {}
    for h, c in counts.items():
        by_label.setdefault(classify(h, p), {})[h] = c
    constants = {}
    for label in sorted(by_label):
        values = set(by_label[label].values())
        if len(values) != 1:
            raise AssertionError(
                f"count not constant across double coset {label}: {sorted(values)}"
            )
        constants[label] = values.pop()
    return constants, by_label


def convolve(n: int, p: int, a_label, b_label, threads: int = 1) -> dict[Label, int]:
    """Structure constants of [U a U] * [U b U] in the double coset basis."""
    a_label = check_label(a_label)
    b_label = check_label(b_label)
    counts = product_coset_counts(n, p, a_label, b_label, threads)
    constants, _ = structure_constants_from_counts(counts, p)
    return constants


# -- constant terms and Satake images -----------------------------------------


def check_partition(n: int, partition) -> tuple[int, ...]:
    partition = tuple(int(x) for x in partition)
    if any(x <= 0 for x in partition) or sum(partition) != n:
        raise ValueError(f"invalid partition {partition} of {n}")
    return partition


def constant_term(
    n: int, p: int, partition, label
) -> dict[tuple[Label, ...], int]:
    """Diagonal-block coset labels (with multiplicity) over all representatives.

    HNF representatives are upper triangular, hence already block-upper
    triangular for every standard parabolic; projecting to the diagonal
    blocks realizes the unnormalized Satake transform in the double coset
    basis of the block Levi.
    """
    partition = check_partition(n, partition)
    label = check_label(label)
    out: dict[tuple[Label, ...], int] = {}
    for rep in enumerate_cosets(n, p, label):
        key = []
        off = 0
        for size in partition:
            block = tuple(
                tuple(rep[i][j] for j in range(off, off + size))
                for i in range(off, off + size)
            )
            key.append(classify(block, p))
            off += size
        key = tuple(key)
        out[key] = out.get(key, 0) + 1
    return out


RT_ZERO: SqrtP = (Fraction(0), Fraction(0))
RT_ONE: SqrtP = (Fraction(1), Fraction(0))


def rt_add(x: SqrtP, y: SqrtP) -> SqrtP:
    return (x[0] + y[0], x[1] + y[1])


def rt_mul(x: SqrtP, y: SqrtP, p: int) -> SqrtP:
    return (x[0] * y[0] + x[1] * y[1] * p, x[0] * y[1] + x[1] * y[0])


def rt_power_of_sqrt_p(e2: int, p: int) -> SqrtP:
    """p^(e2/2) as an exact pair."""
    if e2 % 2 == 0:
        return (Fraction(p) ** (e2 // 2), Fraction(0))
    return (Fraction(0), Fraction(p) ** ((e2 - 1) // 2))


def half_density_weight(mu, p: int) -> SqrtP:
    """delta_B^(1/2) at the torus point with valuations mu, evaluated at q = p.

    For the upper triangular Borel of GL_n this is
    q^(-sum_i mu_i (n - 2i + 1) / 2) with i running 1..n.
    """
    n = len(mu)
    e2 = -sum(m * (n - 2 * (i + 1) + 1) for i, m in enumerate(mu))
    return rt_power_of_sqrt_p(e2, p)


def satake_image_from_reps(reps, p: int) -> dict[tuple[int, ...], SqrtP]:
    """Normalized Satake image from a complete list of coset representatives."""
    out: dict[tuple[int, ...], SqrtP] = {}
    for rep in reps:
        mu = tuple(_valuation(rep[i][i], p) for i in range(len(rep)))
        w = half_density_weight(mu, p)
        out[mu] = rt_add(out.get(mu, RT_ZERO), w)
    return {mu: v for mu, v in out.items() if v != RT_ZERO}


def satake_image(n: int, p: int, label) -> dict[tuple[int, ...], SqrtP]:
    """Normalized Satake image of [U label U] at q = p.

    Iterates the constant term down to the full torus (the diagonal of the
    HNF representatives) and attaches the half density twist.
    """
    label = check_label(label)
    return satake_image_from_reps(enumerate_cosets(n, p, label), p)


def levi_satake_image(
    n: int, p: int, partition, label
) -> dict[tuple[int, ...], SqrtP]:
    """Normalized Levi coordinates of the unnormalized transform, at q = p.

    By transitivity of constant terms, the Levi's normalized Satake image of
    r_M(r_P(f)) is read off the same representatives as the torus image, but
    the half density factor only sees the roots inside the Levi blocks.
    """
    partition = check_partition(n, partition)
    label = check_label(label)
    out: dict[tuple[int, ...], SqrtP] = {}
    for rep in enumerate_cosets(n, p, label):
        mu = tuple(_valuation(rep[i][i], p) for i in range(n))
        w = RT_ONE
        off = 0
        for size in partition:
            w = rt_mul(w, half_density_weight(mu[off : off + size], p), p)
            off += size
        out[mu] = rt_add(out.get(mu, RT_ZERO), w)
    return {mu: v for mu, v in out.items() if v != RT_ZERO}


def laurent_at_prime(poly: Laurent, p: int) -> dict[tuple[int, ...], SqrtP]:
    """Monomial-indexed values of a symbolic polynomial at q = p."""
    out = {}
    for exps, coeff in poly.terms():
        a, b = coeff.eval_sqrt(p)
        if (a, b) != RT_ZERO:
            out[exps] = (a, b)
    return out


def poly_values_mul(
    x: dict[tuple[int, ...], SqrtP], y: dict[tuple[int, ...], SqrtP], p: int
) -> dict[tuple[int, ...], SqrtP]:
    out: dict[tuple[int, ...], SqrtP] = {}
    for e1, c1 in x.items():
        for e2, c2 in y.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = rt_mul(c1, c2, p)
            out[e] = rt_add(out.get(e, RT_ZERO), v)
    return {e: v for e, v in out.items() if v != RT_ZERO}


def poly_values_add_scaled(
    x: dict[tuple[int, ...], SqrtP], y: dict[tuple[int, ...], SqrtP], scalar: int
) -> dict[tuple[int, ...], SqrtP]:
    out = dict(x)
    s = Fraction(scalar)
    for e, v in y.items():
        out[e] = rt_add(out.get(e, RT_ZERO), (v[0] * s, v[1] * s))
    return {e: v for e, v in out.items() if v != RT_ZERO}


def check_convolution_vs_satake(
    n: int, p: int, a_label, b_label, threads: int = 1
) -> dict:
    """Verify N(a)*N(b) = sum_gamma c_gamma N(gamma) exactly.

    The representatives of every contributing double coset gamma are read
    off from the product expansion itself (which covers them completely), so
    the check needs no extra enumeration and no triangularity assumptions.
    """
    a_label = check_label(a_label)
    b_label = check_label(b_label)
    counts = product_coset_counts(n, p, a_label, b_label, threads)
    constants, by_label = structure_constants_from_counts(counts, p)
    total = sum(counts.values())
    na = satake_image(n, p, a_label)
    nb = satake_image(n, p, b_label)
    lhs = poly_values_mul(na, nb, p)
    rhs: dict[tuple[int, ...], SqrtP] = {}
    for label, constant in constants.items():
        ngamma = satake_image_from_reps(sorted(by_label[label]), p)
        rhs = poly_values_add_scaled(rhs, ngamma, constant)
    return {
        "ok": lhs == rhs,
        "constants": constants,
        "pair_total": total,
        "lhs": lhs,
        "rhs": rhs,
    }


def random_unimodular(n: int, rng, steps: int = 12) -> Matrix:
    """Random product of elementary integer matrices (det = +-1)."""
    mat = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.randrange(-3, 4)
            for k in range(n):
                mat[i][k] += c * mat[j][k]
        elif kind == 1 and i != j:
            mat[i], mat[j] = mat[j], mat[i]
        elif kind == 2:
            mat[i] = [-x for x in mat[i]]
    return tuple(tuple(row) for row in mat)
