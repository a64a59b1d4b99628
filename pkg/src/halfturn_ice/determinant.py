"""Determinant representations of the partition functions at the special
parameter value a = zeta (the primitive sixth root of unity).

The matrices are generalized Vandermonde matrices u_c^(e_r) whose row
exponents are the integers of fixed parity, not divisible by 3, bounded by
3n - 2 (kind P, for the domain-wall sum) or 3m - 1 (kind Q, for the
half-turn cofactor), listed in descending order.  The primed kinds drop
the last row and column.  Evaluators:

    dwbc : (-1)^(n(n-1)/2) sigma(a)^n / prod_(mu<nu) sigma(u_mu/u_nu) * det P(n)
    ht2  : (-1)^(m(m-1)/2) sigma(a)^m / prod sigma(u_mu/u_nu) * det Q(m)
    ht-odd: sigma(a)^(2m) / prod sigma(u_mu/u_nu)^2
                 * det P'(m+1; u) * det P'(m+1; 1/u)

All arithmetic is exact in Q(zeta); evaluation is O(d^3) against the
exponentially growing state sums it reproduces.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .exactnum import Cyclo, ZETA, sigma

Matrix = tuple[tuple[Cyclo, ...], ...]


class DimensionMismatch(ValueError):
    """Point vector length does not match the matrix being built."""


class CoincidentPoints(ValueError):
    """Two coordinates coincide, putting a pole in the prefactor."""


def _exponent_run(bound: int) -> tuple[int, ...]:
    """Integers e with |e| <= bound, e = bound (mod 2), 3 does not divide e,
    descending."""
    return tuple(e for e in range(bound, -bound - 1, -2) if e % 3 != 0)


def row_exponents(kind: str, size: int) -> tuple[int, ...]:
    if kind == "P":
        exps = _exponent_run(3 * size - 2)
        want = 2 * size
    elif kind == "Q":
        exps = _exponent_run(3 * size - 1)
        want = 2 * size
    elif kind == "Pprime":
        exps = _exponent_run(3 * size - 2)[:-1]
        want = 2 * size - 1
    elif kind == "Qprime":
        exps = _exponent_run(3 * size - 1)[:-1]
        want = 2 * size - 1
    else:
        raise ValueError(f"unknown matrix kind {kind!r}")
    assert len(exps) == want, (kind, size, exps)
    return exps


def build_matrix(kind: str, size: int, u: Sequence[Cyclo]) -> Matrix:
    """Row r, column c entry is u_c ** e_r for the kind's exponent list."""
    exps = row_exponents(kind, size)
    pts = tuple(Cyclo.of(x) for x in u)
    if len(pts) != len(exps):
        raise DimensionMismatch(
            f"{kind}({size}) needs {len(exps)} points, got {len(pts)}")
    if any(not x for x in pts):
        raise ValueError("points must be nonzero")
    return tuple(tuple(x ** e for x in pts) for e in exps)


def det_exact(mat: Matrix) -> Cyclo:
    """Exact determinant by fraction-free (Bareiss) elimination in Q(zeta)."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise DimensionMismatch("matrix must be square")
    m = [list(row) for row in mat]
    sign = 1
    prev = Cyclo.of(1)
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Cyclo.of(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Cyclo.of(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _sigma_pair_product(u: Sequence[Cyclo], power: int = 1) -> Cyclo:
    total = Cyclo.of(1)
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] == u[j]:
                raise CoincidentPoints(f"u_{i + 1} = u_{j + 1} = {u[i]}")
            total = total * sigma(u[i] / u[j]) ** power
    return total


def special_z(model: str, size: int, u: Sequence[Cyclo]) -> Cyclo:
    """Determinant evaluator of the partition function at a = zeta.

    model "dwbc" (size n, 2n points), "ht2" (size m, 2m points) or
    "ht-odd" (size m, 2m+1 points, last coordinate shared between the two
    spectral vectors).
    """
    pts = tuple(Cyclo.of(x) for x in u)
    a = ZETA
    if model == "dwbc":
        n = size
        if len(pts) != 2 * n:
            raise DimensionMismatch(f"dwbc size {n} needs {2 * n} points")
        pref = sigma(a) ** n / _sigma_pair_product(pts)
        if (n * (n - 1) // 2) % 2:
            pref = -pref
        return pref * det_exact(build_matrix("P", n, pts))
    if model == "ht2":
        m = size
        if len(pts) != 2 * m:
            raise DimensionMismatch(f"ht2 size {m} needs {2 * m} points")
        pref = sigma(a) ** m / _sigma_pair_product(pts)
        if (m * (m - 1) // 2) % 2:
            pref = -pref
        return pref * det_exact(build_matrix("Q", m, pts))
    if model == "ht-odd":
        m = size
        if len(pts) != 2 * m + 1:
            raise DimensionMismatch(f"ht-odd size {m} needs {2 * m + 1} points")
        pref = sigma(a) ** (2 * m) / _sigma_pair_product(pts, power=2)
        inv = tuple(x.inverse() for x in pts)
        return (pref * det_exact(build_matrix("Pprime", m + 1, pts))
                * det_exact(build_matrix("Pprime", m + 1, inv)))
    raise ValueError(f"unknown determinant model {model!r}")


def random_distinct_rationals(rng: random.Random, count: int,
                              bound: int = 50) -> tuple[Fraction, ...]:
    """Distinct positive rationals with numerator/denominator <= bound."""
    seen: set[Fraction] = set()
    out = []
    while len(out) < count:
        f = Fraction(rng.randint(1, bound), rng.randint(1, bound))
        if f not in seen:
            seen.add(f)
            out.append(f)
    return tuple(out)
