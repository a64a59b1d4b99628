"""Exhaustive ASM generators, inversion generating functions and censuses.

These are the brute-force oracles behind every enumeration identity in the
package.  Generation is row-by-row backtracking on partial column sums
(each constrained to {0, 1}), which enforces the alternating property
incrementally; streams are emitted in row-major lexicographic order with
entries ordered -1 < 0 < 1, so two runs are byte-identical.

The half-turn class fills only rows 1..ceil(n/2) (the middle row of an odd
order is kept palindromic), completes the matrix by 180-degree rotation and
validates the result, which is far cheaper than filtering the full stream.

Census weights follow the x-enumeration conventions: a matrix with k
entries equal to -1 weighs x^k in the plain class and x^(k/2) in the
half-turn class.  For odd half-turn orders k may be odd, so those tables
are kept in the variable "sqrtx" with exponent k (sqrtx^2 = x).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .asm import Asm, NotAlternating, as_asm, inversions, stats
from .laurent import LaurentPoly


def _row_candidates(col: tuple[int, ...], force_palindrome: bool) -> Iterator[tuple[int, ...]]:
    """All valid next rows given column partial sums, in lex order (-1 < 0 < 1)."""
    n = len(col)
    row = [0] * n
    half = (n + 1) // 2

    def fill(j: int, rsum: int):
        if force_palindrome and j >= half:
            # Mirror the free prefix and re-check row partial sums.
            for k in range(half, n):
                row[k] = row[n - 1 - k]
            s = 0
            for k in range(n):
                s += row[k]
                if s not in (0, 1):
                    return
            if s == 1:
                yield tuple(row)
            return
        if j == n:
            if rsum == 1:
                yield tuple(row)
            return
        for e in (-1, 0, 1):
            if rsum + e not in (0, 1):
                continue
            if col[j] + e not in (0, 1):
                continue
            row[j] = e
            yield from fill(j + 1, rsum + e)
        row[j] = 0

    yield from fill(0, 0)


def _gen_all(n: int) -> Iterator[Asm]:
    rows: list[tuple[int, ...]] = []

    def rec(i: int, col: tuple[int, ...]):
        if i == n:
            if all(c == 1 for c in col):
                yield Asm(tuple(rows))
            return
        for row in _row_candidates(col, False):
            newcol = tuple(c + e for c, e in zip(col, row))
            # Every column must still be completable to sum 1.
            if i == n - 1 and any(c != 1 for c in newcol):
                continue
            rows.append(row)
            yield from rec(i + 1, newcol)
            rows.pop()

    yield from rec(0, (0,) * n)


def _gen_ht(n: int) -> Iterator[Asm]:
    half = (n + 1) // 2
    rows: list[tuple[int, ...]] = []

    def complete() -> Optional[Asm]:
        full = list(rows)
        for i in range(n - half - 1, -1, -1):
            full.append(tuple(reversed(rows[i])))
        try:
            return as_asm(full)
        except NotAlternating:
            return None

    def rec(i: int, col: tuple[int, ...]):
        if i == half:
            m = complete()
            if m is not None:
                yield m
            return
        palindrome = (n % 2 == 1 and i == half - 1)
        for row in _row_candidates(col, palindrome):
            newcol = tuple(c + e for c, e in zip(col, row))
            rows.append(row)
            yield from rec(i + 1, newcol)
            rows.pop()

    yield from rec(0, (0,) * n)


def gen_asms(n: int, klass: str = "all") -> Iterator[Asm]:
    """Stream every ASM of the class exactly once, deterministically."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if klass == "all":
        return _gen_all(n)
    if klass == "ht":
        return _gen_ht(n)
    raise ValueError(f"unknown class {klass!r}")


# ----------------------------------------------------------------------
# inversion generating functions
# ----------------------------------------------------------------------


def _is_ht_perm(s: tuple[int, ...]) -> bool:
    n = len(s)
    return all(s[n - 1 - i] == n + 1 - s[i] for i in range(n))


def ht_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """Permutations (1-based words) whose matrices are half-turn symmetric."""
    for s in itertools.permutations(range(1, n + 1)):
        if _is_ht_perm(s):
            yield s


def _z(exp: int) -> LaurentPoly:
    return LaurentPoly(("z",), {(exp,): 1})


def _geometric(k: int) -> LaurentPoly:
    """1 + z + ... + z^(k-1)."""
    return LaurentPoly(("z",), {(i,): 1 for i in range(k)})


def phi_closed(n: int) -> LaurentPoly:
    """Inversion generating function of the full symmetric group."""
    p = LaurentPoly.const(1)
    for k in range(2, n + 1):
        p = p * _geometric(k)
    return p


def _phi_squared_arg(m: int) -> LaurentPoly:
    """phi(m) with z replaced by z^2."""
    return phi_closed(m).substitute("z", LaurentPoly(("z",), {(2,): 1}))


def phi_ht_closed(n: int) -> LaurentPoly:
    """Inversion generating function of the half-turn permutations:
    a product of binomials (1 + z^odd) times phi of half the order in z^2."""
    if n % 2 == 1:
        m = (n - 1) // 2
        p = _phi_squared_arg(m)
        for i in range(1, m + 1):
            p = p * (LaurentPoly.const(1) + _z(2 * i + 1))
        return p
    m = n // 2
    p = _phi_squared_arg(m)
    for i in range(1, m + 1):
        p = p * (LaurentPoly.const(1) + _z(2 * i - 1))
    return p


def inversion_genfunc(n: int, klass: str = "all", mode: str = "brute") -> LaurentPoly:
    """Sum of z^inv(s) over the class, by brute force or by product formula."""
    if mode == "closed":
        return phi_closed(n) if klass == "all" else phi_ht_closed(n)
    if mode != "brute":
        raise ValueError(f"unknown mode {mode!r}")
    perms = (itertools.permutations(range(1, n + 1)) if klass == "all"
             else ht_permutations(n))
    counts: dict[tuple, int] = {}
    for s in perms:
        k = (inversions(s),)
        counts[k] = counts.get(k, 0) + 1
    return LaurentPoly(("z",), counts)


# ----------------------------------------------------------------------
# weighted refined census
# ----------------------------------------------------------------------


@dataclass
class CensusTable:
    """Refined x-enumeration table of one ASM class.

    Rows are keyed by (position r of the 1 in the first column, central
    entry or None); values are weight polynomials in "x" (classes all and
    even ht) or "sqrtx" (odd ht, where sqrtx^2 = x).
    """

    order: int
    klass: str
    weight_var: str
    rows: dict[tuple[int, Optional[int]], LaurentPoly] = field(default_factory=dict)
    count: int = 0

    def total_poly(self) -> LaurentPoly:
        tot = LaurentPoly.zero()
        for p in self.rows.values():
            tot = tot + p
        return tot

    def total_count(self) -> int:
        """Number of matrices (all weights at x = 1)."""
        return self.count

    def genfunc(self) -> LaurentPoly:
        """The full refined generating function in (t, weight_var)."""
        tot = LaurentPoly.zero()
        for (r, _), p in sorted(self.rows.items(), key=lambda kv: (kv[0][0], kv[0][1] or 0)):
            tot = tot + p * LaurentPoly(("t",), {(r - 1,): 1})
        return tot

    def split_by_center(self) -> tuple[LaurentPoly, LaurentPoly]:
        """(plus, minus) refined polynomials in (t, x) for odd ht tables.

        The minus part has one overall sqrtx factored out, so both parts
        are honest polynomials in x.
        """
        if self.klass != "ht" or self.order % 2 == 0:
            raise ValueError("central split requires an odd half-turn census")
        plus = LaurentPoly.zero()
        minus = LaurentPoly.zero()
        for (r, central), p in self.rows.items():
            tp = p * LaurentPoly(("t",), {(r - 1,): 1})
            if central == 1:
                plus = plus + tp
            else:
                minus = minus + LaurentPoly(
                    tp.vars, {_shift_sqrtx(tp.vars, e, -1): c for e, c in tp.terms.items()})
        return _halve_sqrtx(plus), _halve_sqrtx(minus)

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "class": self.klass,
            "weightVar": self.weight_var,
            "count": self.count,
            "rows": [
                {"r": r, "central": central,
                 "weight": poly.to_json_obj()}
                for (r, central), poly in sorted(
                    self.rows.items(), key=lambda kv: (kv[0][0], kv[0][1] or 0))
            ],
        }

    def to_csv(self) -> str:
        lines = ["r,central,terms"]
        for (r, central), poly in sorted(self.rows.items(),
                                         key=lambda kv: (kv[0][0], kv[0][1] or 0)):
            terms = ";".join(
                f"{(e[0] if e else 0)}:{c}" for e, c in sorted(poly.terms.items()))
            lines.append(f"{r},{'' if central is None else central},{terms}")
        return "\n".join(lines) + "\n"


def _shift_sqrtx(vars: tuple, e: tuple, delta: int) -> tuple:
    if "sqrtx" not in vars:
        raise ValueError("no sqrtx component to shift")
    i = vars.index("sqrtx")
    return e[:i] + (e[i] + delta,) + e[i + 1:]


def _halve_sqrtx(p: LaurentPoly) -> LaurentPoly:
    """Rewrite even powers of sqrtx as powers of x."""
    if "sqrtx" not in p.vars:
        return p
    i = p.vars.index("sqrtx")
    out = {}
    for e, c in p.terms.items():
        if e[i] % 2:
            raise ValueError("odd sqrtx power cannot be halved")
        out[e[:i] + (e[i] // 2,) + e[i + 1:]] = c
    vs = p.vars[:i] + ("x",) + p.vars[i + 1:]
    return LaurentPoly(vs, out)


@lru_cache(maxsize=None)
def census(n: int, klass: str = "all") -> CensusTable:
    """Exact weighted refined census of a class, split by central entry for
    odd half-turn orders.  Cached: treat the returned table as read-only."""
    odd_ht = klass == "ht" and n % 2 == 1
    var = "sqrtx" if odd_ht else "x"
    table = CensusTable(order=n, klass=klass, weight_var=var)
    for m in gen_asms(n, klass):
        st = stats(m)
        k = st.minus_ones
        exp = k if (odd_ht or klass == "all") else k // 2
        key = (st.first_column_one_pos, st.central_entry if odd_ht else None)
        mono = LaurentPoly((var,), {(exp,): 1})
        table.rows[key] = table.rows.get(key, LaurentPoly.zero()) + mono
        table.count += 1
    return table
