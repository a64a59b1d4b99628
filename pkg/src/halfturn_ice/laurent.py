"""Sparse multivariate Laurent polynomials with exact coefficients.

Representation
--------------
A polynomial carries an ordered tuple of variable names and a dict mapping
integer exponent tuples (one slot per variable, negative exponents allowed)
to nonzero coefficients:

    a^2*x1 - 3*x1^-2  ->  vars=("a", "x1"), terms={(2, 1): 1, (0, -2): -3}

Coefficients may be int, Fraction or Cyclo; within one polynomial they are
kept in a single ring.  Canonical form: no zero coefficients are stored,
variables that appear in no term are dropped, and the variable order is the
fixed global order below, so equality is plain structural equality.

Variable order: a, x1..xk, y1..yk, z, t, v, u1..uk, then anything else
alphabetically.  Serialization lists terms in descending graded
lexicographic order, which makes the JSON form a canonical fingerprint
(serialize -> parse -> serialize is the identity).
"""

from __future__ import annotations

import heapq
import json
import re
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .exactnum import Cyclo

Coeff = Union[int, Fraction, Cyclo]

_VAR_GROUP = {"a": 0, "x": 1, "y": 2, "z": 3, "t": 4, "v": 5, "u": 6}
_VAR_RE = re.compile(r"^([A-Za-z]+)(\d*)$")


class NotAMonomial(ValueError):
    """Raised when an operation requires a single-term polynomial."""


class NonInvertibleValue(ArithmeticError):
    """Raised when a negative exponent meets a value without an inverse."""


class NotDivisible(ArithmeticError):
    """Raised when exact division has a nonzero remainder."""


def _var_key(name: str):
    m = _VAR_RE.match(name)
    if m:
        stem, digits = m.group(1), m.group(2)
        group = _VAR_GROUP.get(stem)
        if group is not None and (digits or stem in ("a", "z", "t", "v")):
            return (group, int(digits) if digits else 0, name)
    return (7, 0, name)


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable-by-convention exact Laurent polynomial."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str] = (), terms: Mapping[tuple, Coeff] | None = None):
        clean = {e: c for e, c in (terms or {}).items() if c != 0}
        vs = tuple(vars)
        # Drop variables unused by every term, then sort canonically.
        if clean:
            used = [i for i in range(len(vs)) if any(e[i] for e in clean)]
        else:
            used = []
        if len(used) != len(vs):
            vs2 = tuple(vs[i] for i in used)
            clean = {tuple(e[i] for i in used): c for e, c in clean.items()}
            vs = vs2
        order = sorted(range(len(vs)), key=lambda i: _var_key(vs[i]))
        if order != list(range(len(vs))):
            vs = tuple(vs[i] for i in order)
            clean = {tuple(e[i] for i in order): c for e, c in clean.items()}
        self.vars = vs
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @staticmethod
    def zero() -> LaurentPoly:
        return LaurentPoly()

    @staticmethod
    def const(c: Coeff) -> LaurentPoly:
        return LaurentPoly((), {(): c} if c != 0 else {})

    @staticmethod
    def var(name: str) -> LaurentPoly:
        return LaurentPoly((name,), {(1,): 1})

    @staticmethod
    def monomial(coeff: Coeff, exps: Mapping[str, int]) -> LaurentPoly:
        names = tuple(exps.keys())
        return LaurentPoly(names, {tuple(exps[n] for n in names): coeff})

    # ------------------------------------------------------------------
    # structure helpers
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def constant_value(self) -> Coeff:
        """The value of a constant polynomial (zero or a single exponent-free term)."""
        if not self.terms:
            return 0
        if self.vars:
            raise NotAMonomial(f"not a constant: {self}")
        return self.terms[()]

    def _aligned(self, other: LaurentPoly):
        """Common variable tuple plus both term dicts re-keyed onto it."""
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        union = sorted(set(self.vars) | set(other.vars), key=_var_key)
        return tuple(union), _embed(self, union), _embed(other, union)

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def __add__(self, other: LaurentPoly | Coeff) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        vs, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(vs, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: LaurentPoly | Coeff) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: Coeff) -> LaurentPoly:
        return LaurentPoly.const(other) + (-self)

    def __mul__(self, other: LaurentPoly | Coeff) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        vs, a, b = self._aligned(other)
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                prev = out.get(e)
                if prev is None:
                    out[e] = c1 * c2
                else:
                    s = prev + c1 * c2
                    if s == 0:
                        del out[e]
                    else:
                        out[e] = s
        return LaurentPoly(vs, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_monomial():
                raise NotAMonomial("negative powers only for monomials")
            return self.monomial_inverse() ** (-n)
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Cyclo)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # ------------------------------------------------------------------
    # monomial utilities
    # ------------------------------------------------------------------

    def monomial_inverse(self) -> LaurentPoly:
        """m -> m^-1 for a single term whose coefficient is a unit."""
        if len(self.terms) != 1:
            raise NotAMonomial(f"expected one term, got {len(self.terms)}")
        (e, c), = self.terms.items()
        return LaurentPoly(self.vars, {tuple(-x for x in e): _unit_inverse(c)})

    # ------------------------------------------------------------------
    # evaluation and substitution
    # ------------------------------------------------------------------

    def evaluate(self, assignment: Mapping[str, Coeff]) -> Coeff:
        """Exact evaluation; a ring homomorphism for total assignments.

        Values standing at a negative exponent must be invertible: Fraction
        and Cyclo values are inverted exactly, plain ints only if +-1.
        """
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise KeyError(f"no value assigned for {missing}")
        powers: list[dict[int, Coeff]] = [{} for _ in self.vars]
        values = [assignment[v] for v in self.vars]
        total: Coeff = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k == 0:
                    continue
                cache = powers[i]
                if k not in cache:
                    cache[k] = _power(values[i], k, self.vars[i])
                term = term * cache[k]
            total = total + term
        return total

    def substitute(self, var: str, replacement: LaurentPoly) -> LaurentPoly:
        """Substitute a monomial (unit coefficient) for a variable.

        Handles self-referential rules such as x -> a*x or x -> x^-1; for a
        swap of two variables use `rename_vars`.
        """
        if var not in self.vars:
            return self
        if len(replacement.terms) != 1:
            raise NotAMonomial("substitution value must be one monomial")
        idx = self.vars.index(var)
        (rexp, rc), = replacement.terms.items()
        union = sorted(set(self.vars) | set(replacement.vars), key=_var_key)
        pos = {n: i for i, n in enumerate(union)}
        self_pos = [pos[n] for n in self.vars]
        rep_pos = [pos[n] for n in replacement.vars]
        out: dict = {}
        n = len(union)
        for e, c in self.terms.items():
            k = e[idx]
            acc = [0] * n
            for p, x in zip(self_pos, e):
                acc[p] += x
            acc[pos[var]] -= k
            for p, x in zip(rep_pos, rexp):
                acc[p] += k * x
            coeff = c if k == 0 or rc == 1 else c * _power(rc, k, var)
            key = tuple(acc)
            s = out.get(key, 0) + coeff
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return LaurentPoly(tuple(union), out)

    def substitute_poly(self, var: str, value: LaurentPoly) -> LaurentPoly:
        """Substitute an arbitrary polynomial for a variable occurring only
        with nonnegative exponents."""
        if var not in self.vars:
            return self
        idx = self.vars.index(var)
        rest = self.vars[:idx] + self.vars[idx + 1:]
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[idx]
            if k < 0:
                raise NonInvertibleValue(f"{var} occurs with negative exponent")
            buckets.setdefault(k, {})[e[:idx] + e[idx + 1:]] = c
        total = LaurentPoly.zero()
        for k, terms in buckets.items():
            total = total + LaurentPoly(rest, terms) * value ** k
        return total

    def rename_vars(self, mapping: Mapping[str, str]) -> LaurentPoly:
        """Simultaneously rename variables (may permute existing names)."""
        new_names = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new_names)) != len(new_names):
            raise ValueError("renaming collides two variables")
        return LaurentPoly(new_names, dict(self.terms))

    # ------------------------------------------------------------------
    # coefficient extraction and variable-wise transforms
    # ------------------------------------------------------------------

    def coeff_of(self, constraints: Mapping[str, int]) -> LaurentPoly:
        """Coefficient polynomial at fixed exponents for a subset of variables.

        Returns 0 when no term matches; constrained variables are removed
        from the result.
        """
        idxs = []
        for v, k in constraints.items():
            if v in self.vars:
                idxs.append((self.vars.index(v), k))
            elif k != 0:
                return LaurentPoly.zero()
        keep = [i for i in range(len(self.vars)) if i not in {i0 for i0, _ in idxs}]
        out = {}
        for e, c in self.terms.items():
            if all(e[i] == k for i, k in idxs):
                out[tuple(e[i] for i in keep)] = c
        return LaurentPoly(tuple(self.vars[i] for i in keep), out)

    def negate_var(self, var: str) -> LaurentPoly:
        """Multiply each term by (-1)^(exponent of var); no-op if absent."""
        if var not in self.vars:
            return self
        idx = self.vars.index(var)
        return LaurentPoly(
            self.vars,
            {e: (c if e[idx] % 2 == 0 else -c) for e, c in self.terms.items()},
        )

    def degree_in(self, var: str) -> int | None:
        """Maximal exponent of `var`, or None for the zero polynomial."""
        if not self.terms:
            return None
        if var not in self.vars:
            return 0
        idx = self.vars.index(var)
        return max(e[idx] for e in self.terms)

    def min_degree_in(self, var: str) -> int | None:
        if not self.terms:
            return None
        if var not in self.vars:
            return 0
        idx = self.vars.index(var)
        return min(e[idx] for e in self.terms)

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    # ------------------------------------------------------------------
    # exact division
    # ------------------------------------------------------------------

    def exact_div(self, den: LaurentPoly) -> LaurentPoly:
        """Exact quotient q with q*den == self, else NotDivisible.

        Both operands are shifted by their per-variable minimal exponents
        into the ordinary polynomial ring, where leading-term reduction
        under graded-lex order must terminate with zero remainder; the
        quotient is shifted back.
        """
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        vs, num_t, den_t = self._aligned(den)
        n = len(vs)
        num_shift = [min(e[i] for e in num_t) for i in range(n)]
        den_shift = [min(e[i] for e in den_t) for i in range(n)]
        num_t = {tuple(x - s for x, s in zip(e, num_shift)): c for e, c in num_t.items()}
        den_t = {tuple(x - s for x, s in zip(e, den_shift)): c for e, c in den_t.items()}
        quotient = _poly_exact_div(num_t, den_t)
        shift = tuple(a - b for a, b in zip(num_shift, den_shift))
        return LaurentPoly(vs, {tuple(x + s for x, s in zip(e, shift)): c
                                for e, c in quotient.items()})

    # ------------------------------------------------------------------
    # serialization
    # ------------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, Coeff]]:
        """Terms in descending graded-lex order (canonical)."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"exps": list(e), "coef": _coeff_to_json(c)}
                      for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @staticmethod
    def from_json_obj(obj: Mapping) -> LaurentPoly:
        vs = tuple(obj["vars"])
        terms = {tuple(t["exps"]): _coeff_from_json(t["coef"]) for t in obj["terms"]}
        return LaurentPoly(vs, terms)

    @staticmethod
    def from_json(text: str) -> LaurentPoly:
        return LaurentPoly.from_json_obj(json.loads(text))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [f"{v}^{k}" if k != 1 else v
                       for v, k in zip(self.vars, e) if k != 0]
            cs = str(c)
            if factors and cs == "1":
                body = "*".join(factors)
            elif factors and cs == "-1":
                body = "-" + "*".join(factors)
            else:
                if isinstance(c, Cyclo) and not c.is_rational:
                    cs = f"({cs})"
                body = "*".join([cs] + factors)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


# ----------------------------------------------------------------------
# module-level operations
# ----------------------------------------------------------------------


def sigma_of(m: LaurentPoly) -> LaurentPoly:
    """sigma(m) = m - m^-1 for a monomial with unit coefficient."""
    return m - m.monomial_inverse()


def _embed(p: LaurentPoly, union: Sequence[str]) -> dict:
    pos = {n: i for i, n in enumerate(union)}
    idx = [pos[v] for v in p.vars]
    n = len(union)
    out = {}
    for e, c in p.terms.items():
        acc = [0] * n
        for i, x in zip(idx, e):
            acc[i] = x
        out[tuple(acc)] = c
    return out


def _unit_inverse(c: Coeff) -> Coeff:
    if isinstance(c, int):
        if c in (1, -1):
            return c
        raise NonInvertibleValue(f"integer {c} is not a unit")
    if isinstance(c, Fraction):
        if c == 0:
            raise NonInvertibleValue("zero is not invertible")
        return 1 / c
    if isinstance(c, Cyclo):
        if not c:
            raise NonInvertibleValue("zero is not invertible")
        return c.inverse()
    raise NonInvertibleValue(f"cannot invert {c!r}")


def _power(value: Coeff, k: int, varname: str) -> Coeff:
    if k >= 0:
        return value ** k
    if isinstance(value, int):
        if value in (1, -1):
            return value ** (-k)
        raise NonInvertibleValue(
            f"value {value} for {varname} has no inverse in the integers")
    if value == 0 or (isinstance(value, Cyclo) and not value):
        raise NonInvertibleValue(f"zero value for {varname} at negative exponent")
    return value ** k  # Fraction and Cyclo support negative powers exactly


def _coeff_divide(c: Coeff, d: Coeff) -> Coeff:
    """c / d inside the coefficient ring; ints stay ints or fail."""
    if isinstance(c, int) and isinstance(d, int):
        q, r = divmod(c, d)
        if r:
            raise NotDivisible(f"coefficient {c} not divisible by {d}")
        return q
    return c / d


def _poly_exact_div(num: dict, den: dict) -> dict:
    """Leading-term reduction for ordinary (nonnegative-exponent) terms.

    For an exact quotient the graded-lex leading term of the running
    remainder is always divisible by the divisor's leading term, so a
    failed step proves NotDivisible.  A max-heap tracks candidate leading
    exponents; stale entries are skipped.
    """
    den_lead = max(den, key=_grlex_key)
    den_lc = den[den_lead]
    rem = dict(num)
    heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
    heapq.heapify(heap)
    quotient: dict = {}
    while rem:
        lead = None
        while heap:
            _, nege = heap[0]
            e = tuple(-x for x in nege)
            if e in rem:
                lead = e
                break
            heapq.heappop(heap)
        if lead is None:  # cannot happen: every live key has a heap entry
            raise AssertionError("division heap lost track of the remainder")
        diff = tuple(x - y for x, y in zip(lead, den_lead))
        if any(x < 0 for x in diff):
            raise NotDivisible("no exact quotient exists")
        c = _coeff_divide(rem[lead], den_lc)
        quotient[diff] = c
        for de, dc in den.items():
            ne = tuple(x + y for x, y in zip(diff, de))
            s = rem.get(ne, 0) - c * dc
            if s == 0:
                rem.pop(ne, None)
            else:
                if ne not in rem:
                    heapq.heappush(heap, (-sum(ne), tuple(-x for x in ne)))
                rem[ne] = s
    return quotient


def _coeff_to_json(c: Coeff):
    if isinstance(c, Cyclo):
        return {"p": _frac_str(c.p), "q": _frac_str(c.q)}
    if isinstance(c, Fraction):
        return _frac_str(c)
    return str(c)


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _coeff_from_json(obj) -> Coeff:
    if isinstance(obj, dict):
        return Cyclo(Fraction(obj["p"]), Fraction(obj["q"]))
    if "/" in obj:
        return Fraction(obj)
    return int(obj)
