"""Vertex weights and exact square-ice partition functions for three
boundary shapes: domain-wall, half-turn even and half-turn odd.

Weights (parameter a, vertex spectral parameter s = rowvar * colvar^-1):

    types 1/2 -> sigma(a^2)      types 3/4 -> sigma(a*s)     types 5/6 -> sigma(a/s)

with sigma(u) = u - 1/u.  The modified normalization multiplies each
0-entry weight by rowvar*colvar, turning sigma(a*s) into
a*rowvar^2 - a^-1*colvar^2 and clearing all negative spectral exponents.

Half-turn states are represented as full six-vertex states of the ASM of
order 2m or 2m+1; only fundamental-domain vertices are weighted:

* even order 2m: columns 1..m over all 2m rows; row parameters read
  x1..xm then xm..x1 top to bottom, column parameters y1..ym.
* odd order 2m+1: columns 1..m over all 2m+1 rows with row parameters
  x1..xm, x(m+1), xm..x1, plus column m+1 over rows m+2..2m+1 whose line
  parameter is y(m+1) after the central turn.  The turning point (the
  central cell) carries weight 1.

Symbolic sums are Laurent polynomials over the integers in a and the
spectral variables; evaluated sums work directly in Q(zeta) or Q.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional, Union

from .asm import Asm, to_state
from .enum_asm import gen_asms
from .exactnum import Cyclo
from .laurent import Coeff, LaurentPoly, NotAMonomial, sigma_of

DEFAULT_MAX_STATES = 10_000_000
_MAX_STATES_ENV = "HALFTURN_ICE_MAX_STATES"

KINDS = ("dwbc", "ht-even", "ht-odd")


class SizeTooLarge(ValueError):
    """State count exceeds the configured guard."""


@dataclass(frozen=True)
class ModelSpec:
    """Which boundary shape, at which size (n for dwbc, m for ht kinds)."""

    kind: str
    size: int
    normalization: str = "standard"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.normalization not in ("standard", "modified"):
            raise ValueError(f"unknown normalization {self.normalization!r}")
        if self.size < 0 or (self.size == 0 and self.kind != "ht-odd"):
            raise ValueError("size parameter out of range")

    @property
    def order(self) -> int:
        if self.kind == "dwbc":
            return self.size
        if self.kind == "ht-even":
            return 2 * self.size
        return 2 * self.size + 1

    @property
    def x_count(self) -> int:
        return self.size if self.kind != "ht-odd" else self.size + 1

    def spectral_vars(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        k = self.x_count
        return (tuple(f"x{i}" for i in range(1, k + 1)),
                tuple(f"y{i}" for i in range(1, k + 1)))


@dataclass(frozen=True)
class PartitionResult:
    value: Union[LaurentPoly, Coeff]
    model: ModelSpec
    state_count: int

    def to_json_obj(self) -> dict:
        val = (self.value.to_json_obj() if isinstance(self.value, LaurentPoly)
               else str(self.value))
        return {
            "kind": self.model.kind,
            "sizeParam": self.model.size,
            "normalization": self.model.normalization,
            "stateCount": self.state_count,
            "value": val,
        }


def fundamental_cells(spec: ModelSpec) -> tuple[tuple[int, int, str, str], ...]:
    """(i, j, row variable, column variable) of every weighted vertex."""
    cells = []
    if spec.kind == "dwbc":
        n = spec.size
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                cells.append((i, j, f"x{i}", f"y{j}"))
    elif spec.kind == "ht-even":
        m = spec.size
        for i in range(1, 2 * m + 1):
            xv = f"x{min(i, 2 * m + 1 - i)}"
            for j in range(1, m + 1):
                cells.append((i, j, xv, f"y{j}"))
    else:
        m = spec.size
        for i in range(1, 2 * m + 2):
            xv = f"x{min(i, 2 * m + 2 - i)}"
            for j in range(1, m + 1):
                cells.append((i, j, xv, f"y{j}"))
        for i in range(m + 2, 2 * m + 2):
            cells.append((i, m + 1, f"x{2 * m + 2 - i}", f"y{m + 1}"))
    return tuple(cells)


# Weight class per vertex type: 0 -> sigma(a^2), 1 -> sigma(a*s), 2 -> sigma(a/s).
_WEIGHT_CLASS = {1: 0, 2: 0, 3: 1, 4: 1, 5: 2, 6: 2}


def vertex_weight(vertex_type: int, spectral: LaurentPoly,
                  normalization: str = "standard") -> LaurentPoly:
    """Weight of one vertex given its spectral-parameter monomial."""
    if vertex_type not in _WEIGHT_CLASS:
        raise ValueError(f"vertex type must be 1..6, got {vertex_type}")
    cls = _WEIGHT_CLASS[vertex_type]
    if cls == 0:
        return sigma_of(LaurentPoly.monomial(1, {"a": 2}))
    if not spectral.is_monomial():
        raise NotAMonomial("spectral parameter must be one monomial")
    a = LaurentPoly.var("a")
    s = spectral if cls == 1 else spectral.monomial_inverse()
    w = sigma_of(a * s)
    if normalization == "modified":
        (e, _), = spectral.terms.items()
        w = w * LaurentPoly(spectral.vars, {tuple(abs(k) for k in e): 1})
    return w


def _max_states(override: Optional[int]) -> int:
    if override is not None:
        return override
    env = os.environ.get(_MAX_STATES_ENV)
    return int(env) if env else DEFAULT_MAX_STATES


def _expected_states(spec: ModelSpec) -> int:
    from . import formulas  # deferred: formulas has no icemodel dependency

    if spec.kind == "dwbc":
        return formulas.count_closed("asm", spec.order)
    return formulas.count_closed("ht-even" if spec.kind == "ht-even" else "ht-odd",
                                 spec.order)


@lru_cache(maxsize=None)
def _state_profiles(kind: str, size: int):
    """Per state: weight-class code of every fundamental cell, plus the
    central entry for odd half-turn models.  Cached; order matches the
    deterministic generator stream."""
    spec = ModelSpec(kind, size)
    cells = fundamental_cells(spec)
    klass = "all" if kind == "dwbc" else "ht"
    profiles = []
    for m in gen_asms(spec.order, klass) if spec.order >= 1 else ():
        st = to_state(m)
        codes = tuple(_WEIGHT_CLASS[st[i, j]] for i, j, _, _ in cells)
        central = m[(spec.order + 1) // 2, (spec.order + 1) // 2] if spec.order % 2 else 0
        profiles.append((codes, central))
    return cells, tuple(profiles)


@lru_cache(maxsize=None)
def _symbolic_value(kind: str, size: int) -> tuple[LaurentPoly, int]:
    cells, profiles = _state_profiles(kind, size)
    one = LaurentPoly.const(1)
    if not profiles:
        return one, 1  # empty fundamental domain: single state of weight 1
    a = LaurentPoly.var("a")
    sig_a2 = sigma_of(LaurentPoly.monomial(1, {"a": 2}))
    cell_weights = []
    for _, _, xv, yv in cells:
        s = LaurentPoly.monomial(1, {xv: 1, yv: -1})
        cell_weights.append((sig_a2, sigma_of(a * s), sigma_of(a * s.monomial_inverse())))
    total = LaurentPoly.zero()
    for codes, _ in profiles:
        w = one
        for cw, code in zip(cell_weights, codes):
            w = w * cw[code]
        total = total + w
    return total, len(profiles)


def partition_function(spec: ModelSpec,
                       assignment: Optional[Mapping[str, Coeff]] = None,
                       max_states: Optional[int] = None) -> PartitionResult:
    """Exact state sum: symbolic Laurent polynomial, or a field value when
    an assignment for a and all spectral variables is given."""
    expected = _expected_states(spec)
    if expected > _max_states(max_states):
        raise SizeTooLarge(
            f"{expected} states exceeds the guard {_max_states(max_states)}")
    if assignment is None:
        value, count = _symbolic_value(spec.kind, spec.size)
        return PartitionResult(value, spec, count)
    cells, profiles = _state_profiles(spec.kind, spec.size)
    if not profiles:
        return PartitionResult(Cyclo.of(1), spec, 1)
    a = Cyclo.of(assignment["a"])
    sig_a2 = a * a - (a * a).inverse()
    tables = []
    for _, _, xv, yv in cells:
        s = Cyclo.of(assignment[xv]) * Cyclo.of(assignment[yv]).inverse()
        tables.append((sig_a2, a * s - (a * s).inverse(), a / s - s / a))
    total = Cyclo.of(0)
    for codes, _ in profiles:
        w = Cyclo.of(1)
        for tab, code in zip(tables, codes):
            w = w * tab[code]
        total = total + w
    return PartitionResult(total, spec, len(profiles))


def modified_multiplier(spec: ModelSpec) -> LaurentPoly:
    """Monomial clearing all negative spectral exponents of the state sum."""
    exps: dict[str, int] = {}
    if spec.kind == "dwbc":
        n = spec.size
        for i in range(1, n + 1):
            exps[f"x{i}"] = n - 1
            exps[f"y{i}"] = n - 1
    elif spec.kind == "ht-even":
        m = spec.size
        for i in range(1, m + 1):
            exps[f"x{i}"] = 2 * m - 1
            exps[f"y{i}"] = 2 * m - 1
    else:
        m = spec.size
        for i in range(1, m + 1):
            exps[f"x{i}"] = 2 * m
            exps[f"y{i}"] = 2 * m
        exps[f"x{m + 1}"] = m
        exps[f"y{m + 1}"] = m
    return LaurentPoly.monomial(1, exps)


def modified_partition(spec: ModelSpec,
                       max_states: Optional[int] = None) -> PartitionResult:
    """The state sum times the clearing monomial: an ordinary polynomial."""
    base = partition_function(ModelSpec(spec.kind, spec.size), None, max_states)
    mod_spec = ModelSpec(spec.kind, spec.size, "modified")
    return PartitionResult(base.value * modified_multiplier(spec), mod_spec,
                           base.state_count)


@lru_cache(maxsize=None)
def _z_ht2_value(m: int) -> tuple[LaurentPoly, int]:
    zht, count = _symbolic_value("ht-even", m)
    z, _ = _symbolic_value("dwbc", m)
    return zht.exact_div(z), count


def z_ht2(m: int, max_states: Optional[int] = None) -> PartitionResult:
    """The half-turn cofactor: Z_HT(2m) / Z(m), an exact Laurent quotient.

    NotDivisible coming out of here would mean the weight conventions have
    drifted; the factorization is exact by construction of the models.
    """
    spec = ModelSpec("ht-even", m)
    expected = _expected_states(spec)
    if expected > _max_states(max_states):
        raise SizeTooLarge(f"{expected} states exceeds the guard")
    value, count = _z_ht2_value(m)
    return PartitionResult(value, spec, count)


def modified_z_ht2(m: int) -> LaurentPoly:
    """Cofactor of the modified functions: multiply by prod (x_i y_i)^m."""
    exps = {}
    for i in range(1, m + 1):
        exps[f"x{i}"] = m
        exps[f"y{i}"] = m
    return z_ht2(m).value * LaurentPoly.monomial(1, exps)


def _half_int_poly(p: LaurentPoly) -> LaurentPoly:
    out = {}
    for e, c in p.terms.items():
        if c % 2:
            raise ValueError("polynomial is not divisible by 2")
        out[e] = c // 2
    return LaurentPoly(p.vars, out)


def z_split_odd(m: int, method: str = "parity",
                max_states: Optional[int] = None) -> tuple[PartitionResult, PartitionResult]:
    """Split Z_HT(2m+1) by the central entry of the underlying matrices.

    parity: half-sums of the state sum and its image under a -> -a, using
    that the plus part carries (-1)^m and the minus part (-1)^(m+1).
    direct: separate accumulation over the two groups of states.
    Both must agree exactly.
    """
    spec = ModelSpec("ht-odd", m)
    expected = _expected_states(spec)
    if expected > _max_states(max_states):
        raise SizeTooLarge(f"{expected} states exceeds the guard")
    if method == "parity":
        z, count = _symbolic_value("ht-odd", m)
        flipped = z.negate_var("a")
        if m % 2:
            flipped = -flipped
        plus = _half_int_poly(z + flipped)
        minus = _half_int_poly(z - flipped)
        return (PartitionResult(plus, spec, count),
                PartitionResult(minus, spec, count))
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    cells, profiles = _state_profiles("ht-odd", m)
    a = LaurentPoly.var("a")
    sig_a2 = sigma_of(LaurentPoly.monomial(1, {"a": 2}))
    cell_weights = []
    for _, _, xv, yv in cells:
        s = LaurentPoly.monomial(1, {xv: 1, yv: -1})
        cell_weights.append((sig_a2, sigma_of(a * s), sigma_of(a * s.monomial_inverse())))
    sums = {1: LaurentPoly.zero(), -1: LaurentPoly.zero()}
    counts = {1: 0, -1: 0}
    for codes, central in profiles:
        w = LaurentPoly.const(1)
        for cw, code in zip(cell_weights, codes):
            w = w * cw[code]
        sums[central] = sums[central] + w
        counts[central] += 1
    if not profiles:  # m == 0: the single matrix [[1]] has central entry 1
        sums[1] = LaurentPoly.const(1)
        counts[1] = 1
    return (PartitionResult(sums[1], spec, counts[1]),
            PartitionResult(sums[-1], spec, counts[-1]))


def fundamental_type_counts(m_asm: Asm, spec: ModelSpec) -> tuple[int, ...]:
    """How many fundamental-domain vertices have each type 1..6."""
    st = to_state(m_asm)
    counts = [0] * 7
    for i, j, _, _ in fundamental_cells(spec):
        counts[st[i, j]] += 1
    return tuple(counts[1:])
