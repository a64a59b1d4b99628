"""Laurent polynomial ring: canonical form, arithmetic, division, JSON."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from halfturn_ice.exactnum import Cyclo, ZETA
from halfturn_ice.laurent import (
    LaurentPoly, NonInvertibleValue, NotAMonomial, NotDivisible, sigma_of)

M = LaurentPoly.monomial
V = LaurentPoly.var


def poly_strategy(var_names=("a", "x1", "y1"), max_terms=4, span=3):
    exps = st.tuples(*[st.integers(-span, span)] * len(var_names))
    coeffs = st.integers(-9, 9).filter(lambda c: c != 0)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(
        lambda terms: LaurentPoly(var_names, terms))


def test_sigma_expansion():
    x = V("X")
    p = sigma_of(x)
    assert p * p == x ** 2 - 2 + M(1, {"X": -2})


def test_additive_inverse_is_empty():
    p = M(3, {"a": 2, "x1": -1})
    z = p + (-p)
    assert z.is_zero()
    assert z.vars == ()
    assert z.terms == {}


def test_four_term_expansion():
    # (a*X - Y/a)(a*Y - X/a) = a^2*X*Y - X^2 - Y^2 + X*Y/a^2
    a, x, y = V("a"), V("X"), V("Y")
    lhs = (a * x - M(1, {"a": -1}) * y) * (a * y - M(1, {"a": -1}) * x)
    want = (M(1, {"a": 2, "X": 1, "Y": 1}) - x ** 2 - y ** 2
            + M(1, {"a": -2, "X": 1, "Y": 1}))
    assert lhs == want


def test_sigma_of_examples():
    assert sigma_of(M(1, {"a": 2})) == M(1, {"a": 2}) - M(1, {"a": -2})
    s = sigma_of(M(1, {"a": 1, "x1": 1, "y1": -1}))
    assert s == M(1, {"a": 1, "x1": 1, "y1": -1}) - M(1, {"a": -1, "x1": -1, "y1": 1})
    assert sigma_of(LaurentPoly.const(1)).is_zero()
    with pytest.raises(NotAMonomial):
        sigma_of(V("a") + 1)


def test_evaluate():
    p = sigma_of(M(1, {"a": 2}))
    assert p.evaluate({"a": ZETA}) == 2 * ZETA - 1
    q = V("X") ** 2 - 2 + M(1, {"X": -2})
    assert q.evaluate({"X": 1}) == 0
    # sigma(a*x)*sigma(a/x) at a=zeta, x=1 is sigma(zeta)^2 = -3
    prod = sigma_of(M(1, {"a": 1, "x1": 1})) * sigma_of(M(1, {"a": 1, "x1": -1}))
    assert prod.evaluate({"a": ZETA, "x1": Cyclo(1)}) == -3


def test_evaluate_rejects_non_units_at_negative_exponents():
    p = M(1, {"X": -1})
    with pytest.raises(NonInvertibleValue):
        p.evaluate({"X": 2})
    assert p.evaluate({"X": Fraction(2)}) == Fraction(1, 2)


def test_exact_div():
    x = V("X")
    num = sigma_of(M(1, {"X": 2}))
    den = sigma_of(x)
    assert num.exact_div(den) == x + M(1, {"X": -1})
    with pytest.raises(NotDivisible):
        (x + 1).exact_div(x - 1)
    with pytest.raises(ZeroDivisionError):
        x.exact_div(LaurentPoly.zero())
    assert LaurentPoly.zero().exact_div(den).is_zero()


def test_coeff_extraction():
    p = V("a") * V("x1") ** 2 + V("b") * V("x1")
    assert p.coeff_of({"x1": 2}) == V("a")
    assert p.coeff_of({"x1": 5}).is_zero()
    assert p.coeff_of({"zz": 3}).is_zero()


def test_negate_var():
    even = sigma_of(M(1, {"a": 2}))
    assert even.negate_var("a") == even
    odd = sigma_of(V("a"))
    assert odd.negate_var("a") == -odd
    p = V("a") ** 3 + V("a") + 7
    assert p.negate_var("a").negate_var("a") == p
    assert p.negate_var("missing") == p


def test_substitute_monomial():
    p = V("y1") ** 2 + V("x1")
    q = p.substitute("y1", M(1, {"a": 1, "x1": 1}))
    assert q == M(1, {"a": 2, "x1": 2}) + V("x1")
    inv = p.substitute("y1", M(1, {"y1": -1}))
    assert inv == M(1, {"y1": -2}) + V("x1")


def test_rename_swap():
    p = V("x1") ** 2 * V("x2") + V("x2") ** 3
    q = p.rename_vars({"x1": "x2", "x2": "x1"})
    assert q == V("x2") ** 2 * V("x1") + V("x1") ** 3
    with pytest.raises(ValueError):
        p.rename_vars({"x1": "x2"})


def test_json_round_trip_is_canonical():
    p = (sigma_of(M(1, {"a": 2})) * V("x1") + 3) * (V("y1") - M(1, {"y1": -1}))
    blob = p.to_json()
    again = LaurentPoly.from_json(blob)
    assert again == p
    assert again.to_json() == blob


def test_json_fraction_and_cyclo_coefficients():
    p = LaurentPoly(("a",), {(1,): Fraction(3, 4), (0,): Cyclo(1, Fraction(-2, 5))})
    blob = p.to_json()
    assert LaurentPoly.from_json(blob).to_json() == blob


@settings(max_examples=500, deadline=None)
@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@settings(max_examples=200, deadline=None)
@given(poly_strategy(max_terms=3), poly_strategy(max_terms=3))
def test_evaluation_is_a_homomorphism(p, q):
    at = {"a": Fraction(3, 2), "x1": Fraction(-5, 3), "y1": Fraction(7, 4)}
    assert (p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at)
    assert (p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at)


@settings(max_examples=300, deadline=None)
@given(poly_strategy(), poly_strategy().filter(lambda q: not q.is_zero()))
def test_exact_division_round_trip(p, q):
    assert (p * q).exact_div(q) == p


@settings(max_examples=200, deadline=None)
@given(poly_strategy(max_terms=3))
def test_substitution_commutes_with_evaluation(p):
    mono = M(1, {"a": 1, "x1": 2})  # rule y1 -> a*x1^2
    q = p.substitute("y1", mono)
    at = {"a": Fraction(2, 3), "x1": Fraction(5, 7), "y1": Fraction(1)}
    composed = dict(at, y1=mono.evaluate(at))
    assert q.evaluate(at) == p.evaluate(composed)


@settings(max_examples=200, deadline=None)
@given(poly_strategy())
def test_coefficient_slices_reconstruct(p):
    idx = p.vars.index("x1") if "x1" in p.vars else None
    exps = {e[idx] for e in p.terms} if idx is not None else {0}
    total = LaurentPoly.zero()
    for k in exps:
        total = total + p.coeff_of({"x1": k}) * M(1, {"x1": k})
    assert total == p
