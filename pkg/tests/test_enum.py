"""Generators, inversion generating functions and censuses."""

import pytest

from halfturn_ice.enum_asm import (
    census, gen_asms, ht_permutations, inversion_genfunc)
from halfturn_ice.laurent import LaurentPoly


def zpoly(*coeffs):
    return LaurentPoly(("z",), {(i,): c for i, c in enumerate(coeffs) if c})


def test_gen_counts():
    assert [sum(1 for _ in gen_asms(n)) for n in range(1, 7)] == [1, 2, 7, 42, 429, 7436]
    assert [sum(1 for _ in gen_asms(n, "ht")) for n in range(1, 8)] == [1, 2, 3, 10, 25, 140, 588]


def test_gen_unique_and_valid():
    for n, klass in ((4, "all"), (5, "ht")):
        seen = set()
        for m in gen_asms(n, klass):
            assert m.entries not in seen
            seen.add(m.entries)


def test_gen_order_deterministic_and_lex():
    runs = [list(gen_asms(4, "all")), list(gen_asms(4, "all"))]
    assert runs[0] == runs[1]
    flat = [tuple(x for row in m.entries for x in row) for m in runs[0]]
    assert flat == sorted(flat)


def test_ht_stream_is_filter_of_full_stream():
    from halfturn_ice.asm import is_half_turn_symmetric
    for n in range(1, 6):
        direct = list(gen_asms(n, "ht"))
        filtered = [m for m in gen_asms(n) if is_half_turn_symmetric(m)]
        assert direct == filtered


def test_genfunc_examples():
    assert inversion_genfunc(3, "all", "closed") == zpoly(1, 2, 2, 1)
    assert inversion_genfunc(3, "ht", "closed") == zpoly(1, 0, 0, 1)
    assert inversion_genfunc(2, "ht", "closed") == zpoly(1, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_genfunc_brute_equals_closed_all(n):
    assert inversion_genfunc(n, "all", "brute") == inversion_genfunc(n, "all", "closed")


@pytest.mark.parametrize("n", range(1, 9))
def test_genfunc_brute_equals_closed_ht(n):
    assert inversion_genfunc(n, "ht", "brute") == inversion_genfunc(n, "ht", "closed")


def test_ht_permutation_condition():
    for s in ht_permutations(4):
        n = len(s)
        assert all(s[n - 1 - i] == n + 1 - s[i] for i in range(n))
    assert sum(1 for _ in ht_permutations(7)) == 48


def test_census_order3_all():
    tab = census(3, "all")
    rows = {r: str(p) for (r, _), p in tab.rows.items()}
    assert rows == {1: "2", 2: "x + 2", 3: "2"}
    assert tab.total_count() == 7
    one = LaurentPoly.const(1)
    assert tab.total_poly().substitute_poly("x", one).constant_value() == 7


def test_census_order3_ht_split():
    tab = census(3, "ht")
    plus, minus = tab.split_by_center()
    t = LaurentPoly.var("t")
    assert plus == 1 + t ** 2
    assert minus == t
    g = tab.genfunc()
    assert g == 1 + LaurentPoly.monomial(1, {"sqrtx": 1, "t": 1}) + t ** 2


def test_census_order2_ht():
    tab = census(2, "ht")
    assert tab.genfunc() == 1 + LaurentPoly.var("t")


def test_census_exports():
    tab = census(3, "ht")
    csv = tab.to_csv()
    assert csv.splitlines()[0] == "r,central,terms"
    assert len(csv.splitlines()) == 4
    obj = tab.to_json_obj()
    assert obj["count"] == 3 and obj["class"] == "ht"
    assert len(obj["rows"]) == 3


def test_bad_inputs():
    with pytest.raises(ValueError):
        list(gen_asms(0))
    with pytest.raises(ValueError):
        list(gen_asms(2, "diagonal"))
    with pytest.raises(ValueError):
        inversion_genfunc(2, "all", "guess")


def test_census_is_a_chunked_reduction():
    # Partitioning the stream and merging partial tables must reproduce the
    # full census (the reduction is associative and commutative).
    full = census(4, "all")
    matrices = list(gen_asms(4, "all"))
    from halfturn_ice.asm import stats
    halves = [matrices[:20], matrices[20:]]
    merged: dict = {}
    for chunk in halves:
        for m in chunk:
            st = stats(m)
            key = (st.first_column_one_pos, None)
            mono = LaurentPoly(("x",), {(st.minus_ones,): 1})
            merged[key] = merged.get(key, LaurentPoly.zero()) + mono
    assert merged == full.rows
