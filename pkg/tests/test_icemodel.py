"""Vertex weights, partition functions, the cofactor and the central split."""

import random
from fractions import Fraction

import pytest

from halfturn_ice.exactnum import Cyclo, ZETA
from halfturn_ice.icemodel import (
    ModelSpec, SizeTooLarge, fundamental_cells, modified_multiplier,
    modified_partition, partition_function, vertex_weight, z_ht2, z_split_odd)
from halfturn_ice.laurent import LaurentPoly, sigma_of

M = LaurentPoly.monomial
V = LaurentPoly.var


def test_vertex_weights_standard():
    s12 = vertex_weight(1, M(1, {"x1": 1, "y1": -1}))
    assert s12 == sigma_of(M(1, {"a": 2}))
    w3 = vertex_weight(3, M(1, {"x1": 1, "y2": -1}))
    assert w3 == sigma_of(M(1, {"a": 1, "x1": 1, "y2": -1}))
    w5 = vertex_weight(5, M(1, {"x1": 1, "y2": -1}))
    assert w5 == sigma_of(M(1, {"a": 1, "x1": -1, "y2": 1}))


def test_vertex_weights_modified():
    spec = M(1, {"x1": 1, "y2": -1})
    w5 = vertex_weight(5, spec, "modified")
    assert w5 == V("a") * M(1, {"y2": 2}) - M(1, {"a": -1, "x1": 2})
    w3 = vertex_weight(3, spec, "modified")
    assert w3 == V("a") * M(1, {"x1": 2}) - M(1, {"a": -1, "y2": 2})
    assert vertex_weight(2, spec, "modified") == sigma_of(M(1, {"a": 2}))


def test_partition_examples():
    z1 = partition_function(ModelSpec("dwbc", 1))
    assert z1.value == sigma_of(M(1, {"a": 2}))
    assert z1.state_count == 1

    ones3 = {"a": ZETA} | {f"x{i}": 1 for i in (1, 2, 3)} | {f"y{i}": 1 for i in (1, 2, 3)}
    z3 = partition_function(ModelSpec("dwbc", 3), ones3)
    assert z3.value == 567 * (2 * ZETA - 1)
    assert z3.state_count == 7

    ones_odd = {"a": ZETA, "x1": 1, "x2": 1, "y1": 1, "y2": 1}
    zht3 = partition_function(ModelSpec("ht-odd", 1), ones_odd)
    assert zht3.value == Cyclo.of(27)
    assert zht3.state_count == 3


def test_symbolic_matches_evaluated():
    rng = random.Random(11)
    for kind, size in (("dwbc", 2), ("dwbc", 3), ("ht-even", 2), ("ht-odd", 1)):
        spec = ModelSpec(kind, size)
        sym = partition_function(spec).value
        for _ in range(5):
            assign = {"a": Cyclo(Fraction(rng.randint(1, 9), rng.randint(1, 9)))}
            for xs in spec.spectral_vars():
                for v in xs:
                    assign[v] = Cyclo(Fraction(rng.randint(1, 9), rng.randint(1, 9)))
            assert sym.evaluate(assign) == partition_function(spec, assign).value


def test_fundamental_domain_shapes():
    assert len(fundamental_cells(ModelSpec("dwbc", 3))) == 9
    assert len(fundamental_cells(ModelSpec("ht-even", 2))) == 8
    assert len(fundamental_cells(ModelSpec("ht-odd", 2))) == 12
    assert fundamental_cells(ModelSpec("ht-odd", 0)) == ()


def test_empty_odd_model_is_one():
    res = partition_function(ModelSpec("ht-odd", 0))
    assert res.value == LaurentPoly.const(1)
    assert res.state_count == 1


def test_modified_partition_clears_negative_exponents():
    for kind, size in (("dwbc", 2), ("ht-even", 1), ("ht-odd", 1)):
        zt = modified_partition(ModelSpec(kind, size)).value
        for var in zt.vars:
            if var != "a":
                assert zt.min_degree_in(var) >= 0, (kind, size, var)


def test_modified_order_one_is_plain():
    assert modified_partition(ModelSpec("dwbc", 1)).value == sigma_of(M(1, {"a": 2}))


def test_modified_degrees():
    zt = modified_partition(ModelSpec("dwbc", 2)).value
    ia = zt.vars.index("a")
    assert {sum(e) - e[ia] for e in zt.terms} == {4}
    zt5 = modified_partition(ModelSpec("ht-odd", 1)).value
    ia = zt5.vars.index("a")
    assert {sum(e) - e[ia] for e in zt5.terms} == {6}


def test_z_ht2_small():
    q = z_ht2(1)
    want = sigma_of(V("a")) * (M(1, {"x1": 1, "y1": -1}) + M(1, {"x1": -1, "y1": 1}))
    assert q.value == want
    assert q.value.degree_in("y1") == 1
    ones = {"a": ZETA, "x1": 1, "y1": 1}
    assert q.value.evaluate(ones) == 2 * (2 * ZETA - 1)


def test_z_split_examples():
    plus, minus = z_split_odd(0, "direct")
    assert plus.value == LaurentPoly.const(1) and minus.value.is_zero()
    plus, minus = z_split_odd(1, "direct")
    assert (plus.state_count, minus.state_count) == (2, 1)
    pp, pm = z_split_odd(1, "parity")
    assert pp.value == plus.value and pm.value == minus.value
    assert pp.value + pm.value == partition_function(ModelSpec("ht-odd", 1)).value


def test_state_guard():
    with pytest.raises(SizeTooLarge):
        partition_function(ModelSpec("dwbc", 4), max_states=10)
    with pytest.raises(SizeTooLarge):
        z_ht2(2, max_states=3)


def test_guard_env_override(monkeypatch):
    monkeypatch.setenv("HALFTURN_ICE_MAX_STATES", "1")
    with pytest.raises(SizeTooLarge):
        partition_function(ModelSpec("dwbc", 2))
    monkeypatch.delenv("HALFTURN_ICE_MAX_STATES")
    assert partition_function(ModelSpec("dwbc", 2)).state_count == 2


def test_model_spec_validation():
    with pytest.raises(ValueError):
        ModelSpec("weird", 1)
    with pytest.raises(ValueError):
        ModelSpec("dwbc", 0)
    with pytest.raises(ValueError):
        ModelSpec("dwbc", 1, "fancy")


def test_multiplier_shapes():
    assert modified_multiplier(ModelSpec("dwbc", 3)) == M(
        1, {"x1": 2, "x2": 2, "x3": 2, "y1": 2, "y2": 2, "y3": 2})
    assert modified_multiplier(ModelSpec("ht-odd", 1)) == M(
        1, {"x1": 2, "y1": 2, "x2": 1, "y2": 1})


def test_partition_result_json():
    obj = partition_function(ModelSpec("dwbc", 1)).to_json_obj()
    assert obj["kind"] == "dwbc" and obj["stateCount"] == 1
    assert obj["value"]["vars"] == ["a"]


def test_state_sum_is_chunking_independent():
    from halfturn_ice.asm import to_state
    from halfturn_ice.icemodel import fundamental_cells
    from halfturn_ice.enum_asm import gen_asms
    spec = ModelSpec("ht-even", 2)
    full = partition_function(spec).value
    cells = fundamental_cells(spec)
    a = V("a")
    chunks = [LaurentPoly.zero(), LaurentPoly.zero()]
    for idx, m in enumerate(gen_asms(4, "ht")):
        st = to_state(m)
        w = LaurentPoly.const(1)
        for i, j, xv, yv in cells:
            w = w * vertex_weight(st[i, j], M(1, {xv: 1, yv: -1}))
        chunks[idx % 2] = chunks[idx % 2] + w
    assert chunks[0] + chunks[1] == full
