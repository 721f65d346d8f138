import pytest

import cyclic_weights as cw


def digits(ws):
    return [tuple(w.digits) for w in ws]


def test_worked_chain():
    c = cw.build_chain(cw.Params(5, 2), [1, 1], 0)
    assert c.l == 4
    assert c.e_values == [0, 10, 11, 21, 24]
    assert digits(c.sigmas[1:]) == [(0, 2), (3, 1), (2, 2), (1, 1)]
    assert [w.twist for w in c.sigmas] == [0, 10, 11, 21, 0]


def test_mu_power_routes_agree():
    p = cw.Params(7, 3)
    assert cw.mu_power(p, 2) == [(-1, 6), (1, 1), (-1, 5)]
    for s in range(3):
        for k in range(4):
            assert cw.mu_power(p, k, s) == cw.mu_power_by_composition(p, k, s)


def test_weight_round_trips():
    p = cw.Params(5, 2)
    w = cw.make_weight([0, 2], 10, p)
    assert cw.weight_from_char(cw.chi(w)) == w
    assert cw.s_dual(cw.s_dual(w)) == w
    assert cw.chi(cw.s_dual(w)) == cw.s_conjugate(cw.chi(w))
    assert repr(w) == "(0,2)⊗det^10"
    assert len({w, cw.make_weight([0, 2], 10, p)}) == 1


def test_gr1_and_module():
    p = cw.Params(5, 2)
    assert digits(cw.gr1_weights(cw.make_weight([1, 1], 0, p))) == [(0, 2), (2, 0)]
    mod = cw.build_cyclic_module(cw.build_chain(p, [1, 1]))
    v = cw.validate_cyclic_module(mod)
    assert v["ok"] and not v["failures"]
    assert cw.is_multiplicity_free(mod)
    assert len(cw.jh_factors(mod)) == 8
    assert len(cw.u_invariant_characters(mod)) == 8


def test_diagram_classification():
    mod = cw.build_cyclic_module(cw.build_chain(cw.Params(5, 2), [1, 1]))
    t = [[2], [3], [4], [2]]
    assert cw.t_invariant(mod, t) == [3]
    c = cw.classify_isomorphic(mod, t, [[1], [1], [1], [3]])
    assert c["isomorphic"]
    assert c["witness"] == [[1], [3], [1], [4]]
    assert not cw.classify_isomorphic(mod, t, [[1], [1], [1], [1]])["isomorphic"]


def test_reports():
    rep = cw.verify_mu_lemma(cw.Params(5, 3), workers=2)
    assert rep["command"] == "verify-lemma"
    assert rep["e_l_value"] == 124
    cyc = cw.find_cycles(cw.make_weight([1, 1], 0, cw.Params(5, 2)), 4)
    assert len(cyc["cycles"]) == 2


def test_errors():
    with pytest.raises(ValueError):
        cw.Params(3, 2)
    with pytest.raises(ValueError):
        cw.build_chain(cw.Params(5, 2), [0, 1])
    with pytest.raises(ValueError):
        cw.build_chain(cw.Params(5, 1), [1])


def test_cli():
    code, out, _ = cw.run_cli(["example", "--f", "2", "--symbolic"])
    assert code == 0
    assert out.splitlines()[0] == "(r0-1,p-2-r1) —— (p-1-r0,p-1-r1)"
    assert cw.run_cli(["chain", "--p", "4", "--f", "2", "--r", "1,1"])[0] == 2
