import json

import pytest

import iwmod


def test_commands_listed():
    assert "coinv" in iwmod.commands()
    assert iwmod.__version__ == "0.1.0"


def test_coinvariant_order_of_s_and_s_minus_p():
    r = iwmod.coinvariant_order("zp:5", [([0, 1], 1), ([-5, 1], 1)])
    assert r["order"] == {"p": 5, "exponent": 1, "at_least": False}
    assert r["leading"]["index"] == 1
    assert r["leading"]["f_star"]["value"] == "-5"
    assert r["consistent"]


def test_pi_factor_and_char_series():
    r = iwmod.coinvariant_order("zp:3", [("pi", 2), ([3, 1], 1)])
    assert r["order"]["exponent"] == 3
    c = iwmod.char_series("zp:3", [[[3, 1], [0]], [[1], [-9, 0, 1]]])
    assert c["mu"] == 0
    assert c["lambda"] == 3
    assert c["coinvariant_order"]["order"]["exponent"] == 3


def test_nonsplit_dimension():
    assert iwmod.dim_coinvariants_nonsplit(1, 1, 1)["dimension"] == 1
    r = iwmod.dim_coinvariants_nonsplit(1, 2, 1, ring="zp:3", F=[9, 3, 1])
    assert r["dimension"] == 2
    assert r["direct"]["dimension"] == 2
    assert iwmod.dim_coinvariants_nonsplit(2, 2, 1)["bounds"] == [1, 3]


def test_lambda2_profile_and_embedding():
    r = iwmod.is_cyclic_lambda2(1, 1, 2, 1, 0, None, 1, 1)
    assert r["verdict"] == "cyclic"
    e = iwmod.classify_embedding("zp:3", 3, 12, 1, [[0, 1], [1, 0]])
    assert e["admissible"]
    assert e["agree"]
    assert e["oracle"]["status"] == "solvable"


def test_groups():
    b = iwmod.adapted_generators(3, [1, 2], [[1, 3]])
    assert b["quotient_exponent"] == 2
    assert all(b["checks"][k] for k in ("generators_span_G", "first_generates_quotient", "others_in_H"))
    k = iwmod.check_kerim(3, [2, 3], [[3, 0], [0, 3]], [[3, 0], [0, 3]])
    assert k["equal"]


def test_twovar():
    r = iwmod.twovar_char("zp:3", [[[0, 1], [-6, 0, 1]], [[1], [3, 2]]], t_order=8, fstar=[6, -3, 1])
    assert r["specialization_matches"]
    assert r["order_at_00"]["order"]["exponent"] == 1


def test_cross_validate_small():
    r = iwmod.cross_validate(primes=[3], max_ord=3, max_k=1, max_coord_ord=1)
    assert r["instances"] > 0
    assert r["disagreements"] == 0


def test_run_text_and_json_agree():
    text = "ring = zp:3\n[factor]\npoly = [0, 1]\n[factor]\npoly = [-3, 1]\n"
    doc = json.dumps({"ring": "zp:3", "factor": [{"poly": [0, 1]}, {"poly": [-3, 1]}]})
    a = iwmod.run("coinv", text)
    b = iwmod.run("coinv", doc)
    assert a["result"] == b["result"]
    assert a["text"][1] == "order 3 (3^1), f* = -3 at index 1"
    assert iwmod.run("coinv", text, precision=6)["precision"] == 6


def test_errors():
    with pytest.raises(iwmod.ParseError):
        iwmod.run("classify-nonsplit", "g = [1\n")
    with pytest.raises(iwmod.PreconditionError):
        iwmod.is_cyclic_lambda2(5, 1, 1, 1, 0, 0, 1, 1)
    with pytest.raises(ValueError):
        iwmod.check_kerim(3, [2, 2], [[3, 0], [0, 3]], [[3, 0]], variant="free")
