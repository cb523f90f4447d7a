import pytest

import ennil


def test_normalize_ring():
    assert ennil.normalize_ring("x1*x2 + x2*x1", 2) == ennil.normalize_ring(
        "2*x1*x2", 2
    )
    assert ennil.normalize_ring("w1*w1", 2) == "0"


def test_algebra_relation():
    # T1*x1 - x2*T1 = 1
    assert ennil.normalize_algebra("T1*x1 - x2*T1", 2) == "1"
    assert ennil.mul("T1", "T1", 2) == "0"


def test_epsilon_idempotent():
    e = ennil.epsilon(2)
    assert ennil.mul(e, e, 2) == e


def test_apply_dn():
    # d_2(w1) = x2^2 * w2
    assert ennil.apply("dn", "w1", 2) == ennil.normalize_ring("x2^2*w2", 2)
    # partials commute
    lhs = ennil.apply("partial:1", ennil.apply("partial:2", "x1^2*x2^2", 2), 2)
    rhs = ennil.apply("partial:2", ennil.apply("partial:1", "x1^2*x2^2", 2), 2)
    assert lhs == rhs


def test_k0_eval_roundtrip():
    s = ennil.k0_eval("q^2*l^-1*A3 + (q - q^-1)*A0", 5)
    assert ennil.k0_eval(s, 5) == s


def test_errors():
    with pytest.raises(ennil.ExprSyntaxError):
        ennil.normalize_ring("x1 +", 2)
    with pytest.raises(ennil.IndexOutOfRange):
        ennil.normalize_ring("x3", 2)
    with pytest.raises(ennil.ContextError):
        ennil.normalize_ring("T1", 2)


def test_relations_report():
    rep = ennil.relations(2, degree=6)
    assert rep["status"] == "pass"
    assert all(c["equal"] for c in rep["checks"])
    names = [c["name"] for c in rep["checks"]]
    assert names == sorted(names)


def test_nilpotency_report():
    assert ennil.nilpotency(3, 2)["status"] == "pass"


def test_uqsl2_and_iso():
    assert ennil.uqsl2(3, "K0")["status"] == "pass"
    assert ennil.uqsl2(3, "Verma")["status"] == "pass"
    assert ennil.iso(3)["status"] == "pass"
    assert ennil.e_class(2, 3)["status"] == "pass"


def test_filtration_small():
    assert ennil.filtration(2, 1, degree=6)["status"] == "pass"


def test_pcomplex_blocks():
    desc = {
        "p": 3,
        "field": "Fp",
        "pieces": [
            {"q": 0, "lambda": 0, "parity": 0, "dim": 1},
            {"q": 2, "lambda": 0, "parity": 0, "dim": 1},
            {"q": 4, "lambda": 0, "parity": 0, "dim": 1},
        ],
        "maps": [
            {"from": {"q": 0, "lambda": 0, "parity": 0}, "matrix": [[1]]},
            {"from": {"q": 2, "lambda": 0, "parity": 0}, "matrix": [[1]]},
        ],
    }
    rep = ennil.pcomplex_blocks(desc)
    assert rep["status"] == "pass"
    # a single size-p block is contractible: zero K0 symbol
    k0 = [c for c in rep["checks"] if c["name"] == "k0_symbol"]
    assert k0 and k0[0]["lhs"] == "0"
