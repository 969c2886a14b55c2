from corpus import algebra
from weakyd.exactlin import QQ
from weakyd.report import VerificationReport, associativity, compare
from weakyd.weakhopf import full_hopf_report


def test_json_round_trip_is_lossless():
    rep = full_hopf_report(algebra("pair2"))
    rep.add(compare("deliberate_failure", QQ.array([[1, "1/2"]]), QQ.array([[1, 0]]), 1))
    text = rep.to_json()
    back = VerificationReport.from_json(text)
    assert back.to_json() == text
    assert back["deliberate_failure"].witness == {"index": [0], "lhs": ["1", "1/2"],
                                                  "rhs": ["1", "0"]}


def test_sparse_associativity_agrees_with_dense_failure():
    m = QQ.zeros((2, 2, 2))
    m[0, 0, 0] = m[0, 1, 1] = m[1, 0, 1] = 1
    m[1, 1, 0] = 1
    assert associativity("assoc", m).passed  # k[x]/(x^2 - 1)
    m[1, 1, 1] = 1
    m[1, 0, 1] = 2
    ch = associativity("assoc", m)
    assert not ch.passed and len(ch.witness["index"]) == 3


def test_empty_comparison_passes():
    assert compare("empty", QQ.zeros((0, 3)), QQ.zeros((0, 3)), 1).passed
