import pytest

from corpus import algebra
from weakyd.double import double_R_map
from weakyd.entwining import (DatumError, DoiHopfDatum, PreunitalAlgebra, WeakEntwining,
                              WeakSmashStructure, canonical_psi, canonical_yd_datum,
                              doihopf_to_entwining, dual_algebra, entwined_module_check,
                              op_tensor, preunit_quotient, smash_from_entwining, smash_product,
                              verify_doihopf, verify_preunital, verify_smash_structure,
                              verify_weak_entwining)
from weakyd.exactlin import QQ, equal, rank
from weakyd.weakhopf import full_hopf_report
from weakyd.yetterdrinfeld import regular_lr_yd, unit_yd, yd_convert


@pytest.mark.parametrize("name", ["z2", "disc2", "pair2", "z3"])
def test_canonical_datum_gives_the_closed_form_entwining(name):
    H = algebra(name)
    D = canonical_yd_datum(H)
    assert verify_doihopf(D).passed
    E = doihopf_to_entwining(D)
    assert equal(E.psi, canonical_psi(H))
    assert verify_weak_entwining(E).passed
    assert verify_smash_structure(smash_from_entwining(E)).passed


def test_op_tensor_is_weak_hopf():
    assert full_hopf_report(op_tensor(algebra("disc2"))).passed


def test_corrupted_entwining_detected():
    H = algebra("pair2")
    psi = canonical_psi(H).copy()
    psi[0, 0, 0, 0] += 1
    rep = verify_weak_entwining(WeakEntwining(H.alg, H.coalg, psi))
    assert not rep.passed
    assert rep["entwining_comultiplication"].witness["index"][:2] == [0, 0]


def test_broken_datum_raises():
    H = algebra("disc2")
    D = canonical_yd_datum(H)
    rho = D.coaction.copy()
    rho[0, 0, 0] += 1
    bad = DoiHopfDatum(D.H, D.A, rho, D.C, D.action)
    with pytest.raises(DatumError):
        doihopf_to_entwining(bad)


@pytest.mark.parametrize("name", ["disc2", "pair2"])
def test_lr_yd_modules_are_entwined_modules(name):
    H = algebra(name)
    E = doihopf_to_entwining(canonical_yd_datum(H))
    for M in (regular_lr_yd(H), yd_convert(unit_yd(H), "lr")):
        assert entwined_module_check(E, M.action, M.coaction).passed


def test_unital_algebra_quotient_is_trivial():
    H = algebra("z3")
    P = PreunitalAlgebra(H.dim, H.m, H.u, QQ)
    assert verify_preunital(P).passed
    A, proj, inc, rep = preunit_quotient(P)
    assert rep.passed and A.dim == H.dim
    assert equal(proj @ inc, QQ.eye(H.dim))


def test_double_smash_quotient_dimension():
    H = algebra("pair2")
    S = WeakSmashStructure(H.alg, dual_algebra(H.coalg), double_R_map(H))
    P = smash_product(S)
    assert verify_preunital(P).passed
    A, proj, inc, rep = preunit_quotient(P)
    assert rep.passed
    assert A.dim == rank(P.p, QQ) == 4
