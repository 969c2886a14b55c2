import pytest

from corpus import ALL, algebra, groupoid
from weakyd.exactlin import QQ, PrimeField, equal
from weakyd.weakbialg import AlgebraData, CoalgebraData, WeakBialgebra
from weakyd.weakhopf import (AntipodeNotBijective, AntipodeNotFound, Groupoid,
                             MalformedGroupoid, WeakHopfAlgebra, dual_weak_hopf,
                             full_hopf_report, groupoid_algebra, pair_groupoid,
                             solve_antipode, verify_weak_hopf)


@pytest.mark.parametrize("name", ALL)
def test_full_hopf_suite(name):
    rep = full_hopf_report(algebra(name))
    assert rep.passed, rep.summary()


def idempotent_monoid():
    """k{1, y} with y^2 = y and both elements grouplike: no antipode."""
    m = QQ.zeros((2, 2, 2))
    m[0, 0, 0] = m[0, 1, 1] = m[1, 0, 1] = m[1, 1, 1] = 1
    c = QQ.zeros((2, 2, 2))
    c[0, 0, 0] = c[1, 1, 1] = 1
    return WeakBialgebra(AlgebraData(2, m, QQ.array([1, 0])),
                         CoalgebraData(2, c, QQ.array([1, 1])))


def test_idempotent_monoid_has_no_antipode():
    res = solve_antipode(idempotent_monoid())
    assert res.status == "not_found"
    with pytest.raises(AntipodeNotFound):
        res.unwrap()


def test_singular_antipode_rejected():
    H = algebra("z2")
    with pytest.raises(AntipodeNotBijective):
        WeakHopfAlgebra(H.alg, H.coalg, QQ.zeros((2, 2)))


def test_convolution_equations_alone_are_underdetermined():
    # for groups they suffice; for genuinely weak algebras S*id*S = S is needed
    for name in ("z2", "z3", "s3"):
        assert solve_antipode(algebra(name), sandwich=False).status == "found"
    dims = {}
    for name in ("disc2", "pair2", "pair3"):
        res = solve_antipode(algebra(name), sandwich=False)
        assert res.status == "ambiguous"
        assert res.solutions.kernel.contains(res.solutions.particular - algebra(name).S.reshape(-1))
        dims[name] = res.solutions.kernel.dim
    assert dims == {"disc2": 2, "pair2": 4, "pair3": 36}


def test_wrong_antipode_detected():
    H = algebra("pair2")
    S = H.S.copy()
    S[:, [1, 2]] = S[:, [2, 1]]
    rep = verify_weak_hopf(WeakHopfAlgebra(H.alg, H.coalg, S))
    assert not rep.passed


@pytest.mark.parametrize("name", ["z3", "pair2", "s3"])
def test_dual_is_weak_hopf_and_reflexive(name):
    H = algebra(name)
    Hd = dual_weak_hopf(H)
    assert full_hopf_report(Hd).passed
    Hdd = dual_weak_hopf(Hd)
    assert equal(Hdd.m, H.m) and equal(Hdd.c, H.c) and equal(Hdd.S, H.S)


def test_prime_field_antipode():
    H = groupoid_algebra(pair_groupoid(3), PrimeField(7))
    assert full_hopf_report(H).passed
    assert equal(solve_antipode(H).S, H.S)


def test_groupoid_validation():
    G = groupoid("pair2")
    compose = dict(G.compose)
    compose[("1->2", "2->1")] = "id_1"  # wrong object
    with pytest.raises(MalformedGroupoid):
        Groupoid(G.objects, G.morphisms, G.source, G.target, compose, G.inverse).validate()
    with pytest.raises(MalformedGroupoid):
        Groupoid(G.objects, G.morphisms, G.source, G.target, G.compose, {}).validate()
