"""Preunital algebras, weak smash products, weak entwinings and Doi-Hopf data.

Layouts::

    R[b, a, a', b']    coefficient of e_a' (x) f_b' in R(f_b (x) e_a)
    psi[a, c, a', c']  coefficient of e_a' (x) c_c' in psi(e_a (x) c_c)

Tensor product bases are row-major: (i, j) -> i * dim2 + j.
"""

from dataclasses import dataclass

import numpy as np

from .exactlin import Subspace, ein, rref_and_kernel
from .report import VerificationReport, associativity, compare, holds
from .weakbialg import AlgebraData, CoalgebraData, HModule, module_axioms
from .weakhopf import WeakHopfAlgebra


class NotAssociative(ValueError):
    pass


class PreunitViolated(ValueError):
    pass


class DatumError(ValueError):
    pass


def _alg_checks(A, name):
    F, m, u = A.field, A.mult, A.unit
    return [associativity(name + "_associative", m, F),
            compare(name + "_unit_left", ein("z,zax->ax", u, m), F.eye(A.dim), 1, F),
            compare(name + "_unit_right", ein("z,azx->ax", u, m), F.eye(A.dim), 1, F)]


def _coalg_checks(C, name):
    F, c, e = C.field, C.comult, C.counit
    return [compare(name + "_coassociative", ein("hzr,zpq->hpqr", c, c),
                    ein("hpz,zqr->hpqr", c, c), 1, F),
            compare(name + "_counit_left", ein("hzx,z->hx", c, e), F.eye(C.dim), 1, F),
            compare(name + "_counit_right", ein("hxz,z->hx", c, e), F.eye(C.dim), 1, F)]


def right_comodule_axioms(C, rho, name="comodule"):
    """rho[out, c, in] is a right C-comodule structure."""
    F = C.field
    lhs = ein("tas,sbm->mtab", rho, rho)
    rhs = ein("txm,xab->mtab", rho, C.comult)
    cu = ein("txm,x->mt", rho, C.counit)
    return [compare(name + "_coassociative", lhs, rhs, 1, F),
            compare(name + "_counital", cu, F.eye(rho.shape[0]), 1, F)]


# ---------------------------------------------------------------------------
# preunital algebras


@dataclass(frozen=True, eq=False)
class PreunitalAlgebra:
    dim: int
    mult: object
    preunit: object
    field: object

    @property
    def p(self):
        """Matrix of a -> a e."""
        return ein("ajx,j->xa", self.mult, self.preunit)

    @property
    def image(self):
        return Subspace.from_columns(self.p, self.field)

    @property
    def unit_of_image(self):
        e = self.preunit
        return ein("i,j,ijk->k", e, e, self.mult)


def verify_preunital(P):
    F, m, e = P.field, P.mult, P.preunit
    rep = VerificationReport("preunital")
    rep.add(associativity("associative", m, F))
    left = ein("j,jax->ax", e, m)
    right = ein("ajx,j->ax", m, e)
    e2 = P.unit_of_image
    rep.add(compare("preunit_left_equals_right", left, right, 1, F))
    rep.add(compare("preunit_right_equals_square", right, ein("ajx,j->ax", m, e2), 1, F))
    p = P.p
    rep.add(compare("p_idempotent", (p @ p).T, p.T, 1, F))
    rep.add(compare("p_multiplicative", ein("abz,xz->abx", m, p),
                    ein("ia,jb,ijx->abx", p, p, m), 2, F))
    return rep


def preunit_quotient(P):
    """Im(p) with unit e^2; returns ``(AlgebraData, project, include, report)``.

    ``project`` maps A onto image coordinates via p, ``include`` is the
    inclusion of the image.
    """
    F = P.field
    img, ker = rref_and_kernel(P.p, F)
    sel, inc = img.select, img.incl
    proj = sel @ P.p
    mult = ein("ai,bj,abx,kx->ijk", inc, inc, P.mult, sel)
    unit = img.coords(P.unit_of_image)
    A = AlgebraData(img.dim, mult, unit, F)
    rep = VerificationReport("preunit_quotient")
    Kp = ker.basis  # rows spanning Ker p
    if Kp.shape[0]:
        zero = F.zeros((Kp.shape[0], P.dim, P.dim))
        rep.add(compare("kernel_left_ideal", ein("kb,abx,yx->kay", Kp, P.mult, P.p),
                        zero, 1, F))
        rep.add(compare("kernel_right_ideal", ein("kb,bax,yx->kay", Kp, P.mult, P.p),
                        zero, 1, F))
    rep.add(compare("project_include_identity", (proj @ inc).T, F.eye(img.dim), 1, F))
    rep.add(compare("project_multiplicative", ein("abz,kz->abk", P.mult, proj),
                    ein("ia,jb,ijk->abk", proj, proj, mult), 2, F))
    rep.add(holds("coimage_isomorphic_to_image", P.dim - Kp.shape[0] == img.dim,
                  "dim A - dim Ker p != dim Im p"))
    for ch in _alg_checks(A, "quotient"):
        rep.add(ch)
    return A, proj, inc, rep


# ---------------------------------------------------------------------------
# weak smash products


@dataclass(frozen=True, eq=False)
class WeakSmashStructure:
    A: AlgebraData
    B: AlgebraData
    R: object


def verify_smash_structure(S):
    A, B, R = S.A, S.B, S.R
    F = A.field
    mA, mB, uA, uB = A.mult, B.mult, A.unit, B.unit
    rep = VerificationReport("smash_structure")
    rep.add(compare("multiplicative_in_B", ein("bdz,zaxy->bdaxy", mB, R),
                    ein("dakl,bkxj,jly->bdaxy", R, R, mB), 3, F))
    rep.add(compare("multiplicative_in_A", ein("acz,bzxy->bacxy", mA, R),
                    ein("baij,jcky,ikx->bacxy", R, R, mA), 3, F))
    T = ein("b,a,baxy->xy", uB, uA, R)
    rep.add(compare("preunit_left", ein("b,baxy->axy", uB, R),
                    ein("ky,akx->axy", T, mA), 1, F))
    rep.add(compare("preunit_right", ein("a,baxy->bxy", uA, R),
                    ein("xk,kby->bxy", T, mB), 1, F))
    return rep


def smash_product(S):
    """A #_R B with preunit 1 # 1; raises on a violated structure law."""
    rep = verify_smash_structure(S)
    if not rep.passed:
        bad = rep.failures[0]
        cls = PreunitViolated if bad.name.startswith("preunit") else NotAssociative
        raise cls("%s at %s" % (bad.name, bad.witness))
    A, B, R = S.A, S.B, S.R
    dA, dB = A.dim, B.dim
    mult = ein("bckl,akx,ldy->abcdxy", R, A.mult, B.mult).reshape(dA * dB, dA * dB, dA * dB)
    e = ein("a,b->ab", A.unit, B.unit).reshape(-1)
    return PreunitalAlgebra(dA * dB, mult, e, A.field)


def dual_algebra(C):
    """C* with (f g)(c) = f(c_(1)) g(c_(2)) on the coordinate dual basis."""
    return AlgebraData(C.dim, ein("kij->ijk", C.comult), C.counit, C.field)


# ---------------------------------------------------------------------------
# weak entwining structures


@dataclass(frozen=True, eq=False)
class WeakEntwining:
    A: AlgebraData
    C: CoalgebraData
    psi: object


def verify_weak_entwining(E):
    A, C, psi = E.A, E.C, E.psi
    F = A.field
    mA, uA, cC, eC = A.mult, A.unit, C.comult, C.counit
    rep = VerificationReport("weak_entwining")
    rep.add(compare("entwining_comultiplication", ein("acxz,zpq->acxpq", psi, cC),
                    ein("ckl,alzq,zkxp->acxpq", cC, psi, psi), 2, F))
    rep.add(compare("entwining_multiplication", ein("abz,zcxy->abcxy", mA, psi),
                    ein("bckl,aliy,ikx->abcxy", psi, psi, mA), 3, F))
    rep.add(compare("entwining_unit", ein("a,acxy->cxy", uA, psi),
                    ein("cky,a,akxz,z->cxy", cC, uA, psi, eC), 1, F))
    rep.add(compare("entwining_counit", ein("acxz,z->acx", psi, eC),
                    ein("k,kciz,z,aix->acx", uA, psi, eC, mA), 2, F))
    return rep


def smash_from_entwining(E):
    """(A, C*, R) with R(c* (x) a) = sum_i <c*, c_i^psi> a_psi (x) c_i*."""
    R = ein("aixj->jaxi", E.psi)
    return WeakSmashStructure(E.A, dual_algebra(E.C), R)


def entwined_module_check(E, action, coaction):
    """rho(am) = a_psi m_[0] (x) m_[1]^psi, with module and comodule laws."""
    F = E.A.field
    act = F.array(action)
    rho = F.array(coaction)
    rep = VerificationReport("entwined_module")
    for ch in module_axioms(E.A, HModule(act.shape[1], act)):
        rep.add(ch)
    for ch in right_comodule_axioms(E.C, rho):
        rep.add(ch)
    rep.add(compare("entwined_compatibility", ein("asm,nys->amny", act, rho),
                    ein("tcm,acky,knt->amny", rho, E.psi, act), 2, F))
    return rep


def entwined_to_smash_action(E, action, coaction):
    """[a # c*] m = <c*, m_[1]> a m_[0] on the ambient A (x) C* basis."""
    F = E.A.field
    act, rho = F.array(action), F.array(coaction)
    n = act.shape[1]
    return ein("tjm,ant->ajnm", rho, act).reshape(E.A.dim * E.C.dim, n, n)


# ---------------------------------------------------------------------------
# H^op (x) H and the canonical Doi-Hopf datum


def op_tensor(H):
    """H^op (x) H: product (a (x) b)(c (x) d) = ca (x) bd, antipode S^-1 (x) S."""
    F, d = H.field, H.dim
    m, c = H.m, H.c
    mult = ein("cax,bdy->abcdxy", m, m).reshape(d * d, d * d, d * d)
    unit = ein("a,b->ab", H.u, H.u).reshape(-1)
    comult = ein("apr,bqs->abpqrs", c, c).reshape(d * d, d * d, d * d)
    counit = ein("a,b->ab", H.e, H.e).reshape(-1)
    S = np.kron(H.S_inv, H.S)
    Si = np.kron(H.S, H.S_inv)
    return WeakHopfAlgebra(AlgebraData(d * d, mult, unit, F),
                           CoalgebraData(d * d, comult, counit, F), S, Si)


@dataclass(frozen=True, eq=False)
class DoiHopfDatum:
    """(H', A, C): A a right H'-comodule algebra, C a left H'-module coalgebra."""

    H: WeakHopfAlgebra
    A: AlgebraData
    coaction: object  # rho[out, g, in]: A -> A (x) H'
    C: CoalgebraData
    action: object  # act[g, out, in]: H' (x) C -> C


def verify_doihopf(D):
    Hp, A, C = D.H, D.A, D.C
    F = Hp.field
    rho, act = F.array(D.coaction), F.array(D.action)
    rep = VerificationReport("doi_hopf_datum")
    for ch in right_comodule_axioms(Hp.coalg, rho, "comodule"):
        rep.add(ch)
    rep.add(compare("comodule_algebra_multiplicative",
                    ein("abz,xgz->abxg", A.mult, rho),
                    ein("iha,jkb,ijx,hkg->abxg", rho, rho, A.mult, Hp.m), 2, F))
    one = ein("a,xga->xg", A.unit, rho)
    rep.add(compare("comodule_algebra_unit", ein("xh,gh->xg", one, Hp.eps_t), one, 1, F))
    for ch in module_axioms(Hp.alg, HModule(C.dim, act)):
        rep.add(ch)
    rep.add(compare("module_coalgebra_comultiplicative",
                    ein("gzc,zpq->gcpq", act, C.comult),
                    ein("gab,ckl,apk,bql->gcpq", Hp.c, C.comult, act, act), 2, F))
    lhs = ein("hkz,zyc,y->hkc", Hp.m, act, C.counit)
    rhs = ein("kab,hbz,z,ayc,y->hkc", Hp.c, Hp.m, Hp.e, act, C.counit)
    rep.add(compare("module_coalgebra_counit", lhs, rhs, 2, F))
    return rep


def doihopf_to_entwining(D):
    """psi(a (x) c) = a_[0] (x) a_[1] c."""
    rep = verify_doihopf(D)
    if not rep.passed:
        raise DatumError("; ".join("%s at %s" % (c.name, c.witness) for c in rep.failures))
    F = D.H.field
    psi = ein("xga,gyc->acxy", F.array(D.coaction), F.array(D.action))
    return WeakEntwining(D.A, D.C, psi)


def canonical_yd_datum(H):
    """(H^op (x) H, H, H): rho(h) = h_(2) (x) S^-1(h_(1)) (x) h_(3), (k (x) h) c = hck."""
    Hp = op_tensor(H)
    d = H.dim
    rho = ein("hpnr,ip,jr->nijh", H.comult2, H.S_inv, H.field.eye(d)).reshape(d, d * d, d)
    act = ein("hcz,zky->khyc", H.m, H.m).reshape(d * d, d, d)
    return DoiHopfDatum(Hp, H.alg, rho, H.coalg, act)


def canonical_psi(H):
    """psi(h (x) k) = h_(2) (x) h_(3) k S^-1(h_(1))."""
    return ein("hpxr,rkz,vp,zvy->hkxy", H.comult2, H.m, H.S_inv, H.m)
