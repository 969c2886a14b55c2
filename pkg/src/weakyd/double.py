"""The Drinfeld double D(H) as the preunit quotient of H ⋈ H*.

H* carries the coordinate dual basis e^i.  The ambient H ⋈ H* has basis
e_a ⋈ e^i at position a * d + i, the ambient H* (x) H of the second
construction has e^i (x) e_a at i * d + a.
"""

from dataclasses import dataclass

import numpy as np

from .entwining import (DatumError, PreunitalAlgebra, WeakSmashStructure, canonical_yd_datum,
                        doihopf_to_entwining, dual_algebra, preunit_quotient,
                        smash_from_entwining, smash_product, verify_preunital,
                        verify_smash_structure)
from .exactlin import Subspace, ein, kron, rank, rref_and_kernel
from .report import VerificationReport, compare, holds
from .weakbialg import AlgebraData, CoalgebraData, HModule, module_axioms, truncated_tensor
from .weakhopf import WeakHopfAlgebra, full_hopf_report, hit_tensor
from .yetterdrinfeld import swap, yd_tensor


class NotWellDefined(ValueError):
    pass


class IllDefined(ValueError):
    pass


def _conv(H):
    """Product of H*: (f * g)[l] = sum f[w] g[j] Delta[l, w, j]."""
    return ein("lwj->wjl", H.c)


def double_R_map(H):
    """R(h* (x) h) = h_(2) (x) (S^-1(h_(1)) -> h* <- h_(3)), layout R[i, h, x, j]."""
    return ein("hpxr,vp,virj->ihxj", H.comult2, H.S_inv, hit_tensor(H))


def double_R_via_entwining(H):
    return smash_from_entwining(doihopf_to_entwining(canonical_yd_datum(H))).R


def double_ambient_product(H):
    """(h ⋈ h*)(k ⋈ k*) = h k_(2) ⋈ <h*_(1), k_(3)> <h*_(3), S^-1(k_(1))> h*_(2) * k*."""
    d = H.dim
    t = ein("kpqr,hqx,rwz,vp,zvi,lwj->hikjxl", H.comult2, H.m, H.m, H.S_inv, H.m, H.c)
    return t.reshape(d * d, d * d, d * d)


@dataclass(frozen=True, eq=False)
class DoubleAlgebra:
    H: WeakHopfAlgebra
    ambient: PreunitalAlgebra
    D: WeakHopfAlgebra
    project: object
    include: object
    kernel: Subspace
    report: VerificationReport


def _ambient_structure(H):
    """Ambient comultiplication, counits, antipode and its inverse on H ⋈ H*."""
    d = H.dim
    m, c, S, Si = H.m, H.c, H.S, H.S_inv
    c3 = H.comult2
    # Delta[h ⋈ e^i] = [h_(2) ⋈ e^i_(1)] (x) [h_(1) ⋈ e^i_(2)]
    comult = ein("hba,jki->hiajbk", c, m).reshape(d * d, d * d, d * d)
    counit = ein("ai,hay,y->hi", H.one_coproduct, m, H.e).reshape(-1)
    counit_alt = (H.eps_t @ Si).T.reshape(-1)
    t = ein("srw,wpi->srpi", m, m)  # <e^i, s r p>
    anti = ein("hpqr,xq,vr,vwpi,wj->xjhi", c3, Si, Si, t, S).reshape(d * d, d * d)
    anti_inv = ein("hpqr,xq,vr,vwpi,wj->xjhi", c3, S, Si, t, Si).reshape(d * d, d * d)
    return comult, counit, counit_alt, anti, anti_inv


def drinfeld_double(H):
    F = H.field
    rep = VerificationReport("double")
    R = double_R_map(H)
    try:
        R_ent = double_R_via_entwining(H)
    except DatumError as exc:
        raise NotWellDefined("canonical Doi-Hopf datum: %s" % exc) from None
    rep.add(compare("R_map_matches_entwining_construction", R, R_ent, 2, F))
    S = WeakSmashStructure(H.alg, dual_algebra(H.coalg), R)
    rep.extend(verify_smash_structure(S), "smash")
    P = smash_product(S)
    rep.add(compare("product_matches_closed_form", P.mult, double_ambient_product(H), 2, F))
    rep.extend(verify_preunital(P), "preunital")
    A, proj, inc, qrep = preunit_quotient(P)
    rep.extend(qrep, "quotient")
    _, ker = rref_and_kernel(P.p, F)
    K = ker.basis
    comult, counit, counit_alt, anti, anti_inv = _ambient_structure(H)
    zero_row = F.zeros((K.shape[0], A.dim * A.dim))
    if K.shape[0]:
        rep.add(compare("comultiplication_kills_kernel",
                        ein("ka,axy->kxy", K, comult).reshape(K.shape[0], -1)
                        @ kron(proj, proj).T, zero_row, 1, F))
        rep.add(compare("counit_kills_kernel", K @ counit, F.zeros(K.shape[0]), 0, F))
        rep.add(compare("antipode_kills_kernel", (proj @ anti @ K.T).T,
                        F.zeros((K.shape[0], A.dim)), 1, F))
        rep.add(compare("inverse_antipode_kills_kernel", (proj @ anti_inv @ K.T).T,
                        F.zeros((K.shape[0], A.dim)), 1, F))
    rep.add(compare("counit_via_target_map", counit, counit_alt, 0, F))
    comult_D = ein("ai,axy,jx,ky->ijk", inc, comult, proj, proj)
    counit_D = ein("ai,a->i", inc, counit)
    S_D = proj @ anti @ inc
    Si_D = proj @ anti_inv @ inc
    rep.add(compare("antipode_inverse_pair", (S_D @ Si_D).T, F.eye(A.dim), 1, F))
    rep.add(compare("inverse_antipode_pair", (Si_D @ S_D).T, F.eye(A.dim), 1, F))
    if not rep.passed:
        bad = rep.failures[0]
        raise NotWellDefined("%s at %s" % (bad.name, bad.witness))
    D = WeakHopfAlgebra(A, CoalgebraData(A.dim, comult_D, counit_D, F), S_D, Si_D)
    rep.extend(full_hopf_report(D), "D")
    return DoubleAlgebra(H, P, D, proj, inc, ker, rep)


# ---------------------------------------------------------------------------
# Ker p = J


def _hit_eps(H):
    """(z -> eps)[i] = eps(e_i z) and (eps <- y)[i] = eps(y e_i), per basis z, y."""
    left = ein("izy,y->zi", H.m, H.e)
    right = ein("yiw,w->yi", H.m, H.e)
    return left, right


def J_generators(H):
    """hz ⋈ h* - h ⋈ (z -> eps) * h*  and  hy ⋈ h* - h ⋈ (eps <- y) * h*."""
    F, d = H.field, H.dim
    Z, Y = H.Ht.basis, H.Hs.basis
    left, right = _hit_eps(H)
    conv = _conv(H)
    eye = F.eye(d)
    rows = []
    for B, fun in ((Z, left), (Y, right)):
        if not B.shape[0]:
            continue
        first = ein("ha,zb,abx,ij->zhixj", eye, B, H.m, eye)
        phi = ein("zb,bw->zw", B, fun)
        second = ein("hx,zw,wil->zhixl", eye, phi, conv)
        rows.append((first - second).reshape(-1, d * d))
    return np.concatenate(rows, 0) if rows else F.zeros((0, d * d))


def I_generators(H):
    """h* (x) zh - (eps <- z) h* (x) h  and  h* (x) yh - (y -> eps) h* (x) h."""
    F, d = H.field, H.dim
    Z, Y = H.Ht.basis, H.Hs.basis
    left, right = _hit_eps(H)
    conv = _conv(H)
    eye = F.eye(d)
    rows = []
    for B, fun in ((Z, right), (Y, left)):
        if not B.shape[0]:
            continue
        prod = ein("ha,zb,bax->zhx", eye, B, H.m)
        first = ein("ij,zhx->zihjx", eye, prod)
        phi = ein("zb,bw->zw", B, fun)
        second = ein("zw,wil,hx->zihlx", phi, conv, eye)
        rows.append((first - second).reshape(-1, d * d))
    return np.concatenate(rows, 0) if rows else F.zeros((0, d * d))


def kernel_equals_J(H, DA=None):
    F = H.field
    rep = VerificationReport("kernel_equals_J")
    P = DA.ambient if DA is not None else smash_product(
        WeakSmashStructure(H.alg, dual_algebra(H.coalg), double_R_map(H)))
    _, ker = rref_and_kernel(P.p, F)
    J = Subspace.from_rows(J_generators(H), F, H.dim ** 2)
    rep.add(holds("J_equals_kernel", J == ker,
                  "dim J = %d, dim Ker p = %d" % (J.dim, ker.dim)))
    rep.add(holds("J_inside_kernel", ker.contains_space(J), "a generator of J survives p"))
    # supporting identities on H*, per basis functional and base element
    conv = _conv(H)
    left, right = _hit_eps(H)
    T = hit_tensor(H)
    u = H.u
    Z, Y = H.Ht.basis, H.Hs.basis
    lhit = ein("zb,bpkl,k->zpl", Z, T, u)  # z -> e^p
    rhit = ein("zb,hpbl,h->zpl", Z, T, u)  # e^p <- z
    ylhit = ein("yb,bpkl,k->ypl", Y, T, u)
    yrhit = ein("yb,hpbl,h->ypl", Y, T, u)
    zl, zr = Z @ left, Z @ right
    yl, yr = Y @ left, Y @ right
    rep.add(compare("source_left_hit_as_product", ein("pwl,yw->ypl", conv, yl), ylhit, 2, F))
    rep.add(compare("source_right_hit_as_product", ein("pwl,yw->ypl", conv, yr), yrhit, 2, F))
    rep.add(compare("target_left_hit_as_product", ein("wpl,zw->zpl", conv, zl), lhit, 2, F))
    rep.add(compare("target_right_hit_as_product", ein("wpl,zw->zpl", conv, zr), rhit, 2, F))
    rep.add(compare("inverse_antipode_target_hit", Z @ H.S_inv.T @ left, zl, 1, F))
    rep.add(compare("inverse_antipode_source_hit", Y @ H.S_inv.T @ right, yr, 1, F))
    return rep


# ---------------------------------------------------------------------------
# the second construction D'(H) and the anti-isomorphism f


@dataclass(frozen=True, eq=False)
class DPrimeAlgebra:
    H: WeakHopfAlgebra
    ambient_mult: object
    ideal: Subspace
    quotient: object  # Q: ambient -> D'
    lift: object  # L: D' -> ambient
    D: WeakHopfAlgebra


def dprime_product(H):
    """(h* (x) h)(k* (x) k) = (h_(3) -> k* <- S(h_(1))) * h* (x) h_(2) k."""
    d = H.dim
    t = ein("apqr,sp,swt,trj,lwi,qbx->iajblx", H.comult2, H.S, H.m, H.m, H.c, H.m)
    return t.reshape(d * d, d * d, d * d)


def _dprime_structure(H):
    d = H.dim
    comult = ein("jki,abc->iajbkc", H.m, H.c).reshape(d * d, d * d, d * d)
    counit = H.eps_t.reshape(-1)  # [i, a] -> <e^i, eps_t(e_a)>
    anti = ein("apqr,bq,sr,pwt,tsi,wj->jbia", H.comult2, H.S, H.S, H.m, H.m,
               H.S_inv).reshape(d * d, d * d)
    return comult, counit, anti


def dprime_and_f(H, DA):
    """Build D'(H) and check f(h ⋈ h*) = h* (x) S^-1(h) against it."""
    F, d = H.field, H.dim
    rep = VerificationReport("dprime")
    mult = dprime_product(H)
    I = Subspace.from_rows(I_generators(H), F, d * d)
    Q, L = I.quotient_maps()
    n = Q.shape[0]
    Ib = I.basis
    if Ib.shape[0]:
        rep.add(compare("ideal_left", ein("ka,bax,yx->kby", Ib, mult, Q),
                        F.zeros((Ib.shape[0], d * d, n)), 1, F))
        rep.add(compare("ideal_right", ein("ka,abx,yx->kby", Ib, mult, Q),
                        F.zeros((Ib.shape[0], d * d, n)), 1, F))
    mult_q = ein("ai,bj,abx,kx->ijk", L, L, mult, Q)
    unit = Q @ kron(H.e, H.u)
    A = AlgebraData(n, mult_q, unit, F)
    comult, counit, anti = _dprime_structure(H)
    if Ib.shape[0]:
        rep.add(compare("comultiplication_kills_ideal",
                        ein("ka,axy->kxy", Ib, comult).reshape(Ib.shape[0], -1) @ kron(Q, Q).T,
                        F.zeros((Ib.shape[0], n * n)), 1, F))
        rep.add(compare("counit_kills_ideal", Ib @ counit, F.zeros(Ib.shape[0]), 0, F))
        rep.add(compare("antipode_kills_ideal", (Q @ anti @ Ib.T).T,
                        F.zeros((Ib.shape[0], n)), 1, F))
    C = CoalgebraData(n, ein("ai,axy,jx,ky->ijk", L, comult, Q, Q), L.T @ counit, F)
    S = Q @ anti @ L
    Dp = WeakHopfAlgebra(A, C, S)
    rep.extend(full_hopf_report(Dp), "Dprime")
    # f on the ambients
    fmat = ein("ij,yh->iyhj", F.eye(d), H.S_inv).reshape(d * d, d * d)
    P = DA.ambient
    lhs = ein("yx,abx->aby", fmat, P.mult)
    rhs = ein("ua,vb,vuy->aby", fmat, fmat, mult)
    rep.add(compare("f_anti_multiplicative", lhs, rhs, 2, F))
    J = Subspace.from_rows(J_generators(H), F, d * d)
    fJ = Subspace.from_rows((fmat @ J.basis.T).T, F, d * d)
    rep.add(holds("f_maps_J_onto_I", fJ == I, "dim f(J) = %d, dim I = %d" % (fJ.dim, I.dim)))
    fbar = Q @ fmat @ DA.include
    D = DA.D
    rep.add(holds("induced_map_bijective", fbar.shape[0] == fbar.shape[1]
                  and rank(fbar, F) == fbar.shape[0], "shape %s" % (fbar.shape,)))
    rep.add(compare("induced_map_reverses_product", ein("kx,ijx->ijk", fbar, D.m),
                    ein("ai,bj,bak->ijk", fbar, fbar, Dp.m), 2, F))
    rep.add(compare("induced_map_unital", fbar @ D.u, Dp.u, 0, F))
    rep.add(compare("induced_map_comultiplicative", ein("yx,ix->iy", kron(fbar, fbar),
                                                        D.c.reshape(D.dim, -1)),
                    ein("ai,ayz->iyz", fbar, Dp.c).reshape(D.dim, -1), 1, F))
    rep.add(compare("counit_matches_through_f", D.e, fbar.T @ Dp.e, 0, F))
    rep.add(compare("inverse_antipode_transported", (fbar @ D.S_inv).T, (Dp.S @ fbar).T, 1, F))
    return DPrimeAlgebra(H, mult, I, Q, L, Dp), fbar, rep


def target_iso(DA):
    """z -> [S(z) ⋈ eps] from H_t into D(H)_t: lands, injective, unital, multiplicative."""
    H, D = DA.H, DA.D
    F, d = H.field, H.dim
    rep = VerificationReport("double_target")
    Z = H.Ht
    amb = ein("zb,ab,i->zai", Z.basis, H.S, H.e).reshape(Z.dim, d * d)
    phi = (DA.project @ amb.T)  # columns: images of the H_t basis
    rep.add(holds("target_dimensions_agree", D.Ht.dim == Z.dim,
                  "dim D_t = %d, dim H_t = %d" % (D.Ht.dim, Z.dim)))
    rep.add(holds("image_in_target", all(D.Ht.contains(phi[:, j]) for j in range(Z.dim)),
                  "an image vector lies outside D_t"))
    rep.add(holds("injective", rank(phi, F) == Z.dim, "rank drop"))
    rep.add(compare("unital", phi @ Z.coords(H.u), D.u, 0, F))
    # structure constants of H_t in its echelon basis
    mt = ein("ia,jb,abx->ijx", Z.basis, Z.basis, H.m)
    mt = ein("ijx,kx->ijk", mt, Z.select)
    lhs = ein("ijk,xk->ijx", mt, phi)
    rhs = ein("ai,bj,abx->ijx", phi, phi, D.m)
    rep.add(compare("multiplicative", lhs, rhs, 2, F))
    return rep


# ---------------------------------------------------------------------------
# lr YD modules as D(H)-modules


def yd_to_double_module(DA, M):
    """(h ⋈ h*) m = <h*, m_[1]> h m_[0], on D(H) = Im p."""
    if M.variant != "lr":
        raise ValueError("expects an lr module, got %s" % M.variant)
    F = DA.H.field
    d = DA.H.dim
    amb = ein("tim,hnt->hinm", M.coaction, M.action).reshape(d * d, M.dim, M.dim)
    K = DA.kernel.basis
    if K.shape[0]:
        ch = compare("action_kills_kernel", ein("ka,anm->kmn", K, amb),
                     F.zeros((K.shape[0], M.dim, M.dim)), 1, F)
        if not ch.passed:
            raise IllDefined("kernel element %s acts nonzero: %s"
                             % (ch.witness["index"], ch.witness))
    act = ein("ai,anm->inm", DA.include, amb)
    return HModule(M.dim, act, "left")


def double_module_report(DA, M):
    rep = VerificationReport("double_module")
    FM = yd_to_double_module(DA, M)
    for ch in module_axioms(DA.D.alg, FM):
        rep.add(ch)
    return rep, FM


def switch_map_check(DA, M, N):
    """tau: F(M (x)_t N) -> F(N) (x)_t F(M) is a D(H)-linear isomorphism."""
    F = DA.H.field
    rep = VerificationReport("switch_map")
    MN = yd_tensor(M, N)
    FMN = yd_to_double_module(DA, MN)
    FM, FN = yd_to_double_module(DA, M), yd_to_double_module(DA, N)
    tt = truncated_tensor(DA.D, FN, FM)
    tau = swap(M.dim, N.dim, F)
    B, B2 = MN.space.basis, tt.basis
    fwd = tau @ B.incl
    rep.add(compare("switch_lands_in_image", (tt.projector @ fwd).T, fwd.T, 1, F))
    back = swap(N.dim, M.dim, F) @ B2.incl
    rep.add(compare("switch_back_lands_in_image", (MN.space.projector @ back).T, back.T, 1, F))
    t = B2.select @ fwd
    ti = B.select @ back
    rep.add(holds("dimensions_agree", B.dim == B2.dim, "%d vs %d" % (B.dim, B2.dim)))
    if B.dim == B2.dim:
        rep.add(compare("switch_invertible", (ti @ t).T, F.eye(B.dim), 1, F))
    rep.add(compare("switch_double_linear", ein("lk,hkj->hjl", t, FMN.action),
                    ein("hlk,kj->hjl", tt.module.action, t), 2, F))
    return rep


def double_linear(DA, FM, FN, g):
    """F(g) commutes with the D(H)-actions."""
    F = DA.H.field
    return compare("double_linear", ein("nm,hmk->hkn", g, FM.action),
                   ein("hnm,mk->hkn", FN.action, g), 2, F)
