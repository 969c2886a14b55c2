"""Left duals of ll YD modules and the zig-zag identities.

M* uses the coordinate dual basis n_i^*.  ``ev`` and ``coev`` are stored as
ambient matrices with H_t in its echelon coordinates::

    ev    (r, dim M * dim M)   M* (x) M -> H_t, well defined on the truncated image
    coev  (dim M * dim M, r)   H_t -> M (x) M*
"""

from dataclasses import dataclass

from .exactlin import ein, kron
from .report import VerificationReport, compare, holds
from .weakbialg import HModule, left_unit_maps, right_unit_maps, truncated_tensor
from .yetterdrinfeld import HComodule, YDModule, check_yd, unit_yd, yd_tensor


@dataclass(frozen=True, eq=False)
class DualYDModule:
    base: YDModule
    module: YDModule  # M* with its ll structure
    report: VerificationReport


def dual_data(M):
    """Action and coaction tensors of M*."""
    H = M.H
    act = ein("yh,ykj->hjk", H.S, M.action)  # <h . n_k^*, n_j> = <n_k^*, S(h) n_j>
    lam = ein("xa,akj->xjk", H.S_inv, M.coaction)
    return act, lam


def dual_yd(M):
    if M.variant != "ll":
        raise ValueError("left duals are built for ll modules, got %s" % M.variant)
    act, lam = dual_data(M)
    rep, Md = check_yd(M.H, act, lam, "ll")
    if Md is None:
        Md = YDModule("ll", HModule(M.dim, act), HComodule(M.dim, lam), M.H, report=rep)
    return DualYDModule(M, Md, rep)


def ev_coev(M, Md=None):
    """Ambient ev: M* (x) M -> H_t and coev: H_t -> M (x) M*."""
    H = M.H
    F = H.field
    Md = Md if Md is not None else dual_yd(M).module
    n = M.dim
    Z = H.Ht
    # ev(m* (x) m) = <m*, 1_(1) m> 1_(2)
    E = ein("ax,akm->xkm", H.one_coproduct, M.action).reshape(H.dim, n * n)
    ev = Z.select @ E
    # coev(z) = z . sum_i n_i (x) n_i^*
    diag = truncated_tensor(H, M.module, Md.module).diagonal
    vec = F.eye(n).reshape(-1)
    coev = ein("jz,zab,b->aj", Z.basis, diag, vec)
    return ev, coev, E


def verify_left_duality(M, dual=None):
    """Dual YD structure, ev/coev (co)linearity and both zig-zags.

    ``dual`` may supply a (possibly corrupted) YDModule to use as M*.
    """
    H = M.H
    F = H.field
    rep = VerificationReport("left_duality")
    if dual is None:
        D = dual_yd(M)
        rep.extend(D.report, "dual")
        Md = D.module
    else:
        Md = dual
    n = M.dim
    Z = H.Ht
    # pairing laws
    rep.add(compare("dual_action_pairing", ein("hjk->hkj", Md.action),
                    ein("yh,ykj->hkj", H.S, M.action), 2, F))
    rep.add(compare("dual_coaction_pairing", ein("xjk,yx->kjy", Md.coaction, H.S),
                    ein("ykj->kjy", M.coaction), 2, F))
    ev, coev, E = ev_coev(M, Md)
    U = unit_yd(H)
    DM = yd_tensor(Md, M)
    MD = yd_tensor(M, Md)
    P1, P2 = DM.space, MD.space
    rep.add(compare("ev_well_defined", (E @ P1.projector).T, E.T, 1, F))
    rep.add(holds("ev_lands_in_target", all(Z.contains(E[:, j]) for j in range(n * n)),
                  "ev leaves H_t"))
    rep.add(compare("coev_lands_in_image", (P2.projector @ coev).T, coev.T, 1, F))
    ev_i = ev @ P1.basis.incl
    coev_i = P2.basis.select @ coev
    rep.add(compare("ev_linear", ein("zk,hkj->hjz", ev_i, DM.action),
                    ein("hzy,yj->hjz", U.action, ev_i), 2, F))
    rep.add(compare("coev_linear", ein("kz,hzj->hjk", coev_i, U.action),
                    ein("hkl,lj->hjk", MD.action, coev_i), 2, F))
    rep.add(compare("ev_colinear", ein("zk,xkj->jxz", ev_i, DM.coaction),
                    ein("xzy,yj->jxz", U.coaction, ev_i), 1, F))
    rep.add(compare("coev_colinear", ein("kz,xzj->jxk", coev_i, U.coaction),
                    ein("xkl,lj->jxk", MD.coaction, coev_i), 1, F))
    # zig-zags through the unit constraints
    _, l_inv = left_unit_maps(H, M.module)
    r_amb, _ = right_unit_maps(H, M.module)
    first = r_amb @ kron(F.eye(n), ev) @ kron(coev, F.eye(n)) @ l_inv
    rep.add(compare("zigzag_module", first.T, F.eye(n), 1, F))
    l_amb_d, _ = left_unit_maps(H, Md.module)
    _, r_inv_d = right_unit_maps(H, Md.module)
    second = l_amb_d @ kron(ev, F.eye(n)) @ kron(F.eye(n), coev) @ r_inv_d
    rep.add(compare("zigzag_dual", second.T, F.eye(n), 1, F))
    return rep


def double_dual_matches(M):
    """(M*)* is M with action twisted by S^2 and coaction by S^-2."""
    H = M.H
    F = H.field
    Mdd = dual_yd(dual_yd(M).module).module
    S2 = H.S @ H.S
    rep = VerificationReport("double_dual")
    rep.add(compare("double_dual_action", Mdd.action, ein("yh,ynm->hnm", S2, M.action), 1, F))
    rep.add(compare("double_dual_coaction", Mdd.coaction,
                    ein("xa,anm->xnm", H.S2_inv, M.coaction), 1, F))
    return rep
