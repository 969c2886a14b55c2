"""Weak bialgebras by structure constants.

Conventions (input indices first for structure tensors)::

    mult[i, j, k]    coefficient of e_k in e_i e_j
    comult[i, j, k]  coefficient of e_j (x) e_k in Delta(e_i)
    unit[k], counit[i]

Linear maps are matrices ``[out, in]``; a module action is a stack of
matrices ``action[h, out, in]``.  An element of ``H (x) H`` is a ``(d, d)``
array.  In every check below the einsum output lists the free variables
first, so the report witness is the first failing basis tuple.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exactlin import QQ, Subspace, ein, is_zero, kron
from .report import VerificationReport, associativity, compare, holds


class DimMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AlgebraData:
    dim: int
    mult: object
    unit: object
    field: object = QQ

    def __post_init__(self):
        d = self.dim
        if np.shape(self.mult) != (d, d, d) or np.shape(self.unit) != (d,):
            raise DimMismatch("algebra tensors do not match dim %d" % d)

    def product(self, x, y):
        return ein("i,j,ijk->k", x, y, self.mult)

    def left_mult(self):
        """``L[a]`` is the matrix of left multiplication by ``e_a``."""
        return ein("ahx->axh", self.mult)

    def right_mult(self):
        return ein("hax->axh", self.mult)

    def opposite(self):
        return AlgebraData(self.dim, ein("ijk->jik", self.mult), self.unit, self.field)


@dataclass(frozen=True, eq=False)
class CoalgebraData:
    dim: int
    comult: object
    counit: object
    field: object = QQ

    def __post_init__(self):
        d = self.dim
        if np.shape(self.comult) != (d, d, d) or np.shape(self.counit) != (d,):
            raise DimMismatch("coalgebra tensors do not match dim %d" % d)

    @property
    def matrix(self):
        """Delta as a (dim^2 x dim) matrix."""
        return self.comult.reshape(self.dim, -1).T

    def coopposite(self):
        return CoalgebraData(self.dim, ein("ijk->ikj", self.comult), self.counit, self.field)


@dataclass(frozen=True, eq=False)
class HModule:
    """Finite-dimensional module given by ``action[h, out, in]``.

    ``side`` is ``"left"`` or ``"right"``; a right action stores the matrix
    of ``m -> m . e_h`` in ``action[h]``.
    """

    dim: int
    action: object
    side: str = "left"

    def act(self, hvec):
        return ein("h,hnm->nm", hvec, self.action)


def module_axioms(alg, M, name="module"):
    """Associativity and unit law of the action."""
    m, u, a = alg.mult, alg.unit, M.action
    F = alg.field
    lhs = ein("ghx,xnm->ghmn", m, a)
    if M.side == "left":
        rhs = ein("gnk,hkm->ghmn", a, a)
    else:
        rhs = ein("hnk,gkm->ghmn", a, a)
    unit_l = ein("x,xnm->mn", u, a)
    return [compare(name + "_associative", lhs, rhs, 3, F),
            compare(name + "_unital", unit_l, F.eye(M.dim), 1, F)]


def regular_module(H, side="left"):
    m = H.alg.mult if isinstance(H, WeakBialgebra) else H.mult
    if side == "left":
        return HModule(m.shape[0], ein("hkx->hxk", m), "left")
    return HModule(m.shape[0], ein("khx->hxk", m), "right")


def tensor_subspace(A, B):
    """Subspace ``A (x) B`` of the tensor product of the ambients."""
    F = A.field
    rows = [kron(a, b) for a in A.basis for b in B.basis]
    return Subspace.from_rows(np.array(rows, dtype=object) if rows else [],
                              F, A.ambient_dim * B.ambient_dim)


class WeakBialgebra:
    """A verified weak bialgebra with cached counital data.

    Build through :func:`verify_weak_bialgebra`; the constructor itself does
    not re-check the axioms.
    """

    def __init__(self, alg, coalg):
        if alg.dim != coalg.dim:
            raise DimMismatch("algebra dim %d != coalgebra dim %d" % (alg.dim, coalg.dim))
        self.alg = alg
        self.coalg = coalg
        self.dim = alg.dim
        self.field = alg.field
        self.m, self.u = alg.mult, alg.unit
        self.c, self.e = coalg.comult, coalg.counit

    @cached_property
    def one_coproduct(self):
        """Delta(1) as a (d, d) array."""
        return ein("i,iab->ab", self.u, self.c)

    @cached_property
    def eps_t(self):
        return ein("ax,ahy,y->xh", self.one_coproduct, self.m, self.e)

    @cached_property
    def eps_s(self):
        return ein("xb,hby,y->xh", self.one_coproduct, self.m, self.e)

    @cached_property
    def eps_t_bar(self):
        return ein("ax,hay,y->xh", self.one_coproduct, self.m, self.e)

    @cached_property
    def eps_s_bar(self):
        return ein("xb,bhy,y->xh", self.one_coproduct, self.m, self.e)

    @cached_property
    def Ht(self):
        return Subspace.from_columns(self.eps_t, self.field)

    @cached_property
    def Hs(self):
        return Subspace.from_columns(self.eps_s, self.field)

    @cached_property
    def e_t(self):
        """Separability idempotent eps_t(1_(1)) (x) 1_(2) of H_t."""
        return ein("ax,xb->ab", self.eps_t, self.one_coproduct)

    @cached_property
    def e_s(self):
        """Separability idempotent 1_(1) (x) eps_s(1_(2)) of H_s."""
        return ein("ax,bx->ab", self.one_coproduct, self.eps_s)

    @cached_property
    def comult2(self):
        """Delta^2 as ``c3[h, p, q, r]``."""
        return ein("hxr,xpq->hpqr", self.c, self.c)

    def product(self, x, y):
        return self.alg.product(x, y)

    def counital_data(self):
        return (self.eps_t, self.eps_s, self.eps_t_bar, self.eps_s_bar,
                self.Ht, self.Hs, self.e_t, self.e_s)


def _axiom_checks(alg, coalg):
    F = alg.field
    m, u, c, e = alg.mult, alg.unit, coalg.comult, coalg.counit
    d = alg.dim
    I = F.eye(d)
    D1 = ein("i,iab->ab", u, c)
    out = []
    out.append(associativity("associativity", m, F))
    out.append(compare("unit", np.stack([ein("a,aio->io", u, m), ein("a,iao->io", u, m)], 1),
                       np.stack([I, I], 1), 1, F))
    out.append(compare("coassociativity", ein("ixc,xab->iabc", c, c),
                       ein("iax,xbc->iabc", c, c), 1, F))
    out.append(compare("counit", np.stack([ein("a,iao->io", e, c), ein("ioa,a->io", c, e)], 1),
                       np.stack([I, I], 1), 1, F))
    out.append(compare("comultiplication_multiplicative", ein("hkx,xab->hkab", m, c),
                       ein("hpq,krs,pra,qsb->hkab", c, c, m, m), 2, F))
    d2 = ein("xz,xab->abz", D1, c)
    out.append(compare("unit_coproduct_square_left", d2,
                       ein("ap,qz,pqb->abz", D1, D1, m), 0, F))
    out.append(compare("unit_coproduct_square_right", d2,
                       ein("ap,qz,qpb->abz", D1, D1, m), 0, F))
    ehkl = ein("hkx,xly,y->hkl", m, m, e)
    me = ein("ijx,x->ij", m, e)
    out.append(compare("counit_weakly_multiplicative_first", ehkl,
                       ein("kpq,hp,ql->hkl", c, me, me), 3, F))
    out.append(compare("counit_weakly_multiplicative_second", ehkl,
                       ein("kpq,hq,pl->hkl", c, me, me), 3, F))
    return out


def _derived_checks(H):
    F = H.field
    m, u, c, e = H.m, H.u, H.c, H.e
    d = H.dim
    I = F.eye(d)
    D1 = H.one_coproduct
    Et, Es, Ebt, Ebs = H.eps_t, H.eps_s, H.eps_t_bar, H.eps_s_bar
    out = []
    for nm, P in (("target", Et), ("source", Es), ("target_bar", Ebt), ("source_bar", Ebs)):
        out.append(compare("%s_map_idempotent" % nm, (P @ P).T, P.T, 1, F))
    out.append(compare("target_absorbs_comultiplication", ein("haq,bq->hab", c, Et),
                       ein("pb,pha->hab", D1, m), 1, F))
    out.append(compare("source_absorbs_comultiplication", ein("hpb,ap->hab", c, Es),
                       ein("aq,hqb->hab", D1, m), 1, F))
    me = ein("ijx,x->ij", m, e)
    out.append(compare("target_map_product_formula", ein("yg,hyx->hgx", Et, m),
                       ein("hpx,pg->hgx", c, me), 2, F))
    out.append(compare("source_map_product_formula", ein("yg,yhx->hgx", Es, m),
                       ein("hxq,gq->hgx", c, me), 2, F))
    out.append(compare("counit_absorbs_target_map", ein("yg,hy->hg", Et, me), me, 2, F))
    out.append(compare("counit_absorbs_source_map", ein("yg,yh->gh", Es, me), me, 2, F))

    # the four descriptions of H_t (and of H_s)
    Ht, Hs = H.Ht, H.Hs
    ker_t = ein("hxb->xbh", c) - ein("ab,ahx->xbh", D1, m)
    ker_s = ein("hax->axh", c) - ein("aq,hqx->axh", D1, m)
    descr_t = [Subspace.from_rows(_kernel_basis(ker_t.reshape(d * d, d), F), F, d),
               Subspace.from_rows(D1, F, d),
               Subspace.from_columns(Et, F),
               Subspace.from_rows(_kernel_basis(I - Et, F), F, d)]
    descr_s = [Subspace.from_rows(_kernel_basis(ker_s.reshape(d * d, d), F), F, d),
               Subspace.from_rows(D1.T, F, d),
               Subspace.from_columns(Es, F),
               Subspace.from_rows(_kernel_basis(I - Es, F), F, d)]
    out.append(holds("target_space_descriptions_agree", all(s == Ht for s in descr_t),
                     "dims %s" % [s.dim for s in descr_t]))
    out.append(holds("source_space_descriptions_agree", all(s == Hs for s in descr_s),
                     "dims %s" % [s.dim for s in descr_s]))

    out.append(compare("target_source_commute", ein("ah,bk,abx->hkx", Et, Es, m),
                       ein("ah,bk,bax->hkx", Et, Es, m), 2, F))
    out.append(compare("source_target_cocommute", ein("hpq,ap,bq->hab", c, Es, Et),
                       ein("hpq,aq,bp->hab", c, Es, Et), 1, F))
    out.append(compare("counital_maps_fix_unit", np.stack([Et @ u, Es @ u]),
                       np.stack([u, u]), 0, F))
    out.append(compare("target_map_multiplicative_rule", ein("ah,bg,abx->hgx", Et, Et, m),
                       ein("ah,agy,xy->hgx", Et, m, Et), 2, F))
    out.append(compare("source_map_multiplicative_rule", ein("ah,bg,abx->hgx", Es, Es, m),
                       ein("bg,hby,xy->hgx", Es, m, Es), 2, F))
    for nm, S in (("target", Ht), ("source", Hs)):
        prods = [H.product(a, b) for a in S.basis for b in S.basis]
        out.append(holds("%s_space_subalgebra" % nm,
                         all(S.contains(p) for p in prods) and S.contains(u)))
    out.append(holds("unit_coproduct_in_source_tensor_target",
                     tensor_subspace(Hs, Ht).contains(D1.reshape(-1))))
    out.append(compare("unit_coproduct_fixed_by_source_target",
                       ein("ap,bq,pq->ab", Es, Et, D1), D1, 0, F))
    out.append(holds("bar_maps_images", Subspace.from_columns(Ebt, F) == Ht
                     and Subspace.from_columns(Ebs, F) == Hs))
    # anti-isomorphisms between H_t and H_s
    Z, Y = Ht.basis, Hs.basis
    out.append(compare("source_bar_inverted_by_target_map", ein("xy,yz,jz->jx", Et, Ebs, Z),
                       Z, 1, F))
    out.append(compare("target_map_inverted_by_source_bar", ein("xy,yz,jz->jx", Ebs, Et, Y),
                       Y, 1, F))
    out.append(compare("source_bar_anti_multiplicative",
                       ein("ia,jb,abx,yx->ijy", Z, Z, m, Ebs),
                       ein("ia,jb,pa,qb,qpy->ijy", Z, Z, Ebs, Ebs, m), 2, F))
    out.append(compare("target_bar_inverted_by_source_map", ein("xy,yz,jz->jx", Es, Ebt, Y),
                       Y, 1, F))
    out.append(compare("source_map_inverted_by_target_bar", ein("xy,yz,jz->jx", Ebt, Es, Z),
                       Z, 1, F))
    out.append(compare("target_bar_anti_multiplicative",
                       ein("ia,jb,abx,yx->ijy", Y, Y, m, Ebt),
                       ein("ia,jb,pa,qb,qpy->ijy", Y, Y, Ebt, Ebt, m), 2, F))
    return out


def _kernel_basis(M, F):
    from .exactlin import rref_and_kernel
    return rref_and_kernel(M, F)[1].basis


def verify_weak_bialgebra(alg, coalg):
    """Check every weak bialgebra axiom; return ``(report, H or None)``.

    The derived identities are only evaluated (and ``H`` only returned) when
    the axioms all hold.
    """
    if alg.dim != coalg.dim:
        raise DimMismatch("algebra dim %d != coalgebra dim %d" % (alg.dim, coalg.dim))
    if alg.field != coalg.field:
        raise DimMismatch("algebra and coalgebra over different fields")
    rep = VerificationReport("bialgebra")
    for ch in _axiom_checks(alg, coalg):
        rep.add(ch)
    if not rep.passed:
        return rep, None
    H = WeakBialgebra(alg, coalg)
    for ch in _derived_checks(H):
        rep.add(ch)
    return rep, (H if rep.passed else None)


def counital_data(H):
    """Cached counital maps plus the separability/Frobenius report."""
    F = H.field
    m, u, e = H.m, H.u, H.e
    D1 = H.one_coproduct
    rep = VerificationReport("counital")
    et, es = H.e_t, H.e_s
    rep.add(compare("target_idempotent_two_forms", et,
                    ein("xa,bx->ab", D1, H.eps_t_bar), 0, F))
    rep.add(compare("source_idempotent_two_forms", es,
                    ein("ax,bx->ab", H.eps_s_bar, D1), 0, F))
    rep.add(compare("target_idempotent_multiplies_to_one", ein("ab,abx->x", et, m), u, 0, F))
    rep.add(compare("source_idempotent_multiplies_to_one", ein("ab,abx->x", es, m), u, 0, F))
    rep.add(holds("target_idempotent_in_target_square",
                  tensor_subspace(H.Ht, H.Ht).contains(et.reshape(-1))))
    rep.add(holds("source_idempotent_in_source_square",
                  tensor_subspace(H.Hs, H.Hs).contains(es.reshape(-1))))
    for nm, S, ee in (("target", H.Ht, et), ("source", H.Hs, es)):
        B = S.basis
        rep.add(compare("%s_idempotent_balanced" % nm, ein("jz,zpa,pb->jab", B, m, ee),
                        ein("jz,aq,qzb->jab", B, ee, m), 1, F))
        rep.add(compare("%s_frobenius_system" % nm,
                        np.stack([ein("a,ab->b", e, ee), ein("ab,b->a", ee, e)]),
                        np.stack([u, u]), 0, F))
    return H.counital_data(), rep


# ---------------------------------------------------------------------------
# truncated tensor products


@dataclass(frozen=True, eq=False)
class TruncatedTensor:
    """``Delta(1)(M (x) N)`` as (projector on the ambient, echelon image)."""

    left_dim: int
    right_dim: int
    projector: object
    basis: Subspace
    diagonal: object = None  # ambient diagonal action [h, out, in]
    module: HModule = None  # action restricted to image coordinates
    report: VerificationReport = None

    @property
    def dim(self):
        return self.basis.dim

    def restrict(self, A):
        """Image-coordinate matrix of an ambient operator preserving the image."""
        return self.basis.select @ A @ self.basis.incl


def diagonal_action(H, actM, actN):
    d, mM, mN = H.dim, actM.shape[1], actN.shape[1]
    return ein("hab,anm,bpq->hnpmq", H.c, actM, actN).reshape(d, mM * mN, mM * mN)


def element_action(x, actM, actN):
    """Action of a tensor ``x`` in H (x) H on M (x) N."""
    mM, mN = actM.shape[1], actN.shape[1]
    return ein("ab,anm,bpq->npmq", x, actM, actN).reshape(mM * mN, mM * mN)


def truncated_tensor(H, M, N):
    """``M (x)_t N`` for left modules, or ``(M (x) N) Delta(1)`` for right ones."""
    if M.side != N.side:
        raise ValueError("cannot tensor a left and a right module")
    F = H.field
    P = element_action(H.one_coproduct, M.action, N.action)
    B = Subspace.from_columns(P, F)
    diag = diagonal_action(H, M.action, N.action)
    rep = VerificationReport("truncated_tensor")
    rep.add(compare("projector_idempotent", (P @ P).T, P.T, 1, F))
    rep.add(compare("projector_commutes_with_action", ein("nk,hkm->hmn", P, diag),
                    ein("hnk,km->hmn", diag, P), 2, F))
    act = ein("ix,hxy,yj->hij", B.select, diag, B.incl) if B.dim else F.zeros((H.dim, 0, 0))
    return TruncatedTensor(M.dim, N.dim, P, B, diag, HModule(B.dim, act, M.side), rep)


def tensor_associativity(H, M, N, P):
    """Both bracketings of M (x)_t N (x)_t P have the same projector."""
    F = H.field
    mn = truncated_tensor(H, M, N)
    np_ = truncated_tensor(H, N, P)
    D1 = H.one_coproduct
    left = element_action(D1, mn.diagonal, P.action) @ kron(mn.projector, F.eye(P.dim))
    right = element_action(D1, M.action, np_.diagonal) @ kron(F.eye(M.dim), np_.projector)
    d2 = ein("xz,xab->abz", D1, H.c)
    direct = ein("abz,anm,bpq,zrs->nprmqs", d2, M.action, N.action, P.action)
    n = M.dim * N.dim * P.dim
    direct = direct.reshape(n, n)
    return compare("tensor_associativity", np.stack([left.T, right.T], 1),
                   np.stack([direct.T, direct.T], 1), 1, F)


def target_module(H):
    """H_t with the left action h -> eps_t(h z), in echelon coordinates."""
    Z = H.Ht
    act = ein("ix,xy,hzy,jz->hij", Z.select, H.eps_t, H.m, Z.basis)
    return HModule(Z.dim, act, "left")


# ---------------------------------------------------------------------------
# unit constraints


@dataclass(frozen=True, eq=False)
class UnitConstraints:
    """Ambient matrices of l_M, l_M^-1, r_M, r_M^-1.

    ``l`` maps Ht (x) M -> M, ``l_inv`` maps M -> Ht (x) M (landing in the
    truncated image), and likewise for ``r`` on M (x) Ht.
    """

    target: HModule
    left_space: TruncatedTensor
    right_space: TruncatedTensor
    l: object
    l_inv: object
    r: object
    r_inv: object
    report: VerificationReport


def left_unit_maps(H, M):
    Z = H.Ht
    r, n = Z.dim, M.dim
    l_amb = ein("jx,xnm->njm", Z.basis, M.action).reshape(n, r * n)
    tcoord = Z.coords(H.eps_t.T)  # [a, j]: coordinates of eps_t(e_a)
    l_inv = ein("ab,aj,bnm->jnm", H.one_coproduct, tcoord, M.action).reshape(r * n, n)
    return l_amb, l_inv


def right_unit_maps(H, M):
    Z = H.Ht
    r, n = Z.dim, M.dim
    sb = ein("xy,jy->jx", H.eps_s_bar, Z.basis)
    r_amb = ein("jx,xnm->nmj", sb, M.action).reshape(n, n * r)
    second = Z.coords(H.one_coproduct)  # [a, j]: 1_(2) in H_t coordinates
    r_inv = ein("aj,anm->njm", second, M.action).reshape(n * r, n)
    return r_amb, r_inv


def unit_constraints(H, M, N=None):
    """l_M, r_M and inverses with their verification.

    With ``N`` given, the triangle (r_M (x) N) = (M (x) l_N) on
    M (x)_t H_t (x)_t N is checked too.
    """
    F = H.field
    T = target_module(H)
    TM = truncated_tensor(H, T, M)
    MT = truncated_tensor(H, M, T)
    l_amb, l_inv = left_unit_maps(H, M)
    r_amb, r_inv = right_unit_maps(H, M)
    rep = VerificationReport("unit_constraints")
    I = F.eye(M.dim)
    for nm, X, Xi, sp in (("left", l_amb, l_inv, TM), ("right", r_amb, r_inv, MT)):
        inc = sp.basis.incl
        rep.add(compare("%s_unit_well_defined" % nm, (X @ sp.projector).T, X.T, 1, F))
        rep.add(compare("%s_unit_inverse_in_image" % nm, (sp.projector @ Xi).T, Xi.T, 1, F))
        rep.add(compare("%s_unit_then_inverse" % nm, (X @ Xi).T, I, 1, F))
        rep.add(compare("%s_inverse_then_unit" % nm, (Xi @ X @ inc).T, inc.T, 1, F))
        rep.add(compare("%s_unit_linear" % nm, ein("nk,hkx,xj->hjn", X, sp.diagonal, inc),
                        ein("hnk,kj->hjn", M.action, X @ inc), 2, F))
        rep.add(compare("%s_unit_inverse_linear" % nm, ein("kn,hnm->hmk", Xi, M.action),
                        ein("hkn,nm->hmk", sp.diagonal, Xi), 2, F))
    if N is not None:
        rep.add(triangle_check(H, M, N, T))
    return UnitConstraints(T, TM, MT, l_amb, l_inv, r_amb, r_inv, rep)


def triangle_check(H, M, N, T=None):
    """(r_M (x) id_N) = (id_M (x) l_N) on M (x)_t H_t (x)_t N."""
    F = H.field
    T = T or target_module(H)
    D1 = H.one_coproduct
    d2 = ein("xz,xab->abz", D1, H.c)
    n = M.dim * T.dim * N.dim
    P3 = ein("abz,anm,bpq,zrs->nprmqs", d2, M.action, T.action, N.action).reshape(n, n)
    B = Subspace.from_columns(P3, F)
    r_amb, _ = right_unit_maps(H, M)
    l_amb, _ = left_unit_maps(H, N)
    lhs = kron(r_amb, F.eye(N.dim)) @ B.incl
    rhs = kron(F.eye(M.dim), l_amb) @ B.incl
    return compare("triangle", lhs.T, rhs.T, 1, F)


# ---------------------------------------------------------------------------
# tensor product over H_t


@dataclass(frozen=True, eq=False)
class TensorOverHt:
    relations: Subspace
    quotient: object  # Q: ambient -> quotient coordinates
    lift: object
    truncated: TruncatedTensor
    pibar: object  # quotient coords -> truncated image coords
    pibar_inv: object
    report: VerificationReport

    @property
    def dim(self):
        return self.quotient.shape[0]


def tensor_over_Ht(H, M, N):
    """M (x)_{H_t} N as a quotient of M (x) N and the comparison map to M (x)_t N."""
    F = H.field
    Z = H.Ht
    sb = ein("xy,jy->jx", H.eps_s_bar, Z.basis)  # eps_s_bar(z_j)
    right_z = ein("jx,xnm->jnm", sb, M.action)  # m . z_j
    left_z = ein("jx,xnm->jnm", Z.basis, N.action)
    rels = []
    for j in range(Z.dim):
        for a in range(M.dim):
            for b in range(N.dim):
                v = np.multiply.outer(right_z[j][:, a], F.eye(N.dim)[b]) \
                    - np.multiply.outer(F.eye(M.dim)[a], left_z[j][:, b])
                rels.append(v.reshape(-1))
    Rel = Subspace.from_rows(np.array(rels, dtype=object) if rels else [], F, M.dim * N.dim)
    Q, L = Rel.quotient_maps()
    tt = truncated_tensor(H, M, N)
    pibar = tt.basis.select @ tt.projector @ L
    pibar_inv = Q @ tt.basis.incl
    rep = VerificationReport("tensor_over_Ht")
    rep.add(holds("projection_kills_relations",
                  is_zero(tt.projector @ Rel.incl) if Rel.dim else True))
    rep.add(holds("dimensions_agree", Q.shape[0] == tt.dim,
                  "quotient %d vs truncated %d" % (Q.shape[0], tt.dim)))
    if Q.shape[0] == tt.dim:
        rep.add(compare("pibar_then_inverse", (pibar_inv @ pibar).T, F.eye(tt.dim), 1, F))
        rep.add(compare("inverse_then_pibar", (pibar @ pibar_inv).T, F.eye(tt.dim), 1, F))
    # left H_t-linearity
    actQ = []
    for j in range(Z.dim):
        A = kron(ein("x,xnm->nm", Z.basis[j], M.action), F.eye(N.dim))
        if Rel.dim:
            inv = is_zero(Q @ A @ Rel.incl)
        else:
            inv = True
        if not inv:
            rep.add(holds("relations_stable_under_target", False, "z index %d" % j))
        actQ.append(Q @ A @ L)
    if Z.dim:
        actQ = np.array(actQ, dtype=object)
        actT = ein("jx,xab->jab", Z.basis, tt.module.action)
        rep.add(compare("pibar_target_linear", ein("ik,jkl->jli", pibar, actQ),
                        ein("jik,kl->jli", actT, pibar), 2, F))
    return TensorOverHt(Rel, Q, L, tt, pibar, pibar_inv, rep)
