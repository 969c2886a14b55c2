"""Antipodes, groupoid algebras and duals of weak Hopf algebras."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exactlin import QQ, ein, equal, inverse, solve_linear
from .report import VerificationReport, compare, holds
from .weakbialg import (AlgebraData, CoalgebraData, WeakBialgebra, counital_data,
                        verify_weak_bialgebra)


class MalformedGroupoid(ValueError):
    pass


class AntipodeError(ValueError):
    pass


class AntipodeNotFound(AntipodeError):
    pass


class AntipodeAmbiguous(AntipodeError):
    pass


class AntipodeNotBijective(AntipodeError):
    pass


class WeakHopfAlgebra(WeakBialgebra):
    """Weak bialgebra with a bijective antipode ``S`` (matrix ``[out, in]``)."""

    def __init__(self, alg, coalg, S, S_inv=None):
        super().__init__(alg, coalg)
        F = self.field
        self.S = F.array(S)
        if S_inv is None:
            try:
                S_inv = inverse(self.S, F)
            except ValueError:
                raise AntipodeNotBijective("antipode is not invertible") from None
        self.S_inv = F.array(S_inv)

    @property
    def base(self):
        return WeakBialgebra(self.alg, self.coalg)

    @cached_property
    def S2_inv(self):
        return self.S_inv @ self.S_inv

    def opposite(self):
        """H^op: opposite multiplication, same coalgebra, antipode S^-1."""
        return WeakHopfAlgebra(self.alg.opposite(), self.coalg, self.S_inv, self.S)


def convolution(H, f, g):
    """Matrix of f * g = mu (f (x) g) Delta."""
    return ein("hpq,ap,bq,abx->xh", H.c, f, g, H.m)


# ---------------------------------------------------------------------------
# groupoids


@dataclass(frozen=True)
class Groupoid:
    """Finite groupoid; ``compose[(g, h)]`` is g o h, defined iff s(g) = t(h)."""

    objects: tuple
    morphisms: tuple
    source: dict
    target: dict
    compose: dict
    inverse: dict

    def identity(self, x):
        for g in self.morphisms:
            if self.source[g] == x and self.target[g] == x and all(
                    self.compose.get((g, h)) == h for h in self.morphisms
                    if self.target[h] == x):
                return g
        raise MalformedGroupoid("object %r has no identity morphism" % (x,))

    def validate(self):
        objs, mors = set(self.objects), self.morphisms
        if len(set(mors)) != len(mors):
            raise MalformedGroupoid("repeated morphism names")
        for g in mors:
            if self.source.get(g) not in objs or self.target.get(g) not in objs:
                raise MalformedGroupoid("morphism %r has unknown source or target" % (g,))
        for g in mors:
            for h in mors:
                defined = (g, h) in self.compose
                if defined != (self.source[g] == self.target[h]):
                    raise MalformedGroupoid("composition of (%r, %r) defined=%s"
                                            % (g, h, defined))
                if defined:
                    gh = self.compose[(g, h)]
                    if gh not in mors or self.source[gh] != self.source[h] \
                            or self.target[gh] != self.target[g]:
                        raise MalformedGroupoid("bad composite for (%r, %r)" % (g, h))
        for g in mors:
            for h in mors:
                for k in mors:
                    if (g, h) in self.compose and (h, k) in self.compose:
                        a = self.compose[(self.compose[(g, h)], k)]
                        b = self.compose[(g, self.compose[(h, k)])]
                        if a != b:
                            raise MalformedGroupoid("not associative on (%r, %r, %r)"
                                                    % (g, h, k))
        ids = {x: self.identity(x) for x in self.objects}
        for g in mors:
            if self.compose.get((g, ids[self.source[g]])) != g:
                raise MalformedGroupoid("identity fails on the right of %r" % (g,))
            gi = self.inverse.get(g)
            if gi not in mors or self.compose.get((g, gi)) != ids[self.target[g]] \
                    or self.compose.get((gi, g)) != ids[self.source[g]]:
                raise MalformedGroupoid("bad inverse for %r" % (g,))
        return self


def _groupoid(objects, morphisms, src, tgt, comp_fn):
    compose, inv = {}, {}
    for g in morphisms:
        for h in morphisms:
            if src[g] == tgt[h]:
                compose[(g, h)] = comp_fn(g, h)
    ids = {}
    for x in objects:
        ids[x] = next(g for g in morphisms if src[g] == tgt[g] == x
                      and all(compose.get((g, h)) == h for h in morphisms if tgt[h] == x))
    for g in morphisms:
        inv[g] = next(h for h in morphisms if compose.get((g, h)) == ids[tgt[g]])
    return Groupoid(tuple(objects), tuple(morphisms), src, tgt, compose, inv).validate()


def cyclic_group(n):
    """Z_n as a one-object groupoid with morphisms g^0, ..., g^(n-1)."""
    mors = ["g^%d" % i for i in range(n)]
    src = {g: "*" for g in mors}
    return _groupoid(["*"], mors, src, dict(src),
                     lambda g, h: "g^%d" % ((int(g[2:]) + int(h[2:])) % n))


def symmetric_group(n):
    """S_n with permutations named by their images, e.g. ``s120``."""
    from itertools import permutations
    perms = list(permutations(range(n)))
    name = {q: "s" + "".join(map(str, q)) for q in perms}
    back = {v: q for q, v in name.items()}
    src = {name[q]: "*" for q in perms}
    return _groupoid(["*"], [name[q] for q in perms], src, dict(src),
                     lambda g, h: name[tuple(back[g][i] for i in back[h])])


def discrete_groupoid(k):
    """k objects and only identity morphisms."""
    objs = [str(i + 1) for i in range(k)]
    mors = ["id_" + x for x in objs]
    src = {g: g[3:] for g in mors}
    return _groupoid(objs, mors, src, dict(src), lambda g, h: g)


def pair_groupoid(k):
    """One morphism ``s->t`` between any two objects; identities are ``id_x``."""
    objs = [str(i + 1) for i in range(k)]
    pairs = [(x, x) for x in objs] + [(s, t) for s in objs for t in objs if s != t]
    name = {p: ("id_" + p[0]) if p[0] == p[1] else "%s->%s" % p for p in pairs}
    mors = [name[p] for p in pairs]
    back = {v: k_ for k_, v in name.items()}
    src = {name[p]: p[0] for p in pairs}
    tgt = {name[p]: p[1] for p in pairs}
    return _groupoid(objs, mors, src, tgt,
                     lambda g, h: name[(back[h][0], back[g][1])])


def groupoid_algebra(G, field=QQ):
    """kG: basis = morphisms, gh = g o h or 0, Delta(g) = g (x) g, S(g) = g^-1."""
    G.validate()
    F = field
    idx = {g: i for i, g in enumerate(G.morphisms)}
    d = len(idx)
    mult, comult = F.zeros((d, d, d)), F.zeros((d, d, d))
    unit, counit = F.zeros(d), F.array([1] * d)
    S = F.zeros((d, d))
    for (g, h), gh in G.compose.items():
        mult[idx[g], idx[h], idx[gh]] = F.one()
    for g, i in idx.items():
        comult[i, i, i] = F.one()
        S[idx[G.inverse[g]], i] = F.one()
    for x in G.objects:
        unit[idx[G.identity(x)]] = F.one()
    return WeakHopfAlgebra(AlgebraData(d, mult, unit, F), CoalgebraData(d, comult, counit, F), S)


# ---------------------------------------------------------------------------
# antipode


@dataclass(frozen=True, eq=False)
class AntipodeResult:
    status: str  # found | not_found | ambiguous | not_bijective
    S: object = None
    solutions: object = None
    detail: str = ""

    def unwrap(self):
        if self.status == "found":
            return self.S
        err = {"not_found": AntipodeNotFound, "ambiguous": AntipodeAmbiguous,
               "not_bijective": AntipodeNotBijective}[self.status]
        raise err(self.detail or self.status)


def solve_antipode(H, sandwich=True):
    """Solve for the antipode as an exact linear system in the d^2 entries of S.

    The equations are S*id = eps_s and id*S = eps_t.  Given the first one,
    S*id*S = eps_s*S, so the third axiom is the linear equation eps_s*S = S;
    it is stacked in unless ``sandwich=False``, in which case only the two
    convolution equations are solved and the third is checked afterwards.
    """
    F, d = H.field, H.dim
    K1 = ein("hpq,aqx->hxap", H.c, H.m).reshape(d * d, d * d)
    K2 = ein("hpq,pax->hxaq", H.c, H.m).reshape(d * d, d * d)
    blocks = [K1, K2]
    rhs = [H.eps_s.T.reshape(-1), H.eps_t.T.reshape(-1)]
    if sandwich:
        K3 = ein("hpq,ap,abx->hxbq", H.c, H.eps_s, H.m).reshape(d * d, d * d)
        E = ein("xa,hp->hxap", F.eye(d), F.eye(d)).reshape(d * d, d * d)
        blocks.append(K3 - E)
        rhs.append(F.zeros(d * d))
    A = np.concatenate(blocks)
    b = np.concatenate(rhs)
    sol = solve_linear(A, b, F)
    if sol.empty:
        return AntipodeResult("not_found", solutions=sol, detail="linear system inconsistent")
    if not sol.unique:
        return AntipodeResult("ambiguous", solutions=sol,
                              detail="solution space of dimension %d" % sol.kernel.dim)
    S = sol.particular.reshape(d, d)
    if not equal(convolution(H, convolution(H, S, F.eye(d)), S), S):
        return AntipodeResult("not_found", solutions=sol, detail="S*id*S != S")
    try:
        inverse(S, F)
    except ValueError:
        return AntipodeResult("not_bijective", S=S, solutions=sol,
                              detail="solution is not invertible")
    return AntipodeResult("found", S=S, solutions=sol)


def verify_weak_hopf(H):
    """Every antipode identity, as exact matrix equalities."""
    F, d = H.field, H.dim
    m, u, c, e = H.m, H.u, H.c, H.e
    S, Si = H.S, H.S_inv
    I = F.eye(d)
    D1 = H.one_coproduct
    Et, Es, Ebt, Ebs = H.eps_t, H.eps_s, H.eps_t_bar, H.eps_s_bar
    c3 = H.comult2
    Z, Y = H.Ht.basis, H.Hs.basis
    rep = VerificationReport("hopf")
    T = lambda X: np.asarray(X, dtype=object).T  # noqa: E731  (column h first)
    rep.add(compare("antipode_left_convolution", T(convolution(H, S, I)), T(Es), 1, F))
    rep.add(compare("antipode_right_convolution", T(convolution(H, I, S)), T(Et), 1, F))
    rep.add(compare("antipode_sandwich", T(convolution(H, convolution(H, S, I), S)), T(S), 1, F))
    rep.add(compare("antipode_absorbs_counital_maps",
                    np.stack([T(convolution(H, Es, S)), T(convolution(H, S, Et))], 1),
                    np.stack([T(S), T(S)], 1), 1, F))
    rep.add(compare("antipode_bijective", np.stack([T(S @ Si), T(Si @ S)], 1),
                    np.stack([I, I], 1), 1, F))
    rep.add(compare("antipode_anti_multiplicative", ein("hgy,xy->hgx", m, S),
                    ein("ag,bh,abx->hgx", S, S, m), 2, F))
    rep.add(compare("antipode_unital", S @ u, u, 0, F))
    rep.add(compare("antipode_anti_comultiplicative", ein("yh,yab->hab", S, c),
                    ein("hpq,aq,bp->hab", c, S, S), 1, F))
    rep.add(compare("antipode_counital", e @ S, e, 0, F))
    first = ein("xy,hgy->hgx", Et, m)
    rep.add(compare("target_map_of_product",
                    np.stack([first, first], 2),
                    np.stack([ein("xy,hzy,zg->hgx", Et, m, Et),
                              ein("hpq,pzw,zg,vq,wvx->hgx", c, m, Et, S, m)], 2), 2, F))
    first = ein("xy,hgy->hgx", Es, m)
    rep.add(compare("source_map_of_product",
                    np.stack([first, first], 2),
                    np.stack([ein("xy,zgy,zh->hgx", Es, m, Es),
                              ein("gpq,ap,zh,azw,wqx->hgx", c, S, Es, m, m)], 2), 2, F))
    rep.add(compare("comultiplication_of_target_map", ein("yh,yab->hab", Et, c),
                    ein("hpqr,vr,pva,bq->hab", c3, S, m, Et), 1, F))
    rep.add(compare("comultiplication_of_source_map", ein("yh,yab->hab", Es, c),
                    ein("hpqr,aq,vp,vrb->hab", c3, Es, S, m), 1, F))
    forms_t = [ein("ah,px,apy,y->xh", S, D1, m, e), ein("pq,qhy,y,xp->xh", D1, m, e, S),
               S @ Ebs]
    rep.add(compare("target_map_via_antipode", np.stack([T(f) for f in forms_t], 1),
                    np.stack([T(Et)] * 3, 1), 1, F))
    forms_s = [ein("xq,ah,qay,y->xh", D1, S, m, e), ein("pq,hpy,y,xq->xh", D1, m, e, S),
               S @ Ebt]
    rep.add(compare("source_map_via_antipode", np.stack([T(f) for f in forms_s], 1),
                    np.stack([T(Es)] * 3, 1), 1, F))
    rep.add(compare("target_map_split", ein("hpb,ap->hab", c, Et),
                    ein("pq,ap,qhb->hab", D1, S, m), 1, F))
    rep.add(compare("source_map_split", ein("haq,bq->hab", c, Es),
                    ein("pq,hpa,bq->hab", D1, m, S), 1, F))
    rep.add(compare("target_map_compositions", np.stack([T(Et @ S), T(Et @ S)], 1),
                    np.stack([T(Et @ Es), T(S @ Es)], 1), 1, F))
    rep.add(compare("source_map_compositions", np.stack([T(Es @ S), T(Es @ S)], 1),
                    np.stack([T(Es @ Et), T(S @ Et)], 1), 1, F))
    rep.add(compare("antipode_on_target_space", (S @ Z.T).T, (Es @ Z.T).T, 1, F))
    rep.add(compare("inverse_antipode_on_source_space", (Si @ Y.T).T, (Ebt @ Y.T).T, 1, F))
    rep.add(holds("antipode_maps_target_onto_source", H.Ht.image(S) == H.Hs))
    rep.add(compare("separability_idempotents_via_antipode",
                    np.stack([H.e_t, H.e_s]),
                    np.stack([ein("pq,ap->aq", D1, S), ein("pq,bq->pb", D1, S)]), 0, F))
    rep.add(compare("target_unit_shift", ein("pb,vz,jz,pva->jab", D1, Si, Z, m),
                    ein("aq,qzb,jz->jab", D1, m, Z), 1, F))
    rep.add(compare("target_antipode_balance", ein("jz,zsa,sp,pb->jab", Z, m, S, D1),
                    ein("ap,pq,qzb,jz->jab", S, D1, m, Z), 1, F))
    rep.add(compare("source_unit_shift", ein("jy,ypa,pb->jab", Y, m, D1),
                    ein("aq,jy,vy,vqb->jab", D1, Y, Si, m), 1, F))
    return rep


def full_hopf_report(H):
    """Bialgebra axioms, counital data and antipode identities in one report."""
    rep = VerificationReport("hopf")
    brep, B = verify_weak_bialgebra(H.alg, H.coalg)
    rep.extend(brep, "bialgebra")
    if B is None:
        return rep
    _, crep = counital_data(H)
    rep.extend(crep, "counital")
    rep.extend(verify_weak_hopf(H), "antipode")
    return rep


def dual_weak_hopf(H):
    """H* with the coordinate dual basis."""
    F, d = H.field, H.dim
    alg = AlgebraData(d, ein("kij->ijk", H.c), H.e.copy(), F)
    coalg = CoalgebraData(d, ein("ijk->kij", H.m), H.u.copy(), F)
    return WeakHopfAlgebra(alg, coalg, H.S.T.copy(), H.S_inv.T.copy())


def hit_tensor(H):
    """``T[h, phi, k, l]``: coefficient of delta_l in h -> delta_phi <- k."""
    return ein("kls,shp->hpkl", H.m, H.m)


def hit_actions(H, h, hstar, k):
    """h -> h* <- k, i.e. the covector l |-> <h*, k l h>."""
    return ein("a,als,sby,b,y->l", k, H.m, H.m, h, hstar)
