"""Profunctors (relators) between finite categories.

A profunctor ``P: A ⇸ B`` is a set-valued functor on A^op × B. Composition
is written in diagrammatic order: ``pro_compose(P, Q)`` for P: A ⇸ B and
Q: B ⇸ C is the relator (a, c) ↦ ∫^b P(a, b) × Q(b, c).

2-cells are :class:`SetNat` instances between the underlying functors.
"""

import numpy as np

from .coend import (
    ComparisonWitness,
    ParamCoend,
    ParamEnd,
    failed_witness,
    integrand,
    natural_witness,
)
from .errors import NotWellDefined, ShapeMismatch
from .fincat import (
    FinCategory,
    FinFunctor,
    category_of_elements,
    identity_functor,
    isomorphism_verdict,
    natural_transformations,
    op_times,
    opposite,
    product,
    terminal,
)
from .kanweighted import nat_bijection
from .setfun import (
    FinMap,
    FinSet,
    SetNat,
    SetValuedFunctor,
    function_set,
    hom_functor,
    product_set,
    set_natural_transformations,
)
from .verdict import Verdict


def pro_base(A, B):
    return op_times(A) if A is B else product(opposite(A), B)


class Profunctor:
    def __init__(self, A, B, data, name=None, check=False):
        self.A, self.B = A, B
        self.data = data
        self.name = name or data.name
        if check:
            data.validate()

    def __repr__(self):
        return f"Profunctor({self.name}: {self.A.name} ⇸ {self.B.name})"

    @classmethod
    def from_callables(cls, A, B, ob, ar, name=None, check=True):
        """``ob(a, b)``; ``ar(f, g, x)`` for f: a' → a in A and g: b → b' in B."""
        data = SetValuedFunctor(pro_base(A, B), lambda ab: ob(*ab),
                                lambda fg, x: ar(fg[0], fg[1], x), check=False,
                                name=name or "P")
        return cls(A, B, data, name, check=check)

    def ob(self, a, b):
        return self.data.ob((a, b))

    def ar(self, f, g):
        return self.data.ar((f, g))

    def validate(self):
        self.data.validate()
        return self

    def cardinalities(self):
        """|P(a, b)| as an integer matrix, rows indexed by A, columns by B."""
        return np.array([[len(self.ob(a, b)) for b in self.B.objects]
                         for a in self.A.objects], dtype=np.int64).reshape(
                             len(self.A.objects), len(self.B.objects))

    def as_presheaf(self):
        """A profunctor C ⇸ 1 read as a presheaf on C."""
        (star,) = self.B.objects
        Cop = opposite(self.A)
        idB = self.B.identity(star)
        return SetValuedFunctor(Cop, lambda c: self.ob(c, star),
                                lambda f, x: self.ar(f, idB)(x), check=False,
                                name=self.name)

    def as_copresheaf(self):
        """A profunctor 1 ⇸ C read as a copresheaf on C."""
        (star,) = self.A.objects
        idA = self.A.identity(star)
        return SetValuedFunctor(self.B, lambda c: self.ob(star, c),
                                lambda g, x: self.ar(idA, g)(x), check=False,
                                name=self.name)


def from_presheaf(X):
    C = opposite(X.base)
    one = terminal()
    return Profunctor.from_callables(C, one, lambda c, _: X.ob(c),
                                     lambda f, _, x: X.ar(f)(x), name=X.name, check=False)


def from_copresheaf(Y):
    one = terminal()
    return Profunctor.from_callables(one, Y.base, lambda _, c: Y.ob(c),
                                     lambda _, g, x: Y.ar(g)(x), name=Y.name, check=False)


def hom_pro(A):
    """The identity relator hom_A: A ⇸ A."""
    return Profunctor(A, A, hom_functor(A), name=f"hom_{A.name}")


def pro_compose(P, Q):
    """(a, c) ↦ ∫^b P(a, b) × Q(b, c); elements are ``(b, (p, q))``.

    The action on arrows is computed on representatives and re-verified
    to be well defined on classes before returning.
    """
    if [*P.B.objects] != [*Q.A.objects]:
        raise ShapeMismatch("middle categories do not match")
    A, B, C = P.A, P.B, Q.B

    def ob(b1, b, ac):
        return product_set(P.ob(ac[0], b), Q.ob(b1, ac[1]))

    def ar(m, pq):
        f, g, (alpha, gamma) = m
        return (P.ar(alpha, g)(pq[0]), Q.ar(f, gamma)(pq[1]))

    data = ParamCoend(integrand(B, pro_base(A, C), ob, ar), B, pro_base(A, C),
                      name=f"{P.name};{Q.name}")
    data.verify_actions()
    return Profunctor(A, C, data)


# ---------------------------------------------------------------- 2-cells


def cell(P, Q, fn):
    """The 2-cell P ⇒ Q with components x ↦ fn((a, b), x)."""
    return SetNat(P.data, Q.data,
                  {ab: FinMap(P.data.ob(ab), Q.data.ob(ab),
                              {x: fn(ab, x) for x in P.data.ob(ab)}, check=False)
                   for ab in P.data.base.objects}, check=False)


def descended_cell(PQ, T, fn):
    """A 2-cell out of a composite, defined on tagged elements ``fn(ab, b, x)``
    and checked constant on coend classes (raises NotWellDefined)."""
    comps = {}
    for ab in PQ.data.base.objects:
        comps[ab] = PQ.data.at(ab).descend(lambda b, x, ab=ab: fn(ab, b, x), T.data.ob(ab))
    return SetNat(PQ.data, T.data, comps, check=False)


def cell_witness(name, sigma, trace):
    return natural_witness(name, sigma.source, sigma.target, sigma.components, trace)


def hcompose(sigma, tau, PQ, PQ2):
    """σ ⋄ τ: P;Q ⇒ P';Q' for σ: P ⇒ P' and τ: Q ⇒ Q'."""
    return descended_cell(PQ, PQ2, lambda ac, b, pq: PQ2.data.cls(
        ac, b, (sigma[(ac[0], b)](pq[0]), tau[(b, ac[1])](pq[1]))))


def identity_cell(P):
    return SetNat.identity(P.data)


def left_unitor(P, HP=None):
    """λ: hom_A;P ⇒ P, [x, (u, p)] ↦ P(u, id)(p)."""
    HP = HP or pro_compose(hom_pro(P.A), P)
    return HP, descended_cell(HP, P, lambda ab, x, up: P.ar(up[0], P.B.identity(ab[1]))(up[1]))


def right_unitor(P, PH=None):
    """ρ: P;hom_B ⇒ P, [x, (p, v)] ↦ P(id, v)(p)."""
    PH = PH or pro_compose(P, hom_pro(P.B))
    return PH, descended_cell(PH, P, lambda ab, x, pv: P.ar(P.A.identity(ab[0]), pv[1])(pv[0]))


def left_unitor_inv(P, HP):
    return cell(P, HP, lambda ab, p: HP.data.cls(ab, ab[0], (P.A.identity(ab[0]), p)))


def right_unitor_inv(P, PH):
    return cell(P, PH, lambda ab, p: PH.data.cls(ab, ab[1], (p, P.B.identity(ab[1]))))


def associator(P, Q, R, PQ_R=None, P_QR=None, QR=None):
    """(P;Q);R ⇒ P;(Q;R), [y, ([x, (p, q)], r)] ↦ [x, (p, [y, (q, r)])].

    Returns ``(source, target, cell)``; pass already-built composites to
    share their coend carriers.
    """
    PQ_R = PQ_R or pro_compose(pro_compose(P, Q), R)
    QR = QR or pro_compose(Q, R)
    P_QR = P_QR or pro_compose(P, QR)

    def fn(ad, y, inner_r):
        (x, (p, q)), r = inner_r
        return P_QR.data.cls(ad, x, (p, QR.data.cls((x, ad[1]), y, (q, r))))

    return PQ_R, P_QR, descended_cell(PQ_R, P_QR, fn)


def associator_inv(P, Q, R, P_QR, PQ_R, PQ):
    def fn(ad, x, p_inner):
        p, (y, (q, r)) = p_inner
        return PQ_R.data.cls(ad, y, (PQ.data.cls((ad[0], y), x, (p, q)), r))

    return descended_cell(P_QR, PQ_R, fn)


def unitor_witnesses(P):
    """Both unitors, verified well defined, bijective and natural."""
    out = []
    for name, build in (("left-unitor", left_unitor), ("right-unitor", right_unitor)):
        try:
            _, c = build(P)
        except NotWellDefined as e:
            out.append(failed_witness(name, ["ninja Yoneda"], str(e), e.witness))
            continue
        out.append(cell_witness(name, c, ["ninja Yoneda", "coend cowedge"]))
    return out


def associator_witness(P, Q, R):
    try:
        _, _, a = associator(P, Q, R)
    except NotWellDefined as e:
        return failed_witness("associator", ["Fubini"], str(e), e.witness)
    return cell_witness("associator", a, ["Fubini", "coends commute with products"])


def pentagon(P, Q, R, S):
    """Both routes ((P;Q);R);S ⇒ P;(Q;(R;S)) through associators agree."""
    PQ = pro_compose(P, Q)
    QR = pro_compose(Q, R)
    RS = pro_compose(R, S)
    PQ_R = pro_compose(PQ, R)
    PQR_S = pro_compose(PQ_R, S)
    PQ_RS = pro_compose(PQ, RS)
    QR_S = pro_compose(QR, S)
    Q_RS = pro_compose(Q, RS)
    P_QR = pro_compose(P, QR)
    P_QR_S = pro_compose(P_QR, S)
    P__QR_S = pro_compose(P, QR_S)
    P_Q_RS = pro_compose(P, Q_RS)
    try:
        # top route: α_{PQ,R,S} then α_{P,Q,RS}
        _, _, a1 = associator(PQ, R, S, PQR_S, PQ_RS, RS)
        _, _, a2 = associator(P, Q, RS, PQ_RS, P_Q_RS, Q_RS)
        top = a1.then(a2)
        # bottom route: (α_{P,Q,R};S), α_{P,QR,S}, (P;α_{Q,R,S})
        _, _, aPQR = associator(P, Q, R, PQ_R, P_QR, QR)
        b1 = hcompose(aPQR, identity_cell(S), PQR_S, P_QR_S)
        _, _, b2 = associator(P, QR, S, P_QR_S, P__QR_S, QR_S)
        _, _, aQRS = associator(Q, R, S, QR_S, Q_RS, RS)
        b3 = hcompose(identity_cell(P), aQRS, P__QR_S, P_Q_RS)
        bottom = b1.then(b2).then(b3)
    except NotWellDefined as e:
        return Verdict.failed(e.witness, str(e))
    for k in PQR_S.data.base.objects:
        for x in PQR_S.data.ob(k):
            if top[k](x) != bottom[k](x):
                return Verdict.failed((k, x), "pentagon does not commute")
    return Verdict.passed()


def unitor_naturality(sigma, P, P2):
    """λ_{P'}∘(hom;σ) = σ∘λ_P and the same for ρ, for a 2-cell σ: P ⇒ P'."""
    HP, lP = left_unitor(P)
    HP2, lP2 = left_unitor(P2)
    PH, rP = right_unitor(P)
    PH2, rP2 = right_unitor(P2)
    idA, idB = identity_cell(hom_pro(P.A)), identity_cell(hom_pro(P.B))
    for lhs, rhs, src in ((hcompose(idA, sigma, HP, HP2).then(lP2), lP.then(sigma), HP),
                          (hcompose(sigma, idB, PH, PH2).then(rP2), rP.then(sigma), PH)):
        for k in src.data.base.objects:
            for x in src.data.ob(k):
                if lhs[k](x) != rhs[k](x):
                    return Verdict.failed((k, x), "unitor is not natural")
    return Verdict.passed()


def associator_naturality(sigma, P, P2, Q, R):
    """α∘((σ;Q);R) = (σ;(Q;R))∘α for σ: P ⇒ P'."""
    PQ, PQ2, QR = pro_compose(P, Q), pro_compose(P2, Q), pro_compose(Q, R)
    src, trg, a = associator(P, Q, R, QR=QR)
    src2, trg2, a2 = associator(P2, Q, R, QR=QR)
    idQ, idR, idQR = identity_cell(Q), identity_cell(R), identity_cell(QR)
    left = hcompose(hcompose(sigma, idQ, PQ, PQ2), idR, src, src2).then(a2)
    right = a.then(hcompose(sigma, idQR, trg, trg2))
    for k in src.data.base.objects:
        for x in src.data.ob(k):
            if left[k](x) != right[k](x):
                return Verdict.failed((k, x), "associator is not natural")
    return Verdict.passed()


# ------------------------------------------------------------ embeddings


def embed_cov(F):
    """P_F = B(−, F=): B ⇸ A for F: A → B."""
    A, B = F.source, F.target
    return Profunctor.from_callables(
        B, A, lambda b, a: B.hom(b, F.ob(a)),
        lambda f, g, u: B.compose_path(F.ar(g), u, f), name=f"P_{F.name}", check=False)


def embed_contra(F):
    """P^F = B(F−, =): A ⇸ B for F: A → B."""
    A, B = F.source, F.target
    return Profunctor.from_callables(
        A, B, lambda a, b: B.hom(F.ob(a), b),
        lambda f, g, u: B.compose_path(g, u, F.ar(f)), name=f"P^{F.name}", check=False)


def pseudofunctoriality(G, F):
    """P_{FG} ≅ P_F;P_G and P^{FG} ≅ P^G;P^F for G: A → B, F: B → C."""
    FG = G.then(F)
    C = F.target
    out = []
    try:
        comp = pro_compose(embed_cov(F), embed_cov(G))
        tgt = embed_cov(FG)
        c1 = descended_cell(comp, tgt, lambda ca, b, uv: C.compose(F.ar(uv[1]), uv[0]))
        out.append(cell_witness("pseudofunctor-cov", c1, ["composition cowedge"]))
    except NotWellDefined as e:
        out.append(failed_witness("pseudofunctor-cov", [], str(e), e.witness))
    try:
        comp = pro_compose(embed_contra(G), embed_contra(F))
        tgt = embed_contra(FG)
        c2 = descended_cell(comp, tgt, lambda ac, b, vu: C.compose(vu[1], F.ar(vu[0])))
        out.append(cell_witness("pseudofunctor-contra", c2, ["composition cowedge"]))
    except NotWellDefined as e:
        out.append(failed_witness("pseudofunctor-contra", [], str(e), e.witness))
    return out


class ReltAdjunction:
    """P_F ⊣ P^F in the bicategory of relators, with its verdicts."""

    def __init__(self, F, eps, eta, checks):
        self.F = F
        self.eps, self.eta = eps, eta
        self.checks = checks

    @property
    def ok(self):
        return all(v.ok for v in self.checks.values())

    def __bool__(self):
        return self.ok

    def failures(self):
        return {k: v for k, v in self.checks.items() if not v.ok}


def adjunction_P(F):
    """ε: P_F;P^F ⇒ hom_B by composition, η: hom_A ⇒ P^F;P_F by F on
    arrows, and both zig-zag identities checked element-wise."""
    A, B = F.source, F.target
    Pl, Pu = embed_cov(F), embed_contra(F)
    hA, hB = hom_pro(A), hom_pro(B)
    checks = {}
    PlPu = pro_compose(Pl, Pu)
    PuPl = pro_compose(Pu, Pl)
    try:
        eps = descended_cell(PlPu, hB, lambda bb, a, uv: B.compose(uv[1], uv[0]))
        checks["eps-well-defined"] = Verdict.passed()
    except NotWellDefined as e:
        checks["eps-well-defined"] = Verdict.failed(e.witness, str(e))
        return ReltAdjunction(F, None, None, checks)
    checks["eps-natural"] = eps.verdict()
    eta = cell(hA, PuPl, lambda aa, u: PuPl.data.cls(
        aa, F.ob(aa[1]), (F.ar(u), B.identity(F.ob(aa[1])))))
    checks["eta-natural"] = eta.verdict()

    # first zig-zag on P^F: ρ∘(P^F;ε)∘α∘(η;P^F)∘λ⁻¹
    hPu = pro_compose(hA, Pu)
    lam_inv = left_unitor_inv(Pu, hPu)
    PuPl_Pu = pro_compose(PuPl, Pu)
    Pu_PlPu = pro_compose(Pu, PlPu)
    PuhB = pro_compose(Pu, hB)
    try:
        step1 = hcompose(eta, identity_cell(Pu), hPu, PuPl_Pu)
        _, _, alpha = associator(Pu, Pl, Pu, PuPl_Pu, Pu_PlPu, PlPu)
        step3 = hcompose(identity_cell(Pu), eps, Pu_PlPu, PuhB)
        _, rho = right_unitor(Pu, PuhB)
        z1 = lam_inv.then(step1).then(alpha).then(step3).then(rho)
        checks["zigzag-1"] = _is_identity(z1, Pu)
    except NotWellDefined as e:
        checks["zigzag-1"] = Verdict.failed(e.witness, str(e))

    # second zig-zag on P_F: λ∘(ε;P_F)∘α⁻¹∘(P_F;η)∘ρ⁻¹
    PlhA = pro_compose(Pl, hA)
    rho_inv = right_unitor_inv(Pl, PlhA)
    Pl_PuPl = pro_compose(Pl, PuPl)
    PlPu_Pl = pro_compose(PlPu, Pl)
    hBPl = pro_compose(hB, Pl)
    try:
        s1 = hcompose(identity_cell(Pl), eta, PlhA, Pl_PuPl)
        s2 = associator_inv(Pl, Pu, Pl, Pl_PuPl, PlPu_Pl, PlPu)
        s3 = hcompose(eps, identity_cell(Pl), PlPu_Pl, hBPl)
        _, lam = left_unitor(Pl, hBPl)
        z2 = rho_inv.then(s1).then(s2).then(s3).then(lam)
        checks["zigzag-2"] = _is_identity(z2, Pl)
    except NotWellDefined as e:
        checks["zigzag-2"] = Verdict.failed(e.witness, str(e))
    return ReltAdjunction(F, eps, eta, checks)


def _is_identity(sigma, P):
    for k in P.data.base.objects:
        for x in P.data.ob(k):
            if sigma[k](x) != x:
                return Verdict.failed((k, x), "zig-zag is not the identity")
    return Verdict.passed()


def fully_faithful_via_unit(F):
    """F is fully faithful iff η: hom_A ⇒ P^F;P_F is invertible.

    ``extra["direct"]`` records the direct hom-set bijectivity check, so
    callers can compare the two.
    """
    adj = adjunction_P(F)
    direct = F.is_fully_faithful()
    for aa, m in adj.eta.components.items():
        if not m.is_injective():
            seen = {}
            for u in m.source:
                if m(u) in seen:
                    return Verdict(False, (aa, seen[m(u)], u), "unit is not injective",
                                   {"direct": direct})
                seen[m(u)] = u
        if not m.is_surjective():
            miss = next(y for y in m.target if y not in set(m.table.values()))
            return Verdict(False, (aa, miss), "unit is not surjective", {"direct": direct})
    return Verdict(True, None, "", {"direct": direct})


def adjunction_criterion(F, G):
    """F ⊣ G iff P^F ≅ P_G. Candidate isomorphisms B(Fa, b) → A(a, Gb) are
    v ↦ G(v)∘η_a, one for each η: 1 ⇒ GF (Yoneda); the verdict reports the
    first η giving a natural bijection."""
    A = F.source
    GF = F.then(G)
    Pu, Pl = embed_contra(F), embed_cov(G)
    for eta in natural_transformations(identity_functor(A), GF):
        theta = cell(Pu, Pl, lambda ab, v, eta=eta: A.compose(G.ar(v), eta[ab[0]]))
        w = cell_witness("adjunction-criterion", theta, ["Yoneda", "unit"])
        if w.ok:
            return Verdict(True, None, "", {"unit": eta, "witness": w})
    return Verdict(False, None, "no unit gives an isomorphism P^F ≅ P_G")


# ------------------------------------------------------ Kan constructions


def ran_in_relt(P, H):
    """Ran_P H(a, x) = Nat(P(x, −), H(a, −)) for P: X ⇸ B and H: A ⇸ B,
    a relator A ⇸ X."""
    X, B, A = P.A, P.B, H.A
    base = pro_base(A, X)

    def ob(b1, b, ax):
        return function_set(P.ob(ax[1], b1), H.ob(ax[0], b))

    def ar(m, h):
        f, g, (alpha, xi) = m
        dom = P.ob(X.trg(xi), B.src(f))
        act = H.ar(alpha, g)
        return FinMap(dom, act.target, {y: act(h(P.ar(xi, f)(y))) for y in dom},
                      check=False)

    data = ParamEnd(integrand(B, base, ob, ar), B, base, name=f"Ran_{P.name}{H.name}")
    return Profunctor(A, X, data)


def ran_adjunction(P, H, G, R=None):
    """Nat(G;P, H) ≅ Nat(G, Ran_P H), σ ↦ (g ↦ (p ↦ σ[x, (g, p)]))."""
    R = R or ran_in_relt(P, H)
    GP = pro_compose(G, P)
    B = P.B
    lhs = set_natural_transformations(GP.data, H.data)
    rhs = set_natural_transformations(G.data, R.data)

    def transport(sig):
        def fn(ax, g):
            a, x = ax
            return tuple(FinMap(P.ob(x, b), H.ob(a, b),
                                {p: sig[(a, b)](GP.data.cls((a, b), x, (g, p)))
                                 for p in P.ob(x, b)}, check=False)
                         for b in B.objects)

        return cell(G, R, fn)

    return nat_bijection("relt-ran", lhs, rhs, transport,
                         ["Nat as an end", "hom out of a coend", "currying", "Fubini"])


def lift(K, L):
    """K ▷ L (d, e) = ∫_c Sets(K(c, d), L(c, e)) for K: C ⇸ D, L: C ⇸ E."""
    C, D, E = K.A, K.B, L.B
    base = pro_base(D, E)

    def ob(c1, c, de):
        return function_set(K.ob(c, de[0]), L.ob(c1, de[1]))

    def ar(m, h):
        f, g, (delta, eps) = m
        dom = K.ob(C.trg(g), D.src(delta))
        act = L.ar(f, eps)
        return FinMap(dom, act.target, {y: act(h(K.ar(g, delta)(y))) for y in dom},
                      check=False)

    data = ParamEnd(integrand(C, base, ob, ar), C, base, name=f"{K.name}▷{L.name}")
    return Profunctor(D, E, data)


def extend(L, H):
    """L ◁ H (e, d) = ∫_a Sets(H(d, a), L(e, a)) for H: D ⇸ A, L: E ⇸ A."""
    A, D, E = H.B, H.A, L.A
    base = pro_base(E, D)

    def ob(a1, a, ed):
        return function_set(H.ob(ed[1], a1), L.ob(ed[0], a))

    def ar(m, h):
        f, g, (eps, delta) = m
        dom = H.ob(D.trg(delta), A.src(f))
        act = L.ar(eps, g)
        return FinMap(dom, act.target, {y: act(h(H.ar(delta, f)(y))) for y in dom},
                      check=False)

    data = ParamEnd(integrand(A, base, ob, ar), A, base, name=f"{L.name}◁{H.name}")
    return Profunctor(E, D, data)


def _pointwise(name, S, T, fn, trace):
    comps = {}
    for k in S.data.base.objects:
        table = {}
        for x in S.data.ob(k):
            y = fn(k, x)
            if y not in T.data.ob(k):
                return failed_witness(name, trace, "image is not a wedge", (k, x))
            table[x] = y
        comps[k] = FinMap(S.data.ob(k), T.data.ob(k), table, check=False)
    return natural_witness(name, S.data, T.data, comps, trace)


def lift_and_ext(K, L, H):
    """K ▷ L and L ◁ H with the unit law (iii) verified for both."""
    KL, LH = lift(K, L), extend(L, H)
    return KL, LH, [lift_unit_law(L), extend_unit_law(L)]


def lift_unit_law(L):
    """L ≅ hom ▷ L, l ↦ (c ↦ (u ↦ L(u, id)(l)))."""
    C = L.A
    HL = lift(hom_pro(C), L)

    def fn(de, l):
        d, e = de
        return tuple(FinMap(FinSet(C.hom(c, d)), L.ob(c, e),
                            {u: L.ar(u, L.B.identity(e))(l) for u in C.hom(c, d)},
                            check=False)
                     for c in C.objects)

    return _pointwise("lift-unit", L, HL, fn, ["ninja Yoneda"])


def extend_unit_law(L):
    """L ≅ L ◁ hom, l ↦ (a ↦ (u ↦ L(id, u)(l)))."""
    A = L.B
    LH = extend(L, hom_pro(A))

    def fn(ea, l):
        e, a1 = ea
        return tuple(FinMap(FinSet(A.hom(a1, a)), L.ob(e, a),
                            {u: L.ar(L.A.identity(e), u)(l) for u in A.hom(a1, a)},
                            check=False)
                     for a in A.objects)

    return _pointwise("extend-unit", L, LH, fn, ["ninja Yoneda"])


def lift_law(H, K, L):
    """(H;K) ▷ L ≅ K ▷ (H ▷ L) for H: C ⇸ D', K: D' ⇸ D, L: C ⇸ E.

    φ ↦ (d' ↦ (k ↦ (c ↦ (h ↦ φ_c[d', (h, k)]))))."""
    HK = pro_compose(H, K)
    lhs = lift(HK, L)
    HL = lift(H, L)
    rhs = lift(K, HL)
    C, D1 = H.A, H.B

    def fn(de, phi):
        d, e = de
        fam = []
        for i, d1 in enumerate(D1.objects):
            dom = K.ob(d1, d)
            fam.append(FinMap(dom, HL.ob(d1, e), {
                k: tuple(FinMap(H.ob(c, d1), L.ob(c, e),
                                {h: phi[j](HK.data.cls((c, d), d1, (h, k)))
                                 for h in H.ob(c, d1)}, check=False)
                         for j, c in enumerate(C.objects))
                for k in dom}, check=False))
        return tuple(fam)

    return _pointwise("lift-law", lhs, rhs, fn,
                      ["hom out of a coend", "currying", "Fubini"])


def extend_law(L, H, K):
    """L ◁ (H;K) ≅ (L ◁ K) ◁ H for H: X ⇸ Y, K: Y ⇸ A, L: E ⇸ A.

    φ ↦ (y ↦ (h ↦ (a ↦ (k ↦ φ_a[y, (h, k)]))))."""
    HK = pro_compose(H, K)
    lhs = extend(L, HK)
    LK = extend(L, K)
    rhs = extend(LK, H)
    A, Y = K.B, K.A

    def fn(ex, phi):
        e, x = ex
        fam = []
        for y in Y.objects:
            dom = H.ob(x, y)
            fam.append(FinMap(dom, LK.ob(e, y), {
                h: tuple(FinMap(K.ob(y, a), L.ob(e, a),
                                {k: phi[j](HK.data.cls((x, a), y, (h, k)))
                                 for k in K.ob(y, a)}, check=False)
                         for j, a in enumerate(A.objects))
                for h in dom}, check=False))
        return tuple(fam)

    return _pointwise("extend-law", lhs, rhs, fn,
                      ["hom out of a coend", "currying", "Fubini"])


# ------------------------------------------------------------- collage


def collage(P):
    """A ⊎_P B: objects ``("A", a)`` and ``("B", b)``; morphisms
    ``("A", f)``, ``("B", g)`` and cross arrows ``("P", a, b, p)``.

    The witness compares the category of elements of P (on A^op × B) with
    the category of cross arrows of the collage, where (a, b, p) → (a', b', p')
    is a pair f: a' → a, g: b → b' with g∘p∘f = p'.
    """
    A, B = P.A, P.B
    objects = [("A", a) for a in A.objects] + [("B", b) for b in B.objects]
    morphisms = [(("A", f), ("A", A.src(f)), ("A", A.trg(f))) for f in A.morphisms]
    morphisms += [(("B", g), ("B", B.src(g)), ("B", B.trg(g))) for g in B.morphisms]
    for a in A.objects:
        for b in B.objects:
            for p in P.ob(a, b):
                morphisms.append((("P", a, b, p), ("A", a), ("B", b)))
    idents = {("A", a): ("A", A.identity(a)) for a in A.objects}
    idents.update({("B", b): ("B", B.identity(b)) for b in B.objects})

    def comp(g, f):
        if f[0] == "A" and g[0] == "A":
            return ("A", A.compose(g[1], f[1]))
        if f[0] == "B" and g[0] == "B":
            return ("B", B.compose(g[1], f[1]))
        if f[0] == "A":  # cross arrow after an arrow of A
            _, a, b, p = g
            return ("P", A.src(f[1]), b, P.ar(f[1], B.identity(b))(p))
        _, a, b, p = f
        return ("P", a, B.trg(g[1]), P.ar(A.identity(a), g[1])(p))

    Col = FinCategory(objects, morphisms, idents, comp, name=f"{A.name}⊎{B.name}")
    return Col, collage_witness(P, Col)


def collage_witness(P, Col):
    A, B = P.A, P.B
    cross = [m for m in Col.morphisms if m[0] == "P"]
    cmor = []
    for p in cross:
        _, a, b, _ = p
        for a2 in A.objects:
            for f in A.hom(a2, a):
                for b2 in B.objects:
                    for g in B.hom(b, b2):
                        q = Col.compose_path(("B", g), p, ("A", f))
                        cmor.append(((f, g, p), p, q))
    Cross = FinCategory(cross, cmor,
                        {p: (A.identity(p[1]), B.identity(p[2]), p) for p in cross},
                        lambda s, t: (A.compose(t[0], s[0]), B.compose(s[1], t[1]), t[2]),
                        name="cross")
    El, _ = category_of_elements(P.data, check_isofibration=False)
    Phi = FinFunctor(El, Cross, {((a, b), p): ("P", a, b, p) for (a, b), p in El.objects},
                     {m: (m[0][0], m[0][1], ("P", *El.src(m)[0], m[1]))
                      for m in El.morphisms})
    v = isomorphism_verdict(Phi)
    comps = {"objects": FinMap(FinSet(El.objects), FinSet(Cross.objects), Phi.on_objects,
                               check=False),
             "morphisms": FinMap(FinSet(El.morphisms), FinSet(Cross.morphisms),
                                 Phi.on_morphisms, check=False)}
    return ComparisonWitness("collage", comps,
                             ("elements of P on A^op × B", "cross arrows of the collage"),
                             bool(v), True, v.witness, v.detail, {"cross": Cross})


# ------------------------------------------------------------ action


def pro_action(P, F, X=None):
    """P ⊗ F (a) = ∫^b P(b, a) × Fb for P: B ⇸ A and F on B.

    With ``X`` given, F lives on B × X (presheaf targets when X = E^op) and
    the result on A × X.
    """
    B, A = P.A, P.B
    base = A if X is None else product(A, X)

    def ob(b1, b, ax):
        a, e = (ax, None) if X is None else ax
        return product_set(P.ob(b1, a), F.ob(b if X is None else (b, e)))

    def ar(m, py):
        f, g, pi = m
        pa, pe = (pi, None) if X is None else pi
        Fg = F.ar(g) if X is None else F.ar((g, pe))
        return (P.ar(f, pa)(py[0]), Fg(py[1]))

    return ParamCoend(integrand(B, base, ob, ar), B, base, name=f"{P.name}⊗{F.name}")


def action_unit_witness(F, X=None):
    """hom_B ⊗ F ≅ F, [b, (u, y)] ↦ F(u)(y)."""
    B = F.base if X is None else F.base.factors[0]
    T = pro_action(hom_pro(B), F, X)
    comps = {}
    for p in T.base.objects:
        e = None if X is None else p[1]

        def fn(b, uy, e=e):
            return F.ar(uy[0] if X is None else (uy[0], X.identity(e)))(uy[1])

        try:
            comps[p] = T.at(p).descend(fn, F.ob(p))
        except NotWellDefined as exc:
            return failed_witness("action-unit", ["ninja Yoneda"], str(exc), exc.witness)
    return natural_witness("action-unit", T, F, comps, ["ninja Yoneda"])


def action_law_witness(Q1, Q2, F):
    """(Q1;Q2) ⊗ F ≅ Q2 ⊗ (Q1 ⊗ F) for Q1: B ⇸ X, Q2: X ⇸ A, F on B.

    [b, ([x, (q1, q2)], y)] ↦ [x, (q2, [b, (q1, y)])]."""
    Q = pro_compose(Q1, Q2)
    lhs = pro_action(Q, F)
    inner = pro_action(Q1, F)
    rhs = pro_action(Q2, inner)
    comps = {}
    for a in lhs.base.objects:
        def fn(b, qy, a=a):
            (x, (q1, q2)), y = qy
            return rhs.cls(a, x, (q2, inner.cls(x, b, (q1, y))))

        try:
            comps[a] = lhs.at(a).descend(fn, rhs.ob(a))
        except NotWellDefined as exc:
            return failed_witness("action-law", ["Fubini"], str(exc), exc.witness)
    return natural_witness("action-law", lhs, rhs, comps,
                           ["Fubini", "coends commute with products"])
