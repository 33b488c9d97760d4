"""Yoneda reduction, Kan extensions, weighted co/limits and the
constructions built from them (Isbell duality, nerve and realization,
codensity hom-sets, functor tensor products).

Set-tensors V·X are realized as products V × X and cotensors X^V as
function sets, so every construction below is a pointwise co/end.
"""

from .coend import (
    ComparisonWitness,
    ParamCoend,
    ParamEnd,
    coend,
    colimit,
    end,
    failed_witness,
    integrand,
    limit,
    natural_witness,
    single_witness,
)
from .errors import NotWellDefined, ShapeMismatch
from .fincat import (
    FinCategory,
    FinFunctor,
    category_of_elements,
    coslice,
    isomorphism_verdict,
    op_times,
    opposite,
    product,
)
from .quotient import QuotientSet
from .setfun import (
    FinMap,
    FinSet,
    SetNat,
    SetValuedFunctor,
    exponential_bifunctor,
    function_set,
    product_set,
    set_natural_transformations,
)


def _hom(C, a, b):
    return FinSet(C.hom(a, b))


def nat_bijection(name, lhs, rhs, transport, trace):
    """Witness that ``transport`` maps the Nat-set ``lhs`` bijectively onto
    ``rhs``; both are lists of SetNat, compared by their component graphs."""
    src = FinSet(n.key() for n in lhs)
    trg = FinSet(n.key() for n in rhs)
    table = {}
    for n in lhs:
        image = transport(n).key()
        if image not in trg:
            return failed_witness(name, trace, "transported family is not natural", n.key())
        table[n.key()] = image
    return single_witness(name, FinMap(src, trg, table, check=False), trace)


# ------------------------------------------------------------ ninja Yoneda


def yoneda_reduce(K, variant, C=None):
    """The four co/end forms of the Yoneda lemma.

    Variants (i) and (ii) take a presheaf K (a functor on C^op), (iii) and
    (iv) a copresheaf (a functor on C):

    (i)   ∫^c Kc × C(−, c) → K,     [c, (k, u)] ↦ K(u)(k)
    (ii)  K → ∫_c Kc^{C(c, −)},     k ↦ (u ↦ K(u)(k))
    (iii) ∫^c Hc × C(c, −) → H,     [c, (h, u)] ↦ H(u)(h)
    (iv)  H → ∫_c Hc^{C(−, c)},     h ↦ (u ↦ H(u)(h))
    """
    if variant in ("i", "ii"):
        C = C or opposite(K.base)
        param = opposite(C)
    elif variant in ("iii", "iv"):
        C = C or K.base
        param = C
    else:
        raise ShapeMismatch(f"unknown variant {variant!r}")
    comp = C.compose_path

    if variant == "i":
        S = ParamCoend(integrand(
            C, param, lambda c1, c, x: product_set(K.ob(c1), _hom(C, x, c)),
            lambda m, ku: (K.ar(m[0])(ku[0]), comp(m[1], ku[1], m[2]))), C, param)
        comps = {x: S.at(x).descend(lambda c, ku: K.ar(ku[1])(ku[0]), K.ob(x))
                 for x in param.objects}
        return natural_witness("ninja-i", S, K, comps,
                               ["coend cowedge [c, (k, u)] ↦ K(u)(k)"])
    if variant == "iii":
        S = ParamCoend(integrand(
            C, param, lambda c1, c, x: product_set(K.ob(c), _hom(C, c1, x)),
            lambda m, hu: (K.ar(m[1])(hu[0]), comp(m[2], hu[1], m[0]))), C, param)
        comps = {x: S.at(x).descend(lambda c, hu: K.ar(hu[1])(hu[0]), K.ob(x))
                 for x in param.objects}
        return natural_witness("ninja-iii", S, K, comps,
                               ["coend cowedge [c, (h, u)] ↦ H(u)(h)"])
    if variant == "ii":
        def ob(c1, c, x):
            return function_set(_hom(C, c, x), K.ob(c1))

        def ar(m, h):
            f, g, pi = m
            dom = _hom(C, C.trg(g), C.src(pi))
            return FinMap(dom, K.ob(C.src(f)),
                          {v: K.ar(f)(h(comp(pi, v, g))) for v in dom}, check=False)

        S = ParamEnd(integrand(C, param, ob, ar), C, param)

        def fam(x, k):
            return tuple(FinMap(_hom(C, c, x), K.ob(c),
                                {u: K.ar(u)(k) for u in C.hom(c, x)}, check=False)
                         for c in C.objects)
    else:
        def ob(c1, c, x):
            return function_set(_hom(C, x, c1), K.ob(c))

        def ar(m, h):
            f, g, pi = m
            dom = _hom(C, C.trg(pi), C.src(f))
            return FinMap(dom, K.ob(C.trg(g)),
                          {v: K.ar(g)(h(comp(f, v, pi))) for v in dom}, check=False)

        S = ParamEnd(integrand(C, param, ob, ar), C, param)

        def fam(x, h):
            return tuple(FinMap(_hom(C, x, c), K.ob(c),
                                {u: K.ar(u)(h) for u in C.hom(x, c)}, check=False)
                         for c in C.objects)

    comps = {x: FinMap(K.ob(x), S.ob(x), {k: fam(x, k) for k in K.ob(x)}, check=False)
             for x in param.objects}
    return natural_witness(f"ninja-{variant}", K, S, comps,
                           ["end legs evaluate at identities",
                            "family u ↦ K(u)(k) is the Yoneda mediator"])


def yoneda_embedding(E):
    """y: E → Psh(E) curried as a functor on E × E^op, (c, e) ↦ E(e, c)."""
    return SetValuedFunctor(product(E, opposite(E)), lambda ce: E.hom(ce[1], ce[0]),
                            lambda gp, u: E.compose_path(gp[0], u, gp[1]),
                            check=False, name="y")


# --------------------------------------------------------- Kan extensions


class KanExtension:
    """Lan_K F or Ran_K F together with its unit (resp. counit).

    With ``X`` given, F lives on C × X (a functor into presheaves when X is
    some E^op) and the extension lives on D × X.
    """

    def __init__(self, kind, K, F, X, functor, unit):
        self.kind = kind
        self.K, self.F, self.X = K, F, X
        self.functor = functor
        self.unit = unit

    @property
    def counit(self):
        return self.unit

    def _along(self):
        """Precomposition with K (or K × X)."""
        K, X = self.K, self.X
        if X is None:
            return K
        src, trg = product(K.source, X), product(K.target, X)
        return FinFunctor.from_callables(src, trg, lambda cx: (K.ob(cx[0]), cx[1]),
                                         lambda m: (K.ar(m[0]), m[1]), check=False)

    def adjunction_witness(self, H):
        """Nat(Lan F, H) ≅ Nat(F, H∘K) (resp. Nat(H, Ran F) ≅ Nat(H∘K, F))."""
        Kx = self._along()
        HK = H.precompose(Kx)
        if self.kind == "lan":
            lhs = set_natural_transformations(self.functor, H)
            rhs = set_natural_transformations(self.F, HK)

            def transport(sig):
                return SetNat(self.F, HK, {c: self.unit[c].then(sig[Kx.ob(c)])
                                           for c in Kx.source.objects}, check=False)

            trace = ["restrict along K", "precompose with the unit"]
        else:
            lhs = set_natural_transformations(H, self.functor)
            rhs = set_natural_transformations(HK, self.F)

            def transport(sig):
                return SetNat(HK, self.F, {c: sig[Kx.ob(c)].then(self.unit[c])
                                           for c in Kx.source.objects}, check=False)

            trace = ["restrict along K", "postcompose with the counit"]
        return nat_bijection(f"{self.kind}-adjunction", lhs, rhs, transport, trace)

    def triangle_witness(self, H):
        """Both triangle identities for the unit/counit pair at H and F."""
        Kx = self._along()
        if self.kind == "lan":
            # (ε_H K)·η_{HK} = id and ε_{Lan F}·Lan(η_F) = id
            HK = H.precompose(Kx)
            L_HK = lan(self.K, HK, self.X)
            eps_H = lan_counit(L_HK, H)
            for c in Kx.source.objects:
                for x in HK.ob(c):
                    if eps_H[Kx.ob(c)](L_HK.unit[c](x)) != x:
                        return failed_witness("lan-triangles", ["first triangle"],
                                              "first triangle fails", (c, x))
            LF = self.functor
            L2 = lan(self.K, LF.precompose(Kx), self.X)
            eps = lan_counit(L2, LF)
            lifted = lan_map(self, L2, self.unit)
            for d in LF.base.objects:
                for y in LF.ob(d):
                    if eps[d](lifted[d](y)) != y:
                        return failed_witness("lan-triangles", ["second triangle"],
                                              "second triangle fails", (d, y))
            return ComparisonWitness("lan-triangles", {}, ("unit", "counit"), True, True)
        HK = H.precompose(Kx)
        R_HK = ran(self.K, HK, self.X)
        eta_H = ran_unit(R_HK, H)
        for c in Kx.source.objects:
            for x in HK.ob(c):
                if R_HK.unit[c](eta_H[Kx.ob(c)](x)) != x:
                    return failed_witness("ran-triangles", ["first triangle"],
                                          "first triangle fails", (c, x))
        RF = self.functor
        R2 = ran(self.K, RF.precompose(Kx), self.X)
        eta = ran_unit(R2, RF)
        lowered = ran_map(R2, self, self.unit)
        for d in RF.base.objects:
            for y in RF.ob(d):
                if lowered[d](eta[d](y)) != y:
                    return failed_witness("ran-triangles", ["second triangle"],
                                          "second triangle fails", (d, y))
        return ComparisonWitness("ran-triangles", {}, ("unit", "counit"), True, True)


def _split(X, p):
    return (p, None) if X is None else p


def lan(K, F, X=None):
    """Lan_K F(d) = ∫^c D(Kc, d) × F(c), with unit x ↦ [c, (id_Kc, x)]."""
    C, D = K.source, K.target
    P = D if X is None else product(D, X)

    def fval(c, e):
        return F.ob(c) if X is None else F.ob((c, e))

    def fact(g, pe, x):
        return F.ar(g)(x) if X is None else F.ar((g, pe))(x)

    def ob(c1, c, p):
        d, e = _split(X, p)
        return product_set(_hom(D, K.ob(c1), d), fval(c, e))

    def ar(m, ux):
        f, g, pi = m
        pd, pe = _split(X, pi)
        return (D.compose_path(pd, ux[0], K.ar(f)), fact(g, pe, ux[1]))

    L = ParamCoend(integrand(C, P, ob, ar), C, P, name=f"Lan_{K.name}{F.name}")
    src = C if X is None else product(C, X)
    unit = {}
    for cx in src.objects:
        c, e = _split(X, cx)
        Kc = K.ob(c)
        p = Kc if X is None else (Kc, e)
        unit[cx] = FinMap(F.ob(cx), L.ob(p),
                          {x: L.cls(p, c, (D.identity(Kc), x)) for x in F.ob(cx)},
                          check=False)
    return KanExtension("lan", K, F, X, L, unit)


def lan_counit(ext, H):
    """ε_H: Lan_K(H∘K) ⇒ H, [c, (u, x)] ↦ H(u)(x), checked well defined."""
    L, X = ext.functor, ext.X
    out = {}
    for p in L.base.objects:
        _d, e = _split(X, p)

        def fn(c, ux, e=e):
            return H.ar(ux[0] if X is None else (ux[0], ext.X.identity(e)))(ux[1])

        out[p] = L.at(p).descend(fn, H.ob(p))
    return out


def lan_map(ext, ext2, sigma):
    """Lan_K(σ) for σ: F ⇒ F' given by components; [c, (u, x)] ↦ [c, (u, σ_c x)]."""
    L, L2, X = ext.functor, ext2.functor, ext.X
    out = {}
    for p in L.base.objects:
        _d, e = _split(X, p)

        def fn(c, ux, p=p, e=e):
            key = c if X is None else (c, e)
            return L2.cls(p, c, (ux[0], sigma[key](ux[1])))

        out[p] = L.at(p).descend(fn, L2.ob(p))
    return out


def ran(K, F, X=None):
    """Ran_K F(d) = ∫_c Sets(D(d, Kc), Fc), with counit evaluating the c-th
    component at id_Kc."""
    C, D = K.source, K.target
    P = D if X is None else product(D, X)

    def fval(c, e):
        return F.ob(c) if X is None else F.ob((c, e))

    def ob(c1, c, p):
        d, e = _split(X, p)
        return function_set(_hom(D, d, K.ob(c1)), fval(c, e))

    def ar(m, h):
        f, g, pi = m
        pd, pe = _split(X, pi)
        dom = _hom(D, D.trg(pd), K.ob(C.src(f)))
        act = F.ar(g) if X is None else F.ar((g, pe))
        return FinMap(dom, act.target,
                      {v: act(h(D.compose_path(K.ar(f), v, pd))) for v in dom},
                      check=False)

    R = ParamEnd(integrand(C, P, ob, ar), C, P, name=f"Ran_{K.name}{F.name}")
    src = C if X is None else product(C, X)
    pos = {c: i for i, c in enumerate(C.objects)}
    counit = {}
    for cx in src.objects:
        c, e = _split(X, cx)
        Kc = K.ob(c)
        p = Kc if X is None else (Kc, e)
        counit[cx] = FinMap(R.ob(p), F.ob(cx),
                            {fam: fam[pos[c]](D.identity(Kc)) for fam in R.ob(p)},
                            check=False)
    return KanExtension("ran", K, F, X, R, counit)


def ran_unit(ext, H):
    """η_H: H ⇒ Ran_K(H∘K), y ↦ (c ↦ (v ↦ H(v)(y)))."""
    R, X, K = ext.functor, ext.X, ext.K
    C = K.source
    out = {}
    for p in R.base.objects:
        d, e = _split(X, p)
        table = {}
        for y in H.ob(p):
            fam = []
            for c in C.objects:
                dom = _hom(K.target, d, K.ob(c))
                fam.append(FinMap(dom, ext.F.ob(c if X is None else (c, e)),
                                  {v: H.ar(v if X is None else (v, X.identity(e)))(y)
                                   for v in dom}, check=False))
            table[y] = tuple(fam)
        out[p] = FinMap(H.ob(p), R.ob(p), table, check=False)
    return out


def ran_map(ext, ext2, sigma):
    """Ran_K(σ) for σ: F ⇒ F', postcomposing every component."""
    R, R2 = ext.functor, ext2.functor
    C = ext.K.source
    X = ext.X
    out = {}
    for p in R.base.objects:
        _d, e = _split(X, p)
        table = {}
        for fam in R.ob(p):
            table[fam] = tuple(
                h.then(sigma[c if X is None else (c, e)]) for c, h in zip(C.objects, fam))
        out[p] = FinMap(R.ob(p), R2.ob(p), table, check=False)
    return out


def lan_compose_witness(G, H, F):
    """Lan_{HG} F ≅ Lan_H(Lan_G F): [c, (u, x)] ↦ [Gc, (u, [c, (id, x)])]."""
    HG = G.then(H)
    L1 = lan(HG, F)
    LG = lan(G, F)
    L2 = lan(H, LG.functor)
    E = H.target
    comps = {}
    for e in E.objects:
        def fn(c, ux, e=e):
            b = G.ob(c)
            inner = LG.functor.cls(b, c, (G.target.identity(b), ux[1]))
            return L2.functor.cls(e, b, (ux[0], inner))

        try:
            comps[e] = L1.functor.at(e).descend(fn, L2.functor.ob(e))
        except NotWellDefined as exc:
            return failed_witness("lan-composition", ["nested cowedge"], str(exc), exc.witness)
    return natural_witness("lan-composition", L1.functor, L2.functor, comps,
                           ["cowedge into the iterated coend", "unit of Lan_G"])


# --------------------------------------------------------- weighted limits


def weighted_limit(W, F):
    """lim^W F = ∫_c Fc^{Wc}, compared against the brute-force Nat(W, F)."""
    E = end(exponential_bifunctor(W, F), W.base)
    nats = set_natural_transformations(W, F)
    brute = FinSet(n.key() for n in nats)
    table = {}
    for x in E.carrier:
        k = tuple(m.graph() for m in x)
        if k not in brute:
            return E, failed_witness("weighted-limit", ["end of cotensors"],
                                     "end family is not natural", x)
        table[x] = k
    return E, single_witness("weighted-limit", FinMap(E.carrier, brute, table, check=False),
                             ["end of cotensors Fc^Wc", "families read as Nat(W, F)"])


def comparison_arrow(F, W):
    """lim F → lim^W F, x ↦ (w ↦ x_c)_c, induced by W → 1."""
    L = limit(F)
    E, _ = weighted_limit(W, F)
    C = F.base
    table = {x: tuple(FinMap(W.ob(c), F.ob(c), {w: xc for w in W.ob(c)}, check=False)
                      for c, xc in zip(C.objects, x))
             for x in L.carrier}
    for y in table.values():
        if y not in E.carrier:
            raise ShapeMismatch("comparison family is not a wedge")
    return FinMap(L.carrier, E.carrier, table, check=False)


def weighted_colimit(W, F):
    """colim^W F = ∫^c Wc × Fc for a presheaf W and a covariant F.

    The witness compares it with the colimit of F∘Σ over the opposite of
    the category of elements of W.
    """
    C = F.base
    B = SetValuedFunctor(op_times(C), lambda cc: product_set(W.ob(cc[0]), F.ob(cc[1])),
                         lambda fg, wx: (W.ar(fg[0])(wx[0]), F.ar(fg[1])(wx[1])),
                         check=False, name="W×F")
    K = coend(B, C)
    _El, sigma = category_of_elements(W, check_isofibration=False)
    G = F.precompose(sigma.opposite())
    L = colimit(G)
    trace = ["colimit over (C^op∫W)^op", "[(c, w), x] ↦ [c, (w, x)]"]
    try:
        m = L.descend(lambda cw, x: K.cls(cw[0], (cw[1], x)), K.carrier)
    except NotWellDefined as e:
        return K, failed_witness("weighted-colimit", trace, str(e), e.witness)
    return K, single_witness("weighted-colimit", m, trace)


def pushout_weight(W0, W1, W2, s, t):
    """The pointwise pushout W1 ⊔_{W0} W2 of presheaves along s, t."""
    base = W0.base
    qs = {}
    for c in base.objects:
        Q = QuotientSet([(1, W1.ob(c)), (2, W2.ob(c))])
        for w in W0.ob(c):
            Q.relate((1, s[c](w)), (2, t[c](w)))
        qs[c] = Q

    def act(f, e):
        i, w = e
        Wi = W1 if i == 1 else W2
        return qs[base.trg(f)].rep((i, Wi.ar(f)(w)))

    return SetValuedFunctor(base, lambda c: qs[c].carrier(), act, check=False,
                            name="W1⊔W2"), qs


def weight_cocontinuity(W0, W1, W2, s, t, F):
    """colim^{W1 ⊔_{W0} W2} F ≅ colim^{W1} F ⊔_{colim^{W0} F} colim^{W2} F.

    The map goes from the pushout of weighted colimits to the colimit
    weighted by the pushout: [i, [c, (w, x)]] ↦ [c, ([i, w], x)].
    """
    W, qs = pushout_weight(W0, W1, W2, s, t)
    K0, _ = weighted_colimit(W0, F)
    K1, _ = weighted_colimit(W1, F)
    K2, _ = weighted_colimit(W2, F)
    KW, _ = weighted_colimit(W, F)
    trace = ["weighted colimits are functorial in the weight",
             "pushout of the induced maps", "[i, [c, (w, x)]] ↦ [c, ([i, w], x)]"]
    try:
        s_ = K0.descend(lambda c, wx: K1.cls(c, (s[c](wx[0]), wx[1])), K1.carrier)
        t_ = K0.descend(lambda c, wx: K2.cls(c, (t[c](wx[0]), wx[1])), K2.carrier)
    except NotWellDefined as e:
        return failed_witness("weight-cocontinuity", trace, str(e), e.witness)
    PO = QuotientSet([(1, K1.carrier), (2, K2.carrier)])
    for k in K0.carrier:
        PO.relate((1, s_(k)), (2, t_(k)))
    table = {}
    for rep, members in PO.classes().items():
        vals = set()
        for i, (c, wx) in members:
            vals.add(KW.cls(c, (qs[c].rep((i, wx[0])), wx[1])))
        if len(vals) != 1:
            return failed_witness("weight-cocontinuity", trace,
                                  "map is not constant on a pushout class", rep)
        table[rep] = vals.pop()
    return single_witness("weight-cocontinuity",
                          FinMap(PO.carrier(), KW.carrier, table, check=False), trace)


def weighted_via_elements(W, F):
    """lim^W F ≅ lim_{C∫W} F∘Σ, τ ↦ (τ_c(u))_{(c, u)}."""
    E, _ = weighted_limit(W, F)
    El, sigma = category_of_elements(W)
    L = limit(F.precompose(sigma))
    pos = {c: i for i, c in enumerate(W.base.objects)}
    table = {}
    for x in E.carrier:
        y = tuple(x[pos[c]](u) for (c, u) in El.objects)
        if y not in L.carrier:
            return failed_witness("weighted-via-elements", ["unique lifts"],
                                  "family is not a cone", x)
        table[x] = y
    return single_witness("weighted-via-elements",
                          FinMap(E.carrier, L.carrier, table, check=False),
                          ["end of cotensors", "every arrow of C lifts uniquely to C∫W",
                           "cone over F∘Σ"])


def coslice_coproduct(W):
    """∐_a a/C × Wa as a category; objects are ``(a, u, w)``."""
    C = W.base
    objects, morphisms, idents = [], [], {}
    for a in C.objects:
        S = coslice(C, a)
        for w in W.ob(a):
            for u in S.objects:
                objects.append((a, u, w))
                idents[(a, u, w)] = (a, S.identity(u), w)
            for m in S.morphisms:
                morphisms.append(((a, m, w), (a, S.src(m), w), (a, S.trg(m), w)))
    return FinCategory(objects, morphisms, idents,
                       lambda g, f: (f[0], (C.compose(g[1][0], f[1][0]), f[1][1]), f[2]),
                       name="∐a/C×Wa", check=False)


def elements_as_colimit(W):
    """C∫W as the coequalizer of ∐_{f: a→b} b/C × Wa ⇉ ∐_a a/C × Wa.

    θ sends (a, u: a → b, w) to (b, W(u)w). The witness has one component
    for objects and one for morphisms: the induced maps from the quotients
    by the generated identification onto C∫W, both required bijective.
    """
    C = W.base
    S = coslice_coproduct(W)
    El, _ = category_of_elements(W)
    theta = FinFunctor(S, El, {o: (C.trg(o[1]), W.ar(o[1])(o[2])) for o in S.objects},
                       {m: (m[1][0], W.ar(m[1][1])(m[2])) for m in S.morphisms})
    pairs_ob, pairs_mor = [], []
    for f in C.morphisms:
        a, b = C.src(f), C.trg(f)
        for w in W.ob(a):
            for x in (u for y in C.objects for u in C.hom(b, y)):
                pairs_ob.append(((b, x, W.ar(f)(w)), (a, C.compose(x, f), w)))
                for t in C.outgoing(C.trg(x)):
                    pairs_mor.append(((b, (t, x), W.ar(f)(w)),
                                      (a, (t, C.compose(x, f)), w)))
    trace = ["θ(a, u, w) = (b, W(u)w)", "θ coequalizes the pair",
             "induced maps from the quotients"]
    comps = {}
    for key, elems, pairs, target, fn in (
            ("objects", S.objects, pairs_ob, El.objects, theta.ob),
            ("morphisms", S.morphisms, pairs_mor, El.morphisms, theta.ar)):
        for p, q in pairs:
            if fn(p) != fn(q):
                return failed_witness("elements-as-colimit", trace,
                                      "θ does not coequalize", (p, q))
        Q = QuotientSet([(0, FinSet(elems))])
        for p, q in pairs:
            Q.relate((0, p), (0, q))
        comps[key] = FinMap(Q.carrier(), FinSet(target),
                            {r: fn(r[1]) for r in Q.carrier()}, check=False)
    bij = all(m.is_bijective() for m in comps.values())
    iso = isomorphism_verdict(theta)
    del iso
    return ComparisonWitness("elements-as-colimit", comps, tuple(trace), bij, None,
                             None, "" if bij else "induced map is not bijective",
                             extra={"theta": theta})


def coslice_vs_elements(C, c0):
    """c0/C ≅ C∫C(c0, −) via u ↦ (trg u, u)."""
    from .setfun import representable

    S = coslice(C, c0)
    El, _ = category_of_elements(representable(C, c0))
    F = FinFunctor(S, El, {u: (C.trg(u), u) for u in S.objects},
                   {m: m for m in S.morphisms})
    return isomorphism_verdict(F)


def elements_via_pullback(W):
    """C∫W rebuilt as the pullback of W along the forgetful functor from
    pointed sets, compared object by object and morphism by morphism."""
    C = W.base
    El, _ = category_of_elements(W)
    objects = [(c, (W.ob(c), u)) for c in C.objects for u in W.ob(c)]
    morphisms = []
    for f in C.morphisms:
        h = W.ar(f)
        for u in W.ob(C.src(f)):
            v = h(u)
            morphisms.append((f, h, (C.src(f), u), (C.trg(f), v)))
    ob_ok = sorted(map(repr, ((c, pt[1]) for c, pt in objects))) == \
        sorted(map(repr, El.objects))
    mor_ok = sorted(map(repr, (((f, s[1]), s, t) for f, _, s, t in morphisms))) == \
        sorted(map(repr, ((m, El.src(m), El.trg(m)) for m in El.morphisms)))
    return ob_ok and mor_ok


def codensity_hom(F, c, c2):
    """Kl(c, c') = ∫_a Sets(C(c', Fa), C(c, Fa)) for F: A → C."""
    A, C = F.source, F.target

    def act(fg, h):
        f, g = fg
        dom = _hom(C, c2, F.ob(A.src(f)))
        return FinMap(dom, _hom(C, c, F.ob(A.trg(g))),
                      {v: C.compose(F.ar(g), h(C.compose(F.ar(f), v))) for v in dom},
                      check=False)

    B = SetValuedFunctor(op_times(A),
                         lambda aa: function_set(_hom(C, c2, F.ob(aa[0])),
                                                 _hom(C, c, F.ob(aa[1]))),
                         act, check=False, name="Kl")
    return end(B, A)


def codensity_collapse(C, c, c2):
    """For F = id, C(c, c') ≅ ∫_a Sets(C(c', a), C(c, a)) via u ↦ (ξ ↦ ξ∘u)."""
    from .fincat import identity_functor

    E = codensity_hom(identity_functor(C), c, c2)
    table = {u: tuple(FinMap(_hom(C, c2, a), _hom(C, c, a),
                             {xi: C.compose(xi, u) for xi in C.hom(c2, a)}, check=False)
                      for a in C.objects)
             for u in C.hom(c, c2)}
    for y in table.values():
        if y not in E.carrier:
            return E, failed_witness("codensity-collapse", ["precompose"], "not a wedge", y)
    return E, single_witness("codensity-collapse",
                             FinMap(_hom(C, c, c2), E.carrier, table, check=False),
                             ["ninja Yoneda", "ξ ↦ ξ∘u"])


# ------------------------------------------------------ Isbell and nerves


def isbell(X, Y):
    """O(X)(d) = ∫_a Sets(Xa, C(a, d)) and Spec(Y)(a) = ∫_d Sets(Yd, C(a, d)),
    with the bijection Nat(Y, O X) ≅ Nat(X, Spec Y) obtained by swapping
    the two arguments of Sets(Yd × Xa, C(a, d))."""
    C = Y.base
    comp = C.compose_path

    def o_ob(a1, a, d):
        return function_set(X.ob(a), _hom(C, a1, d))

    def o_ar(m, h):
        f, g, pi = m
        dom = X.ob(C.trg(g))
        return FinMap(dom, _hom(C, C.src(f), C.trg(pi)),
                      {y: comp(pi, h(X.ar(g)(y)), f) for y in dom}, check=False)

    O = ParamEnd(integrand(C, C, o_ob, o_ar), C, C, name="O(X)")

    def s_ob(d1, d, a):
        return function_set(Y.ob(d1), _hom(C, a, d))

    def s_ar(m, h):
        f, g, pi = m
        dom = Y.ob(C.src(f))
        return FinMap(dom, _hom(C, C.src(pi), C.trg(g)),
                      {y: comp(g, h(Y.ar(f)(y)), pi) for y in dom}, check=False)

    Sp = ParamEnd(integrand(C, opposite(C), s_ob, s_ar), C, opposite(C), name="Spec(Y)")
    lhs = set_natural_transformations(Y, O)
    rhs = set_natural_transformations(X, Sp)
    pos = {c: i for i, c in enumerate(C.objects)}

    def transport(sig):
        comps = {}
        for a in C.objects:
            table = {}
            for x in X.ob(a):
                table[x] = tuple(
                    FinMap(Y.ob(d), _hom(C, a, d),
                           {y: sig[d](y)[pos[a]](x) for y in Y.ob(d)}, check=False)
                    for d in C.objects)
            comps[a] = FinMap(X.ob(a), Sp.ob(a), table, check=False)
        return SetNat(X, Sp, comps, check=False)

    w = nat_bijection("isbell", lhs, rhs, transport,
                      ["Nat as an end", "currying", "Fubini", "uncurrying"])
    return O, Sp, w


def nerve_realization(phi, P, d):
    """R_φ(P) = ∫^c Pc × φc and N_φ(d)(c) = Nat(φc, d), with the bijection
    Nat(R_φ P, d) ≅ Nat(P, N_φ d).

    φ is a functor C → Psh(E) curried as a SetValuedFunctor on C × E^op.
    """
    C, Eop = phi.base.factors
    Cop = opposite(C)
    R = ParamCoend(integrand(
        C, Eop, lambda c1, c, e: product_set(P.ob(c1), phi.ob((c, e))),
        lambda m, py: (P.ar(m[0])(py[0]), phi.ar((m[1], m[2]))(py[1]))), C, Eop,
        name="R(P)")

    def n_ob(e1, e, c):
        return function_set(phi.ob((c, e1)), d.ob(e))

    def n_ar(m, h):
        f, g, pi = m
        dom = phi.ob((Cop.trg(pi), Eop.src(f)))
        return FinMap(dom, d.ob(Eop.trg(g)),
                      {y: d.ar(g)(h(phi.ar((pi, f))(y))) for y in dom}, check=False)

    N = ParamEnd(integrand(Eop, Cop, n_ob, n_ar), Eop, Cop, name="N(d)")
    lhs = set_natural_transformations(R, d)
    rhs = set_natural_transformations(P, N)

    def transport(sig):
        comps = {}
        for c in C.objects:
            table = {}
            for p in P.ob(c):
                table[p] = tuple(
                    FinMap(phi.ob((c, e)), d.ob(e),
                           {y: sig[e](R.cls(e, c, (p, y))) for y in phi.ob((c, e))},
                           check=False)
                    for e in Eop.objects)
            comps[c] = FinMap(P.ob(c), N.ob(c), table, check=False)
        return SetNat(P, N, comps, check=False)

    w = nat_bijection("nerve-realization", lhs, rhs, transport,
                      ["Nat as an end", "hom out of a coend", "Fubini", "Nat as an end"])
    return R, N, w


def functor_tensor(F, G, probes=()):
    """F ⊠ G = ∫^c Fc × Gc for a presheaf F and a copresheaf G.

    For each probe set H the two THC bijections
    Sets(F ⊠ G, H) ≅ Nat(F, Sets(G−, H)) ≅ Nat(G, Sets(F−, H)) are built by
    currying and checked.
    """
    C = G.base
    B = SetValuedFunctor(op_times(C), lambda cc: product_set(F.ob(cc[0]), G.ob(cc[1])),
                         lambda fg, xy: (F.ar(fg[0])(xy[0]), G.ar(fg[1])(xy[1])),
                         check=False, name="F×G")
    K = coend(B, C)
    witnesses = []
    for H in probes:
        H = H if isinstance(H, FinSet) else FinSet(H)
        homGH = SetValuedFunctor(opposite(C), lambda c, H=H: function_set(G.ob(c), H),
                                 lambda f, h: G.ar(f).then(h), check=False)
        homFH = SetValuedFunctor(C, lambda c, H=H: function_set(F.ob(c), H),
                                 lambda f, h: F.ar(f).then(h), check=False)
        maps = function_set(K.carrier, H)
        for name, dom, tgt, curry in (
                ("thc-left", F, homGH,
                 lambda h, c, x, H=H: FinMap(G.ob(c), H, {y: h(K.cls(c, (x, y))) for y in G.ob(c)},
                                        check=False)),
                ("thc-right", G, homFH,
                 lambda h, c, y, H=H: FinMap(F.ob(c), H, {x: h(K.cls(c, (x, y))) for x in F.ob(c)},
                                        check=False))):
            nats = set_natural_transformations(dom, tgt)
            keys = FinSet(n.key() for n in nats)
            table = {}
            bad = None
            for h in maps:
                key = tuple(tuple(curry(h, c, x) for x in dom.ob(c)) for c in C.objects)
                if key not in keys:
                    bad = h
                    break
                table[h] = key
            if bad is not None:
                witnesses.append(failed_witness(name, ["currying"], "not natural", bad))
            else:
                witnesses.append(single_witness(name, FinMap(maps, keys, table, check=False),
                                                ["hom out of a coend", "currying"]))
    return K, witnesses


# ------------------------------------------------------------ invariants


def weight_change(W, F, J):
    """lim^W (F∘J) ≅ lim^{Lan_J W} F, τ ↦ τ_J ∘ η."""
    ext = lan(J, W)
    LW = ext.functor.materialize()
    E1, _ = weighted_limit(W, F.precompose(J))
    E2, _ = weighted_limit(LW, F)
    A, C = J.source, J.target
    posC = {c: i for i, c in enumerate(C.objects)}
    table = {}
    for tau in E2.carrier:
        fam = tuple(ext.unit[a].then(tau[posC[J.ob(a)]]) for a in A.objects)
        fam = tuple(FinMap(W.ob(a), F.ob(J.ob(a)), m.table, check=False)
                    for a, m in zip(A.objects, fam))
        if fam not in E1.carrier:
            return failed_witness("weight-change", ["restrict along J"], "not a wedge", tau)
        table[tau] = fam
    return single_witness("weight-change", FinMap(E2.carrier, E1.carrier, table, check=False),
                          ["Lan_J ⊣ J*", "restrict along J", "precompose with the unit"])


def hom_weighted(W, F, y):
    """Sets(y, lim^W F) ≅ lim^W Sets(y, F−), h ↦ (w ↦ (t ↦ h(t)_c(w)))."""
    y = y if isinstance(y, FinSet) else FinSet(y)
    C = W.base
    E, _ = weighted_limit(W, F)
    Fy = SetValuedFunctor(C, lambda c: function_set(y, F.ob(c)),
                          lambda f, h: h.then(F.ar(f)), check=False)
    E2, _ = weighted_limit(W, Fy)
    lhs = function_set(y, E.carrier)
    table = {}
    for h in lhs:
        fam = tuple(FinMap(W.ob(c), Fy.ob(c),
                           {w: FinMap(y, F.ob(c), {t: h(t)[i](w) for t in y}, check=False)
                            for w in W.ob(c)}, check=False)
                    for i, c in enumerate(C.objects))
        if fam not in E2.carrier:
            return failed_witness("hom-weighted", ["currying"], "not a wedge", h)
        table[h] = fam
    return single_witness("hom-weighted", FinMap(lhs, E2.carrier, table, check=False),
                          ["weighted limit as an end", "hom commutes with ends", "currying"])


def end_as_weighted(H):
    """∫_c H(c, c) ≅ lim^{C(−,=)} H, x ↦ (u: c' → c ↦ H(c', u)(x_c'))."""
    from .setfun import hom_functor

    B = H.base
    C = B.factors[1]
    E = end(H, C)
    W = hom_functor(C)
    L = end(exponential_bifunctor(W, H, C=B), B)
    pos = {c: i for i, c in enumerate(C.objects)}
    table = {}
    for x in E.carrier:
        fam = tuple(FinMap(W.ob(b), H.ob(b),
                           {u: H.ar((C.identity(b[0]), u))(x[pos[b[0]]]) for u in W.ob(b)},
                           check=False)
                    for b in B.objects)
        if fam not in L.carrier:
            return failed_witness("end-as-weighted", ["hom-weighted"], "not a wedge", x)
        table[x] = fam
    return single_witness("end-as-weighted", FinMap(E.carrier, L.carrier, table, check=False),
                          ["end as a hom-weighted limit", "ninja Yoneda"])


def ran_pointwise(K, F, d):
    """Ran_K F(d) ≅ lim over d↓K of F∘U, read off the category of elements
    of D(d, K−)."""
    from .setfun import representable

    ext = ran(K, F)
    W = representable(K.target, d).precompose(K)
    El, sigma = category_of_elements(W)
    L = limit(F.precompose(sigma))
    pos = {c: i for i, c in enumerate(K.source.objects)}
    table = {}
    for fam in ext.functor.ob(d):
        y = tuple(fam[pos[c]](u) for c, u in El.objects)
        if y not in L.carrier:
            return failed_witness("ran-pointwise", ["comma category"], "not a cone", fam)
        table[fam] = y
    return single_witness("ran-pointwise", FinMap(ext.functor.ob(d), L.carrier, table,
                                                  check=False),
                          ["Ran as an end", "comma category as elements", "conical limit"])
