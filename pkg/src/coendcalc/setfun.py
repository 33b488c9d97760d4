"""Finite sets, set-valued functors and generalized naturality checks.

A presheaf on C is a SetValuedFunctor on ``opposite(C)``; a bifunctor is a
SetValuedFunctor on ``product(opposite(C), C)`` whose objects are pairs
``(c_contra, c_cov)``. Since ``opposite`` shares morphism ids with C, the
morphism ``(f, g)`` of C^op × C acts as ``F(f, g)`` in the usual notation.
"""

import itertools

from .config import LIMITS
from .errors import FunctorError, MissingLeg, ShapeMismatch, SizeCapExceeded
from .fincat import FinFunctor, op_times, opposite, product, terminal
from .verdict import Verdict


class FinSet:
    """An ordered finite set of hashable elements."""

    __slots__ = ("_index", "elements")

    def __init__(self, elements=()):
        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("FinSet elements must be distinct")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._index

    def __getitem__(self, i):
        return self.elements[i]

    def index(self, x):
        return self._index[x]

    def __eq__(self, other):
        return isinstance(other, FinSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "{" + ", ".join(map(repr, self.elements)) + "}"

    def same_elements(self, other):
        return set(self._index) == set(other._index)


class FinMap:
    """A total function between FinSets. Hashable, so function sets can be
    used as carriers of further constructions."""

    __slots__ = ("_hash", "source", "table", "target")

    def __init__(self, source, target, table, check=True):
        self.source = source
        self.target = target
        if callable(table):
            table = {x: table(x) for x in source}
        self.table = table
        self._hash = None
        if check:
            if len(table) != len(source) or any(x not in table for x in source):
                raise FunctorError("map is not total on its source")
            for x in source:
                if table[x] not in target:
                    raise FunctorError(f"image {table[x]!r} of {x!r} lies outside the target")

    def __call__(self, x):
        return self.table[x]

    def graph(self):
        return tuple(self.table[x] for x in self.source)

    def __eq__(self, other):
        return (isinstance(other, FinMap) and self.source == other.source
                and self.target == other.target and self.graph() == other.graph())

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.source.elements, self.graph()))
        return self._hash

    def __repr__(self):
        return "{" + ", ".join(f"{x!r}↦{self.table[x]!r}" for x in self.source) + "}"

    def then(self, g):
        """g∘self."""
        return FinMap(self.source, g.target, {x: g(self.table[x]) for x in self.source},
                      check=False)

    def after(self, f):
        """self∘f."""
        return f.then(self)

    def is_injective(self):
        return len(set(self.table.values())) == len(self.source)

    def is_surjective(self):
        return set(self.table.values()) >= set(self.target)

    def is_bijective(self):
        return len(self.source) == len(self.target) and self.is_injective()

    def inverse(self):
        if not self.is_bijective():
            raise ValueError("map is not invertible")
        return FinMap(self.target, self.source, {y: x for x, y in self.table.items()},
                      check=False)

    @staticmethod
    def identity(X):
        return FinMap(X, X, {x: x for x in X}, check=False)


def function_set(X, Y):
    """Y^X as a FinSet of FinMaps, lexicographic in the images."""
    n = len(Y) ** len(X)
    if n > LIMITS.max_states:
        raise SizeCapExceeded(f"function set of size {n} exceeds the cap")
    return FinSet(FinMap(X, Y, dict(zip(X, imgs)), check=False)
                  for imgs in itertools.product(Y.elements, repeat=len(X)))


def product_set(*sets):
    return FinSet(itertools.product(*(S.elements for S in sets)))


class SetValuedFunctor:
    """A functor from a FinCategory to finite sets.

    ``on_objects`` maps objects to element lists (dict or callable);
    ``on_morphisms`` maps morphisms to tables (dict of dicts, dict of
    FinMaps) or is a callable ``(f, x) -> y``. Values are computed lazily
    and cached, so functors on large product bases cost only what is used.
    """

    def __init__(self, base, on_objects, on_morphisms, check=True, name=None):
        self.base = base
        self.name = name or "F"
        self._ob_src = on_objects
        self._ar_src = on_morphisms
        self._obs = {}
        self._ars = {}
        if check:
            self.validate()

    def __repr__(self):
        return f"SetValuedFunctor({self.name} on {self.base.name})"

    def ob(self, c):
        s = self._obs.get(c)
        if s is None:
            raw = self._ob_src(c) if callable(self._ob_src) else self._ob_src[c]
            s = raw if isinstance(raw, FinSet) else FinSet(raw)
            self._obs[c] = s
        return s

    def ar(self, f):
        m = self._ars.get(f)
        if m is None:
            C = self.base
            X, Y = self.ob(C.src(f)), self.ob(C.trg(f))
            if callable(self._ar_src):
                fn = self._ar_src
                m = FinMap(X, Y, {x: fn(f, x) for x in X}, check=False)
            else:
                raw = self._ar_src.get(f)
                if raw is None:
                    if not C.is_identity(f):
                        raise FunctorError(f"{self.name}: no action given for {f!r}")
                    raw = {x: x for x in X}
                if isinstance(raw, FinMap):
                    m = raw
                else:
                    m = FinMap(X, Y, dict(raw), check=False)
            self._ars[f] = m
        return m

    def __call__(self, f, x):
        return self.ar(f)(x)

    def size(self):
        return sum(len(self.ob(c)) for c in self.base.objects)

    def validate(self):
        v = self.verdict()
        if not v:
            raise FunctorError(f"{self.name}: {v.detail} at {v.witness!r}")
        return self

    def verdict(self):
        C = self.base
        for f in C.morphisms:
            m = self.ar(f)
            X, Y = self.ob(C.src(f)), self.ob(C.trg(f))
            if len(m.table) != len(X) or any(x not in m.table for x in X):
                return Verdict.failed(f, "action is not total")
            for x in X:
                if m.table[x] not in Y:
                    return Verdict.failed((f, x), "action leaves the target set")
        for c in C.objects:
            m = self.ar(C.identity(c))
            for x in self.ob(c):
                if m(x) != x:
                    return Verdict.failed((C.identity(c), x), "identity not preserved")
        for g, f in C.composable_pairs():
            gf, mg, mf = self.ar(C.compose(g, f)), self.ar(g), self.ar(f)
            for x in self.ob(C.src(f)):
                if gf(x) != mg(mf(x)):
                    return Verdict.failed((g, f, x), "composition not preserved")
        return Verdict.passed()

    def tables(self):
        """Materialized (objects, morphisms) tables."""
        C = self.base
        return ({c: list(self.ob(c)) for c in C.objects},
                {f: dict(self.ar(f).table) for f in C.morphisms})

    def precompose(self, G, name=None):
        """self∘G for a FinFunctor G into this functor's base."""
        return SetValuedFunctor(G.source, lambda a: self.ob(G.ob(a)),
                                lambda f, x: self.ar(G.ar(f))(x), check=False,
                                name=name or f"{self.name}∘{G.name}")

    def materialize(self):
        obs, ars = self.tables()
        return SetValuedFunctor(self.base, obs, ars, check=False, name=self.name)


def functor_from_callables(base, ob, ar, check=False, name=None):
    return SetValuedFunctor(base, ob, ar, check=check, name=name)


# ------------------------------------------------------- standard functors


def representable(C, c):
    """C(c, −), covariant on C."""
    return SetValuedFunctor(C, lambda x: C.hom(c, x),
                            lambda f, u: C.compose(f, u), check=False,
                            name=f"{C.name}({c},−)")


def corepresentable(C, c):
    """The presheaf C(−, c), a functor on C^op."""
    return SetValuedFunctor(opposite(C), lambda x: C.hom(x, c),
                            lambda f, u: C.compose(u, f), check=False,
                            name=f"{C.name}(−,{c})")


def hom_functor(C):
    """C(−, =) on C^op × C; (f, g) acts by u ↦ g∘u∘f."""
    return SetValuedFunctor(op_times(C), lambda ab: C.hom(*ab),
                            lambda fg, u: C.compose_path(fg[1], u, fg[0]),
                            check=False, name=f"{C.name}(−,=)")


def terminal_functor(C):
    return SetValuedFunctor(C, lambda c: ("*",), lambda f, x: x, check=False, name="1")


def constant_set_functor(C, X, name=None):
    X = X if isinstance(X, FinSet) else FinSet(X)
    return SetValuedFunctor(C, lambda c: X, lambda f, x: x, check=False,
                            name=name or "Δ")


def mute(F, C=None, keep="cov"):
    """Regard F as a bifunctor on C^op × C that ignores one variable.

    ``keep="cov"`` for covariant F on C, ``keep="contra"`` for F on C^op.
    """
    if keep == "cov":
        C = C or F.base
        i = 1
    else:
        C = C or opposite(F.base)
        i = 0
    return SetValuedFunctor(op_times(C), lambda cc: F.ob(cc[i]),
                            lambda fg, x: F.ar(fg[i])(x), check=False,
                            name=f"mute({F.name})")


def pointwise_product(F, G, name=None):
    return SetValuedFunctor(F.base, lambda c: product_set(F.ob(c), G.ob(c)),
                            lambda f, xy: (F.ar(f)(xy[0]), G.ar(f)(xy[1])),
                            check=False, name=name or f"{F.name}×{G.name}")


def pointwise_coproduct(F, G, name=None):
    return SetValuedFunctor(
        F.base,
        lambda c: [(0, x) for x in F.ob(c)] + [(1, y) for y in G.ob(c)],
        lambda f, t: (0, F.ar(f)(t[1])) if t[0] == 0 else (1, G.ar(f)(t[1])),
        check=False, name=name or f"{F.name}+{G.name}")


def exponential_bifunctor(W, F, C=None, name=None):
    """(c', c) ↦ Sets(W c', F c) on C^op × C for covariant W, F on C."""
    C = C or W.base

    def act(fg, h):
        f, g = fg
        src = W.ob(C.src(f))
        Wf, Fg = W.ar(f), F.ar(g)
        return FinMap(src, F.ob(C.trg(g)), {w: Fg(h(Wf(w))) for w in src}, check=False)

    return SetValuedFunctor(op_times(C),
                            lambda cc: function_set(W.ob(cc[0]), F.ob(cc[1])),
                            act, check=False, name=name or f"[{W.name},{F.name}]")


# ------------------------------------------------ natural transformations


class SetNat:
    """A natural transformation between set-valued functors on one base."""

    def __init__(self, source, target, components, check=True):
        self.source = source
        self.target = target
        self.components = {}
        for c in source.base.objects:
            comp = components[c]
            if not isinstance(comp, FinMap):
                comp = FinMap(source.ob(c), target.ob(c), dict(comp), check=check)
            self.components[c] = comp
        if check:
            v = self.verdict()
            if not v:
                raise FunctorError(f"not natural: {v.detail} at {v.witness!r}")

    def __getitem__(self, c):
        return self.components[c]

    def key(self):
        return tuple(self.components[c].graph() for c in self.source.base.objects)

    def verdict(self):
        F, G = self.source, self.target
        C = F.base
        for c in C.objects:
            comp = self.components[c]
            if comp.source != F.ob(c) or not all(comp(x) in G.ob(c) for x in F.ob(c)):
                return Verdict.failed(c, "component has the wrong type")
        for f in C.morphisms:
            a, b = C.src(f), C.trg(f)
            Gf, Ff, ta, tb = G.ar(f), F.ar(f), self.components[a], self.components[b]
            for x in F.ob(a):
                if Gf(ta(x)) != tb(Ff(x)):
                    return Verdict.failed((f, x), "naturality square fails")
        return Verdict.passed()

    def then(self, other):
        return SetNat(self.source, other.target,
                      {c: self.components[c].then(other.components[c])
                       for c in self.source.base.objects}, check=False)

    @staticmethod
    def identity(F):
        return SetNat(F, F, {c: FinMap.identity(F.ob(c)) for c in F.base.objects},
                      check=False)


def set_natural_transformations(F, G):
    """Every natural transformation F ⇒ G, by backtracking over objects in
    stored order with each naturality square checked as soon as both of its
    corners are assigned. This is the brute-force oracle for Nat-sets."""
    C = F.base
    objs = list(C.objects)
    pos = {c: i for i, c in enumerate(objs)}
    checks = [[] for _ in objs]
    for f in C.morphisms:
        checks[max(pos[C.src(f)], pos[C.trg(f)])].append(f)
    out = []
    states = 0
    cands = [function_set(F.ob(c), G.ob(c)) for c in objs]

    def go(i, comps):
        nonlocal states
        if i == len(objs):
            out.append(dict(comps))
            return
        for t in cands[i]:
            states += 1
            if states > LIMITS.max_states:
                raise SizeCapExceeded("natural transformation search exceeded the cap")
            comps[objs[i]] = t
            ok = True
            for f in checks[i]:
                a, b = C.src(f), C.trg(f)
                Gf, Ff, ta, tb = G.ar(f), F.ar(f), comps[a], comps[b]
                if any(Gf(ta(x)) != tb(Ff(x)) for x in F.ob(a)):
                    ok = False
                    break
            if ok:
                go(i + 1, comps)
        comps.pop(objs[i], None)

    go(0, {})
    return [SetNat(F, G, comps, check=False) for comps in out]


# ------------------------------------------------ dinaturality and wedges


def _bifunctor_base(F):
    if F.base.factors is None or len(F.base.factors) != 2:
        raise ShapeMismatch("expected a bifunctor on C^op × C")
    return F.base.factors[1]


class DinaturalFamily:
    """Components α_c: P(c, c) → Q(c, c) for bifunctors P, Q on C^op × C."""

    def __init__(self, P, Q, components, C=None):
        self.P = P
        self.Q = Q
        self.C = C or _bifunctor_base(P)
        self.components = dict(components)
        self.verdict = None

    def __getitem__(self, c):
        return self.components[c]


def check_dinatural(alpha):
    """Q(c,f)∘α_c∘P(f,c) = Q(f,c')∘α_c'∘P(c',f) for every f: c → c'."""
    P, Q, C = alpha.P, alpha.Q, alpha.C
    for c in C.objects:
        comp = alpha.components.get(c)
        if comp is None:
            raise ShapeMismatch(f"missing component at {c!r}")
        if not P.ob((c, c)).same_elements(comp.source):
            raise ShapeMismatch(f"component at {c!r} has the wrong domain")
        if not all(comp(x) in Q.ob((c, c)) for x in comp.source):
            raise ShapeMismatch(f"component at {c!r} has the wrong codomain")
    for f in C.morphisms:
        c, d = C.src(f), C.trg(f)
        ic, id_ = C.identity(c), C.identity(d)
        p_fc, q_cf = P.ar((f, ic)), Q.ar((ic, f))
        p_df, q_fd = P.ar((id_, f)), Q.ar((f, id_))
        ac, ad = alpha.components[c], alpha.components[d]
        for x in P.ob((d, c)):
            if q_cf(ac(p_fc(x))) != q_fd(ad(p_df(x))):
                return Verdict.failed((f, x), "hexagon does not commute")
    return Verdict.passed()


def check_wedge(tip, legs, F, C=None):
    """F(1,f)∘leg_c = F(f,1)∘leg_c' for every f: c → c'."""
    C = C or _bifunctor_base(F)
    for c in C.objects:
        if c not in legs:
            raise MissingLeg(f"no leg at {c!r}")
    for f in C.morphisms:
        c, d = C.src(f), C.trg(f)
        left, right = F.ar((C.identity(c), f)), F.ar((f, C.identity(d)))
        lc, ld = legs[c], legs[d]
        for y in tip:
            if left(lc(y)) != right(ld(y)):
                return Verdict.failed((f, y), "wedge condition fails")
    return Verdict.passed()


def check_cowedge(tip, colegs, F, C=None):
    """leg_c∘F(f,c) = leg_c'∘F(c',f) on F(c', c) for every f: c → c'."""
    C = C or _bifunctor_base(F)
    for c in C.objects:
        if c not in colegs:
            raise MissingLeg(f"no coleg at {c!r}")
    for f in C.morphisms:
        c, d = C.src(f), C.trg(f)
        left, right = F.ar((f, C.identity(c))), F.ar((C.identity(d), f))
        lc, ld = colegs[c], colegs[d]
        for x in F.ob((d, c)):
            if lc(left(x)) != ld(right(x)):
                return Verdict.failed((f, x), "cowedge condition fails")
    return Verdict.passed()


# -------------------------------------------------------- extranaturality


class ExtranaturalFamily:
    """α_{abc}: P(a,b,b) → Q(a,c,c) for P on A × B^op × B and Q on
    A × C^op × C. Components are keyed by ``(a, b, c)``."""

    def __init__(self, P, Q, A, B, C, components):
        self.P, self.Q = P, Q
        self.A, self.B, self.C = A, B, C
        self.components = dict(components)

    def __getitem__(self, key):
        return self.components[key]


def check_extranatural(alpha):
    """Check the three square families: naturality in A, the cowedge
    condition in B and the wedge condition in C. A failing verdict names
    the family in ``extra['family']``."""
    P, Q, A, B, C = alpha.P, alpha.Q, alpha.A, alpha.B, alpha.C
    comps = alpha.components
    for a in A.objects:
        for b in B.objects:
            for c in C.objects:
                m = comps.get((a, b, c))
                if m is None:
                    raise ShapeMismatch(f"missing component at {(a, b, c)!r}")
                if not P.ob((a, b, b)).same_elements(m.source):
                    raise ShapeMismatch(f"component {(a, b, c)!r} has the wrong domain")
    for f in A.morphisms:
        a, a2 = A.src(f), A.trg(f)
        for b in B.objects:
            pf = P.ar((f, B.identity(b), B.identity(b)))
            for c in C.objects:
                qf = Q.ar((f, C.identity(c), C.identity(c)))
                lhs, rhs = comps[a, b, c], comps[a2, b, c]
                for x in P.ob((a, b, b)):
                    if qf(lhs(x)) != rhs(pf(x)):
                        return Verdict.failed((f, b, c, x), "naturality square fails",
                                              family="A")
    for g in B.morphisms:
        b, b2 = B.src(g), B.trg(g)
        for a in A.objects:
            ia = A.identity(a)
            p_gb = P.ar((ia, g, B.identity(b)))
            p_bg = P.ar((ia, B.identity(b2), g))
            for c in C.objects:
                for x in P.ob((a, b2, b)):
                    if comps[a, b, c](p_gb(x)) != comps[a, b2, c](p_bg(x)):
                        return Verdict.failed((g, a, c, x), "cowedge square fails",
                                              family="B")
    for h in C.morphisms:
        c, c2 = C.src(h), C.trg(h)
        for a in A.objects:
            ia = A.identity(a)
            q_ch = Q.ar((ia, C.identity(c), h))
            q_hc = Q.ar((ia, h, C.identity(c2)))
            for b in B.objects:
                for x in P.ob((a, b, b)):
                    if q_ch(comps[a, b, c](x)) != q_hc(comps[a, b, c2](x)):
                        return Verdict.failed((h, a, b, x), "wedge square fails",
                                              family="C")
    return Verdict.passed()


def extranatural_to_dinatural(alpha):
    """Reindex an extranatural family as a dinatural one on 𝔸 = A × B × C^op.

    With a = (x, y, z) and a' = (x', y', z') the new bifunctors are
    F'(a', a) = P(x, y', y) and G'(a', a) = Q(x, z, z'), and the component
    at a is α_{xyz}.
    """
    P, Q, A, B, C = alpha.P, alpha.Q, alpha.A, alpha.B, alpha.C
    AA = product(A, B, opposite(C))
    base = product(opposite(AA), AA)
    pi_P = FinFunctor.from_callables(
        base, P.base,
        lambda pq: (pq[1][0], pq[0][1], pq[1][1]),
        lambda fg: (fg[1][0], fg[0][1], fg[1][1]), check=False)
    pi_Q = FinFunctor.from_callables(
        base, Q.base,
        lambda pq: (pq[1][0], pq[1][2], pq[0][2]),
        lambda fg: (fg[1][0], fg[1][2], fg[0][2]), check=False)
    Fp = P.precompose(pi_P, name=f"{P.name}'")
    Gp = Q.precompose(pi_Q, name=f"{Q.name}'")
    comps = {a: alpha.components[a] for a in AA.objects}
    return DinaturalFamily(Fp, Gp, comps, C=AA)


# ---------------------------------------------- composition rules for 1.E6


def _reindexed(F, target_base, ob, ar, name):
    """F precomposed with a reindexing functor given by callables."""
    G = FinFunctor.from_callables(target_base, F.base, ob, ar, check=False)
    return F.precompose(G, name=name)


def stalactite(alpha, tip, legs):
    """A natural α: F ⇒ G of bifunctors followed by a cowedge G ⇉ tip
    gives the cowedge leg_c∘α_{cc}: F(c,c) → tip."""
    F = alpha.source
    C = _bifunctor_base(F)
    tip = tip if isinstance(tip, FinSet) else FinSet(tip)
    comps = {c: alpha.components[(c, c)].then(legs[c]) for c in C.objects}
    fam = DinaturalFamily(F, constant_set_functor(F.base, tip), comps, C=C)
    fam.verdict = check_cowedge(tip, comps, F, C)
    return fam


def stalagmite(tip, legs, beta):
    """A wedge tip ⇉ F followed by a natural β: F ⇒ G gives the wedge
    β_{cc}∘leg_c."""
    F, G = beta.source, beta.target
    C = _bifunctor_base(F)
    tip = tip if isinstance(tip, FinSet) else FinSet(tip)
    comps = {c: legs[c].then(beta.components[(c, c)]) for c in C.objects}
    fam = DinaturalFamily(constant_set_functor(F.base, tip), G, comps, C=C)
    fam.verdict = check_wedge(tip, comps, G, C)
    return fam


def yanking(F, G, H, alpha, beta):
    """Yanking rule.

    F, H are covariant on C and G lives on C × C^op × C. ``alpha[x, y]``:
    F(y) → G(x, x, y) is natural in y and a wedge in x; ``beta[x, y]``:
    G(x, y, y) → H(x) is natural in x and a cowedge in y. The composite
    β_{xx}∘α_{xx}: F ⇒ H is returned as a dinatural family between the
    mute bifunctors, with its verdict attached.
    """
    C = F.base
    one = terminal()
    star = "*"
    P_a = _reindexed(F, product(C, opposite(one), one), lambda t: t[0],
                     lambda m: m[0], "F")
    Q_a = _reindexed(G, product(C, opposite(C), C),
                     lambda t: (t[2], t[1], t[0]), lambda m: (m[2], m[1], m[0]), "G")
    ea = ExtranaturalFamily(P_a, Q_a, C, one, C,
                            {(y, star, x): alpha[x, y]
                             for x in C.objects for y in C.objects})
    Q_b = _reindexed(H, product(C, opposite(one), one), lambda t: t[0],
                     lambda m: m[0], "H")
    eb = ExtranaturalFamily(G, Q_b, C, C, one,
                            {(x, y, star): beta[x, y]
                             for x in C.objects for y in C.objects})
    va, vb = check_extranatural(ea), check_extranatural(eb)
    if not va:
        raise ShapeMismatch(f"alpha is not extranatural: {va.detail}")
    if not vb:
        raise ShapeMismatch(f"beta is not extranatural: {vb.detail}")
    comps = {x: alpha[x, x].then(beta[x, x]) for x in C.objects}
    fam = DinaturalFamily(mute(F), mute(H), comps, C=C)
    fam.verdict = SetNat(F, H, comps, check=False).verdict()
    return fam
