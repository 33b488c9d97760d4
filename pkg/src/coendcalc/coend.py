"""Ends, coends, limits and colimits of finite set-valued functors, plus the
comparison witnesses that back every canonical-isomorphism check.

An end is computed as the set of families (x_c) that satisfy the wedge
constraints, found by backtracking object by object with pruning; a coend
is the quotient of the tagged disjoint union by the generating relations.
"""

import itertools
from dataclasses import dataclass, field
from typing import Any

from .config import LIMITS
from .errors import NotAnAdjunction, NotWellDefined, ShapeMismatch, SizeCapExceeded
from .fincat import op_times, opposite, product, twisted_arrows
from .quotient import QuotientSet
from .setfun import (
    FinMap,
    FinSet,
    SetValuedFunctor,
    function_set,
    product_set,
)

# ---------------------------------------------------------------- witnesses


@dataclass
class ComparisonWitness:
    """A constructed comparison map and the verdict on it.

    ``components`` maps a parameter to a FinMap; unparameterized witnesses
    use the single key ``None``. ``natural`` is None when there is no
    parameter to be natural in.
    """

    name: str
    components: dict
    trace: tuple = ()
    bijective: bool = False
    natural: Any = None
    witness: Any = None
    detail: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.bijective and self.natural is not False

    def __bool__(self):
        return self.ok

    @property
    def map(self):
        if len(self.components) != 1:
            raise ValueError("witness has several components; index .components")
        return next(iter(self.components.values()))

    def sizes(self):
        return {repr(p): (len(m.source), len(m.target))
                for p, m in self.components.items()}

    def summary(self):
        return {"name": self.name, "ok": self.ok, "bijective": self.bijective,
                "natural": self.natural, "detail": self.detail,
                "witness": None if self.witness is None else repr(self.witness),
                "trace": list(self.trace)}


def failed_witness(name, trace, detail, witness=None):
    return ComparisonWitness(name, {}, tuple(trace), False, False, witness, detail)


def single_witness(name, m, trace, extra=None):
    bij = m.is_bijective()
    detail = "" if bij else _bij_failure(m)
    return ComparisonWitness(name, {None: m}, tuple(trace), bij, None,
                             None if bij else _bij_witness(m), detail, extra or {})


def _bij_failure(m):
    if not m.is_injective():
        return "not injective"
    return "not surjective"


def _bij_witness(m):
    seen = {}
    for x in m.source:
        y = m(x)
        if y in seen:
            return (seen[y], x)
        seen[y] = x
    hit = set(m.table.values())
    for y in m.target:
        if y not in hit:
            return y
    return None


def natural_witness(name, S, T, components, trace, morphisms=None):
    """Check components S(p) → T(p) pointwise bijective and natural over
    ``morphisms`` (default: every morphism of the common base)."""
    base = S.base
    for p in base.objects:
        m = components[p]
        for x in S.ob(p):
            if m(x) not in T.ob(p):
                return ComparisonWitness(name, components, tuple(trace), False, False,
                                         (p, x), "image outside the target")
    bij, wit, detail = True, None, ""
    for p in base.objects:
        m = components[p]
        if not m.is_bijective():
            bij, wit, detail = False, (p, _bij_witness(m)), f"{_bij_failure(m)} at {p!r}"
            break
    natural = True
    for f in (base.morphisms if morphisms is None else morphisms):
        a, b = base.src(f), base.trg(f)
        Sf, Tf, ma, mb = S.ar(f), T.ar(f), components[a], components[b]
        for x in S.ob(a):
            if Tf(ma(x)) != mb(Sf(x)):
                natural = False
                if wit is None:
                    wit, detail = (f, x), "naturality fails"
                break
        if not natural:
            break
    return ComparisonWitness(name, components, tuple(trace), bij, natural, wit, detail)


# ---------------------------------------------------------------- searching


def _search(objs, domains, checks):
    """All assignments objs[i] ↦ domains[i] satisfying ``checks``.

    ``checks[i]`` lists ``(ja, jb, left, right)`` with max(ja, jb) == i and
    means left(x[ja]) == right(x[jb]); None stands for the identity map.
    """
    n = len(objs)
    out = []
    if any(len(d) == 0 for d in domains):
        return out
    assign = [None] * n
    states = 0
    cap = LIMITS.max_states

    def ok(i):
        for ja, jb, left, right in checks[i]:
            xa, xb = assign[ja], assign[jb]
            if (xa if left is None else left(xa)) != (xb if right is None else right(xb)):
                return False
        return True

    def go(i):
        nonlocal states
        if i == n:
            out.append(tuple(assign))
            return
        for x in domains[i]:
            states += 1
            if states > cap:
                raise SizeCapExceeded(
                    f"family search exceeded {cap} partial states")
            assign[i] = x
            if ok(i):
                go(i + 1)
        assign[i] = None

    go(0)
    return out


class EndResult:
    """Universal wedge of a bifunctor (or universal cone of a functor)."""

    def __init__(self, functor, C, carrier, kind="end"):
        self.functor = functor
        self.C = C
        self.carrier = carrier
        self.kind = kind
        self._pos = {c: i for i, c in enumerate(C.objects)}
        self.legs = {c: FinMap(carrier, self._fiber(c), {x: x[i] for x in carrier},
                               check=False)
                     for c, i in self._pos.items()}

    def _fiber(self, c):
        F = self.functor
        return F.ob((c, c)) if self.kind == "end" else F.ob(c)

    def __len__(self):
        return len(self.carrier)

    def __iter__(self):
        return iter(self.carrier)

    def component(self, x, c):
        return x[self._pos[c]]

    def family(self, x):
        return dict(zip(self.C.objects, x))

    def mediator(self, tip, legs):
        """The unique map tip → carrier through which ``legs`` factor.
        Raises ShapeMismatch when ``legs`` is not a wedge (cone)."""
        tip = tip if isinstance(tip, FinSet) else FinSet(tip)
        table = {}
        for y in tip:
            x = tuple(legs[c](y) for c in self.C.objects)
            if x not in self.carrier:
                raise ShapeMismatch(f"legs at {y!r} do not form a wedge")
            table[y] = x
        return FinMap(tip, self.carrier, table, check=False)


def end(F, C=None):
    """∫_c F(c, c) for a bifunctor F on C^op × C."""
    C = C or _base_of(F)
    objs = list(C.objects)
    pos = {c: i for i, c in enumerate(objs)}
    checks = [[] for _ in objs]
    for phi in C.morphisms:
        c, d = C.src(phi), C.trg(phi)
        if c == d and C.is_identity(phi):
            continue
        left = F.ar((C.identity(c), phi))
        right = F.ar((phi, C.identity(d)))
        checks[max(pos[c], pos[d])].append((pos[c], pos[d], left, right))
    fams = _search(objs, [F.ob((c, c)) for c in objs], checks)
    return EndResult(F, C, FinSet(fams), kind="end")


def end_via_equalizer(F, C=None):
    """The equalizer of ∏_c F(c, c) ⇉ ∏_φ F(c, c'), computed by filtering
    the full product; an independent route to the end carrier."""
    C = C or _base_of(F)
    objs = list(C.objects)
    total = 1
    for c in objs:
        total *= len(F.ob((c, c)))
    if total > LIMITS.max_states:
        raise SizeCapExceeded(f"product of {total} families exceeds the cap")
    maps = [(objs.index(C.src(phi)), objs.index(C.trg(phi)),
             F.ar((C.identity(C.src(phi)), phi)), F.ar((phi, C.identity(C.trg(phi)))))
            for phi in C.morphisms if not C.is_identity(phi)]
    return FinSet(x for x in itertools.product(*(F.ob((c, c)) for c in objs))
                  if all(left(x[i]) == right(x[j]) for i, j, left, right in maps))


def limit(F):
    """lim F for a covariant functor F, as the set of compatible families."""
    C = F.base
    objs = list(C.objects)
    pos = {c: i for i, c in enumerate(objs)}
    checks = [[] for _ in objs]
    for f in C.morphisms:
        if C.is_identity(f):
            continue
        a, b = C.src(f), C.trg(f)
        checks[max(pos[a], pos[b])].append((pos[a], pos[b], F.ar(f), None))
    fams = _search(objs, [F.ob(c) for c in objs], checks)
    return EndResult(F, C, FinSet(fams), kind="limit")


def _base_of(F):
    fs = F.base.factors
    if fs is None or len(fs) != 2:
        raise ShapeMismatch("expected a bifunctor on C^op × C")
    return fs[1]


class CoendResult:
    """Universal cowedge (or cocone): a quotient of a tagged disjoint union."""

    def __init__(self, functor, C, quotient, kind="coend"):
        self.functor = functor
        self.C = C
        self.quotient = quotient
        self.kind = kind
        self.carrier = quotient.carrier()
        self.colegs = {c: FinMap(self._fiber(c), self.carrier,
                                 {x: quotient.rep((c, x)) for x in self._fiber(c)},
                                 check=False)
                       for c in C.objects}

    def _fiber(self, c):
        F = self.functor
        return F.ob((c, c)) if self.kind == "coend" else F.ob(c)

    def __len__(self):
        return len(self.carrier)

    def __iter__(self):
        return iter(self.carrier)

    @property
    def relations(self):
        return self.quotient.relations

    def cls(self, c, x):
        return self.quotient.rep((c, x))

    def classes(self):
        return self.quotient.classes()

    def descend(self, fn, target):
        """The map carrier → target induced by ``fn(c, x)`` on tagged
        elements, after checking it is constant on every class."""
        target = target if isinstance(target, FinSet) else FinSet(target)
        table = {}
        for rep, members in self.quotient.classes().items():
            val = fn(*rep)
            for e in members[1:]:
                other = fn(*e)
                if other != val:
                    raise NotWellDefined(
                        f"map is not constant on the class of {rep!r}",
                        witness=(rep, e, val, other))
            table[rep] = val
        return FinMap(self.carrier, target, table, check=False)

    def mediator(self, tip, colegs):
        """The unique carrier → tip map through which a cowedge factors."""
        return self.descend(lambda c, x: colegs[c](x), tip)


def coend(F, C=None):
    """∫^c F(c, c): (⊔_c F(c,c))/∼ with F(φ,c)(x) ∼ F(c',φ)(x) for
    φ: c → c' and x ∈ F(c', c)."""
    C = C or _base_of(F)
    Q = QuotientSet((c, F.ob((c, c))) for c in C.objects)
    for phi in C.morphisms:
        c, d = C.src(phi), C.trg(phi)
        if C.is_identity(phi):
            continue
        left = F.ar((phi, C.identity(c)))
        right = F.ar((C.identity(d), phi))
        for x in F.ob((d, c)):
            Q.relate((c, left(x)), (d, right(x)))
    return CoendResult(F, C, Q, kind="coend")


def colimit(F):
    """colim F: (⊔_c Fc)/∼ with x ∼ F(f)(x)."""
    C = F.base
    Q = QuotientSet((c, F.ob(c)) for c in C.objects)
    for f in C.morphisms:
        if C.is_identity(f):
            continue
        Ff, a, b = F.ar(f), C.src(f), C.trg(f)
        for x in F.ob(a):
            Q.relate((a, x), (b, Ff(x)))
    return CoendResult(F, C, Q, kind="colimit")


# ---------------------------------------------------- parametric co/ends


def integrand(C, P, ob, ar, name=None):
    """A functor on C^op × C × P from callables ``ob(c', c, p)`` and
    ``ar((f, g, π), x)``."""
    return SetValuedFunctor(product(opposite(C), C, P), lambda t: ob(*t), ar,
                            check=False, name=name or "∫")


def _slice(G, C, P, p):
    ip = P.identity(p)
    return SetValuedFunctor(op_times(C), lambda cc: G.ob((cc[0], cc[1], p)),
                            lambda fg, x: G.ar((fg[0], fg[1], ip))(x), check=False)


class ParamCoend(SetValuedFunctor):
    """p ↦ ∫^c G(c, c, p) for G on C^op × C × P, as a functor on P.

    Elements are class representatives ``(c, x)``. The action of π is
    computed on representatives; :meth:`verify_actions` re-checks that it
    is constant on classes.
    """

    def __init__(self, G, C, P, name=None):
        self.G, self.C, self.P = G, C, P
        self._at = {}
        super().__init__(P, lambda p: self.at(p).carrier, self._act, check=False,
                         name=name or "∫^")

    def at(self, p):
        r = self._at.get(p)
        if r is None:
            r = coend(_slice(self.G, self.C, self.P, p), self.C)
            self._at[p] = r
        return r

    def cls(self, p, c, x):
        return self.at(p).cls(c, x)

    def _lift(self, pi, c, x):
        C = self.C
        return self.G.ar((C.identity(c), C.identity(c), pi))(x)

    def _act(self, pi, rep):
        c, x = rep
        return self.at(self.P.trg(pi)).cls(c, self._lift(pi, c, x))

    def verify_actions(self):
        for pi in self.P.morphisms:
            tgt = self.at(self.P.trg(pi))
            for rep, members in self.at(self.P.src(pi)).classes().items():
                val = tgt.cls(rep[0], self._lift(pi, *rep))
                for c, x in members[1:]:
                    if tgt.cls(c, self._lift(pi, c, x)) != val:
                        raise NotWellDefined(
                            f"action of {pi!r} is not constant on {rep!r}",
                            witness=(pi, rep, (c, x)))
        return True


class ParamEnd(SetValuedFunctor):
    """p ↦ ∫_c G(c, c, p) for G on C^op × C × P, as a functor on P.
    Elements are families, i.e. tuples indexed by C.objects."""

    def __init__(self, G, C, P, name=None):
        self.G, self.C, self.P = G, C, P
        self._at = {}
        super().__init__(P, lambda p: self.at(p).carrier, self._act, check=False,
                         name=name or "∫_")

    def at(self, p):
        r = self._at.get(p)
        if r is None:
            r = end(_slice(self.G, self.C, self.P, p), self.C)
            self._at[p] = r
        return r

    def _act(self, pi, fam):
        C = self.C
        return tuple(self.G.ar((C.identity(c), C.identity(c), pi))(x)
                     for c, x in zip(C.objects, fam))

    def verify_actions(self):
        for pi in self.P.morphisms:
            tgt = self.at(self.P.trg(pi)).carrier
            for fam in self.at(self.P.src(pi)).carrier:
                if self._act(pi, fam) not in tgt:
                    raise NotWellDefined(f"action of {pi!r} leaves the end",
                                         witness=(pi, fam))
        return True


def param_coend(C, P, ob, ar, name=None):
    return ParamCoend(integrand(C, P, ob, ar), C, P, name=name)


def param_end(C, P, ob, ar, name=None):
    return ParamEnd(integrand(C, P, ob, ar), C, P, name=name)


def end_map(eta, E_src, E_trg):
    """∫η: the map of ends induced by a natural η: F ⇒ F' of bifunctors."""
    C = E_src.C
    table = {x: tuple(eta.components[(c, c)](xc) for c, xc in zip(C.objects, x))
             for x in E_src.carrier}
    return FinMap(E_src.carrier, E_trg.carrier, table)


def coend_map(eta, K_src, K_trg):
    """∫^η: the map of coends induced by η: F ⇒ F'."""
    return K_src.descend(lambda c, x: K_trg.cls(c, eta.components[(c, c)](x)),
                         K_trg.carrier)


# ------------------------------------------------------------ theorems


def nat_set(F, G):
    """Nat(F, G) ≅ ∫_c D(Fc, Gc) for parallel FinFunctors.

    Returns the end and a witness comparing it with the brute-force set of
    natural transformations.
    """
    from .fincat import NatTransformation, natural_transformations

    C, D = F.source, F.target
    H = SetValuedFunctor(op_times(C), lambda cc: D.hom(F.ob(cc[0]), G.ob(cc[1])),
                         lambda fg, u: D.compose_path(G.ar(fg[1]), u, F.ar(fg[0])),
                         check=False, name="D(F−,G=)")
    E = end(H, C)
    for x in E.carrier:
        NatTransformation(F, G, E.family(x))
    brute = FinSet(tuple(t[c] for c in C.objects) for t in natural_transformations(F, G))
    table = {x: x for x in E.carrier if x in brute}
    if len(table) != len(E.carrier):
        bad = next(x for x in E.carrier if x not in brute)
        return E, failed_witness("nat-as-end", ["end of D(F−,G=)"],
                                 "end family is not a natural transformation", bad)
    m = FinMap(E.carrier, brute, table, check=False)
    return E, single_witness("nat-as-end", m,
                             ["end of D(F−,G=) by constraint propagation",
                              "brute-force component enumeration",
                              "families read as components"])


def fubini(F, C, E):
    """Joint and iterated ends of F on (C×E)^op × (C×E).

    Returns ``(joint, iter_ce, iter_ec, witnesses)``: the iterated ends are
    ∫_c ∫_e and ∫_e ∫_c; each witness is the reindexing mediator between two
    of the three, checked bijective and compatible with the legs.
    """
    CE = F.base.factors[1]
    joint = end(F, CE)

    def inner_over(X, Y, first_is_x):
        # inner end over Y, parameterized by (x', x) in X^op × X
        def ob(y1, y2, xx):
            a, b = (xx[0], y1), (xx[1], y2)
            if not first_is_x:
                a, b = (y1, xx[0]), (y2, xx[1])
            return F.ob((a, b))

        def ar(m, v):
            h, k, (f, g) = m
            if first_is_x:
                return F.ar(((f, h), (g, k)))(v)
            return F.ar(((h, f), (k, g)))(v)

        inner = param_end(Y, op_times(X), ob, ar)
        return end(inner, X)

    C_first = inner_over(C, E, True)
    E_first = inner_over(E, C, False)
    pos = {ce: i for i, ce in enumerate(CE.objects)}

    def to_ce(x):
        return tuple(tuple(x[pos[c, e]] for e in E.objects) for c in C.objects)

    def to_ec(x):
        return tuple(tuple(x[pos[c, e]] for c in C.objects) for e in E.objects)

    def ce_to_ec(y):
        return tuple(tuple(y[i][j] for i in range(len(C.objects)))
                     for j in range(len(E.objects)))

    ws = []
    for name, src, trg, fn in (("joint→∫c∫e", joint, C_first, to_ce),
                               ("joint→∫e∫c", joint, E_first, to_ec),
                               ("∫c∫e→∫e∫c", C_first, E_first, ce_to_ec)):
        table = {}
        bad = None
        for x in src.carrier:
            y = fn(x)
            if y not in trg.carrier:
                bad = x
                break
            table[x] = y
        if bad is not None:
            ws.append(failed_witness(name, ["reindex families"],
                                     "family is not a wedge of the target", bad))
            continue
        m = FinMap(src.carrier, trg.carrier, table, check=False)
        w = single_witness(name, m, ["universal property of the target end",
                                     "reindex families"])
        ws.append(w)
    return joint, C_first, E_first, ws


def hom_preserves(F, probes):
    """Sets(x, ∫F) ≅ ∫ Sets(x, F(−,−)), natural in x over the probe maps.

    ``probes`` is a list of FinSets; naturality is checked for every map
    between two probes.
    """
    C = _base_of(F)
    E = end(F, C)
    probes = [p if isinstance(p, FinSet) else FinSet(p) for p in probes]
    comps, sides = {}, {}
    for i, x in enumerate(probes):
        lhs = function_set(x, E.carrier)
        H = SetValuedFunctor(op_times(C), lambda cc, x=x: function_set(x, F.ob(cc)),
                             lambda fg, h: h.then(F.ar(fg)), check=False)
        rhs = end(H, C)
        table = {h: tuple(h.then(E.legs[c]) for c in C.objects) for h in lhs}
        for h, y in table.items():
            if y not in rhs.carrier:
                return failed_witness("hom-preserves-end", ["post-compose with legs"],
                                      "image is not a wedge", (x, h))
        comps[i] = FinMap(lhs, rhs.carrier, table, check=False)
        sides[i] = (lhs, rhs)
    return _probe_natural("hom-preserves-end", probes, comps, sides,
                          lambda u, h: u.then(h),
                          lambda u, fam: tuple(u.then(v) for v in fam),
                          ["post-compose with the end legs"], contravariant=True)


def hom_out_of_coend(F, probes):
    """Sets(∫^F, y) ≅ ∫_c Sets(F(c,c), y), natural in y over the probe maps."""
    C = _base_of(F)
    K = coend(F, C)
    probes = [p if isinstance(p, FinSet) else FinSet(p) for p in probes]
    comps, sides = {}, {}
    for i, y in enumerate(probes):
        lhs = function_set(K.carrier, y)
        # (c', c) ↦ Sets(F(c, c'), y)
        H = SetValuedFunctor(op_times(C),
                             lambda cc, y=y: function_set(F.ob((cc[1], cc[0])), y),
                             lambda fg, h: F.ar((fg[1], fg[0])).then(h), check=False)
        rhs = end(H, C)
        table = {h: tuple(K.colegs[c].then(h) for c in C.objects) for h in lhs}
        for h, v in table.items():
            if v not in rhs.carrier:
                return failed_witness("hom-out-of-coend", ["pre-compose with colegs"],
                                      "image is not a wedge", (y, h))
        comps[i] = FinMap(lhs, rhs.carrier, table, check=False)
        sides[i] = (lhs, rhs)
    return _probe_natural("hom-out-of-coend", probes, comps, sides,
                          lambda u, h: h.then(u),
                          lambda u, fam: tuple(v.then(u) for v in fam),
                          ["pre-compose with the coend colegs"], contravariant=False)


def _probe_natural(name, probes, comps, sides, act_lhs, act_rhs, trace, contravariant):
    bij = all(m.is_bijective() for m in comps.values())
    wit, detail = None, ""
    if not bij:
        i = next(i for i, m in comps.items() if not m.is_bijective())
        wit, detail = (probes[i], _bij_witness(comps[i])), _bij_failure(comps[i])
    natural = True
    for i, x in enumerate(probes):
        for j, y in enumerate(probes):
            # contravariant: maps u: y → x act on Sets(x, −) by precomposition
            src, dst = (j, i) if contravariant else (i, j)
            for u in function_set(probes[src], probes[dst]):
                for h in sides[i][0]:
                    if comps[j](act_lhs(u, h)) != act_rhs(u, comps[i](h)):
                        natural = False
                        wit = wit or (u, h)
                        detail = detail or "naturality fails"
                        break
                if not natural:
                    break
            if not natural:
                break
        if not natural:
            break
    return ComparisonWitness(name, comps, tuple(trace), bij, natural, wit, detail)


def check_adjunction(L, R, unit, counit):
    """Triangle identities for L ⊣ R given unit id ⇒ RL and counit LR ⇒ id
    as component tables. Raises NotAnAdjunction."""
    C, D = L.source, L.target
    for c in C.objects:
        if D.compose(counit[L.ob(c)], L.ar(unit[c])) != D.identity(L.ob(c)):
            raise NotAnAdjunction(f"triangle identity fails at {c!r}")
    for d in D.objects:
        if C.compose(R.ar(counit[d]), unit[R.ob(d)]) != C.identity(R.ob(d)):
            raise NotAnAdjunction(f"triangle identity fails at {d!r}")


def adjoint_shift(L, R, unit, counit, G):
    """∫^c G(Lc, c) ≅ ∫^d G(d, Rd) for L ⊣ R: C ⇄ D and G on D^op × C.

    The forward map sends [c, x] to [Lc, G(Lc, η_c)(x)]; the backward map
    sends [d, y] to [Rd, G(ε_d, Rd)(y)]. Both are checked well defined and
    mutually inverse.
    """
    check_adjunction(L, R, unit, counit)
    C, D = L.source, L.target
    G1 = SetValuedFunctor(op_times(C), lambda cc: G.ob((L.ob(cc[0]), cc[1])),
                          lambda fg, x: G.ar((L.ar(fg[0]), fg[1]))(x), check=False)
    G2 = SetValuedFunctor(op_times(D), lambda dd: G.ob((dd[0], R.ob(dd[1]))),
                          lambda fg, x: G.ar((fg[0], R.ar(fg[1])))(x), check=False)
    K1, K2 = coend(G1, C), coend(G2, D)
    trace = ["cowedge x ↦ G(Lc, η_c)(x) into ∫^d G(d, Rd)",
             "cowedge y ↦ G(ε_d, Rd)(y) into ∫^c G(Lc, c)"]
    try:
        fwd = K1.descend(lambda c, x: K2.cls(L.ob(c), G.ar((D.identity(L.ob(c)), unit[c]))(x)),
                         K2.carrier)
        bwd = K2.descend(lambda d, y: K1.cls(R.ob(d), G.ar((counit[d], C.identity(R.ob(d))))(y)),
                         K1.carrier)
    except NotWellDefined as e:
        return failed_witness("adjoint-shift", trace, str(e), e.witness)
    w = single_witness("adjoint-shift", fwd, trace)
    inverse = all(bwd(fwd(x)) == x for x in K1.carrier) and \
        all(fwd(bwd(y)) == y for y in K2.carrier)
    if not inverse:
        w.bijective = False
        w.detail = w.detail or "forward and backward maps are not inverse"
    return w


def coend_as_colimit(F):
    """Compare ∫^c F with the colimit of F over TW(C^op)^op."""
    C = _base_of(F)
    _TW, sigma = twisted_arrows(opposite(C))
    G = F.precompose(sigma.opposite(), name="F∘Σ")
    L = colimit(G)
    K = coend(F, C)
    trace = ["colimit cocone from the coend cowedge",
             "x ∈ F(c', c) at m: c → c' goes to [c, F(m, c)(x)]"]
    try:
        m = L.descend(lambda mm, x: K.cls(C.src(mm),
                                          F.ar((mm, C.identity(C.src(mm))))(x)),
                      K.carrier)
    except NotWellDefined as e:
        return failed_witness("coend-as-colimit", trace, str(e), e.witness)
    return single_witness("coend-as-colimit", m, trace)


def elmendorf_check(X):
    """∫^{H ∈ Orb(G)} X^H × G/H → X, [H, (x, aH)] ↦ a·x."""
    from .groups import coset_functor, fixed_point_presheaf, orbit_category

    G = X.group
    orb = orbit_category(G)
    fix, cos = fixed_point_presheaf(X, orb), coset_functor(G, orb)
    F = SetValuedFunctor(op_times(orb),
                         lambda hh: product_set(fix.ob(hh[0]), cos.ob(hh[1])),
                         lambda fg, xa: (fix.ar(fg[0])(xa[0]), cos.ar(fg[1])(xa[1])),
                         check=False, name="X^H×G/H")
    K = coend(F, orb)
    trace = ["cowedge (x, aH) ↦ a·x", "descend to the coend"]
    try:
        m = K.descend(lambda H, xa: X.act(xa[1][0], xa[0]), X.elements)
    except NotWellDefined as e:
        return failed_witness("elmendorf", trace, str(e), e.witness)
    return single_witness("elmendorf", m, trace, extra={"coend": K})
