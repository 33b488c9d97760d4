"""Finite categories, functors between them and the derived categories
(opposite, products, twisted arrows, coslices, categories of elements).

Objects and morphisms are arbitrary hashable identifiers. Categories read
from files use strings; derived categories tag their identifiers with
tuples so that every construction is deterministic.
"""

import itertools
from collections import defaultdict

from .config import LIMITS
from .errors import (
    AssociativityViolation,
    CategoryError,
    FunctorError,
    MissingIdentity,
    NonComposablePair,
    ShapeMismatch,
    SizeCapExceeded,
    UnitViolation,
)
from .verdict import Verdict


class FinCategory:
    """A finite category given by explicit tables.

    ``compose`` is either a dict ``(g, f) -> g∘f`` over the composable pairs
    or a callable; derived categories pass a callable that composes
    componentwise in their factors so large products never need a dense
    table in memory.
    """

    def __init__(self, objects, morphisms, identities, compose, name=None,
                 check=True, factors=None):
        self.name = name or "C"
        self.objects = tuple(objects)
        self.morphisms = tuple(m for m, _, _ in morphisms)
        self._src = {}
        self._trg = {}
        for m, s, t in morphisms:
            if m in self._src:
                raise CategoryError(f"duplicate morphism id {m!r}")
            self._src[m] = s
            self._trg[m] = t
        self._ident = dict(identities)
        if callable(compose):
            self._table = None
            self._compose_fn = compose
        else:
            self._table = dict(compose)
            self._compose_fn = None
        self.factors = tuple(factors) if factors else None
        self._op = None
        self._objset = frozenset(self.objects)
        hom, out, inc = defaultdict(list), defaultdict(list), defaultdict(list)
        for m in self.morphisms:
            hom[self._src[m], self._trg[m]].append(m)
            out[self._src[m]].append(m)
            inc[self._trg[m]].append(m)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._out = {k: tuple(v) for k, v in out.items()}
        self._in = {k: tuple(v) for k, v in inc.items()}
        if check:
            self.validate()

    def __repr__(self):
        return (f"FinCategory({self.name!r}, {len(self.objects)} objects, "
                f"{len(self.morphisms)} morphisms)")

    # basic structure

    def src(self, f):
        return self._src[f]

    def trg(self, f):
        return self._trg[f]

    def identity(self, a):
        return self._ident[a]

    def has_object(self, a):
        return a in self._objset

    def has_morphism(self, f):
        return f in self._src

    def hom(self, a, b):
        return self._hom.get((a, b), ())

    def is_identity(self, f):
        return self._ident.get(self._src[f]) == f

    def compose(self, g, f):
        """g∘f."""
        if self._trg[f] != self._src[g]:
            raise NonComposablePair(
                f"cannot compose {g!r} after {f!r}: "
                f"{self._trg[f]!r} != {self._src[g]!r}")
        if self._compose_fn is not None:
            return self._compose_fn(g, f)
        return self._table[g, f]

    def compose_path(self, *fs):
        """Compose ``fs[0] ∘ fs[1] ∘ ...``."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose(g, out)
        return out

    def composable_pairs(self):
        for f in self.morphisms:
            for g in self.outgoing(self._trg[f]):
                yield g, f

    def outgoing(self, a):
        return self._out.get(a, ())

    def incoming(self, b):
        return self._in.get(b, ())

    def nonidentity_morphisms(self):
        return tuple(m for m in self.morphisms if not self.is_identity(m))

    def inverse(self, f):
        """The inverse of ``f`` or None."""
        a, b = self._src[f], self._trg[f]
        for g in self.hom(b, a):
            if (self.compose(g, f) == self._ident[a]
                    and self.compose(f, g) == self._ident[b]):
                return g
        return None

    def is_iso(self, f):
        return self.inverse(f) is not None

    # laws

    def validate(self):
        """Exhaustively check identities, composition domains, unit and
        associativity laws. Raises on the first defect found."""
        for a in self.objects:
            i = self._ident.get(a)
            if i is None or i not in self._src:
                raise MissingIdentity(f"object {a!r} has no identity morphism")
            if self._src[i] != a or self._trg[i] != a:
                raise MissingIdentity(
                    f"identity {i!r} of {a!r} is not an endomorphism of {a!r}")
        for m in self.morphisms:
            for end in (self._src[m], self._trg[m]):
                if end not in self._objset:
                    raise CategoryError(
                        f"morphism {m!r} touches unknown object {end!r}")
        if self._table is not None:
            for (g, f) in self._table:
                if g not in self._src or f not in self._src:
                    raise NonComposablePair(
                        f"composition entry for unknown morphism in ({g!r}, {f!r})")
                if self._trg[f] != self._src[g]:
                    raise NonComposablePair(
                        f"composition given for non-composable pair ({g!r}, {f!r})")
        for g, f in self.composable_pairs():
            try:
                gf = self.compose(g, f)
            except KeyError:
                raise NonComposablePair(
                    f"composable pair ({g!r}, {f!r}) has no composite") from None
            if gf not in self._src:
                raise NonComposablePair(
                    f"composite of ({g!r}, {f!r}) is unknown morphism {gf!r}")
            if self._src[gf] != self._src[f] or self._trg[gf] != self._trg[g]:
                raise NonComposablePair(
                    f"composite {gf!r} of ({g!r}, {f!r}) has wrong source/target")
        for f in self.morphisms:
            if self.compose(self._ident[self._trg[f]], f) != f:
                raise UnitViolation(f"id∘{f!r} != {f!r}")
            if self.compose(f, self._ident[self._src[f]]) != f:
                raise UnitViolation(f"{f!r}∘id != {f!r}")
        for f in self.morphisms:
            for g in self.outgoing(self._trg[f]):
                gf = self.compose(g, f)
                for h in self.outgoing(self._trg[g]):
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f):
                        raise AssociativityViolation(
                            f"(h, g, f) = ({h!r}, {g!r}, {f!r}) is not associative")
        return self

    def composition_table(self):
        return {(g, f): self.compose(g, f) for g, f in self.composable_pairs()}


def same_category(C, D):
    """Structural equality: same objects, morphisms, identities and
    composites (checked over all composable pairs)."""
    if C is D:
        return True
    if C.objects != D.objects or C.morphisms != D.morphisms:
        return False
    for m in C.morphisms:
        if not D.has_morphism(m) or C.src(m) != D.src(m) or C.trg(m) != D.trg(m):
            return False
    if any(C.identity(a) != D.identity(a) for a in C.objects):
        return False
    return all(C.compose(g, f) == D.compose(g, f) for g, f in C.composable_pairs())


# ---------------------------------------------------------------- builders


def _parse_morphisms(raw):
    out = []
    for m in raw:
        if isinstance(m, dict):
            out.append((m["id"], m["src"], m["trg"]))
        else:
            mid, s, t = m
            out.append((mid, s, t))
    return out


def validate_category(desc, name=None):
    """Build a FinCategory from a plain description and verify all laws.

    ``desc`` has keys ``objects``, ``morphisms`` (records with id/src/trg),
    ``identities`` (mapping or pairs) and ``composition`` (triples
    ``[g, f, gf]``). Composites with an identity may be omitted.
    """
    objects = list(desc["objects"])
    morphisms = _parse_morphisms(desc["morphisms"])
    if len(objects) > LIMITS.max_objects:
        raise SizeCapExceeded(
            f"{len(objects)} objects exceeds the cap of {LIMITS.max_objects}")
    if len(morphisms) > LIMITS.max_morphisms:
        raise SizeCapExceeded(
            f"{len(morphisms)} morphisms exceeds the cap of {LIMITS.max_morphisms}")
    idents = desc.get("identities", {})
    if not isinstance(idents, dict):
        idents = dict(idents)
    table = {}
    for g, f, gf in desc.get("composition", ()):
        if (g, f) in table and table[g, f] != gf:
            raise CategoryError(f"conflicting composites for ({g!r}, {f!r})")
        table[g, f] = gf
    known = {m for m, _, _ in morphisms}
    for a in objects:
        if a not in idents:
            raise MissingIdentity(f"object {a!r} has no identity morphism")
    # fill in the composites with identities that the document left implicit
    for m, s, t in morphisms:
        i_s, i_t = idents.get(s), idents.get(t)
        if i_t in known and (i_t, m) not in table:
            table[i_t, m] = m
        if i_s in known and (m, i_s) not in table:
            table[m, i_s] = m
    return FinCategory(objects, morphisms, idents, table,
                       name=name or desc.get("name"), check=True)


def discrete(objects, name="discrete"):
    objects = list(objects)
    morphisms = [(("id", a), a, a) for a in objects]
    idents = {a: ("id", a) for a in objects}
    table = {(("id", a), ("id", a)): ("id", a) for a in objects}
    return FinCategory(objects, morphisms, idents, table, name=name)


def terminal():
    return FinCategory(["*"], [("id*", "*", "*")], {"*": "id*"},
                       {("id*", "id*"): "id*"}, name="1")


def walking_arrow():
    """The category 2 = {0 → 1}."""
    return validate_category({
        "objects": ["0", "1"],
        "morphisms": [["id0", "0", "0"], ["id1", "1", "1"], ["f", "0", "1"]],
        "identities": {"0": "id0", "1": "id1"},
        "composition": [],
    }, name="2")


def walking_iso():
    return validate_category({
        "objects": ["0", "1"],
        "morphisms": [["id0", "0", "0"], ["id1", "1", "1"],
                      ["f", "0", "1"], ["g", "1", "0"]],
        "identities": {"0": "id0", "1": "id1"},
        "composition": [["g", "f", "id0"], ["f", "g", "id1"]],
    }, name="Iso")


def poset(elements, leq, name="poset"):
    """Thin category of a finite preorder. ``leq`` is a predicate or a set of
    pairs; reflexive-transitive closure is taken. Morphism ``(a, b)`` is
    the unique arrow a → b."""
    elements = list(elements)
    if callable(leq):
        rel = {(a, b) for a in elements for b in elements if leq(a, b)}
    else:
        rel = set(map(tuple, leq))
    rel |= {(a, a) for a in elements}
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for c in elements:
                if (b, c) in rel and (a, c) not in rel:
                    rel.add((a, c))
                    changed = True
    morphisms = [((a, b), a, b) for a in elements for b in elements if (a, b) in rel]
    idents = {a: (a, a) for a in elements}
    return FinCategory(elements, morphisms, idents,
                       lambda g, f: (f[0], g[1]), name=name)


def chain(n, name=None):
    return poset(range(n), lambda a, b: a <= b, name=name or f"[{n - 1}]")


def monoid_category(elements, mult, unit, name="BM", obj="*"):
    """One-object category of a finite monoid; g∘f is ``mult(g, f)``."""
    elements = list(elements)
    if unit not in elements:
        raise MissingIdentity(f"unit {unit!r} is not an element")
    table = {(g, f): mult(g, f) for g in elements for f in elements}
    return FinCategory([obj], [(m, obj, obj) for m in elements], {obj: unit},
                       table, name=name)


def cyclic_group(n, name=None):
    return monoid_category(range(n), lambda g, f: (g + f) % n, 0,
                           name=name or f"BZ/{n}")


def symmetric_group(n=3, name=None):
    """B S_n; elements are permutations as tuples, g∘f composes as maps."""
    elements = list(itertools.permutations(range(n)))
    unit = tuple(range(n))
    return monoid_category(elements, lambda g, f: tuple(g[f[i]] for i in range(n)),
                           unit, name=name or f"BS{n}")


# ------------------------------------------------------------- combinators


def opposite(C):
    """C^op; morphism ids are shared with C and ``compose(g, f)`` is
    ``C.compose(f, g)``. Involutive on the nose."""
    if C._op is not None:
        return C._op
    op = FinCategory(C.objects, [(m, C.trg(m), C.src(m)) for m in C.morphisms],
                     {a: C.identity(a) for a in C.objects},
                     lambda g, f: C.compose(f, g),
                     name=_op_name(C.name), check=False,
                     factors=[opposite(X) for X in C.factors] if C.factors else None)
    op._op = C
    C._op = op
    return op


def _op_name(name):
    return name[:-3] if name.endswith("^op") else name + "^op"


def product(*cats, name=None):
    """Cartesian product; objects and morphisms are tuples."""
    if not cats:
        return terminal()
    objects = list(itertools.product(*(C.objects for C in cats)))
    morphisms = [(fs, tuple(C.src(f) for C, f in zip(cats, fs)),
                  tuple(C.trg(f) for C, f in zip(cats, fs)))
                 for fs in itertools.product(*(C.morphisms for C in cats))]
    idents = {a: tuple(C.identity(x) for C, x in zip(cats, a)) for a in objects}

    def comp(g, f):
        return tuple(C.compose(gi, fi) for C, gi, fi in zip(cats, g, f))

    return FinCategory(objects, morphisms, idents, comp,
                       name=name or "×".join(C.name for C in cats),
                       check=False, factors=cats)


def op_times(C):
    """C^op × C, cached on C since every bifunctor over C lives there."""
    B = getattr(C, "_op_times", None)
    if B is None:
        B = product(opposite(C), C)
        C._op_times = B
    return B


def twisted_arrows(C):
    """TW(C) together with its projection to C^op × C.

    A morphism from f: c→c' to g: d→d' is ``(f, g, h, k)`` with
    h: d→c, k: c'→d' and k∘f∘h = g.
    """
    objects = list(C.morphisms)
    morphisms = []
    for f in C.morphisms:
        for g in C.morphisms:
            for h in C.hom(C.src(g), C.src(f)):
                fh = C.compose(f, h)
                for k in C.hom(C.trg(f), C.trg(g)):
                    if C.compose(k, fh) == g:
                        morphisms.append(((f, g, h, k), f, g))
    idents = {f: (f, f, C.identity(C.src(f)), C.identity(C.trg(f))) for f in objects}

    def comp(second, first):
        f, _, h1, k1 = first
        _, e, h2, k2 = second
        return (f, e, C.compose(h1, h2), C.compose(k2, k1))

    TW = FinCategory(objects, morphisms, idents, comp, name=f"TW({C.name})",
                     check=False)
    base = op_times(C)
    proj = FinFunctor(TW, base,
                      {f: (C.src(f), C.trg(f)) for f in objects},
                      {m: (m[2], m[3]) for m in TW.morphisms}, check=False)
    return TW, proj


def coslice(C, c0):
    """c0/C; objects are arrows u out of c0, a morphism ``(t, u)`` runs from
    u to t∘u."""
    objects = [u for b in C.objects for u in C.hom(c0, b)]
    morphisms = [((t, u), u, C.compose(t, u))
                 for u in objects for t in C.outgoing(C.trg(u))]
    idents = {u: (C.identity(C.trg(u)), u) for u in objects}
    return FinCategory(objects, morphisms, idents,
                       lambda g, f: (C.compose(g[0], f[0]), f[1]),
                       name=f"{c0}/{C.name}", check=False)


def category_of_elements(W, check_isofibration=True):
    """C∫W for a covariant set-valued functor W, with its projection Σ.

    Objects are ``(c, u)`` with u ∈ Wc; the morphism ``(f, u)`` is the
    unique lift of f: c→c' starting at (c, u).
    """
    C = W.base
    objects = [(c, u) for c in C.objects for u in W.ob(c)]
    morphisms = [((f, u), (C.src(f), u), (C.trg(f), W.ar(f)(u)))
                 for f in C.morphisms for u in W.ob(C.src(f))]
    idents = {(c, u): (C.identity(c), u) for (c, u) in objects}
    El = FinCategory(objects, morphisms, idents,
                     lambda g, f: (C.compose(g[0], f[0]), f[1]),
                     name=f"{C.name}∫W", check=False)
    sigma = FinFunctor(El, C, {x: x[0] for x in objects},
                       {m: m[0] for m in El.morphisms}, check=False)
    if check_isofibration:
        v = isofibration_verdict(sigma)
        if not v:
            raise FunctorError(f"projection is not an isofibration: {v.witness!r}")
    return El, sigma


def isofibration_verdict(P):
    """Every iso φ: x ≅ P(e) lifts to an iso ending at e."""
    E, C = P.source, P.target
    for e in E.objects:
        pe = P.ob(e)
        for x in C.objects:
            for phi in C.hom(x, pe):
                if not C.is_iso(phi):
                    continue
                lifted = any(P.ar(m) == phi and E.is_iso(m)
                             for d in E.objects for m in E.hom(d, e))
                if not lifted:
                    return Verdict.failed((phi, e), "iso without a lift")
    return Verdict.passed()


# ---------------------------------------------------------------- functors


class FinFunctor:
    def __init__(self, source, target, on_objects, on_morphisms, check=True,
                 name=None):
        self.source = source
        self.target = target
        self.on_objects = dict(on_objects)
        self.on_morphisms = dict(on_morphisms)
        self.name = name or "F"
        if check:
            self.validate()

    def __repr__(self):
        return f"FinFunctor({self.name}: {self.source.name} → {self.target.name})"

    def ob(self, a):
        return self.on_objects[a]

    def ar(self, f):
        return self.on_morphisms[f]

    @classmethod
    def from_callables(cls, source, target, ob, ar, check=True, name=None):
        return cls(source, target, {a: ob(a) for a in source.objects},
                   {f: ar(f) for f in source.morphisms}, check=check, name=name)

    def validate(self):
        v = self.verdict()
        if not v:
            raise FunctorError(f"{self.name}: {v.detail} at {v.witness!r}")
        return self

    def verdict(self):
        C, D = self.source, self.target
        for a in C.objects:
            if a not in self.on_objects or not D.has_object(self.on_objects[a]):
                return Verdict.failed(a, "object not mapped into target")
        for f in C.morphisms:
            if f not in self.on_morphisms or not D.has_morphism(self.on_morphisms[f]):
                return Verdict.failed(f, "morphism not mapped into target")
            Ff = self.on_morphisms[f]
            if D.src(Ff) != self.ob(C.src(f)) or D.trg(Ff) != self.ob(C.trg(f)):
                return Verdict.failed(f, "source/target not preserved")
        for a in C.objects:
            if self.ar(C.identity(a)) != D.identity(self.ob(a)):
                return Verdict.failed(a, "identity not preserved")
        for g, f in C.composable_pairs():
            if self.ar(C.compose(g, f)) != D.compose(self.ar(g), self.ar(f)):
                return Verdict.failed((g, f), "composition not preserved")
        return Verdict.passed()

    def then(self, G):
        """G∘self."""
        if G.source is not self.target and not same_category(G.source, self.target):
            raise ShapeMismatch("functors are not composable")
        return FinFunctor(self.source, G.target,
                          {a: G.ob(b) for a, b in self.on_objects.items()},
                          {f: G.ar(g) for f, g in self.on_morphisms.items()},
                          check=False, name=f"{G.name}∘{self.name}")

    def opposite(self):
        return FinFunctor(opposite(self.source), opposite(self.target),
                          self.on_objects, self.on_morphisms, check=False,
                          name=f"{self.name}^op")

    def hom_verdict(self):
        """Direct check of full faithfulness: every hom-set map
        C(a, b) → D(Fa, Fb) is a bijection."""
        C, D = self.source, self.target
        for a in C.objects:
            for b in C.objects:
                images = [self.ar(f) for f in C.hom(a, b)]
                if len(set(images)) != len(images):
                    return Verdict.failed((a, b), "not faithful")
                if len(images) != len(D.hom(self.ob(a), self.ob(b))):
                    return Verdict.failed((a, b), "not full")
        return Verdict.passed()

    def is_fully_faithful(self):
        return bool(self.hom_verdict())


def identity_functor(C):
    return FinFunctor(C, C, {a: a for a in C.objects},
                      {f: f for f in C.morphisms}, check=False, name="id")


def constant_functor(C, D, d, name=None):
    i = D.identity(d)
    return FinFunctor(C, D, {a: d for a in C.objects},
                      {f: i for f in C.morphisms}, check=False,
                      name=name or f"const_{d}")


def to_terminal(C):
    T = terminal()
    return FinFunctor(C, T, {a: "*" for a in C.objects},
                      {f: "id*" for f in C.morphisms}, check=False, name="!")


def projection(P, i):
    """The i-th projection out of a product category."""
    X = P.factors[i]
    return FinFunctor(P, X, {a: a[i] for a in P.objects},
                      {f: f[i] for f in P.morphisms}, check=False,
                      name=f"π{i}")


def isomorphism_verdict(F):
    """An isomorphism of categories is a functor bijective on objects and
    on morphisms."""
    C, D = F.source, F.target
    obs = [F.ob(a) for a in C.objects]
    if len(set(obs)) != len(obs) or len(obs) != len(D.objects):
        return Verdict.failed(None, "not bijective on objects")
    ms = [F.ar(f) for f in C.morphisms]
    if len(set(ms)) != len(ms) or len(ms) != len(D.morphisms):
        return Verdict.failed(None, "not bijective on morphisms")
    return Verdict.passed()


def all_functors(C, D):
    """Enumerate every functor C → D by backtracking in stored order."""
    objs = list(C.objects)
    non_id = [f for f in C.morphisms if not C.is_identity(f)]
    # composable pairs of non-identity morphisms, checked once the later
    # of the three morphisms involved is assigned
    pos = {f: i for i, f in enumerate(non_id)}
    checks = defaultdict(list)
    for g, f in C.composable_pairs():
        if g in pos and f in pos:
            gf = C.compose(g, f)
            key = max(pos[g], pos[f], pos.get(gf, -1))
            checks[key].append((g, f, gf))

    def assign_objects(i, omap):
        if i == len(objs):
            yield from assign_morphisms(0, omap, {})
            return
        for d in D.objects:
            omap[objs[i]] = d
            yield from assign_objects(i + 1, omap)
        del omap[objs[i]]

    def mval(mmap, omap, f):
        if C.is_identity(f):
            return D.identity(omap[C.src(f)])
        return mmap[f]

    def assign_morphisms(i, omap, mmap):
        if i == len(non_id):
            full = {f: mval(mmap, omap, f) for f in C.morphisms}
            yield FinFunctor(C, D, dict(omap), full, check=False)
            return
        f = non_id[i]
        for cand in D.hom(omap[C.src(f)], omap[C.trg(f)]):
            mmap[f] = cand
            if all(mval(mmap, omap, gf) == D.compose(mval(mmap, omap, g),
                                                     mval(mmap, omap, f2))
                   for g, f2, gf in checks[i]):
                yield from assign_morphisms(i + 1, omap, mmap)
        mmap.pop(f, None)

    yield from assign_objects(0, {})


class NatTransformation:
    """A natural transformation between parallel FinFunctors."""

    def __init__(self, source, target, components, check=True):
        self.source = source
        self.target = target
        self.components = dict(components)
        if check:
            v = self.verdict()
            if not v:
                raise FunctorError(f"not natural: {v.detail} at {v.witness!r}")

    def __getitem__(self, a):
        return self.components[a]

    def verdict(self):
        F, G = self.source, self.target
        C, D = F.source, F.target
        for a in C.objects:
            t = self.components.get(a)
            if t is None or not D.has_morphism(t):
                return Verdict.failed(a, "missing component")
            if D.src(t) != F.ob(a) or D.trg(t) != G.ob(a):
                return Verdict.failed(a, "component has wrong type")
        for f in C.morphisms:
            a, b = C.src(f), C.trg(f)
            if (D.compose(G.ar(f), self.components[a])
                    != D.compose(self.components[b], F.ar(f))):
                return Verdict.failed(f, "naturality square fails")
        return Verdict.passed()


def natural_transformations(F, G):
    """Brute force: all component choices, filtered by naturality."""
    C, D = F.source, F.target
    choices = [D.hom(F.ob(a), G.ob(a)) for a in C.objects]
    out = []
    for comps in itertools.product(*choices):
        tau = dict(zip(C.objects, comps))
        if all(D.compose(G.ar(f), tau[C.src(f)]) == D.compose(tau[C.trg(f)], F.ar(f))
               for f in C.morphisms):
            out.append(tau)
    return out
