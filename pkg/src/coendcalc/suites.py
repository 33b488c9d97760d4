"""Seeded check suites, one per acceptance criterion plus the Isbell and
nerve checks. Each suite returns a CheckReport whose content depends only
on the seed."""

import hashlib
import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import fixtures as fx
from .coend import coend, elmendorf_check, end, fubini, nat_set
from .convolution import (
    cauchy_pointwise,
    cauchy_promonoidal,
    compose_kernels,
    contra_kernel,
    cyclic_monoidal,
    day_associativity,
    day_convolve,
    day_hom,
    day_matches_promonoidal,
    day_promonoidal,
    fourier_unit,
    fourier_vs_lan,
    hom_kernel,
    kernel_check,
    p_associativity,
    p_unit_witnesses,
    parseval,
)
from .fincat import natural_transformations, op_times, opposite, product
from .groups import symmetric
from .io import thaw
from .kanweighted import (
    isbell,
    nerve_realization,
    weighted_limit,
    weighted_via_elements,
    yoneda_embedding,
    yoneda_reduce,
)
from .profunctor import Profunctor, adjunction_P, fully_faithful_via_unit
from .setfun import SetValuedFunctor, hom_functor


@dataclass
class Case:
    label: str
    ok: bool
    sizes: dict = field(default_factory=dict)
    counterexample: str = None
    detail: str = ""

    def to_dict(self):
        d = {"label": self.label, "ok": self.ok, "sizes": self.sizes}
        if not self.ok:
            d["counterexample"] = self.counterexample
            d["detail"] = self.detail
        return d


@dataclass
class CheckReport:
    check: str
    criterion: int
    seed: int
    inputs_digest: str
    cases: list
    wall_time: float = 0.0

    @property
    def ok(self):
        return all(c.ok for c in self.cases)

    def first_failure(self):
        return next((c for c in self.cases if not c.ok), None)

    def to_dict(self, timings=False):
        bad = self.first_failure()
        d = {"check": self.check, "criterion": self.criterion, "seed": self.seed,
             "inputs_digest": self.inputs_digest, "verdict": "pass" if self.ok else "fail",
             "cases": len(self.cases), "passed": sum(c.ok for c in self.cases),
             "cardinalities": {c.label: c.sizes for c in self.cases if c.sizes},
             "counterexample": None if bad is None else bad.to_dict()}
        if timings:
            d["wall_time"] = round(self.wall_time, 3)
        return d


class _Digest:
    """Hash of every generated input, in generation order."""

    def __init__(self, name, seed):
        self.h = hashlib.sha256(f"{name}:{seed}".encode())

    def add(self, *objs):
        for o in objs:
            self.h.update(json.dumps(_describe(o), sort_keys=True, default=repr,
                                     ensure_ascii=False).encode())

    def hexdigest(self):
        return self.h.hexdigest()[:16]


def _describe(o):
    if isinstance(o, SetValuedFunctor):
        C = o.base
        return [[repr(c), [repr(x) for x in o.ob(c)]] for c in C.objects] + \
            [[repr(f), [[repr(x), repr(y)] for x, y in o.ar(f).table.items()]]
             for f in C.morphisms if not C.is_identity(f)]
    if hasattr(o, "on_objects"):
        return [o.source.name, o.target.name, repr(o.on_objects), repr(o.on_morphisms)]
    return thaw(o)


def _rng(seed, tag):
    return np.random.default_rng([seed, sum(tag.encode())])


def _wcase(label, w, sizes=None):
    """A Case from a ComparisonWitness."""
    sizes = sizes if sizes is not None else {}
    return Case(label, bool(w.ok), sizes, None if w.ok else repr(w.witness),
                "" if w.ok else f"{w.name}: {w.detail}")


def _small(C):
    return len(C.objects) <= 3 and len(C.morphisms) <= 9


# ------------------------------------------------------------ suites


def nat_as_end(seed=0):
    """End of hom(F−, G−) against brute-force Nat(F, G)."""
    dg = _Digest("nat-as-end", seed)
    cases = []
    two = fx.category("2")
    const0 = dict(fx.functor_corpus())["const0@2"]
    ident = dict(fx.functor_corpus())["id_2"]
    E, w = nat_set(const0, ident)
    cases.append(Case("bundled Nat(const0, id) on 2", w.ok and len(E) == 1,
                      {"end": len(E), "expected": 1}, repr(w.witness), w.detail))
    dg.add(const0, ident, two.name)
    rng = _rng(seed, "nat-as-end")
    pool = [n for n in fx.RANDOM_POOL if _small(fx.category(n))]
    for i in range(50):
        C, D = fx.random_category(rng, pool), fx.random_category(rng, pool)
        F, G = fx.random_functor(C, D, rng), fx.random_functor(C, D, rng)
        dg.add(F, G)
        E, w = nat_set(F, G)
        brute = len(natural_transformations(F, G))
        c = _wcase(f"#{i} {C.name}→{D.name}", w, {"end": len(E), "brute": brute})
        c.ok = c.ok and len(E) == brute
        cases.append(c)
    return cases, dg


def pullback(seed=0):
    """End over Δ[1] equals the fibre product element for element."""
    dg = _Digest("pullback", seed)
    T, C = fx.delta1_bifunctor()
    dg.add(T)
    E = end(T, C)
    f, i0, i1 = "f", C.identity("0"), C.identity("1")
    fp = {(s, t) for s in T.ob(("0", "0")) for t in T.ob(("1", "1"))
          if T.ar((i0, f))(s) == T.ar((f, i1))(t)}
    got = set(E.carrier)
    ok = got == fp and list(C.objects) == ["0", "1"]
    return [Case("Δ[1] fixture", ok, {"end": len(got), "fibre product": len(fp)},
                 None if ok else repr(sorted(got ^ fp, key=repr)), "" if ok else
                 "end differs from the fibre product")], dg


def center(seed=0):
    """Ends and coends of hom over BS3: centre and conjugacy classes."""
    dg = _Digest("center", seed)
    C = fx.category("BS3")
    H = hom_functor(C)
    S3 = symmetric(3)
    e, k = len(end(H, C)), len(coend(H, C))
    z, cc = len(S3.center()), len(S3.conjugacy_classes())
    dg.add(C.name)
    return [Case("end of hom over BS3", e == z, {"end": e, "|Z(S3)|": z}),
            Case("coend of hom over BS3", k == cc, {"coend": k, "classes": cc})], dg


def fubini_suite(seed=0):
    dg = _Digest("fubini", seed)
    rng = _rng(seed, "fubini")
    two = fx.category("2")
    CE = product(two, two)
    cases = []
    for i in range(30):
        F = fx.random_set_functor(op_times(CE), rng, max_total=40, name="T")
        dg.add(F)
        joint, ce, ec, ws = fubini(F, two, two)
        bad = next((w for w in ws if not w.ok), None)
        sizes = {"joint": len(joint), "∫c∫e": len(ce), "∫e∫c": len(ec), "elements": F.size()}
        cases.append(_wcase(f"#{i}", bad or ws[0], sizes))
    return cases, dg


def ninja(seed=0):
    dg = _Digest("ninja", seed)
    rng = _rng(seed, "ninja")
    pool = [n for n in fx.RANDOM_POOL if len(fx.category(n).objects) <= 3]
    cases = []
    for i in range(30):
        C = fx.random_category(rng, pool)
        K = fx.random_set_functor(opposite(C), rng, max_total=8, name="K")
        H = fx.random_set_functor(C, rng, max_total=8, name="H")
        dg.add(K, H)
        for v, X in (("i", K), ("ii", K), ("iii", H), ("iv", H)):
            w = yoneda_reduce(X, v, C)
            cases.append(_wcase(f"#{i} {C.name} ({v})", w, {"size": X.size()}))
    return cases, dg


def elmendorf(seed=0):
    dg = _Digest("elmendorf", seed)
    cases = []
    for X in fx.z2_gsets():
        dg.add(X.name, [repr(x) for x in X.elements])
        w = elmendorf_check(X)
        cases.append(_wcase(f"Z/2-set {X.name}", w,
                            {"coend": len(w.extra["coend"]) if w.ok else None,
                             "X": len(X.elements)}))
    return cases, dg


def relt_adjunction(seed=0):
    dg = _Digest("relt-adjunction", seed)
    cases = []
    for name, F in fx.functor_corpus():
        dg.add(F)
        adj = adjunction_P(F)
        bad = adj.failures()
        k, v = next(iter(bad.items())) if bad else (None, None)
        cases.append(Case(name, adj.ok, {"checks": len(adj.checks)},
                          None if v is None else repr(v.witness),
                          "" if v is None else f"{k}: {v.detail}"))
    return cases, dg


def fully_faithful(seed=0):
    """The unit criterion against direct hom-bijectivity on 20 functors,
    at least 3 of each kind."""
    dg = _Digest("fully-faithful", seed)
    rng = _rng(seed, "fully-faithful")
    chosen, n_ff, n_not = [], 0, 0
    attempts = 0
    while len(chosen) < 20 and attempts < 2000:
        attempts += 1
        C = fx.random_category(rng)
        D = C if rng.random() < 0.3 else fx.random_category(rng)
        F = fx.random_functor(C, D, rng)
        if F is None:
            continue
        ff = F.is_fully_faithful()
        left = 20 - len(chosen)
        if (ff and n_not < 3 and left <= 3 - n_not) or \
                (not ff and n_ff < 3 and left <= 3 - n_ff):
            continue
        chosen.append(F)
        n_ff += ff
        n_not += not ff
    cases = []
    for i, F in enumerate(chosen):
        dg.add(F)
        v = fully_faithful_via_unit(F)
        direct = v.extra["direct"]
        cases.append(Case(f"#{i} {F.source.name}→{F.target.name}", v.ok == direct,
                          {"criterion": int(v.ok), "direct": int(direct)},
                          repr(v.witness), "criterion disagrees with hom-bijectivity"))
    quota = len(chosen) == 20 and n_ff >= 3 and n_not >= 3
    cases.append(Case("sample quota", quota, {"fully faithful": n_ff, "not": n_not},
                      None, "could not draw the required mix"))
    return cases, dg


def weighted(seed=0):
    dg = _Digest("weighted", seed)
    W, F = fx.kernel_pair_data()
    dg.add(W, F)
    E, w = weighted_limit(W, F)
    wel = weighted_via_elements(W, F)
    cases = [Case("kernel pair", w.ok and wel.ok and len(E) == 5,
                  {"weighted limit": len(E), "expected": 5},
                  repr(w.witness or wel.witness), w.detail or wel.detail)]
    rng = _rng(seed, "weighted")
    for i in range(30):
        C = fx.random_category(rng)
        W = fx.random_set_functor(C, rng, max_total=5, name="W")
        F = fx.random_set_functor(C, rng, max_total=7, name="F")
        dg.add(W, F)
        w = weighted_via_elements(W, F)
        cases.append(_wcase(f"#{i} {C.name}", w, {"limit": len(w.map.source)} if w.ok else {}))
    return cases, dg


def day_parseval(seed=0):
    """Day units and associativity, promonoidal structures, Cauchy =
    pointwise product, and Parseval for hom and P^mod2."""
    dg = _Digest("parseval", seed)
    rng = _rng(seed, "parseval")
    cases = []
    Z2 = fx.monoidal("Z2")
    C = Z2.C
    F = SetValuedFunctor(C, {0: ["a", "b"], 1: ["c", "d", "e"]}, lambda f, x: x, name="F")
    G = SetValuedFunctor(C, {0: ["p"], 1: ["q"]}, lambda f, x: x, name="G")
    conv, _ = day_convolve(F, G, Z2)
    sizes = [len(conv.ob(c)) for c in C.objects]
    cases.append(Case("(2,3)∗(1,1) over Z/2", sizes == [5, 5], {"F∗G": sizes}))
    for name in ("Z2", "Idem", "Z4"):
        M = fx.monoidal(name)
        A, B, H = (fx.random_set_functor(M.C, rng, 5, name=n) for n in "ABH")
        dg.add(A, B, H)
        for w in day_convolve(A, B, M)[1]:
            cases.append(_wcase(f"Day {w.name} over {M.name}", w))
        cases.append(_wcase(f"Day associativity over {M.name}", day_associativity(A, B, H, M)))
        if name != "Z4":
            PM = day_promonoidal(M)
            for k, w in PM.witnesses.items():
                cases.append(_wcase(f"Day-derived promonoidal {k} over {M.name}", w))
            cases.append(_wcase(f"p_convolve = day_convolve over {M.name}",
                                day_matches_promonoidal(A, B, M, PM)))
            for w in p_unit_witnesses(A, PM):
                cases.append(_wcase(f"{w.name} over {M.name}", w))
            cases.append(_wcase(f"p-associativity over {M.name}", p_associativity(A, B, H, PM)))
    A, B, H = (fx.random_set_functor(C, rng, 4, name=n) for n in "ABH")
    dg.add(A, B, H)
    _, ws = day_hom(B, H, Z2, probes=[A])
    cases.append(_wcase("Day internal hom adjunction over Z/2", ws[0]))

    cauchy = {}
    for i in range(20):
        D = fx.random_category(rng, ("1", "2", "Iso", "BZ2", "Disc2", "V"))
        PC = cauchy.get(D.name) or cauchy.setdefault(D.name, cauchy_promonoidal(D))
        X = fx.random_set_functor(D, rng, 5, name="X")
        Y = fx.random_set_functor(D, rng, 5, name="Y")
        dg.add(X, Y)
        cases.append(_wcase(f"Cauchy #{i} on {D.name}", cauchy_pointwise(X, Y, PC)))

    PZ2 = day_promonoidal(Z2)
    PZ4 = day_promonoidal(fx.monoidal("Z4"))
    hk = hom_kernel(PZ2)
    mod2 = fx.mod2_functor()
    ck = contra_kernel(mod2, fx.monoidal("Z4"), Z2, PA=PZ4, PC=PZ2)
    for label, K in (("hom on Z/2", hk), ("P^mod2", ck)):
        for k, w in K.witnesses.items():
            cases.append(_wcase(f"kernel {label} {k}", w))
        f = fx.random_set_functor(K.K.A, rng, 5, name="f")
        g = fx.random_set_functor(K.K.A, rng, 5, name="g")
        dg.add(f, g)
        cases.append(_wcase(f"Parseval for {label}", parseval(K, f, g)))
        cases.append(_wcase(f"Fourier of the unit for {label}", fourier_unit(K)))
    f = fx.random_set_functor(mod2.source, rng, 5, name="f")
    cases.append(_wcase("P^mod2 transform = Lan along mod2", fourier_vs_lan(mod2, ck, f)))
    one = fx.collapse_functor()
    ck2 = contra_kernel(one, Z2, cyclic_monoidal(1), PA=PZ2)
    comp = compose_kernels(ck, ck2)
    cases.append(_wcase("composite kernel k1", comp.witnesses["k1"]))
    bad = kernel_check(_perturbed(ck), ck.PA, ck.PC, ck.k1, ck.k2)
    w1 = bad.witnesses["k1"]
    cases.append(Case("perturbed kernel fails at k1", not w1.ok and "k2" not in bad.witnesses,
                      {}, "perturbation accepted", "a broken mediator passed"))
    return cases, dg


def _perturbed(K):
    """K with one extra element in K(a, x) at the second object pair; only
    used on discrete bases, where every action is an identity."""
    P = K.K
    a, x = P.A.objects[1], P.B.objects[0]

    def ob(a1, x1):
        base = list(P.ob(a1, x1))
        return base + ["junk"] if (a1, x1) == (a, x) else base

    def ar(f, g, e):
        return e if e == "junk" else P.ar(f, g)(e)

    return Profunctor.from_callables(P.A, P.B, ob, ar, name=f"{P.name}+junk")


def isbell_suite(seed=0):
    """Isbell and nerve-realization bijections on supplied small instances."""
    dg = _Digest("isbell", seed)
    rng = _rng(seed, "isbell")
    cases = []
    for name in ("1", "2", "Iso", "BZ2", "P3"):
        C = fx.category(name)
        X = fx.random_set_functor(opposite(C), rng, 3, name="X")
        Y = fx.random_set_functor(C, rng, 3, name="Y")
        dg.add(X, Y)
        _O, _Sp, w = isbell(X, Y)
        cases.append(_wcase(f"Isbell on {name}", w, {"Nat": len(w.map.source)} if w.ok else {}))
    for name in ("2", "BZ2"):
        E = fx.category(name)
        phi = yoneda_embedding(E)
        P = fx.random_set_functor(opposite(E), rng, 3, name="P")
        d = fx.random_set_functor(opposite(E), rng, 3, name="d")
        dg.add(P, d)
        _R, _N, w = nerve_realization(phi, P, d)
        cases.append(_wcase(f"nerve-realization on {name}", w))
    return cases, dg


SUITES = {
    "nat-as-end": (1, nat_as_end),
    "pullback": (2, pullback),
    "center": (3, center),
    "fubini": (4, fubini_suite),
    "ninja": (5, ninja),
    "elmendorf": (6, elmendorf),
    "relt-adjunction": (7, relt_adjunction),
    "fully-faithful": (8, fully_faithful),
    "weighted": (9, weighted),
    "parseval": (10, day_parseval),
    "isbell": (None, isbell_suite),
}


def run_suite(name, seed=0):
    criterion, fn = SUITES[name]
    t0 = time.perf_counter()
    cases, dg = fn(seed)
    return CheckReport(name, criterion, seed, dg.hexdigest(), cases,
                       time.perf_counter() - t0)


def run_all(seed=0):
    return [run_suite(n, seed) for n in sorted(SUITES)]
