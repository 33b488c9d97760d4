"""The bundled fixture corpus and seeded random generators.

Every bundled category also ships as a JSON document under ``data/``;
``load_bundled`` reads those copies back.
"""

import functools
import json
from importlib import resources

import numpy as np

from .convolution import (
    cyclic_monoidal,
    idempotent_monoidal,
    meet_monoidal,
    one_object_monoidal,
)
from .fincat import (
    FinFunctor,
    all_functors,
    chain,
    cyclic_group,
    discrete,
    identity_functor,
    monoid_category,
    op_times,
    poset,
    symmetric_group,
    terminal,
    to_terminal,
    validate_category,
    walking_arrow,
    walking_iso,
)
from .groups import GSet, cyclic, orbit_category
from .setfun import SetValuedFunctor, representable, terminal_functor

# ------------------------------------------------------------ categories


def _parallel_pair():
    return validate_category({
        "objects": ["0", "1"],
        "morphisms": [["id0", "0", "0"], ["id1", "1", "1"], ["s", "0", "1"], ["t", "0", "1"]],
        "identities": {"0": "id0", "1": "id1"},
        "composition": [],
    }, name="⇉")


def _idem_monoid():
    return monoid_category(["1", "e"], lambda a, b: "1" if a == b == "1" else "e", "1",
                           name="B{1,e}")


BUNDLED = {
    "1": terminal,
    "2": walking_arrow,
    "Iso": walking_iso,
    "P3": lambda: chain(3, name="P3"),
    "BZ2": lambda: cyclic_group(2),
    "BS3": lambda: symmetric_group(3),
    "Orb(Z2)": lambda: orbit_category(cyclic(2)),
    "Z2": lambda: cyclic_monoidal(2).C,
    "Idem": lambda: idempotent_monoidal().C,
}

EXTRA = {
    "V": lambda: poset(["x", "y", "z"], {("x", "y"), ("x", "z")}, name="V"),
    "⇉": _parallel_pair,
    "BZ3": lambda: cyclic_group(3),
    "B{1,e}": _idem_monoid,
    "Disc2": lambda: discrete(["a", "b"], name="Disc2"),
    "Z4": lambda: cyclic_monoidal(4).C,
}


@functools.cache
def category(name):
    """A bundled (or extra) category by name; cached so functors built on
    it share one instance."""
    maker = BUNDLED.get(name) or EXTRA.get(name)
    if maker is None:
        raise KeyError(f"no bundled category named {name!r}")
    return maker()


@functools.cache
def monoidal(name):
    """Bundled monoidal bases: discrete Z/2, Z/4, {1,e}, BZ/2 and P3 under min."""
    if name == "Z2":
        return cyclic_monoidal(2)
    if name == "Z4":
        return cyclic_monoidal(4)
    if name == "Idem":
        return idempotent_monoidal()
    if name == "BZ2":
        return one_object_monoidal(range(2), lambda a, b: (a + b) % 2, 0, name="BZ2")
    if name == "P3":
        return meet_monoidal(category("P3"), min, 2, name="(P3, min)")
    raise KeyError(f"no bundled monoidal base named {name!r}")


def load_bundled(name):
    """The JSON copy of a bundled category."""
    from .io import category_from_doc

    path = resources.files("coendcalc") / "data" / "categories" / f"{_fname(name)}.json"
    return category_from_doc(json.loads(path.read_text()))


def _fname(name):
    return name.replace("(", "_").replace(")", "")


# -------------------------------------------------------------- functors


def _f(name, src, trg, objs, mors):
    C, D = category(src), category(trg)
    return FinFunctor(C, D, objs, mors, name=name)


@functools.cache
def functor_corpus():
    """Named functors between bundled categories, identities first."""
    out = [(f"id_{n}", identity_functor(category(n))) for n in BUNDLED]
    two, iso, p3 = category("2"), category("Iso"), category("P3")
    S3 = category("BS3")
    sign = {g: _parity(g) for g in S3.morphisms}
    out += [
        ("2→1", to_terminal(two)),
        ("const0", _f("const0", "1", "2", {"*": "0"}, {"id*": "id0"})),
        ("const0@2", _f("const0@2", "2", "2", {"0": "0", "1": "0"},
                        {"id0": "id0", "id1": "id0", "f": "id0"})),
        ("const1", _f("const1", "1", "2", {"*": "1"}, {"id*": "id1"})),
        ("2→Iso", _f("2→Iso", "2", "Iso", {"0": "0", "1": "1"},
                     {"id0": "id0", "id1": "id1", "f": "f"})),
        ("Iso→1", to_terminal(iso)),
        ("2→P3", _f("2→P3", "2", "P3", {"0": 0, "1": 2},
                    {"id0": (0, 0), "id1": (2, 2), "f": (0, 2)})),
        ("P3→2", _f("P3→2", "P3", "2", {0: "0", 1: "1", 2: "1"},
                    {m: {(0, 0): "id0"}.get(m, "f" if m[0] == 0 else "id1")
                     for m in p3.morphisms})),
        ("BZ2→BS3", _f("BZ2→BS3", "BZ2", "BS3", {"*": "*"},
                       {0: (0, 1, 2), 1: (1, 0, 2)})),
        ("sign", _f("sign", "BS3", "BZ2", {"*": "*"}, sign)),
        ("Orb(Z2)→1", to_terminal(category("Orb(Z2)"))),
        ("Z4→Z2", mod2_functor()),
    ]
    return out


def _parity(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def mod2_functor():
    """Z/4 → Z/2, reduction mod 2, between the discrete monoidal bases."""
    Z4, Z2 = monoidal("Z4").C, monoidal("Z2").C
    return FinFunctor(Z4, Z2, {a: a % 2 for a in Z4.objects},
                      {("id", a): ("id", a % 2) for a in Z4.objects}, name="mod2")


def collapse_functor():
    """Z/2 → 1 as a strict monoidal functor onto the trivial base."""
    Z2, one = monoidal("Z2").C, cyclic_monoidal(1).C
    return FinFunctor(Z2, one, {a: 0 for a in Z2.objects},
                      {("id", a): ("id", 0) for a in Z2.objects}, name="Z2→1")


# ------------------------------------------------------- worked instances


def delta1_bifunctor():
    """T on 2^op × 2 whose end is the pullback T(0,0) → T(0,1) ← T(1,1)."""
    C = category("2")
    B = op_times(C)
    obs = {("0", "0"): ["a", "b"], ("1", "1"): ["u"], ("0", "1"): ["x", "y"], ("1", "0"): []}
    to01 = {"a": "x", "b": "y", "u": "x"}

    def act(fg, v):
        f, g = fg
        if f == "f" or g == "f":
            return to01[v]
        return v

    return SetValuedFunctor(B, obs, act, name="T"), C


def kernel_pair_data():
    """The weight W: 2 → Sets with W0 = {1, 2}, W1 = {*}, and the diagram
    f: {1,2,3} → {1,2} with fibres {1,2}, {3}."""
    C = category("2")
    W = SetValuedFunctor(C, {"0": [1, 2], "1": ["*"]},
                         lambda f, w: "*" if f == "f" else w, name="W")
    fmap = {1: 1, 2: 1, 3: 2}
    F = SetValuedFunctor(C, {"0": [1, 2, 3], "1": [1, 2]},
                         lambda f, x: fmap[x] if f == "f" else x, name="f")
    return W, F


def z2_gsets():
    """Three Z/2-sets: a point, the free orbit, and a fixed point beside a
    swapped pair."""
    G = cyclic(2)
    return [
        GSet(G, ["p"], lambda g, x: x, name="point"),
        GSet(G, [0, 1], lambda g, x: (x + g) % 2, name="free"),
        GSet(G, ["a", "b", "c"],
             lambda g, x: x if g == 0 or x == "a" else {"b": "c", "c": "b"}[x], name="mixed"),
    ]


# --------------------------------------------------------------- random


def rng_for(seed):
    return np.random.default_rng(seed)


RANDOM_POOL = ("1", "2", "Iso", "P3", "BZ2", "V", "⇉", "BZ3", "B{1,e}", "Disc2")


def random_category(rng, pool=RANDOM_POOL):
    return category(pool[int(rng.integers(len(pool)))])


@functools.cache
def _functors(C, D):
    return tuple(all_functors(C, D))


def random_functor(C, D, rng):
    fs = _functors(C, D)
    return fs[int(rng.integers(len(fs)))] if fs else None


def _is_thin(C):
    return all(len(C.hom(a, b)) <= 1 for a in C.objects for b in C.objects)


def _random_chain_set(k, rng):
    """A functor on the chain 0 < … < k: sets of size 1..3 and random maps."""
    sizes = [int(rng.integers(1, 4)) for _ in range(k + 1)]
    steps = [[int(rng.integers(sizes[i + 1])) for _ in range(sizes[i])] for i in range(k)]

    def run(i, j, x):
        for s in range(i, j):
            x = steps[s][x]
        return x

    return sizes, run


def _monotone_to_chain(C, rng):
    """A random order-preserving map from a thin C to a chain, as a sum of
    up-set indicators."""
    level = {c: 0 for c in C.objects}
    for _ in range(int(rng.integers(1, 3))):
        seeds = [c for c in C.objects if rng.random() < 0.3]
        up = {b for a in seeds for b in C.objects if C.hom(a, b)}
        for b in up:
            level[b] += 1
    return level, max(level.values())


def _pullback_block(C, rng):
    if _is_thin(C):
        level, k = _monotone_to_chain(C, rng)
        sizes, run = _random_chain_set(k, rng)
        return SetValuedFunctor(C, lambda c: range(sizes[level[c]]),
                                lambda f, x: run(level[C.src(f)], level[C.trg(f)], x),
                                check=False)
    if len(C.morphisms) > 9:
        return None
    T = category("BZ2") if rng.random() < 0.5 else category("2")
    G = random_functor(C, T, rng)
    if G is None:
        return None
    if T is category("BZ2"):
        n = int(rng.integers(1, 5))
        perm = list(range(n))
        for i in range(0, n - 1, 2):
            if rng.random() < 0.6:
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
        X = SetValuedFunctor(T, {"*": range(n)}, lambda g, x: perm[x] if g == 1 else x,
                             check=False)
    else:
        sizes, run = _random_chain_set(1, rng)
        pos = {"0": 0, "1": 1}
        X = SetValuedFunctor(T, lambda c: range(sizes[pos[c]]),
                             lambda f, x: run(pos[T.src(f)], pos[T.trg(f)], x), check=False)
    return X.precompose(G)


def random_set_functor(C, rng, max_total=12, name="F"):
    """A seeded functor C → Sets: a coproduct of representables, terminal
    blocks and pullbacks of random chain or Z/2-sets, relabelled so every
    fibre is 0..n-1. Total size stays within ``max_total``."""
    blocks, total = [], 0
    for _ in range(int(rng.integers(1, 4))):
        r = rng.random()
        if r < 0.35:
            B = representable(C, C.objects[int(rng.integers(len(C.objects)))])
        elif r < 0.45:
            B = terminal_functor(C)
        else:
            B = _pullback_block(C, rng)
        if B is None:
            continue
        s = B.size()
        if total + s <= max_total:
            blocks.append(B)
            total += s
    if not blocks:
        blocks = [terminal_functor(C)] if len(C.objects) <= max_total else []
    return _relabel(C, blocks, name)


def _relabel(C, blocks, name):
    fibres = {c: [(i, x) for i, B in enumerate(blocks) for x in B.ob(c)] for c in C.objects}
    index = {c: {e: n for n, e in enumerate(fs)} for c, fs in fibres.items()}
    obs = {c: list(range(len(fs))) for c, fs in fibres.items()}
    ars = {}
    for f in C.morphisms:
        a, b = C.src(f), C.trg(f)
        ars[f] = {index[a][(i, x)]: index[b][(i, blocks[i].ar(f)(x))] for i, x in fibres[a]}
    return SetValuedFunctor(C, obs, ars, check=False, name=name)


def random_bifunctor(C, rng, max_total=12, name="T"):
    return random_set_functor(op_times(C), rng, max_total, name=name)


# ------------------------------------------------------------ JSON corpus


def corpus_documents():
    """Every bundled fixture as ``(relative path, document)``."""
    from .io import (
        category_to_doc,
        functor_to_doc,
        set_functor_to_doc,
        set_tables_to_doc,
        thaw,
    )

    docs = [(f"categories/{_fname(n)}.json", category_to_doc(category(n))) for n in BUNDLED]
    corpus = dict(functor_corpus())
    for key, src, trg in (("const0@2", "2", "2"), ("id_2", "2", "2")):
        docs.append((f"functors/{_fname(key).replace('@', '_on_')}.json",
                     functor_to_doc(corpus[key], source=src, target=trg)))
    T, _ = delta1_bifunctor()
    docs.append(("bifunctors/delta1.json", {"name": "T", "kind": "bifunctor", "base": "2",
                                              **set_tables_to_doc(T)}))
    W, F = kernel_pair_data()
    docs.append(("setfunctors/kernel_pair_weight.json", set_functor_to_doc(W, base="2")))
    docs.append(("setfunctors/kernel_pair_diagram.json", set_functor_to_doc(F, base="2")))
    for n in ("Z2", "Idem"):
        M = monoidal(n)
        C = M.C
        docs.append((f"monoidal/{n}.json", {
            "name": M.name, "category": n, "unit": thaw(M.unit),
            "tensor": {"on_objects": [[thaw(ab), thaw(M.tensor.ob(ab))]
                                      for ab in M.tensor.source.objects],
                       "on_morphisms": [[thaw(fg), thaw(M.tensor.ar(fg))]
                                        for fg in M.tensor.source.morphisms]},
            "associator": [[thaw(k), thaw(v)] for k, v in M.assoc.items()],
            "unitors": {"left": [[thaw(a), thaw(M.lunit[a])] for a in C.objects],
                        "right": [[thaw(a), thaw(M.runit[a])] for a in C.objects]},
        }))
    return docs


def write_corpus(root):
    """Regenerate the JSON copies under ``root``."""
    from pathlib import Path

    from .io import dumps

    for rel, doc in corpus_documents():
        path = Path(root) / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps(doc) + "\n")
