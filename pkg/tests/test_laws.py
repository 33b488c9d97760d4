"""Property tests over seeded fixtures; hypothesis picks the seeds."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from coendcalc import fixtures as fx
from coendcalc.coend import coend, coend_as_colimit, end, end_via_equalizer, nat_set
from coendcalc.convolution import cyclic_monoidal, day_convolve
from coendcalc.fincat import natural_transformations, opposite, product
from coendcalc.quotient import QuotientSet
from coendcalc.setfun import SetValuedFunctor

seeds = st.integers(0, 2**32 - 1)
quick = settings(max_examples=25, deadline=None)


@quick
@given(seeds)
def test_opposite_is_involutive(seed):
    C = fx.random_category(fx.rng_for(seed))
    assert opposite(opposite(C)) is C
    assert all(opposite(C).hom(b, a) == C.hom(a, b) for a in C.objects for b in C.objects)


@quick
@given(seeds)
def test_product_sizes_multiply(seed):
    rng = fx.rng_for(seed)
    C, D = fx.random_category(rng), fx.random_category(rng)
    P = product(C, D)
    assert len(P.morphisms) == len(C.morphisms) * len(D.morphisms)


@quick
@given(seeds)
def test_end_two_routes(seed):
    rng = fx.rng_for(seed)
    C = fx.random_category(rng, ("1", "2", "Iso", "BZ2", "V", "Disc2"))
    T = fx.random_bifunctor(C, rng, 10)
    assert set(end(T, C).carrier) == set(end_via_equalizer(T, C))


@quick
@given(seeds)
def test_coend_is_a_twisted_colimit(seed):
    rng = fx.rng_for(seed)
    C = fx.random_category(rng, ("1", "2", "Iso", "BZ2", "P3", "Disc2"))
    T = fx.random_bifunctor(C, rng, 10)
    w = coend_as_colimit(T)
    assert w.ok
    assert len(coend(T, C)) <= T.size()


@quick
@given(seeds)
def test_nat_as_end(seed):
    rng = fx.rng_for(seed)
    C, D = fx.random_category(rng), fx.random_category(rng)
    F, G = fx.random_functor(C, D, rng), fx.random_functor(C, D, rng)
    E, w = nat_set(F, G)
    assert w.ok and len(E) == len(natural_transformations(F, G))


def cyclic_convolution(u, v):
    n = len(u)
    return np.array([sum(u[a] * v[(c - a) % n] for a in range(n)) for c in range(n)])


@quick
@given(st.integers(1, 4), st.data())
def test_day_over_a_discrete_group_convolves_cardinalities(n, data):
    M = cyclic_monoidal(n)
    sizes = st.lists(st.integers(0, 3), min_size=n, max_size=n)
    u, v = np.array(data.draw(sizes)), np.array(data.draw(sizes))
    F = SetValuedFunctor(M.C, {c: range(u[c]) for c in M.C.objects}, lambda f, x: x)
    G = SetValuedFunctor(M.C, {c: range(v[c]) for c in M.C.objects}, lambda f, x: x)
    conv, units = day_convolve(F, G, M)
    got = np.array([len(conv.ob(c)) for c in M.C.objects])
    assert (got == cyclic_convolution(u, v)).all()
    assert all(w.ok for w in units)


@quick
@given(st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=12))
def test_quotient_matches_naive_closure(pairs):
    Q = QuotientSet([("t", range(8))])
    for x, y in pairs:
        Q.relate(("t", x), ("t", y))
    label = list(range(8))
    changed = True
    while changed:
        changed = False
        for x, y in pairs:
            m = min(label[x], label[y])
            if label[x] != m or label[y] != m:
                label[x] = label[y] = m
                changed = True
    assert len(Q) == len(set(label))
    assert all(Q.rep(("t", x)) == ("t", label[x]) for x in range(8))
