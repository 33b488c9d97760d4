"""The four Yoneda reductions, Kan extensions and weighted limits."""

# %%
from coendcalc import fixtures as fx
from coendcalc.fincat import identity_functor, poset, to_terminal
from coendcalc.kanweighted import (
    lan,
    ran,
    weighted_limit,
    weighted_via_elements,
    yoneda_reduce,
)
from coendcalc.setfun import corepresentable, representable, terminal_functor

P = poset([0, 1, 2], lambda a, b: a <= b, name="0<1<2")

# %% Presheaf forms (i), (ii) and copresheaf forms (iii), (iv).
X = corepresentable(P, 1)  # P(-, 1)
Y = representable(P, 0)    # P(0, -)
for v, F in (("i", X), ("ii", X), ("iii", Y), ("iv", Y)):
    print(f"({v})", yoneda_reduce(F, v).ok)

# %% Lan along P -> 1 is the colimit, Ran is the limit.
F = fx.random_set_functor(P, fx.rng_for(4), 7)
L, R = lan(to_terminal(P), F), ran(to_terminal(P), F)
print("colim F:", len(L.functor.ob("*")), "  lim F:", len(R.functor.ob("*")))
print("Lan ⊣ restriction:", L.adjunction_witness(terminal_functor(L.functor.base)).ok)

# %% Ran along the identity gives F back, component by component.
R = ran(identity_functor(P), F)
print([len(R.functor.ob(c)) for c in P.objects], "vs", [len(F.ob(c)) for c in P.objects])

# %% A weighted limit: the kernel pair of a 3 -> 2 surjection.
W, D = fx.kernel_pair_data()
E, w = weighted_limit(W, D)
print("kernel pair:", len(E), "elements")
print("same as the conical limit over the elements of W:", weighted_via_elements(W, D).ok)
