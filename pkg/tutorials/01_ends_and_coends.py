"""Ends and coends of hom on a few small categories."""

# %%
from coendcalc import fixtures as fx
from coendcalc.coend import coend, coend_as_colimit, end, end_via_equalizer, nat_set
from coendcalc.fincat import constant_functor, identity_functor, walking_arrow
from coendcalc.setfun import hom_functor

# %% The end of hom picks out families of endomorphisms that commute with everything.
B = fx.category("BS3")
H = hom_functor(B)
E = end(H, B)
print("end of hom over BS3:", len(E), "element(s):", list(E))

# %% The coend glues g with h g h^-1, so it counts conjugacy classes.
K = coend(H, B)
for rep, members in K.classes().items():
    print(rep, "<-", [x for _, x in members])

# %% Coends are colimits over the twisted arrow category; the two agree.
w = coend_as_colimit(H)
print("coend = twisted colimit:", w.ok)

# %% Natural transformations as an end, checked against plain enumeration.
A = walking_arrow()
E, w = nat_set(constant_functor(A, A, "0"), identity_functor(A))
print("|Nat(const0, id)| =", len(E), "| verified:", w.ok)

# %% On the walking arrow an end is a pullback.
T, C = fx.delta1_bifunctor()
print("end:", list(end(T, C)), "| equalizer:", list(end_via_equalizer(T, C)))
