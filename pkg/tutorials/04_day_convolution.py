"""Day convolution over discrete monoids, and the Fourier transform of a kernel."""

# %%
import numpy as np

from coendcalc import fixtures as fx
from coendcalc.convolution import (
    contra_kernel,
    cyclic_monoidal,
    day_convolve,
    day_promonoidal,
    fourier,
    parseval,
)
from coendcalc.setfun import SetValuedFunctor

Z4 = cyclic_monoidal(4)


def sized(M, sizes, name):
    return SetValuedFunctor(M.C, {c: range(n) for c, n in zip(M.C.objects, sizes)},
                            lambda f, x: x, name=name)


# %% Over a discrete group, Day convolution convolves the cardinalities.
u, v = [1, 2, 0, 1], [0, 1, 1, 0]
F, G = sized(Z4, u, "F"), sized(Z4, v, "G")
conv, units = day_convolve(F, G, Z4)
print("|F*G| =", [len(conv.ob(c)) for c in Z4.C.objects])
print("cyclic convolution:", [sum(u[a] * v[(c - a) % 4] for a in range(4)) for c in range(4)])
print("unit laws:", [w.ok for w in units])

# %% The reduction Z/4 -> Z/2 gives a kernel; its transform sums over fibres.
Z2 = fx.monoidal("Z2")
K = contra_kernel(fx.mod2_functor(), Z4, Z2)
print("kernel checks:", {k: w.ok for k, w in K.witnesses.items()})
fF = fourier(K, F)
print("K^(F) =", [len(fF.ob(c)) for c in Z2.C.objects],
      "fibre sums:", np.add.reduceat(np.array(u)[[0, 2, 1, 3]], [0, 2]).tolist())

# %% Parseval: the transform turns convolution into convolution.
print("Parseval:", parseval(K, F, G).ok)
print("promonoidal structure from Z/2:",
      {k: w.ok for k, w in day_promonoidal(Z2).witnesses.items()})
