"""Composing profunctors and the adjunction F_* ⊣ F^*."""

# %%
import numpy as np

from coendcalc import fixtures as fx
from coendcalc.profunctor import (
    adjunction_P,
    associator_witness,
    collage,
    fully_faithful_via_unit,
    hom_pro,
    pro_compose,
    unitor_witnesses,
)

C = fx.category("P3")
h = hom_pro(C)

# %% Cardinalities as a matrix: hom on a chain is upper triangular.
print(h.cardinalities())

# %% Composing with hom changes nothing, up to the unitors.
print("unitors:", [w.ok for w in unitor_witnesses(h)])
print("h∘h = h:", np.array_equal(pro_compose(h, h).cardinalities(), h.cardinalities()))
print("associator:", associator_witness(h, h, h).ok)

# %% Every functor in the corpus gives an adjunction of profunctors.
for name, F in fx.functor_corpus()[-8:]:
    adj = adjunction_P(F)
    print(f"{name:12s} adjunction {adj.ok}  fully faithful {bool(fully_faithful_via_unit(F))}")

# %% The collage glues two copies of the chain along h.
Col, w = collage(h)
print(len(Col.objects), "objects,", len(Col.morphisms), "morphisms, check", w.ok)
