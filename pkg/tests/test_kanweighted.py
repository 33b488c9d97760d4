import pytest

from coendcalc import fixtures as fx
from coendcalc.fincat import (
    constant_functor,
    identity_functor,
    poset,
    terminal,
    to_terminal,
    walking_arrow,
)
from coendcalc.kanweighted import (
    codensity_collapse,
    coslice_vs_elements,
    elements_as_colimit,
    end_as_weighted,
    functor_tensor,
    hom_weighted,
    isbell,
    lan,
    lan_compose_witness,
    nerve_realization,
    ran,
    ran_pointwise,
    weight_change,
    weighted_colimit,
    weighted_limit,
    weighted_via_elements,
    yoneda_embedding,
    yoneda_reduce,
)
from coendcalc.setfun import (
    constant_set_functor,
    corepresentable,
    hom_functor,
    representable,
    terminal_functor,
)

A = walking_arrow()
P3 = poset([0, 1, 2], lambda a, b: a <= b)


@pytest.mark.parametrize("variant,X", [("i", corepresentable(P3, 1)),
                                       ("ii", corepresentable(P3, 1)),
                                       ("iii", representable(P3, 0)),
                                       ("iv", representable(P3, 0))])
def test_ninja_yoneda(variant, X):
    assert yoneda_reduce(X, variant).ok


def test_lan_along_the_terminal_functor_is_the_colimit():
    F = representable(A, "0")
    ext = lan(to_terminal(A), F)
    assert [len(ext.functor.ob(o)) for o in ext.functor.base.objects] == [1]
    assert ext.adjunction_witness(terminal_functor(ext.functor.base)).ok
    assert ext.triangle_witness(constant_set_functor(ext.functor.base, "ab")).ok


def test_ran_and_its_pointwise_formula():
    F = representable(A, "0")
    r = ran(identity_functor(A), F)
    assert r.adjunction_witness(F).ok
    assert all(ran_pointwise(identity_functor(A), F, d).ok for d in A.objects)


def test_lan_composes():
    G = constant_functor(terminal(), A, "0")
    assert lan_compose_witness(G, identity_functor(A), terminal_functor(terminal())).ok


def test_kernel_pair_has_five_elements():
    W, F = fx.kernel_pair_data()
    E, w = weighted_limit(W, F)
    assert w.ok and len(E) == 5
    assert weighted_via_elements(W, F).ok


def test_representable_weight_evaluates():
    F = representable(A, "0")
    Kc, w = weighted_colimit(corepresentable(A, "1"), F)
    assert w.ok and len(Kc) == len(F.ob("1"))


def test_elements_and_coslices():
    assert elements_as_colimit(representable(P3, 0)).ok
    assert coslice_vs_elements(P3, 0)


def test_codensity_and_tensor():
    assert codensity_collapse(A, "0", "1")[1].ok
    _Kt, ws = functor_tensor(corepresentable(A, "1"), representable(A, "0"), probes=[["p", "q"]])
    assert all(w.ok for w in ws)


def test_weight_manipulations():
    F = representable(A, "0")
    assert weight_change(F, F, identity_functor(A)).ok
    assert hom_weighted(F, F, ["s", "t"]).ok
    assert end_as_weighted(hom_functor(A)).ok


def test_isbell_and_nerve():
    _O, _Sp, w = isbell(corepresentable(A, "1"), representable(A, "0"))
    assert w.ok
    _R, _N, w = nerve_realization(yoneda_embedding(A), corepresentable(A, "1"),
                                corepresentable(A, "0"))
    assert w.ok
