import pytest

from coendcalc import fixtures as fx
from coendcalc.fincat import (
    FinFunctor,
    constant_functor,
    identity_functor,
    poset,
    walking_arrow,
)
from coendcalc.profunctor import (
    action_law_witness,
    action_unit_witness,
    adjunction_criterion,
    adjunction_P,
    associator_witness,
    collage,
    extend_law,
    fully_faithful_via_unit,
    hom_pro,
    lift_law,
    pentagon,
    pro_compose,
    pseudofunctoriality,
    ran_adjunction,
    ran_in_relt,
    unitor_witnesses,
)
from coendcalc.setfun import representable

A = walking_arrow()
P3 = poset([0, 1, 2], lambda a, b: a <= b)
h = hom_pro(A)
incl = FinFunctor(A, P3, {"0": 0, "1": 2}, {"id0": (0, 0), "id1": (2, 2), "f": (0, 2)})


def test_hom_is_a_unit_for_composition():
    assert all(w.ok for w in unitor_witnesses(h))
    assert (pro_compose(h, h).cardinalities() == h.cardinalities()).all()


def test_associator_and_pentagon():
    assert associator_witness(h, h, h).ok
    assert pentagon(h, h, h, h)


@pytest.mark.parametrize("F,ff", [(identity_functor(A), True),
                                  (constant_functor(A, A, "0"), False),
                                  (incl, True)], ids=["id", "const", "incl"])
def test_relt_adjunction_and_fully_faithful(F, ff):
    assert adjunction_P(F).ok
    v = fully_faithful_via_unit(F)
    assert bool(v.ok) == ff == F.is_fully_faithful()


def test_embedding_is_pseudofunctorial():
    assert all(w.ok for w in pseudofunctoriality(incl, identity_functor(P3)))


def test_adjunction_criterion():
    assert adjunction_criterion(identity_functor(A), identity_functor(A)).ok
    assert not adjunction_criterion(constant_functor(A, A, "0"), identity_functor(A)).ok


def test_collage_of_hom():
    Col, w = collage(h)
    assert w.ok
    assert len(Col.objects) == 4


def test_kan_lifts_and_extensions():
    R = ran_in_relt(h, h)
    assert ran_adjunction(h, h, h, R).ok
    assert lift_law(h, h, h).ok and extend_law(h, h, h).ok


def test_action_on_presheaves():
    F = representable(A, "0")
    assert action_unit_witness(F).ok
    assert action_law_witness(h, h, F).ok


def test_corpus_adjunctions():
    for name, F in fx.functor_corpus():
        assert adjunction_P(F).ok, name
