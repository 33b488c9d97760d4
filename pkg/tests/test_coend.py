import pytest

from coendcalc import fixtures as fx
from coendcalc.coend import (
    coend,
    coend_as_colimit,
    elmendorf_check,
    end,
    end_via_equalizer,
    fubini,
    hom_out_of_coend,
    hom_preserves,
    nat_set,
)
from coendcalc.config import caps
from coendcalc.errors import NotWellDefined, ShapeMismatch, SizeCapExceeded
from coendcalc.fincat import (
    constant_functor,
    identity_functor,
    natural_transformations,
    product,
    symmetric_group,
    walking_arrow,
)
from coendcalc.setfun import FinMap, FinSet, hom_functor


def test_center_and_conjugacy_classes_of_s3():
    H = hom_functor(symmetric_group(3))
    assert len(end(H)) == 1
    assert len(coend(H)) == 3


def test_end_of_hom_on_arrow_is_a_point():
    A = walking_arrow()
    E = end(hom_functor(A))
    assert len(E) == 1
    assert E.family(next(iter(E))) == {"0": A.identity("0"), "1": A.identity("1")}


def test_two_routes_to_the_delta1_end():
    T, C = fx.delta1_bifunctor()
    assert set(end(T, C).carrier) == set(end_via_equalizer(T, C))


def test_equalizer_route_respects_cap():
    H = hom_functor(symmetric_group(3))
    with caps(max_states=3), pytest.raises(SizeCapExceeded):
        end_via_equalizer(H)


def test_end_mediator_rejects_non_wedges():
    A = walking_arrow()
    H = hom_functor(A)
    E = end(H)
    tip = FinSet(["*"])
    good = {c: FinMap(tip, H.ob((c, c)), {"*": A.identity(c)}) for c in A.objects}
    assert len(E.mediator(tip, good).table) == 1
    T, C = fx.delta1_bifunctor()
    ET = end(T, C)
    legs = {c: FinMap(tip, T.ob((c, c)), {"*": T.ob((c, c)).elements[-1]}) for c in C.objects}
    if tuple(legs[c]("*") for c in C.objects) not in ET.carrier:
        with pytest.raises(ShapeMismatch):
            ET.mediator(tip, legs)


def test_coend_descent_detects_ill_defined_maps():
    H = hom_functor(symmetric_group(3))
    K = coend(H)
    sizes = {rep: len(ms) for rep, ms in K.classes().items()}
    assert sorted(sizes.values()) == [1, 2, 3]
    with pytest.raises(NotWellDefined):
        K.descend(lambda c, g: g, FinSet(H.ob(("*", "*")).elements))


def test_coend_agrees_with_twisted_arrow_colimit():
    for name in ("2", "Iso", "BS3", "P3"):
        assert coend_as_colimit(hom_functor(fx.category(name))).ok


def test_nat_set_matches_enumeration():
    A = walking_arrow()
    K0, I = constant_functor(A, A, "0"), identity_functor(A)
    E, w = nat_set(K0, I)
    assert w.ok and len(E) == 1 == len(natural_transformations(K0, I))


def test_fubini_on_a_small_bifunctor():
    two = fx.category("2")
    rng = fx.rng_for(3)
    from coendcalc.fincat import op_times

    F = fx.random_set_functor(op_times(product(two, two)), rng, max_total=20)
    joint, ce, ec, ws = fubini(F, two, two)
    assert len(joint) == len(ce) == len(ec)
    assert all(w.ok for w in ws)


def test_hom_commutes_with_ends_and_coends():
    T, _C = fx.delta1_bifunctor()
    assert hom_preserves(T, [["a"], ["a", "b"]]).ok
    assert hom_out_of_coend(T, [["a"], ["a", "b"]]).ok


@pytest.mark.parametrize("X", fx.z2_gsets(), ids=lambda X: X.name)
def test_elmendorf(X):
    assert elmendorf_check(X).ok
