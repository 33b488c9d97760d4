import pytest

from coendcalc.errors import FunctorError, MissingLeg, NotWellDefined
from coendcalc.fincat import op_times, opposite, walking_arrow
from coendcalc.quotient import QuotientSet
from coendcalc.setfun import (
    DinaturalFamily,
    FinMap,
    FinSet,
    SetValuedFunctor,
    check_dinatural,
    check_wedge,
    corepresentable,
    function_set,
    hom_functor,
    pointwise_product,
    representable,
    terminal_functor,
)


def test_function_set_size_and_order():
    X, Y = FinSet([0, 1]), FinSet("abc")
    fs = function_set(X, Y)
    assert len(fs) == 9
    assert [m(0) for m in list(fs)[:3]] == ["a", "a", "a"]


def test_finmap_inverse_roundtrip():
    X = FinSet([0, 1, 2])
    m = FinMap(X, X, {0: 1, 1: 2, 2: 0})
    assert m.is_bijective()
    assert all(m.inverse()(m(x)) == x for x in X)


def test_functor_rejects_non_total_action():
    A = walking_arrow()
    with pytest.raises(FunctorError):
        SetValuedFunctor(A, {"0": [1, 2], "1": ["*"]}, {"f": {1: "*"}})


def test_representables():
    A = walking_arrow()
    y0 = representable(A, "0")
    assert [len(y0.ob(c)) for c in A.objects] == [1, 1]
    h1 = corepresentable(A, "1")
    assert h1.base is opposite(A)
    assert [len(h1.ob(c)) for c in A.objects] == [1, 1]


def test_pointwise_product_sizes():
    A = walking_arrow()
    F = SetValuedFunctor(A, {"0": [1, 2], "1": ["*"]}, lambda f, x: "*" if f == "f" else x)
    P = pointwise_product(F, F)
    assert [len(P.ob(c)) for c in A.objects] == [4, 1]
    P.validate()


def test_quotient_keeps_least_representative():
    Q = QuotientSet([("a", [1, 2]), ("b", [3])])
    Q.relate(("b", 3), ("a", 2))
    assert len(Q) == 2
    assert Q.rep(("b", 3)) == ("a", 2)
    assert Q.same_class(("a", 2), ("b", 3))


def test_identity_on_hom_is_dinatural():
    A = walking_arrow()
    H = hom_functor(A)
    comps = {c: FinMap.identity(H.ob((c, c))) for c in A.objects}
    assert check_dinatural(DinaturalFamily(H, H, comps, C=A))


def test_wedge_needs_every_leg():
    A = walking_arrow()
    H = hom_functor(A)
    tip = FinSet(["*"])
    with pytest.raises(MissingLeg):
        check_wedge(tip, {"0": FinMap(tip, H.ob(("0", "0")), {"*": A.identity("0")})}, H, A)


def test_identities_form_a_wedge():
    A = walking_arrow()
    H = hom_functor(A)
    tip = FinSet(["*"])
    legs = {c: FinMap(tip, H.ob((c, c)), {"*": A.identity(c)}) for c in A.objects}
    assert check_wedge(tip, legs, H, A)


def test_terminal_functor_on_op_times():
    A = walking_arrow()
    T = terminal_functor(op_times(A))
    assert T.size() == 4
    assert NotWellDefined.__mro__[1].__name__ == "CoendError"
