import pytest

from coendcalc.config import caps
from coendcalc.errors import (
    AssociativityViolation,
    FunctorError,
    MissingIdentity,
    SizeCapExceeded,
)
from coendcalc.fincat import (
    FinFunctor,
    all_functors,
    category_of_elements,
    chain,
    constant_functor,
    coslice,
    cyclic_group,
    identity_functor,
    natural_transformations,
    op_times,
    opposite,
    poset,
    product,
    symmetric_group,
    twisted_arrows,
    validate_category,
    walking_arrow,
    walking_iso,
)
from coendcalc.setfun import representable


def arrow_desc(**over):
    desc = {"objects": ["0", "1"],
            "morphisms": [["i0", "0", "0"], ["i1", "1", "1"], ["f", "0", "1"]],
            "identities": {"0": "i0", "1": "i1"},
            "composition": []}
    desc.update(over)
    return desc


def test_walking_arrow_from_description():
    C = validate_category(arrow_desc(), name="2")
    assert C.hom("0", "1") == ("f",)
    assert C.compose("f", "i0") == "f"
    assert C.compose("i1", "f") == "f"


def test_missing_identity():
    with pytest.raises(MissingIdentity):
        validate_category(arrow_desc(identities={"0": "i0"}))


def test_non_associative_table_is_located():
    desc = {"objects": ["*"],
            "morphisms": [["1", "*", "*"], ["a", "*", "*"], ["b", "*", "*"]],
            "identities": {"*": "1"},
            "composition": [["a", "a", "b"], ["a", "b", "a"], ["b", "a", "b"], ["b", "b", "b"]]}
    with pytest.raises(AssociativityViolation, match="not associative"):
        validate_category(desc)


def test_object_cap():
    desc = {"objects": ["a", "b", "c"],
            "morphisms": [[f"i{a}", a, a] for a in "abc"],
            "identities": {a: f"i{a}" for a in "abc"}}
    with caps(max_objects=2), pytest.raises(SizeCapExceeded):
        validate_category(desc)
    assert len(validate_category(desc).objects) == 3


def test_opposite_is_involutive_and_cached():
    C = walking_arrow()
    assert opposite(opposite(C)) is C
    assert opposite(C) is opposite(C)
    assert opposite(C).src("f") == C.trg("f")


@pytest.mark.parametrize("C", [walking_arrow(), walking_iso(), cyclic_group(3),
                               symmetric_group(3), chain(3)], ids=lambda C: C.name)
def test_derived_categories_validate(C):
    product(C, C).validate()
    op_times(C).validate()
    TW, sigma = twisted_arrows(C)
    assert len(TW.objects) == len(C.morphisms)
    sigma.validate()


def test_symmetric_group_size():
    B = symmetric_group(3)
    assert len(B.objects) == 1 and len(B.morphisms) == 6
    assert all(B.is_iso(g) for g in B.morphisms)


def test_poset_hom_sets_are_thin():
    P = poset(range(3), lambda a, b: a <= b)
    assert all(len(P.hom(a, b)) == (1 if a <= b else 0) for a in range(3) for b in range(3))


def test_coslice_and_elements_of_a_representable_agree():
    P = chain(3)
    c0 = P.objects[0]
    S = coslice(P, c0)
    El = category_of_elements(representable(P, c0))
    El = El[0] if isinstance(El, tuple) else El
    assert len(S.objects) == len(El.objects)
    assert len(S.morphisms) == len(El.morphisms)


def test_functor_validation_rejects_broken_composition():
    A = walking_arrow()
    with pytest.raises(FunctorError):
        FinFunctor(A, A, {"0": "0", "1": "1"}, {m: "f" for m in A.morphisms})


def test_identity_and_constant_functors():
    A = walking_arrow()
    assert identity_functor(A).is_fully_faithful()
    assert not constant_functor(A, A, "0").is_fully_faithful()


def test_functor_enumeration_counts():
    A = walking_arrow()
    # monotone maps from a 2-chain to itself
    assert len(list(all_functors(A, A))) == 3
    B2, B3 = cyclic_group(2), cyclic_group(3)
    assert len(list(all_functors(B2, B3))) == 1
    assert len(list(all_functors(B3, B3))) == 3


def test_natural_transformations_between_constants():
    A = walking_arrow()
    K0, K1 = constant_functor(A, A, "0"), constant_functor(A, A, "1")
    assert len(natural_transformations(K0, K1)) == 1
    assert len(natural_transformations(K1, K0)) == 0
