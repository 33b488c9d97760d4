import pytest

from coendcalc import fixtures as fx
from coendcalc.convolution import (
    cauchy_pointwise,
    cauchy_promonoidal,
    compose_kernels,
    contra_kernel,
    cyclic_monoidal,
    day_associativity,
    day_convolve,
    day_hom,
    day_matches_promonoidal,
    day_promonoidal,
    fourier,
    fourier_adjoint,
    fourier_representable,
    fourier_unit,
    fourier_vs_lan,
    hom_kernel,
    idempotent_monoidal,
    kernel_check,
    meet_monoidal,
    p_associativity,
    p_unit_witnesses,
    parseval,
    trivial_promonoidal,
)
from coendcalc.errors import ShapeMismatch
from coendcalc.fincat import chain
from coendcalc.setfun import SetValuedFunctor, representable

Z2, Z4 = cyclic_monoidal(2), cyclic_monoidal(4)


def disc(C, sizes, name):
    return SetValuedFunctor(C, lambda c: [(c, i) for i in range(sizes[c])],
                            lambda f, x: x, check=False, name=name)


F = disc(Z2.C, {0: 2, 1: 3}, "F")
G = disc(Z2.C, {0: 1, 1: 1}, "G")


@pytest.mark.parametrize("M", [Z2, Z4, idempotent_monoidal(), fx.monoidal("BZ2"),
                               fx.monoidal("P3")], ids=lambda M: M.name)
def test_monoidal_axioms(M):
    assert M.verdict()


def test_day_over_z2_adds_up():
    conv, units = day_convolve(F, G, Z2)
    assert [len(conv.ob(c)) for c in Z2.C.objects] == [5, 5]
    assert all(w.ok for w in units)
    assert day_associativity(F, G, F, Z2).ok


def test_day_over_the_idempotent_monoid():
    E = idempotent_monoidal()
    H = disc(E.C, {"1": 1, "e": 2}, "H")
    assert all(w.ok for w in day_convolve(H, H, E)[1])
    assert day_associativity(H, H, H, E).ok


def test_day_internal_hom():
    _, ws = day_hom(G, F, Z2, probes=[G, F])
    assert all(w.ok for w in ws)


def test_day_promonoidal_reproduces_day():
    PD = day_promonoidal(Z2)
    assert all(w.ok for w in PD.witnesses.values())
    assert day_matches_promonoidal(F, G, Z2, PD).ok
    assert all(w.ok for w in p_unit_witnesses(F, PD))
    assert p_associativity(F, G, F, PD).ok


def test_cauchy_is_pointwise_product():
    ch = chain(2)
    PC = cauchy_promonoidal(ch)
    assert all(w.ok for w in PC.witnesses.values())
    X = representable(ch, ch.objects[0])
    Y = SetValuedFunctor(ch, lambda c: [1, 2], lambda f, x: x, check=False)
    assert cauchy_pointwise(X, Y, PC).ok
    assert p_associativity(X, Y, X, PC).ok


def test_trivial_promonoidal_validates():
    PT = trivial_promonoidal(fx.category("1"))
    assert all(w.ok for w in PT.witnesses.values())
    with pytest.raises(ShapeMismatch):
        trivial_promonoidal(chain(2))


def mod2():
    return contra_kernel(fx.mod2_functor(), Z4, Z2)


def test_kernels_validate():
    assert hom_kernel(day_promonoidal(Z2)).ok
    assert mod2().ok


def test_fourier_of_hom_is_the_identity():
    K = hom_kernel(day_promonoidal(Z2))
    out = fourier(K, F)
    assert [len(out.ob(c)) for c in Z2.C.objects] == [2, 3]
    assert fourier_unit(K).ok


def test_parseval_and_lan_for_mod2():
    K = mod2()
    f = disc(Z4.C, {0: 1, 1: 2, 2: 0, 3: 1}, "f")
    g = disc(Z4.C, {0: 1, 1: 1, 2: 1, 3: 0}, "g")
    assert parseval(K, f, g).ok
    assert fourier_vs_lan(fx.mod2_functor(), K, f).ok
    assert fourier_representable(K, 1).ok
    _, ws = fourier_adjoint(K, F, probes=[f])
    assert all(w.ok for w in ws)


def test_kernels_compose():
    K2 = contra_kernel(fx.collapse_functor(), Z2, cyclic_monoidal(1))
    assert compose_kernels(mod2(), K2).ok


def test_broken_mediator_fails_at_k1_only():
    K = mod2()

    def k1(abx, yz, e):
        if abx[0] != 1:
            return K.k1(abx, yz, e)
        return (0, (K.PA.C.identity(0), e[2]))

    bad = kernel_check(K.K, K.PA, K.PC, k1, K.k2)
    assert not bad.witnesses["k1"].ok
    assert "k2" not in bad.witnesses


def test_meet_monoidal_on_a_chain():
    M = meet_monoidal(chain(3), min, 2)
    assert M.verdict()
