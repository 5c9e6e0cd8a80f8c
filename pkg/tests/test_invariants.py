import random
from fractions import Fraction

import pytest

from gradmod.abelian import FinAbGroup, Subgroup
from gradmod.bichar import BrauerClass
from gradmod.corpus import random_A_outer, standard_corpus
from gradmod.gradings import (AInner, AOuter, BSpec, CSpec, DInner, DOuter, validate,
                              weights_up_to)
from gradmod.invariants import (D_outer_quotient_data, admits_by_criterion, admits_grading,
                                brauer_invariant, compute_M_plus, f_B, gamma_hat_0_D_outer,
                                gamma_hat_B, gamma_hat_plus_D, h_prime, schur_index,
                                support_B_closed_form, support_D_closed_form)

HALF = Fraction(1, 2)
G = FinAbGroup([2, 2])
Z2 = FinAbGroup([2])
a, b, c, e = (1, 0), (0, 1), (1, 1), (0, 0)
PAULI = BrauerClass.from_pairs(G, [a, b], {(0, 1): HALF})
B_RUN = BSpec(G, 2, e, (e, e, a, b, c), 5)
D_RUN = DInner(G, 3, BrauerClass.trivial(G), e, (e, e, e, a, b, c), (e,) * 6)
D_OUT = DOuter(Z2, 3, BrauerClass.trivial(Z2), (0,), ((0,),) * 5 + ((1,),), ((0,),) * 6, (1,))


def test_pauli_sl2():
    spec = AInner(G, 1, PAULI, (e,))
    for m in range(6):
        rep = brauer_invariant(spec, (m,))
        assert rep.brauer == (PAULI if m % 2 else BrauerClass.trivial(G))
        assert schur_index(spec, (m,)) == (2 if m % 2 else 1)


@pytest.mark.parametrize("name,spec", standard_corpus(seed=1))
def test_zero_weight_is_trivial(name, spec):
    rep = brauer_invariant(spec, (0,) * spec.rank)
    assert rep.brauer.is_trivial() and rep.schur_index == 1 and rep.admits_grading


def test_B_so5_example():
    rep = brauer_invariant(B_RUN, (0, 1))
    assert rep.support == Subgroup.whole(G)
    assert rep.schur_index == 2 and not rep.admits_grading
    assert f_B(B_RUN, a) == (0, 0, 1, 0, 1) and f_B(B_RUN, b) == (0, 0, 0, 1, 1)
    assert gamma_hat_B(B_RUN)(a, b) == HALF
    assert support_B_closed_form(B_RUN) == rep.support
    assert admits_grading(B_RUN, (3, 0))


def test_B_trivial_cases():
    assert gamma_hat_B(BSpec(G, 2, e, (e,) * 5, 5)).is_trivial()
    spec = BSpec(Z2, 2, (0,), ((0,),) * 3 + ((1,), (1,)), 5)
    assert gamma_hat_B(spec).is_trivial()
    assert support_B_closed_form(spec).is_trivial()


def test_gamma_B_needs_normalized():
    Z4 = FinAbGroup([4])
    raw = BSpec(Z4, 2, (2,), ((1,), (1,), (1,), (0,), (2,)), 3)
    with pytest.raises(ValueError, match="normalized"):
        gamma_hat_B(raw)
    brauer_invariant(raw, (0, 1))


def test_C_parity():
    spec = CSpec(G, 2, PAULI)
    r10 = brauer_invariant(spec, (1, 0))
    r01 = brauer_invariant(spec, (0, 1))
    assert (r10.schur_index, r10.admits_grading) == (2, False)
    assert (r01.schur_index, r01.admits_grading) == (1, True)
    for lam in weights_up_to(2, 4):
        assert brauer_invariant(spec, lam).admits_grading == (lam[0] % 2 == 0)


def test_A_inner_sl3_adjoint():
    G3 = FinAbGroup([3, 3])
    cls = BrauerClass.from_pairs(G3, [(1, 0), (0, 1)], {(0, 1): Fraction(1, 3)})
    spec = AInner(G3, 2, cls, ((0, 0),))
    assert admits_grading(spec, (1, 1))
    assert schur_index(spec, (1, 0)) == 3


def test_A_outer_transpose_type():
    spec = AOuter(Z2, 3, (1,), (1,), (), (), (0,), ((0,),) * 4, ())
    assert h_prime(spec) == (0,)
    assert admits_grading(spec, (0, 1, 0))
    rep = brauer_invariant(spec, (1, 0, 0))
    assert rep.H_lambda == Subgroup.whole(Z2) and not rep.admits_grading


def test_h_prime_ignores_hyperbolic_entries():
    rng = random.Random(11)
    seen = 0
    for _ in range(40):
        spec = random_A_outer(FinAbGroup([2, 2, 2]), 3, rng)
        if spec.k - spec.q < 2:
            continue
        Gx = spec.group
        y = tuple(rng.randrange(n) for n in Gx.orders)
        i = spec.q
        xi = list(spec.xi)
        xi[i], xi[i + 1] = Gx.add(xi[i], y), Gx.sub(xi[i + 1], y)
        moved = AOuter(Gx, spec.rank, spec.h, spec.chi, spec.tbar, spec.beta, spec.g0,
                       tuple(xi), spec.t, spec.mu0)
        if validate(moved):
            continue
        seen += 1
        assert h_prime(moved) == h_prime(spec)
    assert seen


def test_D_so6_example():
    plus, minus = gamma_hat_plus_D(D_RUN)
    assert plus(a, b) == HALF and minus(a, b) == HALF
    assert support_D_closed_form(D_RUN) == Subgroup.whole(G)
    assert schur_index(D_RUN, (0, 0, 1)) == 2


def test_D_T16_q0():
    G4 = FinAbGroup([2, 2, 2, 2])
    cls = BrauerClass.from_pairs(G4, G4.gens(), {(0, 1): HALF, (2, 3): HALF})
    z = (0,) * 4
    plus, minus = gamma_hat_plus_D(DInner(G4, 4, cls, z, (z, z), ()))
    assert plus.is_trivial() and minus == cls.factor


def test_D_T64():
    G6 = FinAbGroup([2] * 6)
    cls = BrauerClass.from_pairs(G6, G6.gens(), {(0, 1): HALF, (2, 3): HALF, (4, 5): HALF})
    z = (0,) * 6
    plus, minus = gamma_hat_plus_D(DInner(G6, 4, cls, z, (z,), (z,)))
    assert plus.is_trivial() and minus == cls.factor


def test_M_plus_examples():
    assert compute_M_plus(0, 0, 0, 0) == ((0, 1, 0, 1), (1, 0, 1, 1), (0, 1, 0, 1), (1, 1, 1, 0))
    assert compute_M_plus(1, 0, 0, 0) == ((0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0))
    with pytest.raises(ValueError):
        compute_M_plus(1, 0, 1, 0)


def test_D_outer_examples():
    Gb, p, g0, xi = D_outer_quotient_data(D_OUT)
    assert Gb.order == 1
    assert gamma_hat_0_D_outer(D_OUT).is_trivial()
    assert brauer_invariant(D_OUT, (0, 1, 1)).H_lambda.is_trivial()
    rep = brauer_invariant(D_OUT, (0, 0, 1))
    assert rep.H_lambda == Subgroup.whole(Z2) and not rep.admits_grading


def test_D_outer_T4_quotient_degrees():
    specs = [s for _, s in standard_corpus(seed=0)
             if isinstance(s, DOuter) and s.cls.support.order == 4]
    assert specs
    for spec in specs:
        Gb, p, g0, xi = D_outer_quotient_data(spec)
        assert len(xi) == 2 * spec.k and 2 * Gb.order == spec.group.order


@pytest.mark.parametrize("name,spec", standard_corpus(seed=2))
def test_criterion_predicate_matches_definition(name, spec):
    for lam in weights_up_to(spec.rank, 2):
        rep = brauer_invariant(spec, lam)
        assert admits_by_criterion(spec, lam) == rep.admits_grading


def test_invalid_spec_raises():
    with pytest.raises(ValueError):
        brauer_invariant(AInner(G, 2, PAULI, (e,)), (1, 0))
