from fractions import Fraction

import pytest

from gradmod.abelian import FinAbGroup
from gradmod.bichar import BrauerClass, CommutationFactor
from gradmod.gradings import AInner, BSpec, CSpec, DInner
from gradmod.invariants import brauer_invariant, gamma_hat_B, gamma_hat_plus_D
from gradmod.oracle import (CliffordElem, CycloField, MonomialMatrix, OracleSkipped, Realization,
                            b_oracle, commutation_factor_bruteforce, commutator_value,
                            d_inner_oracle, det_X, form_congruence_check,
                            half_spin_factors_oracle, natural_factor, spin_element_by_solve,
                            spin_element_for, standard_division_algebra, wedge_factor)
from gradmod.oracle.clifford import commutator_parity_formula
from gradmod.oracle.cyclo import sqrt_rational
from gradmod.oracle.monomial import scalar_commutator

HALF = Fraction(1, 2)
G = FinAbGroup([2, 2])
a, b, c, e = (1, 0), (0, 1), (1, 1), (0, 0)
PAULI = BrauerClass.from_pairs(G, [a, b], {(0, 1): HALF})
G4 = FinAbGroup([2] * 4)
T16 = BrauerClass.from_pairs(G4, G4.gens(), {(0, 1): HALF, (2, 3): HALF})
F8 = CycloField(8)


def mat(rows, F=F8):
    return [[F.rational(x) for x in r] for r in rows]


def diag(*signs):
    n = len(signs)
    return mat([[signs[i] if i == j else 0 for j in range(n)] for i in range(n)])


@pytest.mark.parametrize("M,phi", [(1, 1), (2, 1), (3, 2), (4, 2), (8, 4), (12, 4), (24, 8)])
def test_cyclotomic_degree(M, phi):
    F = CycloField(M)
    assert F.phi == phi
    assert F.zeta() ** M == F.one()
    assert CycloField(M) is F


def test_cyclotomic_arithmetic():
    F = F8
    i = F.i()
    assert i * i == -F.one()
    assert F.root_of_unity(Fraction(3, 8)).as_root_of_unity() == Fraction(3, 8)
    assert sqrt_rational(2, F) ** 2 == F.rational(2)
    x = F.zeta() + 1
    assert x * x.inverse() == F.one() and (x / x) == F.one()
    assert (F.rational(Fraction(1, 3)) * 3).as_rational() == 1
    with pytest.raises(ValueError):
        CycloField(4).root_of_unity(Fraction(1, 8))


def test_monomial_pauli():
    X, Y = MonomialMatrix.clock(2), MonomialMatrix.shift(2)
    assert X.phases == (HALF, 0)
    assert X @ X == MonomialMatrix.identity(2) and Y @ Y == MonomialMatrix.identity(2)
    assert scalar_commutator(X, Y) == HALF
    assert X.det_phase() == HALF and X.kron(Y).n == 4


def test_monomial_clock_shift_order3():
    X, Y = MonomialMatrix.clock(3), MonomialMatrix.shift(3)
    assert X ** 3 == MonomialMatrix.identity(3)
    assert scalar_commutator(X, Y) in (Fraction(1, 3), Fraction(2, 3))
    assert X @ X.inverse() == MonomialMatrix.identity(3)
    with pytest.raises(ValueError):
        MonomialMatrix([0, 0], [0, 0])


def test_det_X():
    assert [det_X(PAULI, t) for t in (e, a, b)] == [1, -1, -1]
    assert all(det_X(T16, t) == 1 for t in T16.support)
    G3 = FinAbGroup([3, 3])
    with pytest.raises(ValueError):
        det_X(BrauerClass.from_pairs(G3, [(1, 0), (0, 1)], {(0, 1): Fraction(1, 3)}), (1, 0))


def test_division_algebra_relations():
    X = standard_division_algebra(PAULI)
    assert set(X) == set(G.elements())
    assert scalar_commutator(X[a], X[b]) == HALF
    assert Realization(T16).degree == 4


def test_bruteforce_factor_and_wedge_sl3():
    G3 = FinAbGroup([3, 3])
    cls = BrauerClass.from_pairs(G3, [(1, 0), (0, 1)], {(0, 1): Fraction(1, 3)})
    spec = AInner(G3, 2, cls, ((0, 0),))
    assert commutation_factor_bruteforce(cls) == cls.factor == natural_factor(spec)
    assert wedge_factor(spec, 2) == cls.factor.scale(2)
    assert wedge_factor(spec, 2) == brauer_invariant(spec, (0, 1)).brauer.factor


def test_C_natural_factor():
    spec = CSpec(G, 2, PAULI)
    assert natural_factor(spec) == PAULI.factor
    assert wedge_factor(spec, 2).is_trivial()


def test_clifford_relations():
    n = 3
    one = CliffordElem.one(n, F8)
    e1, e2 = (CliffordElem.basis_vector(n, F8, i) for i in range(2))
    assert e1 * e1 == one
    assert (e1 * e2) * (e1 * e2) == -one
    assert e1 * e2 == -(e2 * e1)
    for n in range(2, 7):
        z = CliffordElem.pseudoscalar(n, F8)
        sign = (-1) ** (n * (n - 1) // 2)
        assert z * z == CliffordElem.scalar(n, F8, sign)


def test_spin_elements():
    s = spin_element_for(diag(1, 1, 1, 1), F8)
    assert s == CliffordElem.scalar(4, F8, s.coefficient(0))
    s = spin_element_for(diag(-1, -1, 1, 1), F8)
    assert s.parity() == 0 and set(s.terms) == {0b11}
    r = spin_element_for(diag(-1, 1, 1, 1), F8)
    assert r.parity() == 1 and set(r.terms) == {0b1}
    solved = spin_element_by_solve(diag(-1, 1, 1, 1), F8)
    assert set(solved.terms) == set(r.terms)
    with pytest.raises(ValueError):
        spin_element_for(mat([[1, 1], [0, 1]]), F8)


def test_commutator_matches_parity_formula():
    d1, d2 = (-1, -1, 1, 1), (1, -1, -1, 1)
    s1, s2 = spin_element_for(diag(*d1), F8), spin_element_for(diag(*d2), F8)
    assert commutator_value(s1, s2) == "-1"
    assert commutator_parity_formula(d1, d2) == HALF
    r1, r2 = (-1, 1, 1, 1), (1, -1, 1, 1)
    assert commutator_parity_formula(r1, r1) == 0
    assert commutator_parity_formula(r1, r2) == HALF
    assert commutator_value(spin_element_for(diag(*r1), F8), spin_element_for(diag(*r2), F8)) == "-1"


def test_D_so6_oracle():
    spec = DInner(G, 3, BrauerClass.trivial(G), e, (e, e, e, a, b, c), (e,) * 6)
    res = d_inner_oracle(spec)
    assert res.plus(a, b) == HALF and res.minus(a, b) == HALF
    assert res.unordered() == frozenset(gamma_hat_plus_D(spec))


def test_D_T16_oracle():
    z = (0,) * 4
    res = d_inner_oracle(DInner(G4, 4, T16, z, (z, z), ()))
    assert res.unordered() == frozenset([CommutationFactor.zero(G4), T16.factor])


def test_B_oracle_and_dispatch():
    spec = BSpec(G, 2, e, (e, e, a, b, c), 5)
    assert b_oracle(spec) == gamma_hat_B(spec) == half_spin_factors_oracle(spec)
    assert form_congruence_check(spec)
    with pytest.raises(TypeError):
        half_spin_factors_oracle(CSpec(G, 2, PAULI))


def test_cap_skips():
    spec = BSpec(G, 2, e, (e, e, a, b, c), 5)
    with pytest.raises(OracleSkipped):
        b_oracle(spec, max_dim=16)
    with pytest.raises(OracleSkipped):
        half_spin_factors_oracle(spec, max_dim=16)
