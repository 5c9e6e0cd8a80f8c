from fractions import Fraction

import pytest

from gradmod.abelian import FinAbGroup, Subgroup
from gradmod.bichar import BrauerClass
from gradmod.gradings import (AInner, AOuter, BSpec, CSpec, DInner, DOuter, T4_elements,
                              distinguished_element, is_inner, normalize_B, quadratic_values,
                              require_valid, validate, weight_orbit, weights_up_to)

HALF = Fraction(1, 2)
G = FinAbGroup([2, 2])
a, b, c, e = (1, 0), (0, 1), (1, 1), (0, 0)
PAULI = BrauerClass.from_pairs(G, [a, b], {(0, 1): HALF})


def test_B_examples_valid():
    assert validate(BSpec(G, 2, e, (e,) * 5, 5)) == []
    assert validate(BSpec(G, 2, e, (e, e, a, b, c), 5)) == []


def test_broken_chain_names_relation():
    Z4 = FinAbGroup([4])
    spec = BSpec(Z4, 2, (2,), ((1,), (1,), (2,), (0,), (2,)), 3)
    problems = validate(spec)
    assert problems and "g_3" in problems[0]


def test_B_shape_errors():
    assert any("odd" in p for p in validate(BSpec(G, 2, e, (e,) * 5, 4)))
    assert any("2r+1" in p for p in validate(BSpec(G, 2, e, (e,) * 4, 3)))
    assert validate(BSpec(G, 0, e, (), 1))
    assert any("not an element" in p for p in validate(BSpec(G, 2, (2, 0), (e,) * 5, 5)))


def test_D_nonsymmetric_t_rejected():
    x, y, z = T4_elements(PAULI)
    spec = DInner(G, 4, PAULI, e, (e,) * 4, (z, z))
    assert any("not symmetric" in p for p in validate(spec))
    assert validate(DInner(G, 4, PAULI, e, (e,) * 4, (e, e))) == []


def test_quadratic_values_pauli():
    x, y, z = T4_elements(PAULI)
    qv = quadratic_values(PAULI)
    assert qv[e] == qv[x] == qv[y] == 0 and qv[z] == HALF


def test_normalize_B():
    spec = BSpec(G, 2, e, (e, e, a, b, c), 5)
    assert normalize_B(spec) == spec
    assert normalize_B(normalize_B(spec)) == normalize_B(spec)
    Z4 = FinAbGroup([4])
    raw = BSpec(Z4, 2, (2,), ((1,), (1,), (1,), (0,), (2,)), 3)
    assert validate(raw) == []
    norm = normalize_B(raw)
    assert norm.g0 == (0,) and validate(norm) == []
    assert Z4.sum(norm.xi[:3]) == (0,)


def test_distinguished_element():
    Z2 = FinAbGroup([2])
    spec = DOuter(Z2, 3, BrauerClass.trivial(Z2), (0,), ((0,),) * 5 + ((1,),), ((0,),) * 6, (1,))
    assert distinguished_element(spec) == (1,)
    assert validate(spec) == []
    inner = DInner(G, 3, BrauerClass.trivial(G), e, (e, e, e, a, b, c), (e,) * 6)
    assert distinguished_element(inner) == e and validate(inner) == []
    G4 = FinAbGroup([2, 2, 2, 2])
    big = BrauerClass.from_pairs(G4, G4.gens(), {(0, 1): HALF, (2, 3): HALF})
    z4 = (0,) * 4
    spec16 = DInner(G4, 4, big, z4, (z4, z4), ())
    assert distinguished_element(spec16) == z4 and validate(spec16) == []


def test_outer_with_e_rejected():
    inner = DOuter(G, 3, BrauerClass.trivial(G), e, (e, e, e, a, b, c), (e,) * 6, a)
    assert any("outer grading needs h != e" in p for p in validate(inner))


def test_is_inner():
    assert is_inner(BSpec(G, 2, e, (e, e, a, b, c), 5))
    Z2 = FinAbGroup([2])
    outer = DOuter(Z2, 3, BrauerClass.trivial(Z2), (0,), ((0,),) * 5 + ((1,),), ((0,),) * 6, (1,))
    assert not is_inner(outer)
    ao = AOuter(Z2, 3, (1,), (1,), (), (), (0,), ((0,),) * 4, ())
    assert validate(ao) == [] and not is_inner(ao)


def test_weight_orbits():
    spec = BSpec(G, 2, e, (e, e, a, b, c), 5)
    assert weight_orbit(spec, (3, 1)) == (((3, 1),), Subgroup.trivial(G))
    G2 = FinAbGroup([2])
    ao = AOuter(G2, 3, (1,), (1,), (), (), (0,), ((0,),) * 4, ())
    orbit, H = weight_orbit(ao, (1, 0, 0))
    assert orbit == ((0, 0, 1), (1, 0, 0)) and H == Subgroup(G2, [(1,)])
    do = DOuter(G2, 3, BrauerClass.trivial(G2), (0,), ((0,),) * 5 + ((1,),), ((0,),) * 6, (1,))
    assert weight_orbit(do, (0, 1, 1)) == (((0, 1, 1),), Subgroup.trivial(G2))


def test_weight_checks():
    spec = CSpec(G, 2, PAULI)
    with pytest.raises(ValueError):
        weight_orbit(spec, (1,))
    with pytest.raises(ValueError):
        weight_orbit(spec, (-1, 0))


def test_weights_up_to():
    ws = weights_up_to(3, 2)
    assert len(ws) == 10 and ws == sorted(ws) and (0, 0, 0) in ws


def test_require_valid_raises():
    with pytest.raises(ValueError, match="invalid grading spec"):
        require_valid(AInner(G, 2, PAULI, (e,)))
