from hypothesis import given, settings, strategies as st

from gradmod.abelian import FinAbGroup, Subgroup, quotient
from gradmod.bichar import (brauer_inv, brauer_mul, brauer_pushforward, pair_from_commutation_factor,
                            pushforward_explicit)
from gradmod.classify import count_graded_simples, orbit_representatives, stabilizer_group
from gradmod.corpus import random_A_inner, random_B, random_C, random_class, random_D_inner
from gradmod.gradings import weights_up_to
from gradmod.invariants import brauer_invariant

ORDERS = [[2], [4], [2, 2], [2, 4], [3, 3], [4, 4], [2, 2, 2], [6, 6], [2, 2, 3]]
SETTINGS = settings(max_examples=40, deadline=None)

groups = st.sampled_from(ORDERS).map(FinAbGroup)


@st.composite
def group_with_elements(draw, n=3):
    G = draw(groups)
    elems = [tuple(draw(st.integers(0, m - 1)) for m in G.orders) for _ in range(n)]
    return G, elems


@st.composite
def group_with_classes(draw, n=3):
    G = draw(groups)
    rng = draw(st.randoms(use_true_random=False))
    return G, [random_class(G, rng) for _ in range(n)]


@SETTINGS
@given(group_with_elements())
def test_group_laws(data):
    G, (x, y, z) = data
    assert G.add(G.add(x, y), z) == G.add(x, G.add(y, z))
    assert G.add(x, y) == G.add(y, x)
    assert G.add(x, G.neg(x)) == G.zero
    assert G.mul(G.element_order(x), x) == G.zero


@SETTINGS
@given(group_with_elements(2))
def test_quotient_is_surjective_hom(data):
    G, (x, y) = data
    Q, p = quotient(G, Subgroup(G, [x]))
    assert p(G.add(x, y)) == p(y)
    assert Q.order * Subgroup(G, [x]).order == G.order


@SETTINGS
@given(group_with_classes())
def test_brauer_group_laws(data):
    G, (a, b, c) = data
    assert brauer_mul(brauer_mul(a, b), c) == brauer_mul(a, brauer_mul(b, c))
    assert brauer_mul(a, b) == brauer_mul(b, a)
    assert brauer_mul(a, brauer_inv(a)).is_trivial()


@SETTINGS
@given(group_with_classes(1))
def test_factor_is_alternating_and_round_trips(data):
    G, (a,) = data
    f = a.factor
    for x in G.elements():
        assert f(x, x) == 0
    assert pair_from_commutation_factor(f) == a


@SETTINGS
@given(group_with_classes(2), st.data())
def test_pushforward_is_a_hom(data, more):
    G, (a, b) = data
    h = more.draw(st.sampled_from(sorted(G.elements())))
    _, p = quotient(G, Subgroup(G, [h]))
    push = brauer_pushforward(p, brauer_mul(a, b))
    assert push == brauer_mul(brauer_pushforward(p, a), brauer_pushforward(p, b))
    assert brauer_pushforward(p, a) == pushforward_explicit(p, a)


SPEC_MAKERS = [
    (lambda rng: random_A_inner(FinAbGroup([2, 2]), rng.choice([1, 3]), rng)),
    (lambda rng: random_C(FinAbGroup([2, 2]), 2, rng)),
    (lambda rng: random_B(FinAbGroup([2, 2]), 2, rng)),
    (lambda rng: random_D_inner(FinAbGroup([2, 2]), 4, rng)),
]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(SPEC_MAKERS), st.randoms(use_true_random=False))
def test_classification_count(make, rng):
    spec = make(rng)
    n, labels = count_graded_simples(spec, 2)
    G = spec.group
    assert n == sum(G.order // stabilizer_group(spec, lam).order
                    for lam in orbit_representatives(spec, 2))
    assert len(set(labels)) == n


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(SPEC_MAKERS), st.randoms(use_true_random=False))
def test_schur_index_is_degree(make, rng):
    spec = make(rng)
    for lam in weights_up_to(spec.rank, 2):
        rep = brauer_invariant(spec, lam)
        assert rep.schur_index ** 2 == rep.brauer.support.order
        assert rep.H_lambda.elements <= stabilizer_group(spec, lam).elements
