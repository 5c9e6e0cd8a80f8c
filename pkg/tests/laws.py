"""Shared helpers for the structural identities between computed classes."""
from gradmod.abelian import GroupHom
from gradmod.bichar import CommutationFactor, brauer_pushforward
from gradmod.gradings import AInner, AOuter, BSpec, CSpec, DInner, DOuter, weights_up_to
from gradmod.invariants import brauer_invariant, fundamental


def push(rep, target):
    """Factor of rep.brauer pushed to the quotient carried by ``target``."""
    Q1, p1 = rep.quotient_group, rep.projection
    Q, p = target.quotient_group, target.projection
    f = GroupHom(Q1, Q, [p(p1.lift(e)) for e in Q1.gens()])
    return brauer_pushforward(f, rep.brauer).factor


def zero(group):
    return CommutationFactor(group, [[0] * group.rank for _ in range(group.rank)])


def add(lam, mu):
    return tuple(a + b for a, b in zip(lam, mu))


def dual_weight(spec, lam):
    """Highest weight of the dual module."""
    r = spec.rank
    if isinstance(spec, (AInner, AOuter)):
        return tuple(reversed(lam))
    if isinstance(spec, (DInner, DOuter)) and r % 2:
        return lam[:-2] + (lam[-1], lam[-2])
    return tuple(lam)


def product_cases(spec, bound):
    """(lam1, lam2) with lam1 + lam2 of weight sum <= bound and H_lam1 inside H_mu."""
    weights = weights_up_to(spec.rank, bound)
    for lam1 in weights:
        for lam2 in weights:
            if sum(lam1) + sum(lam2) > bound or not any(lam1) or not any(lam2):
                continue
            mu = add(lam1, lam2)
            r1 = brauer_invariant(spec, lam1)
            rm = brauer_invariant(spec, mu)
            if r1.H_lambda <= rm.H_lambda:
                yield lam1, lam2


def product_law_holds(spec, lam1, lam2):
    mu = add(lam1, lam2)
    rm = brauer_invariant(spec, mu)
    a = push(brauer_invariant(spec, lam1), rm)
    b = push(brauer_invariant(spec, lam2), rm)
    return rm.brauer.factor == a + b


def dual_pairs(spec, bound):
    """lam with {lam, lam*} an orbit of size two and lam + lam* within the bound."""
    for lam in weights_up_to(spec.rank, bound):
        rep = brauer_invariant(spec, lam)
        other = dual_weight(spec, lam)
        if len(rep.orbit) == 2 and other in rep.orbit and other != lam and 2 * sum(lam) <= bound:
            yield lam, other


def wedge_indices(spec):
    """i with Br(omega_i) = Br(omega_1)^i claimed (in the quotient by H_omega_1)."""
    r = spec.rank
    if isinstance(spec, (AInner, AOuter, CSpec)):
        return range(1, r + 1)
    if isinstance(spec, BSpec):
        return range(1, r)
    if isinstance(spec, (DInner, DOuter)):
        return range(1, r - 1)
    return range(0)


def wedge_law_holds(spec, i):
    w1 = brauer_invariant(spec, fundamental(spec, 1))
    wi = brauer_invariant(spec, fundamental(spec, i))
    return push(wi, w1) == w1.brauer.factor.scale(i)


def half_spin_relations(spec):
    """The relations between Br(omega_{r-1}), Br(omega_r) and Br(omega_1), as booleans."""
    r = spec.rank
    s1 = brauer_invariant(spec, fundamental(spec, r - 1))
    s2 = brauer_invariant(spec, fundamental(spec, r))
    g1 = s1.brauer.factor
    g2 = push(s2, s1)
    b = push(brauer_invariant(spec, fundamental(spec, 1)), s1)
    z = zero(s1.quotient_group)
    if r % 2:
        return {"product": g1 + g2 == z, "square-": g1.scale(2) == b, "square+": g2.scale(2) == b}
    return {"product": g1 + g2 == b, "square-": g1.scale(2) == z, "square+": g2.scale(2) == z}


def half_spin_equality_holds(spec):
    r = spec.rank
    s1 = brauer_invariant(spec, fundamental(spec, r - 1))
    s2 = brauer_invariant(spec, fundamental(spec, r))
    b = push(brauer_invariant(spec, fundamental(spec, 1)), s1)
    return (s1.brauer.factor == push(s2, s1)) == b.is_trivial()
