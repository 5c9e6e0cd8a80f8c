"""Isomorphism classes of graded-simple modules.

A graded-simple module is determined by an orbit of dominant weights under
the character group and a shift g in G, where two shifts give isomorphic
modules exactly when they differ by an element of G_lambda, the preimage
in G of the support of Br(lambda) under G -> G/H_lambda.
"""
from dataclasses import dataclass

from .abelian import Subgroup
from .gradings import check_weight, require_valid, weight_orbit, weights_up_to
from .invariants import brauer_invariant


@dataclass(frozen=True)
class GradedSimpleLabel:
    representative: tuple  # least weight of the orbit
    orbit: tuple
    shift: tuple           # least element of the coset g + G_lambda
    G_lambda: tuple        # sorted elements of G_lambda

    def __str__(self):
        w = ",".join(str(m) for m in self.representative)
        g = ",".join(str(c) for c in self.shift)
        return f"W({w})[{g}]"


def stabilizer_group(spec, lam):
    """G_lambda: preimage of the support of Br(lambda) under G -> G/H_lambda."""
    rep = brauer_invariant(spec, lam)
    G = spec.group
    p = rep.projection
    supp = rep.support.elements
    return Subgroup(G, [g for g in G.elements() if p(g) in supp])


def graded_simple_label(spec, lam, g):
    require_valid(spec)
    lam = check_weight(spec, lam)
    G = spec.group
    g = G.elem(g)
    orbit, _ = weight_orbit(spec, lam)
    rep = orbit[0]
    Gl = stabilizer_group(spec, rep)
    shift = min(G.add(g, x) for x in Gl.elements)
    return GradedSimpleLabel(rep, orbit, shift, tuple(Gl.sorted_elements()))


def orbit_representatives(spec, bound):
    """Least representatives of the weight orbits with entry sum <= bound."""
    seen = set()
    reps = []
    for lam in weights_up_to(spec.rank, bound):
        orbit, _ = weight_orbit(spec, lam)
        if orbit in seen:
            continue
        seen.add(orbit)
        reps.append(orbit[0])
    return reps


def enumerate_graded_simples(spec, bound):
    """Every label with weight sum <= bound, in deterministic order, without repeats."""
    require_valid(spec)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    G = spec.group
    out = []
    for rep in orbit_representatives(spec, bound):
        Gl = stabilizer_group(spec, rep)
        orbit, _ = weight_orbit(spec, rep)
        cosets = sorted({min(G.add(g, x) for x in Gl.elements) for g in G.elements()})
        key = tuple(Gl.sorted_elements())
        out.extend(GradedSimpleLabel(rep, orbit, c, key) for c in cosets)
    return out


def count_graded_simples(spec, bound):
    """(count, labels); count equals the sum over orbits of |G| / |G_lambda|."""
    labels = enumerate_graded_simples(spec, bound)
    return len(labels), labels


def module_admits_grading(spec, multiplicities):
    """Whether the module sum of V_lambda^{m_lambda} carries a compatible grading.

    True iff the multiplicities are constant along every orbit and divisible
    by the Schur index of that orbit.
    """
    require_valid(spec)
    mult = {check_weight(spec, lam): int(m) for lam, m in multiplicities.items()}
    if any(m < 0 for m in mult.values()):
        raise ValueError("multiplicities must be nonnegative")
    done = set()
    for lam, m in mult.items():
        if m == 0:
            continue
        orbit, _ = weight_orbit(spec, lam)
        if orbit in done:
            continue
        done.add(orbit)
        if any(mult.get(mu, 0) != m for mu in orbit):
            return False
        if m % brauer_invariant(spec, orbit[0]).schur_index:
            return False
    return True


__all__ = [
    "GradedSimpleLabel",
    "graded_simple_label",
    "stabilizer_group",
    "orbit_representatives",
    "enumerate_graded_simples",
    "count_graded_simples",
    "module_admits_grading",
]
