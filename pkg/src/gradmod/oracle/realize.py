"""Explicit realizations of graded modules and the oracles built on them.

Every spec is turned into concrete operators: the u operators of the
character group on the natural module, the form Phi they preserve up to a
scalar, and (for orthogonal series) spin elements in an exact Clifford
algebra.  Commutation factors are then read off by matrix arithmetic and
compared with the closed formulas of :mod:`gradmod.invariants`.
"""
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
import math

from ..abelian import qz
from ..bichar import BrauerClass, CommutationFactor
from ..gradings import AInner, AOuter, BSpec, CSpec, DInner, DOuter, require_valid
from .clifford import (
    central_element,
    commutator_value,
    half_spin_idempotents,
    project_scalar,
    spin_element_for,
)
from .cyclo import CycloField, sqrt_rational
from .monomial import MonomialMatrix, Realization, block_diag, u_operator

DEFAULT_MAX_DIM = 2 ** 10


class OracleSkipped(Exception):
    """The requested Clifford algebra exceeds the dimension cap."""


def oracle_field(G):
    e = G.exponent
    return CycloField(math.lcm(8, e, 2 * e))


# -- forms ------------------------------------------------------------------

def hyperbolic_block(size, mu=0):
    """[[0, I], [mu I, 0]] with blocks of the given size."""
    perm = [size + j for j in range(size)] + list(range(size))
    phases = [mu] * size + [0] * size
    return MonomialMatrix(perm, phases)


def congruence_ok(u, Phi, multiplier):
    """t(u) Phi u == exp(2 pi i multiplier) Phi."""
    return u.transpose() @ Phi @ u == Phi.times_phase(multiplier)


class OrthonormalFrame:
    """Columns f_i with t(f_i) Phi f_j = delta_ij for a symmetric +-1 monomial Phi."""

    def __init__(self, Phi, field):
        n = Phi.n
        F = field
        self.n = n
        self.field = F
        if Phi.transpose() != Phi or any(p not in (0, Fraction(1, 2)) for p in Phi.phases):
            raise ValueError("form must be a symmetric monomial matrix with entries +-1")
        zero = F.zero()
        P = [[zero] * n for _ in range(n)]
        Pinv = [[zero] * n for _ in range(n)]
        half = F.rational(Fraction(1, 2))
        for j in range(n):
            k = Phi.perm[j]
            sign = -1 if Phi.phases[j] else 1
            if k == j:
                c = sqrt_rational(sign, F)
                P[j][j] = c
                Pinv[j][j] = c.inverse()
            elif j < k:
                c1 = sqrt_rational(Fraction(1, 2 * sign), F)
                c2 = sqrt_rational(Fraction(-1, 2 * sign), F)
                P[j][j], P[k][j] = c1, c1
                P[j][k], P[k][k] = c2, -c2
                i1, i2 = half / c1, half / c2
                Pinv[j][j], Pinv[j][k] = i1, i1
                Pinv[k][j], Pinv[k][k] = i2, -i2
        self.P = P
        self.Pinv = Pinv

    def conjugate(self, u, scale_phase=0):
        """Pinv (c u) P as a dense matrix, u monomial, c = exp(2 pi i scale_phase)."""
        F, n = self.field, self.n
        roots = [F.root_of_unity(qz(p + scale_phase)) for p in u.phases]
        uP = [[F.zero()] * n for _ in range(n)]
        for k in range(n):
            i = u.perm[k]
            uP[i] = [roots[k] * x for x in self.P[k]]
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = F.zero()
                for k in range(n):
                    a = self.Pinv[i][k]
                    if a.is_zero():
                        continue
                    b = uP[k][j]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return out


# -- natural modules ----------------------------------------------------------

class NaturalModule:
    """V = W (x) N with u_chi = diag(chi(g_i)) (x) X_t and block form Phi.

    ``t`` lists t_1..t_q for the diagonal blocks X_{t_i}; the remaining
    entries of ``xi`` come in hyperbolic pairs.  ``mus`` optionally gives the
    phases of the lower-left blocks of the hyperbolic pairs.
    """

    def __init__(self, group, cls, g0, xi, t, mus=None):
        self.group = group
        self.cls = cls
        self.g0 = tuple(g0)
        self.xi = [tuple(g) for g in xi]
        self.t = [tuple(x) for x in t]
        self.R = Realization(cls)
        ell = self.R.degree
        q = len(self.t)
        s = (len(self.xi) - q) // 2
        mus = list(mus) if mus is not None else [0] * s
        blocks = [self.R.X(ti) for ti in self.t]
        blocks += [hyperbolic_block(ell, mus[j]) for j in range(s)]
        self.Phi = block_diag(blocks) if blocks else MonomialMatrix.identity(0)
        self.dim = len(self.xi) * ell

    def u(self, chi):
        return u_operator(self.R, self.group, self.xi, chi)

    def multiplier(self, chi):
        return qz(-self.group.pair(chi, self.g0))

    def congruence_ok(self, chi):
        return congruence_ok(self.u(chi), self.Phi, self.multiplier(chi))


def natural_module(spec):
    if isinstance(spec, (DInner, DOuter)):
        return NaturalModule(spec.group, spec.cls, spec.g0, spec.xi, spec.t)
    if isinstance(spec, BSpec):
        G = spec.group
        return NaturalModule(G, BrauerClass.trivial(G), spec.g0, spec.xi, [G.zero] * spec.q)
    if isinstance(spec, AOuter):
        Gb = spec.quotient_group
        chi2 = lambda g: qz(2 * spec.group.pair(spec.chi, g))
        mu0 = spec.mu0 if spec.mu0 is not None else qz(-spec.group.pair(spec.chi, spec.g0))
        q = spec.q
        mus = [qz(mu0 - chi2(spec.xi[q + 2 * j])) for j in range((spec.k - q) // 2)]
        return NaturalModule(Gb, spec.cls_bar, spec.g0_bar, spec.xi_bar, spec.t_bar, mus)
    raise TypeError(f"no form-preserving natural module for series {spec.series}")


def form_congruence_check(spec):
    """Check t(u_psi) Phi u_psi = psi(g0)^-1 Phi for every generator psi.

    For outer A the characters are those of the quotient G/<h>.
    """
    require_valid(spec)
    V = natural_module(spec)
    return all(V.congruence_ok(chi) for chi in V.group.gens())


# -- A and C: exterior powers -------------------------------------------------

def natural_factor(spec):
    """Commutation factor of the u operators on the natural module (A inner, C)."""
    from .monomial import commutation_factor_bruteforce

    if isinstance(spec, AInner):
        return commutation_factor_bruteforce(spec.cls, spec.xi)
    if isinstance(spec, CSpec):
        return commutation_factor_bruteforce(spec.cls)
    raise TypeError("natural_factor needs an inner A or a C spec")


def wedge_factor(spec, i):
    """Commutation factor on the i-th exterior power of the natural module."""
    from .monomial import wedge_commutation_factor

    G = spec.group
    if isinstance(spec, AInner):
        return wedge_commutation_factor(spec.cls, spec.xi, i)
    if isinstance(spec, CSpec):
        ell = Realization(spec.cls).degree
        k = 2 * spec.rank // ell
        return wedge_commutation_factor(spec.cls, [G.zero] * k, i)
    raise TypeError("wedge_factor needs an inner A or a C spec")


# -- spin modules -------------------------------------------------------------

@dataclass
class SpinData:
    field: CycloField
    n: int
    spins: dict = dc_field(default_factory=dict)

    def commutator(self, chi1, chi2):
        return commutator_value(self.spins[chi1], self.spins[chi2])


def _check_cap(n, max_dim):
    if max_dim is not None and 2 ** n > max_dim:
        raise OracleSkipped(f"Clifford algebra of dimension 2^{n} exceeds the cap {max_dim}")


def _spin_data(V, chars, field, proper_fix=False):
    """Spin elements for chi(g0)^{1/2} u_chi, in an orthonormal frame.

    With ``proper_fix`` (odd dimension) an improper isometry is replaced by
    its negative, so every spin element is even.
    """
    frame = OrthonormalFrame(V.Phi, field)
    data = SpinData(field, V.dim)
    for chi in chars:
        if chi in data.spins:
            continue
        if not V.congruence_ok(chi):
            raise AssertionError(f"u_chi for {chi} is not a similitude of the form")
        half = Fraction(V.group.pair(chi, V.g0)) / 2
        u = V.u(chi)
        if proper_fix:
            det = qz(V.dim * half + u.det_phase())
            if det == Fraction(1, 2):
                half += Fraction(1, 2)
            elif det != 0:
                raise AssertionError("scaled isometry has determinant outside +-1")
        data.spins[chi] = spin_element_for(frame.conjugate(u, half), field)
    return data


def _factor_from_labels(G, data, value):
    gens = G.gens()
    return CommutationFactor(G, [[value(data.commutator(a, b)) for b in gens] for a in gens])


def b_oracle(spec, max_dim=DEFAULT_MAX_DIM):
    """gamma on the character group from spin elements in dimension 2r+1."""
    require_valid(spec)
    n = 2 * spec.rank + 1
    _check_cap(n, max_dim)
    G = spec.group
    F = oracle_field(G)
    V = natural_module(spec)
    data = _spin_data(V, G.gens(), F, proper_fix=True)

    def value(label):
        if label not in ("1", "-1"):
            raise AssertionError("spin commutator in odd dimension must be +-1")
        return Fraction(0) if label == "1" else Fraction(1, 2)

    return _factor_from_labels(G, data, value)


@dataclass
class HalfSpinResult:
    plus: CommutationFactor
    minus: CommutationFactor
    oriented: bool
    labels: dict

    def unordered(self):
        return frozenset([self.plus, self.minus])


def d_inner_oracle(spec, max_dim=DEFAULT_MAX_DIM, reference=None):
    """(gamma_+, gamma_-) read from half-spin projections of spin commutators.

    ``reference`` is (chi', chi'', value): the half-spin idempotent labelled +
    is the one on which [s_chi', s_chi''] acts by exp(2 pi i value).  Without
    a reference (or when that commutator is +-1) z = +e_[n] is used and the
    result is only meaningful as an unordered pair.
    """
    if not isinstance(spec, DInner):
        raise TypeError("d_inner_oracle needs an inner D spec")
    require_valid(spec)
    n = 2 * spec.rank
    _check_cap(n, max_dim)
    G = spec.group
    F = oracle_field(G)
    V = natural_module(spec)
    chars = list(G.gens())
    if reference is not None:
        chars += [tuple(reference[0]), tuple(reference[1])]
    data = _spin_data(V, chars, F)
    if any(s.parity() != 0 for s in data.spins.values()):
        raise AssertionError("inner grading produced an improper isometry")
    z_ref = central_element("z", n, F)
    oriented = False
    if reference is not None:
        label = data.commutator(tuple(reference[0]), tuple(reference[1]))
        if label in ("z", "-z"):
            c = central_element(label, n, F)
            for cand in (c, -c):
                eps_plus, _ = half_spin_idempotents(cand, spec.rank)
                if project_scalar(c, eps_plus) == qz(reference[2]):
                    z_ref = cand
                    oriented = True
                    break
    eps_plus, eps_minus = half_spin_idempotents(z_ref, spec.rank)
    plus = _factor_from_labels(G, data, lambda l: project_scalar(central_element(l, n, F), eps_plus))
    minus = _factor_from_labels(G, data, lambda l: project_scalar(central_element(l, n, F), eps_minus))
    gens = G.gens()
    labels = {(a, b): data.commutator(a, b) for a in gens for b in gens}
    return HalfSpinResult(plus, minus, oriented, labels)


@dataclass
class OuterSpinResult:
    cross: CommutationFactor  # Br(omega_{r-1} + omega_r) on the whole character group
    gamma0: CommutationFactor  # on the characters of G/<h>
    quotient_group: object
    projection: object


def d_outer_oracle(spec, max_dim=DEFAULT_MAX_DIM):
    """Cross factor on S+ (x) S- and gamma_0 on K, from spin commutators."""
    from ..invariants import D_outer_quotient

    if not isinstance(spec, DOuter):
        raise TypeError("d_outer_oracle needs an outer D spec")
    require_valid(spec)
    n = 2 * spec.rank
    _check_cap(n, max_dim)
    G = spec.group
    F = oracle_field(G)
    V = natural_module(spec)
    Gb, p = D_outer_quotient(spec)
    k_chars = [p.dual(psi) for psi in Gb.gens()]
    data = _spin_data(V, list(G.gens()) + k_chars, F)
    for chi, s in data.spins.items():
        odd = G.pair(chi, spec.h) != 0
        if s.parity() != int(odd):
            raise AssertionError("spin parity does not match the distinguished element")
    eps_plus, eps_minus = half_spin_idempotents(central_element("z", n, F), spec.rank)

    def cross_value(label):
        c = central_element(label, n, F)
        return qz(project_scalar(c, eps_plus) + project_scalar(c, eps_minus))

    cross = _factor_from_labels(G, data, cross_value)
    mats = []
    for a in k_chars:
        row = []
        for b in k_chars:
            label = data.commutator(a, b)
            if label not in ("1", "-1"):
                raise AssertionError("characters trivial on h gave a non-scalar commutator")
            row.append(Fraction(0) if label == "1" else Fraction(1, 2))
        mats.append(row)
    gamma0 = CommutationFactor(Gb, mats)
    return OuterSpinResult(cross, gamma0, Gb, p)


def half_spin_factors_oracle(spec, max_dim=DEFAULT_MAX_DIM, reference=None):
    """Dispatch to the spin oracle matching the spec's series and variant."""
    if isinstance(spec, BSpec):
        return b_oracle(spec, max_dim)
    if isinstance(spec, DInner):
        return d_inner_oracle(spec, max_dim, reference)
    if isinstance(spec, DOuter):
        return d_outer_oracle(spec, max_dim)
    raise TypeError(f"no spin oracle for series {spec.series} ({spec.variant})")
