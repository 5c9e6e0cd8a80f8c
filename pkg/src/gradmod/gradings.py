"""Parameters of G-gradings on the classical simple Lie algebras.

Each series/variant is a frozen dataclass.  Group elements are tuples of
residues in ``group``; multisets of degrees are stored as explicit
representatives, and every relation is checked on the nose by
:func:`validate`.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .abelian import FinAbGroup, Subgroup, quotient, qz
from .bichar import BrauerClass, quadratic_refinement, symplectic_decomposition

SERIES = ("A", "B", "C", "D")


def _fmt(x):
    return "[" + ",".join(str(c) for c in x) + "]"


@dataclass(frozen=True)
class AInner:
    group: FinAbGroup
    rank: int
    cls: BrauerClass
    xi: tuple

    series = "A"
    variant = "inner"

    @property
    def k(self):
        return len(self.xi)


@dataclass(frozen=True)
class AOuter:
    """Outer grading on sl_{r+1} with distinguished element h.

    Quotient-level data over Gbar = G/<h> is given through lifts in G:
    ``tbar`` lifts a basis of the support of the division algebra, ``beta``
    is its bicharacter matrix on that basis, ``t`` lifts t_1..t_q.
    """
    group: FinAbGroup
    rank: int
    h: tuple
    chi: tuple
    tbar: tuple
    beta: tuple
    g0: tuple
    xi: tuple
    t: tuple
    mu0: Fraction = None

    series = "A"
    variant = "outer"

    @property
    def k(self):
        return len(self.xi)

    @property
    def q(self):
        return len(self.t)

    @cached_property
    def _quot(self):
        return quotient(self.group, Subgroup(self.group, [self.h]))

    @property
    def quotient_group(self):
        return self._quot[0]

    @property
    def projection(self):
        return self._quot[1]

    @cached_property
    def cls_bar(self):
        p = self.projection
        return BrauerClass.from_basis(self.quotient_group, [p(b) for b in self.tbar], self.beta)

    @property
    def g0_bar(self):
        return self.projection(self.g0)

    @property
    def xi_bar(self):
        return tuple(self.projection(g) for g in self.xi)

    @property
    def t_bar(self):
        return tuple(self.projection(t) for t in self.t)


@dataclass(frozen=True)
class BSpec:
    group: FinAbGroup
    rank: int
    g0: tuple
    xi: tuple
    q: int

    series = "B"
    variant = "inner"


@dataclass(frozen=True)
class CSpec:
    group: FinAbGroup
    rank: int
    cls: BrauerClass

    series = "C"
    variant = "inner"


@dataclass(frozen=True)
class DInner:
    group: FinAbGroup
    rank: int
    cls: BrauerClass
    g0: tuple
    xi: tuple
    t: tuple
    orientation: str = "+"

    series = "D"
    variant = "inner"

    @property
    def k(self):
        return len(self.xi)

    @property
    def q(self):
        return len(self.t)


@dataclass(frozen=True)
class DOuter:
    group: FinAbGroup
    rank: int
    cls: BrauerClass
    g0: tuple
    xi: tuple
    t: tuple
    h: tuple

    series = "D"
    variant = "outer"

    @property
    def k(self):
        return len(self.xi)

    @property
    def q(self):
        return len(self.t)


GradingSpec = (AInner, AOuter, BSpec, CSpec, DInner, DOuter)


# ---------------------------------------------------------------------------
# standard realization data for elementary 2-groups

def symplectic_basis(cls):
    """Hyperbolic pairs (a_j, b_j) of the standard realization of cls."""
    if cls.support.is_trivial():
        return []
    return symplectic_decomposition(cls.support, cls.beta)


def quadratic_values(cls):
    """t -> beta(t) in {0, 1/2} for the standard realization (T elementary 2)."""
    T = cls.support
    if T.is_trivial():
        return {T.ambient.zero: Fraction(0)}
    return quadratic_refinement(T, cls.beta, symplectic_basis(cls))


def T4_elements(cls):
    """(a, b, c) for |T| = 4: a, b symmetric with a before b, c = a + b."""
    (a, b), = symplectic_basis(cls)
    G = cls.ambient
    if b < a:
        a, b = b, a
    return a, b, G.add(a, b)


# ---------------------------------------------------------------------------
# validation

def _check_elements(G, named, out):
    ok = True
    for name, x in named:
        if not (isinstance(x, tuple) and len(x) == G.rank
                and all(isinstance(c, int) and 0 <= c < n for c, n in zip(x, G.orders))):
            out.append(f"{name} = {x!r} is not an element of Z{list(G.orders)}")
            ok = False
    return ok


def _check_chain(G, g0, xi, t, q, out, label="g0"):
    """2 g_i + t_i = -g0 (i <= q) and g_{q+2j-1} + g_{q+2j} = -g0."""
    target = G.neg(g0)
    k = len(xi)
    for i in range(q):
        lhs = G.mul(2, xi[i]) if t is None else G.add(G.mul(2, xi[i]), t[i])
        if lhs != target:
            eq = f"2*g_{i + 1}" + ("" if t is None else f" + t_{i + 1}")
            out.append(f"relation {eq} = -{label} fails: {_fmt(lhs)} != {_fmt(target)}")
    if (k - q) % 2:
        out.append(f"k - q = {k - q} must be even (hyperbolic pairs)")
        return
    for j in range(q, k, 2):
        lhs = G.add(xi[j], xi[j + 1])
        if lhs != target:
            out.append(f"relation g_{j + 1} + g_{j + 2} = -{label} fails: {_fmt(lhs)} != {_fmt(target)}")


def _validate_class(cls, G, out):
    if not isinstance(cls, BrauerClass):
        out.append("cls is not a BrauerClass")
        return False
    if cls.ambient != G:
        out.append("Brauer class lives on a different group")
        return False
    return True


def validate(spec):
    """List of violations; empty means the spec is valid."""
    out = []
    G = getattr(spec, "group", None)
    if not isinstance(G, FinAbGroup):
        return ["group is not a FinAbGroup"]
    r = spec.rank
    if not isinstance(r, int) or r < 1:
        return [f"rank must be a positive integer, got {r!r}"]
    if isinstance(spec, AInner):
        _validate_A_inner(spec, G, r, out)
    elif isinstance(spec, AOuter):
        _validate_A_outer(spec, G, r, out)
    elif isinstance(spec, BSpec):
        _validate_B(spec, G, r, out)
    elif isinstance(spec, CSpec):
        _validate_C(spec, G, r, out)
    elif isinstance(spec, (DInner, DOuter)):
        _validate_D(spec, G, r, out)
    else:
        out.append(f"unknown spec type {type(spec).__name__}")
    return out


def _validate_A_inner(spec, G, r, out):
    if not _validate_class(spec.cls, G, out):
        return
    if not _check_elements(G, [(f"g_{i + 1}", g) for i, g in enumerate(spec.xi)], out):
        return
    ell = spec.cls.schur_index
    if len(spec.xi) * ell != r + 1:
        out.append(f"k * sqrt|T| = {len(spec.xi)} * {ell} != r + 1 = {r + 1}")


def _validate_A_outer(spec, G, r, out):
    if r < 2:
        out.append("outer gradings of series A need r >= 2")
    named = [("h", spec.h), ("chi", spec.chi), ("g0", spec.g0)]
    named += [(f"g_{i + 1}", g) for i, g in enumerate(spec.xi)]
    named += [(f"t_{i + 1}", t) for i, t in enumerate(spec.t)]
    named += [(f"tbar basis {i + 1}", b) for i, b in enumerate(spec.tbar)]
    if not _check_elements(G, named, out):
        return
    if G.element_order(spec.h) != 2:
        out.append(f"h = {_fmt(spec.h)} must have order 2")
        return
    if G.pair(spec.chi, spec.h) != Fraction(1, 2):
        out.append("chi(h) must be -1 (1/2 in Q/Z)")
    if spec.q > len(spec.xi):
        out.append("q exceeds the number of degrees")
        return
    nb = len(spec.tbar)
    beta = spec.beta
    if len(beta) != nb or any(len(row) != nb for row in beta):
        out.append(f"beta must be a {nb}x{nb} matrix")
        return
    try:
        cls = spec.cls_bar
    except ValueError as exc:
        out.append(f"quotient Brauer class invalid: {exc}")
        return
    Gb = spec.quotient_group
    Tb = cls.support
    if not Tb.is_elementary_2():
        out.append("support of the quotient division algebra must be an elementary 2-group")
        return
    p = spec.projection
    for i, t in enumerate(spec.t):
        if p(t) not in Tb:
            out.append(f"t_{i + 1} does not project into the support")
    if out:
        return
    _check_chain(Gb, spec.g0_bar, spec.xi_bar, spec.t_bar, spec.q, out, label="g0bar")
    ell = cls.schur_index
    if len(spec.xi) * ell != r + 1:
        out.append(f"k * sqrt|Tbar| = {len(spec.xi)} * {ell} != r + 1 = {r + 1}")
    for b in spec.tbar:
        if G.pair(spec.chi, G.mul(2, b)) != 0:
            out.append("chi^2 must be trivial on the preimage of the support")
            break
    if spec.q:
        qv = quadratic_values(cls)
        vals = {qz(2 * G.pair(spec.chi, g) - qv[tb]) for g, tb in zip(spec.xi, spec.t_bar)}
        if len(vals) > 1:
            out.append("chi^2(g_i) * beta(t_i) must not depend on i <= q")
    if spec.mu0 is not None and qz(2 * spec.mu0) != qz(-2 * G.pair(spec.chi, spec.g0)):
        out.append("mu0^2 must equal chi^2(g0)^(-1)")


def _validate_B(spec, G, r, out):
    if r < 2:
        out.append("series B needs r >= 2")
    n = 2 * r + 1
    if not _check_elements(G, [("g0", spec.g0)] + [(f"g_{i + 1}", g) for i, g in enumerate(spec.xi)], out):
        return
    if len(spec.xi) != n:
        out.append(f"B needs 2r+1 = {n} degrees, got {len(spec.xi)}")
        return
    q = spec.q
    if not isinstance(q, int) or not 0 < q <= n or q % 2 == 0:
        out.append(f"q = {q!r} must be odd with 1 <= q <= {n}")
        return
    _check_chain(G, spec.g0, spec.xi, None, q, out)


def _validate_C(spec, G, r, out):
    if r < 2:
        out.append("series C needs r >= 2")
    if not _validate_class(spec.cls, G, out):
        return
    if not spec.cls.support.is_elementary_2():
        out.append("support T must be an elementary 2-group")
    if (2 * r) % spec.cls.schur_index:
        out.append(f"sqrt|T| = {spec.cls.schur_index} must divide 2r = {2 * r}")


def _validate_D(spec, G, r, out):
    if r < 3:
        out.append("series D needs r >= 3")
    if not _validate_class(spec.cls, G, out):
        return
    named = [("g0", spec.g0)] + [(f"g_{i + 1}", g) for i, g in enumerate(spec.xi)]
    named += [(f"t_{i + 1}", t) for i, t in enumerate(spec.t)]
    if isinstance(spec, DOuter):
        named.append(("h", spec.h))
    if not _check_elements(G, named, out):
        return
    cls = spec.cls
    T = cls.support
    if not T.is_elementary_2():
        out.append("support T must be an elementary 2-group")
        return
    ell = cls.schur_index
    k = len(spec.xi)
    if k * ell != 2 * r:
        out.append(f"k * sqrt|T| = {k} * {ell} != 2r = {2 * r}")
        return
    q = spec.q
    if q > k:
        out.append("q exceeds the number of degrees")
        return
    qv = quadratic_values(cls)
    for i, t in enumerate(spec.t):
        if t not in T:
            out.append(f"t_{i + 1} = {_fmt(t)} is not in T")
        elif qv[t] != 0:
            out.append(f"t_{i + 1} = {_fmt(t)} is not symmetric (X_t must be symmetric)")
    if out:
        return
    _check_chain(G, spec.g0, spec.xi, spec.t, q, out)
    if T.order == 4 and (q - r) % 2:
        out.append("|T| = 4 needs q and r of the same parity")
    if T.order == 16 and (q - r // 2) % 2:
        out.append("|T| = 16 needs q and r/2 of the same parity")
    if out:
        return
    h = distinguished_element(spec)
    if G.element_order(h) > 2:
        out.append(f"distinguished element {_fmt(h)} has order > 2")
    if isinstance(spec, DInner):
        if any(h):
            out.append(f"distinguished element is {_fmt(h)}; an inner grading needs h = e")
        if spec.orientation not in ("+", "-"):
            out.append("orientation must be '+' or '-'")
    else:
        if not any(h):
            out.append("distinguished element is e; an outer grading needs h != e")
        elif T.order not in (1, 4):
            out.append("outer D gradings need |T| in {1, 4}")
        elif spec.h != h:
            out.append(f"declared h = {_fmt(spec.h)} differs from the distinguished element {_fmt(h)}")


def require_valid(spec):
    problems = validate(spec)
    if problems:
        raise ValueError("invalid grading spec: " + "; ".join(problems))


# ---------------------------------------------------------------------------
# derived data

def normalize_B(spec):
    """Shift a B spec so that g0 = e and g_1 + ... + g_q = e."""
    require_valid(spec)
    G = spec.group
    c = G.neg(spec.xi[0]) if any(spec.g0) else G.zero
    xi = [G.add(g, c) for g in spec.xi]
    P = G.sum(xi[:spec.q])
    xi = tuple(G.add(g, P) for g in xi)
    out = BSpec(G, spec.rank, G.zero, xi, spec.q)
    assert not validate(out), validate(out)
    assert not any(G.sum(xi[:spec.q]))
    return out


def distinguished_element(spec):
    G = spec.group
    T = spec.cls.support
    r = spec.rank
    if T.order == 1:
        return G.add(G.mul(r, spec.g0), G.sum(spec.xi))
    if T.order == 4:
        tsum = G.sum(spec.t)
        if r % 2:
            tsum = G.add(tsum, T4_elements(spec.cls)[2])
        return tsum
    return G.zero


def is_inner(spec):
    require_valid(spec)
    if isinstance(spec, (AOuter, DOuter)):
        return False
    return True


def check_weight(spec, lam):
    lam = tuple(lam)
    if len(lam) != spec.rank:
        raise ValueError(f"weight has {len(lam)} entries, rank is {spec.rank}")
    if any((not isinstance(m, int)) or m < 0 for m in lam):
        raise ValueError("weight entries must be nonnegative integers")
    return lam


def diagram_image(spec, lam):
    """Image of lam under the outer part of the character action (or lam)."""
    if isinstance(spec, AOuter):
        return tuple(reversed(lam))
    if isinstance(spec, DOuter):
        return lam[:-2] + (lam[-1], lam[-2])
    return lam


def weight_orbit(spec, lam):
    """(orbit as a sorted tuple of weights, H_lambda)."""
    lam = check_weight(spec, lam)
    G = spec.group
    other = diagram_image(spec, lam)
    if other == lam:
        return (lam,), Subgroup.trivial(G)
    return tuple(sorted({lam, other})), Subgroup(G, [spec.h])


def weights_up_to(rank, bound):
    """All weights of the given rank with entry sum <= bound, lexicographic."""
    out = []

    def rec(prefix, left):
        if len(prefix) == rank:
            out.append(tuple(prefix))
            return
        for m in range(left + 1):
            rec(prefix + [m], left - m)

    rec([], bound)
    return sorted(out)
