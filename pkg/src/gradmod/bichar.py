"""Bicharacters, Brauer classes and commutation factors.

A Brauer class of G-graded matrix algebras is stored as a pair (T, beta):
a subgroup T of G and a nondegenerate alternating bicharacter beta on T.
Equivalently it is described by its commutation factor, an alternating
bicharacter on the character group.  Products are formed on factors.
"""
from fractions import Fraction
from functools import cached_property
import math

from .abelian import Subgroup, perp, qz


class Bicharacter:
    """beta(s, t) = sum_ij s_i M[i][j] t_j in Q/Z on a FinAbGroup."""

    __slots__ = ("group", "matrix", "__dict__")

    def __init__(self, group, matrix):
        k = group.rank
        M = tuple(tuple(qz(x) for x in row) for row in matrix)
        if len(M) != k or any(len(row) != k for row in M):
            raise ValueError(f"bicharacter matrix must be {k}x{k}")
        n = group.orders
        for i in range(k):
            for j in range(k):
                if qz(n[i] * M[i][j]) or qz(n[j] * M[i][j]):
                    raise ValueError(f"entry ({i},{j}) = {M[i][j]} is not compatible with orders {n[i]}, {n[j]}")
        self.group = group
        self.matrix = M

    @classmethod
    def zero(cls, group):
        return cls(group, [[0] * group.rank for _ in range(group.rank)])

    @classmethod
    def from_function(cls, group, f):
        gens = group.gens()
        return cls(group, [[f(a, b) for b in gens] for a in gens])

    def __call__(self, s, t):
        M = self.matrix
        return qz(sum(s[i] * M[i][j] * t[j]
                      for i in range(len(s)) if s[i]
                      for j in range(len(t)) if t[j]))

    def __repr__(self):
        rows = [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.matrix]
        return f"Bicharacter({list(self.group.orders)}, {rows})"

    def __eq__(self, other):
        return (isinstance(other, Bicharacter) and self.group == other.group
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.group, self.matrix))

    def __add__(self, other):
        if self.group != other.group:
            raise ValueError("bicharacters live on different groups")
        return type(self)(self.group, [[a + b for a, b in zip(r, s)]
                                       for r, s in zip(self.matrix, other.matrix)])

    def __neg__(self):
        return type(self)(self.group, [[-a for a in r] for r in self.matrix])

    def scale(self, n):
        return type(self)(self.group, [[n * a for a in r] for r in self.matrix])

    def is_symmetric(self):
        k = self.group.rank
        return all(self.matrix[i][j] == self.matrix[j][i] for i in range(k) for j in range(k))

    def is_skew(self):
        k = self.group.rank
        return all(qz(self.matrix[i][j] + self.matrix[j][i]) == 0 for i in range(k) for j in range(k))

    def is_alternating(self):
        return self.is_skew() and all(self.matrix[i][i] == 0 for i in range(self.group.rank))

    def is_trivial(self):
        return all(x == 0 for row in self.matrix for x in row)

    def radical(self):
        G = self.group
        gens = G.gens()
        return Subgroup(G, [x for x in G.elements() if all(self(x, g) == 0 for g in gens)])

    def is_nondegenerate(self):
        return self.radical().is_trivial()

    def pullback(self, f):
        """beta(f(.), f(.)) for a homomorphism f into self.group."""
        return Bicharacter(f.source, [[self(a, b) for b in f.images] for a in f.images])


class CommutationFactor(Bicharacter):
    """An alternating bicharacter on the character group."""

    def __init__(self, group, matrix):
        super().__init__(group, matrix)
        if not self.is_alternating():
            raise ValueError("commutation factor must be alternating")


def radical(beta):
    return beta.radical()


class BrauerClass:
    """A pair (T, beta) with T <= G and beta nondegenerate alternating on T.

    ``beta`` is a Bicharacter on ``support.abstract``, i.e. in the
    coordinates of ``support.basis``.
    """

    def __init__(self, ambient, support, beta):
        if support.ambient != ambient:
            raise ValueError("support is not a subgroup of the ambient group")
        if beta.group != support.abstract:
            raise ValueError("beta must be given on the support's basis coordinates")
        if not beta.is_alternating():
            raise ValueError("beta is not alternating")
        if not beta.is_nondegenerate():
            raise ValueError("beta is degenerate")
        s = math.isqrt(support.order)
        if s * s != support.order:
            raise ValueError(f"support order {support.order} is not a square")
        self.ambient = ambient
        self.support = support
        self.beta = beta

    @classmethod
    def trivial(cls, G):
        T = Subgroup.trivial(G)
        return cls(G, T, Bicharacter.zero(T.abstract))

    @classmethod
    def from_pairs(cls, G, gens, values):
        """Build from generators of T and a function on pairs of generators.

        ``values`` maps (i, j) index pairs (i < j) to Q/Z; unspecified
        pairs are 0.  The generators need not be independent.
        """
        gens = [G.elem(g) for g in gens]
        values = {k: qz(v) for k, v in values.items()}
        T = Subgroup(G, gens)
        # express the canonical basis through the given generators
        A = T.abstract
        m = len(gens)
        full = {}
        for i in range(m):
            for j in range(m):
                if i < j:
                    full[i, j] = qz(values.get((i, j), 0))
                elif i > j:
                    full[i, j] = qz(-values.get((j, i), 0))
                else:
                    full[i, j] = Fraction(0)
        word = _words(G, gens)

        def on_gens(x, y):
            wx, wy = word[x], word[y]
            return qz(sum(wx[i] * wy[j] * full[i, j] for i in range(m) for j in range(m)))

        M = [[on_gens(a, b) for b in T.basis] for a in T.basis]
        beta = Bicharacter(A, M)
        cls_ = cls(G, T, beta)
        # the prescription must be consistent with relations among gens
        for i in range(m):
            for j in range(m):
                if cls_.value(gens[i], gens[j]) != full[i, j]:
                    raise ValueError("values are not a bicharacter on the generated subgroup")
        return cls_

    @classmethod
    def from_basis(cls, G, basis, matrix):
        """Build from an independent basis of T and the matrix of beta on it."""
        basis = [G.elem(b) for b in basis]
        vals = {}
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                vals[i, j] = matrix[i][j]
        out = cls.from_pairs(G, basis, vals)
        k = len(basis)
        if any(qz(matrix[i][j]) != qz(-qz(matrix[j][i])) for i in range(k) for j in range(k)) or \
                any(qz(matrix[i][i]) for i in range(k)):
            raise ValueError("beta is not alternating")
        if out.support.order != math.prod(G.element_order(b) for b in basis):
            raise ValueError("basis elements are not independent")
        return out

    def value(self, s, t):
        """beta(s, t) for s, t in T given as ambient elements."""
        T = self.support
        return self.beta(T.coords(s), T.coords(t))

    @property
    def schur_index(self):
        return math.isqrt(self.support.order)

    def is_trivial(self):
        return self.support.is_trivial()

    @cached_property
    def factor(self):
        return commutation_factor_from_pair(self)

    def __eq__(self, other):
        return (isinstance(other, BrauerClass) and self.ambient == other.ambient
                and self.factor == other.factor)

    def __hash__(self):
        return hash(self.factor)

    def __repr__(self):
        return (f"BrauerClass(G={list(self.ambient.orders)}, T={[list(b) for b in self.support.basis]}, "
                f"beta={[[str(x) for x in r] for r in self.beta.matrix]})")

    def basis_matrix(self):
        """(basis of T, matrix of beta on it) as plain data."""
        return [list(b) for b in self.support.basis], [list(r) for r in self.beta.matrix]

    def __mul__(self, other):
        return brauer_mul(self, other)


def _words(G, gens):
    """Map each element of <gens> to one integer word in gens (BFS order)."""
    m = len(gens)
    word = {G.zero: (0,) * m}
    frontier = [G.zero]
    while frontier:
        nxt = []
        for x in frontier:
            for i, g in enumerate(gens):
                y = G.add(x, g)
                if y not in word:
                    w = list(word[x])
                    w[i] += 1
                    word[y] = tuple(w)
                    nxt.append(y)
        frontier = nxt
    return word


def commutation_factor_from_pair(cls):
    """The factor beta_hat on the character group of cls.ambient."""
    G = cls.ambient
    T = cls.support
    A = T.abstract
    if T.is_trivial():
        return CommutationFactor(G, [[0] * G.rank for _ in range(G.rank)])
    basis = T.basis
    # t is determined by its pairing vector against the basis
    lookup = {}
    for y in A.elements():
        key = tuple(cls.beta(y, A.gens()[j]) for j in range(A.rank))
        lookup[key] = y
    ts = []
    for i, n in enumerate(G.orders):
        target = tuple(qz(Fraction(b[i], n)) for b in basis)
        ts.append(lookup[target])
    M = [[cls.beta(ti, tj) for tj in ts] for ti in ts]
    return CommutationFactor(G, M)


def solve_t_for_character(cls, chi):
    """The unique t in T with chi(s) = beta(t, s) for all s in T."""
    G = cls.ambient
    T = cls.support
    for t in T:
        if all(cls.value(t, s) == G.pair(chi, s) for s in T.basis):
            return t
    raise AssertionError("nondegenerate beta must represent every character")


def pair_from_commutation_factor(gamma):
    """Recover (T, beta) from an alternating factor on the character group."""
    if not gamma.is_alternating():
        raise ValueError("commutation factor must be alternating")
    G = gamma.group
    rad = gamma.radical()
    T = perp(G, rad)
    if T.is_trivial():
        return BrauerClass.trivial(G)
    # chi -> t with t_i = n_i * gamma(e_i, chi); its image is T
    gens = G.gens()
    n = G.orders

    def to_t(chi):
        return tuple(int(n[i] * gamma(gens[i], chi)) % n[i] for i in range(G.rank))

    pre = {}
    for chi in G.elements():
        t = to_t(chi)
        pre.setdefault(t, chi)
    chis = [pre[b] for b in T.basis]
    M = [[gamma(a, b) for b in chis] for a in chis]
    return BrauerClass(G, T, Bicharacter(T.abstract, M))


def brauer_mul(c1, c2):
    if c1.ambient != c2.ambient:
        raise ValueError("Brauer classes over different groups")
    return pair_from_commutation_factor(c1.factor + c2.factor)


def brauer_inv(c):
    return pair_from_commutation_factor(-c.factor)


def brauer_pow(c, n):
    return pair_from_commutation_factor(c.factor.scale(n))


def pushforward_factor(f, gamma):
    """gamma composed with the dual of f, a factor on the target's characters."""
    G2 = f.target
    gens = G2.gens()
    duals = [f.dual(e) for e in gens]
    return CommutationFactor(G2, [[gamma(a, b) for b in duals] for a in duals])


def brauer_pushforward(f, c):
    if f.source != c.ambient:
        raise ValueError("homomorphism source does not match the class")
    return pair_from_commutation_factor(pushforward_factor(f, c.factor))


def pushforward_explicit(f, c):
    """Pushforward through the explicit subgroup description.

    With H = ker f, H_T = H cap T and H' its beta-orthogonal in T, the
    class lives on f(H_T + H') with the bicharacter induced from beta.
    """
    G = c.ambient
    T = c.support
    H = f.kernel()
    HT = H.intersect(T)
    Hp = Subgroup(G, [x for x in T if all(c.value(x, y) == 0 for y in HT.basis)])
    S = Subgroup(f.target, [f(x) for x in Hp.basis])
    if S.is_trivial():
        return BrauerClass.trivial(f.target)
    lifts = {}
    for x in Hp:
        lifts.setdefault(f(x), x)
    M = [[c.value(lifts[a], lifts[b]) for b in S.basis] for a in S.basis]
    return BrauerClass(f.target, S, Bicharacter(S.abstract, M))


# ---------------------------------------------------------------------------
# symplectic bases

def symplectic_decomposition(T, beta):
    """Hyperbolic pairs (a_j, b_j) of ambient elements with beta(a_j, b_j) = 1/ord.

    ``beta`` is a Bicharacter on ``T.abstract``.  The pairs are mutually
    orthogonal and together generate T.
    """
    if beta.group != T.abstract:
        raise ValueError("beta must be given on the subgroup's basis coordinates")
    if not beta.is_alternating() or not beta.is_nondegenerate():
        raise ValueError("symplectic decomposition needs a nondegenerate alternating form")
    A = T.abstract
    current = sorted(A.elements(), key=T.embed)
    pairs = []
    while len(current) > 1:
        m = max(A.element_order(x) for x in current)
        a = next(x for x in current if A.element_order(x) == m)
        b = next(y for y in current
                 if A.element_order(y) == m and beta(a, y).denominator == m)
        v = beta(a, b) * m
        u = pow(v.numerator, -1, m)
        b = A.mul(u, b)
        assert beta(a, b) == Fraction(1, m)

        comp = []
        for x in current:
            if beta(x, a) == 0 and beta(x, b) == 0:
                comp.append(x)
        pairs.append((a, b, m))
        current = comp
    return [(T.embed(a), T.embed(b)) for a, b, _ in pairs]


def quadratic_refinement(T, beta, pairs=None):
    """The Z_2-valued quadratic form on an elementary 2-group T vanishing on a symplectic basis.

    Returns a dict element -> value in {0, 1/2}.
    """
    if not T.is_elementary_2():
        raise ValueError("quadratic refinement needs an elementary 2-group")
    if pairs is None:
        pairs = symplectic_decomposition(T, beta)
    out = {}
    for t in T:
        y = T.coords(t)
        val = Fraction(0)
        for a, b in pairs:
            xa = 2 * beta(y, T.coords(b))
            yb = 2 * beta(T.coords(a), y)
            val += xa * yb / 2
        out[t] = qz(val)
    return out


def alternating_forms(T, nondegenerate=True):
    """Every alternating bicharacter on ``T.abstract`` (nondegenerate ones by default)."""
    from itertools import product

    A = T.abstract
    n = A.orders
    k = len(n)
    slots = [(i, j) for i in range(k) for j in range(i + 1, k)]
    ranges = [range(math.gcd(n[i], n[j])) for i, j in slots]
    for values in product(*ranges):
        M = [[Fraction(0)] * k for _ in range(k)]
        for (i, j), v in zip(slots, values):
            x = Fraction(v, math.gcd(n[i], n[j]))
            M[i][j] = x
            M[j][i] = qz(-x)
        beta = Bicharacter(A, M)
        if not nondegenerate or beta.is_nondegenerate():
            yield beta


def all_brauer_classes(G, supports=None):
    """Every Brauer class on G, optionally restricted to the given supports."""
    from .abelian import all_subgroups

    for T in (supports if supports is not None else all_subgroups(G)):
        for beta in alternating_forms(T):
            yield BrauerClass(G, T, beta)
