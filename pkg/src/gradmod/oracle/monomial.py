"""Monomial matrices with root-of-unity entries.

A monomial matrix of size n is stored as a permutation ``perm`` and a list of
phases in Q/Z: column j has its single nonzero entry exp(2 pi i phases[j]) in
row perm[j].  Products, inverses, Kronecker products and exterior powers stay
monomial, so everything is exact without ever touching a cyclotomic field.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
import math

from ..abelian import qz
from ..bichar import CommutationFactor


class MonomialMatrix:
    __slots__ = ("perm", "phases")

    def __init__(self, perm, phases):
        perm = tuple(int(p) for p in perm)
        phases = tuple(qz(x) for x in phases)
        if len(perm) != len(phases) or sorted(perm) != list(range(len(perm))):
            raise ValueError("not a monomial matrix")
        self.perm = perm
        self.phases = phases

    @classmethod
    def _raw(cls, perm, phases):
        # trusted constructor: perm is a permutation, phases may leave [0, 1)
        out = object.__new__(cls)
        out.perm = tuple(perm)
        out.phases = tuple(p % 1 for p in phases)
        return out

    @property
    def n(self):
        return len(self.perm)

    @classmethod
    def identity(cls, n):
        return cls(range(n), [0] * n)

    @classmethod
    def scalar(cls, n, phase):
        return cls(range(n), [phase] * n)

    @classmethod
    def diag(cls, phases):
        return cls(range(len(phases)), phases)

    @classmethod
    def clock(cls, m):
        """diag(w, w^2, ..., w^m) with w = exp(2 pi i / m); diag(-1, 1) for m = 2."""
        return cls.diag([Fraction(j + 1, m) for j in range(m)])

    @classmethod
    def shift(cls, m):
        """e_j -> e_{j+1 mod m}."""
        return cls([(j + 1) % m for j in range(m)], [0] * m)

    def __repr__(self):
        ph = [str(p) for p in self.phases]
        return f"MonomialMatrix(perm={list(self.perm)}, phases={ph})"

    def __eq__(self, other):
        return (isinstance(other, MonomialMatrix)
                and self.perm == other.perm and self.phases == other.phases)

    def __hash__(self):
        return hash((self.perm, self.phases))

    def __matmul__(self, other):
        if self.n != other.n:
            raise ValueError("size mismatch")
        pa, fa = self.perm, self.phases
        pb, fb = other.perm, other.phases
        return MonomialMatrix._raw([pa[pb[j]] for j in range(self.n)],
                                   [fa[pb[j]] + fb[j] for j in range(self.n)])

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = MonomialMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def inverse(self):
        n = self.n
        perm = [0] * n
        phases = [0] * n
        for j, i in enumerate(self.perm):
            perm[i] = j
            phases[i] = -self.phases[j]
        return MonomialMatrix._raw(perm, phases)

    def transpose(self):
        n = self.n
        perm = [0] * n
        phases = [0] * n
        for j, i in enumerate(self.perm):
            perm[i] = j
            phases[i] = self.phases[j]
        return MonomialMatrix(perm, phases)

    def times_phase(self, phase):
        return MonomialMatrix(self.perm, [p + phase for p in self.phases])

    def scalar_phase(self):
        """The phase c if self = exp(2 pi i c) * I, else None."""
        if any(p != j for j, p in enumerate(self.perm)):
            return None
        if len(set(self.phases)) > 1:
            return None
        return self.phases[0] if self.phases else Fraction(0)

    def entry(self, i, j):
        """Phase of entry (i, j), or None for a zero entry."""
        return self.phases[j] if self.perm[j] == i else None

    def perm_sign(self):
        seen = [False] * self.n
        sign = 0
        for s in range(self.n):
            if seen[s]:
                continue
            length = 0
            j = s
            while not seen[j]:
                seen[j] = True
                j = self.perm[j]
                length += 1
            sign += length - 1
        return sign % 2

    def det_phase(self):
        return qz(Fraction(self.perm_sign(), 2) + sum(self.phases))

    def kron(self, other):
        m = other.n
        perm, phases = [], []
        for j1 in range(self.n):
            for j2 in range(m):
                perm.append(self.perm[j1] * m + other.perm[j2])
                phases.append(self.phases[j1] + other.phases[j2])
        return MonomialMatrix._raw(perm, phases)

    def to_dense(self, field):
        rows = [[field.zero() for _ in range(self.n)] for _ in range(self.n)]
        for j, i in enumerate(self.perm):
            rows[i][j] = field.root_of_unity(self.phases[j])
        return rows


def kron_all(mats):
    out = MonomialMatrix.identity(1)
    for m in mats:
        out = out.kron(m)
    return out


def block_diag(mats):
    perm, phases = [], []
    off = 0
    for m in mats:
        perm.extend(off + p for p in m.perm)
        phases.extend(m.phases)
        off += m.n
    return MonomialMatrix(perm, phases)


def wedge_basis(n, i):
    return list(combinations(range(n), i))


def wedge(u, i):
    """The i-th exterior power of u on the basis of sorted i-subsets."""
    basis = wedge_basis(u.n, i)
    index = {S: k for k, S in enumerate(basis)}
    perm, phases = [], []
    for S in basis:
        image = [u.perm[j] for j in S]
        # sign of the sorting permutation
        inv = sum(1 for a in range(i) for b in range(a + 1, i) if image[a] > image[b])
        perm.append(index[tuple(sorted(image))])
        phases.append(Fraction(inv, 2) + sum(u.phases[j] for j in S))
    return MonomialMatrix(perm, phases)


def commutator(a, b):
    return a @ b @ a.inverse() @ b.inverse()


def scalar_commutator(a, b):
    """The phase c with ab = exp(2 pi i c) ba; raises if there is none."""
    ab, ba = a @ b, b @ a
    if ab.perm != ba.perm:
        raise AssertionError("commutator of the u operators is not scalar")
    diffs = {(x - y) % 1 for x, y in zip(ab.phases, ba.phases)}
    if len(diffs) > 1:
        raise AssertionError("commutator of the u operators is not scalar")
    return diffs.pop() if diffs else Fraction(0)


# -- graded division algebras -------------------------------------------------

class Realization:
    """X_t for t in T, built from a symplectic basis of (T, beta).

    ``pairs`` are (a_j, b_j) with beta(a_j, b_j) = 1/m_j; X_{a_j} is a clock
    and X_{b_j} a shift acting on the j-th tensor factor.
    """

    def __init__(self, cls):
        from ..bichar import symplectic_decomposition

        self.cls = cls
        T = cls.support
        self.T = T
        if T.is_trivial():
            self.pairs = []
        else:
            self.pairs = symplectic_decomposition(T, cls.beta)
        self.orders = [T.ambient.element_order(a) for a, _ in self.pairs]
        self.degree = math.prod(self.orders)
        self._gens_a = []
        self._gens_b = []
        for j, m in enumerate(self.orders):
            left = [MonomialMatrix.identity(x) for x in self.orders[:j]]
            right = [MonomialMatrix.identity(x) for x in self.orders[j + 1:]]
            self._gens_a.append(kron_all(left + [MonomialMatrix.clock(m)] + right))
            self._gens_b.append(kron_all(left + [MonomialMatrix.shift(m)] + right))
        self._cache = {}
        self._chars = {}

    def coordinates(self, t):
        """(xi, eta) with t = sum xi_j a_j + sum eta_j b_j."""
        xi, eta = [], []
        for (a, b), m in zip(self.pairs, self.orders):
            xi.append(int((m * self.cls.value(t, b)) % m))
            eta.append(int((m * self.cls.value(a, t)) % m))
        G = self.T.ambient
        check = G.sum([G.mul(x, a) for x, (a, _) in zip(xi, self.pairs)]
                      + [G.mul(y, b) for y, (_, b) in zip(eta, self.pairs)])
        if tuple(check) != tuple(G.elem(t)):
            raise ValueError(f"{t} is not in the support")
        return xi, eta

    def X(self, t):
        t = tuple(t)
        if t not in self._cache:
            xi, eta = self.coordinates(t)
            out = MonomialMatrix.identity(self.degree)
            for x, A in zip(xi, self._gens_a):
                out = out @ A ** x
            for y, B in zip(eta, self._gens_b):
                out = out @ B ** y
            self._cache[t] = out
        return self._cache[t]

    def t_for_character(self, chi):
        """The unique t in T with X_t X_s X_t^-1 = chi(s) X_s on T, by search."""
        G = self.T.ambient
        key = tuple(G.pair(chi, s) for s in self.T.basis)
        if key not in self._chars:
            for t in self.T.sorted_elements():
                Xt = self.X(t)
                if all(scalar_commutator(Xt, self.X(s)) == v for s, v in zip(self.T.basis, key)):
                    self._chars[key] = t
                    break
            else:
                raise AssertionError("no element of T implements the character")
        return self._chars[key]


@lru_cache(maxsize=512)
def realization(cls):
    """Shared Realization per Brauer class."""
    return Realization(cls)


def standard_division_algebra(cls):
    """Map t -> X_t for every t in the support of the class."""
    R = Realization(cls)
    return {t: R.X(t) for t in R.T.sorted_elements()}


def det_X(cls, t):
    """det(X_t) as a sign +1 or -1 (elementary 2-group support)."""
    if not cls.support.is_elementary_2():
        raise ValueError("det_X needs an elementary 2-group support")
    ph = Realization(cls).X(t).det_phase()
    if ph not in (0, Fraction(1, 2)):
        raise AssertionError(f"det X_t = exp(2 pi i {ph}) is not a sign")
    return 1 if ph == 0 else -1


def _factor_from_operators(G, u):
    mats = [u(chi) for chi in G.gens()]
    k = len(mats)
    M = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            M[i][j] = scalar_commutator(mats[i], mats[j])
            M[j][i] = qz(-M[i][j])
    return CommutationFactor(G, M)


def u_operator(realization, G, xi, chi):
    """diag(chi(g_1), ..., chi(g_k)) (x) X_t with chi|_T = beta(t, .)."""
    t = realization.t_for_character(chi)
    D = MonomialMatrix.diag([G.pair(chi, g) for g in xi])
    return D.kron(realization.X(t))


def commutation_factor_bruteforce(cls, xi=None):
    """Commutation factor read from the scalar commutators of the u operators."""
    G = cls.ambient
    R = Realization(cls)
    xi = list(xi) if xi is not None else [G.zero]
    return _factor_from_operators(G, lambda chi: u_operator(R, G, xi, chi))


def tensor_commutation_factor(cls1, cls2):
    """Commutation factor of the Kronecker product of two realizations."""
    G = cls1.ambient
    R1, R2 = realization(cls1), realization(cls2)

    def u(chi):
        return R1.X(R1.t_for_character(chi)).kron(R2.X(R2.t_for_character(chi)))

    return _factor_from_operators(G, u)


def wedge_commutation_factor(cls, xi, i):
    """Commutation factor of the i-th exterior power of the natural module."""
    G = cls.ambient
    R = Realization(cls)
    xi = list(xi)
    n = len(xi) * R.degree
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= {n - 1}")
    return _factor_from_operators(G, lambda chi: wedge(u_operator(R, G, xi, chi), i))
