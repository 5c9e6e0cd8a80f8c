"""Finite abelian groups presented as products of cyclic factors.

Elements and characters are plain tuples of residues.  A character is
identified with a residue vector through the dual basis of the chosen
cyclic decomposition, so that

    chi(g) = sum_i chi[i] * g[i] / n[i]   (mod 1).

Values in Q/Z are ``fractions.Fraction`` objects reduced into [0, 1).
"""
from fractions import Fraction
from functools import cached_property, reduce
import itertools
import math

ENUMERATION_CAP = 1 << 16


def qz(x):
    """Reduce a rational number into [0, 1)."""
    x = Fraction(x)
    return x - math.floor(x)


def format_qz(x):
    x = qz(x)
    return f"{x.numerator}/{x.denominator}"


def parse_qz(s):
    if isinstance(s, (int, Fraction)):
        return qz(s)
    if not isinstance(s, str):
        raise ValueError(f"expected a 'p/q' string, got {s!r}")
    return qz(Fraction(s.strip()))


def _lcm(a, b):
    return a * b // math.gcd(a, b)


class FinAbGroup:
    """The group Z/n_1 x ... x Z/n_k."""

    __slots__ = ("orders",)

    def __init__(self, orders):
        orders = tuple(int(n) for n in orders)
        for n in orders:
            if n < 1:
                raise ValueError(f"cyclic factor orders must be >= 1, got {n}")
        object.__setattr__(self, "orders", orders)

    def __setattr__(self, name, value):
        raise AttributeError("FinAbGroup is immutable")

    def __repr__(self):
        return f"FinAbGroup({list(self.orders)})"

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(("FinAbGroup", self.orders))

    @property
    def rank(self):
        return len(self.orders)

    @property
    def order(self):
        return math.prod(self.orders)

    def __len__(self):
        return self.order

    @property
    def exponent(self):
        return reduce(_lcm, self.orders, 1)

    @property
    def zero(self):
        return (0,) * self.rank

    def gens(self):
        """Standard generators e_1, ..., e_k (also the dual basis of characters)."""
        out = []
        for i in range(self.rank):
            v = [0] * self.rank
            v[i] = 1 % self.orders[i]
            out.append(tuple(v))
        return out

    def elem(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise ValueError(f"element {list(coords)} has length {len(coords)}, group rank is {self.rank}")
        return tuple(c % n for c, n in zip(coords, self.orders))

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == self.rank
                and all(isinstance(c, int) and 0 <= c < n for c, n in zip(x, self.orders)))

    def add(self, x, y):
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def sub(self, x, y):
        return tuple((a - b) % n for a, b, n in zip(x, y, self.orders))

    def neg(self, x):
        return tuple((-a) % n for a, n in zip(x, self.orders))

    def mul(self, k, x):
        return tuple((k * a) % n for a, n in zip(x, self.orders))

    def sum(self, xs):
        out = self.zero
        for x in xs:
            out = self.add(out, x)
        return out

    def lincomb(self, coeffs, xs):
        out = self.zero
        for c, x in zip(coeffs, xs):
            out = self.add(out, self.mul(c, x))
        return out

    def element_order(self, x):
        return reduce(_lcm, (n // math.gcd(a, n) for a, n in zip(x, self.orders)), 1)

    def elements(self):
        """All elements in canonical (lexicographic) order."""
        if self.order > ENUMERATION_CAP:
            raise ValueError(f"group of order {self.order} is too large to enumerate")
        return itertools.product(*(range(n) for n in self.orders))

    characters = elements

    def pair(self, chi, g):
        """chi(g) in Q/Z."""
        return qz(sum(Fraction(c * a, n) for c, a, n in zip(chi, g, self.orders)))


# ---------------------------------------------------------------------------
# integer normal forms

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A):
    """Return (D, U, V) with U*A*V = D diagonal, d_1 | d_2 | ..., U and V unimodular."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(row) for row in A]
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        for M in (D, U):
            rs, rd = M[src], M[dst]
            for c in range(len(rd)):
                rd[c] += q * rs[c]

    def add_col(dst, src, q):
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                # move the smallest remainder into the pivot and repeat
                cand = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
                cand += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
                _, i, j = min(cand)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-x for x in M[t]]
    return D, U, V


def _inverse_unimodular(V):
    n = len(V)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(V)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    out = [[row[n + j] for j in range(n)] for row in A]
    assert all(x.denominator == 1 for row in out for x in row)
    return [[int(x) for x in row] for row in out]


def hermite_normal_form(rows, ncols):
    """Row-style Hermite normal form of the lattice spanned by integer rows.

    Returns the nonzero rows: upper triangular, positive pivots, entries
    above each pivot reduced into [0, pivot).
    """
    A = [list(r) for r in rows]
    out = []
    col = 0
    while A and col < ncols:
        nz = [r for r in A if r[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            rest = []
            for r in nz[1:]:
                q = r[col] // p[col]
                r = [a - q * b for a, b in zip(r, p)]
                rest.append(r)
            A = [p] + rest + [r for r in A if not r[col]]
            nz = [r for r in A if r[col]]
        p = nz[0]
        if p[col] < 0:
            p = [-a for a in p]
        A = [r for r in A if not r[col] and any(r)]
        out.append(p)
        col += 1
    for i, p in enumerate(out):
        pc = next(c for c in range(ncols) if p[c])
        for k in range(i):
            q = out[k][pc] // p[pc]
            if q:
                out[k] = [a - q * b for a, b in zip(out[k], p)]
    return [tuple(r) for r in out]


# ---------------------------------------------------------------------------
# subgroups

class Subgroup:
    """A subgroup of a FinAbGroup, compared through its canonical element set."""

    def __init__(self, ambient, gens=()):
        self.ambient = ambient
        gens = [ambient.elem(g) for g in gens]
        self.gens = tuple(g for g in gens if any(g))

    @classmethod
    def trivial(cls, G):
        return cls(G, ())

    @classmethod
    def whole(cls, G):
        return cls(G, G.gens())

    def __repr__(self):
        return f"Subgroup({list(self.ambient.orders)}, gens={[list(g) for g in self.basis]})"

    @cached_property
    def elements(self):
        G = self.ambient
        seen = {G.zero}
        frontier = [G.zero]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.gens:
                    y = G.add(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > ENUMERATION_CAP:
                            raise ValueError("subgroup too large to enumerate")
            frontier = nxt
        return frozenset(seen)

    @cached_property
    def key(self):
        return tuple(sorted(self.elements))

    def sorted_elements(self):
        return list(self.key)

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return self.order

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.key)

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.ambient == other.ambient
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.ambient, self.key))

    def __le__(self, other):
        return self.ambient == other.ambient and self.elements <= other.elements

    def is_trivial(self):
        return self.order == 1

    def join(self, other):
        return Subgroup(self.ambient, self.gens + other.gens)

    def intersect(self, other):
        common = self.elements & other.elements
        return Subgroup(self.ambient, sorted(common))

    # lattice data -----------------------------------------------------
    def _relation_rows(self):
        G = self.ambient
        rows = [list(g) for g in self.gens]
        for i, n in enumerate(G.orders):
            r = [0] * G.rank
            r[i] = n
            rows.append(r)
        return rows

    @cached_property
    def hnf(self):
        """Canonical generator matrix: HNF of the preimage lattice in Z^k."""
        return tuple(hermite_normal_form(self._relation_rows(), self.ambient.rank))

    @cached_property
    def _decomposition(self):
        G = self.ambient
        k = G.rank
        if k == 0:
            return (), ()
        D, U, V = smith_normal_form(self._relation_rows())
        d = [D[i][i] for i in range(k)]
        Vinv = _inverse_unimodular(V)
        B = [[d[i] * Vinv[i][j] for j in range(k)] for i in range(k)]
        # N = diag(n) = C B
        Binv = _inverse_unimodular_rational(B)
        C = [[sum(Fraction(G.orders[i] if i == a else 0) * Binv[a][j] for a in range(k))
              for j in range(k)] for i in range(k)]
        assert all(x.denominator == 1 for row in C for x in row)
        C = [[int(x) for x in row] for row in C]
        D2, U2, V2 = smith_normal_form(C)
        V2inv = _inverse_unimodular(V2)
        basis, orders = [], []
        for j in range(k):
            dj = D2[j][j]
            if dj > 1:
                vec = [sum(V2inv[j][a] * B[a][c] for a in range(k)) for c in range(k)]
                basis.append(G.elem(vec))
                orders.append(dj)
        return tuple(basis), tuple(orders)

    @property
    def basis(self):
        """Independent generators t_1, ..., t_m with T = <t_1> x ... x <t_m>."""
        return self._decomposition[0]

    @property
    def basis_orders(self):
        return self._decomposition[1]

    @cached_property
    def abstract(self):
        """The subgroup as a FinAbGroup in the coordinates of ``basis``."""
        return FinAbGroup(self.basis_orders)

    def embed(self, y):
        return self.ambient.lincomb(y, self.basis)

    @cached_property
    def _coord_table(self):
        table = {}
        for y in self.abstract.elements():
            table[self.embed(y)] = y
        assert len(table) == self.order
        return table

    def coords(self, x):
        try:
            return self._coord_table[x]
        except KeyError:
            raise ValueError(f"{list(x)} is not in the subgroup") from None

    def is_elementary_2(self):
        return all(n == 2 for n in self.basis_orders)

    @property
    def exponent(self):
        return self.abstract.exponent


def _inverse_unimodular_rational(B):
    n = len(B)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(B)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [[row[n + j] for j in range(n)] for row in A]


def subgroup_generated(G, gens):
    for g in gens:
        if not (isinstance(g, (tuple, list)) and len(g) == G.rank):
            raise ValueError(f"{g!r} is not an element of {G!r}")
    return Subgroup(G, gens)


def all_subgroups(G):
    """Every subgroup of G (breadth-first over cyclic extensions)."""
    start = Subgroup.trivial(G)
    found = {start.key: start}
    frontier = [start]
    elems = list(G.elements())
    while frontier:
        nxt = []
        for S in frontier:
            for g in elems:
                if g in S.elements:
                    continue
                T = Subgroup(G, S.gens + (g,))
                if T.key not in found:
                    found[T.key] = T
                    nxt.append(T)
        frontier = nxt
    return sorted(found.values(), key=lambda S: (S.order, S.key))


# ---------------------------------------------------------------------------
# homomorphisms, quotients, duality

class GroupHom:
    """A homomorphism given by the images of the standard generators."""

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = tuple(target.elem(x) for x in images)
        if len(self.images) != source.rank:
            raise ValueError("need one image per generator")
        for n, x in zip(source.orders, self.images):
            if any(target.mul(n, x)):
                raise ValueError("images do not respect the generator orders")

    @classmethod
    def identity(cls, G):
        return cls(G, G, G.gens())

    def __call__(self, x):
        return self.target.lincomb(x, self.images)

    def compose(self, first):
        """self o first."""
        return GroupHom(first.source, self.target, [self(x) for x in first.images])

    def dual(self, psi):
        """psi o self, a character of the source."""
        S = self.source
        return tuple(int(n * self.target.pair(psi, x)) % n
                     for n, x in zip(S.orders, self.images))

    def kernel(self):
        z = self.target.zero
        return Subgroup(self.source, [x for x in self.source.elements() if self(x) == z])

    def image(self):
        return Subgroup(self.target, self.images)

    @cached_property
    def _sections(self):
        table = {}
        for x in self.source.elements():
            table.setdefault(self(x), x)
        return table

    def lift(self, y):
        """The least preimage of y in canonical order."""
        try:
            return self._sections[y]
        except KeyError:
            raise ValueError(f"{list(y)} is not in the image") from None


def quotient(G, H):
    """Return (G/H, projection) with G/H in Smith normal form coordinates.

    The quotient by the trivial subgroup is G itself with the identity map.
    """
    if H.ambient != G:
        raise ValueError("H is not a subgroup of G")
    if H.is_trivial():
        return G, GroupHom.identity(G)
    k = G.rank
    D, U, V = smith_normal_form(H._relation_rows())
    keep = [i for i in range(k) if D[i][i] > 1]
    Q = FinAbGroup([D[i][i] for i in keep])
    images = [[V[j][i] for i in keep] for j in range(k)]
    return Q, GroupHom(G, Q, images)


def perp(G, S):
    """Annihilator of S (in G or in the character group; the pairing is symmetric)."""
    if S.ambient != G:
        raise ValueError("ambient group mismatch")
    gens = S.basis
    return Subgroup(G, [x for x in G.elements() if all(G.pair(x, s) == 0 for s in gens)])


def solve_character_on_subgroup(T, values):
    """All characters of the ambient group extending a prescription on T.

    ``values`` maps elements of T to Q/Z.  Returns the full coset of
    extensions, or [] when the prescription is not a homomorphism on T.
    """
    G = T.ambient
    items = []
    for g, v in dict(values).items():
        g = tuple(g)
        if not G.contains(g) or g not in T:
            raise ValueError(f"{list(g)} is not an element of the subgroup")
        items.append((g, qz(v)))
    return [chi for chi in G.elements() if all(G.pair(chi, g) == v for g, v in items)]
