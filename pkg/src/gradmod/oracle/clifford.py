"""Clifford algebras of an orthonormal quadratic space over Q(zeta_M).

Basis blades are bitmasks: bit i set means e_i occurs.  With Q(e_i) = 1 the
product of blades is a signed blade, e_A e_B = (-1)^{swaps} e_{A xor B}.
"""
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloNum


@lru_cache(maxsize=1 << 16)
def blade_sign(a, b):
    """Parity of the transpositions needed to sort e_A e_B (orthonormal basis)."""
    s = 0
    a >>= 1
    while a:
        s += bin(a & b).count("1")
        a >>= 1
    return s & 1


class CliffordElem:
    __slots__ = ("n", "field", "terms")

    def __init__(self, n, field, terms=None):
        self.n = n
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    # -- constructors
    @classmethod
    def scalar(cls, n, field, c=1):
        if not isinstance(c, CycloNum):
            c = field.rational(c)
        return cls(n, field, {0: c})

    @classmethod
    def one(cls, n, field):
        return cls.scalar(n, field, 1)

    @classmethod
    def blade(cls, n, field, mask, c=1):
        if not isinstance(c, CycloNum):
            c = field.rational(c)
        return cls(n, field, {mask: c})

    @classmethod
    def basis_vector(cls, n, field, i):
        return cls.blade(n, field, 1 << i)

    @classmethod
    def vector(cls, n, field, coeffs):
        return cls(n, field, {1 << i: c for i, c in enumerate(coeffs)})

    @classmethod
    def pseudoscalar(cls, n, field):
        """z = e_1 e_2 ... e_n."""
        return cls.blade(n, field, (1 << n) - 1)

    # -- structure
    def __repr__(self):
        parts = []
        for m in sorted(self.terms):
            idx = [str(i + 1) for i in range(self.n) if m >> i & 1]
            parts.append(f"({self.terms[m]!r})e[{','.join(idx)}]")
        return " + ".join(parts) or "0"

    def _check(self, other):
        if self.n != other.n or self.field is not other.field:
            raise ValueError("elements of different Clifford algebras")

    def __eq__(self, other):
        if not isinstance(other, CliffordElem):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def is_zero(self):
        return not self.terms

    def coefficient(self, mask):
        return self.terms.get(mask, self.field.zero())

    def parity(self):
        """0 (even), 1 (odd) or None (mixed or zero)."""
        ps = {bin(m).count("1") & 1 for m in self.terms}
        return ps.pop() if len(ps) == 1 else None

    # -- arithmetic
    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return CliffordElem(self.n, self.field, out)

    def __neg__(self):
        return CliffordElem(self.n, self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, CycloNum):
            c = self.field.rational(c)
        return CliffordElem(self.n, self.field, {m: c * x for m, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(other)
        self._check(other)
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                v = x * y
                if blade_sign(a, b):
                    v = -v
                m = a ^ b
                out[m] = out[m] + v if m in out else v
        return CliffordElem(self.n, self.field, out)

    def reverse(self):
        out = {}
        for m, c in self.terms.items():
            k = bin(m).count("1")
            out[m] = -c if (k * (k - 1) // 2) & 1 else c
        return CliffordElem(self.n, self.field, out)

    def scalar_part(self):
        return self.coefficient(0)

    def inverse(self):
        """Two-sided inverse: versor shortcut, otherwise a linear solve."""
        rv = self.reverse()
        p = self * rv
        if set(p.terms) == {0}:
            return rv.scale(p.terms[0].inverse())
        return _inverse_by_solve(self)


def clifford_product(x, y):
    return x * y


def clifford_inverse(x):
    return x.inverse()


# -- exact linear algebra over the cyclotomic field ---------------------------

def solve_kernel(rows, ncols, field):
    """Reduced row echelon kernel basis of a matrix given as list of dict rows."""
    pivots = []  # (col, row dict)
    for row in rows:
        row = {c: v for c, v in row.items() if not v.is_zero()}
        for pc, prow in pivots:
            if pc in row:
                f = row[pc]
                for c, v in prow.items():
                    nv = row.get(c, field.zero()) - f * v
                    if nv.is_zero():
                        row.pop(c, None)
                    else:
                        row[c] = nv
        if not row:
            continue
        pc = min(row)
        inv = row[pc].inverse()
        row = {c: v * inv for c, v in row.items()}
        new = []
        for qc, qrow in pivots:
            if pc in qrow:
                f = qrow[pc]
                for c, v in row.items():
                    nv = qrow.get(c, field.zero()) - f * v
                    if nv.is_zero():
                        qrow.pop(c, None)
                    else:
                        qrow[c] = nv
            new.append((qc, qrow))
        pivots = new + [(pc, row)]
    pivot_cols = {pc for pc, _ in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = {free: field.one()}
        for pc, prow in pivots:
            if free in prow:
                vec[pc] = -prow[free]
        basis.append(vec)
    return basis


def _inverse_by_solve(x):
    n, F = x.n, x.field
    N = 1 << n
    # unknown y with x*y = 1: column b contributes x * e_b
    cols = {}
    for b in range(N):
        cols[b] = (x * CliffordElem.blade(n, F, b)).terms
    rows = []
    for m in range(N):
        row = {b: col[m] for b, col in cols.items() if m in col}
        row[N] = -F.one() if m == 0 else F.zero()
        rows.append(row)
    kern = solve_kernel(rows, N + 1, F)
    sol = next((v for v in kern if N in v and not v[N].is_zero()), None)
    if sol is None:
        raise ZeroDivisionError("Clifford element is not invertible")
    scale = sol[N].inverse()
    y = CliffordElem(n, F, {b: v * scale for b, v in sol.items() if b < N})
    assert x * y == CliffordElem.one(n, F)
    return y


# -- orthogonal matrices and spin elements -----------------------------------

def _dot(x, y, field):
    out = field.zero()
    for a, b in zip(x, y):
        out = out + a * b
    return out


def _column(u, i):
    return [row[i] for row in u]


def _apply(u, v, field):
    return [_dot(row, v, field) for row in u]


def is_orthogonal(u, field):
    n = len(u)
    for i in range(n):
        ci = _column(u, i)
        for j in range(i, n):
            d = _dot(ci, _column(u, j), field)
            if d != (1 if i == j else 0):
                return False
    return True


def _reflect_matrix(v, u, field):
    """R_v u, with R_v(x) = x - 2 (x.v)/(v.v) v."""
    vv = _dot(v, v, field)
    k = field.rational(2) / vv
    out = [list(row) for row in u]
    n = len(u)
    for j in range(n):
        col = _column(u, j)
        f = _dot(col, v, field) * k
        if f.is_zero():
            continue
        for i in range(n):
            out[i][j] = out[i][j] - f * v[i]
    return out


def reflection_vectors(u, field):
    """Vectors w_1..w_m with u = R_{w_1} ... R_{w_m} (Cartan-Dieudonne)."""
    n = len(u)
    w = [list(row) for row in u]
    vecs = []
    for i in range(n):
        x = _column(w, i)
        e = [field.rational(int(j == i)) for j in range(n)]
        if x == e:
            continue
        v = [a - b for a, b in zip(x, e)]
        if not _dot(v, v, field).is_zero():
            w = _reflect_matrix(v, w, field)
            vecs.append(v)
        else:
            v2 = [a + b for a, b in zip(x, e)]
            w = _reflect_matrix(v2, w, field)
            w = _reflect_matrix(e, w, field)
            vecs.extend([v2, e])
    for i in range(n):
        for j in range(n):
            if w[i][j] != (1 if i == j else 0):
                raise ValueError("matrix is not orthogonal")
    return vecs


def conjugation_ok(s, u, field):
    """s e_i = (-1)^{|s|} u(e_i) s for every basis vector."""
    n = len(u)
    p = s.parity()
    if p is None:
        return False
    for i in range(n):
        ei = CliffordElem.basis_vector(n, field, i)
        ui = CliffordElem.vector(n, field, _column(u, i))
        rhs = ui * s
        if p:
            rhs = -rhs
        if s * ei != rhs:
            return False
    return True


def spin_element_for(u, field):
    """s in the Clifford group with s v s^-1 = (-1)^{|s|} u(v); parity = propriety.

    Built as a product of reflection vectors.  Unique up to a scalar.
    """
    n = len(u)
    if not is_orthogonal(u, field):
        raise ValueError("input is not an isometry of the orthonormal form")
    s = CliffordElem.one(n, field)
    for v in reflection_vectors(u, field):
        s = s * CliffordElem.vector(n, field, v)
    if not conjugation_ok(s, u, field):
        raise AssertionError("spin element does not implement the isometry")
    return s


def spin_element_by_solve(u, field):
    """Same element found by solving s e_i - (-1)^p u(e_i) s = 0 (small n only).

    The even part is tried first, then the odd part; the first kernel vector
    in blade order is returned.
    """
    n = len(u)
    N = 1 << n
    cols_u = [CliffordElem.vector(n, field, _column(u, i)) for i in range(n)]
    for p in (0, 1):
        masks = [m for m in range(N) if bin(m).count("1") & 1 == p]
        rows = {}
        for k, m in enumerate(masks):
            em = CliffordElem.blade(n, field, m)
            for i in range(n):
                ei = CliffordElem.basis_vector(n, field, i)
                lhs = em * ei
                rhs = cols_u[i] * em
                expr = lhs + rhs if p else lhs - rhs
                for blade, c in expr.terms.items():
                    rows.setdefault((i, blade), {})[k] = c
        kern = solve_kernel(list(rows.values()), len(masks), field)
        if kern:
            vec = kern[0]
            return CliffordElem(n, field, {masks[k]: c for k, c in vec.items()})
    raise ValueError("no spin element: input is not an isometry")


# -- commutators and half-spin projections ------------------------------------

def commutator_value(s1, s2):
    """s1 s2 s1^-1 s2^-1 as one of ('1', '-1', 'z', '-z'), with z = e_[n]."""
    n, F = s1.n, s1.field
    P = s1 * s2
    R = s2 * s1
    z = CliffordElem.pseudoscalar(n, F)
    zR = z * R
    for label, cand in (("1", R), ("-1", -R), ("z", zR), ("-z", -zR)):
        if P == cand:
            return label
    raise AssertionError("commutator is not central of the expected form")


def central_element(label, n, field):
    z = CliffordElem.pseudoscalar(n, field)
    one = CliffordElem.one(n, field)
    return {"1": one, "-1": -one, "z": z, "-z": -z}[label]


def half_spin_idempotents(z_ref, rank):
    """(eps_+, eps_-) built from z_ref: (1 +- z)/2 for even rank, (1 -+ i z)/2 for odd."""
    n, F = z_ref.n, z_ref.field
    one = CliffordElem.one(n, F)
    half = F.rational(Fraction(1, 2))
    if rank % 2 == 0:
        w = z_ref
    else:
        w = z_ref.scale(-F.i())
    return (one + w).scale(half), (one - w).scale(half)


def project_scalar(c, eps):
    """lambda with c eps = lambda eps, as a Q/Z phase."""
    y = c * eps
    m = min(eps.terms)
    lam = y.coefficient(m) / eps.coefficient(m)
    if y != eps.scale(lam):
        raise AssertionError("central element does not act by a scalar")
    ph = lam.as_root_of_unity()
    if ph is None:
        raise AssertionError("central element acts by a non-root of unity")
    return ph


def commutator_parity_formula(d1, d2):
    """(-1)^{p1 p2 + d} for commuting diagonal +-1 isometries, as a phase.

    ``d1``/``d2`` are the diagonal signs; the dimension must be even.
    """
    if len(d1) % 2:
        raise ValueError("the parity formula needs even dimension")
    p1 = sum(1 for x in d1 if x == -1) & 1
    p2 = sum(1 for x in d2 if x == -1) & 1
    d = sum(1 for x, y in zip(d1, d2) if x == -1 and y == -1)
    return Fraction((p1 * p2 + d) % 2, 2)
