"""Exact arithmetic in the cyclotomic field Q(zeta_M).

Elements are integer polynomials in zeta of degree < phi(M) over a common
positive denominator, reduced modulo the M-th cyclotomic polynomial.
"""
from fractions import Fraction
from functools import lru_cache
import math


def _poly_divmod_exact(num, den):
    """num / den for integer polynomials (low to high), den monic; exact."""
    num = list(num)
    dq = len(den) - 1
    out = [0] * (len(num) - dq)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dq]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "division was not exact"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M):
    """Coefficients of Phi_M, lowest degree first."""
    if M < 1:
        raise ValueError("M must be positive")
    poly = [-1] + [0] * (M - 1) + [1]
    for d in range(1, M):
        if M % d == 0:
            poly = _poly_divmod_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CycloField:
    """Q(zeta_M) with the power basis 1, zeta, ..., zeta^(phi-1)."""

    _cache = {}

    def __new__(cls, M):
        M = int(M)
        if M in cls._cache:
            return cls._cache[M]
        self = super().__new__(cls)
        self.M = M
        self.poly = cyclotomic_polynomial(M)
        self.phi = len(self.poly) - 1
        phi = self.phi
        # x^k mod Phi_M for k < max(M, 2*phi - 1)
        top = max(M, 2 * phi - 1)
        table = []
        cur = [1] + [0] * (phi - 1)
        for _ in range(top):
            table.append(tuple(cur))
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for j in range(phi):
                    cur[j] -= carry * self.poly[j]
        self._powers = tuple(table)
        cls._cache[M] = self
        return self

    def __repr__(self):
        return f"CycloField({self.M})"

    def __reduce__(self):
        return (CycloField, (self.M,))

    def _mul(self, a, b):
        phi = self.phi
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        P = self._powers
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = P[k]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return out

    def zero(self):
        return CycloNum(self, (0,) * self.phi, 1)

    def one(self):
        return self.rational(1)

    def rational(self, q):
        q = Fraction(q)
        return CycloNum(self, (q.numerator,) + (0,) * (self.phi - 1), q.denominator)

    def zeta(self, k=1):
        return CycloNum(self, self._powers[k % self.M], 1)

    def root_of_unity(self, phase):
        """exp(2 pi i phase) for a rational phase with M * phase integral."""
        phase = Fraction(phase)
        k = phase * self.M
        if k.denominator != 1:
            raise ValueError(f"exp(2 pi i * {phase}) is not in Q(zeta_{self.M})")
        return self.zeta(int(k))

    def i(self):
        return self.root_of_unity(Fraction(1, 4))


class CycloNum:
    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=1):
        num = [int(c) for c in num]
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = math.gcd(den, *num)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        self.field = field
        self.num = tuple(num)
        self.den = den

    # -- basics
    def __repr__(self):
        terms = [f"{Fraction(c, self.den)}*z^{k}" for k, c in enumerate(self.num) if c]
        return f"CycloNum[{self.field.M}](" + (" + ".join(terms) or "0") + ")"

    def coefficients(self):
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self):
        return not any(self.num)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        self._same(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.field.M, self.num, self.den))

    def _same(self, other):
        if other.field is not self.field:
            raise ValueError("elements of different cyclotomic fields")

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    # -- arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.den, other.den
        return CycloNum(self.field, [x * b + y * a for x, y in zip(self.num, other.num)], a * b)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.field, [-x for x in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.field, self.field._mul(self.num, other.num), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        F = self.field
        phi = F.phi
        # columns: self * zeta^j
        cols = [F._mul(self.num, F._powers[j]) for j in range(phi)]
        A = [[Fraction(cols[j][i], self.den) for j in range(phi)] + [Fraction(int(i == 0))]
             for i in range(phi)]
        for c in range(phi):
            p = next(r for r in range(c, phi) if A[r][c] != 0)
            A[c], A[p] = A[p], A[c]
            piv = A[c][c]
            A[c] = [x / piv for x in A[c]]
            for r in range(phi):
                if r != c and A[r][c] != 0:
                    f = A[r][c]
                    A[r] = [x - f * y for x, y in zip(A[r], A[c])]
        sol = [A[i][phi] for i in range(phi)]
        den = math.lcm(*(x.denominator for x in sol))
        return CycloNum(F, [x.numerator * (den // x.denominator) for x in sol], den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def as_rational(self):
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def as_root_of_unity(self):
        """The phase k/M in [0, 1) if self is a root of unity, else None."""
        if self.den != 1:
            return None
        P = self.field._powers
        M = self.field.M
        for k in range(M):
            if P[k] == self.num:
                return Fraction(k, M)
        return None


def sqrt_rational(q, field):
    """A square root of the rational q in the field (squarefree part +-1 or +-2)."""
    q = Fraction(q)
    if q == 0:
        return field.zero()
    sign = -1 if q < 0 else 1
    a = abs(q)
    n, d = a.numerator * a.denominator, a.denominator
    # sqrt(n/d^2) with n = s * m^2
    s, m = 1, 1
    rest = n
    f = 2
    while f * f <= rest:
        while rest % (f * f) == 0:
            rest //= f * f
            m *= f
        f += 1
    s = rest
    base = field.rational(Fraction(m, d))
    if s == 1:
        root = base
    elif s == 2:
        if field.M % 8:
            raise ValueError("sqrt(2) needs 8 | M")
        root = base * (field.root_of_unity(Fraction(1, 8)) + field.root_of_unity(Fraction(7, 8)))
    else:
        raise ValueError(f"sqrt of {q} is not supported (squarefree part {s})")
    if sign < 0:
        if field.M % 4:
            raise ValueError("sqrt(-1) needs 4 | M")
        root = root * field.i()
    assert root * root == field.rational(q)
    return root
