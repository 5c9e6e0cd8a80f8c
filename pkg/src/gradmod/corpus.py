"""Seeded random generators of valid grading specs.

All generators use rejection sampling on top of :func:`gradings.validate`,
so anything they return is valid by construction.  Pass a
``random.Random`` instance for reproducibility.
"""
import random

from .abelian import FinAbGroup, Subgroup
from .bichar import all_brauer_classes
from .gradings import (
    AInner,
    AOuter,
    BSpec,
    CSpec,
    DInner,
    DOuter,
    distinguished_element,
    quadratic_values,
    validate,
)

MAX_TRIES = 2000


def _rng(rng):
    return rng if isinstance(rng, random.Random) else random.Random(rng)


def _elem(G, rng):
    return tuple(rng.randrange(n) for n in G.orders)


def _halves(G):
    """x -> list of y with 2y = x."""
    table = {}
    for y in G.elements():
        table.setdefault(G.mul(2, y), []).append(y)
    return table


def classes_with(G, ell=None, elementary_2=False):
    out = []
    for cls in all_brauer_classes(G):
        if ell is not None and cls.schur_index != ell:
            continue
        if elementary_2 and not cls.support.is_elementary_2():
            continue
        out.append(cls)
    return out


def random_class(G, rng=None, ell=None, elementary_2=False):
    rng = _rng(rng)
    pool = classes_with(G, ell, elementary_2)
    if not pool:
        raise ValueError("no Brauer class with the requested schur index")
    return rng.choice(pool)


def _chain(G, g0, t, s, rng, halves):
    """Degrees with 2 g_i + t_i = -g0 (i <= q) followed by s hyperbolic pairs."""
    target = G.neg(g0)
    xi = []
    for ti in t:
        opts = halves.get(G.sub(target, ti), [])
        if not opts:
            return None
        xi.append(rng.choice(opts))
    for _ in range(s):
        g = _elem(G, rng)
        xi += [g, G.sub(target, g)]
    return tuple(xi)


def random_A_inner(G, rank, rng=None):
    rng = _rng(rng)
    n = rank + 1
    pool = [c for c in all_brauer_classes(G) if n % c.schur_index == 0]
    cls = rng.choice(pool)
    k = n // cls.schur_index
    return AInner(G, rank, cls, tuple(_elem(G, rng) for _ in range(k)))


def random_C(G, rank, rng=None):
    rng = _rng(rng)
    pool = [c for c in all_brauer_classes(G)
            if c.support.is_elementary_2() and (2 * rank) % c.schur_index == 0]
    return CSpec(G, rank, rng.choice(pool))


def random_B(G, rank, rng=None):
    rng = _rng(rng)
    n = 2 * rank + 1
    halves = _halves(G)
    for _ in range(MAX_TRIES):
        q = rng.choice(range(1, n + 1, 2))
        g1 = _elem(G, rng)
        g0 = G.neg(G.mul(2, g1))
        xi = _chain(G, g0, [G.zero] * q, (n - q) // 2, rng, halves)
        if xi is None:
            continue
        spec = BSpec(G, rank, g0, xi, q)
        if not validate(spec):
            return spec
    raise RuntimeError("could not sample a B spec")


def _random_D(G, rank, rng, ell, want_outer):
    halves = _halves(G)
    pool = [c for c in all_brauer_classes(G)
            if c.support.is_elementary_2() and c.schur_index == ell]
    if not pool:
        raise ValueError(f"no elementary 2 support of order {ell * ell} in {G!r}")
    k = 2 * rank // ell
    for _ in range(MAX_TRIES):
        cls = rng.choice(pool)
        qv = quadratic_values(cls)
        sym = sorted(t for t, v in qv.items() if v == 0)
        q = rng.choice([x for x in range(k + 1) if (k - x) % 2 == 0])
        t = [rng.choice(sym) for _ in range(q)]
        if t:
            g1 = _elem(G, rng)
            g0 = G.neg(G.add(G.mul(2, g1), t[0]))
        else:
            g0 = _elem(G, rng)
        xi = _chain(G, g0, t, (k - q) // 2, rng, halves)
        if xi is None:
            continue
        base = DInner(G, rank, cls, g0, xi, tuple(t))
        problems = validate(base)
        if not problems:
            if not want_outer:
                return DInner(G, rank, cls, g0, xi, tuple(t), rng.choice("+-"))
            continue
        if want_outer and cls.support.order in (1, 4):
            try:
                h = distinguished_element(base)
            except Exception:
                continue
            spec = DOuter(G, rank, cls, g0, xi, tuple(t), h)
            if not validate(spec):
                return spec
    raise RuntimeError("could not sample a D spec")


def random_D_inner(G, rank, rng=None, ell=1):
    return _random_D(G, rank, _rng(rng), ell, False)


def random_D_outer(G, rank, rng=None, ell=1):
    return _random_D(G, rank, _rng(rng), ell, True)


def random_A_outer(G, rank, rng=None):
    from .abelian import quotient

    rng = _rng(rng)
    n = rank + 1
    order2 = [x for x in G.elements() if G.element_order(x) == 2]
    if not order2:
        raise ValueError("outer gradings need an element of order 2")
    for _ in range(MAX_TRIES):
        h = rng.choice(order2)
        chis = [c for c in G.elements() if G.pair(c, h) != 0]
        chi = rng.choice(chis)
        Gb, p = quotient(G, Subgroup(G, [h]))
        pool = [c for c in all_brauer_classes(Gb)
                if c.support.is_elementary_2() and n % c.schur_index == 0]
        cls_bar = rng.choice(pool)
        Tb = cls_bar.support
        tbar = tuple(p.lift(b) for b in Tb.basis)
        beta = tuple(tuple(row) for row in cls_bar.beta.matrix)
        ell = cls_bar.schur_index
        k = n // ell
        q = rng.choice([x for x in range(k + 1) if (k - x) % 2 == 0])
        tb = [rng.choice(Tb.sorted_elements()) for _ in range(q)]
        # choose g0bar and degrees over the quotient, then lift
        halves = _halves(Gb)
        if tb:
            g0b = Gb.neg(Gb.add(Gb.mul(2, _elem(Gb, rng)), tb[0]))
        else:
            g0b = _elem(Gb, rng)
        xib = _chain(Gb, g0b, tb, (k - q) // 2, rng, halves)
        if xib is None:
            continue
        lift = lambda y: G.add(p.lift(y), h) if rng.random() < 0.5 else p.lift(y)
        spec = AOuter(G, rank, h, chi, tbar, beta, lift(g0b),
                      tuple(lift(y) for y in xib), tuple(p.lift(y) for y in tb))
        if not validate(spec):
            return spec
    raise RuntimeError("could not sample an outer A spec")


# -- the standard corpus --------------------------------------------------------

def standard_corpus(seed=0, size="small"):
    """A deterministic list of (name, spec) pairs covering every series and variant."""
    rng = random.Random(seed)
    Z2 = FinAbGroup([2])
    Z4 = FinAbGroup([4])
    Z22 = FinAbGroup([2, 2])
    Z222 = FinAbGroup([2, 2, 2])
    Z2222 = FinAbGroup([2, 2, 2, 2])
    Z24 = FinAbGroup([2, 4])
    Z33 = FinAbGroup([3, 3])
    Z44 = FinAbGroup([4, 4])
    out = []
    reps = 2 if size == "small" else 4
    for i in range(reps):
        for G, r in ((Z22, 1), (Z33, 2), (Z24, 3), (Z22, 3)):
            out.append((f"A-inner-{G.orders}-r{r}-{i}", random_A_inner(G, r, rng)))
        for G, r in ((Z22, 2), (Z4, 3), (Z222, 3)):
            out.append((f"A-outer-{G.orders}-r{r}-{i}", random_A_outer(G, r, rng)))
        for G, r in ((Z22, 2), (Z222, 3)):
            out.append((f"B-{G.orders}-r{r}-{i}", random_B(G, r, rng)))
        for G, r in ((Z22, 2), (Z222, 3)):
            out.append((f"C-{G.orders}-r{r}-{i}", random_C(G, r, rng)))
        for G, r, ell in ((Z22, 3, 1), (Z44, 3, 2), (Z222, 4, 2), (Z2222, 4, 4)):
            out.append((f"D-inner-{G.orders}-r{r}-l{ell}-{i}", random_D_inner(G, r, rng, ell)))
        for G, r, ell in ((Z2, 3, 1), (Z22, 4, 1), (Z24, 4, 2), (Z44, 4, 2)):
            out.append((f"D-outer-{G.orders}-r{r}-l{ell}-{i}", random_D_outer(G, r, rng, ell)))
    return out


__all__ = [
    "random_class",
    "random_A_inner",
    "random_A_outer",
    "random_B",
    "random_C",
    "random_D_inner",
    "random_D_outer",
    "standard_corpus",
]
