"""sl2 graded by Z2 x Z2 through the Pauli matrices.

Odd highest weights give a module whose endomorphism algebra is the
quaternion-like graded division algebra, so the module itself cannot be
graded; two copies of it can.
"""
from fractions import Fraction

from gradmod import AInner, BrauerClass, FinAbGroup, brauer_invariant, count_graded_simples
from gradmod.classify import module_admits_grading

G = FinAbGroup([2, 2])
pauli = BrauerClass.from_pairs(G, [(1, 0), (0, 1)], {(0, 1): Fraction(1, 2)})
spec = AInner(G, 1, pauli, ((0, 0),))

for m in range(5):
    rep = brauer_invariant(spec, (m,))
    print(f"m={m}  schur index {rep.schur_index}  graded: {rep.admits_grading}")

print("V(1) graded?", module_admits_grading(spec, {(1,): 1}))
print("V(1)^2 graded?", module_admits_grading(spec, {(1,): 2}))

n, labels = count_graded_simples(spec, 3)
print(f"{n} graded-simple modules with m <= 3:", " ".join(str(x) for x in labels))
