"""Compare the closed-form half-spin factors with an explicit Clifford computation.

so6 graded by Z2 x Z2 with trivial division part: both half-spin modules
carry the Pauli commutation factor.
"""
from gradmod import BrauerClass, DInner, FinAbGroup, gamma_hat_plus_D
from gradmod.oracle import d_inner_oracle

G = FinAbGroup([2, 2])
e, a, b, c = (0, 0), (1, 0), (0, 1), (1, 1)
spec = DInner(G, 3, BrauerClass.trivial(G), e, (e, e, e, a, b, c), (e,) * 6)

plus, minus = gamma_hat_plus_D(spec)
res = d_inner_oracle(spec)
print("formula  gamma+(a,b) =", plus(a, b), " gamma-(a,b) =", minus(a, b))
print("Clifford gamma+(a,b) =", res.plus(a, b), " gamma-(a,b) =", res.minus(a, b))
print("agree as unordered pairs:", res.unordered() == frozenset([plus, minus]))
