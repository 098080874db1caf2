"""
Summing a monomial over a circle
================================

psi averages a polynumber over a unit circle.  For a monomial a^k b^l the
same number comes out of three computations: the direct sum, a short
signed ladder of circular polynumber coefficients, and the reduction
program that first shrinks the exponents below q.
"""

from chromasum import field_make, psi
from chromasum.fourier import ladder_plan

F = field_make(13)
for method in ("brute", "closed", "program"):
    print(method, psi("blue", F, 2, 6, method).value)

# past the small-degree range the ladder has more than one rung
F17 = field_make(17)
plan = ladder_plan("red", F17, 40, 24)
print(plan)
print(psi("red", F17, 40, 24, "closed").value, psi("red", F17, 40, 24, "brute").value)

# the full grid of even monomials with exponents below q
for m in range(7):
    print(" ".join(str(psi("blue", F, 2 * m, 2 * n).value) for n in range(7)))
