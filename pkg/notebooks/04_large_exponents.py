"""
Large exponents
===============

Raising to the q-th power is the identity on F_q, so an exponent
k = Qq + R can be replaced by Q + R without changing any circle sum.
Repeating this brings any monomial into the range below q, where a three
term formula finishes the job.  Degree-1600 polynumbers never get built.
"""

import time

from chromasum import field_make, fourier_summation_program, psi_brute

F = field_make(13)
res = fourier_summation_program("blue", F, 500, 300)
print("chain:", res.chain, "value:", res.value)

start = time.perf_counter()
check = psi_brute("blue", F, (1000, 600))
print("brute force:", check, f"({time.perf_counter() - start:.4f}s)")

# very large exponents are just as quick
big = fourier_summation_program("red", field_make(17), 10**40, 3 * 10**25)
print(len(big.chain), "steps to", (2 * big.m_star, 2 * big.n_star), "value", big.value)
