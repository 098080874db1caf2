"""
Super Catalan numbers and circular polynumbers
==============================================

S(m, n) = (2m)! (2n)! / (m! n! (m+n)!) is always an integer.  Dividing by
4^(m+n) gives Omega(m, n), which turns up as the middle coefficient of
((1+a)/2)^2m ((1-a)/2)^2n.
"""

from chromasum import circular_polynumber, circular_super_catalan, super_catalan

# the first few rows
for m in range(6):
    print(" ".join(f"{super_catalan(m, n):>5}" for n in range(6)))

# row 1 is twice the Catalan numbers
print([super_catalan(1, n) // 2 for n in range(10)])

# Omega satisfies a Pascal-type rule
m, n = 3, 2
print(circular_super_catalan(m, n), "=", circular_super_catalan(m + 1, n), "+", circular_super_catalan(m, n + 1))

# and sits in the middle of a circular polynumber, up to sign
pi = circular_polynumber(6, 2)
print([str(c) for c in pi.coeffs])
print("middle:", pi[4], " Omega(3,1):", circular_super_catalan(3, 1))
