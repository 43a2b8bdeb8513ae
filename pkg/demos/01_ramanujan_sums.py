# coding: utf-8

# # Ramanujan sums three ways
#
# c_n(k) is the sum of the k-th powers of the primitive n-th roots of unity.
# It is always an integer, and there are several exact ways to get at it.
# This walk-through compares them and checks them against the floating-point
# definition.

import math

from rampoly import c_holder, c_mobius, c_multiplicative, row


# ## One value, three algorithms

n, k = 12, 4
print(c_mobius(n, k), c_holder(n, k), c_multiplicative(n, k))


# The Moebius form sums d*mu(n/d) over the common divisors of n and k. The
# closed form only looks at g = gcd(n, k). The multiplicative form splits n
# into prime powers, where the answer is one of three simple cases.

# ## The definition, numerically

def root_sum(n, k):
    return sum(math.cos(2 * math.pi * j * k / n) for j in range(1, n + 1) if math.gcd(j, n) == 1)

print(root_sum(12, 4))


# ## A full period
#
# row(n) builds c_n(0), ..., c_n(n-1) with all three methods and refuses to
# return if they disagree anywhere.

r = row(18)
print(r.values)
print("symmetric:", all(r[j] == r[-j] for j in range(18)))
print("sums to zero:", sum(r) == 0)


# Only multiples of n/radical(n) give nonzero values; for 18 that is every
# third k.

print([j for j in range(18) if r[j]])
