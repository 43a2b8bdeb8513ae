# coding: utf-8

# # Polynomials built from Ramanujan sums
#
# Put one period of c_n(k) into the coefficients and you get R_n(x). Taking
# absolute values gives T_n(x), squares give V_n(x).

from rampoly import phi_poly, psi_poly, r_poly, t_poly, v_poly
from rampoly.polyring import divides, eval_int, format_poly


# ## The first few rows

for n in range(1, 11):
    print(f"R_{n}(x) = {format_poly(r_poly(n))}")


# In[2]:

for n in range(1, 11):
    print(f"T_{n}(x) = {format_poly(t_poly(n))}")


# ## Cyclotomic factors
#
# R_n(x) - n vanishes at every primitive n-th root of unity, so the cyclotomic
# polynomial divides it exactly over the integers.

n = 20
print(format_poly(phi_poly(n)))
print(divides(phi_poly(n), r_poly(n) - n))


# ## Values at 1 and -1

for n in (6, 12, 15, 16):
    print(n, eval_int(t_poly(n), 1), eval_int(t_poly(n), -1), eval_int(v_poly(n), 1))


# ## The coprime-exponent polynomial
#
# psi_poly(n) marks the exponents coprime to n. Its value at any primitive
# root is mu(n).

print(format_poly(psi_poly(12)))
print(divides(phi_poly(12), psi_poly(12)))
