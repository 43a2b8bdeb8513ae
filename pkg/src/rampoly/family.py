"""Constructors for the cyclotomic and Ramanujan-sum polynomial families.

Each constructor has a primary route and, where a second closed form
exists, an independent ``*_via_*`` route.  The constructors themselves only
validate structural invariants; comparing routes against each other is the
job of :mod:`rampoly.theorems`.

Results are memoised per index with :func:`functools.lru_cache`, which is
thread-safe.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from . import polyring as pr
from .numtheory import (
    _require_positive,
    divisors,
    mobius,
    radical,
    t_weight,
    totient,
)
from .polyring import IntPoly
from .ramanujan import row

__all__ = [
    "Family",
    "FamilyEntry",
    "entry",
    "phi_poly",
    "phi_via_mobius_product",
    "psi_poly",
    "psi_via_shifted_sum",
    "psi_via_plain_sum",
    "r_poly",
    "r_via_geometric",
    "r_via_radical",
    "r_via_holder",
    "t_poly",
    "t_via_weights",
    "t_via_holder",
    "t_via_radical",
    "v_poly",
    "p_poly",
    "q_poly",
    "rational_combination",
    "NonIntegralError",
]

_CACHE = 2048


class NonIntegralError(ArithmeticError):
    """A rational combination that must be an integer polynomial was not."""


class Family(str, enum.Enum):
    PHI = "phi"
    PSI = "psi"
    R = "r"
    T = "t"
    V = "v"
    P = "p"
    Q = "q"


def rational_combination(terms) -> IntPoly:
    """Sum ``scalar * poly`` over ``(Fraction, IntPoly)`` pairs, which must be integral.

    The terms are brought to a common denominator and summed as integers;
    integrality is checked once on the total, since the individual terms are
    usually fractional.
    """
    terms = [(Fraction(c), p) for c, p in terms if c and not p.is_zero()]
    if not terms:
        return IntPoly()
    den = reduce(math.lcm, (c.denominator for c, _ in terms), 1)
    size = max(len(p) for _, p in terms)
    acc = [0] * size
    for c, p in terms:
        w = c.numerator * (den // c.denominator)
        for i, v in enumerate(p.coeffs):
            if v:
                acc[i] += w * v
    bad = [i for i, v in enumerate(acc) if v % den]
    if bad:
        raise NonIntegralError(
            f"coefficient of x^{bad[0]} is {Fraction(acc[bad[0]], den)}, not an integer"
        )
    return IntPoly([v // den for v in acc])


# -- cyclotomic ----------------------------------------------------------


@lru_cache(maxsize=_CACHE)
def phi_poly(n: int) -> IntPoly:
    """n-th cyclotomic polynomial: ``x**n - 1`` divided by every ``phi_poly(d)``, d | n, d < n."""
    _require_positive("n", n)
    if n == 1:
        return IntPoly([-1, 1])
    acc = pr.binomial(n, sign=1, constant=-1)
    for d in divisors(n)[:-1]:
        acc, rem = pr.divide_exact(acc, phi_poly(d))
        if not rem.is_zero():
            raise ArithmeticError(f"Phi_{d} does not divide x^{n} - 1 after reduction")
    if acc.leading != 1 or acc.degree != totient(n):
        raise ArithmeticError(f"Phi_{n} failed monic/degree invariant")
    return acc


def phi_via_mobius_product(n: int) -> tuple[IntPoly, IntPoly]:
    """The two sides of the Moebius product for the cyclotomic polynomial.

    Returns ``(numerator, denominator)`` where ``numerator`` multiplies
    ``x**d - 1`` over ``mu(n/d) = +1`` and ``denominator`` over
    ``mu(n/d) = -1``; the cyclotomic polynomial is their exact quotient.
    """
    _require_positive("n", n)
    num, den = IntPoly([1]), IntPoly([1])
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num = num * pr.binomial(d, sign=1, constant=-1)
        elif mu == -1:
            den = den * pr.binomial(d, sign=1, constant=-1)
    return num, den


# -- coprime-exponent polynomial -----------------------------------------


@lru_cache(maxsize=_CACHE)
def psi_poly(n: int) -> IntPoly:
    """Sum of ``x**j`` over ``1 <= j <= n`` with ``gcd(j, n) = 1``."""
    _require_positive("n", n)
    coeffs = [0] * (n + 1)
    for j in range(1, n + 1):
        if math.gcd(j, n) == 1:
            coeffs[j] = 1
    return IntPoly(coeffs)


def psi_via_shifted_sum(n: int) -> IntPoly:
    """``sum over d | n of mu(d) * x**d * (1 - x**n)/(1 - x**d)``; valid for all n."""
    _require_positive("n", n)
    acc = IntPoly()
    for d in divisors(n):
        mu = mobius(d)
        if mu:
            acc = acc + pr.scale(mu, pr.shift(pr.geometric(d, n), d))
    return acc


def psi_via_plain_sum(n: int) -> IntPoly:
    """``sum over d | n of mu(d) * (1 - x**n)/(1 - x**d)``; valid for n > 1."""
    _require_positive("n", n)
    if n == 1:
        raise ValueError("plain geometric form of psi needs n > 1")
    acc = IntPoly()
    for d in divisors(n):
        mu = mobius(d)
        if mu:
            acc = acc + pr.scale(mu, pr.geometric(d, n))
    return acc


# -- Ramanujan-sum polynomial --------------------------------------------


@lru_cache(maxsize=_CACHE)
def r_poly(n: int) -> IntPoly:
    """``sum_{k<n} c_n(k) x**k``, read straight off the cross-checked row."""
    _require_positive("n", n)
    return IntPoly(row(n).values)


def r_via_geometric(n: int) -> IntPoly:
    """``sum over d | n of d*mu(n/d) * (1 + x**d + ... + x**(n-d))``."""
    _require_positive("n", n)
    acc = IntPoly()
    for d in divisors(n):
        w = d * mobius(n // d)
        if w:
            acc = acc + pr.scale(w, pr.geometric(d, n))
    return acc


def r_via_radical(n: int) -> IntPoly:
    """Lift the squarefree-kernel polynomial: ``(n/g) * R_g(x**(n/g))``, ``g = radical(n)``."""
    g = radical(n)
    return pr.scale(n // g, pr.compose_power(r_poly(g), n // g))


def _holder_form(n: int, weight) -> IntPoly:
    phi_n = totient(n)
    terms = [(Fraction(phi_n), pr.binomial(n))]
    for d in divisors(n):
        w = weight(d)
        if w:
            terms.append((Fraction(phi_n * w, totient(d)), pr.compose_power(psi_poly(d), n // d)))
    return rational_combination(terms)


def r_via_holder(n: int) -> IntPoly:
    """``phi(n) * (1 - x**n + sum over d | n of mu(d)/phi(d) * Psi_d(x**(n/d)))``."""
    _require_positive("n", n)
    return _holder_form(n, mobius)


# -- absolute-value polynomial -------------------------------------------


@lru_cache(maxsize=_CACHE)
def t_poly(n: int) -> IntPoly:
    """``sum_{k<n} |c_n(k)| x**k``."""
    _require_positive("n", n)
    return IntPoly([abs(v) for v in row(n).values])


def t_via_weights(n: int) -> IntPoly:
    """Geometric-sum form with weights ``mu(d)**2 * t_weight(d, n/d) / phi(d)``.

    Computes ``phi(n) * sum over d | n of w_d * (1 - x**n)/(1 - x**(n/d))``;
    the weighted sum is only integral as a whole.
    """
    _require_positive("n", n)
    phi_n = totient(n)
    terms = []
    for d in divisors(n):
        if mobius(d):
            w = phi_n * t_weight(d, n // d) / totient(d)
            terms.append((w, pr.geometric(n // d, n)))
    return rational_combination(terms)


def t_via_holder(n: int) -> IntPoly:
    """``phi(n) * (1 - x**n + sum over d | n of mu(d)**2/phi(d) * Psi_d(x**(n/d)))``."""
    _require_positive("n", n)
    return _holder_form(n, lambda d: mobius(d) ** 2)


def t_via_radical(n: int) -> IntPoly:
    g = radical(n)
    return pr.scale(n // g, pr.compose_power(t_poly(g), n // g))


# -- squared, shifted and extended variants ------------------------------


@lru_cache(maxsize=_CACHE)
def v_poly(n: int) -> IntPoly:
    """``sum_{k<n} c_n(k)**2 x**k``."""
    _require_positive("n", n)
    return IntPoly([v * v for v in row(n).values])


@lru_cache(maxsize=_CACHE)
def p_poly(n: int) -> IntPoly:
    """``sum_{k=1}^{n} c_n(k) x**(k-1)``, the right-hand side of the log-derivative identity."""
    _require_positive("n", n)
    vals = row(n).values
    return IntPoly(vals[1:] + (vals[0],))


@lru_cache(maxsize=_CACHE)
def q_poly(n: int) -> IntPoly:
    """``sum_{k=0}^{n} c_n(k) x**k = R_n(x) + phi(n) x**n``."""
    _require_positive("n", n)
    return r_poly(n) + pr.monomial(totient(n), n)


@dataclass(frozen=True)
class FamilyEntry:
    family: Family
    index: int
    poly: IntPoly

    def __post_init__(self):
        n, p = self.index, self.poly
        if self.family in (Family.R, Family.T):
            g = radical(n)
            if p.degree != n - n // g or p.nonzero_count() != g:
                raise ValueError(f"{self.family.name}_{n} has the wrong degree or support")
        elif self.family is Family.PHI:
            if p.leading != 1 or p.degree != totient(n):
                raise ValueError(f"Phi_{n} must be monic of degree phi({n})")
        elif self.family is Family.PSI:
            if set(p.coeffs) - {0, 1} or p.nonzero_count() != totient(n):
                raise ValueError(f"Psi_{n} must have phi({n}) unit coefficients")


_BUILDERS = {
    Family.PHI: phi_poly,
    Family.PSI: psi_poly,
    Family.R: r_poly,
    Family.T: t_poly,
    Family.V: v_poly,
    Family.P: p_poly,
    Family.Q: q_poly,
}


def entry(family: Family | str, n: int) -> FamilyEntry:
    family = Family(family)
    return FamilyEntry(family, n, _BUILDERS[family](n))
