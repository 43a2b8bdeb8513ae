"""Ramanujan sums c_n(k), evaluated three independent ways.

* :func:`c_mobius` sums ``d * mu(n/d)`` over the common divisors of n and k.
* :func:`c_holder` uses the closed form ``phi(n) mu(n/g) / phi(n/g)`` with
  ``g = gcd(n, k)``.
* :func:`c_multiplicative` multiplies the prime-power values together.

Every public function reduces ``k`` modulo ``n`` first, so any signed
integer is accepted.  :func:`row` builds the whole period ``c_n(0..n-1)``
with a vectorised version of each method and, unless cross-checking is
switched off, insists that all three agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numtheory import _require_positive, divisors, factorize, mobius, totient

__all__ = [
    "CrossCheckError",
    "RamanujanRow",
    "c_mobius",
    "c_holder",
    "c_multiplicative",
    "ramanujan_sum",
    "row",
    "row_mobius",
    "row_holder",
    "row_multiplicative",
    "cross_check_enabled",
    "set_cross_check",
]

_CROSS_CHECK = True


class CrossCheckError(AssertionError):
    """Two evaluation methods disagreed; always an implementation bug."""

    def __init__(self, n: int, k: int, values: dict[str, int]):
        self.n, self.k, self.values = n, k, values
        super().__init__(f"c_{n}({k}) disagrees across methods: {values}")


def set_cross_check(enabled: bool) -> bool:
    """Toggle the triple-method comparison inside :func:`row`; returns the old setting."""
    global _CROSS_CHECK
    old = _CROSS_CHECK
    _CROSS_CHECK = bool(enabled)
    return old


def cross_check_enabled() -> bool:
    return _CROSS_CHECK


def c_mobius(n: int, k: int) -> int:
    _require_positive("n", n)
    g = math.gcd(n, k % n)  # gcd(n, 0) == n
    return sum(d * mobius(n // d) for d in divisors(g))


def c_holder(n: int, k: int) -> int:
    _require_positive("n", n)
    g = math.gcd(n, k % n)
    m = n // g
    value = Fraction(totient(n) * mobius(m), totient(m))
    if value.denominator != 1:
        raise ArithmeticError(f"closed form for c_{n}({k}) is not integral: {value}")
    return value.numerator


def _prime_power_value(p: int, a: int, k: int) -> int:
    q = p ** (a - 1)
    if k % (q * p) == 0:
        return q * p - q
    if k % q == 0:
        return -q
    return 0


def c_multiplicative(n: int, k: int) -> int:
    _require_positive("n", n)
    k %= n
    value = 1
    for p, a in factorize(n):
        value *= _prime_power_value(p, a, k)
        if not value:
            break
    return value


ramanujan_sum = c_multiplicative


def row_mobius(n: int) -> list[int]:
    """``c_n(0..n-1)`` by adding ``d*mu(n/d)`` onto every multiple of each d | n."""
    _require_positive("n", n)
    vals = [0] * n
    for d in divisors(n):
        w = d * mobius(n // d)
        if w:
            for k in range(0, n, d):
                vals[k] += w
    return vals


def row_holder(n: int) -> list[int]:
    """``c_n(0..n-1)`` by the gcd closed form, one evaluation per divisor class."""
    _require_positive("n", n)
    phi_n = totient(n)
    by_gcd = {}
    for g in divisors(n):
        m = n // g
        num, den = phi_n * mobius(m), totient(m)
        if num % den:
            raise ArithmeticError(f"closed form for c_{n} at gcd {g} is not integral")
        by_gcd[g] = num // den
    gcd = math.gcd
    return [by_gcd[gcd(n, k)] for k in range(n)]


def row_multiplicative(n: int) -> list[int]:
    """``c_n(0..n-1)`` as the pointwise product of the periodic prime-power rows."""
    _require_positive("n", n)
    vals = [1] * n
    for p, a in factorize(n):
        q = p**a
        local = [_prime_power_value(p, a, k) for k in range(q)]
        tiled = local * (n // q)
        vals = [u * v for u, v in zip(vals, tiled)]
    return vals


@dataclass(frozen=True)
class RamanujanRow:
    """One full period of Ramanujan sums, ``values[k] = c_n(k)``."""

    modulus: int
    values: tuple[int, ...]

    def __post_init__(self):
        n, vals = self.modulus, self.values
        if len(vals) != n:
            raise ValueError(f"row for n={n} has {len(vals)} values")
        if vals[0] != totient(n):
            raise ValueError(f"c_{n}(0) must equal phi({n})")
        mu = mobius(n)
        for k in range(1, n):
            if vals[k] != vals[n - k]:
                raise ValueError(f"row for n={n} is not symmetric at k={k}")
            if math.gcd(k, n) == 1 and vals[k] != mu:
                raise ValueError(f"c_{n}({k}) must equal mu({n}) for coprime k")
        if n > 1 and sum(vals):
            raise ValueError(f"row for n={n} does not sum to zero")

    def __len__(self):
        return self.modulus

    def __getitem__(self, k: int) -> int:
        return self.values[k % self.modulus]

    def __iter__(self):
        return iter(self.values)


@lru_cache(maxsize=512)
def _row(n: int, checked: bool) -> RamanujanRow:
    vals = row_multiplicative(n)
    if checked:
        others = {"mobius": row_mobius(n), "holder": row_holder(n)}
        for name, alt in others.items():
            if alt != vals:
                k = next(i for i, (u, v) in enumerate(zip(vals, alt)) if u != v)
                raise CrossCheckError(
                    n, k, {"multiplicative": vals[k], **{m: o[k] for m, o in others.items()}}
                )
    return RamanujanRow(n, tuple(vals))


def row(n: int, checked: bool | None = None) -> RamanujanRow:
    """Cross-checked row ``c_n(0), ..., c_n(n-1)``.

    ``checked=None`` follows the module setting (see :func:`set_cross_check`).
    A disagreement raises :class:`CrossCheckError` naming the offending k.
    """
    _require_positive("n", n)
    return _row(n, _CROSS_CHECK if checked is None else bool(checked))
