"""Arithmetic functions on the positive integers.

Everything here is a pure function of its integer arguments.  Factorizations
are cached, so repeated calls on the same ``n`` (which the polynomial
constructors make constantly) cost a dictionary lookup.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "OutOfRangeError",
    "is_prime",
    "factorize",
    "mobius",
    "totient",
    "radical",
    "omega",
    "divisors",
    "is_squarefree",
    "t_weight",
    "primes_up_to",
]

Factorization = tuple[tuple[int, int], ...]

MR_LIMIT = 1 << 64
# Deterministic Miller-Rabin witnesses for every n < 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 1 << 16
_WHEEL_STEPS = (4, 2, 4, 2, 4, 6, 2, 6)  # gaps between residues coprime to 30, from 7


class OutOfRangeError(ValueError):
    """Input is outside the range where results are guaranteed exact."""


def _require_positive(name: str, n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``n < 2**64``.

    Larger inputs raise :class:`OutOfRangeError` instead of falling back to a
    probabilistic answer.
    """
    if n < 2:
        return False
    if n >= MR_LIMIT:
        raise OutOfRangeError(f"primality of {n} is out of supported range (< 2**64)")
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _wheel():
    yield from (2, 3, 5)
    d = 7
    while True:
        for step in _WHEEL_STEPS:
            yield d
            d += step


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"no factor found for {n}")  # pragma: no cover


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` as ``((p1, a1), (p2, a2), ...)``, primes ascending.

    Trial division over a mod-30 wheel handles every prime below 2**16; any
    cofactor left over is finished with Pollard-Brent, which requires the
    cofactor to be below 2**64.

    >>> factorize(12)
    ((2, 2), (3, 1))
    >>> factorize(1)
    ()
    """
    _require_positive("n", n)
    found: dict[int, int] = {}
    m = n
    for p in _wheel():
        if p * p > m or p >= _TRIAL_LIMIT:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        if m < _TRIAL_LIMIT * _TRIAL_LIMIT:
            found[m] = found.get(m, 0) + 1
        elif m >= MR_LIMIT:
            raise OutOfRangeError(
                f"cofactor {m} of {n} is out of supported range (< 2**64)"
            )
        else:
            _split(m, found)
    return tuple(sorted(found.items()))


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def radical(n: int) -> int:
    """Product of the distinct primes dividing ``n`` (the squarefree kernel)."""
    return math.prod(p for p, _ in factorize(n))


def omega(n: int) -> int:
    """Number of distinct prime factors."""
    return len(factorize(n))


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


@lru_cache(maxsize=1 << 14)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    return list(_divisors(n))


def t_weight(k: int, n: int) -> Fraction:
    """Multiplicative weight ``prod over p | n, p not dividing k of (1 - 1/(p-1))``.

    This is the weight attached to each divisor in the geometric-sum
    expansion of the absolute-value polynomial.  It vanishes as soon as
    ``n`` is even and ``k`` odd, because the factor at ``p = 2`` is zero.
    """
    _require_positive("k", k)
    _require_positive("n", n)
    value = Fraction(1)
    for p, _ in factorize(n):
        if k % p:
            value *= Fraction(p - 2, p - 1)
    return value


def primes_up_to(limit: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]
