"""Dense univariate polynomials over the integers.

:class:`IntPoly` stores coefficients lowest degree first in an immutable
tuple with no trailing zeros; the zero polynomial is the empty tuple and has
degree ``-inf``.  Coefficients are Python ints, so nothing ever overflows.

Multiplication picks between a sparse schoolbook loop, which suits the
mostly-zero polynomials that radical lifting produces, and Kronecker
substitution, which packs both operands into big integers and lets CPython's
Karatsuba multiply them.  Division is ordinary long division restricted to
steps that stay inside the integers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

__all__ = [
    "IntPoly",
    "InexactDivisionError",
    "add",
    "sub",
    "mul",
    "scale",
    "divide_exact",
    "divides",
    "eval_int",
    "eval_rational",
    "compose_power",
    "negate_var",
    "shift",
    "geometric",
    "derivative",
    "monomial",
    "binomial",
    "format_poly",
    "parse_poly",
]

_SCHOOLBOOK_TERMS = 32
_KRONECKER_MIN_WORK = 1 << 12


class InexactDivisionError(ArithmeticError):
    """Long division would leave the integers (leading coefficient does not divide)."""


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


class IntPoly:
    """Immutable polynomial with integer coefficients, index i holding x**i."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        if not set(map(type, coeffs)) <= {int}:
            bad = next(c for c in coeffs if type(c) is not int)
            raise TypeError(f"coefficients must be ints, got {bad!r}")
        object.__setattr__(self, "coeffs", _strip(coeffs))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> IntPoly:
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[int]:
        """Exponents carrying a nonzero coefficient."""
        return [i for i, c in enumerate(self.coeffs) if c]

    def nonzero_count(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coeffs))
        return self._hash

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __rsub__(self, other):
        return sub(_coerce(other), self)

    def __neg__(self):
        return IntPoly._raw(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return scale(other, self)
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __call__(self, x0):
        if isinstance(x0, Fraction):
            return eval_rational(self, x0)
        return eval_int(self, x0)


def _coerce(value) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return IntPoly([value])
    raise TypeError(f"cannot use {type(value).__name__} as an IntPoly")


def monomial(c: int, k: int) -> IntPoly:
    """``c * x**k``."""
    if k < 0:
        raise ValueError("monomial exponent must be >= 0")
    if not c:
        return IntPoly()
    return IntPoly._raw((0,) * k + (c,))


def binomial(k: int, sign: int = -1, constant: int = 1) -> IntPoly:
    """``constant + sign * x**k``; the default is ``1 - x**k``."""
    coeffs = [0] * (k + 1)
    coeffs[0] += constant
    coeffs[k] += sign
    return IntPoly(coeffs)


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    out = [p + q for p, q in zip(x, y)]
    out.extend(x[len(y) :])
    return IntPoly._raw(_strip(out))


def sub(a: IntPoly, b: IntPoly) -> IntPoly:
    x, y = a.coeffs, b.coeffs
    n = max(len(x), len(y))
    x = x + (0,) * (n - len(x))
    y = y + (0,) * (n - len(y))
    return IntPoly._raw(_strip([p - q for p, q in zip(x, y)]))


def scale(c: int, a: IntPoly) -> IntPoly:
    if not c:
        return IntPoly()
    return IntPoly._raw(tuple([c * v for v in a.coeffs]))


def _mul_sparse(sparse: tuple[int, ...], dense: tuple[int, ...]) -> list[int]:
    out = [0] * (len(sparse) + len(dense) - 1)
    m = len(dense)
    for i, c in enumerate(sparse):
        if c:
            out[i : i + m] = [u + c * v for u, v in zip(out[i : i + m], dense)]
    return out


def _pack(coeffs: tuple[int, ...], width: int) -> int:
    pos = b"".join((c if c > 0 else 0).to_bytes(width, "little") for c in coeffs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(width, "little") for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _mul_kronecker(x: tuple[int, ...], y: tuple[int, ...]) -> list[int]:
    bound = max(map(abs, x)) * max(map(abs, y)) * min(len(x), len(y))
    # two spare bits: one for the sign bias, one of headroom
    width = (bound.bit_length() + 2 + 7) // 8
    n = len(x) + len(y) - 1
    half = 1 << (8 * width - 1)
    bias = int.from_bytes(half.to_bytes(width, "little") * n, "little")
    packed = (_pack(x, width) * _pack(y, width) + bias).to_bytes(n * width, "little")
    return [
        int.from_bytes(packed[i : i + width], "little") - half
        for i in range(0, n * width, width)
    ]


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    x, y = a.coeffs, b.coeffs
    if not x or not y:
        return IntPoly()
    nx = sum(1 for c in x if c)
    ny = sum(1 for c in y if c)
    if nx > ny:
        x, y, nx, ny = y, x, ny, nx
    if nx <= _SCHOOLBOOK_TERMS or nx * ny <= _KRONECKER_MIN_WORK:
        out = _mul_sparse(x, y)
    else:
        out = _mul_kronecker(x, y)
    return IntPoly._raw(_strip(out))


def divide_exact(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division ``a = b*q + r`` with ``deg r < deg b``, staying in Z[x].

    Raises :class:`InexactDivisionError` when some step would need a
    non-integer quotient coefficient, which happens exactly when ``b`` does
    not divide ``a`` over the integers and ``b`` is not monic up to sign.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    m = len(b.coeffs) - 1
    if len(rem) <= m:
        return IntPoly(), a
    lead = b.coeffs[-1]
    low = b.coeffs[:-1]
    terms = [(j, c) for j, c in enumerate(low) if c]
    sparse = len(terms) <= _SCHOOLBOOK_TERMS
    quot = [0] * (len(rem) - m)
    for i in range(len(rem) - 1, m - 1, -1):
        c = rem[i]
        if not c:
            continue
        q, r = divmod(c, lead)
        if r:
            raise InexactDivisionError(
                f"leading coefficient {lead} does not divide {c} at degree {i}"
            )
        quot[i - m] = q
        rem[i] = 0
        base = i - m
        if sparse:
            for j, v in terms:
                rem[base + j] -= q * v
        else:
            rem[base:i] = [u - q * v for u, v in zip(rem[base:i], low)]
    return IntPoly._raw(_strip(quot)), IntPoly._raw(_strip(rem[:m]))


def divides(b: IntPoly, a: IntPoly) -> bool:
    """True when ``b`` divides ``a`` in Z[x]."""
    try:
        _, r = divide_exact(a, b)
    except InexactDivisionError:
        return False
    return r.is_zero()


def eval_int(a: IntPoly, x0: int) -> int:
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * x0 + c
    return acc


def eval_rational(a: IntPoly, x0: Fraction) -> Fraction:
    """Exact value at a rational point, via homogenized integer Horner."""
    x0 = Fraction(x0)
    p, q = x0.numerator, x0.denominator
    acc = 0
    qpow = 1
    for c in reversed(a.coeffs):
        acc = acc * p + c * qpow
        qpow *= q
    # acc = q**deg * a(x0)
    deg = len(a.coeffs) - 1
    return Fraction(acc, q**deg) if deg >= 0 else Fraction(0)


def compose_power(a: IntPoly, m: int) -> IntPoly:
    """``a(x**m)``."""
    if m < 1:
        raise ValueError(f"substitution power must be >= 1, got {m}")
    if m == 1 or not a.coeffs:
        return a
    out = [0] * ((len(a.coeffs) - 1) * m + 1)
    out[::m] = a.coeffs
    return IntPoly._raw(tuple(out))


def negate_var(a: IntPoly) -> IntPoly:
    """``a(-x)``."""
    return IntPoly._raw(tuple(-c if i & 1 else c for i, c in enumerate(a.coeffs)))


def shift(a: IntPoly, k: int) -> IntPoly:
    """``x**k * a``."""
    if k < 0:
        raise ValueError("shift must be >= 0")
    if not a.coeffs or not k:
        return a
    return IntPoly._raw((0,) * k + a.coeffs)


def geometric(d: int, n: int) -> IntPoly:
    """``1 + x**d + x**(2d) + ... + x**(n-d)``, i.e. ``(1 - x**n) / (1 - x**d)``."""
    if d < 1:
        raise ValueError(f"step must be >= 1, got {d}")
    if n < d or n % d:
        raise ValueError(f"{d} does not divide {n}")
    out = [0] * (n - d + 1)
    out[::d] = [1] * (n // d)
    return IntPoly._raw(tuple(out))


def derivative(a: IntPoly) -> IntPoly:
    return IntPoly._raw(_strip([i * c for i, c in enumerate(a.coeffs)][1:]))


def _term(c: int, i: int, first: bool) -> str:
    mag = abs(c)
    if i == 0:
        body = str(mag)
    else:
        power = "x" if i == 1 else f"x^{i}"
        body = power if mag == 1 else f"{mag}{power}"
    if first:
        return ("-" if c < 0 else "") + body
    return (" - " if c < 0 else " + ") + body


def format_poly(a: IntPoly) -> str:
    """Ascending-power text form, e.g. ``2 - x - x^2``."""
    terms = [(i, c) for i, c in enumerate(a.coeffs) if c]
    if not terms:
        return "0"
    return "".join(_term(c, i, k == 0) for k, (i, c) in enumerate(terms))


def parse_poly(text: str) -> IntPoly:
    """Inverse of :func:`format_poly` (also accepts ``x^{12}`` and ``*``)."""
    s = text.replace(" ", "").replace("{", "").replace("}", "").replace("*", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        sign = -1 if s[pos] == "-" else 1
        pos += 1
        end = pos
        while end < len(s) and s[end] not in "+-":
            end += 1
        term = s[pos:end]
        if not term:
            raise ValueError(f"malformed polynomial text: {text!r}")
        if "x" in term:
            head, _, tail = term.partition("x")
            c = int(head) if head else 1
            exp = int(tail[1:]) if tail.startswith("^") else 1
            if tail and not tail.startswith("^"):
                raise ValueError(f"malformed term {term!r}")
        else:
            c, exp = int(term), 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * c
        pos = end
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] += c
    return IntPoly(out)
