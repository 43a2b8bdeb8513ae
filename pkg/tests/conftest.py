import cmath
import json
import math
from fractions import Fraction
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

_ACCEPTANCE: list[tuple[str, bool]] = []


def record_acceptance(label: str, ok: bool) -> None:
    _ACCEPTANCE.append((label, ok))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")


@pytest.fixture(scope="session")
def golden_tables():
    """Expanded coefficient sequences of R_n and T_n, 1 <= n <= 20, transcribed once."""
    raw = json.loads((DATA / "golden_tables.json").read_text())
    return {fam: {int(n): c for n, c in rows.items()} for fam, rows in raw.items()}


# -- independent oracles (deliberately naive, sharing no code with the package) --


def naive_factor(n):
    out, d = [], 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def naive_totient(n):
    return sum(1 for j in range(1, n + 1) if math.gcd(j, n) == 1)


def naive_mobius(n):
    fac = naive_factor(n)
    if any(e > 1 for _, e in fac):
        return 0
    return (-1) ** len(fac)


def root_sum(n, k):
    """c_n(k) straight from the definition, as a float."""
    return sum(
        math.cos(2 * math.pi * j * k / n) for j in range(1, n + 1) if math.gcd(j, n) == 1
    )


def numeric_cyclotomic(n):
    """Coefficients of prod (x - eta) over primitive n-th roots, rounded."""
    coeffs = [1 + 0j]
    for j in range(1, n + 1):
        if math.gcd(j, n) == 1:
            eta = cmath.exp(2j * math.pi * j / n)
            nxt = [0j] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] += c
                nxt[i] -= eta * c
            coeffs = nxt
    return [round(c.real) for c in coeffs]


def fraction_divmod(a, b):
    """Long division over Q on plain coefficient lists (lowest degree first)."""
    a = [Fraction(c) for c in a]
    while a and a[-1] == 0:
        a.pop()
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for i, v in enumerate(b):
            a[shift + i] -= c * v
        while a and a[-1] == 0:
            a.pop()
    return q, a
