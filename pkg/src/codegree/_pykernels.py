"""Pure-Python twins of the compiled kernels in ``_kernels.pyx``.

These accept unbounded integers; the compiled versions are limited to
machine words and are preferred when the argument fits.
"""

from __future__ import annotations

from math import isqrt

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def trial_factor(n: int) -> list[tuple[int, int]]:
    if n < 1:
        raise ValueError("trial_factor needs n >= 1")
    out = []
    for d in (2, 3, 5):
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
    d, i = 7, 0
    limit = isqrt(n)
    while d <= limit:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
            limit = isqrt(n)
        d += _WHEEL[i]
        i = (i + 1) & 7
    if n > 1:
        out.append((n, 1))
    return out


def p_valuation(n: int, p: int) -> int:
    if n < 1 or p < 2:
        raise ValueError("p_valuation needs n >= 1 and p >= 2")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
