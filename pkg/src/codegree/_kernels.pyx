# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled trial-division kernel for machine-word integers."""

ctypedef unsigned long long u64

cdef int[8] WHEEL = [4, 2, 4, 2, 4, 6, 2, 6]


def trial_factor(u64 n):
    """Factor ``1 <= n < 2**64`` into a list of ``(prime, exponent)`` pairs."""
    cdef u64 d
    cdef int e, i
    out = []
    if n == 0:
        raise ValueError("trial_factor needs n >= 1")
    for d in (2, 3, 5):
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
    d = 7
    i = 0
    while d <= n // d:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += WHEEL[i]
        i = (i + 1) & 7
    if n > 1:
        out.append((n, 1))
    return out


def p_valuation(u64 n, u64 p):
    """Exponent of ``p`` in ``n`` for machine-word inputs."""
    cdef int e = 0
    if n == 0 or p < 2:
        raise ValueError("p_valuation needs n >= 1 and p >= 2")
    while n % p == 0:
        n //= p
        e += 1
    return e
