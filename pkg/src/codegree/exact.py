"""Exact integer, factored-integer and rational arithmetic.

Every verdict in the package is reached through the helpers here; nothing
downstream touches floating point except for display.
"""

from __future__ import annotations

import enum
import os
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from codegree import _pykernels

if os.environ.get("CODEGREE_PURE_PYTHON") == "1":
    _ckernels = None
else:
    try:
        from codegree import _kernels as _ckernels
    except ImportError:  # extension not built
        _ckernels = None

BACKEND = "python" if _ckernels is None else "compiled"

_WORD = 1 << 64

ExactRational = Fraction
RationalLike = Union[int, Fraction]


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    @property
    def symbol(self) -> str:
        return {"less": "<", "equal": "=", "greater": ">"}[self.value]


# Miller-Rabin with the first 13 primes as witnesses is exact below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``n < 3.3e24``."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} exceeds the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_factor(n: int) -> list[tuple[int, int]]:
    if _ckernels is not None and n < _WORD:
        return _ckernels.trial_factor(n)
    return _pykernels.trial_factor(n)


def p_valuation(n: int, p: int) -> int:
    """Largest ``e`` with ``p**e`` dividing ``n``."""
    if _ckernels is not None and n < _WORD and p < _WORD:
        return _ckernels.p_valuation(n, p)
    return _pykernels.p_valuation(n, p)


class FactoredInteger:
    """A positive integer stored as its prime factorization.

    ``factors`` maps prime to exponent; the empty mapping is 1. Instances are
    immutable and compare structurally.
    """

    __slots__ = ("_items",)

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = dict(factors)
        for p, e in items.items():
            if not isinstance(p, int) or not isinstance(e, int):
                raise TypeError("primes and exponents must be integers")
            if e < 0:
                raise ValueError(f"negative exponent {e} for {p}")
            if e and not is_prime(p):
                raise ValueError(f"{p} is not prime")
        self._items = tuple(sorted((p, e) for p, e in items.items() if e))

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._items)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self._items)

    def exponent(self, p: int) -> int:
        return dict(self._items).get(p, 0)

    @property
    def value(self) -> int:
        out = 1
        for p, e in self._items:
            out *= p**e
        return out

    def __int__(self) -> int:
        return self.value

    def __mul__(self, other: FactoredInteger) -> FactoredInteger:
        if not isinstance(other, FactoredInteger):
            return NotImplemented
        merged = dict(self._items)
        for p, e in other._items:
            merged[p] = merged.get(p, 0) + e
        return FactoredInteger(merged)

    def __pow__(self, k: int) -> FactoredInteger:
        if k < 0:
            raise ValueError("negative powers leave the positive integers")
        return FactoredInteger({p: e * k for p, e in self._items})

    def divides(self, other: FactoredInteger) -> bool:
        theirs = dict(other._items)
        return all(theirs.get(p, 0) >= e for p, e in self._items)

    def __truediv__(self, other: FactoredInteger) -> FactoredInteger:
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        mine = dict(self._items)
        for p, e in other._items:
            mine[p] -= e
        return FactoredInteger(mine)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FactoredInteger):
            return self._items == other._items
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._items)

    def __str__(self) -> str:
        if not self._items:
            return "1"
        return "*".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self._items)

    def __repr__(self) -> str:
        return f"FactoredInteger({self.factors!r})"

    @classmethod
    def parse(cls, text: str) -> FactoredInteger:
        """Parse the canonical rendering, e.g. ``2^6*3^2*19``."""
        text = text.strip()
        if text == "1":
            return cls()
        if not re.fullmatch(r"\d+(\^\d+)?(\*\d+(\^\d+)?)*", text):
            raise ValueError(f"malformed factorization {text!r}")
        seen: dict[int, int] = {}
        last = 0
        for part in text.split("*"):
            base, _, exp = part.partition("^")
            p, e = int(base), int(exp) if exp else 1
            if p <= last:
                raise ValueError(f"primes not strictly increasing in {text!r}")
            if e < 1:
                raise ValueError(f"zero exponent in {text!r}")
            last = p
            seen[p] = e
        return cls(seen)


def factorize(n: int) -> FactoredInteger:
    """Prime factorization by wheel trial division."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n!r}")
    return FactoredInteger(_trial_factor(n))


def fi_mul(a: FactoredInteger, b: FactoredInteger) -> FactoredInteger:
    return a * b


def fi_value(a: FactoredInteger) -> int:
    return a.value


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, f)`` with ``q == p**f`` or None if ``q`` is not a prime power."""
    if q < 2:
        return None
    fi = factorize(q)
    if len(fi.primes) != 1:
        return None
    ((p, f),) = fi.factors.items()
    return p, f


def p_part(n: int, p: int) -> int:
    return p ** p_valuation(n, p)


def rat(x: RationalLike | str) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rat_cmp(x: RationalLike, y: RationalLike) -> Ordering:
    """Compare two rationals by exact cross-multiplication."""
    x, y = rat(x), rat(y)
    lhs = x.numerator * y.denominator
    rhs = y.numerator * x.denominator
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL


_RATIONAL_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse ``num/den`` or a bare integer; decimals are rejected."""
    m = _RATIONAL_RE.fullmatch(text)
    if not m:
        raise ValueError(f"expected an integer or num/den, got {text!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(num, den)


def render_rational(x: RationalLike) -> str:
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x: RationalLike, digits: int = 6) -> str:
    """Truncated decimal expansion by long division; display only."""
    x = rat(x)
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    whole, rem = divmod(num, den)
    out = []
    for _ in range(digits):
        rem *= 10
        d, rem = divmod(rem, den)
        out.append(str(d))
    return f"{sign}{whole}." + "".join(out) if digits else f"{sign}{whole}"
