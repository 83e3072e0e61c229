"""Integer polynomials, cyclotomic polynomials and the ring Q(sqrt(d)).

The quadratic ring is only needed for the Suzuki and Ree degree formulas,
where the field parameter is an odd power of 2 and ``q = sqrt(Q)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from codegree.exact import factorize, rat, render_rational


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of ``x**i``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division by a monic polynomial; stays inside Z[x]."""
        if not divisor.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        if len(rem) - 1 < d:
            return IntPolynomial([]), self
        quot = [0] * (len(rem) - d)
        dc = divisor.coeffs
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                quot[i - d] = c
                for j in range(d + 1):
                    rem[i - d + j] -= c * dc[j]
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: IntPolynomial) -> IntPolynomial:
        quot, rem = self.divmod_monic(divisor)
        if rem.coeffs:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return quot

    def __call__(self, x):
        return evaluate(self, x)

    def __str__(self) -> str:
        return render_poly(self)


def evaluate(p: IntPolynomial, x):
    """Horner evaluation at any ring element supporting ``*`` and ``+``."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def eval_poly(p: IntPolynomial, q: int) -> int:
    return evaluate(p, q)


def render_poly(p: IntPolynomial, var: str = "x") -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for power in range(p.degree, -1, -1):
        c = p.coeffs[power]
        if not c:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            mono = var if power == 1 else f"{var}^{power}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).factors.items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def totient(n: int) -> int:
    out = 1
    for p, e in factorize(n).factors.items():
        out *= (p - 1) * p ** (e - 1)
    return out


_CACHE: dict[int, IntPolynomial] = {}
_LOCK = threading.RLock()


def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, by exact division of ``x**n - 1``."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclotomic needs n >= 1, got {n!r}")
    with _LOCK:
        hit = _CACHE.get(n)
        if hit is not None:
            return hit
        poly = IntPolynomial.monomial(n) - IntPolynomial([1])
        for d in divisors(n)[:-1]:
            quot, rem = poly.divmod_monic(cyclotomic(d))
            # a remainder here means the construction itself is broken
            assert not rem.coeffs, f"Phi_{d} failed to divide while building Phi_{n}"
            poly = quot
        _CACHE[n] = poly
        return poly


def product_identity_check(n: int) -> bool:
    """True iff the product of Phi_d over d | n equals ``x**n - 1``."""
    prod = IntPolynomial([1])
    for d in divisors(n):
        prod = prod * cyclotomic(d)
    return prod == IntPolynomial.monomial(n) - IntPolynomial([1])


def phi(n: int, q):
    """Phi_n evaluated at ``q`` (an int or a QuadExpr)."""
    return evaluate(cyclotomic(n), q)


Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class QuadExpr:
    """``rational + surd * sqrt(radicand)`` with rational coefficients."""

    rational: Fraction
    surd: Fraction
    radicand: int

    def __post_init__(self):
        object.__setattr__(self, "rational", rat(self.rational))
        object.__setattr__(self, "surd", rat(self.surd))
        r = self.radicand
        if r < 2 or any(e > 1 for e in factorize(r).factors.values()):
            raise ValueError(f"radicand must be squarefree and > 1, got {r}")

    @classmethod
    def sqrt_of(cls, value: int, radicand: int) -> QuadExpr:
        """``sqrt(value)`` when ``value / radicand`` is a perfect square."""
        from math import isqrt

        if value % radicand:
            raise ValueError(f"sqrt({value}) is not a multiple of sqrt({radicand})")
        k = isqrt(value // radicand)
        if k * k * radicand != value:
            raise ValueError(f"sqrt({value}) is not a rational multiple of sqrt({radicand})")
        return cls(Fraction(0), Fraction(k), radicand)

    def _coerce(self, other) -> QuadExpr:
        if isinstance(other, QuadExpr):
            if other.radicand != self.radicand:
                raise ValueError("mixed radicands")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExpr(rat(other), Fraction(0), self.radicand)
        return NotImplemented

    def __add__(self, other) -> QuadExpr:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExpr(self.rational + o.rational, self.surd + o.surd, self.radicand)

    __radd__ = __add__

    def __neg__(self) -> QuadExpr:
        return QuadExpr(-self.rational, -self.surd, self.radicand)

    def __sub__(self, other) -> QuadExpr:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other) -> QuadExpr:
        return (-self) + other

    def __mul__(self, other) -> QuadExpr:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.rational, self.surd, o.rational, o.surd
        return QuadExpr(a * c + b * d * self.radicand, a * d + b * c, self.radicand)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExpr:
        return QuadExpr(self.rational, -self.surd, self.radicand)

    def __str__(self) -> str:
        return f"{render_rational(self.rational)} + {render_rational(self.surd)}*sqrt({self.radicand})"


def quad_to_integer(e: QuadExpr) -> int:
    """Collapse a ring element known to be a rational integer."""
    if e.surd != 0 or e.rational.denominator != 1:
        raise ValueError(f"{e} is not a rational integer")
    return e.rational.numerator
