"""Grid re-verification of the inequalities behind the solvability criterion.

Every check is a claim ``lhs > rhs`` (strict) or ``lhs >= rhs`` evaluated in
exact rationals. A tie on a strict claim is reported as an equality rather
than a failure so boundary behaviour stays visible.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Iterator

from codegree import catalog
from codegree.catalog import CatalogError, Family
from codegree.criterion import constant_a
from codegree.cyclotomic import phi
from codegree.exact import Ordering, is_prime, rat, rat_cmp, render_rational


@dataclass(frozen=True)
class GridConfig:
    q_max: int = 200
    n_max: int = 12
    m_max: int = 8
    f_max: int = 64
    p_max: int = 1000
    t_max: int = 50
    alt_max: int = 30
    k: Fraction = field(default_factory=constant_a)

    def __post_init__(self):
        object.__setattr__(self, "k", rat(self.k))
        if self.k <= 0:
            raise ValueError("k must be positive")
        minimums = {"q_max": 2, "n_max": 2, "m_max": 1, "f_max": 1, "p_max": 2, "t_max": 2, "alt_max": 5}
        for name, low in minimums.items():
            if getattr(self, name) < low:
                raise ValueError(f"{name} must be at least {low}")


@dataclass(frozen=True)
class Claim:
    """One instance of an inequality at fixed parameters."""

    claim: str
    params: dict
    lhs: Fraction
    rhs: Fraction
    strict: bool = True

    def compare(self) -> Ordering:
        return rat_cmp(self.lhs, self.rhs)

    def render(self) -> dict:
        return {
            "claim": self.claim,
            "params": dict(self.params),
            "lhs": render_rational(self.lhs),
            "relation": ">" if self.strict else ">=",
            "rhs": render_rational(self.rhs),
            "strict_claimed": self.strict,
        }


@dataclass
class VerifyReport:
    check_name: str
    cases_checked: int = 0
    strict_passes: int = 0
    equalities: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, c: Claim) -> None:
        self.cases_checked += 1
        verdict = c.compare()
        if verdict is Ordering.GREATER:
            self.strict_passes += 1
        elif verdict is Ordering.EQUAL:
            self.equalities.append(c.render())
        else:
            self.failures.append(c.render())

    @property
    def strict_equalities(self) -> list[dict]:
        """Ties on claims that asserted strict inequality."""
        return [e for e in self.equalities if e["strict_claimed"]]

    def ok(self, allow_equalities: bool = False) -> bool:
        if self.failures:
            return False
        return allow_equalities or not self.strict_equalities

    def to_dict(self) -> dict:
        return asdict(self)


def _collect(name: str, claims: Iterable[Claim], notes: Iterable[str] = ()) -> VerifyReport:
    report = VerifyReport(name)
    for c in sorted(claims, key=lambda c: (c.claim, sorted(c.params.items()))):
        report.add(c)
    report.notes.extend(notes)
    return report


# ---------------------------------------------------------------- grids


def primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def prime_powers(limit: int, start: int = 2) -> list[int]:
    out = []
    for p in primes_up_to(limit):
        q = p
        while q <= limit:
            if q >= start:
                out.append(q)
            q *= p
    return sorted(out)


def _descriptors(make: Callable[[], catalog.GroupDescriptor]) -> catalog.GroupDescriptor | None:
    try:
        return make()
    except CatalogError:
        return None


def table1_grid(cfg: GridConfig) -> Iterator[catalog.GroupDescriptor]:
    """All descriptors with a tabulated theta_1 degree inside the grid, in a fixed order."""
    qs = prime_powers(cfg.q_max)
    ranked = [
        (Family.A, 2),
        (Family.TWISTED_A, 2),
        (Family.B, 2),
        (Family.C, 2),
        (Family.D, 4),
        (Family.TWISTED_D, 4),
    ]
    for fam, low in ranked:
        for n in range(low, cfg.n_max + 1):
            for q in qs:
                d = _descriptors(lambda: catalog.lie(fam, n=n, q=q))
                if d is not None:
                    yield d
    for fam in (Family.TRIALITY_D4, Family.F4, Family.E6, Family.TWISTED_E6, Family.E7, Family.E8):
        for q in qs:
            yield catalog.lie(fam, q=q)
    for fam in (Family.SUZUKI, Family.REE_F4):
        for m in range(1, cfg.m_max + 1):
            yield catalog.lie(fam, Q=2 ** (2 * m + 1))


# ---------------------------------------------------------------- extendible degrees


def _lie_params(d: catalog.GroupDescriptor) -> dict:
    out = {"group": d.label}
    for key in ("n", "q", "Q"):
        value = getattr(d, key)
        if value is not None:
            out[key] = value
    return out


def verify_lemma_p1(cfg: GridConfig = GridConfig()) -> VerifyReport:
    """Every non-excluded simple group has an extendible degree with ``k|S| > deg^3``.

    Lie-type groups are checked in the stronger form ``|S| > theta_1(1)^3``.
    """
    claims = []
    for d in table1_grid(cfg):
        if d.family is Family.A and d.n == 2 and d.q == 2:
            degree = 3  # L3(2) has an Aut-extendible character of degree 3
        else:
            degree = catalog.theta1_degree(d)
        claims.append(Claim("lie: |S| > theta1^3", _lie_params(d), Fraction(catalog.order_value(d)), Fraction(degree**3)))
    for name in catalog.sporadic_names() + ["Tits"]:
        if name == "Fi22":
            continue
        row = catalog.sporadic_row(name)
        claims.append(
            Claim("sporadic: k|S| > deg^3", {"group": name, "degree": row.min_ext_degree}, cfg.k * row.order.value, Fraction(row.min_ext_degree**3))
        )
    for n in range(5, cfg.alt_max + 1):
        theta = catalog.alternating_theta(n)
        claims.append(Claim("alternating: k|A_n| > deg^3", {"n": n, "degree": theta}, cfg.k * (factorial(n) // 2), Fraction(theta**3)))
    return _collect("p1", claims, [f"k = {render_rational(cfg.k)}"])


def verify_an_algebra(cfg: GridConfig = GridConfig()) -> VerifyReport:
    """The reduced bounds used for the linear groups A_n(q)."""
    claims = []
    for n in range(2, cfg.n_max + 1):
        for q in prime_powers(cfg.q_max):
            if n == 2 and q == 2:
                continue
            d = catalog.lie(Family.A, n=n, q=q)
            direct = Fraction(catalog.order_value(d), catalog.theta1_degree(d) ** 3)
            params = {"n": n, "q": q}
            if n >= 3:
                bound = Fraction(q ** ((n - 1) ** 2 - 4) * (q - 1) ** 2)
                claims.append(Claim("n>=3: q^((n-1)^2-4)(q-1)^2 >= 1", params, bound, Fraction(1), strict=False))
            else:
                bound = Fraction(q**3 - 1, (q + 1) ** 2)
                claims.append(Claim("n=2: q^3-1 > (q+1)^2", params, Fraction(q**3 - 1), Fraction((q + 1) ** 2)))
            claims.append(Claim(f"n{'>=3' if n >= 3 else '=2'}: |S|/theta1^3 >= bound", params, direct, bound, strict=False))
    return _collect("an-algebra", claims)


def verify_lemma_arith(cfg: GridConfig = GridConfig()) -> VerifyReport:
    """``q = p^f = 3 mod 6`` implies ``f^3 < q``, scanned over p and f."""
    claims = []
    primes_seen = set()
    for p in primes_up_to(cfg.p_max):
        for f in range(1, cfg.f_max + 1):
            q = p**f
            if q % 6 != 3:
                continue
            primes_seen.add(p)
            claims.append(Claim("f^3 < q", {"p": p, "f": f, "q": q}, Fraction(q), Fraction(f**3)))
    notes = [f"qualifying primes: {sorted(primes_seen)}"]
    if primes_seen == {3}:
        notes.append("q = 3 mod 6 forces p = 3")
    return _collect("arith", claims, notes)


def verify_lemma_simple(cfg: GridConfig = GridConfig()) -> VerifyReport:
    """Squared form of the contradiction ruling out ``t >= 2`` simple factors."""
    claims = [Claim("sqrt|S| > 7 with |S| >= 60", {}, Fraction(60), Fraction(49))]
    for t in range(2, cfg.t_max + 1):
        claims.append(Claim("t^4 < 60^(2t-3)", {"t": t}, Fraction(60 ** (2 * t - 3)), Fraction(t**4)))
    return _collect("simple", claims)


# ---------------------------------------------------------------- minimal normal subgroup cases


def _fi22_order() -> int:
    return catalog.sporadic_row("Fi22").order.value


def theorem_case_claims(cfg: GridConfig, cases: Iterable[str] = ("1", "2a", "2b", "3", "4")) -> list[Claim]:
    k = cfg.k
    cases = set(cases)
    claims = []
    qs = prime_powers(cfg.q_max)
    if "1" in cases:
        for q in (q for q in qs if q >= 4):
            n_order = catalog.order_value(catalog.lie(Family.A, n=1, q=q))
            claims.append(Claim("(1) k*q(q^2-1) > q^3", {"q": q}, k * q * (q * q - 1), Fraction(q**3)))
            claims.append(Claim("(1) k*2|N| > q^3", {"q": q}, k * 2 * n_order, Fraction(q**3)))
    for q in (q for q in qs if q >= 3):
        d = catalog.lie(Family.G2, q=q)
        n_order = catalog.order_value(d)
        bound = catalog.out_bound(d)
        if q % 6 != 3 and "2a" in cases:
            claims.append(Claim("(2a) k|N| > (Out*(q^3+1))^3", {"q": q, "out": bound}, k * n_order, Fraction((bound * (q**3 + 1)) ** 3)))
        if q % 6 == 3 and "2b" in cases:
            degree = phi(3, q) * phi(6, q)
            claims.append(Claim("(2b) k|N| > (2f*Phi3*Phi6)^3", {"q": q, "out": bound}, k * n_order, Fraction((bound * degree) ** 3)))
    if "2b" in cases:
        claims.append(Claim("(2b) q=3: 2k*3^5(3^6-1) > 13^3*7^3", {"q": 3}, 2 * k * 3**5 * (3**6 - 1), Fraction(13**3 * 7**3)))
    if "3" in cases:
        for m in range(1, cfg.m_max + 1):
            d = catalog.lie(Family.REE_G2, Q=3 ** (2 * m + 1))
            Q = d.Q
            bound = catalog.out_bound(d)
            claims.append(
                Claim("(3) k|N| > ((2m+1)(Q^2-Q+1))^3", {"m": m, "Q": Q}, k * catalog.order_value(d), Fraction((bound * (Q * Q - Q + 1)) ** 3))
            )
    if "4" in cases:
        fi22 = catalog.sporadic("Fi22")
        chi = catalog.out_bound(fi22) * 78
        claims.append(Claim("(4) k*2|Fi22| > 156^3", {"group": "Fi22", "degree": chi}, k * 2 * _fi22_order(), Fraction(chi**3)))
    return claims


def verify_theorem_cases(cfg: GridConfig = GridConfig(), cases: Iterable[str] = ("1", "2a", "2b", "3", "4")) -> VerifyReport:
    """Cases where the minimal normal subgroup is A1, G2, 2G2 or Fi22."""
    return _collect("cases", theorem_case_claims(cfg, cases), [f"k = {render_rational(cfg.k)}"])


def _g2_degree(q: int) -> int:
    r = q % 6
    if r in (1, 4):
        return phi(2, q) * phi(6, q)
    if r in (2, 5):
        return phi(1, q) * phi(3, q)
    return phi(3, q) * phi(6, q)


def verify_simple_g_cases(cfg: GridConfig = GridConfig()) -> VerifyReport:
    """The excluded families when G itself is simple."""
    k = cfg.k
    claims = []
    qs = prime_powers(cfg.q_max)
    for q in (q for q in qs if q >= 4):
        g = catalog.order_value(catalog.lie(Family.A, n=1, q=q))
        p = {"q": q}
        claims.append(Claim("A1: k|G| > q(q^2-1)", p, k * g, Fraction(q * (q * q - 1))))
        claims.append(Claim("A1: q(q^2-1) > (q-1)^3", p, Fraction(q * (q * q - 1)), Fraction((q - 1) ** 3)))
        claims.append(Claim("A1: k|G| > (q-1)^3", p, k * g, Fraction((q - 1) ** 3)))
    for q in (q for q in qs if q >= 3):
        g = catalog.order_value(catalog.lie(Family.G2, q=q))
        p = {"q": q}
        big = phi(3, q) * phi(6, q)
        claims.append(Claim("G2: 3(q^2-1)^4 > q^6-1", p, Fraction(3 * (q * q - 1) ** 4), Fraction(q**6 - 1)))
        claims.append(
            Claim(
                "G2: 3|G|/(Phi3Phi6)^3 > 3(q^2-1)^4/(q^6-1)",
                p,
                Fraction(3 * g, big**3),
                Fraction(3 * (q * q - 1) ** 4, q**6 - 1),
            )
        )
        claims.append(Claim("G2: Phi3Phi6 > Phi2Phi6", p, Fraction(big), Fraction(phi(2, q) * phi(6, q))))
        claims.append(Claim("G2: Phi2Phi6 > Phi1Phi3", p, Fraction(phi(2, q) * phi(6, q)), Fraction(phi(1, q) * phi(3, q))))
        claims.append(Claim("G2: k|G| > (Phi3Phi6)^3", p, k * g, Fraction(big**3)))
        claims.append(Claim("G2: k|G| > deg(q mod 6)^3", p, k * g, Fraction(_g2_degree(q) ** 3)))
    for m in range(1, cfg.m_max + 1):
        Q = 3 ** (2 * m + 1)
        g = catalog.order_value(catalog.lie(Family.REE_G2, Q=Q))
        p = {"m": m, "Q": Q}
        claims.append(Claim("2G2: (Q-1)(Q+1)^3 > Q^3-1", p, Fraction((Q - 1) * (Q + 1) ** 3), Fraction(Q**3 - 1)))
        claims.append(Claim("2G2: k|G| > (Q^2-Q+1)^3", p, k * g, Fraction((Q * Q - Q + 1) ** 3)))
    claims.append(Claim("Fi22: k|G| > 78^3", {"group": "Fi22"}, k * _fi22_order(), Fraction(78**3)))
    return _collect("simple-g", claims, [f"k = {render_rational(cfg.k)}"])


CHECKS: dict[str, Callable[[GridConfig], VerifyReport]] = {
    "p1": verify_lemma_p1,
    "an-algebra": verify_an_algebra,
    "arith": verify_lemma_arith,
    "simple": verify_lemma_simple,
    "cases": verify_theorem_cases,
    "simple-g": verify_simple_g_cases,
}


def verify_all(cfg: GridConfig = GridConfig()) -> list[VerifyReport]:
    return [run(cfg) for run in CHECKS.values()]


__all__ = [
    "CHECKS",
    "Claim",
    "GridConfig",
    "VerifyReport",
    "prime_powers",
    "verify_all",
    "verify_an_algebra",
    "verify_lemma_arith",
    "verify_lemma_p1",
    "verify_lemma_simple",
    "verify_simple_g_cases",
    "verify_theorem_cases",
]
