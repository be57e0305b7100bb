"""Double-precision oracles: digamma, Hurwitz zeta, L(s, f), smooth sums,
and the order of vanishing of Dirichlet polynomials at s = 1.

None of this feeds a verdict.  It is here to corroborate the exact criterion.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import modarith
from .periodic import PeriodicFunction
from .tolerances import TOL

EULER_GAMMA = 0.57721566490153286061

# B_2, B_4, ..., B_20
_BERNOULLI = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30), Fraction(5, 66),
    Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510), Fraction(43867, 798),
    Fraction(-174611, 330),
]


def digamma(x: float) -> float:
    """psi(x) for x > 0: recurrence up to x >= 10, then the asymptotic series."""
    if x <= 0:
        raise ValueError(f"digamma needs x > 0, got {x}")
    shift = []
    while x < 10.0:
        shift.append(1.0 / x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for j, b in enumerate(_BERNOULLI[:7], 1):
        series += float(b) / (2 * j) * power
        power *= inv2
    return math.log(x) - 0.5 / x - series - math.fsum(shift)


def _values(f) -> list[float]:
    if isinstance(f, PeriodicFunction):
        return [float(v) for v in f.values]
    return [float(v) for v in f]


def L1_numeric(f) -> float:
    """L(1, f) = -(1/N) sum f(a) psi(a/N), valid when the period sum is zero."""
    vals = _values(f)
    n = len(vals)
    if isinstance(f, PeriodicFunction):
        if f.sum_over_period() != 0:
            raise ValueError("period sum is nonzero: L(1, f) diverges")
    elif abs(math.fsum(vals)) > 1e-12 * (1 + sum(map(abs, vals))):
        raise ValueError("period sum is nonzero: L(1, f) diverges")
    return -math.fsum(v * digamma(a / n) for a, v in enumerate(vals, 1) if v) / n


def hurwitz_zeta(s: float, x: float, terms: int = 20) -> float:
    """zeta(s, x) for real s > 1 and 0 < x <= 1 by Euler-Maclaurin summation."""
    if s <= 1:
        raise ValueError(f"hurwitz_zeta needs s > 1, got {s}")
    if not 0 < x <= 1:
        raise ValueError(f"hurwitz_zeta needs 0 < x <= 1, got {x}")
    head = math.fsum((n + x) ** -s for n in range(terms))
    a = terms + x
    tail = a ** (1 - s) / (s - 1) + 0.5 * a**-s
    # Bernoulli corrections: B_2j/(2j)! * s(s+1)...(s+2j-2) * a^(-s-2j+1)
    rising = s
    fact = 2.0
    term_pow = a ** (-s - 1)
    for j, b in enumerate(_BERNOULLI, 1):
        tail += float(b) / fact * rising * term_pow
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
        term_pow /= a * a
    return head + tail


def Ls_numeric(f, s: float) -> float:
    """L(s, f) = N^-s sum f(a) zeta(s, a/N) for real s > 1."""
    vals = _values(f)
    n = len(vals)
    return math.fsum(v * hurwitz_zeta(s, a / n) for a, v in enumerate(vals, 1) if v) * n**-s


def smooth_numbers(n: int, bound: int) -> list[int]:
    """Positive integers <= bound whose prime factors all divide n, sorted."""
    out = [1]
    for p in modarith.prime_divisors(n):
        grown = []
        for m in out:
            while m <= bound:
                grown.append(m)
                m *= p
        out = grown
    return sorted(out)


def smooth_transform_Tdk(f: PeriodicFunction, d: int, k: int, bound: int = TOL.default_truncation) -> tuple[float, ...]:
    """Values n = 1..N/d of sum over N-smooth m <= bound of f(dmn) / m^k.

    The neglected tail is at most max|f| * bound^(1-k) / (k-1).
    """
    if k < 2:
        raise ValueError("the smooth transform needs k >= 2 for absolute convergence")
    n = f.period
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    ms = smooth_numbers(n, bound)
    weights = [m**-k for m in ms]
    vals = [float(v) for v in f.values]
    return tuple(
        math.fsum(w * vals[(d * m * a - 1) % n] for m, w in zip(ms, weights))
        for a in range(1, n // d + 1)
    )


def smooth_tail_bound(f: PeriodicFunction, k: int, bound: int) -> float:
    return max(abs(float(v)) for v in f.values) * bound ** (1 - k) / (k - 1)


@dataclass(frozen=True)
class DirichletPolynomial:
    """Finite sum of c_d * d^-s with exact rational coefficients."""

    terms: dict

    def __post_init__(self):
        clean = {}
        for d, c in self.terms.items():
            if d < 1:
                raise ValueError(f"Dirichlet polynomial index must be >= 1, got {d}")
            c = Fraction(c)
            if c:
                clean[d] = c
        object.__setattr__(self, "terms", clean)

    def __call__(self, s: float) -> float:
        return math.fsum(float(c) * d**-s for d, c in self.terms.items())

    def __mul__(self, other: DirichletPolynomial) -> DirichletPolynomial:
        out: dict[int, Fraction] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                out[a * b] = out.get(a * b, 0) + x * y
        return DirichletPolynomial(out)

    def __add__(self, other: DirichletPolynomial) -> DirichletPolynomial:
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return DirichletPolynomial(out)

    def __sub__(self, other: DirichletPolynomial) -> DirichletPolynomial:
        return self + DirichletPolynomial({d: -c for d, c in other.terms.items()})

    def derivative(self, s: float, order: int = 1) -> float:
        return math.fsum(float(c) * (-math.log(d)) ** order * d**-s for d, c in self.terms.items())


@dataclass(frozen=True)
class ZeroOrder:
    value_at_1: Fraction
    log_gradient: dict
    order_at_least_2: bool
    second_derivative: float


def zero_order_at_1(poly: DirichletPolynomial) -> ZeroOrder:
    """Exact value and derivative data at s = 1.

    P'(1) = sum_p log_gradient[p] * log p, and the logs of primes are
    Q-linearly independent, so P'(1) = 0 iff every gradient entry is 0.
    The second derivative is only reported numerically.
    """
    value = sum((c / d for d, c in poly.terms.items()), Fraction(0))
    primes = sorted({p for d in poly.terms for p in modarith.prime_divisors(d)})
    grad = {
        p: -sum((c * modarith.vp(d, p) / d for d, c in poly.terms.items()), Fraction(0))
        for p in primes
    }
    order2 = value == 0 and all(g == 0 for g in grad.values())
    return ZeroOrder(value, grad, order2, poly.derivative(1.0, 2))


# The period-36 zeta factor and the L(s, Psi_3) factor for Tengely's function.
TENGELY_ZETA_FACTOR = DirichletPolynomial({6: 1, 9: -1, 12: -2, 18: 1, 36: 2})
TENGELY_PSI3_FACTOR = DirichletPolynomial({1: 1, 3: -1, 4: -2, 6: -1})


def riemann_zeta(s: float) -> float:
    return hurwitz_zeta(s, 1.0)


def tengely_decomposition_residuals(samples=(2.0, 2.5, 3.0)) -> dict[float, float]:
    from .fixtures import tengely36

    f = tengely36()
    psi3 = [1.0, -1.0, 0.0]
    out = {}
    for s in samples:
        rhs = TENGELY_ZETA_FACTOR(s) * riemann_zeta(s) + TENGELY_PSI3_FACTOR(s) * Ls_numeric(psi3, s)
        out[s] = abs(Ls_numeric(f, s) - rhs)
    return out


def tengely_decomposition_check(samples=(2.0, 2.5, 3.0)) -> bool:
    """Numeric identity at the sample points, plus exact zero data at s = 1."""
    numeric_ok = all(r < TOL.decomposition for r in tengely_decomposition_residuals(samples).values())
    psi3_zero = zero_order_at_1(TENGELY_PSI3_FACTOR).value_at_1 == 0
    zeta_double = zero_order_at_1(TENGELY_ZETA_FACTOR).order_at_least_2
    return numeric_ok and psi3_zero and zeta_double


@dataclass(frozen=True)
class SumConvention:
    """One reading of the smooth-sum decomposition of L(s, f).

    include_one: whether d = 1 is in the sum; signed: multiply by mu(d);
    scaled: multiply by d^-k.
    """

    include_one: bool
    signed: bool
    scaled: bool

    @property
    def name(self) -> str:
        parts = ["all-d" if self.include_one else "d>1", "mu" if self.signed else "unsigned"]
        parts.append("d^-k" if self.scaled else "unscaled")
        return "/".join(parts)


CONVENTIONS = tuple(SumConvention(*flags) for flags in product((True, False), repeat=3))


def principal_smooth_component(f: PeriodicFunction, d: int, k: int, bound: int) -> list[float]:
    """T_d^(k)(f) times the principal character mod N/d."""
    m = f.period // d
    t = smooth_transform_Tdk(f, d, k, bound)
    return [v if math.gcd(a, m) == 1 else 0.0 for a, v in enumerate(t, 1)]


@dataclass(frozen=True)
class ConventionCheck:
    residuals: dict  # convention name -> max residual over the samples
    matches: tuple  # names with residual below tolerance
    resolved: str | None  # the unique match, if exactly one


def lemma62_check(f: PeriodicFunction, k: int, s_samples, bound: int = TOL.default_truncation) -> ConventionCheck:
    """Compare L(s, f) with each candidate smooth-sum decomposition."""
    n = f.period
    if not modarith.is_squarefree(n):
        raise ValueError(f"{n} is not squarefree")
    if k < 2:
        raise ValueError("k must be >= 2")
    comps = {d: principal_smooth_component(f, d, k, bound) for d in modarith.divisors(n)}
    residuals = {}
    for conv in CONVENTIONS:
        worst = 0.0
        for s in s_samples:
            total = 0.0
            for d in modarith.divisors(n):
                if d == 1 and not conv.include_one:
                    continue
                c = (modarith.mobius(d) if conv.signed else 1) * (d**-k if conv.scaled else 1.0)
                for p in modarith.prime_divisors(d):
                    c *= 1 - float(p) ** (k - s)
                if c:
                    total += c * Ls_numeric(comps[d], s)
            worst = max(worst, abs(total - Ls_numeric(f, s)))
        residuals[conv.name] = worst
    matches = tuple(name for name, r in residuals.items() if r < TOL.convention_match)
    return ConventionCheck(residuals, matches, matches[0] if len(matches) == 1 else None)
