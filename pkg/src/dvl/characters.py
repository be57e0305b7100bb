"""Dirichlet characters mod M and the floating-point inner-product oracle.

Characters are indexed by exponent tuples against the cyclic factors of
``modarith.unit_group(M)``.  Values are kept as exact rotation angles
(Fractions in [0, 1)); conductors are computed from those angles, never from
floats.  The complex values only enter the oracle sums below, which exist to
cross-check the exact group-ring computations.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm

from . import modarith
from .periodic import PeriodicFunction
from .tolerances import TOL


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    exponents: tuple[int, ...]
    conductor: int = field(default=0, compare=False)

    def __post_init__(self):
        orders = modarith.unit_group(self.modulus).orders
        if len(self.exponents) != len(orders) or any(
            not 0 <= e < o for e, o in zip(self.exponents, orders)
        ):
            raise ValueError(f"bad exponents {self.exponents} for orders {orders}")
        if not self.conductor:
            object.__setattr__(self, "conductor", _conductor(self.modulus, self.exponents))

    def angle(self, a: int) -> Fraction | None:
        """chi(a) = exp(2 pi i * angle); None when gcd(a, M) > 1."""
        return _angle_table(self.modulus, self.exponents).get(a % self.modulus)

    def __call__(self, a: int) -> complex:
        t = self.angle(a)
        return 0j if t is None else _root_of_unity(t)

    def sigma_value(self, a: int) -> complex:
        """chi(sigma_a), i.e. the conjugate of chi(a)."""
        return self(a).conjugate()

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    def values(self) -> list[complex]:
        return [self(a) for a in range(1, self.modulus + 1)]


def _root_of_unity(t: Fraction) -> complex:
    # exact on the real/imaginary axes so principal values come out as 1.0
    q = t * 4
    if q.denominator == 1:
        return (1, 1j, -1, -1j)[int(q) % 4]
    return cmath.exp(2j * cmath.pi * t)


@lru_cache(maxsize=None)
def _angle_table(m: int, exponents: tuple[int, ...]) -> dict[int, Fraction]:
    g = modarith.unit_group(m)
    out = {}
    for a in modarith.coprime_residues(m):
        logs = modarith.discrete_log(g, a)
        t = sum((Fraction(e * l, o) for e, l, o in zip(exponents, logs, g.orders)), Fraction(0))
        out[a % m] = t - (t.numerator // t.denominator)
    return out


def _conductor(m: int, exponents: tuple[int, ...]) -> int:
    table = _angle_table(m, exponents)
    for d in modarith.divisors(m):
        if all(t == 0 for a, t in table.items() if (a - 1) % d == 0):
            return d
    return m


@lru_cache(maxsize=None)
def all_characters(m: int) -> tuple[DirichletCharacter, ...]:
    """Every character mod m, lexicographic in the exponent tuples."""
    orders = modarith.unit_group(m).orders
    return tuple(DirichletCharacter(m, e) for e in product(*(range(o) for o in orders)))


def characters_of_conductor(m: int, d: int) -> tuple[DirichletCharacter, ...]:
    return tuple(chi for chi in all_characters(m) if chi.conductor == d)


def primitive_characters(m: int) -> tuple[DirichletCharacter, ...]:
    return characters_of_conductor(m, m)


def eval_character(chi: DirichletCharacter, a: int) -> tuple[complex, Fraction | None]:
    return chi(a), chi.angle(a)


def inner_product(f: PeriodicFunction, chi: DirichletCharacter) -> complex:
    """phi(M)^-1 * sum f(a) conj(chi(a)) in double precision.

    Rounding error is at most about phi(M) * max|f| * 1e-15.
    """
    if f.period != chi.modulus:
        raise ValueError(f"period {f.period} does not match modulus {chi.modulus}")
    m = chi.modulus
    total = sum(float(v) * chi(a).conjugate() for a, v in enumerate(f.values, 1) if v)
    return total / modarith.euler_phi(m)


def _oracle_eps(f: PeriodicFunction) -> float:
    return TOL.primitivity * (1 + sum(abs(float(v)) for v in f.values))


def is_primitive_oracle(f: PeriodicFunction) -> bool:
    """True if some conductor-M character has a non-negligible sum against f."""
    eps = _oracle_eps(f)
    for chi in primitive_characters(f.period):
        s = sum(float(v) * chi(a) for a, v in enumerate(f.values, 1) if v)
        if abs(s) > eps:
            return True
    return False


def conductor_component_values(f: PeriodicFunction, d: int) -> list[complex]:
    """D_M(d, f) evaluated at a = 1..M, before rounding."""
    m = f.period
    if m % d:
        raise ValueError(f"{d} does not divide {m}")
    out = [0j] * m
    for chi in characters_of_conductor(m, d):
        c = inner_product(f, chi)
        if c == 0:
            continue
        for a in range(1, m + 1):
            out[a - 1] += c * chi(a)
    return out


def conductor_component_oracle(f: PeriodicFunction, d: int) -> PeriodicFunction:
    """D_M(d, f) rounded back to exact rationals.

    The component is rational valued with denominator dividing
    phi(M) * lcm(denominators of f); anything else means a bug upstream.
    """
    m = f.period
    den = modarith.euler_phi(m) * lcm(*(v.denominator for v in f.values))
    vals = []
    for z in conductor_component_values(f, d):
        r = Fraction(round(z.real * den), den)
        resid = max(abs(z.real - float(r)), abs(z.imag))
        if resid > TOL.rational_rounding:
            raise ArithmeticError(f"conductor component not rational: residual {resid:.3g}")
        vals.append(r)
    return PeriodicFunction(m, tuple(vals))


def count_by_conductor(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for chi in all_characters(m):
        out[chi.conductor] = out.get(chi.conductor, 0) + 1
    return out


def primitive_count(m: int) -> int:
    """Number of primitive characters mod m from the local (prime power) counts."""
    total = 1
    for p, e in modarith.factorize(m):
        if e == 1:
            total *= p - 2
        else:
            total *= p ** (e - 2) * (p - 1) ** 2
    return total
