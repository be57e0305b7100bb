"""Exact vanishing decision for L(1, f) and (conditionally) L(k, f).

The decision has two halves:

* one divisor condition per D | N: a rational combination of the projected
  components f_d, living in Q[(Z/(N/D)Z)*], must be imprimitive mod N/D;
* for k = 1, one prime condition per p | N: a rational linear form in the
  restricted sums M_d must vanish (it is -N times the coefficient of log p).

Everything is exact Fraction arithmetic.  Floats appear nowhere in here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import modarith
from .groupring import GroupRingElement, annihilator_product, identity, sigma, tau_generator
from .periodic import PeriodicFunction, format_rational, from_group_ring, indicator_1pN, to_group_ring

CONDITIONAL_NOTE = "conditional on the Chowla-Milnor conjecture"


def _as_element(f) -> GroupRingElement:
    if isinstance(f, GroupRingElement):
        return f
    if not f.is_dirichlet_type():
        raise ValueError(f"function of period {f.period} is not Dirichlet-type")
    return to_group_ring(f)


def imprimitivity_witness(f) -> GroupRingElement:
    """prod_p (1 - tau_p) * P(f); zero exactly when f is imprimitive."""
    x = _as_element(f)
    return annihilator_product(x.modulus) * x


def is_imprimitive(f) -> bool:
    """True iff f (a Dirichlet-type function or group-ring element) has no
    component along a primitive character mod its modulus."""
    x = _as_element(f)
    if x.modulus % 4 == 2:
        return True
    return imprimitivity_witness(x).is_zero()


def proj_element(x: GroupRingElement, d: int) -> GroupRingElement:
    m = x.modulus
    if m % d:
        raise ValueError(f"{d} does not divide {m}")
    return x.restrict(d).scale(Fraction(modarith.euler_phi(d), modarith.euler_phi(m)))


def proj(f, d: int) -> PeriodicFunction:
    """Keep the character components of conductor dividing d, re-expressed mod d."""
    return from_group_ring(proj_element(_as_element(f), d))


def _inverse_residue(p: int, m: int) -> int:
    return pow(p, -1, m) if m > 1 else 1


def divisor_element(f: PeriodicFunction, D: int, k: int = 1) -> GroupRingElement:
    """The combination sum_{d|D} d^-k prod'(1 - sigma_p^-1 / p^k) P(Proj(f_d)) mod N/D.

    The product runs over primes p dividing N/d but not N/D, so sigma_p is a
    unit mod N/D.
    """
    n = f.period
    if D < 1 or n % D:
        raise ValueError(f"{D} does not divide the period {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    target = n // D
    h = GroupRingElement(target)
    for d in modarith.divisors(D):
        x = proj_element(to_group_ring(f.component(d)), target)
        if x.is_zero():
            continue
        for p in modarith.prime_divisors(n // d):
            if target % p:
                x = x * (identity(target) - sigma(target, _inverse_residue(p, target), Fraction(1, p**k)))
        h = h + x.scale(Fraction(1, d**k))
    return h


@dataclass(frozen=True)
class DivisorCondition:
    D: int
    holds: bool
    auto_2mod4: bool
    witness: GroupRingElement

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "holds": self.holds,
            "auto_2mod4": self.auto_2mod4,
            "witness": element_to_json(self.witness),
        }


@dataclass(frozen=True)
class PrimeCondition:
    p: int
    lhs: Fraction
    holds: bool

    def to_json(self) -> dict:
        return {"p": self.p, "lhs": format_rational(self.lhs), "holds": self.holds}


def element_to_json(x: GroupRingElement) -> dict:
    return {
        "modulus": x.modulus,
        "coeffs": {str(a): format_rational(c) for a, c in sorted(x.items())},
    }


def divisor_condition(f: PeriodicFunction, D: int, k: int = 1) -> DivisorCondition:
    h = divisor_element(f, D, k)
    target = h.modulus
    witness = annihilator_product(target) * h
    return DivisorCondition(D, witness.is_zero(), target % 4 == 2, witness)


def prime_condition(f: PeriodicFunction, p: int) -> PrimeCondition:
    n = f.period
    if n % p or not modarith.is_prime(p):
        raise ValueError(f"{p} is not a prime divisor of {n}")
    lhs = Fraction(0)
    for d in modarith.divisors(n):
        md = f.restricted_sum(d)
        if md:
            lhs += md * (modarith.vp(d, p) - Fraction(indicator_1pN(d, p, n), p - 1))
    return PrimeCondition(p, lhs, lhs == 0)


def _require_convergent(f: PeriodicFunction):
    if f.sum_over_period() != 0:
        raise ValueError("period sum is nonzero: L(1, f) diverges")


def log_coefficients(f: PeriodicFunction) -> dict[int, Fraction]:
    """Exact coefficient of log p in L(1, f), for each prime p | N."""
    _require_convergent(f)
    n = f.period
    return {p: -prime_condition(f, p).lhs / n for p in modarith.prime_divisors(n)}


def coefficient_log_p_simple(f: PeriodicFunction, p: int) -> Fraction:
    """Shortcut for the log p coefficient when p exactly divides N."""
    n = f.period
    if n % p or modarith.vp(n, p) != 1:
        raise ValueError(f"need v_p(N) = 1, got v_{p}({n}) = {modarith.vp(n, p) if n % p == 0 else 0}")
    return Fraction(-p, (p - 1) * n) * sum((f(p * a) for a in range(1, n // p + 1)), Fraction(0))


@dataclass(frozen=True)
class VanishingReport:
    period: int
    k: int
    sum_over_period: Fraction
    divisor_conditions: tuple[DivisorCondition, ...]
    prime_conditions: tuple[PrimeCondition, ...]
    log_coefficients: dict[int, Fraction] = field(hash=False)
    property_U: bool
    verdict: str
    conditional: bool

    @property
    def vanishes(self) -> bool:
        return self.verdict == "vanishes"

    def failed_divisors(self) -> list[int]:
        return [c.D for c in self.divisor_conditions if not c.holds]

    def to_json(self) -> dict:
        out = {
            "period": self.period,
            "k": self.k,
            "sum_over_period": format_rational(self.sum_over_period),
            "divisor_conditions": [c.to_json() for c in self.divisor_conditions],
            "prime_conditions": [c.to_json() for c in self.prime_conditions],
            "log_coefficients": {str(p): format_rational(c) for p, c in self.log_coefficients.items()},
            "property_U": self.property_U,
            "verdict": self.verdict,
            "conditional": self.conditional,
        }
        if self.conditional:
            out["note"] = CONDITIONAL_NOTE
        return out


def decide_vanishing(f: PeriodicFunction, k: int = 1) -> VanishingReport:
    """Run every divisor condition (and for k = 1 every prime condition).

    For k > 1 the verdict assumes the Chowla-Milnor conjecture and every
    divisor D | N is checked, D = 1 included; there is no pole, so no prime
    conditions and no divergent verdict.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = f.period
    total = f.sum_over_period()
    dconds = tuple(divisor_condition(f, D, k) for D in modarith.divisors(n))
    if k == 1:
        pconds = tuple(prime_condition(f, p) for p in modarith.prime_divisors(n))
        logs = {c.p: -c.lhs / n for c in pconds}
    else:
        pconds, logs = (), {}
    property_u = any(not c.holds for c in dconds if c.D != n)
    if k == 1 and total != 0:
        verdict = "divergent"
    elif all(c.holds for c in dconds) and all(c.holds for c in pconds):
        verdict = "vanishes"
    else:
        verdict = "nonvanishing"
    return VanishingReport(n, k, total, dconds, pconds, logs, property_u, verdict, k > 1)


def property_U_check(f: PeriodicFunction) -> bool:
    """True when some proper-divisor primitive component survives, which puts
    L(1, f) outside the Q-span of {log d : d | N}."""
    _require_convergent(f)
    n = f.period
    return any(not divisor_condition(f, D).holds for D in modarith.divisors(n) if D != n)


def erdos_prime_threshold(n: int) -> int:
    """2^omega(N) * prod over q | N of (q^2 + 2q + 2), for squarefree N."""
    if n < 1 or not modarith.is_squarefree(n):
        raise ValueError(f"{n} is not squarefree")
    out = 2 ** modarith.omega(n)
    for q in modarith.prime_divisors(n):
        out *= q * q + 2 * q + 2
    return out


def induction_element(f: PeriodicFunction, p: int) -> GroupRingElement:
    """prod over q | N/p of (1 - tau_q) applied to P(Proj_{N/p}(f)), in Q[(Z/(N/p)Z)*].

    For odd squarefree N and integer-valued imprimitive f this lands in the
    integral group ring.
    """
    n = f.period
    if n % p:
        raise ValueError(f"{p} does not divide {n}")
    target = n // p
    return annihilator_product(target) * proj_element(_as_element(f), target)


@lru_cache(maxsize=None)
def vanishing_conditions(n: int, k: int = 1) -> tuple[tuple[Fraction, ...], ...]:
    """Linear forms (one row per witness coordinate / prime) whose common kernel
    is exactly the set of f with period n that the criterion declares vanishing.

    Every condition is linear in f, so evaluating the criterion on the unit
    vectors gives the columns.
    """
    basis = []
    for i in range(n):
        vals = [Fraction(0)] * n
        vals[i] = Fraction(1)
        basis.append(PeriodicFunction(n, tuple(vals)))
    rows: dict[tuple, list[Fraction]] = {}
    for i, e in enumerate(basis):
        for D in modarith.divisors(n):
            h = divisor_element(e, D, k)
            w = annihilator_product(h.modulus) * h
            for a, c in w.items():
                rows.setdefault(("D", D, a), [Fraction(0)] * n)[i] = c
        if k == 1:
            for p in modarith.prime_divisors(n):
                lhs = prime_condition(e, p).lhs
                if lhs:
                    rows.setdefault(("p", p), [Fraction(0)] * n)[i] = lhs
    return tuple(tuple(r) for _, r in sorted(rows.items(), key=lambda kv: str(kv[0])))


__all__ = [
    "DivisorCondition",
    "PrimeCondition",
    "VanishingReport",
    "coefficient_log_p_simple",
    "decide_vanishing",
    "divisor_condition",
    "divisor_element",
    "erdos_prime_threshold",
    "imprimitivity_witness",
    "induction_element",
    "is_imprimitive",
    "log_coefficients",
    "prime_condition",
    "proj",
    "proj_element",
    "property_U_check",
    "tau_generator",
    "vanishing_conditions",
]
