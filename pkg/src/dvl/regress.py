"""Named regression checks bundled with the CLI (``dvl regress``).

Each check returns a CheckResult; none of them raise on a failed
expectation.  Random sweeps use fixed seeds so a run is reproducible.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import modarith
from .criterion import coefficient_log_p_simple, decide_vanishing, induction_element, log_coefficients
from .fixtures import example51, tengely36, two_prime
from .numeric import (
    TENGELY_ZETA_FACTOR,
    L1_numeric,
    Ls_numeric,
    lemma62_check,
    tengely_decomposition_residuals,
    zero_order_at_1,
)
from .periodic import PeriodicFunction
from .tolerances import TOL

THRESHOLDS = {3: 34, 7: 130, 15: 2516}
PERIOD36_VANISHING_COUNT = 4  # +-f(an) for Tengely's f and units a mod 36


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def random_zero_sum(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> PeriodicFunction:
    vals = [rng.randint(lo, hi) for _ in range(n - 1)]
    vals.append(-sum(vals))
    return PeriodicFunction(n, tuple(Fraction(v) for v in vals))


def random_dirichlet_type(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> PeriodicFunction:
    return PeriodicFunction.from_callable(n, lambda a: rng.randint(lo, hi) if math.gcd(a, n) == 1 else 0)


def random_imprimitive(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> PeriodicFunction:
    """Integer combination of functions induced from the moduli n/q, q | n prime.

    Anything induced from a proper divisor has no conductor-n component.
    """
    total = [0] * n
    for q in modarith.prime_divisors(n):
        m = n // q
        g = [rng.randint(lo, hi) for _ in range(m)]
        for a in range(1, n + 1):
            if math.gcd(a, n) == 1:
                total[a - 1] += g[(a - 1) % m]
    return PeriodicFunction(n, tuple(Fraction(v) for v in total))


def check_tengely(f: PeriodicFunction | None = None) -> CheckResult:
    f = tengely36() if f is None else f
    report = decide_vanishing(f)
    problems = []
    if not report.vanishes:
        problems.append(f"verdict {report.verdict}, failed D {report.failed_divisors()}")
    if f.sum_over_period() == 0 and abs(L1_numeric(f)) >= TOL.l1_vanishing:
        problems.append(f"|L(1,f)| = {abs(L1_numeric(f)):.3g}")
    z = zero_order_at_1(TENGELY_ZETA_FACTOR)
    if z.value_at_1 != 0 or any(z.log_gradient.values()):
        problems.append("zeta factor does not vanish to order 2")
    worst = max(tengely_decomposition_residuals((2.0, 2.5, 3.0)).values())
    if worst >= TOL.decomposition:
        problems.append(f"decomposition residual {worst:.3g}")
    return CheckResult("tengely36", not problems, "; ".join(problems) or f"decomposition residual {worst:.2g}")


def check_example51() -> CheckResult:
    f = example51()
    r = decide_vanishing(f)
    lhs = {c.p: c.lhs for c in r.prime_conditions}
    problems = []
    if r.failed_divisors():
        problems.append(f"divisor conditions failed at {r.failed_divisors()}")
    if lhs.get(2) != -12 or lhs.get(3) != 0:
        problems.append(f"prime lhs {lhs}")
    if r.log_coefficients != {2: 1, 3: 0}:
        problems.append(f"log coefficients {r.log_coefficients}")
    if r.property_U:
        problems.append("property U reported")
    err = abs(L1_numeric(f) - math.log(2))
    if err >= TOL.l1_vanishing:
        problems.append(f"|L(1,f) - log 2| = {err:.3g}")
    return CheckResult("example51", not problems, "; ".join(problems))


def check_log_p_identity(count: int = 1000, seed: int = 33) -> CheckResult:
    rng = random.Random(seed)
    moduli = (6, 10, 14, 15, 21, 30)
    for i in range(count):
        n = moduli[i % len(moduli)]
        f = random_zero_sum(n, rng)
        logs = log_coefficients(f)
        for p in modarith.prime_divisors(n):
            if coefficient_log_p_simple(f, p) != logs[p]:
                return CheckResult("log_p_identity", False, f"mismatch at N={n}, p={p}, f={f.values}")
    return CheckResult("log_p_identity", True, f"{count} functions")


def check_integrality(moduli=(15, 21, 33), per_modulus: int = 100, seed: int = 42) -> CheckResult:
    rng = random.Random(seed)
    for n in moduli:
        for _ in range(per_modulus):
            f = random_imprimitive(n, rng)
            for p in modarith.prime_divisors(n):
                if not induction_element(f, p).is_integral():
                    return CheckResult("integrality", False, f"N={n}, p={p}, f={f.values}")
    return CheckResult("integrality", True, f"{len(moduli) * per_modulus} functions")


def decomposition_cases(seed: int = 62):
    rng = random.Random(seed)
    for n in (6, 15):
        for _ in range(2):
            yield PeriodicFunction.from_callable(n, lambda a: rng.randint(-3, 3))


def check_smooth_decomposition(samples=(2.0, 2.5, 3.0), k: int = 2) -> CheckResult:
    resolved = set()
    for f in decomposition_cases():
        res = lemma62_check(f, k, samples)
        if res.resolved is None:
            return CheckResult("smooth_decomposition", False, f"N={f.period}: matches {res.matches}")
        resolved.add(res.resolved)
    if len(resolved) != 1:
        return CheckResult("smooth_decomposition", False, f"inconsistent conventions {sorted(resolved)}")
    return CheckResult("smooth_decomposition", True, resolved.pop())


def check_two_prime() -> CheckResult:
    f = two_prime(2, 3, 2, 3)
    problems = []
    for k in (2, 3):
        r = decide_vanishing(f, k)
        if not (r.vanishes and r.conditional):
            problems.append(f"k={k}: {r.verdict}")
        val = Ls_numeric(f, float(k))
        if abs(val) >= TOL.ls_vanishing:
            problems.append(f"|L({k},f)| = {abs(val):.3g}")
    return CheckResult("two_prime_2_3_2_3", not problems, "; ".join(problems))


def check_thresholds() -> CheckResult:
    from .criterion import erdos_prime_threshold

    got = {n: erdos_prime_threshold(n) for n in THRESHOLDS}
    return CheckResult("thresholds", got == THRESHOLDS, str(got))


def check_odd_prime_search() -> CheckResult:
    from .search import SearchSpec, run_search

    found = {n: run_search(SearchSpec(n, "erdos")).vanishing for n in (3, 5, 7, 11)}
    return CheckResult("odd_prime_search", not any(found.values()), str(found))


def check_period36() -> CheckResult:
    from .search import SearchSpec, function_mask, run_search

    r = run_search(SearchSpec(36, "pm1_full"))
    t = function_mask(tengely36())
    ok = r.vanishing == PERIOD36_VANISHING_COUNT and t in r.vanishing_masks
    ok = ok and ((1 << 36) - 1 - t) in r.vanishing_masks
    return CheckResult("period36_search", ok, f"{r.vanishing} vanishing")


ALL_CHECKS = (
    check_tengely,
    check_example51,
    check_log_p_identity,
    check_integrality,
    check_smooth_decomposition,
    check_two_prime,
    check_thresholds,
    check_odd_prime_search,
    check_period36,
)


def run_all() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]
