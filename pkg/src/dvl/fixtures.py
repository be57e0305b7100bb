"""Bundled example functions shipped as JSON under ``dvl/data``."""
from __future__ import annotations

import json
from importlib import resources

from .periodic import PeriodicFunction, parse_function

FIXTURES = {
    "tengely36": "tengely36.json",
    "example51": "example51.json",
    "twoPrime_2_3_k2_l3": "twoPrime_2_3_k2_l3.json",
}


def fixture_path(name: str):
    return resources.files("dvl") / "data" / FIXTURES[name]


def load_fixture(name: str) -> PeriodicFunction:
    return parse_function(json.loads(fixture_path(name).read_text()))


def tengely36() -> PeriodicFunction:
    """Tengely's +-1 function of period 36 with L(1, f) = 0."""
    return load_fixture("tengely36")


def example51() -> PeriodicFunction:
    """(-1)^(n+1) at period 12: every divisor condition holds, L(1, f) = log 2."""
    return load_fixture("example51")


def two_prime(p: int, q: int, k: int, l: int) -> PeriodicFunction:
    """1 - p^k [p|n] - q^l [q|n] + p^k q^l [pq|n], period pq.

    Its L-series is (1 - p^k/p^s)(1 - q^l/q^s) zeta(s), so it vanishes at
    s = k and at s = l.
    """
    n = p * q
    return PeriodicFunction.from_callable(
        n,
        lambda a: 1 - p**k * (a % p == 0) - q**l * (a % q == 0) + p**k * q**l * (a % n == 0),
    )
