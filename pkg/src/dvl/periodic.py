"""Rational-valued periodic functions and their Dirichlet-type pieces.

A function of period N is stored as ``values[i] = f(i + 1)`` for i in
range(N), so ``f(N)`` sits in the last slot and formulas summing over
``a = 1..N`` read naturally.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path

from . import modarith
from .groupring import GroupRingElement


class FunctionFormatError(ValueError):
    """Raised for malformed function files or value strings."""


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value) -> Fraction:
    """Parse an int or an ``"a/b"`` string exactly.  Floats are rejected."""
    if isinstance(value, bool):
        raise FunctionFormatError(f"booleans are not rationals: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise FunctionFormatError(f"not a rational literal: {value!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise FunctionFormatError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    raise FunctionFormatError(f"unsupported value {value!r} ({type(value).__name__})")


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class PeriodicFunction:
    period: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError(f"period must be >= 1, got {self.period}")
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.period:
            raise ValueError(f"expected {self.period} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_values(cls, values) -> PeriodicFunction:
        vals = [parse_rational(v) if isinstance(v, str) else Fraction(v) for v in values]
        return cls(len(vals), tuple(vals))

    @classmethod
    def from_callable(cls, period: int, fn) -> PeriodicFunction:
        return cls(period, tuple(Fraction(fn(n)) for n in range(1, period + 1)))

    @classmethod
    def zero(cls, period: int) -> PeriodicFunction:
        return cls(period, (Fraction(0),) * period)

    def __call__(self, n: int) -> Fraction:
        return self.values[(n - 1) % self.period]

    def __add__(self, other: PeriodicFunction) -> PeriodicFunction:
        if self.period != other.period:
            raise ValueError("period mismatch")
        return PeriodicFunction(self.period, tuple(a + b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> PeriodicFunction:
        return PeriodicFunction(self.period, tuple(-v for v in self.values))

    def __sub__(self, other: PeriodicFunction) -> PeriodicFunction:
        return self + (-other)

    def scale(self, c) -> PeriodicFunction:
        c = Fraction(c)
        return PeriodicFunction(self.period, tuple(c * v for v in self.values))

    def sum_over_period(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def is_dirichlet_type(self) -> bool:
        n = self.period
        return all(v == 0 for a, v in enumerate(self.values, 1) if gcd(a, n) != 1)

    def component(self, d: int) -> PeriodicFunction:
        """f_d(n) = f(dn) on n coprime to N/d, zero elsewhere; period N/d."""
        n = self.period
        if d < 1 or n % d:
            raise ValueError(f"{d} does not divide the period {n}")
        m = n // d
        return PeriodicFunction(
            m, tuple(self(d * a) if gcd(a, m) == 1 else Fraction(0) for a in range(1, m + 1))
        )

    def restricted_sum(self, d: int) -> Fraction:
        """M_d: the sum of f_d over one period."""
        return self.component(d).sum_over_period()

    def classify(self) -> str:
        vals = self.values
        pm1 = {Fraction(1), Fraction(-1)}
        if vals[-1] == 0 and all(v in pm1 for v in vals[:-1]):
            return "erdos"
        if all(v in pm1 for v in vals):
            return "pm1_full"
        if self.is_dirichlet_type():
            return "dirichlet_type"
        return "general"

    def to_group_ring(self) -> GroupRingElement:
        return to_group_ring(self)

    def to_json(self) -> dict:
        return {"period": self.period, "values": [_json_value(v) for v in self.values]}


def _json_value(v: Fraction):
    return v.numerator if v.denominator == 1 else format_rational(v)


def component_fd(f: PeriodicFunction, d: int) -> PeriodicFunction:
    return f.component(d)


def restricted_sum(f: PeriodicFunction, d: int) -> Fraction:
    return f.restricted_sum(d)


def sum_over_period(f: PeriodicFunction) -> Fraction:
    return f.sum_over_period()


def classify(f: PeriodicFunction) -> str:
    return f.classify()


def indicator_1pN(d: int, p: int, n: int) -> int:
    """1 if v_p(d) < v_p(N) else 0."""
    return int(modarith.vp(d, p) < modarith.vp(n, p))


def to_group_ring(f: PeriodicFunction) -> GroupRingElement:
    """P(f) = sum of f(a) sigma_a over units a mod N."""
    n = f.period
    coeffs = {}
    for a, v in enumerate(f.values, 1):
        if not v:
            continue
        if gcd(a, n) != 1:
            raise ValueError(f"f({a}) = {v} but gcd({a}, {n}) > 1; not Dirichlet-type")
        coeffs[a] = v
    return GroupRingElement(n, coeffs)


def from_group_ring(x: GroupRingElement) -> PeriodicFunction:
    m = x.modulus
    return PeriodicFunction(m, tuple(x[a] if gcd(a, m) == 1 else Fraction(0) for a in range(1, m + 1)))


def principal_character(n: int) -> PeriodicFunction:
    return PeriodicFunction.from_callable(n, lambda a: 1 if gcd(a, n) == 1 else 0)


def delta(n: int, a: int) -> PeriodicFunction:
    """Indicator of the residue class a mod n."""
    return PeriodicFunction.from_callable(n, lambda b: 1 if (b - a) % n == 0 else 0)


def parse_function(data) -> PeriodicFunction:
    if not isinstance(data, dict) or "period" not in data or "values" not in data:
        raise FunctionFormatError('expected an object with "period" and "values"')
    period = data["period"]
    if isinstance(period, bool) or not isinstance(period, int) or period < 1:
        raise FunctionFormatError(f"period must be a positive integer, got {period!r}")
    values = data["values"]
    if not isinstance(values, list) or len(values) != period:
        raise FunctionFormatError(f"values must be a list of length {period}")
    return PeriodicFunction(period, tuple(parse_rational(v) for v in values))


def load_function(path) -> PeriodicFunction:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FunctionFormatError(f"cannot read {path}: {exc}") from exc
    return parse_function(data)


def dump_function(f: PeriodicFunction, path) -> None:
    Path(path).write_text(json.dumps(f.to_json()) + "\n")
