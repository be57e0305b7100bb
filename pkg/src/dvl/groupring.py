"""The rational group ring Q[(Z/MZ)*].

An element is a sparse map from coprime residues to Fractions.  The residue
``a`` stands for the Galois element sigma_a (zeta_M -> zeta_M^a), so
multiplication is convolution under multiplication of residues mod M.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import modarith


class GroupRingElement:
    __slots__ = ("modulus", "_coeffs", "_hash")

    def __init__(self, modulus: int, coeffs=None):
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        self.modulus = modulus
        clean = {}
        for a, c in (coeffs or {}).items():
            key = _key(a, modulus)
            c = Fraction(c)
            if c:
                total = clean.get(key, 0) + c
                if total:
                    clean[key] = total
                else:
                    clean.pop(key, None)
        self._coeffs = clean
        self._hash = None

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, a: int) -> Fraction:
        return self._coeffs.get(_key(a, self.modulus), Fraction(0))

    def __len__(self):
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.modulus == other.modulus and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.modulus, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self):
        if not self._coeffs:
            return f"GroupRingElement({self.modulus}, 0)"
        terms = " + ".join(f"{c}*s{a}" for a, c in sorted(self._coeffs.items()))
        return f"GroupRingElement({self.modulus}, {terms})"

    def _check(self, other: GroupRingElement):
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        out = dict(self._coeffs)
        for a, c in other._coeffs.items():
            out[a] = out.get(a, 0) + c
        return GroupRingElement(self.modulus, out)

    def __neg__(self):
        return GroupRingElement(self.modulus, {a: -c for a, c in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> GroupRingElement:
        c = Fraction(c)
        return GroupRingElement(self.modulus, {a: c * v for a, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        m = self.modulus
        out: dict[int, Fraction] = {}
        for a, x in self._coeffs.items():
            for b, y in other._coeffs.items():
                c = a * b % m or m
                out[c] = out.get(c, 0) + x * y
        return GroupRingElement(m, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def restrict(self, d: int) -> GroupRingElement:
        """Image under Q[(Z/MZ)*] -> Q[(Z/dZ)*], sigma_a -> sigma_(a mod d)."""
        if d < 1 or self.modulus % d:
            raise ValueError(f"{d} does not divide {self.modulus}")
        out: dict[int, Fraction] = {}
        for a, c in self._coeffs.items():
            b = a % d or d
            out[b] = out.get(b, 0) + c
        return GroupRingElement(d, out)

    def total(self) -> Fraction:
        """Sum of all coefficients (the augmentation)."""
        return sum(self._coeffs.values(), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())


def _key(a: int, m: int) -> int:
    a = a % m or m
    if gcd(a, m) != 1:
        raise ValueError(f"residue {a} is not a unit mod {m}")
    return a


def add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x + y


def scale(c, x: GroupRingElement) -> GroupRingElement:
    return x.scale(c)


def mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x * y


def restrict(x: GroupRingElement, d: int) -> GroupRingElement:
    return x.restrict(d)


def zero(m: int) -> GroupRingElement:
    return GroupRingElement(m)


def identity(m: int) -> GroupRingElement:
    return GroupRingElement(m, {1: 1})


def sigma(m: int, a: int, coeff=1) -> GroupRingElement:
    """``coeff * sigma_a`` in Q[(Z/mZ)*]."""
    return GroupRingElement(m, {a: coeff})


def reduction_kernel(m: int, p: int) -> tuple[int, ...]:
    """Units mod m that reduce to 1 mod m/p, sorted."""
    if m % p or not modarith.is_prime(p):
        raise ValueError(f"{p} is not a prime divisor of {m}")
    sub = m // p
    return tuple(a for a in modarith.coprime_residues(m) if a % sub == 1 % sub)


def kernel_generators(m: int, p: int) -> tuple[int, ...]:
    """All generators of the (cyclic) kernel of (Z/mZ)* -> (Z/(m/p)Z)*."""
    ker = reduction_kernel(m, p)
    return tuple(a for a in ker if modarith.multiplicative_order(a, m) == len(ker))


@lru_cache(maxsize=None)
def tau_generator(m: int, p: int) -> int:
    """Smallest residue generating Gal(Q(zeta_m)/Q(zeta_(m/p))) inside (Z/mZ)*."""
    gens = kernel_generators(m, p)
    if not gens:
        raise ArithmeticError(f"kernel of reduction {m} -> {m // p} is not cyclic")
    return gens[0] if m > 1 else 1


@lru_cache(maxsize=None)
def annihilator_product(m: int) -> GroupRingElement:
    """prod over p | m of (1 - sigma_tau_p); kills exactly the non-primitive components."""
    out = identity(m)
    for p in modarith.prime_divisors(m):
        out = out * (identity(m) - sigma(m, tau_generator(m, p)))
    return out
