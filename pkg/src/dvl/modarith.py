"""Elementary number theory on desk-scale moduli.

Everything here works by trial division and brute force; the moduli we care
about stay below ~10^4.  Results are cached because the criterion and the
character tables ask for the same moduli over and over.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((p, e), ...)`` with p increasing."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n`` in increasing order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def vp(n: int, p: int) -> int:
    """p-adic valuation of the positive integer ``n``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"vp expects n >= 1, got {n}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def euler_phi(n: int) -> int:
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def omega(n: int) -> int:
    """Number of distinct prime divisors."""
    return len(factorize(n))


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def crt(residues, moduli) -> int:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli; result in [0, prod m_i)."""
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        # x + m*t = r (mod mi)
        t = ((r - x) * pow(m, -1, mi)) % mi if mi > 1 else 0
        x += m * t
        m *= mi
    return x % m if m > 1 else 0


@lru_cache(maxsize=None)
def coprime_residues(n: int) -> tuple[int, ...]:
    """Residues in [1, n] coprime to n (for n = 1 this is (1,))."""
    return tuple(a for a in range(1, n + 1) if gcd(a, n) == 1)


def multiplicative_order(a: int, n: int) -> int:
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    if n == 1:
        return 1
    a %= n
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
    return k


def smallest_primitive_root(pk: int) -> int:
    """Smallest generator of the cyclic group (Z/p^k Z)*, p odd (or pk in {2, 4})."""
    phi = euler_phi(pk)
    ps = prime_divisors(phi) if phi > 1 else ()
    for g in range(1, pk + 1):
        if gcd(g, pk) != 1:
            continue
        if all(pow(g, phi // q, pk) != 1 for q in ps):
            return g
    raise ValueError(f"(Z/{pk}Z)* is not cyclic")


@dataclass(frozen=True)
class UnitGroupStructure:
    """Decomposition of (Z/NZ)* into independent cyclic factors.

    ``factors`` holds ``(generator, order)`` pairs.  Each generator is a CRT
    lift that is 1 modulo the complementary part of N, so exponent tuples
    map bijectively onto the units.
    """

    modulus: int
    factors: tuple[tuple[int, int], ...]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(o for _, o in self.factors)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(g for g, _ in self.factors)

    def element(self, exponents) -> int:
        """Residue in [1, N] represented by an exponent tuple."""
        n = self.modulus
        x = 1 % n
        for (g, _), e in zip(self.factors, exponents):
            x = x * pow(g, e, n) % n
        return x if x else n

    def discrete_log(self, a: int) -> tuple[int, ...]:
        return discrete_log(self, a)


def _local_factors(p: int, e: int) -> list[tuple[int, int]]:
    """Cyclic factors of (Z/p^e Z)* as (generator mod p^e, order)."""
    pk = p**e
    if p == 2:
        if e == 1:
            return []
        if e == 2:
            return [(3, 2)]
        return [(pk - 1, 2), (5, 2 ** (e - 2))]
    return [(smallest_primitive_root(pk), euler_phi(pk))]


@lru_cache(maxsize=None)
def unit_group(n: int) -> UnitGroupStructure:
    if n < 1:
        raise ValueError(f"unit_group expects n >= 1, got {n}")
    factors = []
    for p, e in factorize(n):
        pk = p**e
        rest = n // pk
        for g, order in _local_factors(p, e):
            lifted = crt([g, 1], [pk, rest])
            factors.append((lifted, order))
    return UnitGroupStructure(n, tuple(factors))


@lru_cache(maxsize=None)
def _dlog_table(g: UnitGroupStructure) -> dict[int, tuple[int, ...]]:
    n = g.modulus
    table = {}
    exps = [()]
    for order in g.orders:
        exps = [t + (i,) for t in exps for i in range(order)]
    for t in exps:
        table[g.element(t) % n] = t
    return table


def discrete_log(g: UnitGroupStructure, a: int) -> tuple[int, ...]:
    """Exponent tuple of ``a`` against the factors of ``g`` (table lookup)."""
    n = g.modulus
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not coprime to {n}")
    return _dlog_table(g)[a % n]
