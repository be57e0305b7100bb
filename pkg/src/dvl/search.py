"""Exhaustive searches over +-1 sign patterns of a fixed period.

Candidate numbering (frozen): bit i of the mask set means f(i + 1) = -1,
clear means f(i + 1) = +1.  The erdos family uses N - 1 bits and f(N) = 0;
pm1_full uses N bits.

Two strategies share that numbering.

brute
    Every mask in [0, 2^bits) is classified against an integer basis of the
    criterion's linear conditions (every condition is linear in f, see
    ``criterion.vanishing_conditions``).
kernel
    The vanishing set is a linear subspace, so it is parametrized by the
    free columns of the reduced row echelon form.  Only the 2^free sign
    choices of the free columns are walked; a choice is a hit when every
    pivot value comes out as +-1.  This is still a complete enumeration of
    the vanishing candidates; the divergent count is the number of masks
    with nonzero sum (a binomial count) and the rest are nonvanishing.

Every hit is re-checked with ``decide_vanishing`` and, for k = 1, with the
digamma oracle before it is reported.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import kernels
from .criterion import decide_vanishing, vanishing_conditions
from .numeric import L1_numeric
from .periodic import PeriodicFunction
from .tolerances import TOL

FAMILIES = ("erdos", "pm1_full")
STRATEGIES = ("auto", "brute", "kernel")
MAX_ENUM_BITS = 28
AUTO_BRUTE_BITS = 24
HIT_CAPACITY = 1 << 20
_INT64_LIMIT = 1 << 62


class SearchTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    period: int
    family: str = "pm1_full"
    require_zero_sum: bool = False
    worker_count: int = 1
    k: int = 1
    strategy: str = "auto"

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")

    @property
    def bits(self) -> int:
        return self.period - 1 if self.family == "erdos" else self.period


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("DVL_WORKERS", "1")))
    except ValueError:
        return 1


def candidate_function(mask: int, period: int, family: str) -> PeriodicFunction:
    bits = period - 1 if family == "erdos" else period
    if not 0 <= mask < 1 << bits:
        raise ValueError(f"mask {mask} out of range for {bits} bits")
    vals = [-1 if (mask >> i) & 1 else 1 for i in range(bits)]
    if family == "erdos":
        vals.append(0)
    return PeriodicFunction(period, tuple(Fraction(v) for v in vals))


def function_mask(f: PeriodicFunction) -> int:
    """Inverse of candidate_function for either family."""
    vals = f.values
    fam = f.classify()
    if fam not in FAMILIES:
        raise ValueError("not a +-1 function")
    bits = f.period - 1 if fam == "erdos" else f.period
    return sum(1 << i for i in range(bits) if vals[i] == -1)


def partition(total: int, parts: int) -> list[tuple[int, int]]:
    """Split [0, total) into at most `parts` contiguous nonempty ranges."""
    parts = max(1, min(parts, total)) if total else 1
    q, r = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + q + (i < r)
        out.append((lo, hi))
        lo = hi
    check_partition(out, total)
    return out


def check_partition(ranges, total: int) -> None:
    lo = 0
    for a, b in sorted(ranges):
        if a != lo or b < a:
            raise AssertionError(f"ranges do not tile [0, {total}): gap or overlap at {a}")
        lo = b
    if lo != total:
        raise AssertionError(f"ranges end at {lo}, expected {total}")


def _lcm_den(xs) -> int:
    out = 1
    for x in xs:
        out = math.lcm(out, Fraction(x).denominator)
    return out


@lru_cache(maxsize=None)
def reduced_conditions(period: int, family: str, k: int = 1):
    """RREF of the condition matrix restricted to the free sign positions.

    Returns (rows, pivots) with rows a tuple of Fraction tuples.  For the
    erdos family the column of f(N) is dropped since f(N) = 0 there.
    """
    import sympy

    a = vanishing_conditions(period, k)
    ncols = period - 1 if family == "erdos" else period
    mat = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row[:ncols]] for row in a])
    if mat.rows == 0:
        return (), ()
    rref, pivots = mat.rref()
    rows = tuple(
        tuple(Fraction(int(x.p), int(x.q)) for x in rref.row(i)) for i in range(len(pivots))
    )
    return rows, tuple(pivots)


def _check_int64(mat: np.ndarray, extra: int = 0) -> None:
    bound = int(np.abs(mat).sum(axis=1).max()) if mat.size else 0
    if 2 * (bound + extra) >= _INT64_LIMIT:
        raise OverflowError("condition coefficients too large for 64-bit scanning")


def brute_matrix(period: int, family: str, k: int = 1) -> np.ndarray:
    rows, _ = reduced_conditions(period, family, k)
    out = []
    for row in rows:
        den = _lcm_den(row)
        out.append([int(x * den) for x in row])
    bits = period - 1 if family == "erdos" else period
    mat = np.array(out, dtype=np.int64).reshape(len(out), bits)
    _check_int64(mat)
    return np.ascontiguousarray(mat)


@dataclass(frozen=True)
class KernelForm:
    pivots: tuple
    free: tuple
    L: int
    B: np.ndarray = field(compare=False)


def kernel_form(period: int, family: str, k: int = 1) -> KernelForm:
    """Pivot values are -B g / L for the sign vector g on the free columns."""
    rows, pivots = reduced_conditions(period, family, k)
    bits = period - 1 if family == "erdos" else period
    free = tuple(j for j in range(bits) if j not in pivots)
    L = _lcm_den(x for row in rows for x in (row[j] for j in free))
    B = np.array([[int(row[j] * L) for j in free] for row in rows], dtype=np.int64)
    B = np.ascontiguousarray(B.reshape(len(rows), len(free)))
    _check_int64(B, L)
    return KernelForm(pivots, free, L, B)


def _expand_kernel_hit(form: KernelForm, gmask: int, B_rows: np.ndarray) -> int:
    signs = np.array([-1 if (gmask >> i) & 1 else 1 for i in range(len(form.free))], dtype=np.int64)
    y = B_rows @ signs if len(form.free) else np.zeros(len(form.pivots), dtype=np.int64)
    mask = 0
    for i, j in enumerate(form.free):
        if (gmask >> i) & 1:
            mask |= 1 << j
    for r, j in enumerate(form.pivots):
        if y[r] == form.L:  # pivot value -y/L = -1
            mask |= 1 << j
    return mask


def _run_brute(args):
    A, lo, hi, bits, pole, zs, backend = args
    hits = np.zeros(HIT_CAPACITY, dtype=np.int64)
    d, nv, v, sk = kernels.get_backend(backend).brute_scan(A, lo, hi, bits, pole, zs, hits)
    if v > HIT_CAPACITY:
        raise RuntimeError("hit buffer overflow")
    return d, nv, v, sk, hits[:v].tolist()


def _run_kernel(args):
    B, L, lo, hi, nfree, backend = args
    hits = np.zeros(HIT_CAPACITY, dtype=np.int64)
    found = kernels.get_backend(backend).kernel_scan(B, L, lo, hi, nfree, hits)
    if found > HIT_CAPACITY:
        raise RuntimeError("hit buffer overflow")
    return hits[:found].tolist()


def _map(fn, jobs, workers):
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


@dataclass(frozen=True)
class SearchResult:
    spec: SearchSpec
    strategy: str
    backend: str
    candidates: int
    evaluated: int
    divergent: int
    nonvanishing: int
    vanishing: int
    skipped: int
    vanishing_masks: tuple

    def functions(self) -> list[PeriodicFunction]:
        return [candidate_function(m, self.spec.period, self.spec.family) for m in self.vanishing_masks]

    def to_json(self) -> dict:
        return {
            "period": self.spec.period,
            "family": self.spec.family,
            "k": self.spec.k,
            "zero_sum_only": self.spec.require_zero_sum,
            "strategy": self.strategy,
            "backend": self.backend,
            "candidates": self.candidates,
            "evaluated": self.evaluated,
            "divergent": self.divergent,
            "nonvanishing": self.nonvanishing,
            "vanishing": self.vanishing,
            "skipped": self.skipped,
            "vanishing_masks": list(self.vanishing_masks),
        }


def choose_strategy(spec: SearchSpec) -> str:
    if spec.strategy != "auto":
        return spec.strategy
    return "brute" if spec.bits <= AUTO_BRUTE_BITS else "kernel"


def _balanced_count(bits: int) -> int:
    return math.comb(bits, bits // 2) if bits % 2 == 0 else 0


def verify_hit(f: PeriodicFunction, k: int) -> None:
    report = decide_vanishing(f, k)
    if not report.vanishes:
        raise AssertionError(f"search hit {f.values} is not vanishing per decide_vanishing")
    if k == 1 and abs(L1_numeric(f)) >= TOL.l1_vanishing:
        raise AssertionError(f"search hit has |L(1, f)| = {abs(L1_numeric(f)):.3g}")


def run_search(spec: SearchSpec, backend: str | None = None, verify: bool = True) -> SearchResult:
    strategy = choose_strategy(spec)
    bits = spec.bits
    pole = spec.k == 1 or spec.require_zero_sum
    backend_name = backend or kernels.BACKEND
    if strategy == "brute":
        if bits > MAX_ENUM_BITS:
            raise SearchTooLarge(f"2^{bits} candidates exceeds the 2^{MAX_ENUM_BITS} brute-force limit")
        A = brute_matrix(spec.period, spec.family, spec.k)
        jobs = [
            (A, lo, hi, bits, pole, spec.require_zero_sum, backend_name)
            for lo, hi in partition(1 << bits, spec.worker_count)
        ]
        parts = _map(_run_brute, jobs, spec.worker_count)
        divergent = sum(p[0] for p in parts)
        nonvan = sum(p[1] for p in parts)
        skipped = sum(p[3] for p in parts)
        masks = sorted(m for p in parts for m in p[4])
    else:
        form = kernel_form(spec.period, spec.family, spec.k)
        nfree = len(form.free)
        if nfree > MAX_ENUM_BITS:
            raise SearchTooLarge(f"2^{nfree} free sign choices exceeds the 2^{MAX_ENUM_BITS} limit")
        jobs = [
            (form.B, form.L, lo, hi, nfree, backend_name)
            for lo, hi in partition(1 << nfree, spec.worker_count)
        ]
        gmasks = [g for part in _map(_run_kernel, jobs, spec.worker_count) for g in part]
        masks = sorted(_expand_kernel_hit(form, g, form.B) for g in gmasks)
        if pole and spec.k > 1:
            # zero-sum filter for k > 1: drop kernel hits with nonzero sum
            masks = [m for m in masks if 2 * bin(m).count("1") == bits]
        balanced = _balanced_count(bits) if pole else 1 << bits
        off = (1 << bits) - balanced
        divergent = 0 if spec.require_zero_sum or not pole else off
        skipped = off if spec.require_zero_sum and pole else 0
        nonvan = balanced - len(masks)
    total = 1 << bits
    if divergent + nonvan + len(masks) + skipped != total:
        raise AssertionError("search counts do not add up to the candidate total")
    if verify:
        for m in masks:
            verify_hit(candidate_function(m, spec.period, spec.family), spec.k)
    return SearchResult(
        spec, strategy, backend_name, total, total - skipped, divergent, nonvan, len(masks), skipped, tuple(masks)
    )
