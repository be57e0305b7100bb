"""Numpy fallback for the search loops in ``_kernels.pyx``.

Same contract as the compiled versions, processed in blocks of masks with
one integer matrix product per block instead of incremental updates.
"""
import numpy as np

BLOCK = 1 << 14


def _signs(masks, nbits):
    bits = (masks[:, None] >> np.arange(nbits, dtype=np.int64)) & 1
    return 1 - 2 * bits


def brute_scan(A, start, stop, nbits, pole, zero_sum_only, hits):
    divergent = nonvan = van = skipped = 0
    cap = len(hits)
    A = np.asarray(A, dtype=np.int64)
    for lo in range(start, stop, BLOCK):
        masks = np.arange(lo, min(lo + BLOCK, stop), dtype=np.int64)
        signs = _signs(masks, nbits)
        if pole:
            balanced = signs.sum(axis=1) == 0
            n_off = int(len(masks) - balanced.sum())
            if zero_sum_only:
                skipped += n_off
            else:
                divergent += n_off
            masks, signs = masks[balanced], signs[balanced]
        if len(masks) == 0:
            continue
        if A.shape[0]:
            zero = ~(signs @ A.T).any(axis=1)
        else:
            zero = np.ones(len(masks), dtype=bool)
        found = masks[zero]
        for m in found:
            if van < cap:
                hits[van] = m
            van += 1
        nonvan += int(len(masks) - len(found))
    return divergent, nonvan, van, skipped


def kernel_scan(B, L, start, stop, nbits, hits):
    found_total = 0
    cap = len(hits)
    B = np.asarray(B, dtype=np.int64)
    for lo in range(start, stop, BLOCK):
        masks = np.arange(lo, min(lo + BLOCK, stop), dtype=np.int64)
        y = _signs(masks, nbits) @ B.T
        ok = (np.abs(y) == L).all(axis=1)
        for m in masks[ok]:
            if found_total < cap:
                hits[found_total] = m
            found_total += 1
    return found_total
