"""Hot search kernels for the extremal branch-and-bound.

The kernels are plain Python functions over numpy arrays and int64 bit
masks (column 1 is the most significant bit of an n-bit row mask).  When
numba is importable they are compiled with ``@njit(cache=True)``; setting
``ORDPAT_PURE=1`` in the environment forces the uncompiled pure path.
Both paths run the identical source, so results are bit-identical;
``benchmarks/bench_kernels.py`` compares their speed.
"""
from __future__ import annotations

import os

import numpy as np

PURE_REQUESTED = os.environ.get("ORDPAT_PURE", "") not in ("", "0")

if not PURE_REQUESTED:
    try:
        from numba import njit as _njit
        JIT_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        JIT_ENABLED = False
else:
    JIT_ENABLED = False


def pair_contains_mask(v1, v2, n, p1, p2, q):
    """Does the 2 x n host (v1 above v2) contain the 2 x q pattern (p1, p2)?

    Greedy left-to-right column matching; matching the earliest usable host
    column is always safe, so greedy is complete.
    """
    if q > n:
        return False
    j = 0
    for c in range(n):
        if j == q:
            break
        need1 = (p1 >> (q - 1 - j)) & 1
        need2 = (p2 >> (q - 1 - j)) & 1
        h1 = (v1 >> (n - 1 - c)) & 1
        h2 = (v2 >> (n - 1 - c)) & 1
        if h1 >= need1 and h2 >= need2:
            j += 1
    return j == q


def row_contains_mask(v, n, p, q):
    """Does the single n-bit host row v contain the 1 x q pattern p?"""
    if q > n:
        return False
    j = 0
    for c in range(n):
        if j == q:
            break
        need = (p >> (q - 1 - j)) & 1
        h = (v >> (n - 1 - c)) & 1
        if h >= need:
            j += 1
    return j == q


def build_pair_blocked(values, n, pats2):
    """blocked[i, j] = 1 iff placing values[j] below values[i] completes one
    of the 2-row patterns ``pats2`` (rows of (p1, p2, q))."""
    nv = values.shape[0]
    out = np.zeros((nv, nv), dtype=np.uint8)
    for i in range(nv):
        for j in range(nv):
            for t in range(pats2.shape[0]):
                if pair_contains_mask(
                    values[i], values[j], n, pats2[t, 0], pats2[t, 1], pats2[t, 2]
                ):
                    out[i, j] = 1
                    break
    return out


def build_single_ok(values, n, pats1):
    """ok[i] = 1 iff values[i] alone contains none of the 1-row patterns
    ``pats1`` (rows of (p, q))."""
    nv = values.shape[0]
    out = np.ones(nv, dtype=np.uint8)
    for i in range(nv):
        for t in range(pats1.shape[0]):
            if row_contains_mask(values[i], n, pats1[t, 0], pats1[t, 1]):
                out[i] = 0
                break
    return out


def search_best_total(pops, order, blocked, allowed0, m, distinct, forced_first):
    """Largest total popcount over m-row sequences respecting the pairwise
    ``blocked`` table; -1 when no sequence is feasible.

    ``order`` lists candidate indices by decreasing popcount, so the bound
    cur + pops + remaining*maxpop is monotone along a level and the level
    can be abandoned at the first bound failure.  ``forced_first`` pins the
    first row (search-tree splitting); pass -1 for a full search.
    """
    nv = pops.shape[0]
    if m == 0:
        return 0
    allowed = np.zeros((m, nv), dtype=np.uint8)
    maxp = np.full(m, -1, dtype=np.int64)
    chosen = np.full(m, -1, dtype=np.int64)
    cursor = np.zeros(m, dtype=np.int64)
    used = np.zeros(nv, dtype=np.uint8)
    mp = -1
    for i in range(nv):
        allowed[0, i] = allowed0[i]
        if allowed0[i] and pops[i] > mp:
            mp = pops[i]
    maxp[0] = mp
    best = -1
    level = 0
    cur = 0
    while True:
        placed = False
        while cursor[level] < nv:
            oi = order[cursor[level]]
            cursor[level] += 1
            if allowed[level, oi] == 0:
                continue
            if distinct and used[oi] == 1:
                continue
            if level == 0 and forced_first >= 0 and oi != forced_first:
                continue
            ub = cur + pops[oi] + (m - level - 1) * maxp[level]
            if ub <= best:
                cursor[level] = nv
                break
            if level == m - 1:
                total = cur + pops[oi]
                if total > best:
                    best = total
                continue
            chosen[level] = oi
            cur += pops[oi]
            if distinct:
                used[oi] = 1
            mp = -1
            for i in range(nv):
                if allowed[level, i] == 1 and blocked[oi, i] == 0:
                    allowed[level + 1, i] = 1
                    if pops[i] > mp:
                        mp = pops[i]
                else:
                    allowed[level + 1, i] = 0
            maxp[level + 1] = mp
            level += 1
            cursor[level] = 0
            placed = True
            break
        if placed:
            continue
        level -= 1
        if level < 0:
            return best
        oi = chosen[level]
        cur -= pops[oi]
        if distinct:
            used[oi] = 0


def search_lex_first(pops, blocked, allowed0, m, distinct, target, out_idx):
    """First m-row sequence in lexicographic (candidate index) order whose
    total popcount equals ``target``; fills out_idx and returns True.

    Candidates are iterated in index order, so with values sorted ascending
    the first hit is the lexicographically least witness matrix.
    """
    nv = pops.shape[0]
    if m == 0:
        return target == 0
    allowed = np.zeros((m, nv), dtype=np.uint8)
    maxp = np.full(m, -1, dtype=np.int64)
    cursor = np.zeros(m, dtype=np.int64)
    used = np.zeros(nv, dtype=np.uint8)
    mp = -1
    for i in range(nv):
        allowed[0, i] = allowed0[i]
        if allowed0[i] and pops[i] > mp:
            mp = pops[i]
    maxp[0] = mp
    level = 0
    cur = 0
    while True:
        placed = False
        while cursor[level] < nv:
            ci = cursor[level]
            cursor[level] += 1
            if allowed[level, ci] == 0:
                continue
            if distinct and used[ci] == 1:
                continue
            if cur + pops[ci] + (m - level - 1) * maxp[level] < target:
                continue
            if level == m - 1:
                if cur + pops[ci] == target:
                    out_idx[level] = ci
                    return True
                continue
            out_idx[level] = ci
            cur += pops[ci]
            if distinct:
                used[ci] = 1
            mp = -1
            for i in range(nv):
                if allowed[level, i] == 1 and blocked[ci, i] == 0:
                    allowed[level + 1, i] = 1
                    if pops[i] > mp:
                        mp = pops[i]
                else:
                    allowed[level + 1, i] = 0
            maxp[level + 1] = mp
            level += 1
            cursor[level] = 0
            placed = True
            break
        if placed:
            continue
        level -= 1
        if level < 0:
            return False
        ci = out_idx[level]
        cur -= pops[ci]
        if distinct:
            used[ci] = 0


_PY_IMPLS = {
    "pair_contains_mask": pair_contains_mask,
    "row_contains_mask": row_contains_mask,
    "build_pair_blocked": build_pair_blocked,
    "build_single_ok": build_single_ok,
    "search_best_total": search_best_total,
    "search_lex_first": search_lex_first,
}

if JIT_ENABLED:
    pair_contains_mask = _njit(cache=True)(pair_contains_mask)
    row_contains_mask = _njit(cache=True)(row_contains_mask)
    build_pair_blocked = _njit(cache=True)(build_pair_blocked)
    build_single_ok = _njit(cache=True)(build_single_ok)
    search_best_total = _njit(cache=True)(search_best_total)
    search_lex_first = _njit(cache=True)(search_lex_first)


def pure_impl(name):
    """The uncompiled implementation, for parity tests and benchmarks."""
    return _PY_IMPLS[name]
