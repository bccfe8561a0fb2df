"""Array kernels for whole tree levels.

A Farey level is an ``(L, 6)`` int64 array with columns
``m, n, a_num, a_den, b_num, b_den``; a terminal level is ``(L, 4)`` with
columns ``m, n, s, t``.  Levels are kept in canonical order: Farey rows by
``(m, n, a)`` and terminal rows by ``(m, n, s, t)``.

Everything here is exact integer arithmetic.  Magnitudes stay far below the
int64 range for any height this package accepts (see ``MAX_HEIGHT``).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

# endpoints <= N+1 and terminal values <= (N+2)^2/4; the composite terminal
# sort key, about (N+2)^5/16, is the binding constraint
MAX_HEIGHT = 4000

FM, FN, AN, AD, BN, BD = range(6)
TM, TN, TS, TT = range(4)

ROOT_FAREY = np.array([[0, 0, 0, 1, 1, 0]], dtype=np.int64)
ROOT_TERMINAL = np.array([[1, 1, 1, 1]], dtype=np.int64)


def _reduce(num: np.ndarray, den: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    g = np.gcd(num, den)
    return num // g, den // g


def _chunked(fn: Callable[[np.ndarray], np.ndarray], rows: np.ndarray, jobs: int) -> np.ndarray:
    if jobs <= 1 or len(rows) < 4 * 65536:
        return fn(rows)
    parts = np.array_split(rows, jobs)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return np.concatenate(list(pool.map(fn, parts)))


# -- Farey side -------------------------------------------------------------


def farey_children(level: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Children of a canonical Farey level, canonically ordered.

    Returns ``(child_rows, parent_index)``.  Inside a block ``(M, N)`` the
    horizontal children of block ``(M-1, N)`` all lie left of ``M/N`` and the
    vertical children of block ``(M, N-1)`` all lie right of it, so ordering
    by ``(m, n, vertical?, parent)`` is already the order by left endpoint.
    """
    m, n = level[:, FM], level[:, FN]
    an, ad, bn, bd = level[:, AN], level[:, AD], level[:, BN], level[:, BD]

    # horizontal: a < (m+1)/n, right end min(b, (m+1)/n)
    h = an * n < (m + 1) * ad
    cut = bn * n >= (m + 1) * bd
    rn, rd = _reduce(m + 1, n)
    hb_n = np.where(cut, rn, bn)
    hb_d = np.where(cut, rd, bd)
    hor = np.stack([m + 1, n, an, ad, hb_n, hb_d], axis=1)[h]

    # vertical: b > m/(n+1), left end max(a, m/(n+1))
    v = bn * (n + 1) > m * bd
    cut = an * (n + 1) <= m * ad
    ln, ld = _reduce(m, n + 1)
    va_n = np.where(cut, ln, an)
    va_d = np.where(cut, ld, ad)
    ver = np.stack([m, n + 1, va_n, va_d, bn, bd], axis=1)[v]

    idx = np.arange(len(level), dtype=np.int64)
    rows = np.concatenate([hor, ver])
    parent = np.concatenate([idx[h], idx[v]])
    is_v = np.concatenate([np.zeros(h.sum(), np.int64), np.ones(v.sum(), np.int64)])
    order = np.lexsort((parent, is_v, rows[:, FN], rows[:, FM]))
    return rows[order], parent[order]


def block_starts(m_col: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Distinct ``m`` values of a level sorted by ``m`` and their start offsets."""
    ms, starts = np.unique(m_col, return_index=True)
    return ms, starts


def coprime_counts(ms: np.ndarray, ns: np.ndarray, mobius: np.ndarray) -> np.ndarray:
    """Number of coprime ``(p, q)`` in ``[1, m] x [1, n]`` for each pair."""
    out = np.zeros(len(ms), dtype=np.int64)
    top = int(min(ms.max(initial=0), ns.max(initial=0)))
    for d in range(1, top + 1):
        mu = mobius[d]
        if mu:
            out += mu * (ms // d) * (ns // d)
    return out


def mobius_table(limit: int) -> np.ndarray:
    mu = np.ones(limit + 1, dtype=np.int64)
    mu[0] = 0
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, limit + 1):
        if is_prime[p]:
            is_prime[2 * p :: p] = False
            mu[p::p] *= -1
            mu[p * p :: p * p] = 0
    return mu


def check_farey_level(level: np.ndarray, k: int, mobius: np.ndarray) -> str | None:
    """Check that a level is exactly every tagged interval of level ``k``.

    Each block must be a strictly increasing chain of reduced fractions of
    ``G(m, n)`` running from 0 to infinity, with as many links as
    ``G(m, n)`` has gaps.  Returns a description of the first problem, or
    ``None``.
    """
    m, n = level[:, FM], level[:, FN]
    an, ad, bn, bd = level[:, AN], level[:, AD], level[:, BN], level[:, BD]
    if np.any(m + n != k) or np.any(m < 0) or np.any(n < 0):
        return f"level {k}: vertex with wrong index sum"
    ms, starts = block_starts(m)
    if not np.array_equal(ms, np.arange(k + 1)):
        return f"level {k}: blocks present are {ms.tolist()}, expected 0..{k}"
    ends = np.append(starts[1:], len(level))
    ns = k - ms
    gaps = np.where(ms * ns > 0, coprime_counts(ms, ns, mobius) + 1, 1)
    bad = np.flatnonzero(ends - starts != gaps)
    if len(bad):
        b = bad[0]
        return f"level {k}: block ({ms[b]},{ns[b]}) has {ends[b] - starts[b]} intervals, expected {gaps[b]}"

    def in_g(num, den):
        zero = (num == 0) & (den == 1)
        inf = (num == 1) & (den == 0)
        fin = (num >= 1) & (den >= 1) & (num <= m) & (den <= n) & (np.gcd(num, den) == 1)
        return zero | inf | fin

    ok = in_g(an, ad) & in_g(bn, bd) & (an * bd < bn * ad)
    if not ok.all():
        i = int(np.flatnonzero(~ok)[0])
        return f"level {k}: row {i} {level[i].tolist()} is not an interval of G(m,n)"
    first, last = starts, ends - 1
    if np.any(an[first] != 0) or np.any(bd[last] != 0):
        return f"level {k}: some block does not run from 0 to infinity"
    link = np.ones(len(level), dtype=bool)
    link[last] = False
    nxt = np.flatnonzero(link)
    broken = (bn[nxt] != an[nxt + 1]) | (bd[nxt] != ad[nxt + 1])
    if broken.any():
        i = int(nxt[np.flatnonzero(broken)[0]])
        return f"level {k}: rows {i} and {i + 1} are not adjacent intervals"
    return None


def _neighbour(block: np.ndarray, num: int, den: int, right_of: bool) -> tuple[int, int]:
    """Term of the block's sequence right after ``num/den`` (or right before)."""
    lo, hi = 0, len(block)
    if right_of:
        # first row whose left endpoint exceeds num/den; its left end is the successor
        while lo < hi:
            mid = (lo + hi) // 2
            if block[mid, AN] * den <= num * block[mid, AD]:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(block):
            return 1, 0
        return int(block[lo, AN]), int(block[lo, AD])
    # last row whose right endpoint is below num/den
    while lo < hi:
        mid = (lo + hi) // 2
        if block[mid, BN] * den < num * block[mid, BD]:
            lo = mid + 1
        else:
            hi = mid
    if lo == 0:
        return 0, 1
    return int(block[lo - 1, BN]), int(block[lo - 1, BD])


def farey_parents(level: np.ndarray, parent_level: np.ndarray) -> np.ndarray:
    """Apply the four-case parent rule to every row.

    ``parent_level`` must be the full canonical previous level; it serves as
    the materialized ``G(m-1, n)`` and ``G(m, n-1)`` for the two rows per
    block that touch ``m/n``.
    """
    m, n = level[:, FM], level[:, FN]
    an, ad, bn, bd = level[:, AN], level[:, AD], level[:, BN], level[:, BD]
    out = level.copy()
    full = (m > 0) & (n > 0)
    cb = bn * n - m * bd  # sign of b - m/n
    ca = an * n - m * ad  # sign of a - m/n

    drop_h = (m > 0) & ((n == 0) | (cb <= 0))
    drop_v = ~drop_h
    out[drop_h, FM] -= 1
    out[drop_v, FN] -= 1
    edge = np.flatnonzero((m == 0) | (n == 0))
    out[edge, AN:] = (0, 1, 1, 0)

    touch_b = np.flatnonzero(full & (cb == 0))
    touch_a = np.flatnonzero(full & (ca == 0))
    if len(touch_b) or len(touch_a):
        ms, starts = block_starts(parent_level[:, FM])
        ends = np.append(starts[1:], len(parent_level))
        where = {int(x): (int(s), int(e)) for x, s, e in zip(ms, starts, ends)}
        for i in touch_b:
            s, e = where[int(m[i]) - 1]
            out[i, BN:BD + 1] = _neighbour(parent_level[s:e], int(an[i]), int(ad[i]), True)
        for i in touch_a:
            s, e = where[int(m[i])]
            out[i, AN:AD + 1] = _neighbour(parent_level[s:e], int(bn[i]), int(bd[i]), False)
    return out


def farey_transpose(level: np.ndarray) -> np.ndarray:
    return level[:, [FN, FM, BD, BN, AD, AN]]


# -- terminal side ----------------------------------------------------------


def terminal_key(level: np.ndarray, k: int) -> np.ndarray:
    """Single int64 sort key equivalent to ordering by ``(m, n, s, t)``.

    ``n`` is implied by ``m`` within a level, so it is left out.
    """
    width = (k + 2) ** 2 // 4 + 1
    return (level[:, TM] * width + level[:, TS]) * width + level[:, TT]


def canonical_terminal(level: np.ndarray, k: int) -> np.ndarray:
    """Permutation that sorts a terminal level canonically."""
    return np.argsort(terminal_key(level, k), kind="stable")


def terminal_children(level: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Children of a canonical terminal level at level ``k``, canonically ordered."""
    m, n, s, t = level[:, TM], level[:, TN], level[:, TS], level[:, TT]
    d = s - t
    h = d > -n
    v = d < m
    hor = np.stack([m + 1, n, s + n, t], axis=1)[h]
    ver = np.stack([m, n + 1, s, t + m], axis=1)[v]
    idx = np.arange(len(level), dtype=np.int64)
    rows = np.concatenate([hor, ver])
    parent = np.concatenate([idx[h], idx[v]])
    order = canonical_terminal(rows, k + 1)
    return rows[order], parent[order]


def terminal_parents(level: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Parent rule on every row; the mask flags rows where it is undefined."""
    m, n, s, t = level[:, TM], level[:, TN], level[:, TS], level[:, TT]
    gt = s > t
    out = level.copy()
    out[gt, TM] -= 1
    out[gt, TS] -= n[gt]
    lt = s < t
    out[lt, TN] -= 1
    out[lt, TT] -= m[lt]
    bad = (s == t) | (out[:, TM] < 1) | (out[:, TN] < 1)
    return out, bad


def terminal_transpose(level: np.ndarray) -> np.ndarray:
    return level[:, [TN, TM, TT, TS]]


# -- the interval-to-terminal-pair map ----------------------------------------


def floor_sum(n: np.ndarray, m: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``sum(floor((a*i + b) / m) for i in range(n))`` elementwise.

    Euclid-like reduction; needs ``n >= 0``, ``m >= 1``, ``a, b >= 0``.
    """
    n, m, a, b = (np.asarray(x, dtype=np.int64) for x in (n, m, a, b))
    total = np.zeros(len(n), dtype=np.int64)
    idx = np.arange(len(n))
    while len(idx):
        q, a = np.divmod(a, m)
        acc = (n - 1) * n // 2 * q
        q, b = np.divmod(b, m)
        total[idx] += acc + n * q
        y = a * n + b
        go = y >= m
        if not go.all():
            idx, y, m, a = idx[go], y[go], m[go], a[go]
        n, b = np.divmod(y, m)
        m, a = a, m
    return total


def suranyi_level(level: np.ndarray) -> np.ndarray:
    """Terminal pair of the ranking table for every Farey row.

    Size is ``(m+1, n+1)`` and the slope is the mediant ``p/q`` of the row's
    endpoints.  Uses the closed counts
    ``tau(M,1) = sum_{t<N} max(0, M - ceil(t p/q))`` and
    ``tau(1,N) = sum_{s<M} max(0, N - ceil(s q/p))``.
    """
    M = level[:, FM] + 1
    N = level[:, FN] + 1
    p = level[:, AN] + level[:, BN]
    q = level[:, AD] + level[:, BD]
    c1 = np.minimum(N, (M - 1) * q // p + 1)
    s = c1 * M - floor_sum(c1, q, p, q - 1)
    c2 = np.minimum(M, (N - 1) * p // q + 1)
    t = c2 * N - floor_sum(c2, p, q, p - 1)
    return np.stack([M, N, s, t], axis=1)


def suranyi_level_chunked(level: np.ndarray, jobs: int = 1) -> np.ndarray:
    return _chunked(suranyi_level, level, jobs)
