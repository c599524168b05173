"""Loop kernels compiled with numba.

Encoding shared with :mod:`tropalg.kernels._np`: magnitudes are int64 with
``NEG`` as the bottom sentinel, tags are int64 (0 positive/real,
1 negative, 2 balanced/ghost), ``kind`` is 0 rmax, 1 smax, 2 supertropical.
"""
import numpy as np

from .._backend import njit

NEG = np.iinfo(np.int64).min


@njit
def s_add(m1, t1, m2, t2, kind):
    if m1 > m2:
        return m1, t1
    if m2 > m1:
        return m2, t2
    if m1 == NEG:
        return NEG, 0
    if kind == 2:
        return m1, 2
    if t1 == t2:
        return m1, t1
    return m1, 2


@njit
def s_mul(m1, t1, m2, t2, kind):
    if m1 == NEG or m2 == NEG:
        return NEG, 0
    if t1 == 2 or t2 == 2:
        return m1 + m2, 2
    return m1 + m2, t1 ^ t2


@njit
def ew_add(m1, t1, m2, t2, kind):
    a = m1.ravel()
    b = m2.ravel()
    ta = t1.ravel()
    tb = t2.ravel()
    om = np.empty(a.size, np.int64)
    ot = np.empty(a.size, np.int64)
    for i in range(a.size):
        om[i], ot[i] = s_add(a[i], ta[i], b[i], tb[i], kind)
    return om.reshape(m1.shape), ot.reshape(m1.shape)


@njit
def ew_mul(m1, t1, m2, t2, kind):
    a = m1.ravel()
    b = m2.ravel()
    ta = t1.ravel()
    tb = t2.ravel()
    om = np.empty(a.size, np.int64)
    ot = np.empty(a.size, np.int64)
    for i in range(a.size):
        om[i], ot[i] = s_mul(a[i], ta[i], b[i], tb[i], kind)
    return om.reshape(m1.shape), ot.reshape(m1.shape)


@njit
def matmul(ma, ta, mb, tb, kind):
    n, p = ma.shape
    q = mb.shape[1]
    om = np.full((n, q), NEG, np.int64)
    ot = np.zeros((n, q), np.int64)
    for i in range(n):
        for j in range(q):
            cm = NEG
            ct = 0
            for s in range(p):
                pm, pt = s_mul(ma[i, s], ta[i, s], mb[s, j], tb[s, j], kind)
                cm, ct = s_add(cm, ct, pm, pt, kind)
            om[i, j] = cm
            ot[i, j] = ct
    return om, ot


@njit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit
def _det_dp(m, t, kind, signed, dpm, dpt):
    """Sum over permutations by dynamic programming on used-column sets.

    Row r is matched after rows 0..r-1; placing it at column j adds one
    inversion per already-used column greater than j.
    """
    k = m.shape[0]
    full = (1 << k) - 1
    for mask in range(full + 1):
        dpm[mask] = NEG
        dpt[mask] = 0
    dpm[0] = 0
    flip = signed and kind == 1
    for mask in range(full):
        if dpm[mask] == NEG:
            continue
        r = _popcount(mask)
        for j in range(k):
            bit = 1 << j
            if mask & bit:
                continue
            if m[r, j] == NEG:
                continue
            vm, vt = s_mul(dpm[mask], dpt[mask], m[r, j], t[r, j], kind)
            if flip and vt != 2 and (_popcount(mask >> (j + 1)) & 1):
                vt = 1 - vt
            dpm[mask | bit], dpt[mask | bit] = s_add(dpm[mask | bit], dpt[mask | bit], vm, vt, kind)
    return dpm[full], dpt[full]


@njit
def det(m, t, kind, signed):
    k = m.shape[0]
    dpm = np.empty(1 << k, np.int64)
    dpt = np.empty(1 << k, np.int64)
    return _det_dp(m, t, kind, signed, dpm, dpt)


@njit
def det_batch(m, t, kind, signed):
    b = m.shape[0]
    k = m.shape[1]
    om = np.empty(b, np.int64)
    ot = np.empty(b, np.int64)
    dpm = np.empty(1 << k, np.int64)
    dpt = np.empty(1 << k, np.int64)
    for i in range(b):
        om[i], ot[i] = _det_dp(m[i], t[i], kind, signed, dpm, dpt)
    return om, ot


@njit
def compound(m, t, combos, kind):
    c, k = combos.shape
    om = np.empty((c, c), np.int64)
    ot = np.empty((c, c), np.int64)
    sm = np.empty((k, k), np.int64)
    st = np.empty((k, k), np.int64)
    dpm = np.empty(1 << k, np.int64)
    dpt = np.empty(1 << k, np.int64)
    for a in range(c):
        for b in range(c):
            for r in range(k):
                for s in range(k):
                    sm[r, s] = m[combos[a, r], combos[b, s]]
                    st[r, s] = t[combos[a, r], combos[b, s]]
            om[a, b], ot[a, b] = _det_dp(sm, st, kind, True, dpm, dpt)
    return om, ot


@njit
def principal_traces(m, t, kind):
    """tr of every compound: entry j is the sum of all j x j principal minors."""
    n = m.shape[0]
    om = np.full(n + 1, NEG, np.int64)
    ot = np.zeros(n + 1, np.int64)
    om[0] = 0
    idx = np.empty(n, np.int64)
    sm = np.empty((n, n), np.int64)
    st = np.empty((n, n), np.int64)
    dpm = np.empty(1 << n, np.int64)
    dpt = np.empty(1 << n, np.int64)
    for mask in range(1, 1 << n):
        k = 0
        for i in range(n):
            if mask & (1 << i):
                idx[k] = i
                k += 1
        for r in range(k):
            for s in range(k):
                sm[r, s] = m[idx[r], idx[s]]
                st[r, s] = t[idx[r], idx[s]]
        dm, dt = _det_dp(sm[:k, :k], st[:k, :k], kind, True, dpm, dpt)
        om[k], ot[k] = s_add(om[k], ot[k], dm, dt, kind)
    return om, ot


@njit
def adjoint(m, t, kind):
    n = m.shape[0]
    om = np.empty((n, n), np.int64)
    ot = np.empty((n, n), np.int64)
    sm = np.empty((max(n - 1, 0), max(n - 1, 0)), np.int64)
    st = np.empty((max(n - 1, 0), max(n - 1, 0)), np.int64)
    dpm = np.empty(1 << max(n - 1, 0), np.int64)
    dpt = np.empty(1 << max(n - 1, 0), np.int64)
    for i in range(n):
        for j in range(n):
            # entry (i, j) is the signed minor deleting row j and column i
            r2 = 0
            for r in range(n):
                if r == j:
                    continue
                s2 = 0
                for s in range(n):
                    if s == i:
                        continue
                    sm[r2, s2] = m[r, s]
                    st[r2, s2] = t[r, s]
                    s2 += 1
                r2 += 1
            dm, dt = _det_dp(sm, st, kind, True, dpm, dpt)
            if kind == 1 and (i + j) % 2 == 1 and dt != 2 and dm != NEG:
                dt = 1 - dt
            om[i, j] = dm
            ot[i, j] = dt
    return om, ot


@njit
def assignment_value(w):
    """Maximum-weight perfect matching value (Hungarian method, exact ints).

    ``w`` uses NEG for forbidden arcs. Returns ``(value, feasible)``.
    """
    n = w.shape[0]
    if n == 0:
        return 0, True
    big = 1
    for i in range(n):
        for j in range(n):
            if w[i, j] != NEG:
                v = abs(w[i, j])
                if v > big:
                    big = v
    forbid = (n + 1) * (2 * big + 1)
    cost = np.empty((n + 1, n + 1), np.int64)
    for i in range(n):
        for j in range(n):
            cost[i + 1, j + 1] = forbid if w[i, j] == NEG else -w[i, j]
    u = np.zeros(n + 1, np.int64)
    v = np.zeros(n + 1, np.int64)
    p = np.zeros(n + 1, np.int64)
    way = np.zeros(n + 1, np.int64)
    inf = np.iinfo(np.int64).max
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = np.full(n + 1, inf, np.int64)
        used = np.zeros(n + 1, np.bool_)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = inf
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = cost[i0, j] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break
    total = 0
    for j in range(1, n + 1):
        if w[p[j] - 1, j - 1] == NEG:
            return 0, False
        total += w[p[j] - 1, j - 1]
    return total, True
