"""Vectorized numpy kernels with the same contracts as :mod:`._jit`."""
import numpy as np
from scipy.optimize import linear_sum_assignment

NEG = np.iinfo(np.int64).min


def ew_add(m1, t1, m2, t2, kind):
    gt = m1 > m2
    lt = m2 > m1
    om = np.where(lt, m2, m1)
    ot = np.where(gt, t1, np.where(lt, t2, np.where(t1 == t2, t1, 2)))
    if kind == 2:
        ot = np.where(gt | lt, ot, 2)
    ot = np.where(om == NEG, 0, ot)
    return om.astype(np.int64), ot.astype(np.int64)


def ew_mul(m1, t1, m2, t2, kind):
    z = (m1 == NEG) | (m2 == NEG)
    om = np.where(z, 0, m1) + np.where(z, 0, m2)
    om[z] = NEG
    ot = np.where((t1 == 2) | (t2 == 2), 2, t1 ^ t2)
    ot[z] = 0
    return om, ot.astype(np.int64)


def reduce_add(m, t, kind, axis=-1):
    """Semiring sum along ``axis``."""
    mx = m.max(axis=axis)
    at = m == np.expand_dims(mx, axis)
    if kind == 0:
        ot = np.zeros(mx.shape, np.int64)
    elif kind == 2:
        cnt = at.sum(axis=axis)
        ghost = (at & (t == 2)).any(axis=axis)
        ot = np.where((cnt >= 2) | ghost, 2, 0).astype(np.int64)
    else:
        pos = (at & (t == 0)).any(axis=axis)
        neg = (at & (t == 1)).any(axis=axis)
        bal = (at & (t == 2)).any(axis=axis)
        ot = np.where(bal | (pos & neg), 2, np.where(neg, 1, 0)).astype(np.int64)
    ot = np.where(mx == NEG, 0, ot)
    return mx.astype(np.int64), ot


def matmul(ma, ta, mb, tb, kind):
    pm, pt = ew_mul(ma[:, :, None], ta[:, :, None], mb[None, :, :], tb[None, :, :], kind)
    return reduce_add(pm, pt, kind, axis=1)


_LAYERS = {}


def _layers(k):
    """Per-popcount mask lists and inversion-parity tables for the subset DP."""
    if k not in _LAYERS:
        masks = np.arange(1 << k, dtype=np.int64)
        pc = np.zeros(1 << k, np.int64)
        for j in range(k):
            pc += (masks >> j) & 1
        layers = [masks[pc == r] for r in range(k + 1)]
        # parity[j][mask]: parity of used columns greater than j
        parity = np.stack([pc[masks >> (j + 1)] & 1 for j in range(k)]) if k else np.zeros((0, 1), np.int64)
        _LAYERS[k] = (layers, parity)
    return _LAYERS[k]


def det_batch(m, t, kind, signed):
    """Determinants (or permanents) of a stack of k x k matrices."""
    b, k = m.shape[0], m.shape[1]
    size = 1 << k
    dpm = np.full((b, size), NEG, np.int64)
    dpt = np.zeros((b, size), np.int64)
    dpm[:, 0] = 0
    layers, parity = _layers(k)
    flip = signed and kind == 1
    for r in range(k):
        src = layers[r]
        for j in range(k):
            bit = 1 << j
            sel = src[(src & bit) == 0]
            if sel.size == 0:
                continue
            vm, vt = ew_mul(dpm[:, sel], dpt[:, sel], m[:, r, j][:, None], t[:, r, j][:, None], kind)
            if flip:
                odd = (parity[j][sel] == 1)[None, :] & (vt != 2)
                vt = np.where(odd, 1 - vt, vt)
            dst = sel | bit
            dpm[:, dst], dpt[:, dst] = ew_add(dpm[:, dst], dpt[:, dst], vm, vt, kind)
    return dpm[:, size - 1].copy(), dpt[:, size - 1].copy()


def det(m, t, kind, signed):
    om, ot = det_batch(m[None], t[None], kind, signed)
    return int(om[0]), int(ot[0])


def compound(m, t, combos, kind):
    c, k = combos.shape
    rows = combos[:, None, :, None]
    cols = combos[None, :, None, :]
    sm = m[rows, cols].reshape(c * c, k, k)
    st = t[rows, cols].reshape(c * c, k, k)
    om, ot = det_batch(sm, st, kind, True)
    return om.reshape(c, c), ot.reshape(c, c)


def principal_traces(m, t, kind):
    from itertools import combinations

    n = m.shape[0]
    om = np.full(n + 1, NEG, np.int64)
    ot = np.zeros(n + 1, np.int64)
    om[0] = 0
    for k in range(1, n + 1):
        idx = np.array(list(combinations(range(n), k)), np.int64)
        sm = m[idx[:, :, None], idx[:, None, :]]
        st = t[idx[:, :, None], idx[:, None, :]]
        dm, dt = det_batch(sm, st, kind, True)
        rm, rt = reduce_add(dm, dt, kind)
        om[k], ot[k] = rm, rt
    return om, ot


def adjoint(m, t, kind):
    n = m.shape[0]
    if n == 1:
        return np.zeros((1, 1), np.int64), np.zeros((1, 1), np.int64)
    keep = np.array([[s for s in range(n) if s != d] for d in range(n)], np.int64)
    # entry (i, j): delete row j, column i
    rows = keep[None, :, :, None]  # indexed by j
    cols = keep[:, None, None, :]  # indexed by i
    sm = m[rows, cols].reshape(n * n, n - 1, n - 1)
    st = t[rows, cols].reshape(n * n, n - 1, n - 1)
    om, ot = det_batch(sm, st, kind, True)
    om = om.reshape(n, n)
    ot = ot.reshape(n, n)
    if kind == 1:
        ii, jj = np.indices((n, n))
        odd = ((ii + jj) % 2 == 1) & (ot != 2) & (om != NEG)
        ot = np.where(odd, 1 - ot, ot)
    return om, ot


def assignment_value(w):
    n = w.shape[0]
    if n == 0:
        return 0, True
    finite = w != NEG
    if not finite.any():
        return 0, False
    big = int(np.abs(w[finite]).max()) + 1
    forbid = (n + 1) * (2 * big + 1)
    cost = np.where(finite, -w, forbid)
    r, c = linear_sum_assignment(cost)
    if not finite[r, c].all():
        return 0, False
    return int(w[r, c].sum()), True
