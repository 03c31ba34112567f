"""Pure-numpy fallbacks for the scan kernels in `_kernels_numba`.

Same signatures and results; selected by setting BILOCALE_LAB_PURE_NUMPY=1
(or automatically when numba is unavailable). Powerset scans are
vectorised over a membership matrix instead of a jit loop.
"""

import numpy as np

backend_name = "numpy"


def _membership(n):
    """(2**n, n) bool matrix: row m has the bits of mask m."""
    masks = np.arange(1 << n, dtype=np.int64)
    return masks, (masks[:, None] >> np.arange(n)) & 1 != 0


def _mask_join_table(join, bottom, n):
    """join of the elements of every mask, as a (2**n,) int array."""
    total = 1 << n
    out = np.full(total, bottom, dtype=np.int64)
    masks = np.arange(total, dtype=np.int64)
    pop = np.zeros(total, dtype=np.int64)
    m = masks.copy()
    while m.any():
        pop += (m & 1).astype(np.int64)
        m >>= 1
    for k in range(1, n + 1):
        layer = masks[pop == k]
        low = layer & -layer
        rest = layer ^ low
        lowidx = np.int64(np.log2(low.astype(np.float64)) + 0.5)
        out[layer] = join[out[rest], lowidx]
    return out


def heyting_table(meet, join, leq, bottom):
    n = meet.shape[0]
    imp = np.full((n, n), bottom, dtype=np.int64)
    for x in range(n):
        cond = leq[meet[x], :]  # cond[a, b] iff x /\ a <= b
        imp = np.where(cond, join[imp, x], imp)
    return imp


def distributive_witness(meet, join):
    lhs = meet[:, join]                              # (a, b, c)
    rhs = join[meet[:, :, None], meet[:, None, :]]   # (a, b, c)
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return -1, -1, -1
    return tuple(int(v) for v in bad[0])


def frame_law_witness(meet, join, bottom):
    n = meet.shape[0]
    total = 1 << n
    masks = np.arange(total, dtype=np.int64)
    jb = _mask_join_table(join, bottom, n)
    # rhs[a, m] = \/ {a /\ x : x in m}, built with the same lowest-bit recurrence
    rhs = np.full((n, total), bottom, dtype=np.int64)
    pop = np.zeros(total, dtype=np.int64)
    m = masks.copy()
    while m.any():
        pop += (m & 1).astype(np.int64)
        m >>= 1
    rows = np.arange(n)
    for k in range(1, n + 1):
        layer = masks[pop == k]
        low = layer & -layer
        rest = layer ^ low
        lowidx = np.int64(np.log2(low.astype(np.float64)) + 0.5)
        rhs[:, layer] = join[rhs[:, rest], meet[rows[:, None], lowidx[None, :]]]
    lhs = meet[:, jb]  # (n, total)
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return -1, -1
    a, bm = bad[0]
    return int(a), int(bm)


def is_sublocale_mask(mask, meet, imp, top):
    n = meet.shape[0]
    mask = int(mask)
    if not (mask >> top) & 1:
        return False
    members = [i for i in range(n) if (mask >> i) & 1]
    for s in members:
        for t in members:
            if not (mask >> meet[s, t]) & 1:
                return False
        for x in range(n):
            if not (mask >> imp[x, s]) & 1:
                return False
    return True


def sublocale_masks(meet, imp, top):
    n = meet.shape[0]
    masks, mem = _membership(n)
    ok = mem[:, top].copy()
    for i in range(n):
        for j in range(i, n):
            ok &= ~(mem[:, i] & mem[:, j] & ~mem[:, meet[i, j]])
    for x in range(n):
        for s in range(n):
            ok &= ~(mem[:, s] & ~mem[:, imp[x, s]])
    return masks[ok]


def meet_close(mask, meet):
    n = meet.shape[0]
    v = np.zeros(n, dtype=bool)
    for i in range(n):
        if (int(mask) >> i) & 1:
            v[i] = True
    while True:
        sel = np.nonzero(v)[0]
        new = v.copy()
        new[meet[np.ix_(sel, sel)].ravel()] = True
        if (new == v).all():
            break
        v = new
    out = 0
    for i in np.nonzero(v)[0]:
        out |= 1 << int(i)
    return out


def ideal_masks(down_masks, join, bottom):
    n = join.shape[0]
    masks, mem = _membership(n)
    ok = mem[:, bottom].copy()
    for i in range(n):
        is_down = (masks & int(down_masks[i])) == int(down_masks[i])
        ok &= ~(mem[:, i] & ~is_down)
        for j in range(i, n):
            ok &= ~(mem[:, i] & mem[:, j] & ~mem[:, join[i, j]])
    return masks[ok]


def supplement_scan(s_mask, sub_masks, meet, top):
    tbit = 1 << top
    disjoint = (sub_masks & int(s_mask)) == tbit
    u = tbit
    for t in sub_masks[disjoint]:
        u |= int(t)
    return meet_close(u, meet)


def supplement_gen(s_mask, gen_masks, meet, top):
    tbit = 1 << top
    u = tbit
    for g in gen_masks:
        if int(g) & int(s_mask) == tbit:
            u |= int(g)
    return meet_close(u, meet)


def category_statements(sub_masks, cover_mask, iopen_nz_masks, gen_masks, meet, top):
    tbit = 1 << top
    cover = int(cover_mask)
    ok3, wit3, ok4, wit4 = True, -1, True, -1
    for s in sub_masks:
        s = int(s)
        if s & ~cover != 0:
            continue
        if ok3:
            for m in iopen_nz_masks:
                if int(m) & ~s == 0:
                    ok3, wit3 = False, s
                    break
        if ok4:
            supp = supplement_gen(s, gen_masks, meet, top)
            for m in iopen_nz_masks:
                if int(m) & supp == tbit:
                    ok4, wit4 = False, s
                    break
        if not ok3 and not ok4:
            break
    return ok3, wit3, ok4, wit4


def fip_violation(join, top, bottom):
    n = join.shape[0]
    jb = _mask_join_table(join, bottom, n)
    fip = jb != top
    void_total = jb == top
    bad = np.nonzero(fip & void_total)[0]
    return int(bad[0]) if bad.size else -1


def covering_witness(meet, join, leq, elems1, elems2, bottom):
    n = meet.shape[0]
    pair_meets = meet[np.ix_(elems1, elems2)].ravel()
    for a in range(n):
        members = pair_meets[leq[pair_meets, a]]
        acc = bottom
        for m in members:
            acc = join[acc, m]
        if acc != a:
            return a
    return -1
