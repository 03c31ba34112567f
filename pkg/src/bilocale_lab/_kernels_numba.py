"""Numba-compiled inner loops for the exhaustive lattice scans.

Subsets are int64 bitmasks over element indices (n <= 24); every kernel
that walks a powerset assumes the caller applied SUBSET_GUARD first.
`_kernels_numpy` is the drop-in pure-numpy twin; `kernels` picks one at
import time.
"""

import numpy as np
from numba import njit

backend_name = "numba"


@njit(cache=True)
def heyting_table(meet, join, leq, bottom):
    n = meet.shape[0]
    imp = np.empty((n, n), np.int64)
    for a in range(n):
        for b in range(n):
            r = bottom
            for x in range(n):
                if leq[meet[x, a], b]:
                    r = join[r, x]
            imp[a, b] = r
    return imp


@njit(cache=True)
def distributive_witness(meet, join):
    n = meet.shape[0]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if meet[a, join[b, c]] != join[meet[a, b], meet[a, c]]:
                    return a, b, c
    return -1, -1, -1


@njit(cache=True)
def frame_law_witness(meet, join, bottom):
    """First (a, B) with meet(a, join B) != join{meet(a, b) : b in B}, over every subset mask B."""
    n = meet.shape[0]
    for bm in range(1 << n):
        jb = bottom
        for x in range(n):
            if (bm >> x) & 1:
                jb = join[jb, x]
        for a in range(n):
            rhs = bottom
            for x in range(n):
                if (bm >> x) & 1:
                    rhs = join[rhs, meet[a, x]]
            if meet[a, jb] != rhs:
                return a, bm
    return -1, -1


@njit(cache=True)
def is_sublocale_mask(mask, meet, imp, top):
    n = meet.shape[0]
    if not (mask >> top) & 1:
        return False
    for s in range(n):
        if not (mask >> s) & 1:
            continue
        for t in range(s, n):
            if (mask >> t) & 1 and not (mask >> meet[s, t]) & 1:
                return False
        for x in range(n):
            if not (mask >> imp[x, s]) & 1:
                return False
    return True


@njit(cache=True)
def sublocale_masks(meet, imp, top):
    n = meet.shape[0]
    total = 1 << n
    out = np.empty(total, np.int64)
    k = 0
    tbit = 1 << top
    for mask in range(total):
        if mask & tbit and is_sublocale_mask(mask, meet, imp, top):
            out[k] = mask
            k += 1
    return out[:k].copy()


@njit(cache=True)
def meet_close(mask, meet):
    n = meet.shape[0]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            if not (mask >> i) & 1:
                continue
            for j in range(i, n):
                if not (mask >> j) & 1:
                    continue
                m = meet[i, j]
                if not (mask >> m) & 1:
                    mask |= 1 << m
                    changed = True
    return mask


@njit(cache=True)
def ideal_masks(down_masks, join, bottom):
    """Downsets containing bottom and closed under binary join."""
    n = join.shape[0]
    total = 1 << n
    out = np.empty(total, np.int64)
    k = 0
    bbit = 1 << bottom
    for mask in range(total):
        if not mask & bbit:
            continue
        ok = True
        for i in range(n):
            if not (mask >> i) & 1:
                continue
            if down_masks[i] & ~mask != 0:
                ok = False
                break
            for j in range(i, n):
                if (mask >> j) & 1 and not (mask >> join[i, j]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out[k] = mask
            k += 1
    return out[:k].copy()


@njit(cache=True)
def supplement_scan(s_mask, sub_masks, meet, top):
    """Join of every enumerated sublocale disjoint from s (disjoint = meets in {top})."""
    tbit = 1 << top
    u = tbit
    for idx in range(sub_masks.shape[0]):
        t = sub_masks[idx]
        if t & s_mask == tbit:
            u |= t
    return meet_close(u, meet)


@njit(cache=True)
def supplement_gen(s_mask, gen_masks, meet, top):
    """Same join, but over the singleton-generated sublocales only.

    gen_masks[t] is the smallest sublocale containing t; any sublocale
    disjoint from s is the union of those of its members, so the two
    joins agree (cross-checked against supplement_scan in the tests).
    """
    tbit = 1 << top
    u = tbit
    for t in range(gen_masks.shape[0]):
        g = gen_masks[t]
        if g & s_mask == tbit:
            u |= g
    return meet_close(u, meet)


@njit(cache=True)
def category_statements(sub_masks, cover_mask, iopen_nz_masks, gen_masks, meet, top):
    """Quantify over every first-category sublocale (mask inside cover_mask):
    ok3 <=> all have void interior against iopen_nz_masks;
    ok4 <=> all have a supplement meeting every nonzero open in the list.
    """
    tbit = 1 << top
    ok3 = True
    wit3 = np.int64(-1)
    ok4 = True
    wit4 = np.int64(-1)
    for idx in range(sub_masks.shape[0]):
        s = sub_masks[idx]
        if s & ~cover_mask != 0:
            continue
        if ok3:
            for m in iopen_nz_masks:
                if m & ~s == 0:
                    ok3 = False
                    wit3 = s
                    break
        if ok4:
            supp = supplement_gen(s, gen_masks, meet, top)
            for m in iopen_nz_masks:
                if m & supp == tbit:
                    ok4 = False
                    wit4 = s
                    break
        if not ok3 and not ok4:
            break
    return ok3, wit3, ok4, wit4


@njit(cache=True)
def fip_violation(join, top, bottom):
    """First family of closed sublocales (as the mask of inducing elements)
    with the finite intersection property but void total intersection.

    Joins are monotone over subsets, so a family has the FIP exactly when
    the join of all its elements stays below top.
    """
    n = join.shape[0]
    for am in range(1 << n):
        jv = bottom
        for x in range(n):
            if (am >> x) & 1:
                jv = join[jv, x]
        fip = jv != top
        void_total = jv == top
        if fip and void_total:
            return am
    return -1


@njit(cache=True)
def covering_witness(meet, join, leq, elems1, elems2, bottom):
    """First element not recovered as the join of side-pair meets below it, or -1."""
    n = meet.shape[0]
    for a in range(n):
        acc = bottom
        for i1 in range(elems1.shape[0]):
            e1 = elems1[i1]
            for i2 in range(elems2.shape[0]):
                m = meet[e1, elems2[i2]]
                if leq[m, a]:
                    acc = join[acc, m]
        if acc != a:
            return a
    return -1
