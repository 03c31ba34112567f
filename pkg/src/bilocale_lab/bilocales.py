"""Bilocales: a frame with two subframes whose pair-meets generate every
element from below, plus the side-indexed calculus on sublocales.

Sides are addressed by i in {1, 2} with j always the other one; every
orientation-sensitive operation takes the side explicitly. Element-level
"x is i-dense" means the open sublocale of x meets every nonzero i-open,
equivalently x has nonzero meet with every nonzero member of side i.
"""

from __future__ import annotations

import numpy as np

from . import kernels, sublocales
from .bitsets import bits, mask_of
from .errors import CoveringFails, NotInSide
from .frames import Frame, subframe
from .limits import SUBSET_GUARD


def other(side: int) -> int:
    if side not in (1, 2):
        raise ValueError(f"side must be 1 or 2, got {side}")
    return 2 if side == 1 else 1


def check_orientation(orientation):
    i, j = orientation
    if {i, j} != {1, 2}:
        raise ValueError(f"orientation must be (1,2) or (2,1), got {orientation}")
    return i, j


class Bilocale:
    def __init__(self, frame: Frame, first_mask: int, second_mask: int):
        self.frame = frame
        self._sides = {1: first_mask, 2: second_mask}
        self._cache = {}

    def side_mask(self, i: int) -> int:
        return self._sides[check_side(i)]

    def side_elems(self, i: int) -> tuple:
        key = ("elems", i)
        if key not in self._cache:
            self._cache[key] = tuple(bits(self.side_mask(i)))
        return self._cache[key]

    def in_side(self, i: int, x: int) -> bool:
        return bool((self.side_mask(i) >> x) & 1)

    def is_symmetric(self) -> bool:
        u = self.frame.universe_mask
        return self._sides[1] == u and self._sides[2] == u

    def __repr__(self):
        return (
            f"Bilocale(n={self.frame.n}, |L1|={len(self.side_elems(1))}, "
            f"|L2|={len(self.side_elems(2))})"
        )


def check_side(i: int) -> int:
    if i not in (1, 2):
        raise ValueError(f"side must be 1 or 2, got {i}")
    return i


def build_bilocale(f: Frame, first, second) -> Bilocale:
    m1 = first if isinstance(first, int) else mask_of(first)
    m2 = second if isinstance(second, int) else mask_of(second)
    subframe(f, m1, side=1)
    subframe(f, m2, side=2)
    e1 = np.fromiter(bits(m1), dtype=np.int64)
    e2 = np.fromiter(bits(m2), dtype=np.int64)
    bad = int(kernels.covering_witness(f.meet, f.join, f.leq, e1, e2, f.bottom))
    if bad >= 0:
        raise CoveringFails(bad)
    return Bilocale(f, m1, m2)


def symmetric_bilocale(f: Frame) -> Bilocale:
    u = f.universe_mask
    return Bilocale(f, u, u)


def bilocale_from_json(obj) -> Bilocale:
    from .frames import frame_from_json

    f = frame_from_json(obj["frame"])
    return build_bilocale(f, obj["first"], obj["second"])


def bilocale_to_json(b: Bilocale) -> dict:
    from .frames import frame_to_json

    return {
        "frame": frame_to_json(b.frame),
        "first": list(b.side_elems(1)),
        "second": list(b.side_elems(2)),
    }


# ---- element-level calculus -------------------------------------------


def bullet(b: Bilocale, i: int, c: int) -> int:
    """Largest opposite-side element disjoint from c (join of them all)."""
    if not b.in_side(i, c):
        raise NotInSide(f"element {c} is not in side {i}")
    return _bullet_table(b, i)[c]


def _bullet_table(b: Bilocale, i: int):
    key = ("bullet", i)
    if key not in b._cache:
        f = b.frame
        j = other(i)
        tbl = {}
        for c in b.side_elems(i):
            tbl[c] = f.join_of(x for x in b.side_elems(j) if f.meet[x, c] == f.bottom)
        b._cache[key] = tbl
    return b._cache[key]


def is_i_dense_element(b: Bilocale, i: int, x: int) -> bool:
    """x meets every nonzero member of side i (= o(x) is an i-dense sublocale)."""
    f = b.frame
    return all(
        f.meet[a, x] != f.bottom for a in b.side_elems(i) if a != f.bottom
    )


def dense_open_elements(b: Bilocale, orientation) -> tuple:
    """The i-dense j-open sublocales as their inducing side-j elements."""
    i, j = check_orientation(orientation)
    key = ("dense_open", i, j)
    if key not in b._cache:
        b._cache[key] = tuple(
            x for x in b.side_elems(j) if is_i_dense_element(b, i, x)
        )
    return b._cache[key]


# ---- sublocale-level calculus -------------------------------------------


def interior_elem(b: Bilocale, i: int, s_mask: int) -> int:
    f = b.frame
    return f.join_of(a for a in b.side_elems(i) if f.open_mask(a) & ~s_mask == 0)


def interior_i(b: Bilocale, i: int, s_mask: int) -> int:
    """Largest i-open sublocale inside S."""
    return b.frame.open_mask(interior_elem(b, i, s_mask))


def closure_elem(b: Bilocale, i: int, s_mask: int) -> int:
    f = b.frame
    floor = f.meet_of(bits(s_mask))
    return f.join_of(a for a in b.side_elems(i) if f.leq[a, floor])


def closure_i(b: Bilocale, i: int, s_mask: int) -> int:
    """Smallest i-closed sublocale containing S."""
    return b.frame.up_mask(closure_elem(b, i, s_mask))


def is_i_dense(b: Bilocale, i: int, s_mask: int) -> bool:
    """Both definitions evaluated: cl_i(S) = L, and S meets every nonzero
    i-open; they must agree."""
    f = b.frame
    obit = 1 << f.top
    by_closure = closure_i(b, i, s_mask) == f.universe_mask
    by_opens = all(
        f.open_mask(x) & s_mask != obit
        for x in b.side_elems(i)
        if x != f.bottom
    )
    assert by_closure == by_opens, "i-density characterizations disagree"
    return by_closure


def is_ij_nowhere_dense(b: Bilocale, orientation, s_mask: int) -> bool:
    """Int_j(cl_i(S)) = O, cross-checked against supplement-of-closure
    being j-dense."""
    i, j = check_orientation(orientation)
    f = b.frame
    cl = closure_i(b, i, s_mask)
    primary = interior_i(b, j, cl) == 1 << f.top
    supp = sublocales.supplement_fast(f, cl)
    assert primary == is_i_dense(b, j, supp), "nowhere-density characterizations disagree"
    return primary


def gdelta_family(b: Bilocale, i: int) -> tuple:
    """Every i-G-delta sublocale: intersections of i-open sublocales
    (countable families collapse to finite meets here)."""
    key = ("gdelta", i)
    if key not in b._cache:
        b._cache[key] = sublocales.gdelta_closure_family(b.frame, b.side_elems(i))
    return b._cache[key]


def is_i_gdelta_dense(b: Bilocale, i: int, s_mask: int) -> bool:
    obit = 1 << b.frame.top
    return all(
        s_mask & g != obit for g in gdelta_family(b, i) if g != obit
    )


def gdelta_sublocales_complemented(b: Bilocale, i: int) -> bool:
    """Hypothesis gate used by the category equivalences: every i-G-delta
    sublocale has a complement in the sublocale lattice. Checked with the
    supplement, no enumeration needed."""
    f = b.frame
    for g in gdelta_family(b, i):
        supp = sublocales.supplement_fast(f, g)
        if sublocales.sublocale_join(f, (g, supp)) != f.universe_mask:
            return False
    return True


# ---- subbilocales ---------------------------------------------------------


class Subbilocale:
    """A sublocale S re-indexed as a frame of its own, with sides nu_S[L_i].

    `embed` maps sub-frame indices back to parent elements and `nu_sub`
    maps any parent element x to the sub-frame index of nu_S(x).
    """

    def __init__(self, parent: Bilocale, carrier_mask: int):
        f = parent.frame
        members = tuple(bits(carrier_mask))
        pos = {e: k for k, e in enumerate(members)}
        leq = f.leq[np.ix_(members, members)]
        sub_frame = Frame(leq, labels=tuple(f.labels[e] for e in members))
        nu_sub = tuple(
            pos[sublocales.nu(f, carrier_mask, x)] for x in range(f.n)
        )
        side1 = mask_of(set(nu_sub[a] for a in parent.side_elems(1)))
        side2 = mask_of(set(nu_sub[a] for a in parent.side_elems(2)))
        self.parent = parent
        self.carrier_mask = carrier_mask
        self.embed = members
        self.nu_sub = nu_sub
        self.bilocale = build_bilocale(sub_frame, side1, side2)

    def to_sub_mask(self, parent_mask: int) -> int:
        out = 0
        for k, e in enumerate(self.embed):
            if (parent_mask >> e) & 1:
                out |= 1 << k
        return out

    def to_parent_mask(self, sub_mask: int) -> int:
        out = 0
        for k, e in enumerate(self.embed):
            if (sub_mask >> k) & 1:
                out |= 1 << e
        return out

    def verify(self) -> bool:
        """Recompute the image sides from scratch and compare (debug aid)."""
        f = self.parent.frame
        for i in (1, 2):
            fresh = mask_of(
                set(
                    self.nu_sub[a]
                    for a in self.parent.side_elems(i)
                )
            )
            if fresh != self.bilocale.side_mask(i):
                return False
        return True


def subbilocale(b: Bilocale, s_mask: int) -> Subbilocale:
    key = ("subbilocale", s_mask)
    if key not in b._cache:
        assert sublocales.is_sublocale(b.frame, s_mask)
        b._cache[key] = Subbilocale(b, s_mask)
    return b._cache[key]


# ---- whole-bilocale property checks ---------------------------------------


def is_compact_bilocale(b: Bilocale) -> bool:
    """Compactness of the total part; vacuously true on finite frames
    (reports carry that annotation)."""
    return True


COMPACT_NOTE = "finite total part: the top element is compact outright"


def is_regular_bilocale(b: Bilocale) -> bool:
    f = b.frame
    for i in (1, 2):
        j = other(i)
        for x in b.side_elems(i):
            approx = f.join_of(
                a
                for a in b.side_elems(i)
                if any(
                    f.meet[a, c] == f.bottom and f.join[c, x] == f.top
                    for c in b.side_elems(j)
                )
            )
            if approx != x:
                return False
    return True


def is_boolean_bilocale(b: Bilocale) -> bool:
    f = b.frame
    for i in (1, 2):
        j = other(i)
        for x in b.side_elems(i):
            if not any(
                f.meet[x, c] == f.bottom and f.join[x, c] == f.top
                for c in b.side_elems(j)
            ):
                return False
    return True


def is_i_prefit(b: Bilocale, i: int) -> bool:
    """Every nonzero x of the total part admits a nonzero y in side i with
    join(bullet(y), x) = 1."""
    f = b.frame
    tbl = _bullet_table(b, i)
    nonzero_side = [y for y in b.side_elems(i) if y != f.bottom]
    return all(
        any(f.join[tbl[y], x] == f.top for y in nonzero_side)
        for x in range(f.n)
        if x != f.bottom
    )


def is_strongly_prefit(b: Bilocale) -> bool:
    return is_i_prefit(b, 1) and is_i_prefit(b, 2)


def is_prefit(b: Bilocale, strict: bool = False) -> bool:
    """Side-internal prefitness: witnesses for x range over x's own side.

    The default reading quantifies over every x in L_i and lets y be any
    side-i element, which makes the check constant-true (y = 0 has
    bullet 1); it is kept as the literal reading. strict=True restricts
    both x and y to nonzero, matching the almost-regularity picture.
    """
    f = b.frame
    for i in (1, 2):
        tbl = _bullet_table(b, i)
        ys = [y for y in b.side_elems(i) if not strict or y != f.bottom]
        for x in b.side_elems(i):
            if strict and x == f.bottom:
                continue
            if not any(f.join[tbl[y], x] == f.top for y in ys):
                return False
    return True


def is_ij_submaximal(b: Bilocale, orientation, guard: int = SUBSET_GUARD) -> bool:
    """Every i-dense sublocale is j-open."""
    i, j = check_orientation(orientation)
    f = b.frame
    opens_j = set(f.open_mask(x) for x in b.side_elems(j))
    lattice = sublocales.enumerate_sublocales(f, guard)
    return all(
        m in opens_j
        for m in lattice.masks
        if is_i_dense(b, i, m)
    )
