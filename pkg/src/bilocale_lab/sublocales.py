"""Sublocales of a finite frame, represented as bitmasks.

A subset S is a sublocale when it contains the top element, is closed
under binary meets (finitely, that is all meets) and contains x -> s for
every element x and member s. O denotes the least sublocale {top}.

Joins in the sublocale lattice are meet-closures of unions: the union of
sublocales is already closed under x -> (-), so closing under binary
meets lands on the least sublocale above every part. Meets are plain
intersections.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .bitsets import bits, mask_of, popcount
from .errors import SizeGuardExceeded
from .frames import Frame
from .limits import SUBSET_GUARD


def o_mask(f: Frame) -> int:
    """The least sublocale O = {top}."""
    return 1 << f.top


def closed_sublocale(f: Frame, a: int) -> int:
    return f.up_mask(a)


def open_sublocale(f: Frame, a: int) -> int:
    return f.open_mask(a)


def is_sublocale(f: Frame, mask: int) -> bool:
    return bool(kernels.is_sublocale_mask(mask, f.meet, f.imp, f.top))


@dataclass(frozen=True)
class SublocaleLattice:
    parent: Frame
    masks: tuple  # ascending ints; inclusion is the order

    def __len__(self):
        return len(self.masks)

    def __contains__(self, mask):
        return mask in set(self.masks)


def enumerate_sublocales(f: Frame, guard: int = SUBSET_GUARD) -> SublocaleLattice:
    """All sublocales by powerset scan, memoized per frame."""
    if f.n > guard:
        raise SizeGuardExceeded(f.n, guard, "sublocale enumeration")
    key = "sublocale_lattice"
    if key not in f._cache:
        masks = kernels.sublocale_masks(f.meet, f.imp, f.top)
        f._cache[key] = SublocaleLattice(f, tuple(int(m) for m in masks))
    return f._cache[key]


def closure(f: Frame, mask: int) -> int:
    """Smallest closed sublocale containing the given one: the literal
    intersection of every c(a) above it (equal to c of the meet of S, which the tests
    check rather than assume)."""
    out = f.universe_mask
    for a in range(f.n):
        c = f.up_mask(a)
        if mask & ~c == 0:
            out &= c
    return out


def sublocale_join(f: Frame, parts) -> int:
    union = 1 << f.top
    for p in parts:
        union |= p
    out = int(kernels.meet_close(union, f.meet))
    assert is_sublocale(f, out), "meet-closure of a union of sublocales must be a sublocale"
    return out


def sublocale_meet(f: Frame, parts) -> int:
    out = f.universe_mask
    for p in parts:
        out &= p
    return out


def supplement(f: Frame, mask: int, guard: int = SUBSET_GUARD) -> int:
    """Join of every sublocale disjoint from the given one, straight from
    the enumerated lattice."""
    lattice = enumerate_sublocales(f, guard)
    arr = np.array(lattice.masks, dtype=np.int64)
    out = int(kernels.supplement_scan(mask, arr, f.meet, f.top))
    assert out & mask == 1 << f.top, "supplement must meet its argument in O"
    return out


def supplement_fast(f: Frame, mask: int) -> int:
    """Supplement via singleton-generated sublocales; no lattice needed.

    Agrees with `supplement` because every sublocale is the union of the
    smallest sublocales of its members (property-tested, not assumed).
    """
    return int(kernels.supplement_gen(mask, f.gen_masks, f.meet, f.top))


def is_complemented_sublocale(f: Frame, mask: int, guard: int = SUBSET_GUARD) -> bool:
    supp = supplement(f, mask, guard)
    return sublocale_join(f, (mask, supp)) == f.universe_mask


def booleanization(f: Frame) -> int:
    """The smallest dense sublocale {x -> 0 : x in L}."""
    return mask_of(set(int(f.imp[x, f.bottom]) for x in range(f.n)))


def nu(f: Frame, s_mask: int, a: int) -> int:
    """Least member of the sublocale above a."""
    return f.meet_of(bits(s_mask & f.up_mask(a)))


def open_in(f: Frame, s_mask: int, a: int) -> int:
    """o_S(nu_S(a)) computed as S meet o(a)."""
    return s_mask & f.open_mask(a)


def closed_in(f: Frame, s_mask: int, a: int) -> int:
    return s_mask & f.up_mask(a)


def is_dense_sublocale(f: Frame, mask: int) -> bool:
    """Dense = closure is everything = bottom belongs to the sublocale."""
    return closure(f, mask) == f.universe_mask


@dataclass(frozen=True)
class GDeltaFamily:
    parent: Frame
    generators: tuple
    realized: int  # intersection of the generators' open sublocales

    def recheck(self) -> bool:
        out = self.parent.universe_mask
        for x in self.generators:
            out &= self.parent.open_mask(x)
        return out == self.realized


def gdelta_realize(f: Frame, generators) -> GDeltaFamily:
    gens = tuple(generators)
    out = f.universe_mask
    for x in gens:
        out &= f.open_mask(x)
    return GDeltaFamily(f, gens, out)


def gdelta_closure_family(f: Frame, opens) -> tuple:
    """All intersections of opens over the generator set: the closure of
    {o(x)} under binary intersection, canonically sorted. Countable meets
    collapse to these finite ones on a finite carrier."""
    fam = set(f.open_mask(x) for x in opens)
    frontier = set(fam)
    while frontier:
        new = set()
        for a in frontier:
            for b in fam:
                c = a & b
                if c not in fam and c not in new:
                    new.add(c)
        fam |= new
        frontier = new
    return tuple(sorted(fam))


def sublocale_members(f: Frame, mask: int) -> tuple:
    """Sorted element indices, the serialization form for reports."""
    return tuple(bits(mask))


def smallest_containing(f: Frame, elems) -> int:
    """Least sublocale containing the given elements."""
    return sublocale_join(f, (int(f.gen_masks[t]) for t in elems))


def sublocale_count_guard(f: Frame, guard: int = SUBSET_GUARD) -> int:
    return len(enumerate_sublocales(f, guard).masks)


def dense_sublocales(f: Frame, guard: int = SUBSET_GUARD) -> tuple:
    return tuple(m for m in enumerate_sublocales(f, guard).masks if is_dense_sublocale(f, m))


def all_masks_of_size(f: Frame, k: int):
    """Iterate k-element subsets of the carrier (testing helper)."""
    from itertools import combinations

    for combo in combinations(range(f.n), k):
        yield mask_of(combo)


def mask_label(f: Frame, mask: int) -> str:
    return "{" + ",".join(f.labels[i] for i in bits(mask)) + "}"


def popcount_mask(mask: int) -> int:
    return popcount(mask)
