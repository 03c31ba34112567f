"""Seeded random instance generators for the replay corpora and searches.

Everything is driven by a `random.Random` so a fixed seed reproduces the
exact same instances (and therefore byte-identical atlases). Bispaces
are the workhorse: their induced bilocales satisfy the covering
condition by construction, and four points keep the join topology within
the subset guard.
"""

from __future__ import annotations

import random
import string

from .bilocales import Bilocale, build_bilocale, symmetric_bilocale
from .bispaces import Bispace, bilocale_of, validate_bispace
from .bitsets import bits, mask_of
from .errors import CoveringFails
from .frames import Frame
from .topobilocales import TopoBilocale, build_topobilocale


def _point_names(n):
    return tuple(string.ascii_lowercase[:n])


def _saturate(masks, universe) -> set:
    fam = set(masks) | {0, universe}
    while True:
        new = set()
        for a in fam:
            for b in fam:
                for c in (a & b, a | b):
                    if c not in fam:
                        new.add(c)
        if not new:
            return fam
        fam |= new


def random_topology(rng: random.Random, npoints: int, nsubbasis: int | None = None) -> set:
    universe = (1 << npoints) - 1
    k = nsubbasis if nsubbasis is not None else rng.randint(1, 3)
    subbasis = [rng.randrange(universe + 1) for _ in range(k)]
    return _saturate(subbasis, universe)


def random_bispace(rng: random.Random, npoints: int | None = None, complementary_bias: float = 0.25) -> Bispace:
    """Random two-topology space; with some probability the second topology
    is generated by complements of the first's subbasis, which makes
    Boolean-flavored instances reachable."""
    n = npoints if npoints is not None else rng.randint(2, 4)
    universe = (1 << n) - 1
    k = rng.randint(1, 3)
    sub1 = [rng.randrange(universe + 1) for _ in range(k)]
    if rng.random() < complementary_bias:
        sub2 = [universe & ~m for m in sub1]
    else:
        sub2 = [rng.randrange(universe + 1) for _ in range(rng.randint(1, 3))]
    tau1 = _saturate(sub1, universe)
    tau2 = _saturate(sub2, universe)
    names = _point_names(n)

    def to_sets(fam):
        return [[names[i] for i in bits(m)] for m in sorted(fam)]

    return validate_bispace(names, to_sets(tau1), to_sets(tau2))


def random_frame(rng: random.Random, max_elems: int = 16, npoints: int | None = None) -> Frame:
    """Frame of a random topology (every finite frame is such a lattice)."""
    n = npoints if npoints is not None else rng.randint(2, 4)
    while True:
        fam = random_topology(rng, n)
        if len(fam) <= max_elems:
            break
    masks = sorted(fam, key=lambda m: (m.bit_count(), m))
    names = _point_names(n)
    labels = tuple("{" + ",".join(names[i] for i in bits(m)) + "}" for m in masks)
    return Frame.from_subsets(masks, labels=labels)


def random_bilocale(rng: random.Random, npoints: int | None = None) -> Bilocale:
    return bilocale_of(random_bispace(rng, npoints))


def random_subframe_mask(rng: random.Random, f: Frame, density: float = 0.4) -> int:
    seeds = [x for x in range(f.n) if rng.random() < density]
    mask = mask_of(seeds) | (1 << f.bottom) | (1 << f.top)
    while True:
        new = mask
        elems = tuple(bits(mask))
        for a in elems:
            for b in elems:
                new |= 1 << int(f.meet[a, b])
                new |= 1 << int(f.join[a, b])
        if new == mask:
            return mask
        mask = new


def random_mixed_bilocale(rng: random.Random, tries: int = 8) -> Bilocale:
    """Random frame with two random subframes; falls back to the symmetric
    bilocale when the covering condition keeps failing."""
    f = random_frame(rng)
    for _ in range(tries):
        try:
            return build_bilocale(f, random_subframe_mask(rng, f), random_subframe_mask(rng, f))
        except CoveringFails:
            continue
    return symmetric_bilocale(f)


def random_topobilocale(rng: random.Random) -> TopoBilocale:
    """Random frame with two random subframes of its complemented part."""
    f = random_frame(rng)
    center = [a for a in range(f.n) if f.is_complemented_element(a)]

    def side():
        seeds = [a for a in center if rng.random() < 0.5]
        mask = mask_of(seeds) | (1 << f.bottom) | (1 << f.top)
        while True:
            new = mask
            elems = tuple(bits(mask))
            for a in elems:
                for b in elems:
                    new |= 1 << int(f.meet[a, b])
                    new |= 1 << int(f.join[a, b])
            if new == mask:
                return mask
            mask = new

    return build_topobilocale(f, side(), side())
