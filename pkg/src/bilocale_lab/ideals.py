"""Ideal lattices and the ideal bilocale.

Ideals are materialized as explicit downsets (closed under binary join,
containing bottom) even though finiteness forces them all to be
principal; that every ideal equals the downset of its join is *checked*
during construction, and the resulting order isomorphism with the base
frame is a verified output, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .bilocales import (
    Bilocale,
    build_bilocale,
    check_orientation,
    is_i_dense_element,
)
from .bitsets import bits, mask_of
from .errors import SizeGuardExceeded
from .frames import Frame
from .limits import SUBSET_GUARD
from .reports import PropositionReport, VACUOUS, settle


@dataclass(frozen=True)
class Ideal:
    parent: Frame
    mask: int

    @property
    def members(self):
        return tuple(bits(self.mask))


def principal(f: Frame, x: int) -> Ideal:
    return Ideal(f, f.down_mask(x))


def enumerate_ideals(f: Frame, guard: int = SUBSET_GUARD) -> tuple:
    if f.n > guard:
        raise SizeGuardExceeded(f.n, guard, "ideal enumeration")
    masks = kernels.ideal_masks(f.down_masks, f.join, f.bottom)
    return tuple(int(m) for m in masks)


@dataclass(frozen=True)
class IdealBilocale:
    base: Bilocale
    bilocale: Bilocale        # over the frame of ideals, ordered by inclusion
    ideal_masks: tuple        # frame index -> ideal downset mask
    down_index: tuple         # base element x -> index of its principal ideal


def ideal_bilocale(b: Bilocale, guard: int = SUBSET_GUARD) -> IdealBilocale:
    """Frame of all ideals with sides the ideals generated by their
    side-restricted members."""
    f = b.frame
    masks = enumerate_ideals(f, guard)
    for m in masks:
        gen = f.down_mask(f.join_of(bits(m)))
        assert gen == m, "finite carriers must make every ideal principal"
    index = {m: k for k, m in enumerate(masks)}
    labels = tuple("v" + f.labels[f.join_of(bits(m))] for m in masks)
    jframe = Frame.from_subsets(masks, labels=labels)
    sides = []
    for i in (1, 2):
        side_mask = 0
        smask = b.side_mask(i)
        for k, m in enumerate(masks):
            gen = f.down_mask(f.join_of(bits(m & smask)))
            if gen == m:
                side_mask |= 1 << k
        sides.append(side_mask)
    jb = build_bilocale(jframe, sides[0], sides[1])
    down_index = tuple(index[f.down_mask(x)] for x in range(f.n))
    return IdealBilocale(b, jb, masks, down_index)


def down_iso_check(ib: IdealBilocale) -> bool:
    """The principal-ideal map is an order isomorphism onto the ideal frame."""
    f = ib.base.frame
    jf = ib.bilocale.frame
    if jf.n != f.n or len(set(ib.down_index)) != f.n:
        return False
    for x in range(f.n):
        for y in range(f.n):
            if bool(f.leq[x, y]) != bool(jf.leq[ib.down_index[x], ib.down_index[y]]):
                return False
    return True


def is_noetherian(b: Bilocale, guard: int = SUBSET_GUARD) -> bool:
    """All elements compact; vacuously true here, evaluated literally."""
    return all(b.frame.is_compact_element(x, guard) for x in range(b.frame.n))


def noetherian_transfer_check(
    b: Bilocale, orientation, instance: str = "", guard: int = SUBSET_GUARD
) -> PropositionReport:
    """A Noetherian bilocale is (i,j)-Baire exactly when its ideal bilocale is."""
    from .baire import is_ij_baire

    i, j = check_orientation(orientation)
    within = b.frame.n <= guard
    hyp = {"within_size_guard": within, "noetherian": within and is_noetherian(b, guard)}
    if not within:
        return PropositionReport("noetherian-ideal-baire-transfer", instance, (i, j), hyp, None, VACUOUS)
    ib = ideal_bilocale(b, guard)
    base = is_ij_baire(b, (i, j)).verdict
    lifted = is_ij_baire(ib.bilocale, (i, j)).verdict
    agree = base == lifted
    return PropositionReport(
        "noetherian-ideal-baire-transfer",
        instance,
        (i, j),
        hyp,
        agree,
        settle(hyp, agree),
        {"base_baire": base, "ideal_baire": lifted, "down_iso": down_iso_check(ib)},
    )


def ideal_density_transfer(b: Bilocale, instance: str = "", guard: int = SUBSET_GUARD) -> PropositionReport:
    """Element j-density transfers to principal ideals and back."""
    within = b.frame.n <= guard
    hyp = {"within_size_guard": within, "noetherian": within and is_noetherian(b, guard)}
    if not within:
        return PropositionReport("ideal-density-transfer", instance, None, hyp, None, VACUOUS)
    ib = ideal_bilocale(b, guard)
    ok = True
    witness = None
    for i in (1, 2):
        j = 2 if i == 1 else 1
        for x in b.side_elems(i):
            base = is_i_dense_element(b, j, x)
            lifted = is_i_dense_element(ib.bilocale, j, ib.down_index[x])
            if base != lifted:
                ok, witness = False, {"x": x, "side": i}
                break
        if not ok:
            break
    return PropositionReport(
        "ideal-density-transfer", instance, None, hyp, ok, settle(hyp, ok), witness
    )
