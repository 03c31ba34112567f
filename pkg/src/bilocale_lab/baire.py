"""Baire-style analysis for bilocales: density of dense-open
intersections, category, the four-way equivalences, prefit/pseudocomplete
sufficient conditions, subbilocale heredity, and relative variants.

Countable families collapse on finite carriers, so "(i,j)-Baire" is
decided by the worst family: intersect every i-dense j-open sublocale at
once. Supersets of i-dense sublocales are i-dense, hence any subfamily's
intersection contains the worst one; `is_ij_baire_exhaustive` keeps the
all-subfamilies evaluation as an oracle for small families. The same
reduction drives category: a sublocale is (i,j)-first category exactly
when the join of every closed (i,j)-nowhere dense sublocale contains it
(closures of nowhere dense sublocales stay nowhere dense).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels, sublocales
from .bilocales import (
    Bilocale,
    COMPACT_NOTE,
    Subbilocale,
    bullet,
    check_orientation,
    dense_open_elements,
    gdelta_sublocales_complemented,
    interior_i,
    is_compact_bilocale,
    is_i_dense,
    is_i_dense_element,
    is_i_prefit,
    is_ij_nowhere_dense,
    is_ij_submaximal,
    other,
    subbilocale,
)
from .bitsets import bits, mask_of, popcount
from .errors import SizeGuardExceeded
from .limits import FAMILY_ORACLE_CAP, SUBSET_GUARD
from .reports import PropositionReport, VACUOUS, settle


# ---- (i,j)-Baire ----------------------------------------------------------


@dataclass(frozen=True)
class BaireVerdict:
    orientation: tuple
    verdict: bool
    dense_open_elements: tuple  # side-j elements inducing the worst family
    intersection: tuple         # members of the intersected sublocale
    witness_open: int | None    # nonzero side-i element missed when not Baire

    def to_dict(self):
        return {
            "orientation": list(self.orientation),
            "verdict": self.verdict,
            "dense_open_elements": list(self.dense_open_elements),
            "intersection": list(self.intersection),
            "witness_open": self.witness_open,
        }


def _worst_intersection(b: Bilocale, orientation) -> tuple:
    i, j = check_orientation(orientation)
    family = dense_open_elements(b, (i, j))
    inter = b.frame.universe_mask
    for x in family:
        inter &= b.frame.open_mask(x)
    return family, inter


def is_ij_baire(b: Bilocale, orientation) -> BaireVerdict:
    """Every countable family of i-dense j-open sublocales intersects
    i-densely; decided on the worst family."""
    i, j = check_orientation(orientation)
    f = b.frame
    family, inter = _worst_intersection(b, (i, j))
    verdict = is_i_dense(b, i, inter)
    witness = None
    if not verdict:
        obit = 1 << f.top
        for a in b.side_elems(i):
            if a != f.bottom and f.open_mask(a) & inter == obit:
                witness = a
                break
    return BaireVerdict((i, j), verdict, family, tuple(bits(inter)), witness)


def recheck_baire(b: Bilocale, v: BaireVerdict) -> bool:
    """Re-validate a verdict from the definitions alone."""
    i, j = v.orientation
    f = b.frame
    for x in v.dense_open_elements:
        if not b.in_side(j, x) or not is_i_dense_element(b, i, x):
            return False
    inter = f.universe_mask
    for x in v.dense_open_elements:
        inter &= f.open_mask(x)
    if tuple(bits(inter)) != v.intersection:
        return False
    if v.verdict:
        return is_i_dense(b, i, inter)
    w = v.witness_open
    return (
        w is not None
        and b.in_side(i, w)
        and w != f.bottom
        and f.open_mask(w) & inter == 1 << f.top
    )


def is_ij_baire_exhaustive(b: Bilocale, orientation, cap: int = FAMILY_ORACLE_CAP) -> bool:
    """All-subfamilies oracle for the worst-family reduction."""
    i, j = check_orientation(orientation)
    family, _ = _worst_intersection(b, (i, j))
    if len(family) > cap:
        raise SizeGuardExceeded(len(family), cap, "subfamily enumeration")
    f = b.frame
    for sel in range(1 << len(family)):
        inter = f.universe_mask
        for k, x in enumerate(family):
            if (sel >> k) & 1:
                inter &= f.open_mask(x)
        if not is_i_dense(b, i, inter):
            return False
    return True


# ---- category -------------------------------------------------------------


@dataclass(frozen=True)
class CategoryVerdict:
    subject: tuple
    orientation: tuple
    kind: str  # "first" | "second"
    cover: tuple | None  # closed nowhere-dense inducing elements, for "first"

    def to_dict(self):
        return {
            "subject": list(self.subject),
            "orientation": list(self.orientation),
            "kind": self.kind,
            "cover": list(self.cover) if self.cover is not None else None,
        }


def nwd_closed_elements(b: Bilocale, orientation) -> tuple:
    """Elements a with c(a) (i,j)-nowhere dense; their closed sublocales
    are the only covers first-category tests need."""
    i, j = check_orientation(orientation)
    key = ("nwd_closed", i, j)
    if key not in b._cache:
        f = b.frame
        b._cache[key] = tuple(
            a for a in range(f.n) if is_ij_nowhere_dense(b, (i, j), f.up_mask(a))
        )
    return b._cache[key]


def category_cover_mask(b: Bilocale, orientation) -> int:
    """Join of every closed (i,j)-nowhere dense sublocale (a closed
    sublocale again: c of the meet of the inducing elements)."""
    i, j = check_orientation(orientation)
    key = ("cover", i, j)
    if key not in b._cache:
        elems = nwd_closed_elements(b, (i, j))
        b._cache[key] = b.frame.up_mask(b.frame.meet_of(elems))
    return b._cache[key]


def category(b: Bilocale, orientation, s_mask: int) -> CategoryVerdict:
    i, j = check_orientation(orientation)
    cover = category_cover_mask(b, (i, j))
    if s_mask & ~cover == 0:
        return CategoryVerdict(tuple(bits(s_mask)), (i, j), "first", nwd_closed_elements(b, (i, j)))
    return CategoryVerdict(tuple(bits(s_mask)), (i, j), "second", None)


def recheck_category(b: Bilocale, v: CategoryVerdict) -> bool:
    s_mask = mask_of(v.subject)
    if v.kind == "second":
        return category(b, v.orientation, s_mask).kind == "second"
    if v.cover is None:
        return False
    join = sublocales.sublocale_join(b.frame, (b.frame.up_mask(a) for a in v.cover))
    return all(
        is_ij_nowhere_dense(b, v.orientation, b.frame.up_mask(a)) for a in v.cover
    ) and s_mask & ~join == 0


# ---- the category equivalence ---------------------------------------------


def theorem_main_equivalence(
    b: Bilocale, orientation, instance: str = "", guard: int = SUBSET_GUARD
) -> PropositionReport:
    """Four statements evaluated independently on one bilocale:
    (1) (i,j)-Baire; (2) every non-void i-open sublocale is (j,i)-second
    category; (3) every (j,i)-first-category sublocale has void
    i-interior; (4) the supplement of every (j,i)-first-category
    sublocale is i-dense. Gate: side-j G-delta sublocales complemented.
    """
    i, j = check_orientation(orientation)
    f = b.frame
    within = f.n <= guard
    hyp = {
        "j_gdelta_sublocales_complemented": gdelta_sublocales_complemented(b, j),
        "within_size_guard": within,
    }
    if not within:
        return PropositionReport(
            "main-category-equivalence", instance, (i, j), hyp, None, VACUOUS
        )

    s1 = is_ij_baire(b, (i, j)).verdict
    s2 = all(
        category(b, (j, i), f.open_mask(a)).kind == "second"
        for a in b.side_elems(i)
        if a != f.bottom
    )
    lattice = sublocales.enumerate_sublocales(f, guard)
    cover = category_cover_mask(b, (j, i))
    iopen_nz = np.array(
        [f.open_mask(a) for a in b.side_elems(i) if a != f.bottom], dtype=np.int64
    )
    ok3, wit3, ok4, wit4 = kernels.category_statements(
        np.array(lattice.masks, dtype=np.int64), cover, iopen_nz, f.gen_masks, f.meet, f.top
    )
    statements = {
        "baire": bool(s1),
        "nonvoid_open_second_category": bool(s2),
        "first_category_void_interior": bool(ok3),
        "first_category_supplement_dense": bool(ok4),
    }
    agree = len(set(statements.values())) == 1
    witness = {"statements": statements}
    if int(wit3) >= 0:
        witness["interior_witness_sublocale"] = list(bits(int(wit3)))
    if int(wit4) >= 0:
        witness["supplement_witness_sublocale"] = list(bits(int(wit4)))
    return PropositionReport(
        "main-category-equivalence",
        instance,
        (i, j),
        hyp,
        agree,
        settle(hyp, agree),
        witness,
    )


# ---- compactness-flavored sufficient conditions ----------------------------


def fip_check(b: Bilocale, instance: str = "", guard: int = SUBSET_GUARD) -> PropositionReport:
    """On a compact bilocale, closed families with the finite intersection
    property intersect non-voidly; scanned over every family of closed
    sublocales (joins are subset-monotone, so the full join decides FIP)."""
    f = b.frame
    within = f.n <= guard
    hyp = {"compact": is_compact_bilocale(b), "within_size_guard": within}
    if not within:
        return PropositionReport("compact-fip", instance, None, hyp, None, VACUOUS)
    violation = int(kernels.fip_violation(f.join, f.top, f.bottom))
    ok = violation < 0
    witness = None if ok else {"family": list(bits(violation))}
    return PropositionReport(
        "compact-fip", instance, None, hyp, ok, settle(hyp, ok), witness, note=COMPACT_NOTE
    )


def compact_prefit_implies_baire(b: Bilocale, orientation, instance: str = "") -> PropositionReport:
    i, j = check_orientation(orientation)
    hyp = {"compact": is_compact_bilocale(b), "i_prefit": is_i_prefit(b, i)}
    verdict = is_ij_baire(b, (i, j))
    return PropositionReport(
        "compact-prefit-baire",
        instance,
        (i, j),
        hyp,
        verdict.verdict,
        settle(hyp, verdict.verdict),
        {"baire": verdict.to_dict()},
        note=COMPACT_NOTE,
    )


# ---- pi-bases and pseudocompleteness ---------------------------------------


def is_pi_base(b: Bilocale, i: int, member_elems) -> bool:
    """members (side-i, nonzero) whose opens sit below every non-void i-open."""
    f = b.frame
    members = tuple(member_elems)
    if not all(b.in_side(i, m) and m != f.bottom for m in members):
        return False
    return all(
        any(f.leq[m, a] for m in members)
        for a in b.side_elems(i)
        if a != f.bottom
    )


def _chain_condition(b: Bilocale, i: int, member_elems) -> bool:
    """Nested-chain condition for a single pi-base used at every stage.

    An edge x -> y (cl_j(o(y)) inside o(x), i.e. join(bullet(y), x) = 1)
    forces y <= x, so infinite chains stabilize; the intersection along a
    chain is the open of its final, nonzero value and is never void.
    The descent is asserted per edge rather than assumed.
    """
    f = b.frame
    members = tuple(member_elems)
    for x in members:
        for y in members:
            if f.join[bullet(b, i, y), x] == f.top and not f.leq[y, x]:
                raise AssertionError("chain edge failed to descend")
    return all(m != f.bottom for m in members)


def is_i_pseudocomplete(
    b: Bilocale, i: int, mode: str = "canonical", guard: int = SUBSET_GUARD
) -> bool:
    """canonical: i-prefit plus the chain condition for the maximal pi-base
    (sufficient-only when True). exhaustive: additionally search every
    pi-base below the guard; the ground truth at this scale."""
    f = b.frame
    if not is_i_prefit(b, i):
        return False
    nonzero = tuple(a for a in b.side_elems(i) if a != f.bottom)
    if mode == "canonical":
        return _chain_condition(b, i, nonzero)
    if mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")
    if len(nonzero) > guard:
        raise SizeGuardExceeded(len(nonzero), guard, "pi-base enumeration")
    for sel in range(1, 1 << len(nonzero)):
        cand = tuple(m for k, m in enumerate(nonzero) if (sel >> k) & 1)
        if is_pi_base(b, i, cand) and _chain_condition(b, i, cand):
            return True
    return False


def pseudocomplete_implies_baire(b: Bilocale, orientation, instance: str = "") -> PropositionReport:
    i, j = check_orientation(orientation)
    hyp = {"i_pseudocomplete": is_i_pseudocomplete(b, i)}
    verdict = is_ij_baire(b, (i, j))
    return PropositionReport(
        "pseudocomplete-baire",
        instance,
        (i, j),
        hyp,
        verdict.verdict,
        settle(hyp, verdict.verdict),
        {"baire": verdict.to_dict()},
    )


# ---- dense subbilocales -----------------------------------------------------


def dense_subbilocale_lemmas(
    b: Bilocale, s_mask: int, instance: str = "", guard: int = SUBSET_GUARD
) -> PropositionReport:
    """For a dense subbilocale: element j-density transfers along nu, the
    relativized open, S meet o(y), is j_S-dense i_S-open exactly when y is
    j-dense, and sublocales of S are i_S-dense iff i-dense."""
    f = b.frame
    dense = sublocales.is_dense_sublocale(f, s_mask)
    hyp = {"dense": dense, "within_size_guard": f.n <= guard}
    if not all(hyp.values()):
        return PropositionReport("dense-subbilocale-density-lemmas", instance, None, hyp, None, VACUOUS)

    sb = subbilocale(b, s_mask)
    ok = True
    witness = None
    for i in (1, 2):
        j = other(i)
        for y in b.side_elems(i):
            ambient = is_i_dense_element(b, j, y)
            through_nu = is_i_dense_element(sb.bilocale, j, sb.nu_sub[y])
            sub_open = sb.to_sub_mask(s_mask & f.open_mask(y))
            if sub_open != sb.bilocale.frame.open_mask(sb.nu_sub[y]):
                ok, witness = False, {"identity": "o_S(nu_S(y)) differs from S meet o(y)", "y": y}
                break
            relative = is_i_dense(sb.bilocale, j, sub_open)
            if not (ambient == through_nu == relative):
                ok, witness = False, {"y": y, "side": i}
                break
        if not ok:
            break
    if ok:
        sub_lattice = sublocales.enumerate_sublocales(sb.bilocale.frame, guard)
        for m in sub_lattice.masks:
            parent = sb.to_parent_mask(m)
            for i in (1, 2):
                if is_i_dense(sb.bilocale, i, m) != is_i_dense(b, i, parent):
                    ok, witness = False, {"sublocale": list(bits(parent)), "side": i}
                    break
            if not ok:
                break
    return PropositionReport(
        "dense-subbilocale-density-lemmas", instance, None, hyp, ok, settle(hyp, ok), witness
    )


def _sub_baire(b: Bilocale, s_mask: int, orientation) -> bool:
    return is_ij_baire(subbilocale(b, s_mask).bilocale, orientation).verdict


def heredity_suite(
    b: Bilocale, instance: str = "", guard: int = SUBSET_GUARD
) -> list:
    """Replays of the subbilocale heredity statements, both orientations."""
    f = b.frame
    reports = []
    within = f.n <= guard
    if not within:
        hyp = {"within_size_guard": False}
        return [
            PropositionReport("dense-subbilocale-heredity", instance, None, hyp, None, VACUOUS)
        ]
    # largest first so the whole bilocale (always dense) is tried immediately
    dense_masks = sorted(sublocales.dense_sublocales(f, guard), key=popcount, reverse=True)
    bl_mask = sublocales.booleanization(f)

    for orientation in ((1, 2), (2, 1)):
        i, j = orientation
        baire_here = is_ij_baire(b, orientation).verdict

        # a dense subbilocale that is Baire forces the whole bilocale to be
        exists_dense_baire = None
        for m in dense_masks:
            if _sub_baire(b, m, orientation):
                exists_dense_baire = m
                break
        hyp = {"exists_dense_baire_subbilocale": exists_dense_baire is not None}
        reports.append(
            PropositionReport(
                "baire-from-dense-subbilocale",
                instance,
                orientation,
                hyp,
                baire_here,
                settle(hyp, baire_here),
                {"dense_witness": list(bits(exists_dense_baire))} if exists_dense_baire else None,
            )
        )

        # Baire passes down to the booleanization subbilocale
        hyp = {"baire": baire_here}
        bl_baire = _sub_baire(b, bl_mask, orientation)
        reports.append(
            PropositionReport(
                "booleanization-subbilocale-baire",
                instance,
                orientation,
                hyp,
                bl_baire,
                settle(hyp, bl_baire),
                {"booleanization": list(bits(bl_mask))},
            )
        )

        # Baire passes down to every i-open subbilocale
        hyp = {"baire": baire_here}
        bad_open = None
        for a in b.side_elems(i):
            if not _sub_baire(b, f.open_mask(a), orientation):
                bad_open = a
                break
        reports.append(
            PropositionReport(
                "open-subbilocale-baire",
                instance,
                orientation,
                hyp,
                bad_open is None,
                settle(hyp, bad_open is None),
                {"failing_open": bad_open} if bad_open is not None else None,
            )
        )

        # under submaximality the booleanization transfer is an iff; only the
        # forward direction is replayed as a proposition, the reverse is noted
        submax = is_ij_submaximal(b, orientation, guard)
        hyp = {"submaximal": submax, "baire": baire_here}
        reports.append(
            PropositionReport(
                "submaximal-booleanization-iff",
                instance,
                orientation,
                hyp,
                bl_baire,
                settle(hyp, bl_baire),
                {"reverse_direction_holds": (not bl_baire) or baire_here},
                note="reverse direction recorded as an observation only",
            )
        )

        # on dense subbilocales, Baire and relatively Baire coincide
        mismatch = None
        for m in dense_masks:
            sb = subbilocale(b, m)
            plain = is_ij_baire(sb.bilocale, orientation).verdict
            rel = is_relatively_ij_baire(b, sb, orientation).verdict
            if plain != rel:
                mismatch = m
                break
        hyp = {"within_size_guard": True}
        reports.append(
            PropositionReport(
                "dense-relative-coincidence",
                instance,
                orientation,
                hyp,
                mismatch is None,
                settle(hyp, mismatch is None),
                {"mismatch": list(bits(mismatch))} if mismatch is not None else None,
            )
        )
    return reports


# ---- relative Baireness ------------------------------------------------------


def is_relatively_ij_baire(b: Bilocale, sub: Subbilocale, orientation) -> BaireVerdict:
    """S meets the worst intersection of ambient i-dense j-opens i_S-densely."""
    i, j = check_orientation(orientation)
    family, inter = _worst_intersection(b, (i, j))
    m = sub.to_sub_mask(inter & sub.carrier_mask)
    verdict = is_i_dense(sub.bilocale, i, m)
    witness = None
    if not verdict:
        sf = sub.bilocale.frame
        obit = 1 << sf.top
        for a in sub.bilocale.side_elems(i):
            if a != sf.bottom and sf.open_mask(a) & m == obit:
                witness = sub.embed[a]
                break
    return BaireVerdict((i, j), verdict, family, tuple(bits(inter & sub.carrier_mask)), witness)


def relative_characterization(
    b: Bilocale, sub: Subbilocale, orientation, instance: str = "", guard: int = SUBSET_GUARD
) -> PropositionReport:
    """Four-way equivalence for a dense complemented subbilocale: relative
    Baire; the trace of every non-void i-open is second category in S; void
    i_S-interior of the trace of every (j,i)-first-category U; i_S-density of
    the trace of the supplement of every (j,i)-first-category V."""
    i, j = check_orientation(orientation)
    f = b.frame
    s_mask = sub.carrier_mask
    within = f.n <= guard
    hyp = {
        "dense": sublocales.is_dense_sublocale(f, s_mask),
        "complemented": within and sublocales.is_complemented_sublocale(f, s_mask, guard),
        "j_gdelta_sublocales_complemented": gdelta_sublocales_complemented(b, j),
        "within_size_guard": within,
    }
    if not within:
        return PropositionReport("relative-category-equivalence", instance, (i, j), hyp, None, VACUOUS)

    sbil = sub.bilocale
    sf = sbil.frame
    obit_sub = 1 << sf.top

    s1 = is_relatively_ij_baire(b, sub, (i, j)).verdict
    s2 = all(
        category(sbil, (j, i), sub.to_sub_mask(s_mask & f.open_mask(x))).kind == "second"
        for x in b.side_elems(i)
        if x != f.bottom
    )
    cover = category_cover_mask(b, (j, i))
    lattice = sublocales.enumerate_sublocales(f, guard)
    s3 = True
    s4 = True
    for u in lattice.masks:
        if u & ~cover != 0:
            continue
        m = sub.to_sub_mask(u & s_mask)
        if s3 and interior_i(sbil, i, m) != obit_sub:
            s3 = False
        if s4:
            supp = sublocales.supplement_fast(f, u)
            if not is_i_dense(sbil, i, sub.to_sub_mask(supp & s_mask)):
                s4 = False
        if not s3 and not s4:
            break
    statements = {
        "relatively_baire": bool(s1),
        "trace_second_category": bool(s2),
        "trace_void_interior": bool(s3),
        "supplement_trace_dense": bool(s4),
    }
    agree = len(set(statements.values())) == 1
    return PropositionReport(
        "relative-category-equivalence",
        instance,
        (i, j),
        hyp,
        agree,
        settle(hyp, agree),
        {"statements": statements},
    )
