"""Biframe homomorphisms, right adjoints, images, and Baire transfer.

A map h goes from a source bilocale (M, M1, M2) onto a target
(L, L1, L2): it preserves finite meets and all joins (binary plus the
endpoints is enough here) and sends each side into the matching side.
The right adjoint h_* runs backwards, target to source.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sublocales
from .bilocales import (
    Bilocale,
    bilocale_from_json,
    bilocale_to_json,
    check_orientation,
    is_compact_bilocale,
    is_i_dense_element,
    is_i_gdelta_dense,
    is_regular_bilocale,
    subbilocale,
)
from .bitsets import mask_of
from .errors import ImageNotSublocale, NotAFrameHom, SideViolation
from .reports import PropositionReport, settle


@dataclass(frozen=True)
class BiframeMap:
    source: Bilocale
    target: Bilocale
    mapping: tuple

    def __call__(self, a: int) -> int:
        return self.mapping[a]


def validate_biframe_map(source: Bilocale, target: Bilocale, mapping) -> BiframeMap:
    h = tuple(int(v) for v in mapping)
    M, L = source.frame, target.frame
    if len(h) != M.n:
        raise NotAFrameHom(f"mapping has {len(h)} entries for a {M.n}-element source")
    if any(not 0 <= v < L.n for v in h):
        raise NotAFrameHom("mapping image out of range")
    if h[M.bottom] != L.bottom:
        raise NotAFrameHom("bottom is not preserved")
    if h[M.top] != L.top:
        raise NotAFrameHom("top is not preserved")
    for a in range(M.n):
        for b in range(M.n):
            if h[M.meet[a, b]] != L.meet[h[a], h[b]]:
                raise NotAFrameHom(f"meet not preserved at ({a}, {b})")
            if h[M.join[a, b]] != L.join[h[a], h[b]]:
                raise NotAFrameHom(f"join not preserved at ({a}, {b})")
    for i in (1, 2):
        for x in source.side_elems(i):
            if not target.in_side(i, h[x]):
                raise SideViolation(i, x)
    return BiframeMap(source, target, h)


def map_from_json(obj) -> BiframeMap:
    return validate_biframe_map(
        bilocale_from_json(obj["source"]),
        bilocale_from_json(obj["target"]),
        obj["mapping"],
    )


def map_to_json(m: BiframeMap) -> dict:
    return {
        "source": bilocale_to_json(m.source),
        "target": bilocale_to_json(m.target),
        "mapping": list(m.mapping),
    }


def is_dense_map(m: BiframeMap) -> bool:
    Mb = m.source.frame.bottom
    Lb = m.target.frame.bottom
    return all(m.mapping[x] != Lb or x == Mb for x in range(m.source.frame.n))


def is_onto_map(m: BiframeMap) -> bool:
    return all(
        set(m.mapping[x] for x in m.source.side_elems(i)) == set(m.target.side_elems(i))
        for i in (1, 2)
    )


def is_compactification(m: BiframeMap) -> bool:
    return (
        is_dense_map(m)
        and is_onto_map(m)
        and is_compact_bilocale(m.source)
        and is_regular_bilocale(m.source)
    )


def right_adjoint(m: BiframeMap) -> tuple:
    """h_*(y) = join of {a : h(a) <= y}; the adjunction is checked on every pair
    and dense maps must send 0 back to 0."""
    M, L = m.source.frame, m.target.frame
    adj = tuple(
        M.join_of(a for a in range(M.n) if L.leq[m.mapping[a], y]) for y in range(L.n)
    )
    for a in range(M.n):
        for y in range(L.n):
            if bool(L.leq[m.mapping[a], y]) != bool(M.leq[a, adj[y]]):
                raise NotAFrameHom(f"adjunction fails at ({a}, {y})")
    if is_dense_map(m):
        assert adj[L.bottom] == M.bottom, "dense maps must have h_*(0) = 0"
    return adj


def image_sublocale(m: BiframeMap) -> int:
    """h_*[L] as a subset of the source frame."""
    adj = right_adjoint(m)
    mask = mask_of(set(adj))
    if not sublocales.is_sublocale(m.source.frame, mask):
        raise ImageNotSublocale("adjoint image is not a sublocale; the map is not a frame hom")
    return mask


def baire_transfer_check(m: BiframeMap, orientation, instance: str = "") -> PropositionReport:
    """Dense onto map from a Baire source with i-G-delta-dense adjoint
    image forces the target to be Baire."""
    from .baire import is_ij_baire

    i, j = check_orientation(orientation)
    dense = is_dense_map(m)
    onto = is_onto_map(m)
    hyp = {
        "dense": dense,
        "onto": onto,
        "source_baire": is_ij_baire(m.source, (i, j)).verdict,
        "image_i_gdelta_dense": is_i_gdelta_dense(m.source, i, image_sublocale(m)),
    }
    verdict = is_ij_baire(m.target, (i, j))
    return PropositionReport(
        "dense-onto-baire-transfer",
        instance,
        (i, j),
        hyp,
        verdict.verdict,
        settle(hyp, verdict.verdict),
        {"target_baire": verdict.to_dict()},
    )


def compactification_transfer_check(m: BiframeMap, orientation, instance: str = "") -> PropositionReport:
    """i-prefit compactification with i-G-delta-dense adjoint image forces
    the target to be Baire."""
    from .baire import is_ij_baire
    from .bilocales import is_i_prefit

    i, j = check_orientation(orientation)
    hyp = {
        "compactification": is_compactification(m),
        "source_i_prefit": is_i_prefit(m.source, i),
        "image_i_gdelta_dense": is_i_gdelta_dense(m.source, i, image_sublocale(m)),
    }
    verdict = is_ij_baire(m.target, (i, j))
    return PropositionReport(
        "prefit-compactification-baire",
        instance,
        (i, j),
        hyp,
        verdict.verdict,
        settle(hyp, verdict.verdict),
        {"target_baire": verdict.to_dict()},
    )


def dense_map_adjoint_lemma(m: BiframeMap, orientation, instance: str = "") -> PropositionReport:
    """For dense onto maps: a j-dense side-i element of the target pulls
    back along h_* to an element meeting every nonzero side-j source
    element (the witness side is the one j-density bites on)."""
    i, j = check_orientation(orientation)
    M = m.source.frame
    hyp = {"dense": is_dense_map(m), "onto": is_onto_map(m)}
    adj = right_adjoint(m)
    ok = True
    witness = None
    for x in m.target.side_elems(i):
        if not is_i_dense_element(m.target, j, x):
            continue
        for a in m.source.side_elems(j):
            if a != M.bottom and M.meet[adj[x], a] == M.bottom:
                ok, witness = False, {"x": x, "a": a}
                break
        if not ok:
            break
    return PropositionReport(
        "dense-map-adjoint-meets", instance, (i, j), hyp, ok, settle(hyp, ok), witness
    )


def nu_quotient_map(b: Bilocale, s_mask: int) -> BiframeMap:
    """The canonical onto map from a bilocale to one of its subbilocales."""
    sub = subbilocale(b, s_mask)
    return validate_biframe_map(b, sub.bilocale, sub.nu_sub)


def enumerate_biframe_maps(source: Bilocale, target: Bilocale, limit: int | None = None):
    """All biframe maps between small bilocales, by monotone backtracking.

    Yields deterministically (lexicographic in the assignment); `limit`
    caps the number of maps produced.
    """
    M, L = source.frame, target.frame
    found = 0
    assign = [-1] * M.n
    order = sorted(range(M.n), key=lambda a: int(M.leq[:, a].sum()))

    def compatible(pos, img):
        a = order[pos]
        for q in range(pos):
            bb = order[q]
            if M.leq[a, bb] and not L.leq[img, assign[bb]]:
                return False
            if M.leq[bb, a] and not L.leq[assign[bb], img]:
                return False
        return True

    def rec(pos):
        nonlocal found
        if limit is not None and found >= limit:
            return
        if pos == M.n:
            try:
                yield validate_biframe_map(source, target, assign)
                found += 1
            except (NotAFrameHom, SideViolation):
                pass
            return
        a = order[pos]
        for img in range(L.n):
            if a == M.bottom and img != L.bottom:
                continue
            if a == M.top and img != L.top:
                continue
            if not compatible(pos, img):
                continue
            assign[a] = img
            yield from rec(pos + 1)
            assign[a] = -1

    yield from rec(0)
