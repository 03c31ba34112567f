"""Finite bitopological spaces and the bridge into bilocales.

Point sets are bitmasks over named points; a topology is the tuple of
its open masks, canonically sorted by (size, mask). The induced bilocale
lives over the frame of the join topology (closure of the union under
intersections then unions) with the two topologies as sides.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sublocales
from .bilocales import Bilocale, build_bilocale, check_orientation
from .bitsets import bits, mask_of, popcount
from .errors import NotATopology
from .frames import Frame
from .reports import PropositionReport, settle


def _canon(masks) -> tuple:
    return tuple(sorted(set(masks), key=lambda m: (popcount(m), m)))


class Bispace:
    def __init__(self, points, tau1, tau2):
        self.points = tuple(points)
        self.tau = {1: _canon(tau1), 2: _canon(tau2)}
        self.universe = (1 << len(self.points)) - 1
        self._cache = {}

    def point_index(self, name) -> int:
        return self.points.index(name)

    def set_label(self, mask: int) -> str:
        return "{" + ",".join(self.points[i] for i in bits(mask)) + "}"

    def __repr__(self):
        return f"Bispace(points={self.points}, |tau1|={len(self.tau[1])}, |tau2|={len(self.tau[2])})"


def validate_bispace(points, tau1, tau2) -> Bispace:
    points = tuple(points)
    if len(set(points)) != len(points):
        raise NotATopology(None, "duplicate point names")
    universe = (1 << len(points)) - 1

    def to_masks(sets, side):
        masks = []
        for s in sets:
            try:
                masks.append(mask_of(points.index(p) for p in s))
            except ValueError as exc:
                raise NotATopology(side, f"unknown point in {s!r}") from exc
        return masks

    out = []
    for side, sets in ((1, tau1), (2, tau2)):
        masks = set(to_masks(sets, side))
        if 0 not in masks or universe not in masks:
            raise NotATopology(side, "missing empty set or whole space")
        for a in masks:
            for b in masks:
                if a | b not in masks:
                    raise NotATopology(side, f"union of masks {a} and {b} missing")
                if a & b not in masks:
                    raise NotATopology(side, f"intersection of masks {a} and {b} missing")
        out.append(masks)
    return Bispace(points, out[0], out[1])


def bispace_from_json(obj) -> Bispace:
    return validate_bispace(obj["points"], obj["tau1"], obj["tau2"])


def bispace_to_json(bs: Bispace) -> dict:
    def sets(side):
        return [sorted(bs.points[i] for i in bits(m)) for m in bs.tau[side]]

    return {"points": list(bs.points), "tau1": sets(1), "tau2": sets(2)}


def join_topology(bs: Bispace) -> tuple:
    """Closure of tau1 united with tau2 under binary intersections, then
    arbitrary (= binary, finitely) unions."""
    key = "join_topology"
    if key not in bs._cache:
        fam = set(bs.tau[1]) | set(bs.tau[2])
        while True:
            new = set()
            for a in fam:
                for b in fam:
                    if a & b not in fam:
                        new.add(a & b)
            if not new:
                break
            fam |= new
        while True:
            new = set()
            for a in fam:
                for b in fam:
                    if a | b not in fam:
                        new.add(a | b)
            if not new:
                break
            fam |= new
        bs._cache[key] = _canon(fam)
    return bs._cache[key]


def bilocale_of(bs: Bispace) -> Bilocale:
    """(join topology, tau1, tau2) with frame laws re-verified on ingestion."""
    key = "bilocale"
    if key not in bs._cache:
        opens = join_topology(bs)
        frame = Frame.from_subsets(opens, labels=tuple(bs.set_label(m) for m in opens))
        index = {m: k for k, m in enumerate(opens)}
        side1 = mask_of(index[m] for m in bs.tau[1])
        side2 = mask_of(index[m] for m in bs.tau[2])
        bs._cache[key] = build_bilocale(frame, side1, side2)
        bs._cache["open_index"] = index
    return bs._cache[key]


def open_element(bs: Bispace, set_mask: int) -> int:
    """Frame index of an open set from the join topology."""
    bilocale_of(bs)
    return bs._cache["open_index"][set_mask]


def interior_mask(bs: Bispace, set_mask: int) -> int:
    out = 0
    for u in join_topology(bs):
        if u & ~set_mask == 0:
            out |= u
    return out


def closure_mask(bs: Bispace, set_mask: int, side=None) -> int:
    """Topological closure; side None means the join topology."""
    opens = join_topology(bs) if side is None else bs.tau[side]
    missing = 0
    for u in opens:
        if u & set_mask == 0:
            missing |= u
    return bs.universe & ~missing


@dataclass(frozen=True)
class InducedSublocale:
    parent: Frame
    subset: tuple          # point names
    members: int           # sublocale mask over frame elements

    def recheck(self, bs: Bispace) -> bool:
        return induced_sublocale(bs, mask_of(bs.point_index(p) for p in self.subset)).members == self.members


def induced_sublocale(bs: Bispace, a_mask: int) -> InducedSublocale:
    """The sublocale a subset induces: interiors of (complement union open)."""
    b = bilocale_of(bs)
    f = b.frame
    members = set()
    for g in join_topology(bs):
        members.add(open_element(bs, interior_mask(bs, (bs.universe & ~a_mask) | g)))
    mask = mask_of(members)
    assert sublocales.is_sublocale(f, mask)
    return InducedSublocale(f, tuple(bs.points[i] for i in bits(a_mask)), mask)


def point_sublocale(bs: Bispace, point_name) -> int:
    """The frame element (space minus the point's closure); always a point
    of the join-topology frame."""
    b = bilocale_of(bs)
    x = bs.point_index(point_name)
    elem = open_element(bs, bs.universe & ~closure_mask(bs, 1 << x))
    assert b.frame.is_point(elem)
    return elem


def induced_join_identity(bs: Bispace, a_mask: int) -> bool:
    """The induced sublocale is the join of its points' two-element pieces."""
    b = bilocale_of(bs)
    f = b.frame
    parts = []
    for x in bits(a_mask):
        elem = open_element(bs, bs.universe & ~closure_mask(bs, 1 << x))
        parts.append((1 << elem) | (1 << f.top))
    joined = sublocales.sublocale_join(f, parts) if parts else 1 << f.top
    return joined == induced_sublocale(bs, a_mask).members


def is_td(bs: Bispace) -> bool:
    """Every point of (X, join topology) has an open neighborhood that
    stays open after deleting the point."""
    opens = set(join_topology(bs))
    for x in range(len(bs.points)):
        bit = 1 << x
        if not any(u & bit and (u & ~bit) in opens for u in opens):
            return False
    return True


is_sup_td = is_td


def is_tau_dense_set(bs: Bispace, side: int, a_mask: int) -> bool:
    return all(u & a_mask for u in bs.tau[side] if u)


@dataclass(frozen=True)
class AlmostBaireVerdict:
    orientation: tuple
    verdict: bool
    dense_open_sets: tuple   # side-j open masks that are tau_i-dense
    intersection: int
    witness_open: int | None


def is_almost_ij_baire(bs: Bispace, orientation) -> AlmostBaireVerdict:
    """Intersection of every tau_i-dense tau_j-open set is tau_i-dense
    (worst-family reduction, exact on finite spaces)."""
    i, j = check_orientation(orientation)
    family = tuple(u for u in bs.tau[j] if is_tau_dense_set(bs, i, u))
    inter = bs.universe
    for u in family:
        inter &= u
    verdict = is_tau_dense_set(bs, i, inter)
    witness = None
    if not verdict:
        witness = next(u for u in bs.tau[i] if u and not u & inter)
    return AlmostBaireVerdict((i, j), verdict, family, inter, witness)


def gdelta_complemented_gate(bs: Bispace) -> bool:
    """Plain G-delta sublocales of the induced bilocale (meets of opens over
    the whole join topology) all complemented."""
    b = bilocale_of(bs)
    f = b.frame
    for g in sublocales.gdelta_closure_family(f, range(f.n)):
        supp = sublocales.supplement_fast(f, g)
        if sublocales.sublocale_join(f, (g, supp)) != f.universe_mask:
            return False
    return True


def equivalence_replay(bs: Bispace, orientation, instance: str = "") -> PropositionReport:
    """Almost (i,j)-Baire for the space iff (i,j)-Baire for the induced
    bilocale, under the sup-T_D and G-delta-complemented gates. Both sides
    are evaluated and recorded even when a gate fails."""
    from .baire import is_ij_baire

    i, j = check_orientation(orientation)
    hyp = {"sup_td": is_td(bs), "gdelta_complemented": gdelta_complemented_gate(bs)}
    almost = is_almost_ij_baire(bs, (i, j)).verdict
    localic = is_ij_baire(bilocale_of(bs), (i, j)).verdict
    agree = almost == localic
    return PropositionReport(
        "bispace-baire-equivalence",
        instance,
        (i, j),
        hyp,
        agree,
        settle(hyp, agree),
        {"almost_baire": almost, "bilocale_baire": localic},
    )


def induced_density_lemma(bs: Bispace, instance: str = "") -> PropositionReport:
    """Under sup-T_D: a subset is tau_i-dense iff its induced sublocale is
    i-dense, for every subset and both sides."""
    from .bilocales import is_i_dense

    hyp = {"sup_td": is_td(bs)}
    b = bilocale_of(bs)
    ok = True
    witness = None
    for a_mask in range(bs.universe + 1):
        ind = induced_sublocale(bs, a_mask).members
        for i in (1, 2):
            if is_tau_dense_set(bs, i, a_mask) != is_i_dense(b, i, ind):
                ok, witness = False, {"subset": bs.set_label(a_mask), "side": i}
                break
        if not ok:
            break
    return PropositionReport(
        "induced-density-lemma", instance, None, hyp, ok, settle(hyp, ok), witness
    )
