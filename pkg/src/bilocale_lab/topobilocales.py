"""Topobilocales: a frame with two subframes of complemented elements,
and the element-level closure/interior calculus they induce.

tau_i' is the set of complements of side-i members (materialized at
construction since closures are meets over it). Closure and interior of
any element are literal folds; the Baire and category notions quantify
over elements only, so no sublocale enumeration is involved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bilocales import check_orientation
from .bitsets import bits, mask_of
from .errors import NotComplemented
from .frames import Frame, subframe
from .reports import PropositionReport, settle


class TopoBilocale:
    def __init__(self, frame: Frame, tau1_mask: int, tau2_mask: int):
        self.frame = frame
        self._tau = {1: tau1_mask, 2: tau2_mask}
        comp = {}
        for i in (1, 2):
            comp[i] = {a: frame.complement_of(a) for a in bits(self._tau[i])}
        self._comp = comp
        self._prime = {i: tuple(sorted(set(comp[i].values()))) for i in (1, 2)}
        self._cache = {}

    def tau_mask(self, i: int) -> int:
        return self._tau[i]

    def tau_elems(self, i: int) -> tuple:
        return tuple(bits(self._tau[i]))

    def tau_prime(self, i: int) -> tuple:
        """Complements of the side-i members."""
        return self._prime[i]

    def __repr__(self):
        return (
            f"TopoBilocale(n={self.frame.n}, |tau1|={len(self.tau_elems(1))}, "
            f"|tau2|={len(self.tau_elems(2))})"
        )


def build_topobilocale(f: Frame, tau1, tau2) -> TopoBilocale:
    m1 = tau1 if isinstance(tau1, int) else mask_of(tau1)
    m2 = tau2 if isinstance(tau2, int) else mask_of(tau2)
    subframe(f, m1, side=1)
    subframe(f, m2, side=2)
    for mask in (m1, m2):
        for a in bits(mask):
            if not f.is_complemented_element(a):
                raise NotComplemented(a)
    return TopoBilocale(f, m1, m2)


def topobilocale_from_json(obj) -> TopoBilocale:
    from .frames import frame_from_json

    f = frame_from_json(obj["frame"])
    return build_topobilocale(f, obj["tau1"], obj["tau2"])


def topobilocale_to_json(t: TopoBilocale) -> dict:
    from .frames import frame_to_json

    return {
        "frame": frame_to_json(t.frame),
        "tau1": list(t.tau_elems(1)),
        "tau2": list(t.tau_elems(2)),
    }


def tau_closure(t: TopoBilocale, i: int, a: int) -> int:
    return t.frame.meet_of(b for b in t.tau_prime(i) if t.frame.leq[a, b])


def tau_interior(t: TopoBilocale, i: int, a: int) -> int:
    return t.frame.join_of(b for b in t.tau_elems(i) if t.frame.leq[b, a])


def is_tau_dense(t: TopoBilocale, i: int, a: int) -> bool:
    return tau_closure(t, i, a) == t.frame.top


def is_tau_ij_nowhere_dense(t: TopoBilocale, orientation, a: int) -> bool:
    """Zero tau_j-interior of the tau_i-closure; cross-checked against the
    complement of the closure being tau_j-dense whenever that complement
    exists (it always does: closures are meets of complemented elements)."""
    i, j = check_orientation(orientation)
    f = t.frame
    cl = tau_closure(t, i, a)
    primary = tau_interior(t, j, cl) == f.bottom
    if f.is_complemented_element(cl):
        assert primary == is_tau_dense(t, j, f.complement_of(cl)), (
            "nowhere-density cross-check disagrees"
        )
    return primary


def closure_interior_identities(t: TopoBilocale, instance: str = "") -> PropositionReport:
    """The eight elementary closure/interior laws, checked on every element
    (the De Morgan pair only where the element is complemented)."""
    f = t.frame
    failures = []
    for i in (1, 2):
        cl = {a: tau_closure(t, i, a) for a in range(f.n)}
        it = {a: tau_interior(t, i, a) for a in range(f.n)}
        if cl[f.bottom] != f.bottom or it[f.bottom] != f.bottom:
            failures.append((i, 1))
        if cl[f.top] != f.top or it[f.top] != f.top:
            failures.append((i, 2))
        if not all(f.leq[a, cl[a]] for a in range(f.n)):
            failures.append((i, 3))
        if not all(
            f.leq[cl[a], cl[b]] for a in range(f.n) for b in range(f.n) if f.leq[a, b]
        ):
            failures.append((i, 4))
        if not all(f.leq[it[a], a] for a in range(f.n)):
            failures.append((i, 5))
        if not all(
            f.leq[it[a], it[b]] for a in range(f.n) for b in range(f.n) if f.leq[a, b]
        ):
            failures.append((i, 6))
        for a in range(f.n):
            if not f.is_complemented_element(a):
                continue
            ac = f.complement_of(a)
            if f.is_complemented_element(cl[a]) and f.complement_of(cl[a]) != it[ac]:
                failures.append((i, 7, a))
            if f.is_complemented_element(it[a]) and f.complement_of(it[a]) != cl[ac]:
                failures.append((i, 8, a))
    ok = not failures
    hyp = {"valid_topobilocale": True}
    return PropositionReport(
        "closure-interior-identities",
        instance,
        None,
        hyp,
        ok,
        settle(hyp, ok),
        {"failures": failures} if failures else None,
    )


def nwd_complement_crosscheck(t: TopoBilocale, instance: str = "") -> PropositionReport:
    """Nowhere density of a iff tau_j-density of the closure's complement,
    over all elements and both orientations."""
    f = t.frame
    ok = True
    witness = None
    for orientation in ((1, 2), (2, 1)):
        i, j = orientation
        for a in range(f.n):
            cl = tau_closure(t, i, a)
            if not f.is_complemented_element(cl):
                continue
            lhs = tau_interior(t, j, cl) == f.bottom
            rhs = is_tau_dense(t, j, f.complement_of(cl))
            if lhs != rhs:
                ok, witness = False, {"a": a, "orientation": list(orientation)}
                break
        if not ok:
            break
    hyp = {"valid_topobilocale": True}
    return PropositionReport(
        "nwd-complement-crosscheck", instance, None, hyp, ok, settle(hyp, ok), witness
    )


@dataclass(frozen=True)
class TauBaireVerdict:
    orientation: tuple
    verdict: bool
    dense_members: tuple
    intersection: int
    witness: int | None


def is_tau_ij_baire(t: TopoBilocale, orientation) -> TauBaireVerdict:
    """Meets of tau_i-dense members of tau_j stay tau_i-dense, decided on
    the meet of them all (density is upward closed)."""
    i, j = check_orientation(orientation)
    f = t.frame
    family = tuple(x for x in t.tau_elems(j) if is_tau_dense(t, i, x))
    inter = f.meet_of(family)
    verdict = is_tau_dense(t, i, inter)
    witness = None
    if not verdict:
        witness = next(
            b for b in t.tau_prime(i) if b != f.top and f.leq[inter, b]
        )
    return TauBaireVerdict((i, j), verdict, family, inter, witness)


def tau_nwd_elements(t: TopoBilocale, orientation) -> tuple:
    i, j = check_orientation(orientation)
    return tuple(
        a for a in range(t.frame.n) if is_tau_ij_nowhere_dense(t, (i, j), a)
    )


def tau_category(t: TopoBilocale, orientation, a: int) -> str:
    """"first" when a sits below the join of every nowhere dense element."""
    i, j = check_orientation(orientation)
    cover = t.frame.join_of(tau_nwd_elements(t, (i, j)))
    return "first" if t.frame.leq[a, cover] else "second"


def final_equivalence_replay(t: TopoBilocale, orientation, instance: str = "") -> PropositionReport:
    """Four-way element-level category equivalence; runs ungated, and any
    divergence is recorded as an observation rather than a refutation."""
    i, j = check_orientation(orientation)
    f = t.frame
    cover = f.join_of(tau_nwd_elements(t, (j, i)))

    s1 = is_tau_ij_baire(t, (i, j)).verdict
    s2 = all(
        not f.leq[a, cover] for a in t.tau_elems(i) if a != f.bottom
    )
    s3 = all(
        tau_interior(t, i, a) == f.bottom
        for a in range(f.n)
        if f.leq[a, cover]
    )
    s4 = all(
        is_tau_dense(t, i, f.complement_of(a))
        for a in range(f.n)
        if f.leq[a, cover] and f.is_complemented_element(a)
    )
    statements = {
        "tau_baire": bool(s1),
        "nonzero_open_second_category": bool(s2),
        "first_category_zero_interior": bool(s3),
        "first_category_complement_dense": bool(s4),
    }
    agree = len(set(statements.values())) == 1
    hyp = {"valid_topobilocale": True}
    return PropositionReport(
        "tau-category-equivalence",
        instance,
        (i, j),
        hyp,
        agree,
        settle(hyp, agree, observation_only=True),
        {"statements": statements},
    )
