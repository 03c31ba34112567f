"""Finite frames: validation, tables, and element-level algebra.

A Frame carries an immutable boolean order matrix ``leq`` (leq[x, y] iff
x <= y) over indices 0..n-1 plus total ``meet``/``join``/``imp`` tables,
where ``imp`` is the Heyting residual: imp[a, b] is the largest r with
meet(r, a) <= b. Arbitrary meets and joins fold the binary tables, which is
exact on finite carriers. Instances never mutate after construction, so
they are safe to share between threads; derived data (open-sublocale
masks and the like) is cached on first use.

Construction goes through ``validate_frame`` / ``Frame.from_leq`` and
rejects anything that is not a bounded distributive lattice:
``NotALattice`` names a pair without a glb/lub, ``NotDistributive``
returns a witness triple. The pairwise distributivity check is
equivalent to the full "finite meets distribute over arbitrary joins"
law on finite lattices; ``frame_law_witness_exhaustive`` keeps the
2**n-subset reading available as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .bitsets import bits, mask_of
from .errors import (
    EmptyCarrier,
    InvalidOrder,
    NotALattice,
    NotASubframe,
    NotDistributive,
    SizeGuardExceeded,
)
from .limits import SUBSET_GUARD, TABLE_GUARD


def _lattice_tables(leq):
    """glb/lub tables from a partial order, or NotALattice with the bad pair."""
    n = leq.shape[0]
    below = leq.T  # below[i, x] iff x <= i
    above = leq    # above[i, x] iff i <= x

    def table(bound_rows, dominates, kind):
        # bound_rows[i, j, x]: x bounds both i and j; the glb/lub is the
        # unique bound comparable with all others.
        common = bound_rows[:, None, :] & bound_rows[None, :, :]
        # count of common bounds NOT dominated by candidate g
        miss = np.einsum("ijx,xg->ijg", common.astype(np.int64), (~dominates).astype(np.int64))
        cand = common & (miss == 0)
        found = cand.any(axis=2)
        if not found.all():
            i, j = np.argwhere(~found)[0]
            raise NotALattice((int(i), int(j)), kind)
        return np.argmax(cand, axis=2).astype(np.int64)

    meet = table(below, leq, "glb")
    join = table(above, leq.T, "lub")
    return meet, join


class Frame:
    def __init__(self, leq, labels=None):
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        if n == 0:
            raise EmptyCarrier("frame needs at least one element")
        if leq.shape != (n, n):
            raise InvalidOrder(f"leq must be square, got {leq.shape}")
        if n > TABLE_GUARD:
            raise SizeGuardExceeded(n, TABLE_GUARD, "table construction")
        if not leq[np.diag_indices(n)].all():
            raise InvalidOrder("relation is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise InvalidOrder("relation is not antisymmetric")
        closure = leq | (leq @ leq)
        if (closure != leq).any():
            raise InvalidOrder("relation is not transitive")

        self.n = n
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise InvalidOrder("label count does not match element count")
        if len(set(self.labels)) != n:
            raise InvalidOrder("duplicate element labels")

        self.meet, self.join = _lattice_tables(leq)
        wit = kernels.distributive_witness(self.meet, self.join)
        if wit[0] >= 0:
            raise NotDistributive(tuple(int(v) for v in wit))

        self.bottom = int(np.flatnonzero(leq.all(axis=1))[0])
        self.top = int(np.flatnonzero(leq.all(axis=0))[0])
        self.imp = kernels.heyting_table(self.meet, self.join, leq, self.bottom)
        for arr in (leq, self.meet, self.join, self.imp):
            arr.flags.writeable = False
        self.leq = leq
        self.universe_mask = (1 << n) - 1
        self._cache = {}

    # ---- construction -------------------------------------------------

    @classmethod
    def from_leq(cls, leq, labels=None):
        return cls(leq, labels)

    @classmethod
    def from_subsets(cls, masks, labels=None):
        """Frame of a finite family of sets (as bitmasks) ordered by inclusion."""
        masks = list(masks)
        leq = np.array([[a & ~b == 0 for b in masks] for a in masks], dtype=bool)
        return cls(leq, labels)

    def __repr__(self):
        return f"Frame(n={self.n}, bottom={self.labels[self.bottom]!r}, top={self.labels[self.top]!r})"

    def __len__(self):
        return self.n

    # ---- binary and folded lattice ops --------------------------------

    def le(self, a, b) -> bool:
        return bool(self.leq[a, b])

    def meet_of(self, elems) -> int:
        out = self.top
        for e in elems:
            out = int(self.meet[out, e])
        return out

    def join_of(self, elems) -> int:
        out = self.bottom
        for e in elems:
            out = int(self.join[out, e])
        return out

    def heyting(self, a, b) -> int:
        return int(self.imp[a, b])

    def pseudocomplement(self, a) -> int:
        return int(self.imp[a, self.bottom])

    # ---- masks ---------------------------------------------------------

    def up_mask(self, a) -> int:
        """Closed sublocale c(a) = {x : a <= x} as a bitmask."""
        return mask_of(np.flatnonzero(self.leq[a]))

    def down_mask(self, a) -> int:
        return mask_of(np.flatnonzero(self.leq[:, a]))

    def open_mask(self, a) -> int:
        """Open sublocale o(a) = {a -> x : x in L} as a bitmask."""
        return self.open_masks[a]

    @property
    def open_masks(self):
        key = "open_masks"
        if key not in self._cache:
            self._cache[key] = tuple(mask_of(set(int(v) for v in self.imp[a])) for a in range(self.n))
        return self._cache[key]

    @property
    def gen_masks(self):
        """gen_masks[t] = smallest sublocale containing t, namely {x -> t : x in L}."""
        key = "gen_masks"
        if key not in self._cache:
            arr = np.array(
                [mask_of(set(int(self.imp[x, t]) for x in range(self.n))) for t in range(self.n)],
                dtype=np.int64,
            )
            arr.flags.writeable = False
            self._cache[key] = arr
        return self._cache[key]

    @property
    def down_masks(self):
        key = "down_masks"
        if key not in self._cache:
            arr = np.array([self.down_mask(a) for a in range(self.n)], dtype=np.int64)
            arr.flags.writeable = False
            self._cache[key] = arr
        return self._cache[key]

    # ---- element predicates ---------------------------------------------

    def is_dense_element(self, a) -> bool:
        return self.pseudocomplement(a) == self.bottom

    def is_complemented_element(self, a) -> bool:
        return int(self.join[a, self.pseudocomplement(a)]) == self.top

    def complement_of(self, a) -> int:
        """The complement of a complemented element (unique here: it is a*)."""
        c = self.pseudocomplement(a)
        if int(self.join[a, c]) != self.top:
            from .errors import NotComplemented

            raise NotComplemented(a)
        return c

    def is_point(self, a) -> bool:
        if a == self.top:
            return False
        sub = self.leq[self.meet, a]          # sub[b, c] iff b /\ c <= a
        ok = self.leq[:, a][:, None] | self.leq[:, a][None, :]
        return bool((~sub | ok).all())

    def rather_below(self, x, a) -> bool:
        return int(self.join[self.pseudocomplement(x), a]) == self.top

    def is_regular(self) -> bool:
        for a in range(self.n):
            if self.join_of(x for x in range(self.n) if self.rather_below(x, a)) != a:
                return False
        return True

    def is_compact_element(self, x, guard=SUBSET_GUARD) -> bool:
        """Literal finite-subcover quantifier over every subset, as an oracle.

        On a finite carrier each covering subset is its own finite subcover,
        so the scan can only ever return True; it exists to exercise the
        definition, not to discriminate.
        """
        if self.n > guard:
            raise SizeGuardExceeded(self.n, guard, "compactness subset scan")
        join_of_mask = self._join_of_mask_table()
        for bm in range(1 << self.n):
            if self.leq[x, join_of_mask[bm]]:
                pass  # F = A is the finite subcover
        return True

    def _join_of_mask_table(self):
        key = "join_of_mask"
        if key not in self._cache:
            total = 1 << self.n
            table = np.full(total, self.bottom, dtype=np.int64)
            for m in range(1, total):
                low = m & -m
                table[m] = self.join[table[m ^ low], low.bit_length() - 1]
            self._cache[key] = table
        return self._cache[key]


def validate_frame(elements, leq_pairs) -> Frame:
    """Build a Frame from element names and order pairs (indices).

    The pairs are closed reflexively and transitively before validation, so
    either a covers list or the full relation is accepted; cycles and
    duplicate names are rejected rather than quotiented.
    """
    names = list(elements)
    if not names:
        raise EmptyCarrier("empty element list")
    n = len(names)
    rel = np.eye(n, dtype=bool)
    for i, j in leq_pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidOrder(f"pair ({i}, {j}) out of range")
        rel[i, j] = True
    while True:
        closed = rel | (rel @ rel)
        if (closed == rel).all():
            break
        rel = closed
    return Frame(rel, labels=names)


def frame_from_json(obj) -> Frame:
    return validate_frame(obj["elements"], [tuple(p) for p in obj["leq"]])


def frame_to_json(f: Frame) -> dict:
    pairs = [[i, j] for i in range(f.n) for j in range(f.n) if i != j and f.leq[i, j]]
    return {"elements": list(f.labels), "leq": pairs}


def frame_law_witness_exhaustive(f: Frame, guard=SUBSET_GUARD):
    """Subset-level frame law oracle: first (a, B-mask) violating
    meet(a, join B) = join{meet(a, b)}, or None. Redundant with pairwise
    distributivity on finite lattices; kept as the brute-force check."""
    if f.n > guard:
        raise SizeGuardExceeded(f.n, guard, "frame law subset scan")
    a, bm = kernels.frame_law_witness(f.meet, f.join, f.bottom)
    if a < 0:
        return None
    return int(a), int(bm)


@dataclass(frozen=True)
class Subframe:
    parent: Frame
    mask: int

    @property
    def members(self):
        return tuple(bits(self.mask))


def subframe(f: Frame, members, side=None) -> Subframe:
    """Validate that members contain 0 and 1 and are closed under the
    parent's binary meets and joins (enough for all joins, finitely)."""
    mask = members if isinstance(members, int) else mask_of(members)
    if not (mask >> f.bottom) & 1 or not (mask >> f.top) & 1:
        raise NotASubframe(side, "must contain bottom and top")
    elems = tuple(bits(mask))
    for a in elems:
        for b in elems:
            if not (mask >> int(f.meet[a, b])) & 1:
                raise NotASubframe(side, f"not closed under meet at ({a}, {b})")
            if not (mask >> int(f.join[a, b])) & 1:
                raise NotASubframe(side, f"not closed under join at ({a}, {b})")
    return Subframe(f, mask)


@dataclass(frozen=True)
class ElementPredicateReport:
    subject: int
    property: str
    verdict: bool
    witness: tuple | None = None


def element_report(f: Frame, a: int, prop: str) -> ElementPredicateReport:
    if prop == "dense":
        return ElementPredicateReport(a, prop, f.is_dense_element(a))
    if prop == "complemented":
        ok = f.is_complemented_element(a)
        return ElementPredicateReport(a, prop, ok, (f.pseudocomplement(a),) if ok else None)
    if prop == "compact":
        return ElementPredicateReport(a, prop, f.is_compact_element(a))
    if prop == "point":
        return ElementPredicateReport(a, prop, f.is_point(a))
    raise ValueError(f"unknown element property {prop!r}")
