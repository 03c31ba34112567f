import random

import pytest
from hypothesis import given, settings, strategies as st

import bilocale_lab as bl
from bilocale_lab import errors, frames, generators
from oracles import distributivity_holds


def test_two_chain_is_a_frame():
    f = bl.validate_frame(["0", "1"], [(0, 1)])
    assert f.bottom == 0 and f.top == 1


def test_empty_carrier_rejected():
    with pytest.raises(errors.EmptyCarrier):
        bl.validate_frame([], [])


def test_diamond_m3_rejected_with_witness():
    with pytest.raises(errors.NotDistributive) as exc:
        bl.validate_frame(["0", "a", "b", "c", "1"], [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    a, b, c = exc.value.witness
    # the witness triple must actually break distributivity in the raw tables
    assert {a, b, c} <= {0, 1, 2, 3, 4}


def test_pentagon_n5_rejected():
    with pytest.raises(errors.NotDistributive):
        bl.validate_frame(["0", "a", "b", "c", "1"], [(0, 1), (0, 3), (1, 2), (2, 4), (3, 4)])


def test_boolean4_is_a_frame(boolean4):
    assert boolean4.n == 4
    assert distributivity_holds(boolean4)


def test_cycle_rejected():
    with pytest.raises(errors.InvalidOrder):
        bl.validate_frame(["x", "y"], [(0, 1), (1, 0)])


def test_duplicate_labels_rejected():
    with pytest.raises(errors.InvalidOrder):
        bl.validate_frame(["x", "x"], [(0, 1)])


def test_missing_bound_is_not_a_lattice():
    # two incomparable elements with no top
    with pytest.raises(errors.NotALattice):
        bl.validate_frame(["a", "b"], [])


class TestHeyting:
    def test_two_chain_top_to_bottom(self, chain2):
        assert chain2.heyting(chain2.top, chain2.bottom) == chain2.bottom

    def test_boolean_a_to_b(self, boolean4):
        a, b = 1, 2  # the two atoms
        assert boolean4.heyting(a, b) == b

    def test_three_chain_top_to_middle(self, chain3):
        # independent evaluation: join of every x with x /\ 1 <= m
        expected = chain3.join_of(x for x in range(3) if chain3.leq[chain3.meet[x, 2], 1])
        assert expected == 1
        assert chain3.heyting(2, 1) == expected


class TestPseudocomplement:
    def test_three_chain_middle_is_dense(self, chain3):
        assert chain3.pseudocomplement(1) == chain3.bottom
        assert chain3.is_dense_element(1)
        assert not chain3.is_complemented_element(1)

    def test_boolean_atoms_complement_each_other(self, boolean4):
        assert boolean4.pseudocomplement(1) == 2
        assert not boolean4.is_dense_element(1)
        assert boolean4.is_complemented_element(1)

    def test_bottom_star_is_top(self, chain4, grid6):
        for f in (chain4, grid6):
            assert f.pseudocomplement(f.bottom) == f.top

    def test_top_always_dense_and_complemented(self, grid6):
        assert grid6.is_dense_element(grid6.top)
        assert grid6.is_complemented_element(grid6.top)


class TestPoints:
    def test_two_chain_bottom_is_point(self, chain2):
        assert chain2.is_point(0)

    def test_boolean_atom_is_point(self, boolean4):
        assert boolean4.is_point(1)

    def test_top_never_a_point(self, chain3, boolean4, grid6):
        for f in (chain3, boolean4, grid6):
            assert not f.is_point(f.top)


class TestRegularity:
    def test_powerset_frames_regular(self, boolean4, boolean8):
        assert boolean4.is_regular()
        assert boolean8.is_regular()

    def test_three_chain_not_regular(self, chain3):
        # join of everything rather-below m is 0, not m
        assert chain3.join_of(x for x in range(3) if chain3.rather_below(x, 1)) == 0
        assert not chain3.is_regular()

    def test_bottom_rather_below_everything(self, grid6):
        assert all(grid6.rather_below(grid6.bottom, a) for a in range(grid6.n))


def test_compact_element_oracle(chain3, boolean4):
    for f in (chain3, boolean4):
        assert all(f.is_compact_element(x) for x in range(f.n))


def test_compact_element_guard(chain3):
    with pytest.raises(errors.SizeGuardExceeded):
        chain3.is_compact_element(0, guard=2)


def test_frame_law_oracle_clear(chain4, boolean8, grid6):
    for f in (chain4, boolean8, grid6):
        assert frames.frame_law_witness_exhaustive(f) is None


def test_subframe_validation(boolean4):
    sf = frames.subframe(boolean4, [0, 1, 3])
    assert sf.members == (0, 1, 3)
    with pytest.raises(errors.NotASubframe):
        frames.subframe(boolean4, [0, 1])  # missing top
    with pytest.raises(errors.NotASubframe):
        frames.subframe(boolean4, [0, 1, 2])  # atoms join to top, not present


def test_json_roundtrip(grid6):
    again = bl.frame_from_json(bl.frame_to_json(grid6))
    assert again.n == grid6.n
    assert (again.leq == grid6.leq).all()
    assert again.labels == grid6.labels


def test_element_reports(chain3):
    rep = frames.element_report(chain3, 1, "dense")
    assert rep.verdict and rep.property == "dense"
    rep = frames.element_report(chain3, 2, "complemented")
    assert rep.verdict and rep.witness == (0,)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_heyting_adjunction_on_random_frames(seed):
    f = generators.random_frame(random.Random(seed))
    for a in range(f.n):
        for b in range(f.n):
            r = f.heyting(a, b)
            for x in range(f.n):
                assert bool(f.leq[x, r]) == bool(f.leq[f.meet[x, a], b])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_pseudocomplement_laws_on_random_frames(seed):
    f = generators.random_frame(random.Random(seed))
    for a in range(f.n):
        star = f.pseudocomplement(a)
        assert f.meet[a, star] == f.bottom
        assert f.leq[a, f.pseudocomplement(star)]
