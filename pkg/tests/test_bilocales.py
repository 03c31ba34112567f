import random

import pytest
from hypothesis import given, settings, strategies as st

import bilocale_lab as bl
from bilocale_lab import bilocales, errors, generators, sublocales
from bilocale_lab.bitsets import bits, mask_of


@pytest.fixture(scope="module")
def split4(split_bispace):
    return bl.bilocale_of(split_bispace)


def test_symmetric_always_valid(chain3, boolean4, grid6):
    for f in (chain3, boolean4, grid6):
        b = bl.symmetric_bilocale(f)
        assert b.is_symmetric()
        bl.build_bilocale(f, f.universe_mask, f.universe_mask)


def test_split_bispace_bilocale_valid(split4):
    assert split4.frame.n == 8


def test_covering_failure_witnessed(boolean4):
    trivial = mask_of([boolean4.bottom, boolean4.top])
    with pytest.raises(errors.CoveringFails) as exc:
        bl.build_bilocale(boolean4, trivial, trivial)
    assert exc.value.element in (1, 2)  # an atom cannot be covered


def test_side_validation(boolean4):
    with pytest.raises(errors.NotASubframe):
        bl.build_bilocale(boolean4, mask_of([0, 1]), boolean4.universe_mask)


class TestBullet:
    def test_extremes(self, chain3):
        b = bl.symmetric_bilocale(chain3)
        assert bl.bullet(b, 1, chain3.bottom) == chain3.top
        assert bl.bullet(b, 1, chain3.top) == chain3.bottom

    def test_split_atoms(self, split_bispace, split4):
        # side 1 element {a}: join of the side-2 sets missing a
        a_elem = split4.frame.labels.index("{a}")
        expected = split4.frame.labels.index("{b,c,d}")
        assert bl.bullet(split4, 1, a_elem) == expected

    def test_symmetric_bullet_is_pseudocomplement(self):
        rng = random.Random(3)
        for _ in range(25):
            f = generators.random_frame(rng)
            b = bl.symmetric_bilocale(f)
            for c in range(f.n):
                assert bl.bullet(b, 1, c) == f.pseudocomplement(c)

    def test_wrong_side_rejected(self, split4):
        outside = next(x for x in range(split4.frame.n) if not split4.in_side(1, x))
        with pytest.raises(errors.NotInSide):
            bl.bullet(split4, 1, outside)

    def test_disjointness_adjunction(self, split4):
        # a /\ b = 0 iff a <= bullet(b), for a in the opposite side
        f = split4.frame
        for i in (1, 2):
            j = bilocales.other(i)
            for c in split4.side_elems(i):
                bullet_c = bl.bullet(split4, i, c)
                for a in split4.side_elems(j):
                    assert (f.meet[a, c] == f.bottom) == bool(f.leq[a, bullet_c])


class TestInteriorClosure:
    def test_extremes(self, split4):
        f = split4.frame
        for i in (1, 2):
            assert bl.interior_i(split4, i, f.universe_mask) == f.universe_mask
            assert bl.closure_i(split4, i, sublocales.o_mask(f)) == sublocales.o_mask(f)

    def test_closed_of_bullet_is_closure_of_open(self, split4):
        # c(bullet(a)) = cl_j(o(a)) for a in side i
        f = split4.frame
        for i in (1, 2):
            j = bilocales.other(i)
            for a in split4.side_elems(i):
                assert f.up_mask(bl.bullet(split4, i, a)) == bl.closure_i(split4, j, f.open_mask(a))

    def test_sandwich_and_idempotence(self, split4):
        f = split4.frame
        for m in sublocales.enumerate_sublocales(f).masks:
            for i in (1, 2):
                inner = bl.interior_i(split4, i, m)
                outer = bl.closure_i(split4, i, m)
                assert inner & ~m == 0 and m & ~outer == 0
                assert bl.interior_i(split4, i, inner) == inner
                assert bl.closure_i(split4, i, outer) == outer

    def test_monotone(self, split4):
        f = split4.frame
        masks = sublocales.enumerate_sublocales(f).masks
        for a in masks:
            for b in masks:
                if a & ~b:
                    continue
                for i in (1, 2):
                    assert bl.interior_i(split4, i, a) & ~bl.interior_i(split4, i, b) == 0
                    assert bl.closure_i(split4, i, a) & ~bl.closure_i(split4, i, b) == 0


class TestDensity:
    def test_whole_frame_dense(self, split4):
        for i in (1, 2):
            assert bl.is_i_dense(split4, i, split4.frame.universe_mask)

    def test_booleanization_i_dense_everywhere(self):
        rng = random.Random(11)
        for _ in range(30):
            b = generators.random_bilocale(rng)
            m = sublocales.booleanization(b.frame)
            for i in (1, 2):
                assert bl.is_i_dense(b, i, m)

    def test_o_never_dense_with_nonzero_side(self, split4):
        for i in (1, 2):
            assert not bl.is_i_dense(split4, i, sublocales.o_mask(split4.frame))

    def test_superset_of_dense_is_dense(self, split4):
        f = split4.frame
        masks = sublocales.enumerate_sublocales(f).masks
        for i in (1, 2):
            for m in masks:
                if not bl.is_i_dense(split4, i, m):
                    continue
                for m2 in masks:
                    if m & ~m2 == 0:
                        assert bl.is_i_dense(split4, i, m2)


class TestNowhereDense:
    def test_o_is_nowhere_dense(self, split4):
        assert bl.is_ij_nowhere_dense(split4, (1, 2), sublocales.o_mask(split4.frame))

    def test_whole_not_nowhere_dense(self, split4):
        assert not bl.is_ij_nowhere_dense(split4, (1, 2), split4.frame.universe_mask)

    def test_closed_of_dense_element(self, split4):
        # a in side i with a j-dense  <->  c(a) is (i,j)-nowhere dense
        f = split4.frame
        for i in (1, 2):
            j = bilocales.other(i)
            for a in split4.side_elems(i):
                dense = bilocales.is_i_dense_element(split4, j, a)
                assert dense == bl.is_ij_nowhere_dense(split4, (i, j), f.up_mask(a))

    def test_stable_under_closure(self, split4):
        f = split4.frame
        for m in sublocales.enumerate_sublocales(f).masks:
            cl = sublocales.closure(f, m)
            for orientation in ((1, 2), (2, 1)):
                assert bl.is_ij_nowhere_dense(split4, orientation, m) == bl.is_ij_nowhere_dense(
                    split4, orientation, cl
                )


def test_gdelta_density(split4):
    f = split4.frame
    assert bl.is_i_gdelta_dense(split4, 1, f.universe_mask)
    assert not bl.is_i_gdelta_dense(split4, 1, sublocales.o_mask(f))
    m = sublocales.booleanization(f)
    for i in (1, 2):
        assert bl.is_i_gdelta_dense(split4, i, m)


def test_gdelta_gate_always_passes_here():
    rng = random.Random(17)
    for _ in range(20):
        b = generators.random_bilocale(rng)
        for i in (1, 2):
            assert bilocales.gdelta_sublocales_complemented(b, i)


class TestSubbilocale:
    def test_whole_carrier_reproduces(self, split4):
        sub = bl.subbilocale(split4, split4.frame.universe_mask)
        assert sub.bilocale.frame.n == split4.frame.n
        for i in (1, 2):
            assert sub.bilocale.side_elems(i) == split4.side_elems(i)
        assert sub.verify()

    def test_three_chain_fragment(self, chain3):
        b = bl.symmetric_bilocale(chain3)
        sub = bl.subbilocale(b, mask_of([1, 2]))
        assert sub.bilocale.frame.n == 2
        assert sub.nu_sub == (0, 0, 1)  # nu sends 0 to m, m to m, 1 to 1
        assert sub.verify()

    def test_booleanization_subbilocale(self, split4):
        sub = bl.subbilocale(split4, sublocales.booleanization(split4.frame))
        assert sub.verify()


class TestPropertyChecks:
    def test_split_bispace_boolean_not_prefit(self, split4):
        assert bl.is_boolean_bilocale(split4)
        assert not bl.is_i_prefit(split4, 1)
        assert not bl.is_i_prefit(split4, 2)
        assert not bl.is_strongly_prefit(split4)

    def test_symmetric_boolean_strongly_prefit(self, boolean4):
        b = bl.symmetric_bilocale(boolean4)
        assert bl.is_prefit(b, strict=True)
        assert bl.is_strongly_prefit(b)

    def test_strongly_prefit_implies_both(self):
        rng = random.Random(23)
        for _ in range(40):
            b = generators.random_bilocale(rng)
            if bl.is_strongly_prefit(b):
                assert bl.is_i_prefit(b, 1) and bl.is_i_prefit(b, 2)
                assert bl.is_prefit(b) and bl.is_prefit(b, strict=True)

    def test_literal_prefit_constant_true(self):
        rng = random.Random(29)
        for _ in range(20):
            assert bl.is_prefit(generators.random_bilocale(rng))

    def test_regular_and_compact(self, boolean4, chain3):
        assert bl.is_regular_bilocale(bl.symmetric_bilocale(boolean4))
        assert not bl.is_regular_bilocale(bl.symmetric_bilocale(chain3))
        assert bl.is_compact_bilocale(bl.symmetric_bilocale(chain3))


def test_symmetric_sides_coincide():
    rng = random.Random(31)
    for _ in range(20):
        f = generators.random_frame(rng, max_elems=10)
        b = bl.symmetric_bilocale(f)
        for m in sublocales.enumerate_sublocales(f).masks:
            assert bl.is_i_dense(b, 1, m) == bl.is_i_dense(b, 2, m)
            assert bl.is_i_dense(b, 1, m) == sublocales.is_dense_sublocale(f, m)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_interior_lands_in_side(seed):
    b = generators.random_bilocale(random.Random(seed))
    f = b.frame
    for i in (1, 2):
        for m in (f.universe_mask, sublocales.o_mask(f), f.up_mask(f.bottom)):
            elem = bilocales.interior_elem(b, i, m)
            assert b.in_side(i, elem)
