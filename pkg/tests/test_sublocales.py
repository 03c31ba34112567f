import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import bilocale_lab as bl
from bilocale_lab import errors, generators, sublocales
from bilocale_lab.bitsets import bits, mask_of
from oracles import gdelta_family_sets, powerset, sublocale_sets


def members(f, mask):
    return set(bits(mask))


def test_closed_of_top_is_o(chain3, boolean4):
    for f in (chain3, boolean4):
        assert f.up_mask(f.top) == sublocales.o_mask(f)


def test_open_of_top_is_everything(chain3, boolean4, grid6):
    for f in (chain3, boolean4, grid6):
        assert f.open_mask(f.top) == f.universe_mask


def test_three_chain_open_of_middle(chain3):
    assert members(chain3, chain3.open_mask(1)) == {0, 2}


def test_is_sublocale_examples(chain3):
    assert sublocales.is_sublocale(chain3, sublocales.o_mask(chain3))
    assert sublocales.is_sublocale(chain3, mask_of([1, 2]))
    assert not sublocales.is_sublocale(chain3, mask_of([0, 1]))  # missing top


def test_enumeration_counts(chain2, chain3):
    assert len(sublocales.enumerate_sublocales(chain2)) == 2
    lat = sublocales.enumerate_sublocales(chain3)
    got = {frozenset(members(chain3, m)) for m in lat.masks}
    assert got == {frozenset({2}), frozenset({0, 2}), frozenset({1, 2}), frozenset({0, 1, 2})}


def test_enumeration_matches_powerset_oracle(all_corpus_frames):
    for name, f in all_corpus_frames.items():
        got = {frozenset(members(f, m)) for m in sublocales.enumerate_sublocales(f).masks}
        assert got == set(sublocale_sets(f)), name


def test_enumeration_guard(chain3):
    with pytest.raises(errors.SizeGuardExceeded):
        sublocales.enumerate_sublocales(chain3, guard=2)


def test_closure_examples(chain3):
    o = sublocales.o_mask(chain3)
    assert sublocales.closure(chain3, o) == o
    assert sublocales.closure(chain3, mask_of([1, 2])) == chain3.up_mask(1)
    bl_mask = sublocales.booleanization(chain3)
    assert sublocales.closure(chain3, bl_mask) == chain3.universe_mask  # smallest dense is dense


def test_closure_is_up_of_meet(all_corpus_frames):
    for f in all_corpus_frames.values():
        if f.n > 8:
            continue
        for m in sublocales.enumerate_sublocales(f).masks:
            assert sublocales.closure(f, m) == f.up_mask(f.meet_of(bits(m)))


def test_join_examples(boolean4):
    f = boolean4
    o = sublocales.o_mask(f)
    full = f.universe_mask
    lat = sublocales.enumerate_sublocales(f)
    for s in lat.masks:
        assert sublocales.sublocale_join(f, (o, s)) == s
    for a in range(f.n):
        for b in range(f.n):
            joined = sublocales.sublocale_join(f, (f.up_mask(a), f.up_mask(b)))
            assert joined == f.up_mask(f.meet[a, b])
            joined = sublocales.sublocale_join(f, (f.open_mask(a), f.open_mask(b)))
            assert joined == f.open_mask(f.join[a, b])
    assert sublocales.sublocale_meet(f, (full, f.up_mask(1))) == f.up_mask(1)


def test_join_output_is_sublocale(all_corpus_frames):
    for f in all_corpus_frames.values():
        if f.n > 6:
            continue
        masks = sublocales.enumerate_sublocales(f).masks
        for a, b in combinations(masks, 2):
            assert sublocales.is_sublocale(f, sublocales.sublocale_join(f, (a, b)))


def test_supplement_examples(chain3, boolean4):
    for f in (chain3, boolean4):
        o = sublocales.o_mask(f)
        assert sublocales.supplement(f, f.universe_mask) == o
        assert sublocales.supplement(f, o) == f.universe_mask
        for a in range(f.n):
            assert sublocales.supplement(f, f.open_mask(a)) == f.up_mask(a)
            assert sublocales.supplement(f, f.up_mask(a)) == f.open_mask(a)


def test_supplement_fast_agrees_with_lattice_supplement(all_corpus_frames):
    for name, f in all_corpus_frames.items():
        for m in sublocales.enumerate_sublocales(f).masks:
            assert sublocales.supplement_fast(f, m) == sublocales.supplement(f, m), name


def test_open_closed_complement_pair(all_corpus_frames):
    for f in all_corpus_frames.values():
        o = sublocales.o_mask(f)
        for a in range(f.n):
            assert f.open_mask(a) & f.up_mask(a) == o
            assert sublocales.sublocale_join(f, (f.open_mask(a), f.up_mask(a))) == f.universe_mask


def test_complemented_sublocales(chain3, boolean4):
    assert sublocales.is_complemented_sublocale(chain3, sublocales.o_mask(chain3))
    for a in range(boolean4.n):
        assert sublocales.is_complemented_sublocale(boolean4, boolean4.open_mask(a))
    # booleanization of the 3-chain: complement found by the exhaustive scan
    assert sublocales.is_complemented_sublocale(chain3, sublocales.booleanization(chain3))


def test_booleanization_examples(chain2, chain3, boolean4):
    assert members(boolean4, sublocales.booleanization(boolean4)) == set(range(4))
    assert members(chain3, sublocales.booleanization(chain3)) == {0, 2}
    assert members(chain2, sublocales.booleanization(chain2)) == {0, 1}


def test_booleanization_smallest_dense(all_corpus_frames):
    for f in all_corpus_frames.values():
        if f.n > 8:
            continue
        bl_mask = sublocales.booleanization(f)
        assert sublocales.is_dense_sublocale(f, bl_mask)
        for m in sublocales.dense_sublocales(f):
            assert bl_mask & ~m == 0


def test_nu_examples(chain3):
    s = mask_of([0, 2])
    for member in (0, 2):
        assert sublocales.nu(chain3, s, member) == member
    assert sublocales.nu(chain3, s, 1) == 2
    assert sublocales.nu(chain3, s, 0) == 0


def test_nu_is_meet_preserving_surjection(boolean4, grid6):
    for f in (boolean4, grid6):
        for s in sublocales.enumerate_sublocales(f).masks:
            image = {sublocales.nu(f, s, a) for a in range(f.n)}
            assert image == members(f, s)
            for a in range(f.n):
                for b in range(f.n):
                    lhs = sublocales.nu(f, s, f.meet[a, b])
                    rhs = f.meet[sublocales.nu(f, s, a), sublocales.nu(f, s, b)]
                    assert lhs == rhs


def test_open_in_closed_in(chain3):
    f = chain3
    assert sublocales.open_in(f, f.universe_mask, 1) == f.open_mask(1)
    s = mask_of([1, 2])
    assert sublocales.closed_in(f, s, f.top) == sublocales.o_mask(f)
    assert members(f, sublocales.open_in(f, s, 1)) == {2}


def test_gdelta_family(boolean4):
    assert sublocales.gdelta_closure_family(boolean4, ()) == ()
    assert sublocales.gdelta_closure_family(boolean4, (boolean4.top,)) == (boolean4.universe_mask,)
    fam = set(sublocales.gdelta_closure_family(boolean4, range(boolean4.n)))
    oracle = {mask_of(s) for s in gdelta_family_sets(boolean4, range(boolean4.n))}
    assert fam == oracle


def test_gdelta_realize_recheck(grid6):
    g = sublocales.gdelta_realize(grid6, (1, 2, 3))
    assert g.recheck()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_subframe_join_closure_property(seed):
    rng = random.Random(seed)
    f = generators.random_frame(rng, max_elems=8)
    mask = generators.random_subframe_mask(rng, f)
    elems = list(bits(mask))
    for subset in powerset(elems):
        assert (mask >> f.join_of(subset)) & 1
