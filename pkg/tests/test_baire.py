import random

import pytest
from hypothesis import given, settings, strategies as st

import bilocale_lab as bl
from bilocale_lab import baire, bilocales, errors, generators, reports, sublocales
from bilocale_lab.bitsets import mask_of


@pytest.fixture(scope="module")
def split4(split_bispace):
    return bl.bilocale_of(split_bispace)


class TestBaire:
    def test_symmetric_always_baire(self):
        rng = random.Random(1)
        for _ in range(40):
            b = bl.symmetric_bilocale(generators.random_frame(rng))
            for orientation in ((1, 2), (2, 1)):
                assert bl.is_ij_baire(b, orientation).verdict

    def test_discrete_indiscrete_orientation_12(self):
        bs = bl.validate_bispace(["a", "b"], [[], ["a"], ["b"], ["a", "b"]], [[], ["a", "b"]])
        b = bl.bilocale_of(bs)
        v = bl.is_ij_baire(b, (1, 2))
        # the only 1-dense 2-open sublocale is the whole thing
        assert v.dense_open_elements == (b.frame.top,)
        assert v.verdict

    def test_verdicts_recheck(self):
        rng = random.Random(2)
        for _ in range(40):
            b = generators.random_bilocale(rng)
            for orientation in ((1, 2), (2, 1)):
                v = bl.is_ij_baire(b, orientation)
                assert baire.recheck_baire(b, v)

    def test_worst_family_matches_exhaustive_oracle(self):
        rng = random.Random(3)
        checked = 0
        for _ in range(120):
            b = generators.random_bilocale(rng)
            for orientation in ((1, 2), (2, 1)):
                family, _ = baire._worst_intersection(b, orientation)
                if len(family) > 5:
                    continue
                checked += 1
                assert baire.is_ij_baire_exhaustive(b, orientation) == bl.is_ij_baire(b, orientation).verdict
        assert checked >= 50

    def test_exhaustive_oracle_guard(self, split4):
        family, _ = baire._worst_intersection(split4, (1, 2))
        if len(family) > 2:
            with pytest.raises(errors.SizeGuardExceeded):
                baire.is_ij_baire_exhaustive(split4, (1, 2), cap=2)


class TestCategory:
    def test_o_is_first_category(self, split4):
        v = baire.category(split4, (1, 2), sublocales.o_mask(split4.frame))
        assert v.kind == "first"
        assert baire.recheck_category(split4, v)

    def test_closed_of_dense_element_first_category(self, split4):
        f = split4.frame
        for i in (1, 2):
            j = bilocales.other(i)
            for a in split4.side_elems(i):
                if bilocales.is_i_dense_element(split4, j, a):
                    v = baire.category(split4, (i, j), f.up_mask(a))
                    assert v.kind == "first"

    def test_whole_second_category_when_baire(self, split4):
        # split4 is Baire both ways and both sides are nontrivial
        for orientation in ((1, 2), (2, 1)):
            assert baire.category(split4, orientation, split4.frame.universe_mask).kind == "second"

    def test_recheck_category(self, split4):
        f = split4.frame
        for m in sublocales.enumerate_sublocales(f).masks:
            v = baire.category(split4, (2, 1), m)
            assert baire.recheck_category(split4, v)


class TestMainEquivalence:
    def test_fixture_statuses(self, chain3, boolean4, split4):
        for b in (bl.symmetric_bilocale(chain3), bl.symmetric_bilocale(boolean4), split4):
            for orientation in ((1, 2), (2, 1)):
                rep = bl.theorem_main_equivalence(b, orientation, "fix")
                assert rep.status == reports.CONFIRMED
                assert all(rep.hypotheses.values())

    def test_statement4_matches_slow_supplement(self, chain4):
        # literal statement 4 recomputed with the lattice-join supplement
        b = bl.symmetric_bilocale(chain4)
        f = chain4
        i, j = 1, 2
        cover = baire.category_cover_mask(b, (j, i))
        slow = True
        for m in sublocales.enumerate_sublocales(f).masks:
            if m & ~cover:
                continue
            if not bl.is_i_dense(b, i, sublocales.supplement(f, m)):
                slow = False
                break
        rep = bl.theorem_main_equivalence(b, (i, j), "chain4")
        assert rep.witness["statements"]["first_category_supplement_dense"] == slow

    def test_guard_vacuous(self, split4):
        rep = bl.theorem_main_equivalence(split4, (1, 2), "guarded", guard=4)
        assert rep.status == reports.VACUOUS
        assert not rep.hypotheses["within_size_guard"]


def test_fip_confirmed(chain3, boolean4, split4):
    for b in (bl.symmetric_bilocale(chain3), split4):
        rep = baire.fip_check(b, "fip")
        assert rep.status == reports.CONFIRMED
        assert rep.note is not None


class TestSufficientConditions:
    def test_compact_prefit_nonvacuous_on_boolean(self, boolean4):
        b = bl.symmetric_bilocale(boolean4)
        rep = baire.compact_prefit_implies_baire(b, (1, 2), "b4")
        assert rep.status == reports.CONFIRMED
        assert rep.hypotheses["i_prefit"]

    def test_split_bispace_vacuous(self, split4):
        rep = baire.compact_prefit_implies_baire(split4, (1, 2), "split")
        assert rep.status == reports.VACUOUS  # not 1-prefit

    def test_baire_without_prefit_is_not_a_refutation(self, chain3):
        b = bl.symmetric_bilocale(chain3)
        rep = baire.compact_prefit_implies_baire(b, (1, 2), "c3")
        assert rep.status == reports.VACUOUS
        assert bl.is_ij_baire(b, (1, 2)).verdict  # converse direction not asserted

    def test_pseudocomplete_replay(self, boolean4, chain3):
        for f in (boolean4, chain3):
            b = bl.symmetric_bilocale(f)
            for orientation in ((1, 2), (2, 1)):
                rep = baire.pseudocomplete_implies_baire(b, orientation, "p")
                assert rep.status in (reports.CONFIRMED, reports.VACUOUS)

    def test_pi_base(self, split4):
        f = split4.frame
        nonzero = tuple(a for a in split4.side_elems(1) if a != f.bottom)
        assert baire.is_pi_base(split4, 1, nonzero)
        atoms = tuple(a for a in nonzero if all(
            not f.leq[b, a] or b in (a, f.bottom) for b in range(f.n)))
        assert baire.is_pi_base(split4, 1, atoms)
        assert not baire.is_pi_base(split4, 1, (f.bottom,))

    def test_pseudocomplete_modes_agree(self, boolean4, chain3):
        for f in (boolean4, chain3):
            b = bl.symmetric_bilocale(f)
            for i in (1, 2):
                canonical = baire.is_i_pseudocomplete(b, i)
                exhaustive = baire.is_i_pseudocomplete(b, i, mode="exhaustive")
                assert canonical == exhaustive == bilocales.is_i_prefit(b, i)


class TestDenseSubbilocales:
    def test_lemmas_on_booleanization(self, split4, chain3):
        for b in (split4, bl.symmetric_bilocale(chain3)):
            m = sublocales.booleanization(b.frame)
            rep = baire.dense_subbilocale_lemmas(b, m, "lem")
            assert rep.status == reports.CONFIRMED

    def test_lemmas_whole_carrier_trivial(self, split4):
        rep = baire.dense_subbilocale_lemmas(split4, split4.frame.universe_mask, "lem")
        assert rep.status == reports.CONFIRMED

    def test_non_dense_carrier_vacuous(self, chain3):
        b = bl.symmetric_bilocale(chain3)
        rep = baire.dense_subbilocale_lemmas(b, mask_of([1, 2]), "lem")
        assert rep.status == reports.VACUOUS


class TestHeredity:
    def test_fixture_suite_clean(self, chain3, boolean4, grid6, split4):
        for b in (
            bl.symmetric_bilocale(chain3),
            bl.symmetric_bilocale(boolean4),
            bl.symmetric_bilocale(grid6),
            split4,
        ):
            for rep in baire.heredity_suite(b, "fix"):
                assert rep.status in (reports.CONFIRMED, reports.VACUOUS), rep

    def test_random_suite_clean(self):
        rng = random.Random(5)
        for _ in range(20):
            b = generators.random_bilocale(rng, npoints=3)
            for rep in baire.heredity_suite(b, "rand"):
                assert rep.status in (reports.CONFIRMED, reports.VACUOUS), rep


class TestRelative:
    def test_full_subbilocale_coincides_with_plain(self, split4):
        sub = bl.subbilocale(split4, split4.frame.universe_mask)
        for orientation in ((1, 2), (2, 1)):
            assert (
                bl.is_relatively_ij_baire(split4, sub, orientation).verdict
                == bl.is_ij_baire(split4, orientation).verdict
            )

    def test_dense_coincidence(self):
        rng = random.Random(7)
        for _ in range(15):
            b = generators.random_bilocale(rng, npoints=3)
            f = b.frame
            for m in sublocales.dense_sublocales(f):
                sub = bl.subbilocale(b, m)
                for orientation in ((1, 2), (2, 1)):
                    rel = bl.is_relatively_ij_baire(b, sub, orientation).verdict
                    plain = bl.is_ij_baire(sub.bilocale, orientation).verdict
                    assert rel == plain

    def test_non_dense_separation_exists_and_revalidates(self):
        # the searcher finds sublocales where relative and plain disagree;
        # every such hit must replay from the definitions
        from bilocale_lab.search import search

        atlas = search("relative-not-plain-baire", 40, seed=11)
        assert atlas.separations, "expected at least one separating sublocale"
        entry = atlas.separations[0]
        bs = bl.bispace_from_json(entry["bispace"])
        b = bl.bilocale_of(bs)
        sub = bl.subbilocale(b, mask_of(entry["sublocale"]))
        orientation = tuple(entry["orientation"])
        assert bl.is_relatively_ij_baire(b, sub, orientation).verdict == entry["relatively_baire"]
        assert bl.is_ij_baire(sub.bilocale, orientation).verdict == entry["plain_baire"]

    def test_characterization_on_fixtures(self, split4, boolean4):
        for b in (split4, bl.symmetric_bilocale(boolean4)):
            f = b.frame
            for mask in (f.universe_mask, sublocales.booleanization(f)):
                sub = bl.subbilocale(b, mask)
                for orientation in ((1, 2), (2, 1)):
                    rep = baire.relative_characterization(b, sub, orientation, "rc")
                    assert rep.status in (reports.CONFIRMED, reports.VACUOUS)
                    if rep.status == reports.CONFIRMED:
                        assert len(set(rep.witness["statements"].values())) == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_main_equivalence_never_refuted(seed):
    b = generators.random_bilocale(random.Random(seed))
    for orientation in ((1, 2), (2, 1)):
        rep = bl.theorem_main_equivalence(b, orientation, f"seed{seed}")
        assert rep.status != reports.REFUTED
