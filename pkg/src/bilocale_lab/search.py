"""Atlas assembly: property matrices, the full replay suite, and seeded
searches for separating instances.

Every hit a search records is re-validated by rebuilding the instance
from its serialized form and recomputing the predicate from the
definitions; atlases are fully sorted so identical inputs, seed, and
guards give byte-identical output.
"""

from __future__ import annotations

import random

from . import baire, bilocales, bispaces, ideals, maps, sublocales, topobilocales
from .bilocales import Bilocale
from .bitsets import bits
from .errors import SizeGuardExceeded
from .generators import random_bispace, random_mixed_bilocale, random_topobilocale
from .limits import SUBSET_GUARD
from .reports import Atlas, REFUTED
from .version import __version__

DEEP_REPLAY_LIMIT = 10  # frame size above which lattice-heavy replays are skipped


def property_matrix(b: Bilocale) -> dict:
    """Element-level property verdicts (no sublocale enumeration)."""
    out = {
        "boolean": bilocales.is_boolean_bilocale(b),
        "regular": bilocales.is_regular_bilocale(b),
        "compact": bilocales.is_compact_bilocale(b),
        "symmetric": b.is_symmetric(),
        "prefit_literal": bilocales.is_prefit(b),
        "prefit_strict": bilocales.is_prefit(b, strict=True),
        "strongly_prefit": bilocales.is_strongly_prefit(b),
        "prefit_1": bilocales.is_i_prefit(b, 1),
        "prefit_2": bilocales.is_i_prefit(b, 2),
        "pseudocomplete_1": baire.is_i_pseudocomplete(b, 1),
        "pseudocomplete_2": baire.is_i_pseudocomplete(b, 2),
        "baire_12": baire.is_ij_baire(b, (1, 2)).verdict,
        "baire_21": baire.is_ij_baire(b, (2, 1)).verdict,
    }
    return out


def bilocale_replays(b: Bilocale, instance: str, guard: int = SUBSET_GUARD, deep: bool | None = None) -> list:
    """The full proposition suite for one bilocale. `deep` switches on the
    lattice-heavy replays (heredity, relative versions, density lemmas);
    by default they run when the frame is small enough."""
    if deep is None:
        deep = b.frame.n <= DEEP_REPLAY_LIMIT
    reports = []
    for orientation in ((1, 2), (2, 1)):
        reports.append(baire.theorem_main_equivalence(b, orientation, instance, guard))
        reports.append(baire.compact_prefit_implies_baire(b, orientation, instance))
        reports.append(baire.pseudocomplete_implies_baire(b, orientation, instance))
        reports.append(ideals.noetherian_transfer_check(b, orientation, instance, guard))
    reports.append(baire.fip_check(b, instance, guard))
    reports.append(ideals.ideal_density_transfer(b, instance, guard))
    if deep:
        f = b.frame
        bl = sublocales.booleanization(f)
        reports.append(baire.dense_subbilocale_lemmas(b, bl, instance, guard))
        reports.append(baire.dense_subbilocale_lemmas(b, f.universe_mask, instance, guard))
        reports.extend(baire.heredity_suite(b, instance, guard))
        for s_mask, tag in ((f.universe_mask, "whole"), (bl, "booleanization")):
            sub = bilocales.subbilocale(b, s_mask)
            for orientation in ((1, 2), (2, 1)):
                reports.append(
                    baire.relative_characterization(
                        b, sub, orientation, f"{instance}:{tag}", guard
                    )
                )
    return reports


def bispace_replays(bs, instance: str, guard: int = SUBSET_GUARD) -> list:
    reports = [bispaces.induced_density_lemma(bs, instance)]
    for orientation in ((1, 2), (2, 1)):
        reports.append(bispaces.equivalence_replay(bs, orientation, instance))
    reports.extend(bilocale_replays(bispaces.bilocale_of(bs), f"{instance}:bilocale", guard))
    return reports


def topobilocale_replays(t, instance: str) -> list:
    reports = [
        topobilocales.closure_interior_identities(t, instance),
        topobilocales.nwd_complement_crosscheck(t, instance),
    ]
    for orientation in ((1, 2), (2, 1)):
        reports.append(topobilocales.final_equivalence_replay(t, orientation, instance))
    return reports


def map_replays(m, instance: str) -> list:
    reports = []
    for orientation in ((1, 2), (2, 1)):
        reports.append(maps.baire_transfer_check(m, orientation, instance))
        reports.append(maps.compactification_transfer_check(m, orientation, instance))
        reports.append(maps.dense_map_adjoint_lemma(m, orientation, instance))
    return reports


def _quotient_maps(b: Bilocale, instance: str, guard: int) -> list:
    """Canonical dense/onto corpus maps: quotients onto the subbilocales of
    the booleanization and the whole carrier."""
    out = []
    f = b.frame
    if f.n > guard:
        return out
    for tag, mask in (("whole", f.universe_mask), ("booleanization", sublocales.booleanization(f))):
        out.append((f"{instance}:nu-{tag}", maps.nu_quotient_map(b, mask)))
    return out


def verify_theorems(
    entries,
    seed: int | None = None,
    random_bispaces: int = 0,
    random_bilocales: int = 0,
    random_topobilocales: int = 0,
    guard: int = SUBSET_GUARD,
) -> Atlas:
    """Run every applicable replay over the corpus entries plus seeded
    random instances. entries: iterable of (instance_id, kind, object)."""
    atlas = Atlas(
        meta={
            "seed": seed,
            "guard": guard,
            "version": __version__,
            "random_bispaces": random_bispaces,
            "random_bilocales": random_bilocales,
            "random_topobilocales": random_topobilocales,
        }
    )
    entries = list(entries)
    if seed is not None:
        rng = random.Random(seed)
        for k in range(random_bispaces):
            entries.append((f"seed{seed}-bispace-{k:04d}", "bispace", random_bispace(rng)))
        for k in range(random_bilocales):
            entries.append((f"seed{seed}-bilocale-{k:04d}", "bilocale", random_mixed_bilocale(rng)))
        for k in range(random_topobilocales):
            entries.append((f"seed{seed}-topobilocale-{k:04d}", "topobilocale", random_topobilocale(rng)))

    for instance_id, kind, obj in entries:
        if kind == "bispace":
            atlas.add_instance(instance_id, {"kind": kind, "points": len(obj.points)})
            atlas.extend(bispace_replays(obj, instance_id, guard))
            b = bispaces.bilocale_of(obj)
            atlas.add_matrix(instance_id, property_matrix(b))
            for map_id, m in _quotient_maps(b, instance_id, min(guard, DEEP_REPLAY_LIMIT)):
                atlas.extend(map_replays(m, map_id))
        elif kind == "bilocale":
            atlas.add_instance(instance_id, {"kind": kind, "n": obj.frame.n})
            atlas.extend(bilocale_replays(obj, instance_id, guard))
            atlas.add_matrix(instance_id, property_matrix(obj))
            for map_id, m in _quotient_maps(obj, instance_id, min(guard, DEEP_REPLAY_LIMIT)):
                atlas.extend(map_replays(m, map_id))
        elif kind == "topobilocale":
            atlas.add_instance(instance_id, {"kind": kind, "n": obj.frame.n})
            atlas.extend(topobilocale_replays(obj, instance_id))
        elif kind == "frame":
            atlas.add_instance(instance_id, {"kind": kind, "n": obj.n})
            b = bilocales.symmetric_bilocale(obj)
            atlas.extend(bilocale_replays(b, f"{instance_id}:symmetric", guard))
            atlas.add_matrix(instance_id, property_matrix(b))
        elif kind == "map":
            atlas.add_instance(
                instance_id,
                {"kind": kind, "source_n": obj.source.frame.n, "target_n": obj.target.frame.n},
            )
            atlas.extend(map_replays(obj, instance_id))
        else:
            raise ValueError(f"unknown corpus kind {kind!r}")
    return atlas


# ---- separating-instance search ------------------------------------------


def _matrix_predicate(name):
    simple = {
        "boolean-not-prefit": lambda p: p["boolean"] and not p["prefit_1"] and not p["prefit_2"],
        "strongly-prefit-not-boolean": lambda p: p["strongly_prefit"] and not p["boolean"],
        "baire-not-pseudocomplete": lambda p: p["baire_12"] and not p["pseudocomplete_1"],
        "boolean-not-baire": lambda p: p["boolean"] and not (p["baire_12"] and p["baire_21"]),
    }
    return simple.get(name)


SEARCH_TARGETS = (
    "boolean-not-prefit",
    "strongly-prefit-not-boolean",
    "baire-not-pseudocomplete",
    "boolean-not-baire",
    "relative-not-plain-baire",
    "main-theorem-refutation",
)


def search(target: str, budget: int, seed: int, guard: int = SUBSET_GUARD) -> Atlas:
    """Seeded hunt over random bispaces; hits are serialized, re-validated
    from their serialization, and recorded in the atlas. Exhausting the
    budget without a hit is a normal outcome."""
    if target not in SEARCH_TARGETS:
        raise ValueError(f"unknown target {target!r}; known: {', '.join(SEARCH_TARGETS)}")
    atlas = Atlas(meta={"seed": seed, "guard": guard, "version": __version__, "target": target, "budget": budget})
    rng = random.Random(seed)
    predicate = _matrix_predicate(target)

    for k in range(budget):
        instance_id = f"seed{seed}-search-{k:04d}"
        bs = random_bispace(rng)
        b = bispaces.bilocale_of(bs)
        props = property_matrix(b)
        atlas.add_matrix(instance_id, props)

        if predicate is not None:
            if predicate(props):
                payload = bispaces.bispace_to_json(bs)
                fresh = property_matrix(bispaces.bilocale_of(bispaces.bispace_from_json(payload)))
                assert predicate(fresh), "separation hit failed re-validation"
                atlas.add_separation({"instance": instance_id, "target": target, "bispace": payload})
        elif target == "main-theorem-refutation":
            for orientation in ((1, 2), (2, 1)):
                try:
                    rep = baire.theorem_main_equivalence(b, orientation, instance_id, guard)
                except SizeGuardExceeded:
                    continue
                atlas.add_report(rep)
                if rep.status == REFUTED:
                    atlas.add_separation(
                        {"instance": instance_id, "target": target, "bispace": bispaces.bispace_to_json(bs)}
                    )
        elif target == "relative-not-plain-baire":
            f = b.frame
            if f.n > DEEP_REPLAY_LIMIT:
                continue
            for s_mask in sublocales.enumerate_sublocales(f, guard).masks:
                if sublocales.is_dense_sublocale(f, s_mask):
                    continue  # dense ones provably coincide; hunt elsewhere
                sub = bilocales.subbilocale(b, s_mask)
                for orientation in ((1, 2), (2, 1)):
                    rel = baire.is_relatively_ij_baire(b, sub, orientation).verdict
                    plain = baire.is_ij_baire(sub.bilocale, orientation).verdict
                    if rel != plain:
                        atlas.add_separation(
                            {
                                "instance": instance_id,
                                "target": target,
                                "orientation": list(orientation),
                                "sublocale": list(bits(s_mask)),
                                "relatively_baire": rel,
                                "plain_baire": plain,
                                "bispace": bispaces.bispace_to_json(bs),
                            }
                        )
    return atlas
