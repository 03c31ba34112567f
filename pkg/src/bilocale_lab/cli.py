"""Batch front door: validate inputs, run property checks, replay the
proposition suite over a corpus, and hunt for separating instances.

Exit codes: 0 ok, 2 invalid input, 3 size guard exceeded, 4 a replay
reported a refutation.

JSON schemas (one object per file):
  frame         {"elements": [names], "leq": [[i, j], ...]}
  bilocale      {"frame": <frame>, "first": [indices], "second": [indices]}
  bispace       {"points": [names], "tau1": [[name, ...], ...], "tau2": [...]}
  topobilocale  {"frame": <frame>, "tau1": [indices], "tau2": [indices]}
  map           {"source": <bilocale>, "target": <bilocale>, "mapping": [indices]}
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import baire, bilocales, bispaces, search as search_mod, topobilocales
from .errors import BilocaleLabError, SizeGuardExceeded
from .frames import frame_from_json
from .limits import SUBSET_GUARD
from .maps import map_from_json

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_GUARD = 3
EXIT_REFUTED = 4

INPUT_KINDS = ("frame", "bilocale", "bispace", "topobilocale", "map")

_LOADERS = {
    "frame": frame_from_json,
    "bilocale": bilocales.bilocale_from_json,
    "bispace": bispaces.bispace_from_json,
    "topobilocale": topobilocales.topobilocale_from_json,
    "map": map_from_json,
}


def _classify(obj: dict) -> str:
    if "points" in obj:
        return "bispace"
    if "mapping" in obj:
        return "map"
    if "tau1" in obj:
        return "topobilocale"
    if "first" in obj:
        return "bilocale"
    if "elements" in obj:
        return "frame"
    raise BilocaleLabError("unrecognized JSON schema")


def _load(path: str, kind: str):
    with open(path) as fh:
        obj = json.load(fh)
    return _LOADERS[kind](obj)


def _parse_orientation(text: str) -> tuple:
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError as exc:
        raise BilocaleLabError(f"bad orientation {text!r}, expected i,j") from exc
    return bilocales.check_orientation((i, j))


def _emit(payload: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for key, value in sorted(payload.items()):
            print(f"{key}: {value}")


def cmd_validate(args) -> int:
    results = []
    ok = True
    for kind in INPUT_KINDS:
        for path in getattr(args, kind.replace("-", "_")) or ():
            entry = {"path": path, "kind": kind}
            try:
                _load(path, kind)
                entry["valid"] = True
            except (BilocaleLabError, OSError, json.JSONDecodeError, KeyError) as exc:
                entry["valid"] = False
                entry["error"] = f"{type(exc).__name__}: {exc}"
                ok = False
            results.append(entry)
    if args.format == "json":
        print(json.dumps({"results": results}, sort_keys=True, indent=2))
    else:
        for entry in results:
            status = "ok" if entry["valid"] else f"INVALID ({entry['error']})"
            print(f"{entry['path']}: {status}")
    return EXIT_OK if ok else EXIT_INVALID


def _check_bilocale(b, prop, orientation, guard):
    i, j = orientation
    if prop == "baire":
        v = baire.is_ij_baire(b, orientation)
        return v.verdict, v.to_dict()
    if prop == "boolean":
        return bilocales.is_boolean_bilocale(b), None
    if prop == "prefit":
        return bilocales.is_prefit(b), None
    if prop == "strict-prefit":
        return bilocales.is_prefit(b, strict=True), None
    if prop == "strongly-prefit":
        return bilocales.is_strongly_prefit(b), None
    if prop == "i-prefit":
        return bilocales.is_i_prefit(b, i), {"side": i}
    if prop == "regular":
        return bilocales.is_regular_bilocale(b), None
    if prop == "compact":
        return bilocales.is_compact_bilocale(b), {"note": bilocales.COMPACT_NOTE}
    if prop == "pseudocomplete":
        return baire.is_i_pseudocomplete(b, i), {"side": i}
    if prop == "submaximal":
        return bilocales.is_ij_submaximal(b, orientation, guard), None
    if prop == "equivalence":
        rep = baire.theorem_main_equivalence(b, orientation, "cli", guard)
        return rep.conclusion, rep.to_dict()
    raise BilocaleLabError(f"property {prop!r} is not defined for bilocales")


def cmd_check(args) -> int:
    orientation = _parse_orientation(args.orientation)
    prop = args.property
    payload = {"property": prop, "orientation": list(orientation)}

    if args.bispace:
        bs = _load(args.bispace, "bispace")
        payload["instance"] = Path(args.bispace).stem
        if prop == "almost-baire":
            v = bispaces.is_almost_ij_baire(bs, orientation)
            verdict, extra = v.verdict, {"witness_open": v.witness_open}
        elif prop == "td":
            verdict, extra = bispaces.is_td(bs), None
        elif prop == "equivalence":
            rep = bispaces.equivalence_replay(bs, orientation, payload["instance"])
            verdict, extra = rep.conclusion, rep.to_dict()
        else:
            verdict, extra = _check_bilocale(bispaces.bilocale_of(bs), prop, orientation, args.guard)
    elif args.bilocale:
        b = _load(args.bilocale, "bilocale")
        payload["instance"] = Path(args.bilocale).stem
        verdict, extra = _check_bilocale(b, prop, orientation, args.guard)
    elif args.topobilocale:
        t = _load(args.topobilocale, "topobilocale")
        payload["instance"] = Path(args.topobilocale).stem
        if prop == "tau-baire":
            v = topobilocales.is_tau_ij_baire(t, orientation)
            verdict, extra = v.verdict, {"witness": v.witness}
        elif prop == "identities":
            rep = topobilocales.closure_interior_identities(t, payload["instance"])
            verdict, extra = rep.conclusion, rep.to_dict()
        elif prop == "tau-equivalence":
            rep = topobilocales.final_equivalence_replay(t, orientation, payload["instance"])
            verdict, extra = rep.conclusion, rep.to_dict()
        else:
            raise BilocaleLabError(f"property {prop!r} is not defined for topobilocales")
    elif args.frame:
        f = _load(args.frame, "frame")
        payload["instance"] = Path(args.frame).stem
        if prop == "regular":
            verdict, extra = f.is_regular(), None
        else:
            raise BilocaleLabError(f"property {prop!r} is not defined for frames")
    else:
        raise BilocaleLabError("check needs one of --frame/--bilocale/--bispace/--topobilocale")

    payload["verdict"] = bool(verdict) if verdict is not None else None
    if extra:
        payload["witness"] = extra
    _emit(payload, args.format)
    return EXIT_OK


def _corpus_entries(corpus_dir: str):
    entries = []
    root = Path(corpus_dir)
    for path in sorted(root.rglob("*.json")):
        with open(path) as fh:
            obj = json.load(fh)
        kind = _classify(obj)
        entries.append((path.stem, kind, _LOADERS[kind](obj)))
    return entries


def cmd_verify_theorems(args) -> int:
    entries = _corpus_entries(args.corpus) if args.corpus else []
    wants_random = args.random_bispaces or args.random_bilocales or args.random_topobilocales
    if wants_random and args.seed is None:
        raise BilocaleLabError("random corpus instances need --seed")
    atlas = search_mod.verify_theorems(
        entries,
        seed=args.seed,
        random_bispaces=args.random_bispaces,
        random_bilocales=args.random_bilocales,
        random_topobilocales=args.random_topobilocales,
        guard=args.guard,
    )
    text = atlas.to_json()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    refuted = atlas.refuted
    if refuted:
        for rep in refuted:
            print(f"REFUTED: {rep.proposition} on {rep.instance}", file=sys.stderr)
        return EXIT_REFUTED
    return EXIT_OK


def cmd_search(args) -> int:
    seed = args.seed if args.seed is not None else 0
    atlas = search_mod.search(args.target, args.budget, seed, args.guard)
    text = atlas.to_json()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bilocale-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--guard", type=int, default=SUBSET_GUARD, help="powerset-scan size guard")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("validate", help="validate input files")
    for kind in INPUT_KINDS:
        p.add_argument(f"--{kind}", action="append")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", help="evaluate one property on one instance")
    for kind in INPUT_KINDS[:-1]:
        p.add_argument(f"--{kind}")
    p.add_argument("--property", required=True)
    p.add_argument("--orientation", default="1,2")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify-theorems", help="replay the proposition suite over a corpus")
    p.add_argument("--corpus", help="directory of instance JSON files")
    p.add_argument("--random-bispaces", type=int, default=0)
    p.add_argument("--random-bilocales", type=int, default=0)
    p.add_argument("--random-topobilocales", type=int, default=0)
    p.add_argument("--out", help="write the atlas here instead of stdout")
    add_common(p)
    p.set_defaults(func=cmd_verify_theorems)

    p = sub.add_parser("search", help="hunt for separating instances")
    p.add_argument("--target", required=True, choices=search_mod.SEARCH_TARGETS)
    p.add_argument("--budget", type=int, default=100)
    p.add_argument("--out")
    add_common(p)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardExceeded as exc:
        print(f"size guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (BilocaleLabError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"invalid input: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
