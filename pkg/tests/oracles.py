"""Brute-force oracles kept independent of the package's mask kernels.

Everything here works on python sets of element indices and scans whole
powersets with itertools; only the validated meet/join/imp tables of a
frame are consumed.
"""

from itertools import chain, combinations


def powerset(iterable):
    items = list(iterable)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def sublocale_sets(f):
    """Every sublocale of the frame as a frozenset, by literal subset scan."""
    out = []
    carrier = range(f.n)
    for subset in powerset(carrier):
        s = frozenset(subset)
        if f.top not in s:
            continue
        if any(int(f.meet[a, b]) not in s for a in s for b in s):
            continue
        if any(int(f.imp[x, a]) not in s for x in carrier for a in s):
            continue
        out.append(s)
    return out


def gdelta_family_sets(f, generators):
    """All realizable intersections of the generators' open sublocales,
    by scanning every generator subset."""
    opens = {x: frozenset(int(f.imp[x, y]) for y in range(f.n)) for x in generators}
    out = set()
    for subset in powerset(list(generators)):
        inter = frozenset(range(f.n))
        for x in subset:
            inter &= opens[x]
        if subset:
            out.add(inter)
    return out


def distributivity_holds(f):
    return all(
        int(f.meet[a, f.join[b, c]]) == int(f.join[f.meet[a, b], f.meet[a, c]])
        for a in range(f.n)
        for b in range(f.n)
        for c in range(f.n)
    )
