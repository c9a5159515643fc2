"""
Exact vertex enumeration for the normal surface solution cone.

The default strategy runs the double description method over the whole
cone, discarding rays that break the one-quad-type-per-tetrahedron
constraint as it goes.  This is lossless: a combined ray is a strictly
positive combination of its two parents, so the parents' supports are
contained in the child's and every violating parent can only produce
violating children.  A final exact rank test keeps precisely the extreme
rays of the cone, which is what the brute-force oracle checks against.

An alternative strategy enumerates one quad-type selection per
tetrahedron at a time and merges the branches; it exists as a
cross-check and gives the same answer.
"""

from itertools import product
from math import gcd

from .config import DEFAULT_CAPS, ResourceCapError
from .homology import rank_exact
from .surfaces import (NormalSurface, cached_systems, quad_constraint_ok,
                       quad_index)


def _primitive(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
    return tuple(x // g for x in vec) if g > 1 else tuple(vec)


def _zero_mask(vec):
    m = 0
    for i, x in enumerate(vec):
        if not x:
            m |= 1 << i
    return m


def _dd(rows, ncols, admissible, max_rays):
    """Double description over the nonnegative orthant cut by equations.

    rows: integer equation rows; admissible: predicate on coordinate
    vectors deciding whether a ray may be kept.  Returns primitive integer
    rays."""
    rays = []
    for i in range(ncols):
        unit = [0] * ncols
        unit[i] = 1
        if admissible(unit):
            rays.append(tuple(unit))
    ordered = sorted(rows, key=lambda r: sum(1 for x in r if x))
    for row in ordered:
        if not any(row):
            continue
        plus, minus, zero = [], [], []
        for r in rays:
            d = sum(a * x for a, x in zip(row, r))
            if d > 0:
                plus.append((r, d))
            elif d < 0:
                minus.append((r, d))
            else:
                zero.append(r)
        new_rays = list(zero)
        if plus and minus:
            masks = {r: _zero_mask(r) for r in rays}
            seen = set(zero)
            for rp, dp in plus:
                mp = masks[rp]
                for rn, dn in minus:
                    common = mp & masks[rn]
                    # combinatorial adjacency: no third ray vanishes on
                    # the common zero set of the two parents
                    adjacent = True
                    for other in rays:
                        if other is rp or other is rn:
                            continue
                        if masks[other] & common == common:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    comb = _primitive([dp * b - dn * a
                                       for a, b in zip(rp, rn)])
                    if comb in seen:
                        continue
                    if not admissible(comb):
                        continue
                    seen.add(comb)
                    new_rays.append(comb)
                    if len(new_rays) > max_rays:
                        raise ResourceCapError(
                            "double description exceeded %d rays" % max_rays)
        rays = new_rays
    return rays


def _is_extreme(rows, ncols, vec):
    """Extreme-ray test in the full cone: the equations restricted to the
    support must have nullity one."""
    support = [i for i in range(ncols) if vec[i]]
    sub = [[row[i] for i in support] for row in rows if any(row[i] for i in support)]
    if not sub:
        return len(support) == 1
    return len(support) - rank_exact(sub) == 1


def enumerate_vertex_surfaces(pair, max_graph_points=None, caps=None,
                              require_closed=True, strategy="filter"):
    """All primitive vertex solutions satisfying the quad constraint,
    optionally filtered by their number of intersections with the graph.

    Surfaces are returned sorted by coordinate vector."""
    caps = caps or DEFAULT_CAPS
    if pair.t > caps.max_tets:
        raise ResourceCapError(
            "triangulation has %d tetrahedra, cap is %d" % (pair.t, caps.max_tets))
    match_rows, closure_rows = cached_systems(pair)
    rows = list(match_rows) + (list(closure_rows) if require_closed else [])
    ncols = 7 * pair.t
    t = pair.t

    if strategy == "filter":
        admissible = lambda v: quad_constraint_ok(v, t)
        rays = _dd(rows, ncols, admissible, caps.max_rays)
    elif strategy == "branch":
        collected = set()
        for selection in product(range(3), repeat=t):
            banned = set()
            for T, q in enumerate(selection):
                for other in range(3):
                    if other != q:
                        banned.add(quad_index(T, other))
            admissible = lambda v: not any(v[i] for i in banned)
            for r in _dd(rows, ncols, admissible, caps.max_rays):
                collected.add(r)
        rays = sorted(collected)
    else:
        raise ValueError("unknown strategy %r" % strategy)

    out = []
    seen = set()
    for r in rays:
        r = _primitive(r)
        if r in seen:
            continue
        seen.add(r)
        if not _is_extreme(rows, ncols, r):
            continue
        surf = NormalSurface(pair, r, require_closed=require_closed)
        if max_graph_points is not None and surf.graph_points() > max_graph_points:
            continue
        out.append(surf)
        if len(out) > caps.max_surfaces:
            raise ResourceCapError("more than %d vertex surfaces" % caps.max_surfaces)
    out.sort(key=lambda s: s.coords)
    return out


def _local_patterns(bound):
    """All single-tetrahedron coordinate blocks with entries <= bound and
    at most one nonzero quad type."""
    out = []
    for tris in product(range(bound + 1), repeat=4):
        out.append(tris + (0, 0, 0))
        for q in range(3):
            for val in range(1, bound + 1):
                quads = [0, 0, 0]
                quads[q] = val
                out.append(tris + tuple(quads))
    return out


def brute_force_vertex_surfaces(pair, bound, caps=None, require_closed=True):
    """Independent oracle: exhaustive search over all coordinate vectors
    with entries <= bound, filtered to primitive extreme rays.

    Faces between already-placed tetrahedra prune the search tree, so the
    traversal remains exhaustive over the bounded box."""
    caps = caps or DEFAULT_CAPS
    match_rows, closure_rows = cached_systems(pair)
    rows = list(match_rows) + (list(closure_rows) if require_closed else [])
    ncols = 7 * pair.t
    patterns = _local_patterns(bound)
    budget = [caps.max_oracle_nodes]

    # rows become checkable once every tetrahedron they mention is placed
    checkable_at = [[] for _ in range(pair.t)]
    for row in rows:
        hi = max(i for i, a in enumerate(row) if a)
        checkable_at[hi // 7].append(row)

    results = set()

    def rec(T, coords):
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceCapError("oracle node budget exhausted")
        if T == pair.t:
            vec = tuple(coords)
            if not any(vec):
                return
            if _primitive(vec) != vec:
                return
            if _is_extreme(rows, ncols, vec):
                results.add(vec)
            return
        for pat in patterns:
            cand = coords + list(pat)
            if all(sum(a * x for a, x in zip(row, cand)) == 0
                   for row in checkable_at[T]):
                rec(T + 1, cand)

    rec(0, [])
    surfaces = [NormalSurface(pair, r, require_closed=require_closed)
                for r in sorted(results)]
    return surfaces
