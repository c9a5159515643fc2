"""
Deterministic simplification of triangulated pairs.

Greedy descent applies 4-1, 2-0 and 3-2 moves until none reduces the
size, escaping shallow local minima by single 2-3 insertions followed by
further descent.  Small triangulations then get a canonical polish: a
bounded breadth-first search over the move graph that returns the
lexicographically least signature among the smallest reachable forms, so
homeomorphic inputs tend to simplify to identical triangulations.
"""

from .config import DEFAULT_CAPS
from .moves import four_one, three_two, two_three, two_zero_edge
from .signature import iso_signature

POLISH_MAX_T = 8
POLISH_BAND = 2
ESCAPE_ROUNDS = 24


def _descend_once(pair):
    sk = pair.skeleton
    for vclass in sk.vertex_classes:
        if len(sk.vertex_slots[vclass]) == 4:
            q = four_one(pair, vclass)
            if q is not None:
                return q
    for rep in sk.edge_classes:
        if len(sk.edge_slots[rep]) == 2:
            q = two_zero_edge(pair, rep)
            if q is not None:
                return q
    for rep in sk.edge_classes:
        if len(sk.edge_slots[rep]) == 3:
            q = three_two(pair, rep)
            if q is not None:
                return q
    return None


def _descend(pair, budget):
    while budget[0] > 0:
        q = _descend_once(pair)
        if q is None:
            return pair
        budget[0] -= 1
        pair = q
    return pair


def _interior_faces(pair):
    out = []
    for T in range(pair.t):
        for f in range(4):
            g = pair.gluings[4 * T + f]
            if g is not None and 4 * T + f < 4 * g[0] + g[1]:
                out.append((T, f))
    return out


def _greedy(pair, budget):
    pair = _descend(pair, budget)
    for _ in range(ESCAPE_ROUNDS):
        improved = False
        for T, f in _interior_faces(pair):
            if budget[0] <= 0:
                return pair
            q = two_three(pair, T, f)
            if q is None:
                continue
            budget[0] -= 1
            q = _descend(q, budget)
            if q.t < pair.t:
                pair = q
                improved = True
                break
        if not improved:
            break
    return pair


def _neighbors(pair, allow_up):
    sk = pair.skeleton
    for vclass in sk.vertex_classes:
        if len(sk.vertex_slots[vclass]) == 4:
            q = four_one(pair, vclass)
            if q is not None:
                yield q
    for rep in sk.edge_classes:
        n = len(sk.edge_slots[rep])
        if n == 2:
            q = two_zero_edge(pair, rep)
            if q is not None:
                yield q
        elif n == 3:
            q = three_two(pair, rep)
            if q is not None:
                yield q
    if allow_up:
        for T, f in _interior_faces(pair):
            q = two_three(pair, T, f)
            if q is not None:
                yield q


def _band_search(pair, caps):
    """Breadth-first search in the band [t, t + BAND].  Returns either
    ('smaller', q) for the first strictly smaller form found, or
    ('best', p) for the least-signature form of the current size."""
    tmin = pair.t
    best = (iso_signature(pair), pair)
    visited = {best[0]}
    queue = [pair]
    states = 0
    while queue and states < caps.max_simplify_states:
        cur = queue.pop(0)
        states += 1
        for q in _neighbors(cur, allow_up=cur.t < tmin + POLISH_BAND):
            sig = iso_signature(q)
            if sig in visited:
                continue
            visited.add(sig)
            if q.t < tmin:
                return ("smaller", q)
            if q.t == tmin and sig < best[0]:
                best = (sig, q)
            if q.t <= tmin + POLISH_BAND:
                queue.append(q)
    return ("best", best[1])


def simplify(pair, caps=None):
    """Shrink a pair without changing its homeomorphism type, marked
    graph, colors, or stars.  Deterministic."""
    caps = caps or DEFAULT_CAPS
    budget = [caps.max_moves]
    pair = _greedy(pair, budget)
    while pair.t <= POLISH_MAX_T:
        kind, result = _band_search(pair, caps)
        if kind == "smaller":
            pair = _greedy(result, budget)
        else:
            return result
    return pair
