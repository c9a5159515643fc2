"""
Local rewriting moves on triangulated pairs: the bistellar 2-3, 3-2, 1-4
and 4-1 moves plus the degree-two edge collapse.  Every move preserves
the homeomorphism type of the pair, the marked graph as a subcomplex,
colors, and star vertices; a move that cannot do so returns None.
"""

from .pair import InputError, Pair
from .perms import EDGE_INDEX, EDGE_VERTICES, FACE_VERTICES, compose, invert


def _renumber(pair, deleted, new_tets, glu_extra, edge_table, vertex_table):
    """Assemble the new Pair after removing the tetrahedra in `deleted`.

    glu_extra: slot -> gluing entry in the new numbering, for every slot
    that changes; gluings between surviving tetrahedra are copied.  The
    tables transport marks and stars whose classes lose all surviving
    slots.  Returns None if a mark or star cannot be transported or the
    result is not a valid pair.
    """
    survivors = [T for T in range(pair.t) if T not in deleted]
    remap = {T: i for i, T in enumerate(survivors)}
    nt = len(survivors) + new_tets
    glu = [None] * (4 * nt)
    for T in survivors:
        for f in range(4):
            g = pair.gluings[4 * T + f]
            if g is None or g[0] in deleted:
                continue
            glu[4 * remap[T] + f] = (remap[g[0]], g[1], g[2])
    for slot, entry in glu_extra.items():
        glu[slot] = entry

    sk = pair.skeleton
    marks = []
    for rep, color in pair.marks.items():
        new_slot = None
        for s in sk.edge_slots[rep]:
            T, e = divmod(s, 6)
            if T not in deleted:
                new_slot = (remap[T], e)
                break
        if new_slot is None:
            for s in sk.edge_slots[rep]:
                hit = edge_table.get((s // 6, s % 6))
                if hit is not None:
                    new_slot = hit
                    break
        if new_slot is None:
            return None
        marks.append((new_slot[0], new_slot[1], color))
    stars = []
    for rep, flag in pair.stars.items():
        new_slot = None
        for s in sk.vertex_slots[rep]:
            T, v = divmod(s, 4)
            if T not in deleted:
                new_slot = (remap[T], v)
                break
        if new_slot is None:
            for s in sk.vertex_slots[rep]:
                hit = vertex_table.get((s // 4, s % 4))
                if hit is not None:
                    new_slot = hit
                    break
        if new_slot is None:
            return None
        stars.append((new_slot[0], new_slot[1], flag))
    try:
        return Pair(nt, glu, marks, stars)
    except InputError:
        return None


def _wire_outer(pair, outer, deleted, glu_extra):
    """Connect the outer faces of a rewritten region to the rest of the
    triangulation.  outer maps each old boundary slot of the region to
    (new tet, new face, psi) with psi a total map new labels -> old
    labels."""
    survivors = [T for T in range(pair.t) if T not in deleted]
    remap = {T: i for i, T in enumerate(survivors)}
    for old_slot, (nT, nf, psi) in outer.items():
        g = pair.gluings[old_slot]
        if g is None:
            continue
        S, fS, rho = g
        other = outer.get(4 * S + fS)
        if other is not None:
            mT, mf, psi2 = other
            inv_psi2 = {ov: nl for nl, ov in psi2.items()}
            perm = tuple(inv_psi2[rho[psi[k]]] for k in range(4))
            glu_extra[4 * nT + nf] = (mT, mf, perm)
        else:
            perm = tuple(rho[psi[k]] for k in range(4))
            glu_extra[4 * nT + nf] = (remap[S], fS, perm)
            glu_extra[4 * remap[S] + fS] = (nT, nf, invert(perm))


def two_three(pair, T0, f0):
    """Split the interior face (T0, f0) into three tetrahedra around a
    new edge joining the two opposite vertices."""
    g = pair.gluings[4 * T0 + f0]
    if g is None:
        return None
    T1, f1, sigma = g
    if T1 == T0:
        return None
    x, y, z = FACE_VERTICES[f0]
    base = pair.t - 2
    n = (base, base + 1, base + 2)
    # Ni spans (a0, a1, u, v) labelled (0, 1, 2, 3) for the cyclic pairs
    cyc = ((x, y), (y, z), (z, x))
    glu_extra = {}
    for i in range(3):
        j = (i + 1) % 3
        glu_extra[4 * n[i] + 2] = (n[j], 3, (0, 1, 3, 2))
        glu_extra[4 * n[j] + 3] = (n[i], 2, (0, 1, 3, 2))

    outer = {}
    for i, (u, v) in enumerate(cyc):
        w = ({x, y, z} - {u, v}).pop()
        outer[4 * T0 + w] = (n[i], 1, {0: f0, 1: w, 2: u, 3: v})
        outer[4 * T1 + sigma[w]] = (n[i], 0,
                                    {0: sigma[w], 1: f1,
                                     2: sigma[u], 3: sigma[v]})
    _wire_outer(pair, outer, {T0, T1}, glu_extra)

    vertex_table = {
        (T0, f0): (n[0], 0), (T1, f1): (n[0], 1),
        (T0, x): (n[0], 2), (T0, y): (n[0], 3), (T0, z): (n[1], 3),
        (T1, sigma[x]): (n[0], 2), (T1, sigma[y]): (n[0], 3),
        (T1, sigma[z]): (n[1], 3),
    }
    edge_table = {}
    for i, (u, v) in enumerate(cyc):
        edge_table[(T0, EDGE_INDEX[(u, v)])] = (n[i], EDGE_INDEX[(2, 3)])
        edge_table[(T1, EDGE_INDEX[(sigma[u], sigma[v])])] = (n[i], EDGE_INDEX[(2, 3)])
    for i, u in enumerate((x, y, z)):
        host = n[0] if u in (x, y) else n[1]
        lab = 2 if u == x else 3
        edge_table[(T0, EDGE_INDEX[(f0, u)])] = (host, EDGE_INDEX[(0, lab)])
        edge_table[(T1, EDGE_INDEX[(f1, sigma[u])])] = (host, EDGE_INDEX[(1, lab)])

    return _renumber(pair, {T0, T1}, 3, glu_extra, edge_table, vertex_table)


def _edge_ring(pair, rep):
    """Walk around an interior edge class.  Returns the cyclic list of
    entries (tet, u0, u1, prev_vertex, next_vertex), or None if the edge
    touches the boundary or the walk cannot close up."""
    T, e = divmod(rep, 6)
    u0, u1 = EDGE_VERTICES[e]
    p, q = (v for v in range(4) if v not in (u0, u1))
    entries = []
    cur = (T, u0, u1, p, q)
    while True:
        entries.append(cur)
        T_, u0_, u1_, p_, q_ = cur
        g = pair.gluings[4 * T_ + p_]  # face opposite prev: u0, u1, next
        if g is None:
            return None
        T2, _, sigma = g
        nu0, nu1, nprev = sigma[u0_], sigma[u1_], sigma[q_]
        nnext = ({0, 1, 2, 3} - {nu0, nu1, nprev}).pop()
        cur = (T2, nu0, nu1, nprev, nnext)
        if cur[:4] == (T, u0, u1, p):
            break
        if len(entries) > 6 * pair.t:
            return None
    return entries


def three_two(pair, rep):
    """Replace the three tetrahedra around an interior degree-3 edge by
    two tetrahedra sharing the equatorial face."""
    if rep in pair.marks:
        return None
    if len(pair.skeleton.edge_slots[rep]) != 3:
        return None
    ring = _edge_ring(pair, rep)
    if ring is None or len(ring) != 3:
        return None
    tets = [r[0] for r in ring]
    if len(set(tets)) != 3:
        return None

    base = pair.t - 3
    m0, m1 = base, base + 1
    # M0 = (u0, w0, w1, w2), M1 = (u1, w0, w1, w2); w_i is the vertex that
    # ring tets i and i+1 share besides the edge
    glu_extra = {4 * m0: (m1, 0, (0, 1, 2, 3)),
                 4 * m1: (m0, 0, (0, 1, 2, 3))}
    outer = {}
    for i in range(3):
        T_, u0_, u1_, wprev, wnext = ring[i]
        lp, ln = 1 + ((i - 1) % 3), 1 + i
        missing = ({1, 2, 3} - {lp, ln}).pop()
        outer[4 * T_ + u1_] = (m0, missing,
                               {0: u0_, lp: wprev, ln: wnext, missing: u1_})
        outer[4 * T_ + u0_] = (m1, missing,
                               {0: u1_, lp: wprev, ln: wnext, missing: u0_})
    _wire_outer(pair, outer, set(tets), glu_extra)

    edge_table = {}
    vertex_table = {}
    for i in range(3):
        T_, u0_, u1_, wprev, wnext = ring[i]
        lp, ln = 1 + ((i - 1) % 3), 1 + i
        vertex_table[(T_, u0_)] = (m0, 0)
        vertex_table[(T_, u1_)] = (m1, 0)
        vertex_table[(T_, wprev)] = (m0, lp)
        vertex_table[(T_, wnext)] = (m0, ln)
        edge_table[(T_, EDGE_INDEX[(u0_, wprev)])] = (m0, EDGE_INDEX[(0, lp)])
        edge_table[(T_, EDGE_INDEX[(u0_, wnext)])] = (m0, EDGE_INDEX[(0, ln)])
        edge_table[(T_, EDGE_INDEX[(u1_, wprev)])] = (m1, EDGE_INDEX[(0, lp)])
        edge_table[(T_, EDGE_INDEX[(u1_, wnext)])] = (m1, EDGE_INDEX[(0, ln)])
        edge_table[(T_, EDGE_INDEX[(wprev, wnext)])] = (m0, EDGE_INDEX[(lp, ln)])

    return _renumber(pair, set(tets), 2, glu_extra, edge_table, vertex_table)


def one_four(pair, T):
    """Cone tetrahedron T from an interior point, producing four
    tetrahedra.  N_i replaces the cone over face i, with the new vertex
    at label i."""
    base = pair.t - 1
    glu_extra = {}
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            perm = list(range(4))
            perm[i], perm[j] = j, i
            glu_extra[4 * (base + i) + j] = (base + j, i, tuple(perm))
    outer = {4 * T + i: (base + i, i, {k: k for k in range(4)})
             for i in range(4)}
    _wire_outer(pair, outer, {T}, glu_extra)

    vertex_table = {}
    edge_table = {}
    for v in range(4):
        i = next(k for k in range(4) if k != v)
        vertex_table[(T, v)] = (base + i, v)
    for e in range(6):
        a, b = EDGE_VERTICES[e]
        i = next(k for k in range(4) if k not in (a, b))
        edge_table[(T, e)] = (base + i, e)
    return _renumber(pair, {T}, 4, glu_extra, edge_table, vertex_table)


def four_one(pair, vclass):
    """Remove an interior degree-4 vertex, merging its star into a single
    tetrahedron."""
    sk = pair.skeleton
    slots = sk.vertex_slots[vclass]
    if len(slots) != 4:
        return None
    if vclass in sk.boundary_vertex_classes or vclass in pair.stars:
        return None
    tets = sorted(s // 4 for s in slots)
    if len(set(tets)) != 4:
        return None
    wloc = {s // 4: s % 4 for s in slots}

    for T in tets:
        for v in range(4):
            if v != wloc[T] and \
                    sk.edge_class_of[6 * T + EDGE_INDEX[(wloc[T], v)]] in pair.marks:
                return None

    # phi: star-tet labels -> labels of the replacement tetrahedron
    A = tets[0]
    phi = {A: {v: v for v in range(4) if v != wloc[A]}}
    queue = [A]
    while queue:
        P = queue.pop()
        for f in range(4):
            if f == wloc[P]:
                continue
            g = pair.gluings[4 * P + f]
            if g is None:
                return None
            S, fS, rho = g
            if S not in wloc or rho[wloc[P]] != wloc[S]:
                return None
            if S in phi:
                continue
            m = {}
            for v in range(4):
                if v not in (wloc[P], f):
                    m[rho[v]] = phi[P][v]
            free = {0, 1, 2, 3} - set(phi[P].values())
            if len(free) != 1:
                return None
            m[fS] = free.pop()  # S's vertex opposite the shared face
            if wloc[S] in m or len(m) != 3:
                return None
            phi[S] = m
            queue.append(S)
    if len(phi) != 4:
        return None
    for P in tets:
        for f in range(4):
            if f == wloc[P]:
                continue
            S, fS, rho = pair.gluings[4 * P + f]
            for v in range(4):
                if v not in (wloc[P], f) and phi[S].get(rho[v]) != phi[P].get(v):
                    return None

    base = pair.t - 4
    glu_extra = {}
    outer = {}
    for P in tets:
        psi = {nl: ov for ov, nl in phi[P].items()}
        missing = ({0, 1, 2, 3} - set(phi[P].values())).pop()
        psi[missing] = wloc[P]
        outer[4 * P + wloc[P]] = (base, missing, psi)
    _wire_outer(pair, outer, set(tets), glu_extra)

    edge_table = {}
    vertex_table = {}
    for P in tets:
        for v in range(4):
            if v != wloc[P]:
                vertex_table[(P, v)] = (base, phi[P][v])
        for e in range(6):
            a, b = EDGE_VERTICES[e]
            if wloc[P] not in (a, b):
                edge_table[(P, e)] = (base, EDGE_INDEX[(phi[P][a], phi[P][b])])
    return _renumber(pair, set(tets), 1, glu_extra, edge_table, vertex_table)


def two_zero_edge(pair, rep):
    """Collapse the pillow formed by two distinct tetrahedra around an
    interior degree-2 edge."""
    if rep in pair.marks:
        return None
    sk = pair.skeleton
    if len(sk.edge_slots[rep]) != 2:
        return None
    ring = _edge_ring(pair, rep)
    if ring is None or len(ring) != 2:
        return None
    (Ta, u0a, u1a, xa, ya), (Tb, _, _, _, _) = ring
    if Ta == Tb:
        return None
    if sk.vertex_class_of[4 * Ta + u0a] == sk.vertex_class_of[4 * Ta + u1a]:
        return None

    g1 = pair.gluings[4 * Ta + xa]
    g2 = pair.gluings[4 * Ta + ya]
    if g1 is None or g2 is None or g1[0] != Tb or g2[0] != Tb:
        return None
    sig1, sig2 = g1[2], g2[2]
    if sig1[u0a] != sig2[u0a] or sig1[u1a] != sig2[u1a]:
        return None
    lam = {u0a: sig1[u0a], u1a: sig1[u1a], ya: sig1[ya], xa: sig2[xa]}
    if set(lam.values()) != {0, 1, 2, 3}:
        return None

    # the two (x, y) edges merge under the collapse
    exy_a = sk.edge_class_of[6 * Ta + EDGE_INDEX[(xa, ya)]]
    exy_b = sk.edge_class_of[6 * Tb + EDGE_INDEX[(lam[xa], lam[ya])]]
    if exy_a != exy_b and exy_a in pair.marks and exy_b in pair.marks:
        return None

    outer_slots = (4 * Ta + u0a, 4 * Ta + u1a,
                   4 * Tb + lam[u0a], 4 * Tb + lam[u1a])
    for s in outer_slots:
        gp = pair.gluings[s]
        if gp is not None and gp[0] in (Ta, Tb):
            return None

    survivors = [S for S in range(pair.t) if S not in (Ta, Tb)]
    remap = {S: k for k, S in enumerate(survivors)}
    glu_extra = {}
    lam_t = tuple(lam[i] for i in range(4))
    for ua in (u0a, u1a):
        ga = pair.gluings[4 * Ta + ua]
        gb = pair.gluings[4 * Tb + lam[ua]]
        if ga is None and gb is None:
            continue
        if ga is None or gb is None:
            S, fS, _ = ga if ga is not None else gb
            glu_extra[4 * remap[S] + fS] = None
            continue
        S1, f1_, rho1 = ga
        S2, f2_, rho2 = gb
        perm = compose(rho2, compose(lam_t, invert(rho1)))
        glu_extra[4 * remap[S1] + f1_] = (remap[S2], f2_, perm)
        glu_extra[4 * remap[S2] + f2_] = (remap[S1], f1_, invert(perm))

    return _renumber(pair, {Ta, Tb}, 0, glu_extra, {}, {})
