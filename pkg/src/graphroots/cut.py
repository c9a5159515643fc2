"""
Cutting a triangulated pair along a closed connected normal surface, and
the compression move: cut, then cone each boundary copy of the surface to
a new star vertex.

Every tetrahedron is partitioned by its normal pieces into blocks: the
apex region at each vertex, prisms between parallel pieces, the two end
wedges beside a quad stack, or a central block.  Boundary triangles of
the blocks are built once per face class and once per surface piece copy,
in class-level canonical terms, so the two sides of every gluing
subdivide identically.  Each block is coned from its own centre vertex;
untouched tetrahedra survive verbatim.  Marks, colors and stars are
transported, and graph arcs crossing the surface end at the new stars.
"""

from .pair import InputError, Pair, UnionFind
from .perms import (EDGE_INDEX, EDGE_VERTICES, FACE_VERTICES, invert,
                    quad_arc_vertex, quad_meets_edge)

FACE_EDGES_OF = tuple(
    tuple(EDGE_INDEX[(a, b)]
          for i, a in enumerate(FACE_VERTICES[f])
          for b in FACE_VERTICES[f][i + 1:])
    for f in range(4))


class CutError(RuntimeError):
    pass


def _in_zero_half(q, v):
    """Whether vertex v lies in the half of quad type q containing 0."""
    return v == 0 or v == q + 1


class _Tri:
    """A 2-cell of the subdivision: three vertex tokens and three edges;
    edge i joins corners i and (i+1) % 3 and is stored as (key, flip),
    flip meaning the traversal runs against the key's canonical
    direction."""

    __slots__ = ("tid", "verts", "edges")

    def __init__(self, tid, verts, edges):
        self.tid = tid
        self.verts = tuple(verts)
        self.edges = tuple(edges)


class CutResult:
    def __init__(self, pair, solid_map, scopy_faces, scopy_pairs,
                 scopy_corners, graph_points, star_corners=None):
        self.pair = pair
        self.solid_map = solid_map          # old tet -> new tet
        self.scopy_faces = scopy_faces      # side -> [(tet, face)]
        self.scopy_pairs = scopy_pairs      # side -> [((tet,lab1,lab2),(tet,lab1,lab2))]
        self.scopy_corners = scopy_corners  # side -> {(tet, face): vert tokens}
        self.graph_points = graph_points
        self.star_corners = star_corners    # side -> (tet, vertex) or None


class CutComplex:
    def __init__(self, pair, surface):
        self.pair = pair
        self.s = surface
        report = surface.analyze()
        if not (report.connected and report.is_closed()):
            raise CutError("cut needs a connected closed surface")
        self.weights = surface.edge_weights()
        self.flip = self._piece_flips()
        self.graph_points = report.graph_points

    # ---- global sides -----------------------------------------------------

    def _piece_flips(self):
        s = self.s
        pair = self.pair
        pieces = s.pieces()
        index = {p: i for i, p in enumerate(pieces)}
        side = UnionFind([(i, k) for i in range(len(pieces)) for k in (0, 1)])
        done = set()
        for T in range(pair.t):
            for f in range(4):
                slot = 4 * T + f
                g = pair.gluings[slot]
                if g is None or slot in done:
                    continue
                T2, f2, p = g
                done.add(4 * T2 + f2)
                for v in FACE_VERTICES[f]:
                    for k in range(1, s.arcs(T, f, v) + 1):
                        pa = s.piece_at_arc(T, f, v, k)
                        pb = s.piece_at_arc(T2, f2, p[v], k)
                        ta = 0 if pa[0] == "tri" else s._quad_side_toward(pa[2], f, v)
                        tb = 0 if pb[0] == "tri" else s._quad_side_toward(pb[2], f2, p[v])
                        side.union((index[pa], ta), (index[pb], tb))
                        side.union((index[pa], 1 - ta), (index[pb], 1 - tb))
        root0 = side.find((0, 0))
        flips = {}
        for p, i in index.items():
            if side.find((i, 0)) == root0:
                flips[p] = 0
            elif side.find((i, 1)) == root0:
                flips[p] = 1
            else:
                raise CutError("surface is not connected")
        return flips

    def gside(self, piece, local_side):
        return local_side ^ self.flip[piece]

    # ---- tokens and oriented keys ------------------------------------------

    def point_token(self, T, e, pos_from_v, v, g):
        sk = self.pair.skeleton
        slot = 6 * T + e
        rep = sk.edge_class_of[slot]
        w = self.weights[rep]
        a, _ = EDGE_VERTICES[e]
        i = pos_from_v if v == a else w + 1 - pos_from_v
        if sk.edge_sign[slot] < 0:
            i = w + 1 - i
        return ("p", rep, i, g)

    def bit_edge(self, T, e, asc_index, ascending):
        """(key, flip) for the segment between ascending points asc_index
        and asc_index + 1 of edge slot (T, e); canonical direction is
        ascending in class order."""
        sk = self.pair.skeleton
        slot = 6 * T + e
        rep = sk.edge_class_of[slot]
        w = self.weights[rep]
        sign = sk.edge_sign[slot]
        i = asc_index if sign > 0 else w - asc_index
        flip = 0 if (ascending == (sign > 0)) else 1
        return (("bit", rep, i), flip)

    def bit_near(self, T, e, v, k_from_v, away):
        """(key, flip) for the bit starting k_from_v points away from
        vertex v of edge slot (T, e), traversed away from v (or toward v
        if away is False)."""
        a, _ = EDGE_VERTICES[e]
        w = self.weights[self.pair.skeleton.edge_class_of[6 * T + e]]
        asc_index = k_from_v if v == a else w - k_from_v
        ascending = (v == a) == away
        return self.bit_edge(T, e, asc_index, ascending)

    def _slot_to_rep(self, T, f):
        slot = 4 * T + f
        rep = self.pair.skeleton.face_class_rep[slot]
        if rep == slot:
            return rep, None
        return rep, self.pair.gluings[slot][2]

    def arc_edge(self, T, f, v, k, g, start_other):
        """(key, flip) for the side-g copy of the level-k arc at v on face
        f, traversed starting from its endpoint on edge (v, start_other).
        Canonical direction starts on the rep-label edge at v with the
        smaller other endpoint."""
        rep, p = self._slot_to_rep(T, f)
        if p is None:
            rv, rstart = v, start_other
            others = [u for u in FACE_VERTICES[f] if u != v]
        else:
            rv, rstart = p[v], p[start_other]
            others = [p[u] for u in FACE_VERTICES[f] if u != v]
        key = ("arc", rep, rv, k, g)
        return key, (0 if rstart == min(others) else 1)

    # ---- pieces -------------------------------------------------------------

    def piece_at_point(self, T, e, i):
        s = self.s
        a, b = EDGE_VERTICES[e]
        ta = s.tri(T, a)
        if i <= ta:
            return ("tri", T, a, i)
        q = s.quad_type(T)
        nq = s.quad(T, q) if q is not None and quad_meets_edge(q, e) else 0
        if i <= ta + nq:
            m = i - ta
            jg = m if _in_zero_half(q, a) else nq + 1 - m
            return ("quad", T, q, jg)
        return ("tri", T, b, ta + nq + s.tri(T, b) + 1 - i)

    def piece_triangles(self, piece, g):
        """Triangles of the side-g copy of one surface piece."""
        kind, T, vq, j = piece
        s = self.s
        if kind == "tri":
            v = vq
            x, y, z = sorted(u for u in range(4) if u != v)
            corners = tuple(self.point_token(T, EDGE_INDEX[(v, o)], j, v, g)
                            for o in (x, y, z))
            edges = []
            for (o1, o2, fidx) in ((x, y, z), (y, z, x), (z, x, y)):
                key, flip = self.arc_edge(T, fidx, v, j, g, o1)
                edges.append((key, flip, ("a", 4 * T + fidx)))
            return [_Tri(("s", T, piece, g, 0), corners, tuple(edges))]
        q = vq
        Q = s.quad(T, q)
        cyc = self._quad_edge_cycle(q)
        corners = []
        for e in cyc:
            a, _ = EDGE_VERTICES[e]
            pos = s.tri(T, a) + (j if _in_zero_half(q, a) else Q + 1 - j)
            corners.append(self.point_token(T, e, pos, a, g))
        edges = []
        for idx in range(4):
            e1, e2 = cyc[idx], cyc[(idx + 1) % 4]
            fidx = self._common_face(e1, e2)
            vv = quad_arc_vertex(q, fidx)
            level = s.tri(T, vv) + (j if _in_zero_half(q, vv) else Q + 1 - j)
            a, b = EDGE_VERTICES[e1]
            start_other = b if vv == a else a
            key, flip = self.arc_edge(T, fidx, vv, level, g, start_other)
            edges.append((key, flip, ("a", 4 * T + fidx)))
        dkey = ("qdiag", T, q, j, g)
        return [
            _Tri(("s", T, piece, g, 0),
                 (corners[0], corners[1], corners[2]),
                 (edges[0], edges[1], (dkey, 1, ("q",)))),
            _Tri(("s", T, piece, g, 1),
                 (corners[0], corners[2], corners[3]),
                 ((dkey, 0, ("q",)), edges[2], edges[3])),
        ]

    def _quad_edge_cycle(self, q):
        crossed = [e for e in range(6) if quad_meets_edge(q, e)]
        cyc = [min(crossed)]
        used = set()
        while len(cyc) < 4:
            cur = cyc[-1]
            for fidx in range(4):
                if fidx in used:
                    continue
                es = [e for e in FACE_EDGES_OF[fidx] if e in crossed]
                if cur in es:
                    nxt = es[0] if es[1] == cur else es[1]
                    if nxt in cyc:
                        continue
                    used.add(fidx)
                    cyc.append(nxt)
                    break
            else:
                raise CutError("quad edge cycle failed")
        return cyc

    def _common_face(self, e1, e2):
        for fidx in range(4):
            if e1 in FACE_EDGES_OF[fidx] and e2 in FACE_EDGES_OF[fidx]:
                return fidx
        raise CutError("edges share no face")

    # ---- face subdivisions ---------------------------------------------------

    def face_subdivision(self, rep_slot):
        """Triangles of one face class, built on the representative slot.
        Returns (regions, tris): descriptors in rep labels -> tri ids."""
        T, f = divmod(rep_slot, 4)
        s = self.s
        sk = self.pair.skeleton
        tris = []
        regions = {}
        counter = [0]

        def emit(descr, verts, edges):
            tid = ("f", rep_slot, counter[0])
            counter[0] += 1
            tris.append(_Tri(tid, verts, edges))
            regions.setdefault(descr, []).append(tid)

        def arc_g(v, k, facing_v):
            piece = s.piece_at_arc(T, f, v, k)
            toward = 0 if piece[0] == "tri" else s._quad_side_toward(piece[2], f, v)
            return self.gside(piece, toward if facing_v else 1 - toward)

        def bit3(e, v, k_from_v, away):
            key, flip = self.bit_near(T, e, v, k_from_v, away)
            return (key, flip, ("b", e))

        def arc3(v, k, g, start_other):
            key, flip = self.arc_edge(T, f, v, k, g, start_other)
            return (key, flip, ("s",))

        nv = {v: s.arcs(T, f, v) for v in FACE_VERTICES[f]}
        for v in FACE_VERTICES[f]:
            x, y = sorted(u for u in FACE_VERTICES[f] if u != v)
            ex, ey = EDGE_INDEX[(v, x)], EDGE_INDEX[(v, y)]
            for k in range(1, nv[v] + 1):
                g_hi = arc_g(v, k, True)
                pxk = self.point_token(T, ex, k, v, g_hi)
                pyk = self.point_token(T, ey, k, v, g_hi)
                if k == 1:
                    vv = ("v", sk.vertex_class_of[4 * T + v])
                    emit(("corner", v, 1), (vv, pxk, pyk),
                         (bit3(ex, v, 0, True),
                          arc3(v, 1, g_hi, x),
                          bit3(ey, v, 0, False)))
                else:
                    g_lo = arc_g(v, k - 1, False)
                    px0 = self.point_token(T, ex, k - 1, v, g_lo)
                    py0 = self.point_token(T, ey, k - 1, v, g_lo)
                    dkey = ("rdiag", rep_slot, v, k)
                    emit(("corner", v, k), (px0, py0, pyk),
                         (arc3(v, k - 1, g_lo, x),
                          bit3(ey, v, k - 1, True),
                          (dkey, 1, ("s",))))
                    emit(("corner", v, k), (px0, pyk, pxk),
                         ((dkey, 0, ("s",)),
                          arc3(v, k, g_hi, y),
                          bit3(ex, v, k - 1, False)))

        # central polygon: corner stops joined by the outer bits
        verts = []
        edges = []
        cyc = FACE_VERTICES[f]
        for idx in range(3):
            v, w_, u = cyc[idx], cyc[(idx + 1) % 3], cyc[(idx + 2) % 3]
            e_out = EDGE_INDEX[(v, w_)]
            if nv[v] == 0:
                verts.append(("v", sk.vertex_class_of[4 * T + v]))
            else:
                g_away = arc_g(v, nv[v], False)
                verts.append(self.point_token(T, EDGE_INDEX[(v, u)],
                                              nv[v], v, g_away))
                edges.append(arc3(v, nv[v], g_away, u))
                verts.append(self.point_token(T, e_out, nv[v], v, g_away))
            edges.append(bit3(e_out, v, nv[v], True))
        whole_locals = {}
        arc_free = all(nv[v] == 0 for v in FACE_VERTICES[f])
        for idx3, (verts3, edges3) in enumerate(
                _fan_triangulate(rep_slot, verts, edges)):
            before = counter[0]
            emit(("central",), verts3, edges3)
            if arc_free:
                # the face is a single triangle; remember which rep-local
                # vertex sits at each corner so solid tetrahedra can glue
                apex = min(range(3), key=lambda i: (verts[i], i))
                whole_locals[("f", rep_slot, before)] = tuple(
                    cyc[(apex + k) % 3] for k in range(3))
        return regions, tris, whole_locals

    # ---- block assignment ------------------------------------------------------

    def tet_touched(self, T):
        return any(self.s.coords[7 * T + i] for i in range(7))

    def block_of_region(self, T, f, descr):
        s = self.s
        q = s.quad_type(T)
        Q = s.quad(T, q) if q is not None else 0
        if descr[0] == "central":
            if Q == 0:
                return ("central",)
            return ("end", 1 - (0 if _in_zero_half(q, f) else 1))
        _, v, k = descr
        tv = s.tri(T, v)
        if k <= tv:
            return ("apex", v) if k == 1 else ("tprism", v, k)
        jloc = k - tv
        side = 0 if _in_zero_half(q, v) else 1
        if jloc == 1:
            return ("end", side)
        return ("qprism", jloc - 1) if side == 0 else ("qprism", Q + 1 - jloc)

    def block_of_piece_side(self, piece, local_side):
        kind, T, vq, j = piece
        s = self.s
        q = s.quad_type(T)
        Q = s.quad(T, q) if q is not None else 0
        if kind == "tri":
            v = vq
            if local_side == 0:
                return ("apex", v) if j == 1 else ("tprism", v, j)
            if j < s.tri(T, v):
                return ("tprism", v, j + 1)
            if Q:
                return ("end", 0 if _in_zero_half(q, v) else 1)
            return ("central",)
        if local_side == 0:
            return ("end", 0) if j == 1 else ("qprism", j - 1)
        return ("end", 1) if j == Q else ("qprism", j)

    # ---- assembly ------------------------------------------------------------

    def build(self, cone=True):
        pair = self.pair
        sk = pair.skeleton
        tri_store = {}
        incid = {}       # tid -> [(cell, slot)]
        cells = {}       # cell -> [(tid, slot)]
        scopy_tids = {0: [], 1: []}

        touched = [self.tet_touched(T) for T in range(pair.t)]

        whole_locals = {}
        for fc in sk.face_classes:
            rep = fc[0]
            regions, tris, wl = self.face_subdivision(rep)
            whole_locals.update(wl)
            for t in tris:
                tri_store[t.tid] = t
            for slot in fc:
                T, f = divmod(slot, 4)
                if slot == rep:
                    from_rep = None
                else:
                    from_rep = invert(pair.gluings[slot][2])
                for descr, tids in regions.items():
                    if descr[0] == "corner" and from_rep is not None:
                        sdescr = ("corner", from_rep[descr[1]], descr[2])
                    else:
                        sdescr = descr
                    if touched[T]:
                        cell = ("b", T, self.block_of_region(T, f, sdescr))
                    else:
                        cell = ("solid", T)
                    for tid in tids:
                        incid.setdefault(tid, []).append((cell, slot))
                        cells.setdefault(cell, []).append((tid, slot))

        for piece in self.s.pieces():
            for local_side in (0, 1):
                g = self.gside(piece, local_side)
                cell = ("b", piece[1], self.block_of_piece_side(piece, local_side))
                for t in self.piece_triangles(piece, g):
                    tri_store[t.tid] = t
                    incid.setdefault(t.tid, []).append((cell, None))
                    cells.setdefault(cell, []).append((t.tid, None))
                    scopy_tids[g].append(t.tid)

        # allocate tetrahedra: solids, block cones, then caps
        tet_of_solid = {}
        records = []
        corner_tokens = []
        for T in range(pair.t):
            if not touched[T]:
                tet_of_solid[T] = len(records)
                records.append(("solid", T))
                corner_tokens.append(tuple(
                    ("v", sk.vertex_class_of[4 * T + v]) for v in range(4)))
        cone_tet = {}
        for cell in sorted(c for c in cells if c[0] == "b"):
            center = ("c", cell[1], cell[2])
            for tid, slot in sorted(cells[cell],
                                    key=lambda e: (e[0], -1 if e[1] is None else e[1])):
                cone_tet[(cell, tid, slot)] = len(records)
                records.append(("cone", cell, tid, slot))
                corner_tokens.append((center,) + tri_store[tid].verts)
        cap_tet = {}
        if cone:
            for g in (0, 1):
                for tid in sorted(scopy_tids[g]):
                    cap_tet[(g, tid)] = len(records)
                    records.append(("cap", g, tid))
                    corner_tokens.append((("star", g),) + tri_store[tid].verts)

        nt = len(records)
        glu = [None] * (4 * nt)

        def set_gluing(tA, fA, tB, fB, perm):
            for slot, entry in ((4 * tA + fA, (tB, fB, perm)),
                                (4 * tB + fB, (tA, fA, invert(perm)))):
                if glu[slot] is not None and glu[slot] != entry:
                    raise CutError("conflicting gluings in cut complex")
                glu[slot] = entry

        def side_info(cell, tid, slot):
            if cell[0] == "solid":
                T, f = divmod(slot, 4)
                rep = sk.face_class_rep[slot]
                rep_order = whole_locals[tid]
                if slot == rep:
                    order = rep_order
                else:
                    inv = invert(pair.gluings[slot][2])
                    order = tuple(inv[rv] for rv in rep_order)
                return (tet_of_solid[T], f, order)
            return (cone_tet[(cell, tid, slot)], 0, (1, 2, 3))

        bit_slots = {}
        for tid, occs in sorted(incid.items()):
            t = tri_store[tid]
            sides = [side_info(cell, tid, slot) for cell, slot in occs]
            if len(sides) == 2:
                (tA, fA, mA), (tB, fB, mB) = sides
                perm = [None] * 4
                for i in range(3):
                    perm[mA[i]] = mB[i]
                perm[fA] = fB
                set_gluing(tA, fA, tB, fB, tuple(perm))
            elif len(sides) != 1:
                raise CutError("triangle with %d sides" % len(sides))
            tT, tf, m = sides[0]
            for pos in range(3):
                key = t.edges[pos][0]
                if key[0] == "bit":
                    la, lb = m[pos], m[(pos + 1) % 3]
                    bit_slots.setdefault(key, (tT, EDGE_INDEX[(la, lb)]))

        def wedge_tag(tid, slot, pos):
            key, flip, ctx = tri_store[tid].edges[pos]
            if ctx[0] == "s":
                return (key, slot)
            if ctx[0] == "b":
                ehat = ctx[1]
                T = slot // 4
                rep = tid[1]
                if slot == rep:
                    e = ehat
                else:
                    inv = invert(pair.gluings[slot][2])
                    a, b = EDGE_VERTICES[ehat]
                    e = EDGE_INDEX[(inv[a], inv[b])]
                return (key, "b", T, e)
            if ctx[0] == "a":
                return (key, ctx[1])
            return (key,)

        # cone side faces around each block wedge
        for cell in sorted(c for c in cells if c[0] == "b"):
            occ = {}
            for tid, slot in cells[cell]:
                for pos in range(3):
                    tag = wedge_tag(tid, slot, pos)
                    flip = tri_store[tid].edges[pos][1]
                    occ.setdefault(tag, []).append((tid, slot, pos, flip))
            self._glue_around_edges(
                occ, lambda tid, slot, c=cell: cone_tet[(c, tid, slot)],
                set_gluing)

        scopy_faces = {0: [], 1: []}
        scopy_pairs = {0: [], 1: []}
        scopy_corners = {0: {}, 1: {}}
        star_corners = None
        if cone:
            star_corners = {}
            for g in (0, 1):
                occ = {}
                for tid in scopy_tids[g]:
                    t = tri_store[tid]
                    cell = incid[tid][0][0]
                    bt = cone_tet[(cell, tid, None)]
                    ct = cap_tet[(g, tid)]
                    set_gluing(bt, 0, ct, 0, (0, 1, 2, 3))
                    for pos in range(3):
                        key, flip, _ = t.edges[pos]
                        occ.setdefault((key,), []).append((tid, None, pos, flip))
                self._glue_around_edges(
                    occ, lambda tid, slot, g=g: cap_tet[(g, tid)], set_gluing)
                star_corners[g] = (cap_tet[(g, scopy_tids[g][0])], 0)
        else:
            for g in (0, 1):
                occ = {}
                for tid in scopy_tids[g]:
                    t = tri_store[tid]
                    cell = incid[tid][0][0]
                    bt = cone_tet[(cell, tid, None)]
                    scopy_faces[g].append((bt, 0))
                    scopy_corners[g][(bt, 0)] = t.verts
                    for pos in range(3):
                        key, flip, _ = t.edges[pos]
                        occ.setdefault(key, []).append((tid, pos, flip))
                for key, entries in sorted(occ.items()):
                    if len(entries) != 2:
                        raise CutError("surface copy not closed")
                    (tidA, posA, flipA), (tidB, posB, flipB) = entries
                    ctA = cone_tet[(incid[tidA][0][0], tidA, None)]
                    ctB = cone_tet[(incid[tidB][0][0], tidB, None)]
                    a1, a2 = 1 + posA, 1 + (posA + 1) % 3
                    if flipA:
                        a1, a2 = a2, a1
                    b1, b2 = 1 + posB, 1 + (posB + 1) % 3
                    if flipB:
                        b1, b2 = b2, b1
                    scopy_pairs[g].append(((ctA, a1, a2), (ctB, b1, b2)))

        # transport marks and stars
        marks = []
        for rep, color in pair.marks.items():
            w = self.weights[rep]
            for i in range(w + 1):
                hit = bit_slots.get(("bit", rep, i))
                if hit is None:
                    raise CutError("lost a graph segment in the cut")
                marks.append((hit[0], hit[1], color))
        if cone:
            for g in (0, 1):
                for tid in scopy_tids[g]:
                    t = tri_store[tid]
                    ct = cap_tet[(g, tid)]
                    for pos, token in enumerate(t.verts):
                        if token[0] == "p" and token[1] in pair.marks:
                            marks.append((ct, EDGE_INDEX[(0, 1 + pos)],
                                          pair.marks[token[1]]))

        token_slot = {}
        for tet, toks in enumerate(corner_tokens):
            for v, token in enumerate(toks):
                token_slot.setdefault(token, (tet, v))
        stars = []
        for rep, flag in pair.stars.items():
            hit = token_slot.get(("v", rep))
            if hit is None:
                raise CutError("lost a star vertex in the cut")
            stars.append((hit[0], hit[1], flag))
        if cone:
            flag = "dirty" if self.graph_points > 0 else "clean"
            for g in (0, 1):
                tet, v = star_corners[g]
                stars.append((tet, v, flag))

        built = Pair(nt, glu, marks, stars)
        return CutResult(built, dict(tet_of_solid), scopy_faces, scopy_pairs,
                         scopy_corners, self.graph_points,
                         star_corners if cone else None)

    def _glue_around_edges(self, occ, tet_of, set_gluing):
        for tag, entries in sorted(occ.items()):
            if len(entries) != 2:
                raise CutError("cell boundary is not closed along %r" % (tag,))
            (tidA, slotA, posA, flipA), (tidB, slotB, posB, flipB) = entries
            tA, tB = tet_of(tidA, slotA), tet_of(tidB, slotB)
            a1, a2 = 1 + posA, 1 + (posA + 1) % 3
            if flipA:
                a1, a2 = a2, a1
            b1, b2 = 1 + posB, 1 + (posB + 1) % 3
            if flipB:
                b1, b2 = b2, b1
            ra = ({1, 2, 3} - {a1, a2}).pop()
            rb = ({1, 2, 3} - {b1, b2}).pop()
            perm = [None] * 4
            perm[0] = 0
            perm[a1], perm[a2], perm[ra] = b1, b2, rb
            set_gluing(tA, ra, tB, rb, tuple(perm))


def _fan_triangulate(rep_slot, verts, edges):
    """Fan triangulation of a polygon given as vertex tokens and oriented
    boundary edges (edge i joins verts[i] and verts[i+1])."""
    m = len(verts)
    if m < 3:
        raise CutError("degenerate polygon")
    apex = min(range(m), key=lambda i: (verts[i], i))
    out = []
    for step in range(1, m - 1):
        i = (apex + step) % m
        j = (apex + step + 1) % m
        first = edges[apex] if step == 1 else (("fan", rep_slot, i), 0, ("s",))
        if step == m - 2:
            last = edges[(apex + m - 1) % m]
        else:
            last = (("fan", rep_slot, j), 1, ("s",))
        out.append(((verts[apex], verts[i], verts[j]),
                    (first, edges[i], last)))
    return out


def cut_along(pair, surface):
    """Cut without coning; the two surface copies stay as boundary."""
    return CutComplex(pair, surface).build(cone=False)


def cut_and_cone(pair, surface):
    """The compression move: cut along the surface and cone both copies.

    Returns (components, info) where components is the list of connected
    Pairs and info carries the star locations, the destination of every
    untouched tetrahedron, and the number of graph intersection points."""
    result = CutComplex(pair, surface).build(cone=True)
    built = result.pair
    comps = built.components()
    comp_of_tet = {}
    for ci, (comp, tet_map) in enumerate(comps):
        for old, new in tet_map.items():
            comp_of_tet[old] = (ci, new)
    stars = {}
    for g in (0, 1):
        tet, v = result.star_corners[g]
        ci, nt = comp_of_tet[tet]
        comp = comps[ci][0]
        stars[g] = (ci, comp.skeleton.vertex_class_of[4 * nt + v])
    solid_map = {old: comp_of_tet[new] for old, new in result.solid_map.items()}
    info = {
        "graph_points": result.graph_points,
        "stars": stars,
        "solid_map": solid_map,
    }
    return [c for c, _ in comps], info
