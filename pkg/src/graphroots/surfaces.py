"""
Normal surfaces in standard coordinates: 7 entries per tetrahedron, four
triangle coordinates indexed by vertex and three quadrilateral coordinates
indexed by the vertex-pair partition they realise.

The matching system has three equations per glued face, one per normal
arc type.  Closed surfaces additionally have no arcs on boundary faces.
"""

from math import gcd

from .pair import UnionFind
from .perms import (EDGE_INDEX, EDGE_VERTICES, FACE_VERTICES,
                    QUAD_AVOIDED_EDGES, arc_quad_type, quad_meets_edge)


def tri_index(T, v):
    return 7 * T + v


def quad_index(T, q):
    return 7 * T + 4 + q


def cached_systems(pair):
    """(matching rows, closure rows) memoised on the pair instance."""
    cached = getattr(pair, "_surface_systems", None)
    if cached is None:
        cached = (matching_system(pair), closure_system(pair))
        pair._surface_systems = cached
    return cached


def matching_system(pair):
    """Integer matrix of the arc-matching equations, one row per
    (interior face, arc type), 7t columns."""
    rows = []
    done = set()
    for T in range(pair.t):
        for f in range(4):
            s = 4 * T + f
            g = pair.gluings[s]
            if g is None or s in done:
                continue
            T2, f2, p = g
            done.add(4 * T2 + f2)
            for v in FACE_VERTICES[f]:
                row = [0] * (7 * pair.t)
                row[tri_index(T, v)] += 1
                row[quad_index(T, arc_quad_type(f, v))] += 1
                row[tri_index(T2, p[v])] -= 1
                row[quad_index(T2, arc_quad_type(f2, p[v]))] -= 1
                rows.append(row)
    return rows


def closure_system(pair):
    """Rows forcing zero arcs on every boundary face."""
    rows = []
    for T in range(pair.t):
        for f in range(4):
            if pair.gluings[4 * T + f] is None:
                for v in FACE_VERTICES[f]:
                    row = [0] * (7 * pair.t)
                    row[tri_index(T, v)] = 1
                    row[quad_index(T, arc_quad_type(f, v))] = 1
                    rows.append(row)
    return rows


def quad_constraint_ok(coords, t):
    for T in range(t):
        if sum(1 for q in range(3) if coords[quad_index(T, q)]) > 1:
            return False
    return True


class NormalSurface:
    """A primitive admissible solution of the matching system."""

    def __init__(self, pair, coords, require_closed=True):
        coords = tuple(int(x) for x in coords)
        if len(coords) != 7 * pair.t:
            raise ValueError("coordinate vector has wrong length")
        if any(x < 0 for x in coords):
            raise ValueError("negative normal coordinate")
        if not any(coords):
            raise ValueError("empty surface")
        if not quad_constraint_ok(coords, pair.t):
            raise ValueError("two quad types in one tetrahedron")
        g = 0
        for x in coords:
            g = gcd(g, x)
        if g != 1:
            raise ValueError("coordinates are not primitive")
        match_rows, closure_rows = cached_systems(pair)
        for row in match_rows:
            if sum(a * x for a, x in zip(row, coords)):
                raise ValueError("matching equations violated")
        if require_closed:
            for row in closure_rows:
                if sum(a * x for a, x in zip(row, coords)):
                    raise ValueError("surface touches the boundary")
        self.pair = pair
        self.coords = coords
        self._report = None

    def tri(self, T, v):
        return self.coords[tri_index(T, v)]

    def quad(self, T, q):
        return self.coords[quad_index(T, q)]

    def quad_type(self, T):
        """The quad type present in tetrahedron T, or None."""
        for q in range(3):
            if self.quad(T, q):
                return q
        return None

    def support(self):
        return frozenset(T for T in range(self.pair.t)
                         if any(self.coords[7 * T + i] for i in range(7)))

    def arcs(self, T, f, v):
        """Arcs on face f of tetrahedron T cutting off vertex v."""
        return self.tri(T, v) + self.quad(T, arc_quad_type(f, v))

    def edge_weight_slot(self, T, e):
        a, b = EDGE_VERTICES[e]
        w = self.tri(T, a) + self.tri(T, b)
        for q in range(3):
            if quad_meets_edge(q, e):
                w += self.quad(T, q)
        return w

    def edge_weights(self):
        """Intersection count with each edge class, keyed by class rep."""
        sk = self.pair.skeleton
        out = {}
        for rep, slots in sk.edge_slots.items():
            w = self.edge_weight_slot(slots[0] // 6, slots[0] % 6)
            for s in slots[1:]:
                if self.edge_weight_slot(s // 6, s % 6) != w:
                    raise ValueError("inconsistent edge weights")
            out[rep] = w
        return out

    def graph_points(self):
        weights = self.edge_weights()
        return sum(weights[rep] for rep in self.pair.marks)

    def graph_colors(self):
        """Multiset of colors at the intersection points with the graph."""
        weights = self.edge_weights()
        out = []
        for rep, color in sorted(self.pair.marks.items()):
            out.extend([color] * weights[rep])
        return tuple(sorted(out, key=lambda c: (c is None, c)))

    # -- cell structure ----------------------------------------------------

    def pieces(self):
        out = []
        for T in range(self.pair.t):
            for v in range(4):
                for j in range(1, self.tri(T, v) + 1):
                    out.append(("tri", T, v, j))
            q = self.quad_type(T)
            if q is not None:
                for j in range(1, self.quad(T, q) + 1):
                    out.append(("quad", T, q, j))
        return out

    def piece_at_arc(self, T, f, v, k):
        """The piece owning the k-th arc (counted from v) on face f."""
        nt = self.tri(T, v)
        if k <= nt:
            return ("tri", T, v, k)
        q = arc_quad_type(f, v)
        j = k - nt
        nq = self.quad(T, q)
        if not (1 <= j <= nq):
            raise ValueError("arc index out of range")
        # quads are indexed from the side of the partition containing 0
        if f == 0 or v == 0:
            pair_has_zero = True
        else:
            pair_has_zero = False
        jg = j if pair_has_zero else nq + 1 - j
        return ("quad", T, q, jg)

    def _quad_side_toward(self, q, f, v):
        """Side (0 or 1) of a type-q quad facing the region of face f that
        its arc cuts off.  Side 0 faces the partition half containing 0."""
        return 0 if (f == 0 or v == 0) else 1

    def analyze(self):
        if self._report is not None:
            return self._report
        pair = self.pair
        sk = pair.skeleton
        pieces = self.pieces()
        index = {p: i for i, p in enumerate(pieces)}

        corners = sum(self.edge_weights().values())
        narcs = 0
        boundary_weight = 0
        for fc in sk.face_classes:
            T, f = divmod(fc[0], 4)
            count = sum(self.arcs(T, f, v) for v in FACE_VERTICES[f])
            narcs += count
            if len(fc) == 1:
                boundary_weight += count
        euler = corners - narcs + len(pieces)

        uf = UnionFind(range(len(pieces)))
        side = UnionFind([(i, s) for i in range(len(pieces)) for s in (0, 1)])
        done = set()
        for T in range(pair.t):
            for f in range(4):
                s0 = 4 * T + f
                g = pair.gluings[s0]
                if g is None or s0 in done:
                    continue
                T2, f2, p = g
                done.add(4 * T2 + f2)
                for v in FACE_VERTICES[f]:
                    for k in range(1, self.arcs(T, f, v) + 1):
                        pa = self.piece_at_arc(T, f, v, k)
                        pb = self.piece_at_arc(T2, f2, p[v], k)
                        ia, ib = index[pa], index[pb]
                        uf.union(ia, ib)
                        ta = (0 if pa[0] == "tri" else
                              self._quad_side_toward(pa[2], f, v))
                        tb = (0 if pb[0] == "tri" else
                              self._quad_side_toward(pb[2], f2, p[v]))
                        side.union((ia, ta), (ib, tb))
                        side.union((ia, 1 - ta), (ib, 1 - tb))

        comps = set(uf.find(i) for i in range(len(pieces)))
        connected = len(comps) <= 1
        two_sided = all(side.find((i, 0)) != side.find((i, 1))
                        for i in range(len(pieces)))

        weights = self.edge_weights()
        report = SurfaceReport(
            euler=euler,
            connected=connected,
            orientable=two_sided,
            edge_weights=weights,
            graph_points=sum(weights[rep] for rep in pair.marks),
            boundary_weight=boundary_weight,
            vertex_link_of=self._vertex_link_class(),
        )
        self._report = report
        return report

    def _vertex_link_class(self):
        sk = self.pair.skeleton
        for vclass, slots in sk.vertex_slots.items():
            want = [0] * (7 * self.pair.t)
            for s in slots:
                want[tri_index(s // 4, s % 4)] += 1
            g = 0
            for x in want:
                g = gcd(g, x)
            want = [x // g for x in want]
            if tuple(want) == self.coords:
                return vclass
        return None

    def boundary_circles(self):
        """Number of boundary curve components (0 for closed surfaces)."""
        pair = self.pair
        sk = pair.skeleton
        weights = self.edge_weights()
        arcs = []
        for T in range(pair.t):
            for f in range(4):
                if pair.gluings[4 * T + f] is not None:
                    continue
                for v in FACE_VERTICES[f]:
                    for k in range(1, self.arcs(T, f, v) + 1):
                        x, y = [u for u in FACE_VERTICES[f] if u != v]
                        ends = []
                        for other in (x, y):
                            e = EDGE_INDEX[(v, other)]
                            ends.append(self._global_point(T, e, v, k, weights))
                        arcs.append(tuple(ends))
        deg = {}
        for ends in arcs:
            for pt in ends:
                deg[pt] = deg.get(pt, 0) + 1
        if any(d != 2 for d in deg.values()):
            raise ValueError("boundary curve is not a union of circles")
        uf = UnionFind(deg.keys())
        for a, b in arcs:
            uf.union(a, b)
        return len(set(uf.find(x) for x in deg))

    def _global_point(self, T, e, v, k, weights):
        """Identify the k-th intersection point from vertex v on edge slot
        (T, e) as (edge class, position along the class orientation)."""
        sk = self.pair.skeleton
        slot = 6 * T + e
        rep = sk.edge_class_of[slot]
        w = weights[rep]
        a, _ = EDGE_VERTICES[e]
        i = k if v == a else w + 1 - k  # ascending position in the slot
        if sk.edge_sign[slot] < 0:
            i = w + 1 - i
        return (rep, i)


class SurfaceReport:
    def __init__(self, euler, connected, orientable, edge_weights,
                 graph_points, boundary_weight, vertex_link_of):
        self.euler = euler
        self.connected = connected
        self.orientable = orientable
        self.edge_weights = edge_weights
        self.graph_points = graph_points
        self.boundary_weight = boundary_weight
        self.vertex_link_of = vertex_link_of

    def is_closed(self):
        return self.boundary_weight == 0


def vertex_link(pair, vclass):
    """The normal surface made of one triangle at every corner of the
    given vertex class (primitive form)."""
    coords = [0] * (7 * pair.t)
    for s in pair.skeleton.vertex_slots[vclass]:
        coords[tri_index(s // 4, s % 4)] += 1
    g = 0
    for x in coords:
        g = gcd(g, x)
    coords = [x // g for x in coords]
    return NormalSurface(pair, coords,
                         require_closed=vclass not in
                         pair.skeleton.boundary_vertex_classes)


def is_admissible_sphere(surface):
    """Connected closed sphere meeting the graph in at most 3 points.

    Returns (verdict, reason)."""
    r = surface.analyze()
    if not r.is_closed():
        return False, "touches the boundary"
    if not r.connected:
        return False, "not connected"
    if r.euler != 2:
        return False, "not a sphere"
    if r.graph_points > 3:
        return False, "meets G in %d points" % r.graph_points
    return True, "admissible"
