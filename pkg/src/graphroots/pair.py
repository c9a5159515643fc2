"""
Triangulated pairs: a compact orientable 3-manifold given by tetrahedron
face gluings, together with a marked (optionally colored) edge-graph and
star vertices left behind by earlier compressions.

A pair is immutable after construction.  All rewriting operations build
new Pair values.
"""

from .perms import (EDGE_INDEX, EDGE_VERTICES, FACE_EDGES, FACE_VERTICES,
                    compose, invert, sign)


class InputError(ValueError):
    """Raised for malformed or invalid input documents."""


class UnionFind:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller representative for deterministic numbering
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra
        return ra

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        for members in out.values():
            members.sort()
        return out


class Skeleton:
    """Identified vertex and edge classes of a Pair, with incidence data.

    Class representatives are the smallest incident slot, so the numbering
    is deterministic and independent of input ordering.  Slots are encoded
    as corner = 4*tet + vertex and edge = 6*tet + edge_index.
    """

    def __init__(self, pair):
        t = pair.t
        self.pair = pair

        vert = UnionFind(range(4 * t))
        edge = UnionFind(range(6 * t))
        dedge = UnionFind(range(12 * t))  # 12*T + 2*e + dir, dir 0 ascending

        for T in range(t):
            for f in range(4):
                g = pair.gluings[4 * T + f]
                if g is None:
                    continue
                T2, f2, p = g
                for v in FACE_VERTICES[f]:
                    vert.union(4 * T + v, 4 * T2 + p[v])
                for a, b in ((x, y) for i, x in enumerate(FACE_VERTICES[f])
                             for y in FACE_VERTICES[f][i + 1:]):
                    e = EDGE_INDEX[(a, b)]
                    e2 = EDGE_INDEX[(p[a], p[b])]
                    edge.union(6 * T + e, 6 * T2 + e2)
                    # direction 0 runs from the lower to the higher vertex
                    flip = (p[a] > p[b]) != (a > b)
                    for d in (0, 1):
                        dedge.union(12 * T + 2 * e + d,
                                    12 * T2 + 2 * e2 + (d ^ flip))

        self.vertex_class_of = [vert.find(s) for s in range(4 * t)]
        self.edge_class_of = [edge.find(s) for s in range(6 * t)]
        self._dedge = dedge

        self.vertex_classes = sorted(set(self.vertex_class_of))
        self.edge_classes = sorted(set(self.edge_class_of))
        self.vertex_class_index = {r: i for i, r in enumerate(self.vertex_classes)}
        self.edge_class_index = {r: i for i, r in enumerate(self.edge_classes)}

        self.edge_slots = {}
        for s in range(6 * t):
            self.edge_slots.setdefault(self.edge_class_of[s], []).append(s)
        self.vertex_slots = {}
        for s in range(4 * t):
            self.vertex_slots.setdefault(self.vertex_class_of[s], []).append(s)

        # orientation of each edge slot relative to its class representative
        self.edge_dir_ok = True
        self.edge_sign = [0] * (6 * t)
        for rep, slots in self.edge_slots.items():
            rep_dir = dedge.find(2 * rep)
            for s in slots:
                d0, d1 = dedge.find(2 * s), dedge.find(2 * s + 1)
                if d0 == d1:
                    self.edge_dir_ok = False
                self.edge_sign[s] = 1 if d0 == rep_dir else -1

        # face classes: pairs under the gluing plus boundary singletons
        seen = set()
        self.face_classes = []
        self.boundary_faces = []
        for s in range(4 * t):
            if s in seen:
                continue
            g = pair.gluings[s]
            if g is None:
                self.face_classes.append((s,))
                self.boundary_faces.append(s)
            else:
                T2, f2, _ = g
                seen.add(4 * T2 + f2)
                self.face_classes.append((s, 4 * T2 + f2))
        self.face_class_rep = {}
        for fc in self.face_classes:
            for s in fc:
                self.face_class_rep[s] = fc[0]

        self.boundary_edge_classes = set()
        for T in range(t):
            for f in range(4):
                if pair.gluings[4 * T + f] is None:
                    for e in range(6):
                        a, b = EDGE_VERTICES[e]
                        if a != f and b != f:
                            self.boundary_edge_classes.add(
                                self.edge_class_of[6 * T + e])
        self.boundary_vertex_classes = set()
        for T in range(t):
            for f in range(4):
                if pair.gluings[4 * T + f] is None:
                    for v in FACE_VERTICES[f]:
                        self.boundary_vertex_classes.add(
                            self.vertex_class_of[4 * T + v])

        self._compute_links()

    def _compute_links(self):
        pair = self.pair
        t = pair.t
        # pieces of the vertex links: one triangle per corner slot, with
        # sides on the faces at the corner and corners on the edges at it
        lverts = UnionFind()
        ledges = UnionFind()
        for T in range(t):
            for v in range(4):
                for f in range(4):
                    if f != v:
                        ledges.add((T, v, f))
                for e in range(6):
                    a, b = EDGE_VERTICES[e]
                    if v in (a, b):
                        lverts.add((T, v, e))
        for T in range(t):
            for f in range(4):
                g = pair.gluings[4 * T + f]
                if g is None:
                    continue
                T2, f2, p = g
                for v in FACE_VERTICES[f]:
                    ledges.union((T, v, f), (T2, p[v], f2))
                for e in FACE_EDGES[f]:
                    a, b = EDGE_VERTICES[e]
                    e2 = EDGE_INDEX[(p[a], p[b])]
                    lverts.union((T, a, e), (T2, p[a], e2))
                    lverts.union((T, b, e), (T2, p[b], e2))

        lv_count = {}
        for rep in set(lverts.find(x) for x in lverts.parent):
            vclass = self.vertex_class_of[4 * rep[0] + rep[1]]
            lv_count[vclass] = lv_count.get(vclass, 0) + 1
        le_count = {}
        le_boundary = set()
        le_rep_of = {}
        for x in list(ledges.parent):
            le_rep_of[x] = ledges.find(x)
        for x, rep in le_rep_of.items():
            T, v, f = x
            if self.pair.gluings[4 * T + f] is None:
                le_boundary.add(rep)
        for rep in set(le_rep_of.values()):
            vclass = self.vertex_class_of[4 * rep[0] + rep[1]]
            le_count[vclass] = le_count.get(vclass, 0) + 1

        self.link_euler = {}
        self.link_has_boundary = {}
        for vclass, slots in self.vertex_slots.items():
            lf = len(slots)
            lv = lv_count.get(vclass, 0)
            le = le_count.get(vclass, 0)
            self.link_euler[vclass] = lv - le + lf
            self.link_has_boundary[vclass] = any(
                ledges.find(x) in le_boundary for x in le_rep_of
                if self.vertex_class_of[4 * x[0] + x[1]] == vclass)

    def counts(self):
        return (len(self.vertex_classes), len(self.edge_classes),
                len(self.face_classes), self.pair.t)


class Pair:
    """A triangulated pair: manifold, marked graph, and star vertices.

    gluings is a tuple of length 4t; entry 4*T+f is either None (boundary
    face) or (T2, f2, perm) where perm is the extended vertex bijection
    sending f to f2.  Marks are stored per edge class, stars per vertex
    class, both keyed by representative slot.
    """

    def __init__(self, t, gluings, marks=(), stars=(), validate=True):
        if t <= 0:
            raise InputError("tetrahedron count must be positive")
        self.t = t
        self.gluings = tuple(gluings)
        if len(self.gluings) != 4 * t:
            raise InputError("gluing table has wrong length")
        self._check_involution()
        self.skeleton = Skeleton(self)
        self.marks = self._resolve_marks(marks)
        self.stars = self._resolve_stars(stars)
        self._key = (self.t, self.gluings,
                     tuple(sorted(self.marks.items())),
                     tuple(sorted(self.stars.items())))
        if validate:
            self.validate()

    # -- construction helpers -------------------------------------------

    def _check_involution(self):
        for s, g in enumerate(self.gluings):
            if g is None:
                continue
            T2, f2, p = g
            T, f = divmod(s, 4)
            if not (0 <= T2 < self.t and 0 <= f2 < 4):
                raise InputError("gluing target out of range")
            if (T2, f2) == (T, f):
                raise InputError("fixed-point gluing")
            if p[f] != f2:
                raise InputError("gluing permutation does not map face to face")
            back = self.gluings[4 * T2 + f2]
            if back is None or back[0] != T or back[1] != f or back[2] != invert(p):
                raise InputError("gluing map is not involutive")

    def _resolve_marks(self, marks):
        out = {}
        for tet, e, color in marks:
            if not (0 <= tet < self.t and 0 <= e < 6):
                raise InputError("marked slot references a nonexistent tetrahedron or edge")
            if color is not None and color < 1:
                raise InputError("colors must be positive integers")
            rep = self.skeleton.edge_class_of[6 * tet + e]
            if rep in out and out[rep] != color:
                raise InputError("conflicting colors for one edge class")
            out[rep] = color
        return out

    def _resolve_stars(self, stars):
        out = {}
        for tet, v, flag in stars:
            if flag not in ("clean", "dirty"):
                raise InputError("star flag must be clean or dirty")
            rep = self.skeleton.vertex_class_of[4 * tet + v]
            if rep in out and out[rep] != flag:
                raise InputError("conflicting flags for one star")
            out[rep] = flag
        return out

    # -- validation ------------------------------------------------------

    def validate(self):
        sk = self.skeleton
        if not sk.edge_dir_ok:
            raise InputError("inconsistent vertex bijections around an edge class")
        for vclass in sk.vertex_classes:
            chi = sk.link_euler[vclass]
            if sk.link_has_boundary[vclass]:
                if chi != 1:
                    raise InputError("non-manifold vertex link (boundary, chi=%d)" % chi)
            else:
                if chi != 2:
                    raise InputError("non-manifold vertex link (closed, chi=%d)" % chi)
        if not self._orientable():
            raise InputError("triangulation is not orientable")
        for vclass, flag in self.stars.items():
            on_graph = vclass in self.graph_vertex_classes()
            if flag == "dirty" and not on_graph:
                raise InputError("dirty star does not lie on the graph")
            if flag == "clean" and on_graph:
                raise InputError("clean star lies on the graph")

    def _orientable(self):
        orient = [0] * self.t
        for start in range(self.t):
            if orient[start]:
                continue
            orient[start] = 1
            stack = [start]
            while stack:
                T = stack.pop()
                for f in range(4):
                    g = self.gluings[4 * T + f]
                    if g is None:
                        continue
                    T2 = g[0]
                    want = orient[T] if sign(g[2]) < 0 else -orient[T]
                    if orient[T2] == 0:
                        orient[T2] = want
                        stack.append(T2)
                    elif orient[T2] != want:
                        return False
        return True

    # -- basic invariants --------------------------------------------------

    def euler_characteristic(self):
        v, e, f, t = self.skeleton.counts()
        return v - e + f - t

    def is_closed(self):
        return not self.skeleton.boundary_faces

    def graph_vertex_classes(self):
        """Vertex classes incident to at least one marked edge."""
        sk = self.skeleton
        out = set()
        for rep in self.marks:
            for s in sk.edge_slots[rep]:
                T, e = divmod(s, 6)
                a, b = EDGE_VERTICES[e]
                out.add(sk.vertex_class_of[4 * T + a])
                out.add(sk.vertex_class_of[4 * T + b])
        return out

    def graph_valence(self, vclass):
        """Number of marked edge-ends at a vertex class (loops count twice)."""
        sk = self.skeleton
        count = 0
        for rep in self.marks:
            s = sk.edge_slots[rep][0]
            T, e = divmod(s, 6)
            a, b = EDGE_VERTICES[e]
            if sk.vertex_class_of[4 * T + a] == vclass:
                count += 1
            if sk.vertex_class_of[4 * T + b] == vclass:
                count += 1
        return count

    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, Pair) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    # -- relabeling and components ----------------------------------------

    def relabeled(self, tet_map, vertex_perms):
        """New Pair with tetrahedron T renamed tet_map[T] and its vertices
        renamed through vertex_perms[T]."""
        new_glu = [None] * (4 * self.t)
        for T in range(self.t):
            p = vertex_perms[T]
            for f in range(4):
                g = self.gluings[4 * T + f]
                if g is None:
                    continue
                T2, f2, q = g
                p2 = vertex_perms[T2]
                new_glu[4 * tet_map[T] + p[f]] = (
                    tet_map[T2], p2[f2], compose(p2, compose(q, invert(p))))
        marks = []
        for rep, color in self.marks.items():
            T, e = divmod(rep, 6)
            a, b = EDGE_VERTICES[e]
            p = vertex_perms[T]
            marks.append((tet_map[T], EDGE_INDEX[(p[a], p[b])], color))
        stars = []
        for rep, flag in self.stars.items():
            T, v = divmod(rep, 4)
            stars.append((tet_map[T], vertex_perms[T][v], flag))
        return Pair(self.t, new_glu, marks, stars, validate=False)

    def component_partition(self):
        """Partition of tetrahedra into connected components."""
        uf = UnionFind(range(self.t))
        for T in range(self.t):
            for f in range(4):
                g = self.gluings[4 * T + f]
                if g is not None:
                    uf.union(T, g[0])
        return sorted(uf.classes().values())

    def components(self):
        """Split into connected Pairs.  Returns a list of (pair, tet_map)
        where tet_map sends old tetrahedron indices to new ones."""
        parts = self.component_partition()
        if len(parts) == 1:
            return [(self, {T: T for T in range(self.t)})]
        out = []
        for tets in parts:
            tet_map = {T: i for i, T in enumerate(tets)}
            glu = []
            for T in tets:
                for f in range(4):
                    g = self.gluings[4 * T + f]
                    glu.append(None if g is None else
                               (tet_map[g[0]], g[1], g[2]))
            marks = []
            for rep, color in self.marks.items():
                T, e = divmod(rep, 6)
                if T in tet_map:
                    marks.append((tet_map[T], e, color))
            stars = []
            for rep, flag in self.stars.items():
                T, v = divmod(rep, 4)
                if T in tet_map:
                    stars.append((tet_map[T], v, flag))
            out.append((Pair(len(tets), glu, marks, stars, validate=False),
                        tet_map))
        return out

    def bare_triangulation(self):
        """Copy with all marks and stars dropped (the underlying manifold)."""
        return Pair(self.t, self.gluings, (), (), validate=False)

    def forget_colors(self):
        marks = [(rep // 6, rep % 6, None) for rep in self.marks]
        stars = [(rep // 4, rep % 4, flag) for rep, flag in self.stars.items()]
        return Pair(self.t, self.gluings, marks, stars, validate=False)


# -- document format ------------------------------------------------------

def parse_pair(text):
    """Parse the line-oriented input format into a validated Pair.

    Directives: ``tets N``, ``glue T F -> T' F' PQR``,
    ``mark T E [color C]``, ``star V clean|dirty``.  Comments start
    with '#'.
    """
    t = None
    glu = None
    marks = []
    star_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        try:
            if words[0] == "tets":
                if t is not None:
                    raise InputError("duplicate tets directive")
                t = int(words[1])
                if t <= 0:
                    raise InputError("tetrahedron count must be positive")
                glu = [None] * (4 * t)
            elif words[0] == "glue":
                if glu is None:
                    raise InputError("glue before tets")
                if len(words) != 7 or words[3] != "->":
                    raise InputError("malformed glue directive")
                T, f = int(words[1]), int(words[2])
                T2, f2 = int(words[4]), int(words[5])
                digits = words[6]
                if not (0 <= T < t and 0 <= T2 < t and 0 <= f < 4 and 0 <= f2 < 4):
                    raise InputError("glue index out of range")
                if len(digits) != 3 or not digits.isdigit():
                    raise InputError("malformed vertex image string")
                images = tuple(int(c) for c in digits)
                if len(set(images)) != 3 or any(x == f2 or x > 3 for x in images):
                    raise InputError("vertex images must be the three vertices of the target face")
                perm = [None] * 4
                perm[f] = f2
                for v, img in zip(FACE_VERTICES[f], images):
                    perm[v] = img
                perm = tuple(perm)
                if (T2, f2) == (T, f):
                    raise InputError("fixed-point gluing")
                for slot, val in ((4 * T + f, (T2, f2, perm)),
                                  (4 * T2 + f2, (T, f, invert(perm)))):
                    if glu[slot] is not None and glu[slot] != val:
                        raise InputError("conflicting gluings for one face")
                    glu[slot] = val
            elif words[0] == "mark":
                if t is None:
                    raise InputError("mark before tets")
                T, e = int(words[1]), int(words[2])
                color = None
                if len(words) == 5 and words[3] == "color":
                    color = int(words[4])
                elif len(words) != 3:
                    raise InputError("malformed mark directive")
                if not (0 <= T < t):
                    raise InputError("marked slot references a nonexistent tetrahedron")
                if not (0 <= e < 6):
                    raise InputError("marked edge index out of range")
                marks.append((T, e, color))
            elif words[0] == "star":
                if len(words) != 3:
                    raise InputError("malformed star directive")
                star_lines.append((int(words[1]), words[2]))
            else:
                raise InputError("unknown directive %r" % words[0])
        except InputError as err:
            raise InputError("line %d: %s" % (lineno, err)) from None
        except (ValueError, IndexError):
            raise InputError("line %d: malformed line" % lineno) from None
    if t is None:
        raise InputError("missing tets directive")

    pair = Pair(t, glu, marks, (), validate=True)
    if not star_lines:
        return pair

    classes = pair.skeleton.vertex_classes
    stars = []
    for idx, flag in star_lines:
        if not (0 <= idx < len(classes)):
            raise InputError("star refers to nonexistent vertex class %d" % idx)
        rep = classes[idx]
        stars.append((rep // 4, rep % 4, flag))
    # rebuild with stars so that the star invariants are validated
    marks2 = [(rep // 6, rep % 6, color) for rep, color in pair.marks.items()]
    return Pair(t, glu, marks2, stars, validate=True)


def write_pair(pair):
    """Render a Pair in the input format (inverse of parse_pair)."""
    lines = ["tets %d" % pair.t]
    done = set()
    for T in range(pair.t):
        for f in range(4):
            s = 4 * T + f
            g = pair.gluings[s]
            if g is None or s in done:
                continue
            T2, f2, p = g
            done.add(4 * T2 + f2)
            digits = "".join(str(p[v]) for v in FACE_VERTICES[f])
            lines.append("glue %d %d -> %d %d %s" % (T, f, T2, f2, digits))
    for rep in sorted(pair.marks):
        color = pair.marks[rep]
        T, e = divmod(rep, 6)
        if color is None:
            lines.append("mark %d %d" % (T, e))
        else:
            lines.append("mark %d %d color %d" % (T, e, color))
    classes = pair.skeleton.vertex_classes
    index = {rep: i for i, rep in enumerate(classes)}
    for rep in sorted(pair.stars):
        lines.append("star %d %s" % (index[rep], pair.stars[rep]))
    return "\n".join(lines) + "\n"
