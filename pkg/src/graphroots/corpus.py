"""
Built-in constructions: small closed manifolds, marked graphs on them,
and connected sums.  These back the shipped corpus files and the tests.
"""

from .pair import InputError, Pair
from .perms import EDGE_INDEX, FACE_VERTICES, invert, sign


class Builder:
    """Accumulates face gluings, then emits a Pair."""

    def __init__(self, t):
        self.t = t
        self.glu = [None] * (4 * t)
        self.marks = []
        self.stars = []

    def glue(self, T, f, T2, f2, images):
        """Glue face f of T to face f2 of T2; images gives the targets of
        the ascending vertices of face f."""
        perm = [None] * 4
        perm[f] = f2
        for v, img in zip(FACE_VERTICES[f], images):
            perm[v] = img
        perm = tuple(perm)
        self.glu[4 * T + f] = (T2, f2, perm)
        self.glu[4 * T2 + f2] = (T, f, invert(perm))

    def mark(self, T, e, color=None):
        self.marks.append((T, e, color))

    def pair(self):
        return Pair(self.t, self.glu, self.marks, self.stars)


def boundary_4_simplex(marks=()):
    """The five-tetrahedron boundary of the 4-simplex, a 3-sphere.

    Tetrahedron i spans the global vertices {0..4} minus {i}; marks is a
    list of (global vertex pair, color) to put on the graph.
    """
    verts = [tuple(v for v in range(5) if v != i) for i in range(5)]
    b = Builder(5)
    for i in range(5):
        for j in range(i + 1, 5):
            shared = [v for v in range(5) if v not in (i, j)]
            fi = verts[i].index(j)  # face of tet i opposite local j
            fj = verts[j].index(i)
            images = tuple(verts[j].index(g) for g in
                           (verts[i][x] for x in FACE_VERTICES[fi]))
            b.glue(i, fi, j, fj, images)
    for (ga, gb), color in marks:
        # mark the edge on one tetrahedron containing both endpoints
        for i in range(5):
            if i not in (ga, gb):
                la, lb = verts[i].index(ga), verts[i].index(gb)
                b.mark(i, EDGE_INDEX[(la, lb)], color)
                break
    return b.pair()


def s3_unknot(colors=(None, None, None)):
    """(S^3, unknotted circle): the triangle 0-1-2 in the 4-simplex boundary."""
    return boundary_4_simplex(marks=[((0, 1), colors[0]),
                                     ((0, 2), colors[1]),
                                     ((1, 2), colors[2])])


def s3_theta(colors=(None,) * 5):
    """(S^3, unknotted theta): vertices 0 and 1 joined by the edge 01 and
    the length-two paths through 2 and through 3."""
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]
    return boundary_4_simplex(marks=list(zip(edges, colors)))


def s3_arc():
    """(S^3, simple arc): the path 1-0-2 in the 4-simplex boundary."""
    return boundary_4_simplex(marks=[((0, 1), None), ((0, 2), None)])


def double_tet_s3():
    """Two tetrahedra glued along all four faces by the identity maps."""
    b = Builder(2)
    for f in range(4):
        b.glue(0, f, 1, f, FACE_VERTICES[f])
    return b.pair()


# Small closed manifolds found by exhaustive search over two-tetrahedron
# gluings (scripts/find_small.py), certified by integer first homology:
# rp3 has H1 = Z/2, lens_3_1 has H1 = Z/3, s2xs1 has H1 = Z.
_TWO_TET_TABLES = {
    "rp3": (
        (0, 0, 0, 1, (3, 0, 2)),
        (0, 2, 1, 0, (3, 1, 2)),
        (0, 3, 1, 1, (0, 2, 3)),
        (1, 2, 1, 3, (0, 1, 2)),
    ),
    "lens_3_1": (
        (0, 0, 0, 1, (2, 3, 0)),
        (0, 2, 1, 0, (2, 3, 1)),
        (0, 3, 1, 1, (2, 3, 0)),
        (1, 2, 1, 3, (0, 1, 2)),
    ),
    "s2xs1": (
        (0, 0, 0, 1, (2, 3, 0)),
        (0, 2, 1, 0, (2, 3, 1)),
        (0, 3, 1, 1, (2, 3, 0)),
        (1, 2, 1, 3, (1, 2, 0)),
    ),
}


def _from_table(name):
    entries = _TWO_TET_TABLES[name]
    b = Builder(2)
    for T, f, T2, f2, images in entries:
        b.glue(T, f, T2, f2, images)
    return b.pair()


def rp3():
    return _from_table("rp3")


def lens_3_1():
    return _from_table("lens_3_1")


def s2xs1():
    return _from_table("s2xs1")
