"""
Permutations of {0,1,2,3} and the fixed combinatorial tables for tetrahedra.

Conventions used throughout the package:
  * face i of a tetrahedron is the face opposite vertex i;
  * edge indices 0..5 correspond to the vertex pairs
    (0,1), (0,2), (0,3), (1,2), (1,3), (2,3);
  * quadrilateral types 0..2 separate the vertex pairs
    {0,1}|{2,3}, {0,2}|{1,3}, {0,3}|{1,2}.
"""

from itertools import permutations

# All 24 permutations of {0,1,2,3} as tuples, in lexicographic order.
ALL_PERMS = tuple(permutations(range(4)))
PERM_INDEX = {p: i for i, p in enumerate(ALL_PERMS)}

EDGE_VERTICES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {pair: e for e, pair in enumerate(EDGE_VERTICES)}
for (a, b), e in list(EDGE_INDEX.items()):
    EDGE_INDEX[(b, a)] = e

# Vertices of face f, ascending.  Face f is opposite vertex f.
FACE_VERTICES = tuple(tuple(v for v in range(4) if v != f) for f in range(4))

# Edges contained in face f.
FACE_EDGES = tuple(
    tuple(EDGE_INDEX[(a, b)] for a, b in
          ((FACE_VERTICES[f][0], FACE_VERTICES[f][1]),
           (FACE_VERTICES[f][0], FACE_VERTICES[f][2]),
           (FACE_VERTICES[f][1], FACE_VERTICES[f][2])))
    for f in range(4))

# The two edges avoided by quad type q: edge (0, q+1) and its opposite.
QUAD_AVOIDED_EDGES = ((0, 5), (1, 4), (2, 3))

# quad_type_for_pair[e] = the quad type whose partition pairs the endpoints
# of edge e (equivalently, the type avoiding edge e).
QUAD_TYPE_FOR_PAIR = (0, 1, 2, 2, 1, 0)


def quad_meets_edge(q, e):
    return e not in QUAD_AVOIDED_EDGES[q]


def quad_arc_vertex(q, f):
    """Vertex cut off by the arc of a type-q quad inside face f.

    The quad of type q meets face f in one normal arc; that arc separates
    the partner of f in the quad's vertex partition from the other two
    vertices of the face.
    """
    a, b = EDGE_VERTICES[QUAD_AVOIDED_EDGES[q][0]]
    c, d = EDGE_VERTICES[QUAD_AVOIDED_EDGES[q][1]]
    for x, y in ((a, b), (b, a), (c, d), (d, c)):
        if x == f:
            return y
    raise ValueError("face index out of range")


def arc_quad_type(f, v):
    """Quad type whose arc in face f cuts off vertex v (v a vertex of f)."""
    return QUAD_TYPE_FOR_PAIR[EDGE_INDEX[(f, v)]]


def compose(p, q):
    """Composition p after q: (p*q)(x) = p(q(x))."""
    return (p[q[0]], p[q[1]], p[q[2]], p[q[3]])


def invert(p):
    inv = [0] * 4
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def sign(p):
    """Parity of a permutation of {0,1,2,3}: +1 even, -1 odd."""
    s = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                s = -s
    return s


def sign3(triple_from, triple_to):
    """Parity of the bijection sending one ordered triple onto another."""
    pos = [triple_to.index(x) for x in triple_from]
    s = 1
    for i in range(3):
        for j in range(i + 1, 3):
            if pos[i] > pos[j]:
                s = -s
    return s


IDENTITY = (0, 1, 2, 3)
