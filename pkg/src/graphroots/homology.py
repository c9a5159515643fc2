"""
Simplicial chain complexes of identified triangulations, with exact ranks
over prime fields and integer Smith normal form for first homology.
"""

from fractions import Fraction
from math import gcd

from .perms import EDGE_INDEX, EDGE_VERTICES, FACE_VERTICES, sign3


def boundary_matrices(pair):
    """Integer boundary maps (d1, d2, d3) of the identified cell complex.

    Each cell class is oriented by its representative slot; incidence
    entries are computed against those reference orientations.
    """
    sk = pair.skeleton
    nv = len(sk.vertex_classes)
    ne = len(sk.edge_classes)
    nf = len(sk.face_classes)
    vi = sk.vertex_class_index
    ei = sk.edge_class_index

    d1 = [[0] * ne for _ in range(nv)]
    for col, rep in enumerate(sk.edge_classes):
        T, e = divmod(rep, 6)
        a, b = EDGE_VERTICES[e]
        d1[vi[sk.vertex_class_of[4 * T + b]]][col] += 1
        d1[vi[sk.vertex_class_of[4 * T + a]]][col] -= 1

    face_reps = [fc[0] for fc in sk.face_classes]
    fi = {rep: i for i, rep in enumerate(face_reps)}
    d2 = [[0] * nf for _ in range(ne)]
    for col, frep in enumerate(face_reps):
        T, f = divmod(frep, 4)
        a, b, c = FACE_VERTICES[f]
        # boundary of [a,b,c] is [b,c] - [a,c] + [a,b]; each edge is taken
        # with its ascending orientation, then compared to the class rep
        for (x, y), s in (((b, c), 1), ((a, c), -1), ((a, b), 1)):
            slot = 6 * T + EDGE_INDEX[(x, y)]
            d2[ei[sk.edge_class_of[slot]]][col] += s * sk.edge_sign[slot]

    d3 = [[0] * pair.t for _ in range(nf)]
    for T in range(pair.t):
        for f in range(4):
            s = (-1) ** f
            slot = 4 * T + f
            rep = sk.face_class_rep[slot]
            if rep != slot:
                # transport the orientation through the gluing
                T2, f2, p = pair.gluings[slot]
                imgs = tuple(p[v] for v in FACE_VERTICES[f])
                s *= sign3(imgs, FACE_VERTICES[f2])
            d3[fi[rep]][T] += s
    return d1, d2, d3


def rank_mod(matrix, p):
    """Rank of an integer matrix over GF(p)."""
    rows = [[x % p for x in row] for row in matrix]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def rank_exact(matrix):
    """Rank of an integer (or Fraction) matrix over the rationals."""
    rows = [[Fraction(x) for x in row] for row in matrix if any(row)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col]
        rows[rank] = [x / inv for x in rows[rank]]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def betti1_mod(pair, p):
    """dim over GF(p) of the first homology of the underlying manifold."""
    d1, d2, _ = boundary_matrices(pair)
    ne = len(pair.skeleton.edge_classes)
    return (ne - rank_mod(d1, p)) - rank_mod(d2, p)


def betti1_z2(pair):
    return betti1_mod(pair, 2)


def smith_invariants(matrix):
    """Nonzero diagonal entries of the Smith normal form of an integer
    matrix, each positive, in divisibility order."""
    m = [list(row) for row in matrix]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    invariants = []
    top = 0
    while True:
        pr = pc = None
        best = None
        for r in range(top, nr):
            for c in range(top, nc):
                if m[r][c] and (best is None or abs(m[r][c]) < best):
                    best, pr, pc = abs(m[r][c]), r, c
        if best is None:
            break
        m[top], m[pr] = m[pr], m[top]
        for row in m:
            row[top], row[pc] = row[pc], row[top]
        again = True
        while again:
            again = False
            for r in range(top + 1, nr):
                if m[r][top]:
                    q = m[r][top] // m[top][top]
                    for c in range(top, nc):
                        m[r][c] -= q * m[top][c]
                    if m[r][top]:
                        m[top], m[r] = m[r], m[top]
                        again = True
            for c in range(top + 1, nc):
                if m[top][c]:
                    q = m[top][c] // m[top][top]
                    for r in range(top, nr):
                        m[r][c] -= q * m[r][top]
                    if m[top][c]:
                        for row in m:
                            row[top], row[c] = row[c], row[top]
                        again = True
        invariants.append(abs(m[top][top]))
        top += 1
        if top >= nr or top >= nc:
            break
    # enforce divisibility
    for i in range(len(invariants)):
        for j in range(i + 1, len(invariants)):
            a, b = invariants[i], invariants[j]
            g = gcd(a, b)
            invariants[i], invariants[j] = g, a * b // g
    return invariants


def first_homology(pair):
    """H1 of the underlying manifold as (free rank, [torsion orders > 1])."""
    d1, d2, _ = boundary_matrices(pair)
    ne = len(pair.skeleton.edge_classes)
    ker = ne - rank_exact(d1)
    inv = smith_invariants(d2) if any(any(r) for r in d2) else []
    image = len(inv)
    torsion = sorted(x for x in inv if x > 1)
    return ker - image, torsion
