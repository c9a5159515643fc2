"""
Canonical isomorphism signatures for triangulated pairs.

Two Pairs produce the same signature exactly when they are related by a
relabeling of tetrahedra and vertices that matches gluings, marked edges,
colors and star flags.  The signature of a disconnected pair is the sorted
join of its component signatures.
"""

from .perms import (ALL_PERMS, EDGE_INDEX, EDGE_VERTICES, FACE_VERTICES,
                    PERM_INDEX, compose, invert)

_B36 = "0123456789abcdefghijklmnopqrstuvwxyz"


def _component_encoding(pair, tets, start, start_perm):
    """Breadth-first canonical encoding from one starting frame.

    Returns a tuple (gluing stream, mark stream, star stream) written in
    the canonical labels induced by the start choice.
    """
    glu = pair.gluings
    label = {start: (0, start_perm)}
    order = [(start, start_perm)]
    stream = []
    i = 0
    while i < len(order):
        T, rho = order[i]
        rho_inv = invert(rho)
        for cf in range(4):
            of = rho_inv[cf]
            g = glu[4 * T + of]
            if g is None:
                stream.append((-1, -1))
                continue
            T2, _, sigma = g
            if T2 not in label:
                mu = compose(rho, invert(sigma))
                label[T2] = (len(order), mu)
                order.append((T2, mu))
            idx, mu = label[T2]
            nu = compose(mu, compose(sigma, rho_inv))
            stream.append((idx, PERM_INDEX[nu]))
        i += 1
    if len(order) != len(tets):
        raise ValueError("component traversal incomplete")

    sk = pair.skeleton
    marks = []
    stars = []
    for T, rho in order:
        rho_inv = invert(rho)
        for ce in range(6):
            ca, cb = EDGE_VERTICES[ce]
            oe = EDGE_INDEX[(rho_inv[ca], rho_inv[cb])]
            rep = sk.edge_class_of[6 * T + oe]
            if rep not in pair.marks:
                marks.append(-1)
            else:
                color = pair.marks[rep]
                marks.append(0 if color is None else color)
        for cv in range(4):
            ov = rho_inv[cv]
            flag = pair.stars.get(sk.vertex_class_of[4 * T + ov])
            stars.append(0 if flag is None else (1 if flag == "clean" else 2))
    return (tuple(stream), tuple(marks), tuple(stars))


def _canonical_component(pair, tets):
    best = None
    for start in tets:
        for p in ALL_PERMS:
            enc = _component_encoding(pair, tets, start, p)
            if best is None or enc < best:
                best = enc
    return best


def _render(t, enc):
    stream, marks, stars = enc
    parts = ["t%d" % t]
    if t <= 36:
        toks = ["~~" if idx < 0 else _B36[idx] + _B36[perm]
                for idx, perm in stream]
        parts.append("".join(toks))
    else:
        parts.append(";".join("~" if idx < 0 else "%d.%d" % (idx, perm)
                              for idx, perm in stream))
    parts.append(",".join("." if m == -1 else ("u" if m == 0 else str(m))
                          for m in marks))
    parts.append("".join(str(s) for s in stars))
    return ":".join(parts)


def iso_signature(pair, decorated=True):
    """Canonical signature string; with decorated=False the marked graph
    and stars are ignored and only the triangulation is encoded."""
    target = pair if decorated else pair.bare_triangulation()
    parts = target.component_partition()
    sigs = []
    for tets in parts:
        t = len(tets)
        enc = _canonical_component(target, tets)
        sigs.append(_render(t, enc))
    return "+".join(sorted(sigs))
