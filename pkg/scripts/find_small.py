#!/usr/bin/env python3
"""
Exhaustive search over two-tetrahedron closed gluings.  Groups the valid
orientable triangulations by integer first homology and prints one
representative gluing table per group, for embedding in corpus.py.
"""

import sys
from itertools import permutations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from graphroots.pair import InputError, Pair
from graphroots.perms import FACE_VERTICES, invert
from graphroots.homology import first_homology
from graphroots.signature import iso_signature


def pairings():
    """All ways to match the 8 face slots into 4 unordered pairs."""
    slots = list(range(8))

    def rec(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for i in range(1, len(rest)):
            b = rest[i]
            for tail in rec(rest[1:i] + rest[i + 1:]):
                yield [(a, b)] + tail
    yield from rec(slots)


def main():
    found = {}
    sigs_seen = set()
    perms3 = list(permutations(range(3)))
    count_valid = 0
    for matching in pairings():
        if any(a == b for a, b in matching):
            continue
        for choice in range(6 ** 4):
            glu = [None] * 8
            c = choice
            ok = True
            entries = []
            for a, b in matching:
                if a == b:
                    ok = False
                    break
                p3 = perms3[c % 6]
                c //= 6
                T, f = divmod(a, 4)
                T2, f2 = divmod(b, 4)
                images = tuple(FACE_VERTICES[f2][i] for i in p3)
                perm = [None] * 4
                perm[f] = f2
                for v, img in zip(FACE_VERTICES[f], images):
                    perm[v] = img
                perm = tuple(perm)
                glu[a] = (T2, f2, perm)
                glu[b] = (T, f, invert(perm))
                entries.append((T, f, T2, f2, images))
            if not ok:
                continue
            try:
                pair = Pair(2, glu)
            except InputError:
                continue
            count_valid += 1
            sig = iso_signature(pair)
            if sig in sigs_seen:
                continue
            sigs_seen.add(sig)
            h1 = first_homology(pair)
            key = (h1[0], tuple(h1[1]))
            if key not in found:
                found[key] = (entries, sig)
    print("valid closed orientable 2-tet gluings:", count_valid)
    print("distinct signatures:", len(sigs_seen))
    for key in sorted(found):
        entries, sig = found[key]
        print()
        print("H1 free rank %d torsion %s" % key)
        print("  sig", sig)
        for e in entries:
            print("   ", e)


if __name__ == "__main__":
    main()
