#!/usr/bin/env python3
"""Generate the boundary complex of the 600-cell as a facet list.

Vertices are the 120 unit quaternions of the binary icosahedral group,
with coordinates in Q(sqrt 5): each coordinate is (a + b*sqrt(5))/4 for
integers a, b. Two vertices are joined by an edge when their inner
product equals phi/2 = (1 + sqrt(5))/4; facets are the 4-cliques of the
edge graph. All arithmetic is exact.
"""

import itertools
from fractions import Fraction


class Q5:
    """a + b*sqrt(5) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, o):
        return Q5(self.a + o.a, self.b + o.b)

    def __mul__(self, o):
        return Q5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    def __eq__(self, o):
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))


HALF = Fraction(1, 2)
PHI = Q5(HALF, HALF)            # (1 + sqrt 5) / 2
PHI_INV = Q5(-HALF, HALF)       # (sqrt 5 - 1) / 2
ZERO = Q5(0)
ONE = Q5(1)


def even_permutations(items):
    perms = []
    for p in itertools.permutations(range(len(items))):
        inversions = sum(
            1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]
        )
        if inversions % 2 == 0:
            perms.append(tuple(items[i] for i in p))
    return perms


def vertices():
    vs = set()
    # 8 unit vectors
    for i in range(4):
        for s in (1, -1):
            v = [ZERO] * 4
            v[i] = Q5(s)
            vs.add(tuple(v))
    # 16 half vectors
    for signs in itertools.product((1, -1), repeat=4):
        vs.add(tuple(Q5(Fraction(s, 2)) for s in signs))
    # 96 from even permutations of (phi, 1, 1/phi, 0) / 2
    base = [PHI, ONE, PHI_INV, ZERO]
    for perm in even_permutations(base):
        for signs in itertools.product((1, -1), repeat=3):
            it = iter(signs)
            v = []
            for x in perm:
                if x == ZERO:
                    v.append(ZERO)
                else:
                    s = next(it)
                    v.append(x * Q5(Fraction(s, 2)))
            vs.add(tuple(v))
    return sorted(vs, key=lambda v: [(c.a, c.b) for c in v])


def main():
    vs = vertices()
    assert len(vs) == 120, len(vs)
    half_phi = PHI * Q5(HALF)  # inner product threshold for edges
    n = len(vs)
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ip = ZERO
            for a, b in zip(vs[i], vs[j]):
                ip = ip + a * b
            if ip == half_phi:
                adj[i].add(j)
                adj[j].add(i)
    edges = sum(len(a) for a in adj) // 2
    assert edges == 720, edges
    facets = []
    for i in range(n):
        for j in sorted(adj[i]):
            if j < i:
                continue
            common_ij = sorted(adj[i] & adj[j])
            for k in common_ij:
                if k < j:
                    continue
                for l in sorted(adj[i] & adj[j] & adj[k]):
                    if l > k:
                        facets.append((i, j, k, l))
    assert len(facets) == 600, len(facets)
    with open("fixtures/cell600.txt", "w") as fh:
        fh.write("# Boundary complex of the 600-cell: 120 vertices, 600 tetrahedra.\n")
        for f in facets:
            fh.write(" ".join(map(str, f)) + "\n")


if __name__ == "__main__":
    main()
