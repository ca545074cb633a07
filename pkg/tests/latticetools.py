"""Brute-force ground truth for quotient groups Z^n / L.

Test presentations are produced from a known diagonal lattice
span{d_i e_i} transformed by a random unimodular matrix U whose inverse is
tracked alongside.  Membership of v in the transformed lattice is then the
componentwise divisibility of v U^{-1}, which is the independent oracle the
normal-form implementation is checked against.
"""

from __future__ import annotations

import itertools
from random import Random


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, m, k = len(a), len(b[0]), len(b)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def vec_mat(v: list[int], m: list[list[int]]) -> list[int]:
    return [sum(v[t] * m[t][j] for t in range(len(v))) for j in range(len(m[0]))]


def random_unimodular(n: int, rng: Random, steps: int = 8) -> tuple[list[list[int]], list[list[int]]]:
    """A random unimodular U with its inverse, via elementary shears and swaps."""
    u = identity(n)
    u_inv = identity(n)
    for _ in range(steps):
        kind = rng.choice(["shear", "swap", "neg"])
        if kind == "shear" and n >= 2:
            i, j = rng.sample(range(n), 2)
            c = rng.choice([-2, -1, 1, 2])
            shear = identity(n)
            shear[i][j] = c
            inv = identity(n)
            inv[i][j] = -c
            u = mat_mul(shear, u)
            u_inv = mat_mul(u_inv, inv)
        elif kind == "swap" and n >= 2:
            i, j = rng.sample(range(n), 2)
            perm = identity(n)
            perm[i][i] = perm[j][j] = 0
            perm[i][j] = perm[j][i] = 1
            u = mat_mul(perm, u)
            u_inv = mat_mul(u_inv, perm)
        else:
            i = rng.randrange(n)
            flip = identity(n)
            flip[i][i] = -1
            u = mat_mul(flip, u)
            u_inv = mat_mul(u_inv, flip)
    return u, u_inv


class LatticePresentation:
    """A presentation of Z^n / L with ground-truth equality."""

    def __init__(self, torsion: list[int], free_rank: int, rng: Random):
        self.torsion = list(torsion)
        self.free_rank = free_rank
        self.n = len(torsion) + free_rank
        self.u, self.u_inv = random_unimodular(self.n, rng)
        # relation rows: d_i times the i-th row of U
        self.relation_rows = [
            [d * x for x in self.u[i]] for i, d in enumerate(self.torsion)
        ]

    def in_lattice(self, v: list[int]) -> bool:
        w = vec_mat(v, self.u_inv)
        for i, d in enumerate(self.torsion):
            if w[i] % d != 0:
                return False
        return all(w[i] == 0 for i in range(len(self.torsion), self.n))

    def equivalent(self, v1: list[int], v2: list[int]) -> bool:
        return self.in_lattice([a - b for a, b in zip(v1, v2)])

    def enumerate_representatives(self, free_bound: int = 2) -> list[list[int]]:
        """Pairwise inequivalent elements: the torsion box times a free box, pushed through U."""
        boxes = [range(d) for d in self.torsion]
        boxes += [range(-free_bound, free_bound + 1)] * self.free_rank
        return [vec_mat(list(w), self.u) for w in itertools.product(*boxes)]

    def random_lattice_element(self, rng: Random, bound: int = 3) -> list[int]:
        coeffs = [rng.randint(-bound, bound) for _ in self.torsion]
        v = [0] * self.n
        for c, row in zip(coeffs, self.relation_rows):
            v = [a + c * b for a, b in zip(v, row)]
        return v


def presentation_catalog(seed: int = 97) -> list[LatticePresentation]:
    """Fixed catalog spanning torsion orders up to 64 and free rank up to 2."""
    rng = Random(seed)
    shapes = [
        ([2], 0),
        ([2], 1),
        ([3], 2),
        ([4], 1),
        ([2, 2], 0),
        ([2, 2], 1),
        ([2, 4], 2),
        ([6], 1),
        ([8], 0),
        ([2, 3], 1),
        ([4, 4], 1),
        ([2, 2, 2], 1),
        ([3, 3], 2),
        ([64], 0),
        ([2, 32], 0),
        ([2, 2, 2, 8], 0),
    ]
    return [LatticePresentation(t, r, rng) for t, r in shapes]
