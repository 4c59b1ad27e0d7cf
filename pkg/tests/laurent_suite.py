"""Seeded random bounded complexes over Q[t, t^-1] for the coherence checks.

Each complex lives in indices 2, 1, 0 and is a direct sum of elementary
pieces (a lone R, R --f--> R with f unit / torsion / zero, and the Koszul
piece R -> R^2 -> R), followed by random monomial elementary basis changes.
Ranks stay <= 3 and differential entries keep degrees in [-2, 2].
"""

import random
from fractions import Fraction

from findom.complexes import FreeComplex, validate_complex
from findom.fields import QQ
from findom.matrix import Matrix
from findom.rings import LaurentRing

RING = LaurentRing(QQ)
DEG = (-2, 2)


def _poly(rng, lo, hi):
    return RING.scalar({k: Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))
                        for k in range(lo, hi + 1) if rng.random() < 0.7})


def _mono(rng):
    return RING.homogeneous(rng.randint(-1, 1), Fraction(rng.choice([-2, -1, 1, 2, 3])))


def _piece(rng):
    kind = rng.choice(["lone", "unit", "torsion", "torsion", "zero", "koszul"])
    top = rng.choice([1, 2]) if kind != "koszul" else 2
    if kind == "lone":
        return {top: 1}, {}
    if kind == "koszul":
        a, b = _poly(rng, -1, 1), _poly(rng, -1, 1)
        if not a and not b:
            a = RING.one()
        return {2: 1, 1: 2, 0: 1}, {2: [[a], [b]], 1: [[b, -a]]}
    if kind == "unit":
        f = _mono(rng)
    elif kind == "torsion":
        f = _poly(rng, -1, 1)
        if len(f.comps) < 2:
            f = f + RING.homogeneous(1, Fraction(1)) + RING.from_field(-2)
    else:
        f = RING.zero()
    return {top: 1, top - 1: 1}, {top: [[f]]}


def _direct_sum(pieces):
    ranks, offs = {}, []
    for r, _ in pieces:
        offs.append(dict(ranks))
        for n, k in r.items():
            ranks[n] = ranks.get(n, 0) + k
    zero = RING.zero()
    diffs = {n: [[zero] * ranks.get(n, 0) for _ in range(ranks.get(n - 1, 0))]
             for n in ranks if ranks.get(n - 1)}
    for (r, d), off in zip(pieces, offs):
        for n, rows in d.items():
            for i, row in enumerate(rows):
                for j, x in enumerate(row):
                    diffs[n][off.get(n - 1, 0) + i][off.get(n, 0) + j] = x
    return ranks, diffs


def _elementary(n, i, j, c):
    zero, one = RING.zero(), RING.one()
    return Matrix([[one if a == b else (c if (a, b) == (i, j) else zero) for b in range(n)]
                   for a in range(n)], n, zero)


def _in_range(C):
    for n in C.diffs:
        for _, _, x in C.d(n).entries():
            if x and (x.min_degree() < DEG[0] or x.max_degree() > DEG[1]):
                return False
    return True


def random_complex(seed):
    rng = random.Random("laurent-suite/%d" % seed)
    while True:
        pieces = []
        ranks = {}
        for _ in range(rng.randint(1, 3)):
            p = _piece(rng)
            if any(ranks.get(n, 0) + k > 3 for n, k in p[0].items()):
                continue
            pieces.append(p)
            for n, k in p[0].items():
                ranks[n] = ranks.get(n, 0) + k
        ranks, diffs = _direct_sum(pieces)
        C = FreeComplex(RING, ranks, {n: Matrix(rows, ranks[n], RING.zero())
                                     for n, rows in diffs.items()})
        # conjugate: d_n -> E_{n-1} d_n E_n^-1
        for _ in range(rng.randint(0, 3)):
            n = rng.choice([k for k in ranks if ranks[k] > 1] or [None])
            if n is None:
                break
            i, j = rng.sample(range(ranks[n]), 2)
            c = _mono(rng)
            E, Einv = _elementary(ranks[n], i, j, c), _elementary(ranks[n], i, j, -c)
            new = dict(C.diffs)
            if n in C.diffs:
                new[n] = C.d(n) @ Einv
            if n + 1 in C.diffs:
                new[n + 1] = E @ C.d(n + 1)
            C = FreeComplex(RING, ranks, new)
        if _in_range(C) and validate_complex(C):
            return C


def suite(count=50):
    return [random_complex(s) for s in range(count)]
