"""Random BicocycleSumData at dims 2+2 with entries in {-2..2}.

About half the samples are coordinate splits of genuine four-dimensional
Lie algebras (basis permuted and signs flipped, which keeps the entries
small), optionally with one antisymmetric perturbation; the rest are
sparse random tensors.  Validity is decided independently by
:func:`is_lie`, a loop-level Jacobi and antisymmetry check.
"""

from fractions import Fraction
from itertools import product

import numpy as np

from bicross.kernel import BasedSpace, zeros
from bicross.lie import BicocycleSumData

MAPS = ("phi", "theta", "mu", "gamma", "varphi", "psi")
ALTERNATING = ("phi", "theta", "mu", "gamma")

# structure constants {(i, j): {k: c}} with i < j, entries in {-2..2}
FOUR_DIM = {
    "abelian": {},
    "sl2+k": {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}},
    "heis+k": {(0, 1): {2: 1}},
    "r2+r2": {(0, 1): {1: 1}, (2, 3): {3: 1}},
    "r2+k2": {(0, 1): {1: 1}},
    "filiform": {(0, 1): {2: 1}, (0, 2): {3: 1}},
    "sol+k": {(0, 1): {1: 1}, (0, 2): {2: -1}},
    "diag+k": {(0, 1): {1: 1}, (0, 2): {2: 1}},
    "sl2-tw": {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}, (3, 0): {0: 1}, (3, 1): {1: -1}},
}


def bracket_tensor(constants: dict, n: int = 4) -> np.ndarray:
    c = zeros((n, n, n))
    for (i, j), out in constants.items():
        for k, v in out.items():
            c[i, j, k] += Fraction(v)
            c[j, i, k] -= Fraction(v)
    return c


def is_lie(c: np.ndarray) -> bool:
    n = c.shape[0]
    for i, j in product(range(n), repeat=2):
        for k in range(n):
            if c[i, j, k] + c[j, i, k] != 0:
                return False
    for a, b, d in product(range(n), repeat=3):
        for out in range(n):
            s = 0
            for x, y, z in ((a, b, d), (b, d, a), (d, a, b)):
                s += sum(c[x, y, p] * c[p, z, out] for p in range(n))
            if s != 0:
                return False
    return True


def split_tensor(c: np.ndarray, dm: int = 2) -> dict:
    """The six blocks of a bracket on m + h with m the first dm coordinates."""
    m, h = slice(0, dm), slice(dm, None)
    return {
        "phi": c[m, m, m], "theta": c[m, m, h], "mu": c[h, h, h],
        "gamma": c[h, h, m], "varphi": c[h, m, m], "psi": c[h, m, h],
    }


def assemble(maps: dict, dm: int = 2, dh: int = 2) -> np.ndarray:
    """Bracket tensor of m + h written out from the six maps (the oracle side)."""
    n = dm + dh
    c = zeros((n, n, n))
    m, h = slice(0, dm), slice(dm, None)
    c[m, m, m], c[m, m, h] = maps["phi"], maps["theta"]
    c[h, h, h], c[h, h, m] = maps["mu"], maps["gamma"]
    c[h, m, m], c[h, m, h] = maps["varphi"], maps["psi"]
    c[m, h, m] = -maps["varphi"].transpose(1, 0, 2)
    c[m, h, h] = -maps["psi"].transpose(1, 0, 2)
    return c


def _from_algebra(rng) -> dict:
    name = rng.choice(sorted(FOUR_DIM))
    c = bracket_tensor(FOUR_DIM[name])
    perm = list(range(4))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(4)]
    # new basis vector a is signs[a] * old basis vector perm[a]
    out = zeros((4, 4, 4))
    inv = {p: a for a, p in enumerate(perm)}
    for i, j, k in product(range(4), repeat=3):
        if c[i, j, k]:
            a, b, d = inv[i], inv[j], inv[k]
            out[a, b, d] = c[i, j, k] * signs[a] * signs[b] * signs[d]
    maps = {k: v.copy() for k, v in split_tensor(out).items()}
    if rng.random() < 0.4:
        name = rng.choice(MAPS)
        idx = tuple(rng.randrange(2) for _ in range(3))
        if name in ALTERNATING and idx[0] == idx[1]:
            idx = (0, 1, idx[2])
        new = maps[name][idx] + rng.choice((1, -1))
        new = max(-2, min(2, new))
        maps[name][idx] = Fraction(new)
        if name in ALTERNATING:
            maps[name][idx[1], idx[0], idx[2]] = -Fraction(new)
    return maps


def _sparse(rng) -> dict:
    density = rng.choice((0.05, 0.1, 0.2))
    maps = {}
    for name in MAPS:
        a = zeros((2, 2, 2))
        for idx in np.ndindex(2, 2, 2):
            if rng.random() < density:
                a[idx] = Fraction(rng.randint(-2, 2))
        maps[name] = a
    if rng.random() < 0.7:
        for name in ALTERNATING:
            a = maps[name]
            for k in range(2):
                a[0, 0, k] = a[1, 1, k] = Fraction(0)
                a[1, 0, k] = -a[0, 1, k]
    return maps


M_SPACE, H_SPACE = BasedSpace(["x0", "x1"]), BasedSpace(["z0", "z1"])


def random_sum_data(rng) -> BicocycleSumData:
    maps = _from_algebra(rng) if rng.random() < 0.5 else _sparse(rng)
    return BicocycleSumData.from_arrays(M_SPACE, H_SPACE, **maps)


def maps_of(d: BicocycleSumData) -> dict:
    return {k: getattr(d, k).coeffs for k in MAPS}
