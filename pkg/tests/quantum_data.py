"""Random quantum data at dims 2 (x) 2 built from set maps.

On group-like coalgebras k[X] the coalgebra maps are exactly the
linearizations of set maps, and on function algebras k^X the algebra maps
are exactly pullbacks of set maps, so every sample satisfies the standing
hypotheses of its kind; only the numbered conditions are left to chance.
"""

from __future__ import annotations

import random
from itertools import product

import numpy as np

from bicross.kernel import BasedSpace, unit_vector, zeros
from bicross.quantum import (
    AlgebraTensor,
    BialgebraTensor,
    BicocycleData,
    CdccData,
    CdcpData,
    dualize,
    grouplike_coalgebra,
    monoid_bialgebra,
)

X = ("e", "a")
S = ("1", "b")
MONOIDS = {
    "Z2": np.array([[0, 1], [1, 0]]),
    "idem": np.array([[0, 1], [1, 1]]),  # b*b = b
}


def set_map_tensor(fn, n_out: int, dims: tuple[int, int]) -> np.ndarray:
    t = zeros(dims + (n_out,))
    for i, j in product(range(dims[0]), range(dims[1])):
        t[i, j, fn[(i, j)]] = 1
    return t


def _free(rng: random.Random, fixed: dict, keys) -> dict:
    out = dict(fixed)
    for k in keys:
        if k not in out:
            out[k] = rng.randrange(2)
    return out


PAIRS = list(product(range(2), repeat=2))


def bicocycle_maps(rng: random.Random) -> dict:
    """Set maps with the normalizations; index 0 is e resp. 1."""
    vp = _free(rng, {(0, 0): 0, (0, 1): 1, (1, 0): 0}, PAIRS)  # varphi(h,x)
    ps = _free(rng, {(0, 0): 0, (0, 1): 0, (1, 0): 1}, PAIRS)  # psi(h,x)
    ph = _free(rng, {(0, 0): 0}, PAIRS)
    th = _free(rng, {(0, 0): 0}, PAIRS)
    mu = _free(rng, {(0, 0): 0}, PAIRS)
    ga = _free(rng, {(0, 0): 0}, PAIRS)
    return {"varphi": vp, "psi": ps, "phi": ph, "theta": th, "mu": mu, "gamma": ga}


def bicocycle_from_maps(maps: dict) -> BicocycleData:
    M, H = grouplike_coalgebra(X, 0), grouplike_coalgebra(S, 0)
    return BicocycleData(M, H, **{k: set_map_tensor(v, 2, (2, 2)) for k, v in maps.items()})


def set_level_product(maps: dict):
    """(x,h)(x',h') on X x S, straight from the group-like product formula."""
    vp, ps, ph, th, mu, ga = (maps[k] for k in ("varphi", "psi", "phi", "theta", "mu", "gamma"))

    def mul(p, q):
        (x, h), (y, k) = p, q
        a, b = vp[(h, y)], ps[(h, y)]
        return ph[(x, ph[(a, ga[(b, k)])])], mu[(mu[(th[(x, a)], b)], k)]

    return mul


def is_monoid(mul, elems, unit) -> bool:
    if any(mul(unit, p) != p or mul(p, unit) != p for p in elems):
        return False
    return all(mul(mul(p, q), r) == mul(p, mul(q, r)) for p, q, r in product(elems, repeat=3))


def random_bicocycle(rng: random.Random, valid_bias: float = 0.5, perturb: float = 0.25) -> BicocycleData:
    """Pure random, rejection-sampled valid, or a valid sample with one entry changed."""
    roll = rng.random()
    if roll >= valid_bias:
        return bicocycle_from_maps(bicocycle_maps(rng))
    elems = list(product(range(2), repeat=2))
    while True:
        maps = bicocycle_maps(rng)
        if is_monoid(set_level_product(maps), elems, (0, 0)):
            break
    if roll < valid_bias * perturb:
        name = rng.choice(["varphi", "psi", "phi", "theta", "mu", "gamma"])
        free = [k for k in PAIRS if k != (0, 0) and not (name in ("varphi", "psi") and 0 in k)]
        key = rng.choice(free)
        maps[name] = dict(maps[name])
        maps[name][key] ^= 1
    return bicocycle_from_maps(maps)


def cross_maps(rng: random.Random) -> dict:
    """Set maps (varphi, psi, phi, theta) for cdcp data, or (a, b, c, d) for cdcc data."""
    return {
        "monoid": rng.choice(sorted(MONOIDS)),
        "varphi": _free(rng, {(0, 0): 0, (0, 1): 1, (1, 0): 0}, PAIRS),
        "psi": _free(rng, {(0, 0): 0, (0, 1): 0, (1, 0): 1}, PAIRS),
        "phi": _free(rng, {}, PAIRS),
        "theta": _free(rng, {(0, 0): 0}, PAIRS),
    }


def cross_product(maps: dict):
    """(x,h)(y,k) = (phi(x, h|>y), theta(x, h|>y) psi(h,y) k) on X x S."""
    table = MONOIDS[maps["monoid"]]
    vp, ps, ph, th = (maps[k] for k in ("varphi", "psi", "phi", "theta"))

    def mul(p, q):
        (x, h), (y, k) = p, q
        a = vp[(h, y)]
        return ph[(x, a)], table[table[th[(x, a)], ps[(h, y)]], k]

    return mul


def random_cross_maps(rng: random.Random, valid_bias: float = 0.5) -> dict:
    if rng.random() >= valid_bias:
        return cross_maps(rng)
    elems = list(product(range(2), repeat=2))
    while True:
        maps = cross_maps(rng)
        if is_monoid(cross_product(maps), elems, (0, 0)):
            return maps


def cdcp_from_maps(maps: dict) -> CdcpData:
    H = monoid_bialgebra(MONOIDS[maps["monoid"]], 0, S)
    M = grouplike_coalgebra(X, 0)
    t = {k: set_map_tensor(maps[k], 2, (2, 2)) for k in ("varphi", "psi", "phi", "theta")}
    return CdcpData(M, H, **t)


def random_cdcp(rng: random.Random, valid_bias: float = 0.5) -> CdcpData:
    return cdcp_from_maps(random_cross_maps(rng, valid_bias))


def pullback_tensor(fn, n_src: int, out_dims: tuple[int, int]) -> np.ndarray:
    """Algebra map k^A -> k^{B x C} dual to a set map B x C -> A."""
    t = zeros((n_src,) + out_dims)
    for b, c in product(range(out_dims[0]), range(out_dims[1])):
        t[fn[(b, c)], b, c] = 1
    return t


def cdcc_from_maps(maps: dict) -> CdccData:
    """Function-algebra data: nabla, blackdown, delta, sigma pull back varphi, psi, phi, theta."""
    H = dualize(monoid_bialgebra(MONOIDS[maps["monoid"]], 0, S))
    space = BasedSpace(f"{x}*" for x in X)
    mul = zeros((2, 2, 2))
    for i in range(2):
        mul[i, i, i] = 1
    unit = zeros(2) + 1
    Mf = AlgebraTensor(space, mul, unit, unit_vector(2, 0))
    return CdccData(
        Mf, H,
        nabla=pullback_tensor(maps["varphi"], 2, (2, 2)),
        blackdown=pullback_tensor(maps["psi"], 2, (2, 2)),
        delta=pullback_tensor(maps["phi"], 2, (2, 2)),
        sigma=pullback_tensor(maps["theta"], 2, (2, 2)),
    )


def random_cdcc(rng: random.Random, valid_bias: float = 0.5) -> CdccData:
    return cdcc_from_maps(random_cross_maps(rng, valid_bias))
