"""Small exact examples with known outcomes.

Every entry here doubles as a regression case: the test suite checks
each fixture against the expectation recorded in :data:`CATALOG`.
"""

from __future__ import annotations


from fractions import Fraction

from typing import Callable

import numpy as np

from .kernel import BasedSpace, SubspacePair, identity, zeros
from .lie import BicocycleSumData, GradedLieData, LieAlgebra, decompose

# --------------------------------------------------------------------------
# Lie algebras


def abelian(n: int = 3) -> LieAlgebra:
    return LieAlgebra.from_structure_constants([f"a{i}" for i in range(n)], {})


def sl2() -> LieAlgebra:
    """Basis (e, f, h) with [e,f]=h, [h,e]=2e, [h,f]=-2f."""
    return LieAlgebra.from_structure_constants(
        ["e", "f", "h"],
        {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}},
    )


def heisenberg3() -> LieAlgebra:
    """Basis (p, q, c) with [p,q]=c central."""
    return LieAlgebra.from_structure_constants(["p", "q", "c"], {("p", "q"): {"c": 1}})


def nonabelian2() -> LieAlgebra:
    """Basis (a, b) with [a,b]=b."""
    return LieAlgebra.from_structure_constants(["a", "b"], {("a", "b"): {"b": 1}})


def lie_splits(name: str) -> list[SubspacePair]:
    """At least two complementary pairs per algebra; the last one is never coordinate-aligned."""
    if name == "abelian3":
        sp = abelian(3).space
        return [
            SubspacePair.from_vectors(sp, [[1, 0, 0]], [[0, 1, 0], [0, 0, 1]]),
            SubspacePair.from_vectors(sp, [[1, 0, 0], [0, 1, 0]], [[0, 0, 1]]),
            SubspacePair.from_vectors(sp, [[1, 1, 0], [0, 1, 1]], [[1, 0, 1]]),
        ]
    if name == "sl2":
        sp = sl2().space
        return [
            SubspacePair.from_vectors(sp, [[1, 0, 0], [0, 1, 0]], [[0, 0, 1]], ("e", "f"), ("h",)),
            SubspacePair.from_vectors(sp, [[0, 0, 1]], [[1, 0, 0], [0, 1, 0]]),
            SubspacePair.from_vectors(sp, [[1, 1, 0], [0, 0, 1]], [[1, -1, 1]]),
        ]
    if name == "heisenberg3":
        sp = heisenberg3().space
        return [
            SubspacePair.from_vectors(sp, [[1, 0, 0], [0, 1, 0]], [[0, 0, 1]]),
            SubspacePair.from_vectors(sp, [[1, 0, 0]], [[0, 1, 0], [0, 0, 1]]),
            SubspacePair.from_vectors(sp, [[1, 0, 1], [0, 1, 0]], [[1, 1, 2]]),
        ]
    if name == "nonabelian2":
        sp = nonabelian2().space
        return [
            SubspacePair.from_vectors(sp, [[1, 0]], [[0, 1]]),
            SubspacePair.from_vectors(sp, [[0, 1]], [[1, 0]]),
            SubspacePair.from_vectors(sp, [[1, 1]], [[0, 1]]),
        ]
    raise KeyError(name)


LIE_ALGEBRAS: dict[str, Callable[[], LieAlgebra]] = {
    "abelian3": lambda: abelian(3),
    "sl2": sl2,
    "heisenberg3": heisenberg3,
    "nonabelian2": nonabelian2,
}


def direct_sum_data(A: LieAlgebra, B: LieAlgebra) -> BicocycleSumData:
    """m = A, h = B with only phi and mu nonzero."""
    m = A.space
    if set(m.basis_labels) & set(B.space.basis_labels):
        m = BasedSpace(f"{s}'" for s in m.basis_labels)
    return BicocycleSumData.from_arrays(m, B.space, phi=A.bracket.coeffs, mu=B.bracket.coeffs)


def sl2_split() -> tuple[LieAlgebra, SubspacePair, BicocycleSumData]:
    L = sl2()
    pair = lie_splits("sl2")[0]
    return L, pair, decompose(L, pair)


# --------------------------------------------------------------------------
# W1: z_i, i >= -1, with [z_i, z_j] = (j - i) z_{i+j}
#
# m = span{z_l : l = 0, 1 mod 4}, h = span{z_l : l = 4k-1 or 4k+2}.  The maps
# below are transcribed case by case from the closed-form list; only the
# bracket function uses the (j - i) formula, so the two can be compared.


def _w1_in_m(i: int) -> bool:
    return i >= 0 and i % 4 in (0, 1)


def _w1_bracket(i: int, j: int):
    return (j - i, i + j)


def _neg(hit):
    return None if hit is None else (-hit[0], hit[1])


def _w1_phi(i, j):
    ri, rj = i % 4, j % 4
    if ri == 0 and rj == 0:
        k, t = i // 4, j // 4
        return (4 * (t - k), 4 * (k + t))
    if ri == 0 and rj == 1:
        k, t = i // 4, (j - 1) // 4
        return (4 * (t - k) + 1, 4 * (k + t) + 1)
    if ri == 1 and rj == 0:
        return _neg(_w1_phi(j, i))
    return None


def _w1_theta(i, j):
    if i % 4 == 1 and j % 4 == 1:
        k, t = (i - 1) // 4, (j - 1) // 4
        return (4 * (t - k), 4 * (k + t) + 2)
    return None


def _w1_mu(i, j):
    if i % 4 == 3 and j % 4 == 3:
        k, t = (i + 1) // 4, (j + 1) // 4
        if k == 0 and t == 0:
            return None
        return (4 * (t - k), 4 * (k + t - 1) + 2)
    return None


def _w1_gamma(i, j):
    ri, rj = i % 4, j % 4
    if ri == 3 and rj == 2:
        k, t = (i + 1) // 4, (j - 2) // 4
        return (4 * (t - k) + 3, 4 * (k + t) + 1)
    if ri == 2 and rj == 3:
        return _neg(_w1_gamma(j, i))
    if ri == 2 and rj == 2:
        k, t = (i - 2) // 4, (j - 2) // 4
        return (4 * (t - k), 4 * (k + t + 1))
    return None


def _w1_varphi(i, j):
    if i % 4 == 3 and j % 4 == 1:
        k, t = (i + 1) // 4, (j - 1) // 4
        return (4 * (t - k) + 2, 4 * (t + k))
    return None


def _w1_psi(i, j):
    ri, rj = i % 4, j % 4
    if ri == 3 and rj == 0:
        k, t = (i + 1) // 4, j // 4
        return (4 * (t - k) + 1, 4 * (t + k) - 1)
    if ri == 2 and rj == 0:
        k, t = (i - 2) // 4, j // 4
        return (4 * (t - k) - 2, 4 * (t + k) + 2)
    if ri == 2 and rj == 1:
        k, t = (i - 2) // 4, (j - 1) // 4
        return (4 * (t - k) - 1, 4 * (t + k + 1) - 1)
    return None


def w1_graded() -> GradedLieData:
    return GradedLieData(
        name="w1",
        lo=-1,
        in_m=_w1_in_m,
        bracket_fn=_w1_bracket,
        phi=_w1_phi,
        theta=_w1_theta,
        mu=_w1_mu,
        gamma=_w1_gamma,
        varphi=_w1_varphi,
        psi=_w1_psi,
    )


GRADED = {"w1": w1_graded}


# --------------------------------------------------------------------------
# finite groups

from .group import BicocycleGroupData, FiniteGroup, cyclic, direct_product, factor_group  # noqa: E402


def _cycle_label(p: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        c, i = [], start
        while i not in seen:
            seen.add(i)
            c.append(str(i + 1))
            i = p[i]
        cycles.append("(" + "".join(c) + ")")
    return "".join(cycles) or "e"


def symmetric3() -> FiniteGroup:
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (2, 1, 0), (0, 2, 1)]
    # (a b)(i) = a(b(i)): apply b first
    g = FiniteGroup.from_operation(perms, lambda a, b: tuple(a[b[i]] for i in range(3)), perms[0])
    return g.relabel([_cycle_label(p) for p in perms])


def dihedral4() -> FiniteGroup:
    """Elements r^a s^f with s r s = r^-1."""
    elems = [(a, f) for f in (0, 1) for a in range(4)]
    op = lambda x, y: ((x[0] + (-1) ** x[1] * y[0]) % 4, (x[1] + y[1]) % 2)
    names = {0: "", 1: "r", 2: "r2", 3: "r3"}
    labels = [(names[a] + ("s" if f else "")) or "1" for a, f in elems]
    return FiniteGroup.from_operation(elems, op, (0, 0)).relabel(labels)


_QUAT = {  # unit products: (sign, unit)
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion8() -> FiniteGroup:
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]

    def op(a, b):
        s, u = _QUAT[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    labels = [("-" if s < 0 else "") + u for s, u in elems]
    return FiniteGroup.from_operation(elems, op, (1, "1")).relabel(labels)


GROUPS: dict[str, Callable[[], FiniteGroup]] = {
    "Z4": lambda: cyclic(4),
    "Z6": lambda: cyclic(6),
    "S3": symmetric3,
    "D4": dihedral4,
    "Q8": quaternion8,
}


def z4_group_split():
    G = cyclic(4)
    subsets = (["0", "2"], ["0", "1"])
    return G, subsets, factor_group(G, *subsets)


def s3_split():
    G = symmetric3()
    subsets = (["e", "(123)", "(132)"], ["e", "(12)"])
    return G, subsets, factor_group(G, *subsets)


def q8_split():
    G = quaternion8()
    subsets = (["1", "-1", "i", "-i"], ["1", "j"])
    return G, subsets, factor_group(G, *subsets)


def z2xz3_split():
    G = direct_product(cyclic(2), cyclic(3))
    subsets = (["(0,0)", "(1,0)"], ["(0,0)", "(0,1)", "(0,2)"])
    return G, subsets, factor_group(G, *subsets)


# --------------------------------------------------------------------------
# bialgebras

from .quantum import (  # noqa: E402
    AlgebraTensor,
    BialgebraTensor,
    BicocycleData,
    CdccData,
    CdcpData,
    CoalgebraTensor,
    Factorization,
    cdcc_from_cdcp,
    cdcp_from_bicocycle,
    factorize_bialgebra,
    group_bialgebra,
    grouplike_coalgebra,
    induced_subcoalgebra,
    monoid_bialgebra,
    tensor_product_bialgebra,
)


def sweedler_h4() -> BialgebraTensor:
    """Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx, Delta x = x(x)1 + g(x)x."""
    idx = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}  # g^a x^b
    mul = zeros((4, 4, 4))
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b + d < 2:
                mul[i, j, idx[((a + c) % 2, b + d)]] = Fraction((-1) ** (b * c))
    comul = zeros((4, 4, 4))
    comul[0, 0, 0] = comul[1, 1, 1] = 1
    comul[2, 2, 0] = comul[2, 1, 2] = 1
    comul[3, 3, 1] = comul[3, 0, 3] = 1
    space = BasedSpace(["1", "g", "x", "gx"])
    unit = zeros(4)
    unit[0] = 1
    counit = zeros(4)
    counit[:2] = 1
    return BialgebraTensor(AlgebraTensor(space, mul, unit), CoalgebraTensor(space, comul, counit, 0))


def _embedding(G: BialgebraTensor, names) -> np.ndarray:
    emb = zeros((len(names), G.dim))
    for r, n in enumerate(names):
        emb[r, G.space.index(n)] = 1
    return emb


def bialgebra_split(G: BialgebraTensor, m_names, h_names) -> Factorization:
    """Factor G along the subcoalgebras spanned by the named basis elements."""
    M, i = induced_subcoalgebra(G.coalgebra, _embedding(G, m_names), list(m_names))
    H, j = induced_subcoalgebra(G.coalgebra, _embedding(G, h_names), list(h_names))
    return factorize_bialgebra(G, M, H, i, j, return_iso=True)


def kz4() -> BialgebraTensor:
    return group_bialgebra(cyclic(4))


def kz4_split() -> tuple[BialgebraTensor, Factorization]:
    """k[Z4] over M = span{g0,g2} (a sub-bialgebra) and H = span{g0,g1} (only a subcoalgebra)."""
    G = kz4()
    return G, bialgebra_split(G, ["g0", "g2"], ["g0", "g1"])


def kz4_cdcp() -> CdcpData:
    """k[Z4] over M = span{g0,g1} and the sub-bialgebra H = span{g0,g2}; theta(g1,g1) = g2."""
    f = bialgebra_split(kz4(), ["g0", "g1"], ["g0", "g2"])
    return cdcp_from_bicocycle(f.data)


def kz4_cdcc() -> CdccData:
    return cdcc_from_cdcp(kz4_cdcp())


def s3_smash_cdcp() -> CdcpData:
    """k[Z2] acting on the group-likes of Z3 by inversion; psi and theta trivial."""
    M = grouplike_coalgebra(["c0", "c1", "c2"], 0)
    H = monoid_bialgebra(cyclic(2).cayley, 0, ["t0", "t1"])
    varphi, psi = zeros((2, 3, 3)), zeros((2, 3, 2))
    phi, theta = zeros((3, 3, 3)), zeros((3, 3, 2))
    for h in range(2):
        for x in range(3):
            varphi[h, x, (-x if h else x) % 3] = 1
            psi[h, x, h] = 1
    for x in range(3):
        for y in range(3):
            phi[x, y, (x + y) % 3] = 1
            theta[x, y, 0] = 1
    return CdcpData(M, H, varphi, psi, phi, theta)


def ks3_split() -> tuple[BialgebraTensor, Factorization]:
    G = group_bialgebra(symmetric3())
    return G, bialgebra_split(G, ["ge", "g(123)", "g(132)"], ["ge", "g(12)"])


def h4z4() -> BialgebraTensor:
    return tensor_product_bialgebra(sweedler_h4(), kz4())


def h4z4_splits() -> list[tuple[BialgebraTensor, Factorization]]:
    """Two non-cocommutative factorizations of H4 (x) k[Z4].

    In the first M = H4 and H = span{1, t, g t^2, g t^3}, which is not a
    subalgebra, so gamma is nontrivial; the second swaps the roles and
    makes theta nontrivial.
    """
    G = h4z4()
    hopf = ["1⊗g0", "g⊗g0", "x⊗g0", "gx⊗g0"]
    twisted = ["1⊗g0", "1⊗g1", "g⊗g2", "g⊗g3"]
    return [(G, bialgebra_split(G, hopf, twisted)), (G, bialgebra_split(G, twisted, hopf))]


def trivial_bicocycle() -> BicocycleData:
    """Both factors one-dimensional."""
    M, H = grouplike_coalgebra(["e"], 0), grouplike_coalgebra(["1"], 0)
    one = zeros((1, 1, 1))
    one[0, 0, 0] = 1
    return BicocycleData(M, H, one, one, one, one, one, one)


def trivial_m_cdcp(H: BialgebraTensor | None = None) -> CdcpData:
    """M = k e; the only normalized maps are forced."""
    H = H or group_bialgebra(cyclic(3))
    M = grouplike_coalgebra(["e"], 0)
    varphi = zeros((H.dim, 1, 1))
    varphi[:, 0, 0] = H.coalgebra.counit
    psi = zeros((H.dim, 1, H.dim))
    psi[:, 0, :] = identity(H.dim)
    phi = zeros((1, 1, 1))
    phi[0, 0, 0] = 1
    theta = zeros((1, 1, H.dim))
    theta[0, 0, :] = H.algebra.unit
    return CdcpData(M, H, varphi, psi, phi, theta)


def trivial_m_cdcc(H: BialgebraTensor | None = None) -> CdccData:
    """M = k with eta = id; nabla(1) = 1(x)1, blackdown(h) = h(x)1, delta(1) = 1(x)1, sigma = eps."""
    H = H or group_bialgebra(cyclic(3))
    one = zeros((1, 1, 1))
    one[0, 0, 0] = 1
    unit = zeros(1) + 1
    M = AlgebraTensor(BasedSpace(["1"]), one, unit, unit)
    nabla = zeros((1, H.dim, 1))
    nabla[0, :, 0] = H.algebra.unit
    blackdown = zeros((H.dim, H.dim, 1))
    blackdown[:, :, 0] = identity(H.dim)
    sigma = zeros((H.dim, 1, 1))
    sigma[:, 0, 0] = H.coalgebra.counit
    return CdccData(M, H, nabla, blackdown, one, sigma)


# --------------------------------------------------------------------------
# catalog

from dataclasses import dataclass  # noqa: E402

from .group import factor_group as _factor_group  # noqa: E402
from .lie import decompose as _decompose  # noqa: E402
from .quantum import build_cdcp, dualize, semidual_projections  # noqa: E402
from .serialize import BialgebraSplit, CdccSplit, Embedding, GroupSplit  # noqa: E402


@dataclass(frozen=True)
class FixtureEntry:
    """``expect`` is "pass" for objects whose axioms all hold and "factors"
    for splits, which must factor their object without error."""

    kind: str
    make: Callable[[], object]
    description: str
    expect: str = ""
    target: str = ""  # for splits: the catalog entry they factor

    def __post_init__(self):
        if not self.expect:
            object.__setattr__(self, "expect", "factors" if self.kind.endswith("split") else "pass")


def _kz4_dual_split() -> CdccSplit:
    Ms, Hs, q, p = semidual_projections(kz4_cdcp())
    return CdccSplit(Ms, Hs, q, p)


def _group_entry(name: str, subsets) -> Callable[[], object]:
    return lambda: _factor_group(GROUPS[name](), *subsets)


CATALOG: dict[str, FixtureEntry] = {
    "abelian3": FixtureEntry("lie_algebra", lambda: abelian(3), "abelian Lie algebra of dimension 3"),
    "sl2": FixtureEntry("lie_algebra", sl2, "sl2 in the basis e, f, h"),
    "heisenberg3": FixtureEntry("lie_algebra", heisenberg3, "Heisenberg algebra [p,q]=c"),
    "nonabelian2": FixtureEntry("lie_algebra", nonabelian2, "[a,b]=b"),
    "sl2-split": FixtureEntry("lie_split", lambda: lie_splits("sl2")[0], "m = span{e,f}, h = span{h}",
                              target="sl2"),
    "sl2-data": FixtureEntry("bicocycle_sum_data", lambda: sl2_split()[2], "sl2 decomposed along sl2-split"),
    "direct-sum-data": FixtureEntry("bicocycle_sum_data", lambda: direct_sum_data(nonabelian2(), nonabelian2()),
                                     "direct sum of two copies of [a,b]=b"),
    "w1": FixtureEntry("graded_lie", w1_graded, "W1 split by index mod 4"),
    "Z4": FixtureEntry("finite_group", GROUPS["Z4"], "cyclic group of order 4"),
    "S3": FixtureEntry("finite_group", GROUPS["S3"], "symmetric group on 3 letters"),
    "Q8": FixtureEntry("finite_group", GROUPS["Q8"], "quaternion group"),
    "Z2xZ3": FixtureEntry("finite_group", lambda: z2xz3_split()[0], "direct product of Z2 and Z3"),
    "z2xz3-split": FixtureEntry("group_split", lambda: GroupSplit(*map(tuple, z2xz3_split()[1])),
                                "the two direct factors", target="Z2xZ3"),
    "z4-split": FixtureEntry("group_split", lambda: GroupSplit(("0", "2"), ("0", "1")), "M = {0,2}, H = {0,1}",
                             target="Z4"),
    "z4-data": FixtureEntry("group_data", _group_entry("Z4", (["0", "2"], ["0", "1"])), "Z4 factored along z4-split"),
    "s3-data": FixtureEntry("group_data", _group_entry("S3", (["e", "(123)", "(132)"], ["e", "(12)"])),
                            "S3 = A3 . <(12)>, a matched pair"),
    "q8-data": FixtureEntry("group_data", _group_entry("Q8", (["1", "-1", "i", "-i"], ["1", "j"])),
                            "Q8 over <i> and {1, j}"),
    "kz4": FixtureEntry("bialgebra", kz4, "group bialgebra of Z4"),
    "kz4-split": FixtureEntry("bialgebra_split",
                              lambda: BialgebraSplit(Embedding(("g0", "g2")), Embedding(("g0", "g1"))),
                              "M = span{g0,g2}, H = span{g0,g1}", target="kz4"),
    "kz4-data": FixtureEntry("bicocycle_data", lambda: kz4_split()[1].data, "k[Z4] factored along kz4-split"),
    "kz4-cdcp": FixtureEntry("cdcp_data", kz4_cdcp, "k[Z4] over span{g0,g1} and k[<g2>]"),
    "kz4-dual": FixtureEntry("bialgebra", lambda: dualize(build_cdcp(kz4_cdcp())), "dual of k[Z4]"),
    "kz4-dual-split": FixtureEntry("cdcc_split", _kz4_dual_split, "projections dual to the kz4-cdcp inclusions",
                                   target="kz4-dual"),
    "kz4-cdcc": FixtureEntry("cdcc_data", kz4_cdcc, "the dual of k[Z4] factored along kz4-dual-split"),
    "s3-smash": FixtureEntry("cdcp_data", s3_smash_cdcp, "k[Z2] acting on k[Z3] by inversion"),
    "h4": FixtureEntry("bialgebra", sweedler_h4, "Sweedler's four-dimensional bialgebra"),
    "h4z4-data": FixtureEntry("bicocycle_data", lambda: h4z4_splits()[0][1].data,
                              "H4 (x) k[Z4] over H4 and span{1, t, g t^2, g t^3}"),
}
