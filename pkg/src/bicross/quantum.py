"""Finite-dimensional bialgebras built from two factors.

Three constructions on the tensor product M (x) H:

* cocycle double cross product (``build_cdcp``): M a coalgebra with a
  group-like e, H a bialgebra, maps varphi, psi, phi, theta;
* cocycle double cross coproduct (``build_cdcc``): M an algebra with a
  character eta, H a bialgebra, coaction-type maps nabla, blackdown,
  delta, sigma;
* bicocycle double cross product (``build_bicocycle_bialgebra``): M and H
  coalgebras with group-likes, six coalgebra maps.

The builders contract the structure tensors directly.  The conditions
that make each result a bialgebra are transcribed separately at the end
of this module and evaluated leg by leg with :mod:`bicross.sweedler`, so
the two can be compared against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .kernel import (
    BasedSpace,
    ShapeMismatch,
    SingularMatrix,
    identity,
    invert_matrix,
    is_zero,
    rational_array,
    unit_vector,
    zeros,
)
from .report import DEFAULT_MAX_VIOLATIONS, AxiomReport, AxiomResult
from .sweedler import Condition, Equation, Side, Splitter, V, basis, bilinear, functional, linear, tensor, vec


def _einsum(subscripts, *operands):
    # pairwise contraction order matters a lot for object arrays
    return np.einsum(subscripts, *operands, optimize=len(operands) > 2)


class NotInvertible(ValueError):
    pass


class NotCoalgebraMap(ValueError):
    pass


class NotAlgebraMap(ValueError):
    pass


# --------------------------------------------------------------------------
# structure tensors


@dataclass(frozen=True, eq=False)
class CoalgebraTensor:
    """Delta(e_i) = sum comul[i,j,k] e_j (x) e_k, counit[i] = eps(e_i)."""

    space: BasedSpace
    comul: np.ndarray
    counit: np.ndarray
    grouplike: Optional[int] = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        n = self.space.dim
        c = rational_array(self.comul)
        u = rational_array(self.counit)
        if c.shape != (n, n, n) or u.shape != (n,):
            raise ShapeMismatch(f"coalgebra on dim {n}: comul {c.shape}, counit {u.shape}")
        object.__setattr__(self, "comul", c)
        object.__setattr__(self, "counit", u)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.basis_labels

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoalgebraTensor)
            and self.grouplike == other.grouplike
            and np.array_equal(self.comul, other.comul)
            and np.array_equal(self.counit, other.counit)
        )


@dataclass(frozen=True, eq=False)
class AlgebraTensor:
    """e_i e_j = sum mul[i,j,k] e_k, with unit vector and optional character eta."""

    space: BasedSpace
    mul: np.ndarray
    unit: np.ndarray
    character: Optional[np.ndarray] = None

    def __post_init__(self):
        n = self.space.dim
        m = rational_array(self.mul)
        u = rational_array(self.unit)
        if m.shape != (n, n, n) or u.shape != (n,):
            raise ShapeMismatch(f"algebra on dim {n}: mul {m.shape}, unit {u.shape}")
        object.__setattr__(self, "mul", m)
        object.__setattr__(self, "unit", u)
        if self.character is not None:
            ch = rational_array(self.character)
            if ch.shape != (n,):
                raise ShapeMismatch("character must be a vector")
            object.__setattr__(self, "character", ch)

    @property
    def dim(self) -> int:
        return self.space.dim

    def with_character(self, eta) -> "AlgebraTensor":
        return AlgebraTensor(self.space, self.mul, self.unit, eta)

    def __eq__(self, other) -> bool:
        def same(a, b):
            return (a is None and b is None) or (
                a is not None and b is not None and np.array_equal(a, b)
            )

        return (
            isinstance(other, AlgebraTensor)
            and np.array_equal(self.mul, other.mul)
            and np.array_equal(self.unit, other.unit)
            and same(self.character, other.character)
        )


@dataclass(frozen=True, eq=False)
class BialgebraTensor:
    algebra: AlgebraTensor
    coalgebra: CoalgebraTensor

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise ShapeMismatch("algebra and coalgebra live on different spaces")

    @property
    def space(self) -> BasedSpace:
        return self.coalgebra.space

    @property
    def dim(self) -> int:
        return self.coalgebra.dim

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.basis_labels

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BialgebraTensor)
            and self.algebra == other.algebra
            and self.coalgebra == other.coalgebra
        )

    def same_tensors(self, other: "BialgebraTensor") -> bool:
        """Equality of mul, unit, comul and counit only."""
        return (
            np.array_equal(self.algebra.mul, other.algebra.mul)
            and np.array_equal(self.algebra.unit, other.algebra.unit)
            and np.array_equal(self.coalgebra.comul, other.coalgebra.comul)
            and np.array_equal(self.coalgebra.counit, other.coalgebra.counit)
        )


def iterated_coproduct(C: CoalgebraTensor, n: int) -> np.ndarray:
    """Array of shape (d,)*(n+1): the n-fold Sweedler expansion x -> x_1 (x) ... (x) x_n.

    Built by repeatedly splitting the last leg; cached on ``C``.
    """
    if n < 1:
        raise ValueError("need at least one leg")
    key = ("delta", n)
    if key not in C._cache:
        if n == 1:
            arr = identity(C.dim)
        elif n == 2:
            arr = C.comul
        else:
            prev = iterated_coproduct(C, n - 1)
            arr = np.tensordot(prev, C.comul, axes=([n - 1], [0])) if C.dim else zeros((0,) * (n + 1))
        C._cache[key] = arr
    return C._cache[key]


def iterated_coproduct_first(C: CoalgebraTensor, n: int) -> np.ndarray:
    """The same expansion, splitting the first leg each time (for soundness checks)."""
    arr = identity(C.dim)
    for k in range(1, n):
        # arr[i, j1, ..., jk]; split j1
        arr = np.moveaxis(np.tensordot(arr, C.comul, axes=([1], [0])), [-2, -1], [1, 2])
    return arr


def sweedler_terms(C: CoalgebraTensor, i: int, n: int) -> list[tuple[Fraction, tuple[int, ...]]]:
    """Nonzero terms (coefficient, legs) of the n-fold coproduct of e_i."""
    key = ("terms", n)
    if key not in C._cache:
        arr = iterated_coproduct(C, n)
        table: dict[int, list] = {a: [] for a in range(C.dim)}
        for idx in zip(*np.nonzero(arr != 0)):
            idx = tuple(int(t) for t in idx)
            table[idx[0]].append((arr[idx], idx[1:]))
        C._cache[key] = table
    return C._cache[key][i]


def _nonzero(arr: np.ndarray, n_in: int) -> dict:
    out: dict = {}
    for idx in zip(*np.nonzero(arr != 0)):
        idx = tuple(int(t) for t in idx)
        out.setdefault(idx[:n_in], []).append((arr[idx], idx[n_in:]))
    return out


# --------------------------------------------------------------------------
# constructors


def grouplike_coalgebra(labels: Sequence[str], point: int | None = 0) -> CoalgebraTensor:
    n = len(labels)
    comul = zeros((n, n, n))
    for i in range(n):
        comul[i, i, i] = Fraction(1)
    counit = rational_array([1] * n)
    return CoalgebraTensor(BasedSpace(labels), comul, counit, point)


def monoid_bialgebra(table, identity_index: int, labels: Sequence[str]) -> BialgebraTensor:
    """k[S] for a finite monoid S given by its multiplication table."""
    table = np.asarray(table, dtype=int)
    n = len(labels)
    mul = zeros((n, n, n))
    for i, j in product(range(n), repeat=2):
        mul[i, j, table[i, j]] = Fraction(1)
    A = AlgebraTensor(BasedSpace(labels), mul, unit_vector(n, identity_index))
    return BialgebraTensor(A, grouplike_coalgebra(labels, identity_index))


def group_bialgebra(G) -> BialgebraTensor:
    return monoid_bialgebra(G.cayley, G.identity, [f"g{lab}" for lab in G.elements])


def function_bialgebra(G) -> BialgebraTensor:
    """k^G, the dual of k[G]; its character is evaluation at the identity."""
    return dualize(group_bialgebra(G))


def tensor_product_bialgebra(A: BialgebraTensor, B: BialgebraTensor) -> BialgebraTensor:
    dA, dB = A.dim, B.dim
    labels = [f"{a}⊗{b}" for a in A.labels for b in B.labels]
    n = dA * dB
    mul = _einsum("ace,bdf->abcdef", A.algebra.mul, B.algebra.mul).reshape(n, n, n)
    unit = np.multiply.outer(A.algebra.unit, B.algebra.unit).reshape(n)
    comul = _einsum("ace,bdf->abcdef", A.coalgebra.comul, B.coalgebra.comul).reshape(n, n, n)
    counit = np.multiply.outer(A.coalgebra.counit, B.coalgebra.counit).reshape(n)
    char = None
    if A.algebra.character is not None and B.algebra.character is not None:
        char = np.multiply.outer(A.algebra.character, B.algebra.character).reshape(n)
    g = None
    if A.coalgebra.grouplike is not None and B.coalgebra.grouplike is not None:
        g = A.coalgebra.grouplike * dB + B.coalgebra.grouplike
    space = BasedSpace(labels)
    return BialgebraTensor(AlgebraTensor(space, mul, unit, char), CoalgebraTensor(space, comul, counit, g))


def _dual_label(s: str) -> str:
    return s[:-1] if s.endswith("*") else s + "*"


def _one_hot_index(v: np.ndarray | None) -> int | None:
    if v is None:
        return None
    nz = [i for i, x in enumerate(v) if x != 0]
    return nz[0] if len(nz) == 1 and v[nz[0]] == 1 else None


def dualize(B: BialgebraTensor) -> BialgebraTensor:
    """Linear dual in the dual basis: mul and comul, unit and counit swap roles."""
    space = BasedSpace(_dual_label(s) for s in B.labels)
    mul = B.coalgebra.comul.transpose(1, 2, 0).copy()
    comul = B.algebra.mul.transpose(2, 0, 1).copy()
    g = B.coalgebra.grouplike
    char = unit_vector(B.dim, g) if g is not None else None
    A = AlgebraTensor(space, mul, B.coalgebra.counit.copy(), char)
    C = CoalgebraTensor(space, comul, B.algebra.unit.copy(), _one_hot_index(B.algebra.character))
    return BialgebraTensor(A, C)


# --------------------------------------------------------------------------
# verification of the basic structures


def verify_coalgebra(C: CoalgebraTensor, *, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    report = AxiomReport(kind="coalgebra")
    lab = C.labels
    n = C.dim
    D = linear(C.comul)
    eps = functional(C.counit)
    coassoc = report.add(AxiomResult("coassociativity", checked=n))
    counit = report.add(AxiomResult("counit", checked=n))
    for i in range(n):
        left, right, cl, cr = V(), V(), V(), V()
        for (a, b), c in D(basis(i)).items():
            left = left + (D(basis(a)) @ basis(b)).scale(c)
            right = right + (basis(a) @ D(basis(b))).scale(c)
            cl = cl + (eps(basis(a)) @ basis(b)).scale(c)
            cr = cr + (basis(a) @ eps(basis(b))).scale(c)
        if not (left - right).is_zero():
            coassoc.record((lab[i],), _flat(left - right), max_violations)
        r = (cl - basis(i)) @ vec([1]) + (cr - basis(i)) @ vec([0, 1])
        if not r.is_zero():
            counit.record((lab[i],), _flat(r), max_violations)
    if C.grouplike is not None:
        g = C.grouplike
        gl = report.add(AxiomResult("grouplike", checked=1))
        expect = zeros((n, n))
        expect[g, g] = Fraction(1)
        if not (np.array_equal(C.comul[g], expect) and C.counit[g] == 1):
            gl.record((lab[g],), None, max_violations)
    return report


def _flat(v: V) -> dict:
    return {",".join(map(str, k)): c for k, c in sorted(v.items())}


def verify_algebra(A: AlgebraTensor, *, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    report = AxiomReport(kind="algebra")
    n = A.dim
    lab = A.space.basis_labels
    m = bilinear(A.mul)
    assoc = report.add(AxiomResult("associativity", checked=n ** 3))
    prods = {(i, j): m(basis(i), basis(j)) for i, j in product(range(n), repeat=2)}
    for i, j, k in product(range(n), repeat=3):
        r = m(prods[i, j], basis(k)) - m(basis(i), prods[j, k])
        if not r.is_zero():
            assoc.record((lab[i], lab[j], lab[k]), _flat(r), max_violations)
    unit = report.add(AxiomResult("unit", checked=n))
    u = vec(A.unit)
    for i in range(n):
        r = (m(u, basis(i)) - basis(i)) @ vec([1]) + (m(basis(i), u) - basis(i)) @ vec([0, 1])
        if not r.is_zero():
            unit.record((lab[i],), _flat(r), max_violations)
    if A.character is not None:
        ch = report.add(AxiomResult("character", checked=n * n + 1))
        eta = A.character
        if eta @ A.unit != 1:
            ch.record(("1",), eta @ A.unit, max_violations)
        for i, j in product(range(n), repeat=2):
            if eta @ A.mul[i, j] != eta[i] * eta[j]:
                ch.record((lab[i], lab[j]), eta @ A.mul[i, j] - eta[i] * eta[j], max_violations)
    return report


def verify_bialgebra(B: BialgebraTensor, *, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    """Algebra, coalgebra and compatibility axioms, exactly."""
    report = AxiomReport(kind="bialgebra")
    report.merge(verify_algebra(B.algebra, max_violations=max_violations))
    report.merge(verify_coalgebra(B.coalgebra, max_violations=max_violations))
    n = B.dim
    lab = B.labels
    m = bilinear(B.algebra.mul)
    D = linear(B.coalgebra.comul)
    eps = B.coalgebra.counit

    mult = report.add(AxiomResult("comul_multiplicative", checked=n * n))
    for i, j in product(range(n), repeat=2):
        lhs = D(m(basis(i), basis(j)))
        rhs = V()
        for (a, b), c1 in D(basis(i)).items():
            for (c, d), c2 in D(basis(j)).items():
                rhs = rhs + (m(basis(a), basis(c)) @ m(basis(b), basis(d))).scale(c1 * c2)
        if not (lhs - rhs).is_zero():
            mult.record((lab[i], lab[j]), _flat(lhs - rhs), max_violations)

    cmult = report.add(AxiomResult("counit_multiplicative", checked=n * n))
    for i, j in product(range(n), repeat=2):
        if eps @ B.algebra.mul[i, j] != eps[i] * eps[j]:
            cmult.record((lab[i], lab[j]), eps @ B.algebra.mul[i, j] - eps[i] * eps[j], max_violations)

    u = B.algebra.unit
    unital = report.add(AxiomResult("comul_unital", checked=1))
    d1 = np.tensordot(u, B.coalgebra.comul, axes=1) if n else zeros((0, 0))
    if not is_zero(d1 - np.multiply.outer(u, u)):
        unital.record(("1",), (d1 - np.multiply.outer(u, u)).reshape(-1), max_violations)
    cu = report.add(AxiomResult("counit_unital", checked=1))
    if n and eps @ u != 1:
        cu.record(("1",), eps @ u, max_violations)
    return report


# --------------------------------------------------------------------------
# the three kinds of data


def _check_shape(name, arr, shape):
    arr = rational_array(arr)
    if arr.shape != tuple(shape):
        raise ShapeMismatch(f"{name} has shape {arr.shape}, expected {tuple(shape)}")
    return arr


@dataclass(frozen=True, eq=False)
class BicocycleData:
    """Six maps on coalgebras M, H; index order follows the arguments, output last.

    varphi[h,x,:], psi[h,x,:], phi[x,x',:], theta[x,x',:], mu[h,h',:], gamma[h,h',:].
    """

    M: CoalgebraTensor
    H: CoalgebraTensor
    varphi: np.ndarray
    psi: np.ndarray
    phi: np.ndarray
    theta: np.ndarray
    mu: np.ndarray
    gamma: np.ndarray

    MAPS = ("varphi", "psi", "phi", "theta", "mu", "gamma")

    def __post_init__(self):
        m, h = self.M.dim, self.H.dim
        shapes = {
            "varphi": (h, m, m), "psi": (h, m, h), "phi": (m, m, m),
            "theta": (m, m, h), "mu": (h, h, h), "gamma": (h, h, m),
        }
        for name, shape in shapes.items():
            object.__setattr__(self, name, _check_shape(name, getattr(self, name), shape))
        if self.M.grouplike is None or self.H.grouplike is None:
            raise ValueError("M and H need distinguished group-likes")

    @property
    def e(self) -> int:
        return self.M.grouplike

    @property
    def one(self) -> int:
        return self.H.grouplike

    def replace(self, **maps) -> "BicocycleData":
        kw = {n: getattr(self, n) for n in self.MAPS}
        kw.update(maps)
        return BicocycleData(self.M, self.H, **kw)

    def __eq__(self, other) -> bool:
        return isinstance(other, BicocycleData) and all(
            np.array_equal(getattr(self, n), getattr(other, n)) for n in self.MAPS
        ) and self.M == other.M and self.H == other.H


@dataclass(frozen=True, eq=False)
class CdcpData:
    """varphi[h,x,:] (H(x)M->M), psi[h,x,:] (H(x)M->H), phi[x,x',:], theta[x,x',:]."""

    M: CoalgebraTensor
    H: BialgebraTensor
    varphi: np.ndarray
    psi: np.ndarray
    phi: np.ndarray
    theta: np.ndarray

    MAPS = ("varphi", "psi", "phi", "theta")

    def __post_init__(self):
        m, h = self.M.dim, self.H.dim
        shapes = {"varphi": (h, m, m), "psi": (h, m, h), "phi": (m, m, m), "theta": (m, m, h)}
        for name, shape in shapes.items():
            object.__setattr__(self, name, _check_shape(name, getattr(self, name), shape))
        if self.M.grouplike is None:
            raise ValueError("M needs a distinguished group-like")

    @property
    def e(self) -> int:
        return self.M.grouplike

    def replace(self, **maps) -> "CdcpData":
        kw = {n: getattr(self, n) for n in self.MAPS}
        kw.update(maps)
        return CdcpData(self.M, self.H, **kw)


@dataclass(frozen=True, eq=False)
class CdccData:
    """nabla[x,h,x'] (M->H(x)M), blackdown[h,h',x] (H->H(x)M),
    delta[x,x',x''] (M->M(x)M), sigma[h,x,x'] (H->M(x)M)."""

    M: AlgebraTensor
    H: BialgebraTensor
    nabla: np.ndarray
    blackdown: np.ndarray
    delta: np.ndarray
    sigma: np.ndarray

    MAPS = ("nabla", "blackdown", "delta", "sigma")

    def __post_init__(self):
        m, h = self.M.dim, self.H.dim
        shapes = {"nabla": (m, h, m), "blackdown": (h, h, m), "delta": (m, m, m), "sigma": (h, m, m)}
        for name, shape in shapes.items():
            object.__setattr__(self, name, _check_shape(name, getattr(self, name), shape))
        if self.M.character is None:
            raise ValueError("M needs a character")

    def replace(self, **maps) -> "CdccData":
        kw = {n: getattr(self, n) for n in self.MAPS}
        kw.update(maps)
        return CdccData(self.M, self.H, **kw)


def _product_space(M_labels, H_labels) -> BasedSpace:
    return BasedSpace(f"{a}⊗{b}" for a in M_labels for b in H_labels)


def _tensor_coalgebra(M: CoalgebraTensor, H: CoalgebraTensor, space: BasedSpace) -> CoalgebraTensor:
    n = M.dim * H.dim
    comul = _einsum("ace,bdf->abcdef", M.comul, H.comul).reshape(n, n, n) if n else zeros((0, 0, 0))
    counit = np.multiply.outer(M.counit, H.counit).reshape(n)
    g = None
    if M.grouplike is not None and H.grouplike is not None:
        g = M.grouplike * H.dim + H.grouplike
    return CoalgebraTensor(space, comul, counit, g)


def build_bicocycle_bialgebra(d: BicocycleData) -> BialgebraTensor:
    """(x(x)h)(x'(x)h') = x_1.[varphi(h_1,x'_1).gamma(psi(h_2,x'_2),h'_1)]
                        (x) [theta(x_2,varphi(h_3,x'_3)) * psi(h_4,x'_4)] * h'_2"""
    M, H = d.M, d.H
    dm, dh = M.dim, H.dim
    n = dm * dh
    space = _product_space(M.labels, H.labels)
    mul = zeros((dm, dh, dm, dh, dm, dh))
    for a, b, c, e_ in product(range(dm), range(dh), range(dm), range(dh)):
        acc = zeros((dm, dh))
        for ca, (a1, a2) in sweedler_terms(M, a, 2):
            for cb, (b1, b2, b3, b4) in sweedler_terms(H, b, 4):
                for cc, (c1, c2, c3, c4) in sweedler_terms(M, c, 4):
                    for ce, (e1, e2) in sweedler_terms(H, e_, 2):
                        v1 = d.varphi[b1, c1]
                        g = d.psi[b2, c2] @ d.gamma[:, e1, :]
                        inner = np.tensordot(np.multiply.outer(v1, g), d.phi, axes=([0, 1], [0, 1]))
                        left = inner @ d.phi[a1]
                        t = d.varphi[b3, c3] @ d.theta[a2]
                        s = np.tensordot(np.multiply.outer(t, d.psi[b4, c4]), d.mu, axes=([0, 1], [0, 1]))
                        right = s @ d.mu[:, e2, :]
                        acc = acc + (ca * cb * cc * ce) * np.multiply.outer(left, right)
        mul[a, b, c, e_] = acc
    mul = mul.reshape(n, n, n)
    unit = unit_vector(n, d.e * dh + d.one)
    coalg = _tensor_coalgebra(M, H, space)
    return BialgebraTensor(AlgebraTensor(space, mul, unit), coalg)


def build_cdcp(d: CdcpData) -> BialgebraTensor:
    """(x(x)h)(x'(x)h') = x_1.(h_1 |> x'_1) (x) theta(x_2, h_2 |> x'_2) psi(h_3,x'_3) h'"""
    M, Hc, Ha = d.M, d.H.coalgebra, d.H.algebra
    dm, dh = M.dim, d.H.dim
    n = dm * dh
    space = _product_space(M.labels, d.H.labels)
    mH = Ha.mul
    mul = zeros((dm, dh, dm, dh, dm, dh))
    for a, b, c, e_ in product(range(dm), range(dh), range(dm), range(dh)):
        acc = zeros((dm, dh))
        for ca, (a1, a2) in sweedler_terms(M, a, 2):
            for cb, (b1, b2, b3) in sweedler_terms(Hc, b, 3):
                for cc, (c1, c2, c3) in sweedler_terms(M, c, 3):
                    left = d.varphi[b1, c1] @ d.phi[a1]
                    t = d.varphi[b2, c2] @ d.theta[a2]
                    s = np.tensordot(np.multiply.outer(t, d.psi[b3, c3]), mH, axes=([0, 1], [0, 1]))
                    right = s @ mH[:, e_, :]
                    acc = acc + (ca * cb * cc) * np.multiply.outer(left, right)
        mul[a, b, c, e_] = acc
    mul = mul.reshape(n, n, n)
    unit = np.multiply.outer(unit_vector(dm, d.e), Ha.unit).reshape(n)
    coalg = _tensor_coalgebra(M, Hc, space)
    return BialgebraTensor(AlgebraTensor(space, mul, unit), coalg)


def build_cdcc(d: CdccData) -> BialgebraTensor:
    """Tensor-product algebra with

    Delta(x(x)h) = (x^(1) h_1^(1) (x) x^(2)<-1> h_1^(2)<-1> h_2[0])
                 (x) (x^(2)<0> h_1^(2)<0> h_2[1] (x) h_3).
    """
    MA, HA, HC = d.M, d.H.algebra, d.H.coalgebra
    dm, dh = MA.dim, d.H.dim
    n = dm * dh
    space = _product_space(MA.space.basis_labels, d.H.labels)
    mM, mH = MA.mul, HA.mul
    mul = _einsum("ace,bdf->abcdef", mM, mH).reshape(n, n, n) if n else zeros((0, 0, 0))
    unit = np.multiply.outer(MA.unit, HA.unit).reshape(n)
    counit = np.multiply.outer(MA.character, HC.counit).reshape(n)

    nab = _nonzero(d.nabla, 1)
    bd = _nonzero(d.blackdown, 1)
    dl = _nonzero(d.delta, 1)
    sg = _nonzero(d.sigma, 1)
    comul = zeros((dm, dh, dm, dh, dm, dh))
    for a, b in product(range(dm), range(dh)):
        for c1, (p, q) in dl.get((a,), ()):
            for c2, (r, s) in nab.get((q,), ()):
                for c3, (b1, b2, b3) in sweedler_terms(HC, b, 3):
                    for c4, (u, v) in sg.get((b1,), ()):
                        for c5, (w, z) in nab.get((v,), ()):
                            for c6, (k0, k1) in bd.get((b2,), ()):
                                coef = c1 * c2 * c3 * c4 * c5 * c6
                                m1 = mM[p, u]
                                h1 = mH[r, w] @ mH[:, k0, :]
                                m2 = (mM[s, z] @ mM[:, k1, :])
                                block = np.multiply.outer(np.multiply.outer(m1, h1), m2)
                                comul[a, b, :, :, :, b3] += coef * block
    comul = comul.reshape(n, n, n)
    return BialgebraTensor(AlgebraTensor(space, mul, unit), CoalgebraTensor(space, comul, counit))


# --------------------------------------------------------------------------
# passing between the kinds


def trivial_gamma(M: CoalgebraTensor, H: CoalgebraTensor) -> np.ndarray:
    """gamma(h,h') = eps(h) eps(h') e."""
    g = zeros((H.dim, H.dim, M.dim))
    g[:, :, M.grouplike] = np.multiply.outer(H.counit, H.counit)
    return g


def trivial_theta(M: CoalgebraTensor, H: CoalgebraTensor) -> np.ndarray:
    t = zeros((M.dim, M.dim, H.dim))
    t[:, :, H.grouplike] = np.multiply.outer(M.counit, M.counit)
    return t


def cdcp_from_bicocycle(d: BicocycleData) -> CdcpData:
    """The cocycle double cross product pair induced by data with trivial gamma.

    H becomes a bialgebra with product mu and unit 1; this only makes sense
    when mu is associative, unital and a coalgebra map.
    """
    if not np.array_equal(d.gamma, trivial_gamma(d.M, d.H)):
        raise ValueError("gamma is not trivial")
    A = AlgebraTensor(d.H.space, d.mu, unit_vector(d.H.dim, d.one))
    return CdcpData(d.M, BialgebraTensor(A, d.H), d.varphi, d.psi, d.phi, d.theta)


def bicocycle_from_cdcp(d: CdcpData) -> BicocycleData:
    H = d.H.coalgebra
    one = _one_hot_index(d.H.algebra.unit)
    if one is None:
        raise ValueError("the unit of H must be a basis element")
    if H.grouplike != one:
        H = CoalgebraTensor(H.space, H.comul, H.counit, one)
    return BicocycleData(d.M, H, d.varphi, d.psi, d.phi, d.theta, d.H.algebra.mul, trivial_gamma(d.M, H))


# --------------------------------------------------------------------------
# factorization


def _check_coalgebra_map(name: str, f: np.ndarray, src: CoalgebraTensor, G: CoalgebraTensor):
    lhs = np.tensordot(f, G.comul, axes=([1], [0]))  # Delta_G(f(a))
    rhs = _einsum("abc,bp,cq->apq", src.comul, f, f)
    if not is_zero(lhs - rhs):
        raise NotCoalgebraMap(f"{name} does not commute with the comultiplications")
    if not is_zero(f @ G.counit - src.counit):
        raise NotCoalgebraMap(f"{name} does not preserve the counit")


def _check_algebra_map(name: str, f: np.ndarray, L: AlgebraTensor, tgt: AlgebraTensor):
    lhs = np.tensordot(L.mul, f, axes=([2], [0]))
    rhs = _einsum("ip,jq,pqr->ijr", f, f, tgt.mul)
    if not is_zero(lhs - rhs):
        raise NotAlgebraMap(f"{name} is not multiplicative")
    if not is_zero(L.unit @ f - tgt.unit):
        raise NotAlgebraMap(f"{name} does not preserve the unit")


@dataclass(frozen=True, eq=False)
class Factorization:
    """Data recovered from an object, plus the isomorphism used.

    ``iso[r, g]`` is the coordinate of the image of the r-th basis vector
    of M (x) H (row-major) along the g-th basis vector of the object.
    """

    data: object
    iso: np.ndarray

    @property
    def iso_inverse(self) -> np.ndarray:
        return invert_matrix(self.iso)


def factorize_bialgebra(
    G: BialgebraTensor, M: CoalgebraTensor, H: CoalgebraTensor, i, j, *, return_iso: bool = False
):
    """Recover the six maps of G = M.H through coalgebra embeddings i, j.

    ``i[a, g]`` is the g-th coordinate of i(e_a).  The map x(x)h -> i(x)j(h)
    must be invertible; then f(h(x)x), g(x(x)x'), r(h(x)h') are the preimages
    of j(h)i(x), i(x)i(x'), j(h)j(h') and the six maps are their counit
    projections.
    """
    i = rational_array(i).reshape(M.dim, G.dim)
    j = rational_array(j).reshape(H.dim, G.dim)
    _check_coalgebra_map("i", i, M, G.coalgebra)
    _check_coalgebra_map("j", j, H, G.coalgebra)
    u = G.algebra.unit
    if M.grouplike is None or H.grouplike is None:
        raise ValueError("M and H need distinguished group-likes")
    if not (np.array_equal(i[M.grouplike], u) and np.array_equal(j[H.grouplike], u)):
        raise NotCoalgebraMap("the group-likes must map to the unit of G")
    mul = G.algebra.mul
    prod = lambda a, b: _einsum("ap,bq,pqr->abr", a, b, mul)
    Phi = prod(i, j).reshape(M.dim * H.dim, G.dim)
    try:
        Pinv = invert_matrix(Phi)
    except (SingularMatrix, ValueError) as exc:
        raise NotInvertible(f"x(x)h -> xh is not invertible: {exc}") from exc

    def pre(images):  # (..., G.dim) -> (..., M.dim, H.dim)
        return (images @ Pinv).reshape(images.shape[:-1] + (M.dim, H.dim))

    f = pre(prod(j, i))  # [h, x, m, k]
    g = pre(prod(i, i))
    r = pre(prod(j, j))
    epsM, epsH = M.counit, H.counit
    data = BicocycleData(
        M, H,
        varphi=f @ epsH, psi=np.tensordot(f, epsM, axes=([2], [0])),
        phi=g @ epsH, theta=np.tensordot(g, epsM, axes=([2], [0])),
        gamma=r @ epsH, mu=np.tensordot(r, epsM, axes=([2], [0])),
    )
    return Factorization(data, Phi) if return_iso else data


def factorize_cdcc(
    L: BialgebraTensor, M: AlgebraTensor, H: BialgebraTensor, q, p, *, return_iso: bool = False
):
    """Recover (nabla, blackdown, delta, sigma) from algebra projections q: L->M, p: L->H.

    Psi = (q(x)p) o Delta_L must be invertible; with
    F(q(l_1)(x)p(l_2)) = p(l_1)(x)q(l_2) and G(q(l_1)(x)p(l_2)) = q(l_1)(x)q(l_2)
    the maps are nabla(x) = F(x(x)1), blackdown(h) = F(1(x)h),
    delta(x) = G(x(x)1), sigma(h) = G(1(x)h).  The character of M is
    eta = eps_L o Psi^-1 ( . (x) 1).
    """
    q = rational_array(q).reshape(L.dim, M.dim)
    p = rational_array(p).reshape(L.dim, H.dim)
    _check_algebra_map("q", q, L.algebra, M)
    _check_algebra_map("p", p, L.algebra, H.algebra)
    _check_coalgebra_map("p", p, L.coalgebra, H.coalgebra)
    D = L.coalgebra.comul
    Psi = _einsum("lab,am,bh->lmh", D, q, p).reshape(L.dim, M.dim * H.dim)
    try:
        Pinv = invert_matrix(Psi)  # (M.dim*H.dim, L.dim)
    except (SingularMatrix, ValueError) as exc:
        raise NotInvertible(f"(q(x)p) o Delta is not invertible: {exc}") from exc
    F = (Pinv @ _einsum("lab,ah,bm->lhm", D, p, q).reshape(L.dim, -1)).reshape(M.dim, H.dim, H.dim, M.dim)
    Gm = (Pinv @ _einsum("lab,am,bn->lmn", D, q, q).reshape(L.dim, -1)).reshape(M.dim, H.dim, M.dim, M.dim)
    uM, uH = M.unit, H.algebra.unit
    nabla = np.tensordot(F, uH, axes=([1], [0]))
    blackdown = np.tensordot(uM, F, axes=([0], [0]))
    delta = np.tensordot(Gm, uH, axes=([1], [0]))
    sigma = np.tensordot(uM, Gm, axes=([0], [0]))
    eta = (Pinv @ L.coalgebra.counit).reshape(M.dim, H.dim) @ uH
    if M.character is not None and not np.array_equal(M.character, eta):
        raise NotAlgebraMap("the given character of M disagrees with eps_L")
    data = CdccData(M.with_character(eta), H, nabla, blackdown, delta, sigma)
    return Factorization(data, Pinv) if return_iso else data


def pullback_bialgebra(B: BialgebraTensor, iso: np.ndarray, space: BasedSpace | None = None) -> BialgebraTensor:
    """Structure of B transported along a basis change; ``iso[r]`` is the image of new basis vector r."""
    iso = rational_array(iso)
    inv = invert_matrix(iso)
    mul = _einsum("ap,bq,pqr,rc->abc", iso, iso, B.algebra.mul, inv)
    unit = B.algebra.unit @ inv
    comul = _einsum("ap,pqr,qb,rc->abc", iso, B.coalgebra.comul, inv, inv)
    counit = iso @ B.coalgebra.counit
    char = iso @ B.algebra.character if B.algebra.character is not None else None
    space = space or BasedSpace(f"v{k}" for k in range(B.dim))
    return BialgebraTensor(
        AlgebraTensor(space, mul, unit, char),
        CoalgebraTensor(space, comul, counit, _one_hot_index(unit)),
    )


def induced_subcoalgebra(G: CoalgebraTensor, vectors, labels, grouplike: int | None = 0) -> tuple[CoalgebraTensor, np.ndarray]:
    """Coalgebra structure on span(vectors) inside G, and the embedding matrix.

    Raises NotCoalgebraMap if the span is not a subcoalgebra.
    """
    emb = rational_array(vectors).reshape(len(labels), G.dim)
    k = len(labels)
    # solve coordinates by a left inverse built from a maximal independent column set
    cols = _independent_columns(emb)
    sub = emb[:, cols]
    sub_inv = invert_matrix(sub)
    image = np.tensordot(emb, G.comul, axes=([1], [0]))  # [a, g, g']
    comul = _einsum("apq,pb,qc->abc", image[:, cols][:, :, cols], sub_inv, sub_inv)
    counit = emb @ G.counit
    C = CoalgebraTensor(BasedSpace(labels), comul, counit, grouplike)
    _check_coalgebra_map("inclusion", emb, C, G)
    return C, emb


def _independent_columns(a: np.ndarray) -> list[int]:
    rows = a.shape[0]
    cols: list[int] = []
    for c in range(a.shape[1]):
        trial = cols + [c]
        sub = a[:, trial]
        if _rank(sub) == len(trial):
            cols = trial
        if len(cols) == rows:
            break
    if len(cols) != rows:
        raise SingularMatrix("vectors are linearly dependent")
    return cols


def _rank(a: np.ndarray) -> int:
    m = a.copy()
    r = 0
    for c in range(m.shape[1]):
        piv = next((i for i in range(r, m.shape[0]) if m[i, c] != 0), None)
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        for i in range(m.shape[0]):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] / m[r, c] * m[r]
        r += 1
    return r


# --------------------------------------------------------------------------
# conditions, leg by leg
#
# Variable names: x, y, z range over M (x, x', x''), h, k, l over H
# (h, h', h'').  Sweedler legs of x are x1, x2, ...


def _legnames(name: str, n: int) -> tuple[str, ...]:
    return tuple(f"{name}{i}" for i in range(1, n + 1))


class _Splits:
    """Iterated-coproduct splitters, built once per coalgebra and depth."""

    def __init__(self, **coalgebras: CoalgebraTensor):
        self._c = coalgebras
        self._memo: dict = {}

    def __call__(self, leg: str, n: int, coalg: str | None = None):
        key = coalg or leg
        if (key, n) not in self._memo:
            self._memo[(key, n)] = Splitter.from_array(iterated_coproduct(self._c[key], n))
        return (leg, self._memo[(key, n)], _legnames(leg, n))


def _eq(name, inputs, lhs, rhs):
    return Equation(name, inputs, lhs, rhs)


def _coalgebra_map_condition(cid, maps, note=""):
    """f(a,b) with Delta f(a,b) = f(a1,b1) (x) f(a2,b2) and eps f(a,b) = eps(a) eps(b).

    ``maps`` is a list of (name, array, A, B, C) with A, B, C coalgebras.
    """
    eqs = []
    for name, arr, A, B, C in maps:
        f = bilinear(arr)
        DC = linear(C.comul)
        eC, eA, eB = functional(C.counit), functional(A.counit), functional(B.counit)
        sp = _Splits(a=A, b=B)
        inputs = [("a", A.labels), ("b", B.labels)]
        eqs.append(_eq(f"Delta {name}", inputs,
                       Side(lambda L, f=f, DC=DC: DC(f(L.a, L.b))),
                       Side(lambda L, f=f: f(L.a1, L.b1) @ f(L.a2, L.b2), [sp("a", 2), sp("b", 2)])))
        eqs.append(_eq(f"eps {name}", inputs,
                       Side(lambda L, f=f, eC=eC: eC(f(L.a, L.b))),
                       Side(lambda L, eA=eA, eB=eB: eA(L.a) @ eB(L.b))))
    return Condition(cid, eqs, note)


BICOCYCLE_CONDITION_IDS = tuple(f"B{i}" for i in range(1, 15))
CDCP_CONDITION_IDS = tuple(f"C{i}" for i in range(1, 11))
CDCC_CONDITION_IDS = tuple(f"D{i}" for i in range(1, 12))


def bicocycle_conditions(d: BicocycleData, *, literal: bool = False) -> list[Condition]:
    M, H = d.M, d.H
    vp, ps, ph = bilinear(d.varphi), bilinear(d.psi), bilinear(d.phi)
    th, mu, ga = bilinear(d.theta), bilinear(d.mu), bilinear(d.gamma)
    E, ONE = basis(d.e), basis(d.one)
    eM, eH = functional(M.counit), functional(H.counit)
    S = _Splits(x=M, y=M, z=M, h=H, k=H, l=H)
    X, Y, Z = ("x", M.labels), ("y", M.labels), ("z", M.labels)
    Hh, K, Lh = ("h", H.labels), ("k", H.labels), ("l", H.labels)

    out = [
        Condition("B1", [
            _eq("e.x", [X], Side(lambda L: ph(E, L.x)), Side(lambda L: L.x)),
            _eq("x.e", [X], Side(lambda L: ph(L.x, E)), Side(lambda L: L.x)),
            _eq("1*h", [Hh], Side(lambda L: mu(ONE, L.h)), Side(lambda L: L.h)),
            _eq("h*1", [Hh], Side(lambda L: mu(L.h, ONE)), Side(lambda L: L.h)),
        ]),
        Condition("B2", [
            _eq("theta(x,e)", [X], Side(lambda L: th(L.x, E)), Side(lambda L: eM(L.x) @ ONE)),
            _eq("theta(e,x)", [X], Side(lambda L: th(E, L.x)), Side(lambda L: eM(L.x) @ ONE)),
            _eq("gamma(h,1)", [Hh], Side(lambda L: ga(L.h, ONE)), Side(lambda L: eH(L.h) @ E)),
            _eq("gamma(1,h)", [Hh], Side(lambda L: ga(ONE, L.h)), Side(lambda L: eH(L.h) @ E)),
        ]),
    ]
    b3_rhs = Side(
        lambda L: ph(vp(L.h1, L.y1), ph(vp(ps(L.h2, L.y2), L.z1), ga(ps(ps(L.h3, L.y3), L.z2), L.l))),
        [S("h", 3), S("y", 3), S("z", 2)],
    )
    if literal:
        b3 = _eq("literal", [X, Hh, Y, Z, Lh],
                 Side(lambda L: ph(vp(L.h1, ph(L.y1, L.z1)), ga(ps(L.h2, ph(L.y2, L.z2)), mu(th(L.x, L.z3), L.l))),
                      [S("h", 2), S("y", 2), S("z", 3)]),
                 Side(b3_rhs.expr, b3_rhs.splits, unused=("x",)))
        b3_note = "printed form: the theta argument is an independent x"
    else:
        b3 = _eq("B3", [Hh, Y, Z, Lh],
                 Side(lambda L: ph(vp(L.h1, ph(L.y1, L.z1)), ga(ps(L.h2, ph(L.y2, L.z2)), mu(th(L.y3, L.z3), L.l))),
                      [S("h", 2), S("y", 3), S("z", 3)]),
                 b3_rhs)
        b3_note = "proof-derived form: theta(x'_3, x''_3)"
    out.append(Condition("B3", [b3], b3_note))
    out += [
        Condition("B4", [_eq("B4", [Hh, Y, Z, Lh],
            Side(lambda L: mu(ps(L.h, ph(L.y1, L.z1)), mu(th(L.y2, L.z2), L.l)), [S("y", 2), S("z", 2)]),
            Side(lambda L: mu(mu(th(vp(L.h1, L.y1), vp(ps(L.h2, L.y2), L.z1)), ps(ps(L.h3, L.y3), L.z2)), L.l),
                 [S("h", 3), S("y", 3), S("z", 2)]))]),
        Condition("B5", [_eq("B5", [X, Hh, K, Z],
            Side(lambda L: mu(th(ph(L.x, ga(L.h1, L.k1)), vp(mu(L.h2, L.k2), L.z1)), ps(mu(L.h3, L.k3), L.z2)),
                 [S("h", 3), S("k", 3), S("z", 2)]),
            Side(lambda L: mu(mu(th(L.x, vp(L.h1, vp(L.k1, L.z1))), ps(L.h2, vp(L.k2, L.z2))), ps(L.k3, L.z3)),
                 [S("h", 2), S("k", 3), S("z", 3)]))]),
        Condition("B6", [_eq("B6", [X, Hh, K, Z],
            Side(lambda L: ph(ph(L.x, ga(L.h1, L.k1)), vp(mu(L.h2, L.k2), L.z)), [S("h", 2), S("k", 2)]),
            Side(lambda L: ph(L.x, ph(vp(L.h1, vp(L.k1, L.z1)), ga(ps(L.h2, vp(L.k2, L.z2)), ps(L.k3, L.z3)))),
                 [S("h", 2), S("k", 3), S("z", 3)]))]),
    ]
    b7_rhs = Side(lambda L: ph(ph(L.x1, L.y1), ph(vp(th(L.x2, L.y2), L.z1), ga(ps(th(L.x3, L.y3), L.z2), L.l))),
                  [S("x", 3), S("y", 3), S("z", 2)])
    if literal:
        b7_lhs = Side(lambda L: ph(L.x, ph(L.y, L.z)), unused=("l",))
        b7_note = "printed form: no eps(h'') factor"
    else:
        b7_lhs = Side(lambda L: ph(L.x, ph(L.y, L.z)) @ eH(L.l))
        b7_note = "h'' occurs on one side only and enters through eps(h'')"
    out.append(Condition("B7", [_eq("B7", [X, Y, Z, Lh], b7_lhs, b7_rhs)], b7_note))
    out += [
        Condition("B8", [_eq("B8", [X, Y, Z, Lh],
            Side(lambda L: mu(th(L.x, ph(L.y1, L.z1)), mu(th(L.y2, L.z2), L.l)), [S("y", 2), S("z", 2)]),
            Side(lambda L: mu(mu(th(ph(L.x1, L.y1), vp(th(L.x2, L.y2), L.z1)), ps(th(L.x3, L.y3), L.z2)), L.l),
                 [S("x", 3), S("y", 3), S("z", 2)]))]),
        Condition("B9", [_eq("B9", [X, Hh, K, Lh],
            Side(lambda L: ph(ph(L.x, ga(L.h1, L.k1)), ga(mu(L.h2, L.k2), L.l)), [S("h", 2), S("k", 2)]),
            Side(lambda L: ph(L.x, ph(vp(L.h1, ga(L.k1, L.l1)), ga(ps(L.h2, ga(L.k2, L.l2)), mu(L.k3, L.l3)))),
                 [S("h", 2), S("k", 3), S("l", 3)]))]),
    ]
    b10_rhs = Side(lambda L: mu(mu(th(L.x, vp(L.h1, ga(L.k1, L.l1))), ps(L.h2, ga(L.k2, L.l2))), mu(L.k3, L.l3)),
                   [S("h", 2), S("k", 3), S("l", 3)])
    if literal:
        b10_lhs = Side(lambda L: mu(mu(L.h, L.k), L.l), unused=("x",))
        b10_note = "printed form: no eps(x) factor"
    else:
        b10_lhs = Side(lambda L: eM(L.x) @ mu(mu(L.h, L.k), L.l))
        b10_note = "x occurs on one side only and enters through eps(x)"
    out.append(Condition("B10", [_eq("B10", [X, Hh, K, Lh], b10_lhs, b10_rhs)], b10_note))
    out += [
        Condition("B11", [_eq("B11", [Hh, X],
            Side(lambda L: ps(L.h2, L.x2) @ vp(L.h1, L.x1), [S("h", 2), S("x", 2)]),
            Side(lambda L: ps(L.h1, L.x1) @ vp(L.h2, L.x2), [S("h", 2), S("x", 2)]))]),
        Condition("B12", [_eq("B12", [X, Y],
            Side(lambda L: th(L.x2, L.y2) @ ph(L.x1, L.y1), [S("x", 2), S("y", 2)]),
            Side(lambda L: th(L.x1, L.y1) @ ph(L.x2, L.y2), [S("x", 2), S("y", 2)]))]),
        Condition("B13", [_eq("B13", [Hh, K],
            Side(lambda L: mu(L.h2, L.k2) @ ga(L.h1, L.k1), [S("h", 2), S("k", 2)]),
            Side(lambda L: mu(L.h1, L.k1) @ ga(L.h2, L.k2), [S("h", 2), S("k", 2)]))]),
        _coalgebra_map_condition("B14", [
            ("varphi", d.varphi, H, M, M), ("psi", d.psi, H, M, H),
            ("phi", d.phi, M, M, M), ("theta", d.theta, M, M, H),
            ("mu", d.mu, H, H, H), ("gamma", d.gamma, H, H, M),
        ]),
    ]
    return out


def cdcp_conditions(d: CdcpData) -> list[Condition]:
    M, H = d.M, d.H.coalgebra
    vp, ps, ph, th = (bilinear(a) for a in (d.varphi, d.psi, d.phi, d.theta))
    mH = bilinear(d.H.algebra.mul)
    E, ONE = basis(d.e), vec(d.H.algebra.unit)
    eM = functional(M.counit)
    S = _Splits(x=M, y=M, z=M, h=H, k=H)
    X, Y, Z = ("x", M.labels), ("y", M.labels), ("z", M.labels)
    Hh, K = ("h", H.labels), ("k", H.labels)
    return [
        Condition("C1", [
            _eq("e.x", [X], Side(lambda L: ph(E, L.x)), Side(lambda L: L.x)),
            _eq("x.e", [X], Side(lambda L: ph(L.x, E)), Side(lambda L: L.x)),
        ]),
        Condition("C2", [
            _eq("theta(x,e)", [X], Side(lambda L: th(L.x, E)), Side(lambda L: eM(L.x) @ ONE)),
            _eq("theta(e,x)", [X], Side(lambda L: th(E, L.x)), Side(lambda L: eM(L.x) @ ONE)),
        ]),
        Condition("C3", [_eq("C3", [Hh, X, Y],
            Side(lambda L: vp(L.h, ph(L.x, L.y))),
            Side(lambda L: ph(vp(L.h1, L.x1), vp(ps(L.h2, L.x2), L.y)), [S("h", 2), S("x", 2)]))]),
        Condition("C4", [_eq("C4", [Hh, X, Y],
            Side(lambda L: mH(ps(L.h, ph(L.x1, L.y1)), th(L.x2, L.y2)), [S("x", 2), S("y", 2)]),
            Side(lambda L: mH(th(vp(L.h1, L.x1), vp(ps(L.h2, L.x2), L.y1)), ps(ps(L.h3, L.x3), L.y2)),
                 [S("h", 3), S("x", 3), S("y", 2)]))]),
        Condition("C5", [_eq("C5", [Hh, K, X],
            Side(lambda L: ps(mH(L.h, L.k), L.x)),
            Side(lambda L: mH(ps(L.h, vp(L.k1, L.x1)), ps(L.k2, L.x2)), [S("k", 2), S("x", 2)]))]),
        Condition("C6", [_eq("C6", [Hh, K, X],
            Side(lambda L: vp(L.h, vp(L.k, L.x))),
            Side(lambda L: vp(mH(L.h, L.k), L.x)))]),
        Condition("C7", [_eq("C7", [X, Y, Z],
            Side(lambda L: ph(L.x, ph(L.y, L.z))),
            Side(lambda L: ph(ph(L.x1, L.y1), vp(th(L.x2, L.y2), L.z)), [S("x", 2), S("y", 2)]))]),
        Condition("C8", [_eq("C8", [X, Y, Z],
            Side(lambda L: mH(th(L.x, ph(L.y1, L.z1)), th(L.y2, L.z2)), [S("y", 2), S("z", 2)]),
            Side(lambda L: mH(th(ph(L.x1, L.y1), vp(th(L.x2, L.y2), L.z1)), ps(th(L.x3, L.y3), L.z2)),
                 [S("x", 3), S("y", 3), S("z", 2)]))]),
        Condition("C9", [_eq("C9", [Hh, X],
            Side(lambda L: ps(L.h2, L.x2) @ vp(L.h1, L.x1), [S("h", 2), S("x", 2)]),
            Side(lambda L: ps(L.h1, L.x1) @ vp(L.h2, L.x2), [S("h", 2), S("x", 2)]))]),
        Condition("C10", [_eq("C10", [X, Y],
            Side(lambda L: th(L.x2, L.y2) @ ph(L.x1, L.y1), [S("x", 2), S("y", 2)]),
            Side(lambda L: th(L.x1, L.y1) @ ph(L.x2, L.y2), [S("x", 2), S("y", 2)]))]),
    ]


def _algebra_map_condition(cid, maps):
    """f(ab) = f(a)f(b) and f(1) = 1 (x) 1 for f: A -> X (x) Y."""
    eqs = []
    for name, arr, A, Xa, Ya in maps:
        f = linear(arr)
        mA, mX, mY = bilinear(A.mul), bilinear(Xa.mul), bilinear(Ya.mul)
        fs = Splitter.from_array(arr)
        inputs = [("a", A.space.basis_labels), ("b", A.space.basis_labels)]
        eqs.append(_eq(f"{name}(ab)", inputs,
                       Side(lambda L, f=f, mA=mA: f(mA(L.a, L.b))),
                       Side(lambda L, mX=mX, mY=mY: mX(L.a1, L.b1) @ mY(L.a2, L.b2),
                            [("a", fs, ("a1", "a2")), ("b", fs, ("b1", "b2"))])))
        u, uX, uY = vec(A.unit), vec(Xa.unit), vec(Ya.unit)
        eqs.append(_eq(f"{name}(1)", [],
                       Side(lambda L, f=f, u=u: f(u)),
                       Side(lambda L, uX=uX, uY=uY: uX @ uY)))
    return Condition(cid, eqs)


def cdcc_conditions(d: CdccData) -> list[Condition]:
    MA, HA, HC = d.M, d.H.algebra, d.H.coalgebra
    mM, mH = bilinear(MA.mul), bilinear(HA.mul)
    eta, eH = functional(MA.character), functional(HC.counit)
    UM = vec(MA.unit)
    NB, BD = Splitter.from_array(d.nabla), Splitter.from_array(d.blackdown)
    DL, SG = Splitter.from_array(d.delta), Splitter.from_array(d.sigma)
    DH = Splitter.from_array(HC.comul)
    DH3 = Splitter.from_array(iterated_coproduct(HC, 3))
    X, Hh = ("x", MA.space.basis_labels), ("h", HC.labels)
    return [
        Condition("D1", [
            _eq("eta(x1)x2", [X], Side(lambda L: eta(L.p) @ L.q, [("x", DL, ("p", "q"))]), Side(lambda L: L.x)),
            _eq("x1 eta(x2)", [X], Side(lambda L: L.p @ eta(L.q), [("x", DL, ("p", "q"))]), Side(lambda L: L.x)),
        ]),
        Condition("D2", [
            _eq("eta(h1)h2", [Hh], Side(lambda L: eta(L.a) @ L.b, [("h", SG, ("a", "b"))]),
                Side(lambda L: eH(L.h) @ UM)),
            _eq("h1 eta(h2)", [Hh], Side(lambda L: L.a @ eta(L.b), [("h", SG, ("a", "b"))]),
                Side(lambda L: eH(L.h) @ UM)),
        ]),
        Condition("D3", [
            _eq("coassociative", [X],
                Side(lambda L: L.a1 @ L.a2 @ L.b, [("x", NB, ("a", "b")), ("a", DH, ("a1", "a2"))]),
                Side(lambda L: L.a @ L.c @ L.d, [("x", NB, ("a", "b")), ("b", NB, ("c", "d"))])),
            _eq("counital", [X],
                Side(lambda L: eH(L.a) @ L.b, [("x", NB, ("a", "b"))]),
                Side(lambda L: L.x)),
        ]),
        Condition("D4", [_eq("D4", [X],
            Side(lambda L: L.p @ L.q1 @ L.q2, [("x", DL, ("p", "q")), ("q", DL, ("q1", "q2"))]),
            Side(lambda L: mM(L.p1, L.u) @ mM(L.p2, L.v) @ L.s,
                 [("x", DL, ("p", "q")), ("p", DL, ("p1", "p2")), ("q", NB, ("r", "s")),
                  ("r", SG, ("u", "v"))]))]),
        Condition("D5", [_eq("D5", [X],
            Side(lambda L: L.a @ L.b1 @ L.b2, [("x", NB, ("a", "b")), ("b", DL, ("b1", "b2"))]),
            Side(lambda L: mH(L.pa, L.k0) @ mM(L.pb, L.k1) @ L.qb,
                 [("x", DL, ("p", "q")), ("p", NB, ("pa", "pb")), ("q", NB, ("qa", "qb")),
                  ("qa", BD, ("k0", "k1"))]))]),
        Condition("D6", [_eq("D6", [Hh],
            Side(lambda L: L.a @ mM(L.b1, L.r1) @ mM(L.b2, L.r2),
                 [("h", DH, ("h1", "h2")), ("h1", SG, ("a", "b")), ("b", DL, ("b1", "b2")),
                  ("h2", SG, ("r1", "r2"))]),
            Side(lambda L: mM(mM(L.a1, L.s1), L.t1) @ mM(mM(L.a2, L.s2), L.t2) @ mM(L.b0, L.k1),
                 [("h", DH, ("h1", "h2")), ("h1", SG, ("a", "b")), ("a", DL, ("a1", "a2")),
                  ("b", NB, ("bm", "b0")), ("bm", SG, ("s1", "s2")), ("h2", BD, ("k0", "k1")),
                  ("k0", SG, ("t1", "t2"))]))]),
        Condition("D7", [_eq("D7", [Hh],
            Side(lambda L: L.p0 @ mM(L.q1, L.r1) @ mM(L.q2, L.r2),
                 [("h", DH, ("h1", "h2")), ("h1", BD, ("p0", "p1")), ("p1", DL, ("q1", "q2")),
                  ("h2", SG, ("r1", "r2"))]),
            Side(lambda L: mH(mH(L.am, L.c0), L.l0) @ mM(mM(L.a0, L.c1), L.l1) @ mM(L.b0, L.k1),
                 [("h", DH, ("h1", "h2")), ("h1", SG, ("a", "b")), ("a", NB, ("am", "a0")),
                  ("b", NB, ("bm", "b0")), ("bm", BD, ("c0", "c1")), ("h2", BD, ("k0", "k1")),
                  ("k0", BD, ("l0", "l1"))]))]),
        Condition("D8", [_eq("D8", [Hh],
            Side(lambda L: L.p0 @ mH(L.pm, L.k0) @ mM(L.p00, L.k1),
                 [("h", DH, ("h1", "h2")), ("h1", BD, ("p0", "p1")), ("p1", NB, ("pm", "p00")),
                  ("h2", BD, ("k0", "k1"))]),
            Side(lambda L: L.a @ L.b @ L.k1, [("h", BD, ("k0", "k1")), ("k0", DH, ("a", "b"))]))]),
        Condition("D9", [_eq("D9", [X, Hh],
            Side(lambda L: mH(L.a, L.c) @ mM(L.b, L.d), [("x", NB, ("a", "b")), ("h", BD, ("c", "d"))]),
            Side(lambda L: mH(L.c, L.a) @ mM(L.d, L.b), [("x", NB, ("a", "b")), ("h", BD, ("c", "d"))]))]),
        Condition("D10", [_eq("D10", [X, Hh],
            Side(lambda L: mM(L.u, L.p) @ mM(L.v, L.q), [("h", SG, ("u", "v")), ("x", DL, ("p", "q"))]),
            Side(lambda L: mM(L.p, L.u) @ mM(L.q, L.v), [("h", SG, ("u", "v")), ("x", DL, ("p", "q"))]))]),
        _algebra_map_condition("D11", [
            ("nabla", d.nabla, MA, HA, MA), ("blackdown", d.blackdown, HA, HA, MA),
            ("delta", d.delta, MA, MA, MA), ("sigma", d.sigma, HA, MA, MA),
        ]),
    ]


def _run(conditions, kind, max_violations, axiom_forms: str = "") -> AxiomReport:
    report = AxiomReport(kind=kind, axiom_forms=axiom_forms)
    for c in conditions:
        report.add(c.check(max_violations))
    return report


def verify_bicocycle_conditions(
    d: BicocycleData, *, literal: bool = False, max_violations: int = DEFAULT_MAX_VIOLATIONS
) -> AxiomReport:
    forms = "literal" if literal else "proof-derived"
    return _run(bicocycle_conditions(d, literal=literal), "bicocycle_data", max_violations, forms)


def verify_cdcp_conditions(d: CdcpData, *, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    return _run(cdcp_conditions(d), "cdcp_data", max_violations)


def verify_cdcc_conditions(d: CdccData, *, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    return _run(cdcc_conditions(d), "cdcc_data", max_violations)


# --------------------------------------------------------------------------
# standing hypotheses on the data (not part of the numbered conditions)


def _normalization_result(name, checks, max_violations) -> AxiomResult:
    res = AxiomResult(name, checked=len(checks))
    for label, lhs, rhs in checks:
        if not is_zero(rational_array(lhs) - rational_array(rhs)):
            res.record((label,), rational_array(lhs) - rational_array(rhs), max_violations)
    return res


def _coalgebra_map_result(name, arr, A, B, C, max_violations) -> AxiomResult:
    res = AxiomResult(f"coalgebra_map:{name}", checked=A.dim * B.dim)
    lhs = np.tensordot(arr, C.comul, axes=([2], [0]))
    rhs = _einsum("apq,bst,psu,qtv->abuv", A.comul, B.comul, arr, arr)
    el = arr @ C.counit
    er = np.multiply.outer(A.counit, B.counit)
    for a, b in product(range(A.dim), range(B.dim)):
        if not (is_zero(lhs[a, b] - rhs[a, b]) and el[a, b] == er[a, b]):
            res.record((A.labels[a], B.labels[b]), (lhs[a, b] - rhs[a, b]).reshape(-1), max_violations)
    return res


def bicocycle_invariants(d: BicocycleData, *, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    """The normalizations and the coalgebra-map property assumed of the data."""
    M, H = d.M, d.H
    e, one = d.e, d.one
    eM, eH = unit_vector(M.dim, e), unit_vector(H.dim, one)
    checks = []
    for x in range(M.dim):
        checks += [(f"varphi(1,{M.labels[x]})", d.varphi[one, x], unit_vector(M.dim, x)),
                   (f"psi(1,{M.labels[x]})", d.psi[one, x], M.counit[x] * eH)]
    for h in range(H.dim):
        checks += [(f"psi({H.labels[h]},e)", d.psi[h, e], unit_vector(H.dim, h)),
                   (f"varphi({H.labels[h]},e)", d.varphi[h, e], H.counit[h] * eM)]
    checks += [("theta(e,e)", d.theta[e, e], eH), ("mu(1,1)", d.mu[one, one], eH),
               ("phi(e,e)", d.phi[e, e], eM), ("gamma(1,1)", d.gamma[one, one], eM)]
    report = AxiomReport(kind="bicocycle_invariants")
    report.add(_normalization_result("normalizations", checks, max_violations))
    for name, arr, A, B, C in (("varphi", d.varphi, H, M, M), ("psi", d.psi, H, M, H),
                               ("phi", d.phi, M, M, M), ("theta", d.theta, M, M, H),
                               ("mu", d.mu, H, H, H), ("gamma", d.gamma, H, H, M)):
        report.add(_coalgebra_map_result(name, arr, A, B, C, max_violations))
    return report


def cdcp_invariants(d: CdcpData, *, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    M, H = d.M, d.H.coalgebra
    e = d.e
    u = d.H.algebra.unit
    eM = unit_vector(M.dim, e)
    checks = []
    for x in range(M.dim):
        checks += [(f"1|>{M.labels[x]}", u @ d.varphi[:, x], unit_vector(M.dim, x)),
                   (f"psi(1,{M.labels[x]})", u @ d.psi[:, x], M.counit[x] * u)]
    for h in range(H.dim):
        checks += [(f"psi({H.labels[h]},e)", d.psi[h, e], unit_vector(H.dim, h)),
                   (f"{H.labels[h]}|>e", d.varphi[h, e], H.counit[h] * eM)]
    checks.append(("theta(e,e)", d.theta[e, e], u))
    report = AxiomReport(kind="cdcp_invariants")
    report.merge(verify_bialgebra(d.H, max_violations=max_violations))
    report.add(_normalization_result("normalizations", checks, max_violations))
    for name, arr, A, B, C in (("varphi", d.varphi, H, M, M), ("psi", d.psi, H, M, H),
                               ("phi", d.phi, M, M, M), ("theta", d.theta, M, M, H)):
        report.add(_coalgebra_map_result(name, arr, A, B, C, max_violations))
    return report


def cdcc_invariants(d: CdccData, *, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    """Counital normalizations; the algebra-map property is condition D11."""
    MA, H = d.M, d.H
    eta, epsH = MA.character, H.coalgebra.counit
    uM, uH = MA.unit, H.algebra.unit
    checks = []
    for x in range(MA.dim):
        lab = MA.space.basis_labels[x]
        checks += [(f"(eps(x)1)nabla({lab})", np.tensordot(epsH, d.nabla[x], axes=1), unit_vector(MA.dim, x)),
                   (f"(1 eta)nabla({lab})", d.nabla[x] @ eta, eta[x] * uH)]
    for h in range(H.dim):
        lab = H.labels[h]
        checks += [(f"(1 eta)blackdown({lab})", d.blackdown[h] @ eta, unit_vector(H.dim, h)),
                   (f"(eps 1)blackdown({lab})", np.tensordot(epsH, d.blackdown[h], axes=1), epsH[h] * uM),
                   (f"(eta eta)sigma({lab})", [eta @ d.sigma[h] @ eta], [epsH[h]])]
    report = AxiomReport(kind="cdcc_invariants")
    report.merge(verify_bialgebra(H, max_violations=max_violations))
    report.merge(verify_algebra(MA, max_violations=max_violations))
    report.add(_normalization_result("normalizations", checks, max_violations))
    return report


# --------------------------------------------------------------------------
# semiduality


def dual_algebra(C: CoalgebraTensor) -> AlgebraTensor:
    """The convolution algebra C*, with character evaluation at the group-like."""
    space = BasedSpace(_dual_label(s) for s in C.labels)
    char = unit_vector(C.dim, C.grouplike) if C.grouplike is not None else None
    return AlgebraTensor(space, C.comul.transpose(1, 2, 0).copy(), C.counit.copy(), char)


def semidual_projections(d: CdcpData):
    """(M*, H*, q, p) for L = (M (x) H)*: q, p are dual to x -> x(x)1 and h -> e(x)h."""
    dm, dh = d.M.dim, d.H.dim
    one = _one_hot_index(d.H.algebra.unit)
    if one is None:
        raise ValueError("the unit of H must be a basis element")
    q = zeros((dm * dh, dm))
    p = zeros((dm * dh, dh))
    for x in range(dm):
        q[x * dh + one, x] = Fraction(1)
    for h in range(dh):
        p[d.e * dh + h, h] = Fraction(1)
    return dual_algebra(d.M), dualize(d.H), q, p


def cdcc_from_cdcp(d: CdcpData, *, return_iso: bool = False):
    """Factor the dual of the cocycle double cross product of ``d``."""
    L = dualize(build_cdcp(d))
    Ms, Hs, q, p = semidual_projections(d)
    return factorize_cdcc(L, Ms, Hs, q, p, return_iso=return_iso)
