"""Bicocycle double cross sums of Lie algebras.

A Lie algebra g = m + h with complementary subspaces is described by six
bilinear maps::

    phi   : m x m -> m        theta : m x m -> h
    mu    : h x h -> h        gamma : h x h -> m
    varphi: h x m -> m        psi   : h x m -> h

with bracket::

    [x + Z, x' + Z'] = (phi(x,x') + varphi(Z,x') - varphi(Z',x) + gamma(Z,Z'))
                     + (mu(Z,Z') + psi(Z,x') - psi(Z',x) + theta(x,x'))

The bracket is a Lie bracket exactly when the axioms A1-A9 hold.  Their
formulas live in ``_AXIOMS`` and are evaluated both on dense tensors and
on the sparse closed-form data used for the Witt-type algebra W1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Optional

import numpy as np

from .kernel import (
    BasedSpace,
    BilinearMapTensor,
    ShapeMismatch,
    SubspacePair,
    is_zero,
    unit_vector,
    zeros,
)
from .report import DEFAULT_MAX_VIOLATIONS, AxiomReport, AxiomResult, residual_is_zero, sweep

AXIOM_IDS = ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9")


class IndexOutOfRange(ValueError):
    """A closed-form graded map produced an index outside its declared range."""


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    space: BasedSpace
    bracket: BilinearMapTensor

    def __post_init__(self):
        b = self.bracket
        if not (b.left == b.right == b.codomain == self.space):
            raise ShapeMismatch("bracket must be a map space x space -> space")

    @classmethod
    def from_structure_constants(cls, labels, entries: dict) -> "LieAlgebra":
        """``entries`` maps label pairs to images; antisymmetric partners are filled in."""
        space = BasedSpace(labels)
        full = {}
        for (a, b), image in entries.items():
            full[(a, b)] = image
            full.setdefault((b, a), {k: -Fraction(v) for k, v in image.items()})
        return cls(space, BilinearMapTensor.from_entries(space, space, space, full))

    @property
    def dim(self) -> int:
        return self.space.dim

    def __call__(self, x, y):
        return self.bracket(x, y)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.bracket == other.bracket


@dataclass(frozen=True, eq=False)
class BicocycleSumData:
    m: BasedSpace
    h: BasedSpace
    phi: BilinearMapTensor
    theta: BilinearMapTensor
    mu: BilinearMapTensor
    gamma: BilinearMapTensor
    varphi: BilinearMapTensor
    psi: BilinearMapTensor

    def __post_init__(self):
        m, h = self.m, self.h
        expected = {
            "phi": (m, m, m),
            "theta": (m, m, h),
            "mu": (h, h, h),
            "gamma": (h, h, m),
            "varphi": (h, m, m),
            "psi": (h, m, h),
        }
        for name, (a, b, c) in expected.items():
            t = getattr(self, name)
            if t.coeffs.shape != (a.dim, b.dim, c.dim):
                raise ShapeMismatch(
                    f"{name} has shape {t.coeffs.shape}, expected {(a.dim, b.dim, c.dim)}"
                )

    @classmethod
    def zero(cls, m: BasedSpace, h: BasedSpace) -> "BicocycleSumData":
        z = BilinearMapTensor.zero
        return cls(m, h, z(m, m, m), z(m, m, h), z(h, h, h), z(h, h, m), z(h, m, m), z(h, m, h))

    @classmethod
    def from_arrays(cls, m, h, **arrays) -> "BicocycleSumData":
        """Construct from raw coefficient arrays; missing maps default to zero."""
        sig = {
            "phi": (m, m, m),
            "theta": (m, m, h),
            "mu": (h, h, h),
            "gamma": (h, h, m),
            "varphi": (h, m, m),
            "psi": (h, m, h),
        }
        maps = {}
        for name, (a, b, c) in sig.items():
            arr = arrays.pop(name, None)
            if arr is None:
                arr = zeros((a.dim, b.dim, c.dim))
            maps[name] = BilinearMapTensor(a, b, c, arr)
        if arrays:
            raise TypeError(f"unknown maps: {sorted(arrays)}")
        return cls(m, h, **maps)

    def replace(self, **maps) -> "BicocycleSumData":
        fields = {n: getattr(self, n) for n in ("phi", "theta", "mu", "gamma", "varphi", "psi")}
        for name, value in maps.items():
            if not isinstance(value, BilinearMapTensor):
                old = fields[name]
                value = BilinearMapTensor(old.left, old.right, old.codomain, value)
            fields[name] = value
        return BicocycleSumData(self.m, self.h, **fields)

    def __eq__(self, other) -> bool:
        return isinstance(other, BicocycleSumData) and all(
            getattr(self, n) == getattr(other, n)
            for n in ("m", "h", "phi", "theta", "mu", "gamma", "varphi", "psi")
        )


# --------------------------------------------------------------------------
# axiom formulas, generic over a backend ``o`` exposing the six maps


def _cyc(f, a, b, c):
    return f(a, b, c) + f(b, c, a) + f(c, a, b)


def _a2(o, Z, x, y):
    lhs = o.varphi(Z, o.phi(x, y))
    rhs = (
        o.phi(o.varphi(Z, x), y)
        + o.phi(x, o.varphi(Z, y))
        + o.varphi(o.psi(Z, x), y)
        - o.varphi(o.psi(Z, y), x)
        + o.gamma(o.theta(x, y), Z)
    )
    return lhs - rhs


def _a3(o, Z, x, y):
    lhs = o.mu(Z, o.theta(x, y))
    rhs = (
        o.theta(o.varphi(Z, x), y)
        + o.theta(x, o.varphi(Z, y))
        + o.psi(o.psi(Z, x), y)
        - o.psi(o.psi(Z, y), x)
        - o.psi(Z, o.phi(x, y))
    )
    return lhs - rhs


def _a4(o, Z, W, x):
    lhs = o.varphi(o.mu(Z, W), x)
    rhs = (
        o.varphi(Z, o.varphi(W, x))
        - o.varphi(W, o.varphi(Z, x))
        + o.gamma(o.psi(Z, x), W)
        + o.gamma(Z, o.psi(W, x))
        - o.phi(o.gamma(Z, W), x)
    )
    return lhs - rhs


def _a4_literal(o, Z, W, x):
    # the printed variant, whose first two terms cancel each other
    lhs = o.varphi(o.mu(Z, W), x)
    rhs = (
        o.varphi(Z, o.varphi(W, x))
        - o.varphi(Z, o.varphi(W, x))
        + o.gamma(o.psi(Z, x), W)
        + o.gamma(Z, o.psi(W, x))
        - o.phi(o.gamma(Z, W), x)
    )
    return lhs - rhs


def _a5(o, Z, W, x):
    lhs = o.psi(o.mu(Z, W), x)
    rhs = (
        o.mu(Z, o.psi(W, x))
        + o.mu(o.psi(Z, x), W)
        + o.psi(Z, o.varphi(W, x))
        - o.psi(W, o.varphi(Z, x))
        - o.theta(o.gamma(Z, W), x)
    )
    return lhs - rhs


def _a6(o, x, y, w):
    return _cyc(lambda a, b, c: o.phi(o.phi(a, b), c), x, y, w) + _cyc(
        lambda a, b, c: o.varphi(o.theta(a, b), c), x, y, w
    )


def _a7(o, x, y, w):
    return _cyc(lambda a, b, c: o.psi(o.theta(a, b), c), x, y, w) + _cyc(
        lambda a, b, c: o.theta(o.phi(a, b), c), x, y, w
    )


def _a8(o, Z, W, U):
    return _cyc(lambda a, b, c: o.gamma(o.mu(a, b), c), Z, W, U) - _cyc(
        lambda a, b, c: o.varphi(a, o.gamma(b, c)), Z, W, U
    )


def _a9(o, Z, W, U):
    return _cyc(lambda a, b, c: o.mu(o.mu(a, b), c), Z, W, U) - _cyc(
        lambda a, b, c: o.psi(a, o.gamma(b, c)), Z, W, U
    )


# axiom id -> (formula, argument kinds); "h" arguments are Z-type, "m" are x-type
_AXIOMS: dict[str, tuple[Callable, str]] = {
    "A2": (_a2, "hmm"),
    "A3": (_a3, "hmm"),
    "A4": (_a4, "hhm"),
    "A5": (_a5, "hhm"),
    "A6": (_a6, "mmm"),
    "A7": (_a7, "mmm"),
    "A8": (_a8, "hhh"),
    "A9": (_a9, "hhh"),
}
_A1_MAPS = (("phi", "m"), ("theta", "m"), ("mu", "h"), ("gamma", "h"))


# --------------------------------------------------------------------------
# dense backend


class _DenseOps:
    def __init__(self, d: BicocycleSumData):
        self.d = d
        self.em = [unit_vector(d.m.dim, i) for i in range(d.m.dim)]
        self.eh = [unit_vector(d.h.dim, i) for i in range(d.h.dim)]
        for name in ("phi", "theta", "mu", "gamma", "varphi", "psi"):
            setattr(self, name, getattr(d, name))

    def basis(self, kind: str, i: int):
        return (self.em if kind == "m" else self.eh)[i]


def _dense_axiom_check(d: BicocycleSumData, t: tuple):
    axiom_id, idx = t[0], t[1:]
    formula, kinds = _AXIOMS[axiom_id] if axiom_id != "A4-literal" else (_a4_literal, "hhm")
    o = _DenseOps(d)
    r = formula(o, *(o.basis(k, i) for k, i in zip(kinds, idx)))
    return None if residual_is_zero(r) else r


def _dense_alternation_check(d: BicocycleSumData, t: tuple):
    name, i, j = t
    c = getattr(d, name).coeffs
    r = c[i, j, :] + c[j, i, :]
    return None if residual_is_zero(r) else r


def _space(d, kind):
    return d.m if kind == "m" else d.h


def verify_matched_pair(
    d: BicocycleSumData,
    *,
    literal: bool = False,
    max_violations: int = DEFAULT_MAX_VIOLATIONS,
    jobs: int = 1,
) -> AxiomReport:
    """Check A1-A9 on every basis tuple.

    A4 is the form obtained from expanding the Jacobi identity; with
    ``literal=True`` the printed self-cancelling variant is evaluated too,
    as the extra entry ``A4-literal``.
    """
    report = AxiomReport(kind="bicocycle_sum_data", axiom_forms="literal" if literal else "proof-derived")

    def a1_labels(t):
        name, i, j = t
        sp = _space(d, dict(_A1_MAPS)[name])
        return (name, sp.basis_labels[i], sp.basis_labels[j])

    a1_tuples = [
        (name, i, j)
        for name, kind in _A1_MAPS
        for i in range(_space(d, kind).dim)
        for j in range(i, _space(d, kind).dim)
    ]
    report.add(
        sweep("A1", _dense_alternation_check, d, a1_tuples, labels=a1_labels,
              cap=max_violations, jobs=jobs)
    )
    ids = list(_AXIOMS)
    if literal:
        ids.insert(ids.index("A4") + 1, "A4-literal")
    for axiom_id in ids:
        kinds = "hhm" if axiom_id == "A4-literal" else _AXIOMS[axiom_id][1]
        spaces = [_space(d, k) for k in kinds]
        tuples = [(axiom_id,) + idx for idx in product(*(range(s.dim) for s in spaces))]

        def labels(t, spaces=spaces):
            return tuple(s.basis_labels[i] for s, i in zip(spaces, t[1:]))

        note = "printed form; cancels identically" if axiom_id == "A4-literal" else ""
        report.add(
            sweep(axiom_id, _dense_axiom_check, d, tuples, labels=labels,
                  cap=max_violations, jobs=jobs, note=note)
        )
    return report


def _jacobi_check(L: LieAlgebra, t: tuple):
    c = L.bracket.coeffs
    i, j, k = t
    r = c[i, j, :] @ c[:, k, :] + c[j, k, :] @ c[:, i, :] + c[k, i, :] @ c[:, j, :]
    return None if residual_is_zero(r) else r


def _antisymmetry_check(L: LieAlgebra, t: tuple):
    c = L.bracket.coeffs
    i, j = t
    r = c[i, j, :] + c[j, i, :]
    return None if residual_is_zero(r) else r


def verify_lie_axioms(
    L: LieAlgebra, *, max_violations: int = DEFAULT_MAX_VIOLATIONS, jobs: int = 1
) -> AxiomReport:
    """Antisymmetry on basis pairs (including [x,x]=0) and Jacobi on basis triples."""
    n = L.dim
    lab = L.space.basis_labels
    report = AxiomReport(kind="lie_algebra")
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    report.add(
        sweep("antisymmetry", _antisymmetry_check, L, pairs,
              labels=lambda t: tuple(lab[i] for i in t), cap=max_violations, jobs=jobs)
    )
    triples = list(product(range(n), repeat=3))
    report.add(
        sweep("jacobi", _jacobi_check, L, triples,
              labels=lambda t: tuple(lab[i] for i in t), cap=max_violations, jobs=jobs)
    )
    return report


def build_bicocycle_sum(d: BicocycleSumData) -> LieAlgebra:
    """The Lie bracket on m + h defined by the six maps (no axioms checked)."""
    dm, dh = d.m.dim, d.h.dim
    n = dm + dh
    space = BasedSpace(d.m.basis_labels + d.h.basis_labels)
    c = zeros((n, n, n))
    c[:dm, :dm, :dm] = d.phi.coeffs
    c[:dm, :dm, dm:] = d.theta.coeffs
    c[dm:, :dm, :dm] = d.varphi.coeffs
    c[dm:, :dm, dm:] = d.psi.coeffs
    c[:dm, dm:, :dm] = -d.varphi.coeffs.transpose(1, 0, 2)
    c[:dm, dm:, dm:] = -d.psi.coeffs.transpose(1, 0, 2)
    c[dm:, dm:, :dm] = d.gamma.coeffs
    c[dm:, dm:, dm:] = d.mu.coeffs
    return LieAlgebra(space, BilinearMapTensor(space, space, space, c))


def adapted_algebra(L: LieAlgebra, pair: SubspacePair) -> LieAlgebra:
    """L rewritten in the basis formed by the m columns followed by the h columns."""
    if pair.ambient.dim != L.dim:
        raise ShapeMismatch("subspace pair lives in a different ambient space")
    P = pair.basis_matrix
    Pinv = pair.inverse
    space = BasedSpace(pair.m_labels + pair.h_labels)
    n = L.dim
    if n == 0:
        return LieAlgebra(space, BilinearMapTensor.zero(space, space, space))
    c = np.einsum("ia,jb,ijk,ck->abc", P, P, L.bracket.coeffs, Pinv)
    return LieAlgebra(space, BilinearMapTensor(space, space, space, c))


def decompose(L: LieAlgebra, pair: SubspacePair) -> BicocycleSumData:
    """Read off the six maps of L relative to a complementary pair."""
    c = adapted_algebra(L, pair).bracket.coeffs
    dm = pair.m_dim
    return BicocycleSumData.from_arrays(
        pair.m_space,
        pair.h_space,
        phi=c[:dm, :dm, :dm],
        theta=c[:dm, :dm, dm:],
        varphi=c[dm:, :dm, :dm],
        psi=c[dm:, :dm, dm:],
        gamma=c[dm:, dm:, :dm],
        mu=c[dm:, dm:, dm:],
    )


# --------------------------------------------------------------------------
# specializations


@dataclass
class Specialization:
    theta_trivial: bool
    gamma_trivial: bool
    varphi_is_left_action: bool
    psi_is_right_action: bool
    phi_is_lie_bracket: bool
    mu_is_lie_bracket: bool
    theta_is_2cocycle: Optional[bool]
    gamma_is_2cocycle: Optional[bool]
    valid: bool
    labels: tuple[str, ...] = ()
    abelian_extension_side: Optional[str] = None

    @property
    def matched_pair(self) -> bool:
        return "matched_pair" in self.labels

    @property
    def left_unified_product(self) -> bool:
        return "left_unified_product" in self.labels

    @property
    def right_unified_product(self) -> bool:
        return "right_unified_product" in self.labels

    @property
    def abelian_extension(self) -> bool:
        return "abelian_extension" in self.labels


def _all_zero(o, f, kinds, d):
    spaces = [_space(d, k) for k in kinds]
    for idx in product(*(range(s.dim) for s in spaces)):
        if not residual_is_zero(f(o, *(o.basis(k, i) for k, i in zip(kinds, idx)))):
            return False
    return True


def _alternating(t: BilinearMapTensor) -> bool:
    return is_zero(t.coeffs + t.coeffs.transpose(1, 0, 2))


def classify_specialization(d: BicocycleSumData) -> Specialization:
    """Which classical special case (if any) a datum falls into."""
    o = _DenseOps(d)
    theta_trivial = d.theta.is_zero()
    gamma_trivial = d.gamma.is_zero()
    left_action = _all_zero(
        o,
        lambda o, Z, W, x: o.varphi(o.mu(Z, W), x)
        - o.varphi(Z, o.varphi(W, x))
        + o.varphi(W, o.varphi(Z, x)),
        "hhm",
        d,
    )
    right_action = _all_zero(
        o,
        lambda o, Z, x, y: o.psi(Z, o.phi(x, y))
        - o.psi(o.psi(Z, x), y)
        + o.psi(o.psi(Z, y), x),
        "hmm",
        d,
    )
    phi_lie = _alternating(d.phi) and _all_zero(
        o, lambda o, a, b, c: _cyc(lambda p, q, r: o.phi(o.phi(p, q), r), a, b, c), "mmm", d
    )
    mu_lie = _alternating(d.mu) and _all_zero(
        o, lambda o, a, b, c: _cyc(lambda p, q, r: o.mu(o.mu(p, q), r), a, b, c), "hhh", d
    )
    theta_cocycle = None
    if phi_lie and right_action:
        theta_cocycle = _alternating(d.theta) and _all_zero(o, _a7, "mmm", d)
    gamma_cocycle = None
    if mu_lie and left_action:
        gamma_cocycle = _alternating(d.gamma) and _all_zero(o, _a8, "hhh", d)

    labels = []
    side = None
    if theta_trivial and gamma_trivial:
        labels.append("matched_pair")
    elif theta_trivial:
        labels.append("left_unified_product")
    elif gamma_trivial:
        labels.append("right_unified_product")
    if d.varphi.is_zero() and gamma_trivial and d.mu.is_zero() and theta_cocycle:
        side = "m_by_h"
    elif d.psi.is_zero() and theta_trivial and d.phi.is_zero() and gamma_cocycle:
        side = "h_by_m"
    if side:
        labels.append("abelian_extension")
    return Specialization(
        theta_trivial=theta_trivial,
        gamma_trivial=gamma_trivial,
        varphi_is_left_action=left_action,
        psi_is_right_action=right_action,
        phi_is_lie_bracket=phi_lie,
        mu_is_lie_bracket=mu_lie,
        theta_is_2cocycle=theta_cocycle,
        gamma_is_2cocycle=gamma_cocycle,
        valid=verify_matched_pair(d).ok,
        labels=tuple(labels),
        abelian_extension_side=side,
    )


# --------------------------------------------------------------------------
# graded, closed-form data


class SparseVec(dict):
    """Finitely supported vector {basis index: coefficient}."""

    def __add__(self, other):
        out = SparseVec(self)
        for k, v in other.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def __neg__(self):
        return SparseVec({k: -v for k, v in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SparseVec({k: c * v for k, v in self.items() if c * v})


# A closed-form map returns (coefficient, output index) or None for zero.
BasisMap = Callable[[int, int], Optional[tuple[int, int]]]


@dataclass(frozen=True)
class GradedLieData:
    """Six closed-form maps on z_lo, z_lo+1, ... split by index class."""

    name: str
    lo: int
    in_m: Callable[[int], bool]
    bracket_fn: BasisMap
    phi: BasisMap
    theta: BasisMap
    mu: BasisMap
    gamma: BasisMap
    varphi: BasisMap
    psi: BasisMap
    hi: Optional[int] = None

    def in_h(self, i: int) -> bool:
        return i >= self.lo and not self.in_m(i)


class _GradedOps:
    _signature = {
        "phi": ("m", "m", "m"),
        "theta": ("m", "m", "h"),
        "mu": ("h", "h", "h"),
        "gamma": ("h", "h", "m"),
        "varphi": ("h", "m", "m"),
        "psi": ("h", "m", "h"),
    }

    def __init__(self, g: GradedLieData, bound: int):
        self.g = g
        self.bound = bound
        # inputs of a triple with index sum <= bound reach bound - 2*lo, and so
        # can any partial result
        self.top = bound - 2 * g.lo
        for name in self._signature:
            setattr(self, name, self._extend(name))

    def _kind(self, i):
        return "m" if self.g.in_m(i) else "h"

    def _extend(self, name):
        f = getattr(self.g, name)
        a_kind, b_kind, out_kind = self._signature[name]

        def apply(u: SparseVec, v: SparseVec) -> SparseVec:
            out = SparseVec()
            for i, a in u.items():
                for j, b in v.items():
                    hit = f(i, j)
                    if hit is None:
                        continue
                    coef, k = hit
                    self._check_index(name, i, j, k, out_kind)
                    out = out + SparseVec({k: Fraction(coef) * a * b})
            return out

        return apply

    def _check_index(self, name, i, j, k, out_kind):
        if k != i + j:
            raise IndexOutOfRange(f"{name}(z{i}, z{j}) -> z{k} breaks the grading")
        if k < self.g.lo or k > self.top or (self.g.hi is not None and k > self.g.hi):
            raise IndexOutOfRange(f"{name}(z{i}, z{j}) -> z{k} outside [{self.g.lo}, {self.top}]")
        if self._kind(k) != out_kind:
            raise IndexOutOfRange(f"{name}(z{i}, z{j}) -> z{k} lands in the wrong summand")

    def basis(self, kind, i):
        return SparseVec({i: Fraction(1)})

    def bracket(self, i: int, j: int) -> SparseVec:
        zi, zj = self.basis(None, i), self.basis(None, j)
        ki, kj = self._kind(i), self._kind(j)
        if ki == "m" and kj == "m":
            return self.phi(zi, zj) + self.theta(zi, zj)
        if ki == "h" and kj == "m":
            return self.varphi(zi, zj) + self.psi(zi, zj)
        if ki == "m" and kj == "h":
            return -(self.varphi(zj, zi) + self.psi(zj, zi))
        return self.gamma(zi, zj) + self.mu(zi, zj)


def _graded_tuples(g: GradedLieData, kinds: str, bound: int):
    top = bound - g.lo * (len(kinds) - 1)
    pools = [
        [i for i in range(g.lo, top + 1) if (g.in_m(i) if k == "m" else g.in_h(i))]
        for k in kinds
    ]

    def rec(prefix, rest, total):
        if not rest:
            yield tuple(prefix)
            return
        remaining_min = g.lo * (len(rest) - 1)
        for i in rest[0]:
            if total + i + remaining_min > bound:
                break
            yield from rec(prefix + [i], rest[1:], total + i)

    return list(rec([], pools, 0))


def _graded_axiom_check(args, t):
    g, bound = args
    o = _GradedOps(g, bound)
    axiom_id, idx = t[0], t[1:]
    if axiom_id == "A1":
        name, i, j = idx
        f = getattr(o, name)
        r = f(o.basis(None, i), o.basis(None, j)) + f(o.basis(None, j), o.basis(None, i))
    elif axiom_id == "bracket":
        i, j = idx
        hit = g.bracket_fn(i, j)
        expected = SparseVec({hit[1]: Fraction(hit[0])}) if hit and hit[0] else SparseVec()
        r = o.bracket(i, j) - expected
    else:
        formula, kinds = _AXIOMS[axiom_id] if axiom_id != "A4-literal" else (_a4_literal, "hhm")
        r = formula(o, *(o.basis(None, i) for i in idx))
    return None if residual_is_zero(r) else dict(r)


def graded_verify(
    g: GradedLieData,
    sum_bound: int,
    *,
    literal: bool = False,
    max_violations: int = DEFAULT_MAX_VIOLATIONS,
    jobs: int = 1,
) -> AxiomReport:
    """A1-A9 and the bracket formula on every tuple with index sum <= sum_bound."""
    if sum_bound < g.lo:
        raise ValueError(f"sum_bound must be >= {g.lo}")
    report = AxiomReport(kind="graded_lie", axiom_forms="literal" if literal else "proof-derived")
    args = (g, sum_bound)
    z = lambda t: tuple(f"z{i}" for i in t[1:])

    all_pairs = [
        (i, j)
        for i in range(g.lo, sum_bound - g.lo + 1)
        for j in range(g.lo, sum_bound - i + 1)
    ]
    report.add(
        sweep("bracket", _graded_axiom_check, args, [("bracket", i, j) for i, j in all_pairs],
              labels=z, cap=max_violations, jobs=jobs,
              note="reconstructed bracket equals the closed formula")
    )
    a1 = [
        ("A1", name, i, j)
        for name, kind in _A1_MAPS
        for i, j in _graded_tuples(g, kind * 2, sum_bound)
        if i <= j
    ]
    report.add(
        sweep("A1", _graded_axiom_check, args, a1,
              labels=lambda t: (t[1], f"z{t[2]}", f"z{t[3]}"), cap=max_violations, jobs=jobs)
    )
    ids = list(_AXIOMS)
    if literal:
        ids.insert(ids.index("A4") + 1, "A4-literal")
    for axiom_id in ids:
        kinds = "hhm" if axiom_id == "A4-literal" else _AXIOMS[axiom_id][1]
        tuples = [(axiom_id,) + t for t in _graded_tuples(g, kinds, sum_bound)]
        report.add(sweep(axiom_id, _graded_axiom_check, args, tuples, labels=z,
                         cap=max_violations, jobs=jobs))
    return report


def graded_bracket(g: GradedLieData, i: int, j: int, bound: int | None = None) -> SparseVec:
    """[z_i, z_j] assembled from the six closed-form maps."""
    return _GradedOps(g, bound if bound is not None else i + j).bracket(i, j)


def truncate(g: GradedLieData, top: int) -> BicocycleSumData:
    """Dense data on z_lo..z_top, dropping components of index above ``top``.

    This is not a Lie algebra (the high span is not an ideal); it is useful
    for building the bracket on the low range only.
    """
    m_idx = [i for i in range(g.lo, top + 1) if g.in_m(i)]
    h_idx = [i for i in range(g.lo, top + 1) if g.in_h(i)]
    m = BasedSpace(f"z{i}" for i in m_idx)
    h = BasedSpace(f"z{i}" for i in h_idx)
    pos = {("m", i): a for a, i in enumerate(m_idx)} | {("h", i): a for a, i in enumerate(h_idx)}
    sig = _GradedOps._signature
    arrays = {}
    for name, (ka, kb, kc) in sig.items():
        a_idx = m_idx if ka == "m" else h_idx
        b_idx = m_idx if kb == "m" else h_idx
        arr = zeros((len(a_idx), len(b_idx), len(m_idx if kc == "m" else h_idx)))
        f = getattr(g, name)
        for a, i in enumerate(a_idx):
            for b, j in enumerate(b_idx):
                hit = f(i, j)
                if hit and hit[0] and hit[1] <= top:
                    arr[a, b, pos[(kc, hit[1])]] = Fraction(hit[0])
        arrays[name] = arr
    return BicocycleSumData.from_arrays(m, h, **arrays)
