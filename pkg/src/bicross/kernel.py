"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` values held in numpy ``object``
arrays, so every contraction below is exact.  Bases are explicit and
labelled; maps are dense coefficient tensors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction

__all__ = [
    "Rational",
    "SingularMatrix",
    "DimensionMismatch",
    "ShapeMismatch",
    "to_rational",
    "rational_array",
    "zeros",
    "unit_vector",
    "identity",
    "is_zero",
    "BasedSpace",
    "LinearMapTensor",
    "BilinearMapTensor",
    "SubspacePair",
    "invert_matrix",
    "project_components",
    "eval_bilinear",
]


class SingularMatrix(ValueError):
    """Raised when an exact inverse does not exist."""


class DimensionMismatch(ValueError):
    """Raised when vector or matrix sizes disagree with a based space."""


class ShapeMismatch(ValueError):
    """Raised when a coefficient tensor has the wrong shape."""


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they almost always signal a lost exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        text = "".join(value.split())
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(text)
    raise TypeError(f"cannot convert {value!r} to an exact rational")


_to_rational_vec = np.frompyfunc(to_rational, 1, 1)


def rational_array(data) -> np.ndarray:
    """Return an object array of Fractions built from nested data."""
    arr = np.asarray(data, dtype=object)
    if arr.size == 0:
        return np.empty(arr.shape, dtype=object)
    return np.asarray(_to_rational_vec(arr), dtype=object).reshape(arr.shape)


def zeros(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(Fraction(0))
    return arr


def unit_vector(dim: int, index: int) -> np.ndarray:
    v = zeros(dim)
    v[index] = Fraction(1)
    return v


def identity(n: int) -> np.ndarray:
    m = zeros((n, n))
    for i in range(n):
        m[i, i] = Fraction(1)
    return m


def is_zero(arr) -> bool:
    return all(x == 0 for x in np.asarray(arr, dtype=object).flat)


@dataclass(frozen=True)
class BasedSpace:
    """A finite-dimensional space with a labelled basis."""

    basis_labels: tuple[str, ...]

    def __init__(self, basis_labels: Iterable[str]):
        labels = tuple(str(s) for s in basis_labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"basis labels must be unique: {labels}")
        object.__setattr__(self, "basis_labels", labels)

    @classmethod
    def standard(cls, dim: int, prefix: str = "e") -> "BasedSpace":
        return cls(f"{prefix}{i}" for i in range(dim))

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def index(self, label: str) -> int:
        return self.basis_labels.index(label)

    def basis_vector(self, i: int | str) -> np.ndarray:
        if isinstance(i, str):
            i = self.index(i)
        return unit_vector(self.dim, i)

    def __len__(self) -> int:
        return self.dim


def _check_vector(v: np.ndarray, dim: int, what: str) -> np.ndarray:
    v = np.asarray(v, dtype=object)
    if v.shape != (dim,):
        raise DimensionMismatch(f"{what}: expected length {dim}, got shape {v.shape}")
    return v


@dataclass(frozen=True, eq=False)
class LinearMapTensor:
    """A linear map; ``coeffs[i, k]`` is the k-th coordinate of the image of e_i."""

    domain: BasedSpace
    codomain: BasedSpace
    coeffs: np.ndarray

    def __post_init__(self):
        c = rational_array(self.coeffs)
        if c.shape != (self.domain.dim, self.codomain.dim):
            raise ShapeMismatch(
                f"linear map coeffs {c.shape} != {(self.domain.dim, self.codomain.dim)}"
            )
        object.__setattr__(self, "coeffs", c)

    def __call__(self, v) -> np.ndarray:
        v = _check_vector(v, self.domain.dim, "linear map argument")
        return v @ self.coeffs if v.size else zeros(self.codomain.dim)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearMapTensor)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and np.array_equal(self.coeffs, other.coeffs)
        )


@dataclass(frozen=True, eq=False)
class BilinearMapTensor:
    """A bilinear map (e_i, f_j) -> sum_k coeffs[i, j, k] g_k."""

    left: BasedSpace
    right: BasedSpace
    codomain: BasedSpace
    coeffs: np.ndarray

    def __post_init__(self):
        c = rational_array(self.coeffs)
        shape = (self.left.dim, self.right.dim, self.codomain.dim)
        if c.shape != shape:
            raise ShapeMismatch(f"bilinear map coeffs {c.shape} != {shape}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, left: BasedSpace, right: BasedSpace, codomain: BasedSpace):
        return cls(left, right, codomain, zeros((left.dim, right.dim, codomain.dim)))

    @classmethod
    def from_entries(cls, left, right, codomain, entries: dict) -> "BilinearMapTensor":
        """Build from ``{(i, j): {k: coeff}}`` with indices or labels."""
        c = zeros((left.dim, right.dim, codomain.dim))

        def idx(space, key):
            return space.index(key) if isinstance(key, str) else key

        for (i, j), image in entries.items():
            for k, value in image.items():
                c[idx(left, i), idx(right, j), idx(codomain, k)] = to_rational(value)
        return cls(left, right, codomain, c)

    def __call__(self, x, y) -> np.ndarray:
        return eval_bilinear(self, x, y)

    def on_basis(self, i: int, j: int) -> np.ndarray:
        return self.coeffs[i, j, :].copy()

    def is_zero(self) -> bool:
        return is_zero(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BilinearMapTensor)
            and self.left == other.left
            and self.right == other.right
            and self.codomain == other.codomain
            and np.array_equal(self.coeffs, other.coeffs)
        )


def eval_bilinear(t: BilinearMapTensor, x, y) -> np.ndarray:
    x = _check_vector(x, t.left.dim, "left argument")
    y = _check_vector(y, t.right.dim, "right argument")
    out = zeros(t.codomain.dim)
    if t.codomain.dim == 0:
        return out
    # arguments are mostly basis vectors, so skip zero coordinates
    xs = [(i, a) for i, a in enumerate(x) if a != 0]
    ys = [(j, b) for j, b in enumerate(y) if b != 0]
    for i, a in xs:
        for j, b in ys:
            out = out + (a * b) * t.coeffs[i, j]
    return out


def invert_matrix(m) -> np.ndarray:
    """Gauss-Jordan inverse over the rationals."""
    a = rational_array(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    aug = np.concatenate([a.copy(), identity(n)], axis=1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r, col] != 0), None)
        if pivot is None:
            raise SingularMatrix("matrix is singular")
        if pivot != col:
            aug[[col, pivot]] = aug[[pivot, col]]
        aug[col] = aug[col] / aug[col, col]
        for r in range(n):
            if r != col and aug[r, col] != 0:
                aug[r] = aug[r] - aug[r, col] * aug[col]
    return aug[:, n:].copy()


@dataclass(frozen=True, eq=False)
class SubspacePair:
    """Two complementary subspaces given by basis columns in the ambient space."""

    ambient: BasedSpace
    m_basis: np.ndarray
    h_basis: np.ndarray
    m_labels: tuple[str, ...] | None = None
    h_labels: tuple[str, ...] | None = None
    _inverse: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        n = self.ambient.dim
        mb = rational_array(self.m_basis).reshape(n, -1)
        hb = rational_array(self.h_basis).reshape(n, -1)
        if mb.shape[1] + hb.shape[1] != n:
            raise DimensionMismatch(
                f"subspace dims {mb.shape[1]} + {hb.shape[1]} != ambient dim {n}"
            )
        object.__setattr__(self, "m_basis", mb)
        object.__setattr__(self, "h_basis", hb)
        object.__setattr__(self, "_inverse", invert_matrix(self.basis_matrix))
        m_labels = self.m_labels or tuple(f"m{i}" for i in range(mb.shape[1]))
        h_labels = self.h_labels or tuple(f"h{i}" for i in range(hb.shape[1]))
        object.__setattr__(self, "m_labels", tuple(m_labels))
        object.__setattr__(self, "h_labels", tuple(h_labels))

    @classmethod
    def from_vectors(
        cls,
        ambient: BasedSpace,
        m_vectors: Sequence[Sequence],
        h_vectors: Sequence[Sequence],
        m_labels=None,
        h_labels=None,
    ) -> "SubspacePair":
        n = ambient.dim
        mb = rational_array(m_vectors).reshape(-1, n).T if len(m_vectors) else zeros((n, 0))
        hb = rational_array(h_vectors).reshape(-1, n).T if len(h_vectors) else zeros((n, 0))
        return cls(ambient, mb, hb, m_labels, h_labels)

    @property
    def m_dim(self) -> int:
        return self.m_basis.shape[1]

    @property
    def h_dim(self) -> int:
        return self.h_basis.shape[1]

    @property
    def basis_matrix(self) -> np.ndarray:
        return np.concatenate([self.m_basis, self.h_basis], axis=1)

    @property
    def inverse(self) -> np.ndarray:
        return self._inverse

    @property
    def m_space(self) -> BasedSpace:
        return BasedSpace(self.m_labels)

    @property
    def h_space(self) -> BasedSpace:
        return BasedSpace(self.h_labels)


def project_components(pair: SubspacePair, v) -> tuple[np.ndarray, np.ndarray]:
    """Coordinates of ``v`` along the m and h bases."""
    v = _check_vector(v, pair.ambient.dim, "vector")
    coords = pair.inverse @ v if v.size else zeros(0)
    return coords[: pair.m_dim].copy(), coords[pair.m_dim :].copy()
