"""A small evaluator for identities written in Sweedler notation.

An identity such as ``h▷(x·x') = (h₁▷x₁)·(ψ(h₂,x₂)▷x')`` is encoded as two
:class:`Side` objects.  Each side lists how its inputs are split into legs
(by a coproduct, a coaction, ...) and gives a Python expression in those
legs.  Evaluation enumerates the nonzero split terms on basis inputs and
sums the expression values, so nothing here depends on how the objects
being checked were constructed.

Values are sparse tensors: dicts from index tuples to Fractions, where a
vector has 1-tuples as keys and a scalar the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

import numpy as np

from .report import DEFAULT_MAX_VIOLATIONS, AxiomResult


class V(dict):
    """Sparse tensor {index tuple: coefficient}."""

    def __add__(self, other: "V") -> "V":
        out = V(self)
        for k, v in other.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def __neg__(self) -> "V":
        return V({k: -v for k, v in self.items()})

    def __sub__(self, other: "V") -> "V":
        return self + (-other)

    def __matmul__(self, other: "V") -> "V":
        """Tensor product; a scalar (key ``()``) acts by multiplication."""
        out = V()
        for k1, a in self.items():
            for k2, b in other.items():
                key = k1 + k2
                s = out.get(key, 0) + a * b
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def scale(self, c) -> "V":
        return V({k: c * v for k, v in self.items() if c * v})

    def is_zero(self) -> bool:
        return not any(self.values())


def vec(v: np.ndarray) -> V:
    return V({(i,): Fraction(x) for i, x in enumerate(v) if x != 0})


def basis(i: int) -> V:
    return V({(i,): Fraction(1)})


def tensor(*parts: V) -> V:
    out = V({(): Fraction(1)})
    for p in parts:
        out = out @ p
    return out


def _rows(arr: np.ndarray, n_in: int) -> dict:
    """Nonzero entries grouped by the first ``n_in`` indices."""
    rows: dict = {}
    for idx in zip(*np.nonzero(arr != 0)):
        idx = tuple(int(i) for i in idx)
        rows.setdefault(idx[:n_in], []).append((idx[n_in:], Fraction(arr[idx])))
    return rows


class Multilinear:
    """A multilinear map from ``n_in`` vector arguments to a tensor of any rank."""

    def __init__(self, arr: np.ndarray, n_in: int):
        self.rows = _rows(np.asarray(arr, dtype=object), n_in)
        self.n_in = n_in

    def __call__(self, *args: V) -> V:
        if len(args) != self.n_in:
            raise TypeError(f"expected {self.n_in} arguments, got {len(args)}")
        out = V()
        for combo in product(*(a.items() for a in args)):
            key = tuple(k[0] for k, _ in combo)
            coef = Fraction(1)
            for _, c in combo:
                coef *= c
            for okey, c in self.rows.get(key, ()):
                s = out.get(okey, 0) + coef * c
                if s:
                    out[okey] = s
                else:
                    out.pop(okey, None)
        return out


def bilinear(arr) -> Multilinear:
    return Multilinear(arr, 2)


def linear(arr) -> Multilinear:
    return Multilinear(arr, 1)


def functional(vec_: np.ndarray) -> Multilinear:
    """A linear form, returning a scalar tensor."""
    arr = np.asarray(vec_, dtype=object).reshape(-1)
    return Multilinear(arr, 1)


@dataclass
class Splitter:
    """A linear map x -> sum of basis tensors, used to produce Sweedler legs."""

    rows: dict
    arity: int

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "Splitter":
        arr = np.asarray(arr, dtype=object)
        return cls({k[0]: v for k, v in _rows(arr, 1).items()}, arr.ndim - 1)


class _Legs:
    def __init__(self, assignment: dict[str, int]):
        self._a = assignment
        self._used: dict[str, int] = {}

    def __getattr__(self, name: str) -> V:
        if name.startswith("_"):
            raise AttributeError(name)
        if name not in self._a:
            raise KeyError(f"unknown leg {name!r}; have {sorted(self._a)}")
        self._used[name] = self._used.get(name, 0) + 1
        return basis(self._a[name])


@dataclass
class Side:
    """An expression in Sweedler legs.

    ``splits`` is a sequence of ``(leg, splitter, new_legs)``; each replaces
    one existing leg by ``len(new_legs)`` new ones.  Every remaining leg
    must be used exactly once by ``expr`` (multilinearity), which is
    checked on every evaluation.  Legs named in ``unused`` may be ignored,
    for identities where a variable only occurs on the other side.
    """

    expr: Callable[[_Legs], V]
    splits: Sequence[tuple[str, Splitter, tuple[str, ...]]] = ()
    unused: tuple[str, ...] = ()

    def evaluate(self, inputs: dict[str, int]) -> V:
        states = [(Fraction(1), dict(inputs))]
        for leg, splitter, names in self.splits:
            if len(names) != splitter.arity:
                raise ValueError(f"{leg}: splitter has {splitter.arity} legs, got {names}")
            nxt = []
            for coef, asg in states:
                rest = dict(asg)
                i = rest.pop(leg)
                for key, c in splitter.rows.get(i, ()):
                    a2 = dict(rest)
                    a2.update(zip(names, key))
                    nxt.append((coef * c, a2))
            states = nxt
        total = V()
        for coef, asg in states:
            legs = _Legs(asg)
            value = self.expr(legs)
            if set(legs._used) != set(asg) - set(self.unused) or any(
                n != 1 for n in legs._used.values()
            ):
                raise ValueError(
                    f"legs must be used exactly once: have {sorted(asg)}, used {legs._used}"
                )
            total = total + value.scale(coef)
        return total


@dataclass
class Equation:
    name: str
    inputs: Sequence[tuple[str, Sequence[str]]]  # (variable, basis labels)
    lhs: Side
    rhs: Side

    def residual(self, idx: tuple[int, ...]) -> V:
        asg = {name: i for (name, _), i in zip(self.inputs, idx)}
        return self.lhs.evaluate(asg) - self.rhs.evaluate(asg)


@dataclass
class Condition:
    id: str
    equations: Sequence[Equation]
    note: str = ""

    def check(self, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> AxiomResult:
        res = AxiomResult(self.id, note=self.note)
        multi = len(self.equations) > 1
        for eq in self.equations:
            for idx in product(*(range(len(labels)) for _, labels in eq.inputs)):
                res.checked += 1
                r = eq.residual(idx)
                if not r.is_zero():
                    labels = tuple(lab[i] for (_, lab), i in zip(eq.inputs, idx))
                    res.record(((eq.name,) if multi else ()) + labels,
                               {",".join(map(str, k)): v for k, v in r.items()},
                               max_violations)
        return res
