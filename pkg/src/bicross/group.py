"""Finite bicocycle double cross products of groups.

Given pointed sets (M, e) and (H, 1) and six maps::

    varphi: H x M -> M    psi  : H x M -> H
    phi   : M x M -> M    theta: M x M -> H
    mu    : H x H -> H    gamma: H x H -> M

the set M x H carries the multiplication::

    (x,h)(x',h') = (x.[varphi(h,x').gamma(psi(h,x'),h')],
                    [theta(x,varphi(h,x')) * psi(h,x')] * h')

where ``.`` is phi and ``*`` is mu.  This is a group exactly when the
conditions G1-G12 and the inverse conditions hold.  Conversely any finite
group that factors as G = M.H with unique factorization arises this way.

Smoothness plays no role here: "manifold" becomes "finite set".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

import numpy as np

from .report import DEFAULT_MAX_VIOLATIONS, AxiomReport, AxiomResult, sweep

GROUP_CONDITION_IDS = (
    "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11", "G12", "INV-R", "INV-L",
)


class NotAGroup(ValueError):
    def __init__(self, message: str, report: AxiomReport | None = None,
                 conditions: AxiomReport | None = None):
        super().__init__(message)
        self.report = report
        self.conditions = conditions


class NormalizationViolated(ValueError):
    pass


class NotBijective(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


# --------------------------------------------------------------------------
# finite groups


def _table_check(args, t):
    table, e = args
    kind = t[0]
    if kind == "identity":
        a = t[1]
        return None if table[e, a] == a and table[a, e] == a else (table[e, a], table[a, e])
    if kind == "associativity":
        a, b, c = t[1:]
        lhs, rhs = table[table[a, b], c], table[a, table[b, c]]
        return None if lhs == rhs else (lhs, rhs)
    raise KeyError(kind)


def verify_group_table(
    table: np.ndarray,
    identity: int,
    labels: Sequence[str] | None = None,
    *,
    max_violations: int = DEFAULT_MAX_VIOLATIONS,
    jobs: int = 1,
) -> AxiomReport:
    """Exhaustive check of closure, unit, associativity, inverses and the Latin property."""
    table = np.asarray(table, dtype=int)
    n = table.shape[0]
    labels = list(labels) if labels is not None else [str(i) for i in range(n)]
    lab = lambda t: tuple(labels[i] for i in t[1:])
    report = AxiomReport(kind="finite_group")

    closure = AxiomResult("closure", checked=n * n)
    if table.shape != (n, n) or table.min(initial=0) < 0 or table.max(initial=0) >= n:
        closure.record(("table",), "entries out of range", max_violations)
        report.add(closure)
        return report
    report.add(closure)

    report.add(sweep("identity", _table_check, (table, identity),
                     [("identity", a) for a in range(n)], labels=lab, cap=max_violations))
    report.add(sweep("associativity", _table_check, (table, identity),
                     [("associativity",) + t for t in product(range(n), repeat=3)],
                     labels=lab, cap=max_violations, jobs=jobs))

    inv = AxiomResult("inverses", checked=n)
    for a in range(n):
        right = np.flatnonzero(table[a] == identity)
        left = np.flatnonzero(table[:, a] == identity)
        if not (set(right) & set(left)):
            inv.record((labels[a],), None, max_violations)
    report.add(inv)

    latin = AxiomResult("latin", checked=2 * n)
    for a in range(n):
        if len(set(table[a])) != n:
            latin.record(("row", labels[a]), None, max_violations)
        if len(set(table[:, a])) != n:
            latin.record(("column", labels[a]), None, max_violations)
    report.add(latin)
    return report


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    elements: tuple[str, ...]
    cayley: np.ndarray
    identity: int = 0

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(str(e) for e in self.elements))
        object.__setattr__(self, "cayley", np.asarray(self.cayley, dtype=int))
        if self.cayley.shape != (self.order, self.order):
            raise ValueError("Cayley table must be order x order")

    @classmethod
    def checked(cls, elements, cayley, identity: int = 0) -> "FiniteGroup":
        g = cls(elements, cayley, identity)
        report = verify_group_table(g.cayley, identity, g.elements)
        if not report.ok:
            raise NotAGroup(f"table fails: {report.failed()}", report)
        return g

    @classmethod
    def from_operation(cls, elements: Sequence, op, identity) -> "FiniteGroup":
        """Tabulate a Python binary operation on hashable elements."""
        elements = list(elements)
        pos = {x: i for i, x in enumerate(elements)}
        table = np.array([[pos[op(a, b)] for b in elements] for a in elements], dtype=int)
        return cls.checked([_label(x) for x in elements], table, pos[identity])

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return int(self.cayley[a, b])

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def relabel(self, labels) -> "FiniteGroup":
        return FiniteGroup(labels, self.cayley, self.identity)

    def inverse(self, a: int) -> int:
        return int(np.flatnonzero(self.cayley[a] == self.identity)[0])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteGroup)
            and self.identity == other.identity
            and np.array_equal(self.cayley, other.cayley)
        )


def _label(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(str(v) for v in x) + ")"
    return str(x)


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup.from_operation(range(n), lambda a, b: (a + b) % n, 0)


def direct_product(G: FiniteGroup, K: FiniteGroup) -> FiniteGroup:
    pairs = list(product(range(G.order), range(K.order)))
    return FiniteGroup.from_operation(
        pairs, lambda a, b: (G.mul(a[0], b[0]), K.mul(a[1], b[1])), (G.identity, K.identity)
    ).relabel([f"({G.elements[a]},{K.elements[b]})" for a, b in pairs])



# --------------------------------------------------------------------------
# bicocycle data


@dataclass(frozen=True)
class PointedSet:
    elements: tuple[str, ...]
    point: int = 0

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(str(e) for e in self.elements))
        if not 0 <= self.point < len(self.elements):
            raise ValueError("point index out of range")

    def __len__(self) -> int:
        return len(self.elements)


_TABLE_SHAPES = {
    "varphi": ("H", "M", "M"),
    "psi": ("H", "M", "H"),
    "phi": ("M", "M", "M"),
    "theta": ("M", "M", "H"),
    "mu": ("H", "H", "H"),
    "gamma": ("H", "H", "M"),
}


@dataclass(frozen=True, eq=False)
class BicocycleGroupData:
    M: PointedSet
    H: PointedSet
    varphi: np.ndarray
    psi: np.ndarray
    phi: np.ndarray
    theta: np.ndarray
    mu: np.ndarray
    gamma: np.ndarray

    def __post_init__(self):
        sizes = {"M": len(self.M), "H": len(self.H)}
        for name, (a, b, c) in _TABLE_SHAPES.items():
            t = np.asarray(getattr(self, name), dtype=int)
            if t.shape != (sizes[a], sizes[b]):
                raise ValueError(f"{name} table has shape {t.shape}, expected {(sizes[a], sizes[b])}")
            if t.size and (t.min() < 0 or t.max() >= sizes[c]):
                raise ValueError(f"{name} table has entries outside {c}")
            object.__setattr__(self, name, t)

    @property
    def e(self) -> int:
        return self.M.point

    @property
    def one(self) -> int:
        return self.H.point

    def replace(self, **tables) -> "BicocycleGroupData":
        kw = {n: getattr(self, n).copy() for n in _TABLE_SHAPES}
        kw.update(tables)
        return BicocycleGroupData(self.M, self.H, **kw)

    def product(self, a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
        (x, h), (x2, h2) = a, b
        vp = self.varphi[h, x2]
        ps = self.psi[h, x2]
        xm = self.phi[x, self.phi[vp, self.gamma[ps, h2]]]
        hm = self.mu[self.mu[self.theta[x, vp], ps], h2]
        return int(xm), int(hm)

    def element_labels(self) -> list[str]:
        return [f"({x},{h})" for x in self.M.elements for h in self.H.elements]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BicocycleGroupData)
            and self.M == other.M
            and self.H == other.H
            and all(np.array_equal(getattr(self, n), getattr(other, n)) for n in _TABLE_SHAPES)
        )


def normalization_violations(d: BicocycleGroupData) -> list[str]:
    e, one = d.e, d.one
    bad = []
    for x in range(len(d.M)):
        if d.varphi[one, x] != x:
            bad.append(f"varphi(1,{d.M.elements[x]}) != {d.M.elements[x]}")
        if d.psi[one, x] != one:
            bad.append(f"psi(1,{d.M.elements[x]}) != 1")
    for h in range(len(d.H)):
        if d.varphi[h, e] != e:
            bad.append(f"varphi({d.H.elements[h]},e) != e")
        if d.psi[h, e] != h:
            bad.append(f"psi({d.H.elements[h]},e) != {d.H.elements[h]}")
    if d.phi[e, e] != e:
        bad.append("e.e != e")
    if d.mu[one, one] != one:
        bad.append("1*1 != 1")
    if d.theta[e, e] != one:
        bad.append("theta(e,e) != 1")
    if d.gamma[one, one] != e:
        bad.append("gamma(1,1) != e")
    return bad


def bicocycle_product_table(d: BicocycleGroupData) -> np.ndarray:
    """Cayley table on M x H with (x,h) at index x*|H| + h; no checks."""
    nh = len(d.H)
    pairs = list(product(range(len(d.M)), range(nh)))
    table = np.empty((len(pairs), len(pairs)), dtype=int)
    for a, p in enumerate(pairs):
        for b, q in enumerate(pairs):
            x, h = d.product(p, q)
            table[a, b] = x * nh + h
    return table


def build_bicocycle_group(
    d: BicocycleGroupData, *, check_normalization: bool = True, jobs: int = 1
) -> FiniteGroup:
    if check_normalization:
        bad = normalization_violations(d)
        if bad:
            raise NormalizationViolated("; ".join(bad))
    table = bicocycle_product_table(d)
    identity = d.e * len(d.H) + d.one
    labels = d.element_labels()
    report = verify_group_table(table, identity, labels, jobs=jobs)
    if not report.ok:
        raise NotAGroup(
            f"product on M x H is not a group: {report.failed()}",
            report,
            verify_group_conditions(d, jobs=jobs),
        )
    return FiniteGroup(labels, table, identity)


# --------------------------------------------------------------------------
# conditions


def _cond(d: BicocycleGroupData, t: tuple):
    P, T, MU, GA, VP, PS = d.phi, d.theta, d.mu, d.gamma, d.varphi, d.psi
    e, one = d.e, d.one
    cid, v = t[0], t[1:]
    if cid == "G1":
        (x,) = v
        lhs, rhs = (P[e, x], P[x, e]), (x, x)
    elif cid == "G2":
        (h,) = v
        lhs, rhs = (MU[one, h], MU[h, one]), (h, h)
    elif cid == "G3":
        (x,) = v
        lhs, rhs = (T[x, e], T[e, x]), (one, one)
    elif cid == "G4":
        (h,) = v
        lhs, rhs = (GA[h, one], GA[one, h]), (e, e)
    elif cid in ("G5", "G6"):
        h, x1, x2, h2 = v
        x12 = P[x1, x2]
        ph = PS[h, x1]
        if cid == "G5":
            lhs = P[VP[h, x12], GA[PS[h, x12], MU[T[x1, x2], h2]]]
            rhs = P[VP[h, x1], P[VP[ph, x2], GA[PS[ph, x2], h2]]]
        else:
            lhs = MU[PS[h, x12], MU[T[x1, x2], h2]]
            rhs = MU[MU[T[VP[h, x1], VP[ph, x2]], PS[ph, x2]], h2]
    elif cid in ("G7", "G8"):
        x, h, h1, x2 = v
        hh = MU[h, h1]
        a = VP[h1, x2]
        if cid == "G7":
            lhs = MU[T[P[x, GA[h, h1]], VP[hh, x2]], PS[hh, x2]]
            rhs = MU[MU[T[x, VP[h, a]], PS[h, a]], PS[h1, x2]]
        else:
            lhs = P[P[x, GA[h, h1]], VP[hh, x2]]
            rhs = P[x, P[VP[h, a], GA[PS[h, a], PS[h1, x2]]]]
    elif cid in ("G9", "G10"):
        x, x1, x2, h2 = v
        th = T[x, x1]
        if cid == "G9":
            lhs = P[x, P[x1, x2]]
            rhs = P[P[x, x1], P[VP[th, x2], GA[PS[th, x2], h2]]]
        else:
            lhs = MU[T[x, P[x1, x2]], MU[T[x1, x2], h2]]
            rhs = MU[MU[T[P[x, x1], VP[th, x2]], PS[th, x2]], h2]
    elif cid in ("G11", "G12"):
        x, h, h1, h2 = v
        g = GA[h1, h2]
        if cid == "G11":
            lhs = P[P[x, GA[h, h1]], GA[MU[h, h1], h2]]
            rhs = P[x, P[VP[h, g], GA[PS[h, g], MU[h1, h2]]]]
        else:
            lhs = MU[MU[h, h1], h2]
            rhs = MU[MU[T[x, VP[h, g]], PS[h, g]], MU[h1, h2]]
    else:
        raise KeyError(cid)
    if np.array_equal(np.asarray(lhs), np.asarray(rhs)):
        return None
    return (lhs, rhs)


# free variables of each condition, as (name, set) pairs
_COND_VARS = {
    "G1": "M", "G2": "H", "G3": "M", "G4": "H",
    "G5": "HMMH", "G6": "HMMH",
    "G7": "MHHM", "G8": "MHHM",
    "G9": "MMMH", "G10": "MMMH",
    "G11": "MHHH", "G12": "MHHH",
}
_ONE_SIDED = {"G9": "h'' occurs on one side only", "G12": "x occurs on one side only"}


def _inverses(table: np.ndarray, unit: int, side: str) -> dict[int, list[int]]:
    return {
        a: [int(b) for b in np.flatnonzero((table[a] if side == "r" else table[:, a]) == unit)]
        for a in range(table.shape[0])
    }


def inverse_witnesses(d: BicocycleGroupData) -> dict[str, dict[int, int | None]]:
    """Witnesses for the inverse conditions, or None where none exists.

    ``x_r[x]`` is an x' with x.x' = e such that theta(x,x') has a right
    inverse ``theta_r[x]`` under mu; then (x,1)^-1 = (x', theta_r[x]).
    ``h_l[h]`` is an h' with h'*h = 1 such that gamma(h',h) has a left
    inverse ``gamma_l[h]`` under phi; then (e,h)^-1 = (gamma_l[h], h').
    """
    m_r, m_l = _inverses(d.phi, d.e, "r"), _inverses(d.phi, d.e, "l")
    h_r, h_l = _inverses(d.mu, d.one, "r"), _inverses(d.mu, d.one, "l")
    out = {"x_r": {}, "theta_r": {}, "h_l": {}, "gamma_l": {}}
    for x in range(len(d.M)):
        hit = next(((xr, h_r[d.theta[x, xr]][0]) for xr in m_r[x] if h_r[d.theta[x, xr]]), None)
        out["x_r"][x], out["theta_r"][x] = hit if hit else (None, None)
    for h in range(len(d.H)):
        hit = next(((hl, m_l[d.gamma[hl, h]][0]) for hl in h_l[h] if m_l[d.gamma[hl, h]]), None)
        out["h_l"][h], out["gamma_l"][h] = hit if hit else (None, None)
    return out


def verify_group_conditions(
    d: BicocycleGroupData,
    *,
    literal: bool = False,
    max_violations: int = DEFAULT_MAX_VIOLATIONS,
    jobs: int = 1,
) -> AxiomReport:
    """G1-G12 over every free variable, plus the inverse conditions.

    INV-R asks that every (x,1) have a right inverse, i.e. some x^r with
    x.x^r = e and theta(x,x^r) right invertible in H; INV-L asks that every
    (e,h) have a left inverse.  ``literal=True`` adds the stronger
    elementwise variants (right and left inverses for all x and all h) as
    INV-R-literal and INV-L-literal; these can fail on genuine groups.
    """
    report = AxiomReport(kind="group_data", axiom_forms="literal" if literal else "proof-derived")
    sets = {"M": d.M, "H": d.H}
    for cid, kinds in _COND_VARS.items():
        tuples = [(cid,) + t for t in product(*(range(len(sets[k])) for k in kinds))]

        def labels(t, kinds=kinds):
            return tuple(sets[k].elements[i] for k, i in zip(kinds, t[1:]))

        report.add(sweep(cid, _cond, d, tuples, labels=labels, cap=max_violations,
                         jobs=jobs, note=_ONE_SIDED.get(cid, "")))
    w = inverse_witnesses(d)
    inv_r = AxiomResult("INV-R", checked=len(d.M))
    for x, wit in w["x_r"].items():
        if wit is None:
            inv_r.record(("M", d.M.elements[x]), None, max_violations)
    report.add(inv_r)
    inv_l = AxiomResult("INV-L", checked=len(d.H))
    for h, wit in w["h_l"].items():
        if wit is None:
            inv_l.record(("H", d.H.elements[h]), None, max_violations)
    report.add(inv_l)
    if literal:
        for cid, side in (("INV-R-literal", "r"), ("INV-L-literal", "l")):
            res = AxiomResult(cid, checked=len(d.M) + len(d.H),
                              note="elementwise inverses in M and H")
            for name, table, unit in (("M", d.phi, d.e), ("H", d.mu, d.one)):
                for a, wits in _inverses(table, unit, side).items():
                    if not wits:
                        res.record((name, sets[name].elements[a]), None, max_violations)
            report.add(res)
    return report


def inverse_via_formula(d: BicocycleGroupData, x: int, h: int, *, printed_order: bool = False):
    """Inverse of (x,h) = (x,1)(e,h) as (e,h)^-1 (x,1)^-1.

    (x,1)^-1 = (x^r, theta(x,x^r)^r) and (e,h)^-1 = (gamma(h^l,h)^l, h^l).
    ``printed_order=True`` multiplies the two factors the other way round,
    which is only correct when they commute.
    """
    w = inverse_witnesses(d)
    a = (w["x_r"][x], w["theta_r"][x])
    b = (w["gamma_l"][h], w["h_l"][h])
    if None in a or None in b:
        raise NotAGroup(f"no inverse for ({d.M.elements[x]},{d.H.elements[h]})")
    return d.product(a, b) if printed_order else d.product(b, a)


# --------------------------------------------------------------------------
# factorization


def _subset_indices(G: FiniteGroup, subset) -> list[int]:
    return [G.index(s) if isinstance(s, str) else int(s) for s in subset]


def product_bijection(G: FiniteGroup, M: Sequence[int], H: Sequence[int]) -> dict[int, tuple[int, int]]:
    """g -> (position in M, position in H) with g = m.h; raises NotBijective."""
    if len(M) * len(H) != G.order:
        raise NotBijective(f"|M||H| = {len(M) * len(H)} != |G| = {G.order}")
    inv: dict[int, tuple[int, int]] = {}
    for a, m in enumerate(M):
        for b, h in enumerate(H):
            g = G.mul(m, h)
            if g in inv:
                raise NotBijective(
                    f"{G.elements[g]} = {G.elements[M[inv[g][0]]]}{G.elements[H[inv[g][1]]]}"
                    f" = {G.elements[m]}{G.elements[h]}"
                )
            inv[g] = (a, b)
    return inv


def factor_group(G: FiniteGroup, M, H) -> BicocycleGroupData:
    """Recover the six tables from a unique factorization G = M.H."""
    M = _subset_indices(G, M)
    H = _subset_indices(G, H)
    if G.identity not in M or G.identity not in H:
        raise ValueError("both subsets must contain the identity")
    inv = product_bijection(G, M, H)
    nm, nh = len(M), len(H)

    def split(g):
        return inv[g]

    varphi = np.empty((nh, nm), dtype=int)
    psi = np.empty((nh, nm), dtype=int)
    for b, h in enumerate(H):
        for a, x in enumerate(M):
            varphi[b, a], psi[b, a] = split(G.mul(h, x))
    phi = np.empty((nm, nm), dtype=int)
    theta = np.empty((nm, nm), dtype=int)
    for a, x in enumerate(M):
        for c, x2 in enumerate(M):
            phi[a, c], theta[a, c] = split(G.mul(x, x2))
    gamma = np.empty((nh, nh), dtype=int)
    mu = np.empty((nh, nh), dtype=int)
    for b, h in enumerate(H):
        for c, h2 in enumerate(H):
            gamma[b, c], mu[b, c] = split(G.mul(h, h2))
    Mset = PointedSet([G.elements[m] for m in M], M.index(G.identity))
    Hset = PointedSet([G.elements[h] for h in H], H.index(G.identity))
    return BicocycleGroupData(Mset, Hset, varphi, psi, phi, theta, mu, gamma)


def transported_table(G: FiniteGroup, M, H) -> np.ndarray:
    """G's Cayley table re-indexed by (x,h) -> x.h, in the layout of bicocycle_product_table."""
    M = _subset_indices(G, M)
    H = _subset_indices(G, H)
    inv = product_bijection(G, M, H)
    nh = len(H)
    order = [G.mul(m, h) for m in M for h in H]
    return np.array(
        [[inv[G.mul(a, b)][0] * nh + inv[G.mul(a, b)][1] for b in order] for a in order],
        dtype=int,
    )


def search_factorizations(G: FiniteGroup, m_size: int, budget: int = 200_000):
    """All (M, H) with identity in both and G = M.H uniquely; exhaustive up to ``budget`` candidates."""
    n = G.order
    if m_size <= 0 or n % m_size:
        raise ValueError(f"m_size {m_size} must divide |G| = {n}")
    h_size = n // m_size
    others = [g for g in range(n) if g != G.identity]
    found, tried = [], 0
    for mo in combinations(others, m_size - 1):
        M = (G.identity,) + mo
        for ho in combinations(others, h_size - 1):
            tried += 1
            if tried > budget:
                raise BudgetExceeded(f"more than {budget} candidate pairs")
            H = (G.identity,) + ho
            try:
                product_bijection(G, M, H)
            except NotBijective:
                continue
            found.append((M, H))
    return found
