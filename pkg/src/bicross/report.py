"""Pass/fail reports shared by every verifier."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

import numpy as np

DEFAULT_MAX_VIOLATIONS = 32


@dataclass
class Violation:
    """One failing basis tuple and its residual (lhs minus rhs)."""

    tuple: tuple
    residual: Any = None

    def residual_list(self) -> list:
        r = self.residual
        if r is None:
            return []
        if isinstance(r, np.ndarray):
            return [str(x) for x in r.flat]
        if isinstance(r, dict):
            return [f"{k}:{v}" for k, v in sorted(r.items())]
        if isinstance(r, (list, tuple)):
            return [str(x) for x in r]
        return [str(r)]


@dataclass
class AxiomResult:
    axiom_id: str
    holds: bool = True
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    violation_count: int = 0
    note: str = ""

    def record(self, tup: tuple, residual=None, cap: int = DEFAULT_MAX_VIOLATIONS):
        self.holds = False
        self.violation_count += 1
        if len(self.violations) < cap:
            self.violations.append(Violation(tuple(tup), residual))

    def first_violation(self) -> Violation | None:
        return self.violations[0] if self.violations else None


@dataclass
class AxiomReport:
    """Ordered collection of per-axiom results."""

    results: dict[str, AxiomResult] = field(default_factory=dict)
    kind: str = ""
    axiom_forms: str = ""

    def add(self, result: AxiomResult) -> AxiomResult:
        self.results[result.axiom_id] = result
        return result

    def __getitem__(self, axiom_id: str) -> AxiomResult:
        return self.results[axiom_id]

    def __contains__(self, axiom_id: str) -> bool:
        return axiom_id in self.results

    def __iter__(self):
        return iter(self.results.values())

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.results.values())

    def failed(self) -> list[str]:
        return [r.axiom_id for r in self.results.values() if not r.holds]

    @property
    def checked(self) -> int:
        return sum(r.checked for r in self.results.values())

    def merge(self, other: "AxiomReport", prefix: str = "") -> "AxiomReport":
        for r in other:
            r.axiom_id = prefix + r.axiom_id
            self.add(r)
        return self

    def summary(self) -> str:
        n_ok = sum(r.holds for r in self)
        lines = [f"{n_ok}/{len(self.results)} axioms hold on {self.checked} tuples"]
        for r in self:
            status = "ok" if r.holds else f"FAIL ({r.violation_count} violations)"
            line = f"  {r.axiom_id}: {status}"
            if r.note:
                line += f"  [{r.note}]"
            lines.append(line)
            v = r.first_violation()
            if v is not None:
                lines.append(f"    first witness: {v.tuple}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "axiom_forms": self.axiom_forms,
            "ok": self.ok,
            "results": [
                {
                    "id": r.axiom_id,
                    "holds": r.holds,
                    "checked": r.checked,
                    "violation_count": r.violation_count,
                    "note": r.note,
                    "violations": [
                        {"tuple": [str(t) for t in v.tuple], "residual": v.residual_list()}
                        for v in r.violations
                    ],
                }
                for r in self
            ],
        }


ConditionReport = AxiomReport


def residual_is_zero(r) -> bool:
    if isinstance(r, np.ndarray):
        return all(x == 0 for x in r.flat)
    if isinstance(r, dict):
        return all(v == 0 for v in r.values())
    if isinstance(r, Fraction | int):
        return r == 0
    return not r


def _chunk(seq: Sequence, n: int) -> list[Sequence]:
    size = max(1, -(-len(seq) // n))
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def _run_chunk(check: Callable, data, tuples) -> list[tuple[tuple, Any]]:
    out = []
    for t in tuples:
        r = check(data, t)
        if r is not None:
            out.append((t, r))
    return out


def sweep(
    axiom_id: str,
    check: Callable,
    data,
    tuples: Iterable[tuple],
    *,
    labels: Callable[[tuple], tuple] | None = None,
    cap: int = DEFAULT_MAX_VIOLATIONS,
    jobs: int = 1,
    note: str = "",
) -> AxiomResult:
    """Run ``check(data, t)`` for every tuple; it returns None or a residual.

    With ``jobs > 1`` the tuple list is split across worker processes
    (``check`` must then be a module-level function).  Violations are
    merged in tuple order, so the result does not depend on ``jobs``.
    """
    tuples = sorted(tuples)
    result = AxiomResult(axiom_id, checked=len(tuples), note=note)
    if jobs > 1 and len(tuples) > 256:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_run_chunk, *zip(*[(check, data, c) for c in _chunk(tuples, jobs)]))
            hits = [h for part in parts for h in part]
    else:
        hits = _run_chunk(check, data, tuples)
    for t, r in sorted(hits, key=lambda h: h[0]):
        result.record(labels(t) if labels else t, r, cap)
    return result
