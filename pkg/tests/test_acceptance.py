"""The ten acceptance criteria, each reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are collected in
an "acceptance criteria" section at the end of the session (and printed
inline with ``-s``).
"""

import json
import random
import time
from fractions import Fraction
from itertools import product
from pathlib import Path

import numpy as np
import pytest

from bicross.cli import main
from bicross.fixtures import (
    CATALOG,
    GROUPS,
    LIE_ALGEBRAS,
    ks3_split,
    kz4,
    kz4_cdcp,
    kz4_split,
    lie_splits,
    q8_split,
    sweedler_h4,
    w1_graded,
    z4_group_split,
)
from bicross.group import (
    bicocycle_product_table,
    build_bicocycle_group,
    factor_group,
    inverse_via_formula,
    transported_table,
    verify_group_conditions,
    verify_group_table,
)
from bicross.kernel import zeros
from bicross.lie import (
    build_bicocycle_sum,
    decompose,
    graded_verify,
    truncate,
    verify_lie_axioms,
    verify_matched_pair,
)
from bicross.quantum import (
    build_bicocycle_bialgebra,
    build_cdcc,
    build_cdcp,
    cdcc_from_cdcp,
    cdcp_from_bicocycle,
    dualize,
    pullback_bialgebra,
    tensor_product_bialgebra,
    verify_bialgebra,
    verify_bicocycle_conditions,
    verify_cdcc_conditions,
    verify_cdcp_conditions,
)
from bicross.serialize import dumps, loads, to_document

from group_data import all_factorizations, table_inverse
from lie_data import assemble, is_lie, maps_of, random_sum_data
from quantum_data import (
    PAIRS,
    bicocycle_from_maps,
    bicocycle_maps,
    cdcc_from_maps,
    cdcp_from_maps,
    cross_product,
    is_monoid,
    random_bicocycle,
    random_cross_maps,
    set_level_product,
)

ELEMS = list(product(range(2), repeat=2))
A_IDS = [f"A{i}" for i in range(1, 10)]
B_IDS = [f"B{i}" for i in range(1, 15)]
D_IDS = [f"D{i}" for i in range(1, 12)]
G_IDS = [f"G{i}" for i in range(1, 13)] + ["INV-R", "INV-L"]


# --------------------------------------------------------------------------
# 1. W1 fidelity


def test_criterion_1_w1(criterion):
    bound = 30
    t0 = time.perf_counter()
    report = graded_verify(w1_graded(), bound)
    elapsed = time.perf_counter() - t0
    axioms_ok = all(report[a].holds for a in A_IDS)
    # independent check: the dense bracket of the truncated data against (j-i) z_{i+j}
    L = build_bicocycle_sum(truncate(w1_graded(), bound))
    labels = L.space.basis_labels
    bad = []
    for a, b in product(range(len(labels)), repeat=2):
        i, j = int(labels[a][1:]), int(labels[b][1:])
        if i + j > bound:
            continue
        expected = zeros(len(labels))
        if i != j:
            expected[labels.index(f"z{i + j}")] = Fraction(j - i)
        if not np.array_equal(L.bracket.coeffs[a, b], expected):
            bad.append((i, j))
    ok = axioms_ok and report["bracket"].holds and not bad and elapsed < 30
    n = sum(report[a].checked for a in A_IDS)
    criterion(1, ok, f"A1-A9 on {n} tuples, bracket on {report['bracket'].checked} pairs, "
                     f"{len(bad)} dense mismatches, {elapsed:.1f}s")
    assert axioms_ok and report["bracket"].holds and not bad
    assert elapsed < 30


# --------------------------------------------------------------------------
# 2. Lie round trip


def test_criterion_2_lie_round_trip(criterion):
    failures, cases, noncoordinate = [], 0, 0
    for name in ("abelian3", "sl2", "heisenberg3", "nonabelian2"):
        L = LIE_ALGEBRAS[name]()
        pairs = lie_splits(name)
        assert len(pairs) >= 2
        for pair in pairs:
            cases += 1
            P = pair.basis_matrix
            noncoordinate += any(sum(x != 0 for x in col) > 1 for col in P.T)
            d = decompose(L, pair)
            B = build_bicocycle_sum(d).bracket.coeffs
            lhs = np.einsum("ia,jb,ijk->abk", P, P, L.bracket.coeffs)
            rhs = np.einsum("abc,kc->abk", B, P)
            if not (np.array_equal(lhs, rhs) and verify_matched_pair(d).ok):
                failures.append((name, pair.m_labels))
    ok = not failures and noncoordinate >= 4
    criterion(2, ok, f"{cases} splits over 4 algebras ({noncoordinate} non-coordinate), {len(failures)} failures")
    assert ok, failures


# --------------------------------------------------------------------------
# 3. Lie IFF fuzz


def test_criterion_3_lie_iff(criterion):
    rng = random.Random(3)
    discrepancies, valid = [], 0
    for k in range(500):
        d = random_sum_data(rng)
        conditions = verify_matched_pair(d).ok
        built = verify_lie_axioms(build_bicocycle_sum(d)).ok
        oracle = is_lie(assemble(maps_of(d)))
        valid += oracle
        if not conditions == built == oracle:
            discrepancies.append(k)
    ok = not discrepancies and 0 < valid < 500
    criterion(3, ok, f"500 samples ({valid} Lie, {500 - valid} not), {len(discrepancies)} discrepancies")
    assert ok, discrepancies


# --------------------------------------------------------------------------
# 4. group round trip


def test_criterion_4_group_round_trip(criterion):
    failures, cases = [], 0
    for name, M, H in all_factorizations():
        cases += 1
        G = GROUPS[name]()
        d = factor_group(G, M, H)
        report = verify_group_conditions(d)
        built = build_bicocycle_group(d)
        same = np.array_equal(built.cayley, transported_table(G, M, H))
        nh = len(d.H)
        inverses = all(
            (lambda inv: inv[0] * nh + inv[1])(inverse_via_formula(d, x, h))
            == table_inverse(built.cayley, built.identity, x * nh + h)
            for x in range(len(d.M)) for h in range(nh)
        )
        if not (same and inverses and all(report[c].holds for c in G_IDS)):
            failures.append((name, M, H))
    groups = {name for name, _, _ in all_factorizations()}
    ok = not failures and groups == {"Z4", "Z6", "S3", "D4", "Q8"}
    criterion(4, ok, f"{cases} factorizations of {', '.join(sorted(groups))}, {len(failures)} failures")
    assert ok, failures


# --------------------------------------------------------------------------
# 5. group negative test


def _product_table_report(d):
    labels = [f"{x}.{h}" for x in d.M.elements for h in d.H.elements]
    return verify_group_table(bicocycle_product_table(d), d.e * len(d.H) + d.one, labels)


@pytest.mark.xfail(strict=True, reason="gamma(1,1) -> 0 on Z4 = {0,2}.{0,1} is valid data for Z2 x Z2")
def test_criterion_5_z4_gamma_perturbation(criterion):
    G, (M, H), d = z4_group_split()
    one = 1  # the non-identity element of H = {0, 1}
    assert d.gamma[one, one] == 1  # 1 + 1 = 2, the second element of M
    gamma = d.gamma.copy()
    gamma[one, one] = 0  # the only other value available in M
    bad = d.replace(gamma=gamma)
    report = verify_group_conditions(bad)
    table = _product_table_report(bad)
    broken = [c for c in ("G11", "G12") if not report[c].holds]
    ok = bool(broken) and not table["associativity"].holds
    criterion(5, ok, f"Z4 gamma(1,1) -> 0: conditions {'fail ' + '/'.join(broken) if broken else 'all hold'}, "
                     f"built table {'is not' if not table.ok else 'is'} a group (Z2 x Z2)")
    assert broken
    assert table["associativity"].first_violation() is not None


def test_criterion_5_supplement_q8(criterion):
    """The same protocol on Q8 = <i>.{1,j}, where gamma has somewhere to go."""
    G, (M, H), d = q8_split()
    gamma = d.gamma.copy()
    gamma[1, 1] = M.index("i")  # j j = -1 perturbed to i
    bad = d.replace(gamma=gamma)
    report = verify_group_conditions(bad)
    table = _product_table_report(bad)
    broken = [c for c in ("G11", "G12") if not report[c].holds]
    w_cond = report[broken[0]].first_violation() if broken else None
    w_assoc = table["associativity"].first_violation()
    ok = bool(broken) and w_cond is not None and w_assoc is not None
    criterion("5 (Q8 supplement)", ok,
              f"gamma(j,j) -> i: {'/'.join(broken)} witness {w_cond.tuple if w_cond else None}, "
              f"associativity witness {w_assoc.tuple if w_assoc else None}")
    assert ok


# --------------------------------------------------------------------------
# 6. k[Z4] split


def test_criterion_6_kz4(criterion):
    G, f = kz4_split()
    report = verify_bicocycle_conditions(f.data)
    B = build_bicocycle_bialgebra(f.data)
    P = pullback_bialgebra(G, f.iso, B.space)
    same_mul = np.array_equal(B.algebra.mul, P.algebra.mul)
    same_comul = np.array_equal(B.coalgebra.comul, P.coalgebra.comul)
    # the iso sends x (x) h to the product xh in G
    iso_ok = all(
        np.array_equal(f.iso[a * 2 + b], G.algebra.mul[G.space.index(x), G.space.index(h)])
        for (a, x), (b, h) in product(enumerate(f.data.M.labels), enumerate(f.data.H.labels))
    )
    passed = all(report[c].holds for c in B_IDS)
    ok = passed and same_mul and same_comul and iso_ok
    criterion(6, ok, f"B1-B14 {'hold' if passed else 'fail'}; mul equal {same_mul}, comul equal {same_comul}")
    assert ok


# --------------------------------------------------------------------------
# 7. quantum IFF fuzz


def _maps(d, names):
    return {k: {p: int(np.argmax(getattr(d, k)[p])) for p in PAIRS} for k in names}


def test_criterion_7_quantum_iff(criterion):
    rng = random.Random(7)
    stats = {}
    discrepancies = []
    for kind, n in (("bicocycle", 200), ("cdcp", 100), ("cdcc", 100)):
        valid = 0
        for k in range(n):
            if kind == "bicocycle":
                d = random_bicocycle(rng)
                oracle = is_monoid(set_level_product(_maps(d, d.MAPS)), ELEMS, (0, 0))
                cond = verify_bicocycle_conditions(d).ok
                built = verify_bialgebra(build_bicocycle_bialgebra(d)).ok
            else:
                maps = random_cross_maps(rng)
                oracle = is_monoid(cross_product(maps), ELEMS, (0, 0))
                if kind == "cdcp":
                    d = cdcp_from_maps(maps)
                    cond, built = verify_cdcp_conditions(d).ok, verify_bialgebra(build_cdcp(d)).ok
                else:
                    d = cdcc_from_maps(maps)
                    cond, built = verify_cdcc_conditions(d).ok, verify_bialgebra(build_cdcc(d)).ok
            valid += built
            if cond != built or built != oracle:
                discrepancies.append((kind, k))
        stats[kind] = (n, valid)
    ok = not discrepancies and all(0 < v < n for n, v in stats.values())
    detail = ", ".join(f"{kind} {n} ({v} valid)" for kind, (n, v) in stats.items())
    criterion(7, ok, f"{detail}; {len(discrepancies)} discrepancies")
    assert ok, discrepancies


# --------------------------------------------------------------------------
# 8. duality pipeline


def test_criterion_8_duality(criterion):
    d = kz4_cdcp()
    L = dualize(build_cdcp(d))
    f = cdcc_from_cdcp(d, return_iso=True)
    report = verify_cdcc_conditions(f.data)
    B = build_cdcc(f.data)
    same = B.same_tensors(pullback_bialgebra(L, f.iso, B.space))
    fixtures = {name: e.make() for name, e in CATALOG.items() if e.kind == "bialgebra"}
    fixtures["h4z4"] = tensor_product_bialgebra(sweedler_h4(), kz4())
    involution = {name: dualize(dualize(b)) == b for name, b in fixtures.items()}
    passed = all(report[c].holds for c in D_IDS)
    ok = passed and same and all(involution.values())
    criterion(8, ok, f"D1-D11 {'hold' if passed else 'fail'}, rebuilt dual equal {same}, "
                     f"involution on {sum(involution.values())}/{len(involution)} bialgebras")
    assert ok


# --------------------------------------------------------------------------
# 9. specialization collapse


def test_criterion_9_specialization(criterion):
    """Trivial gamma: the bicocycle product equals the cocycle double cross product.

    The collapse needs phi(x, e) = x, which the unit axiom of the product
    forces; random data is drawn with that normalization and trivial gamma
    but is otherwise unconstrained (most samples are not bialgebras).
    """
    rng = random.Random(9)
    mismatches, valid, n = [], 0, 200
    for k in range(n):
        maps = bicocycle_maps(rng)
        maps["gamma"] = {p: 0 for p in PAIRS}
        maps["phi"].update({(x, 0): x for x in range(2)})
        d = bicocycle_from_maps(maps)
        c = cdcp_from_bicocycle(d)
        valid += verify_bicocycle_conditions(d).ok
        if not np.array_equal(build_bicocycle_bialgebra(d).algebra.mul, build_cdcp(c).algebra.mul):
            mismatches.append(k)
    # valid data with trivial gamma, by rejection against the set-level product
    n_valid = 0
    while n_valid < 50:
        maps = bicocycle_maps(rng)
        maps["gamma"] = {p: 0 for p in PAIRS}
        if not is_monoid(set_level_product(maps), ELEMS, (0, 0)):
            continue
        n_valid += 1
        d = bicocycle_from_maps(maps)
        if not np.array_equal(build_bicocycle_bialgebra(d).algebra.mul,
                              build_cdcp(cdcp_from_bicocycle(d)).algebra.mul):
            mismatches.append(("valid", n_valid))
    # and on the fixture whose gamma is trivial
    _, ks3 = ks3_split()
    fixture_same = np.array_equal(build_bicocycle_bialgebra(ks3.data).algebra.mul,
                                  build_cdcp(cdcp_from_bicocycle(ks3.data)).algebra.mul)
    ok = not mismatches and fixture_same
    criterion(9, ok, f"{n} samples with trivial gamma ({valid} valid) plus {n_valid} valid by rejection, "
                     f"{len(mismatches)} tensor mismatches; "
                     f"k[S3] fixture equal {fixture_same}")
    assert ok, mismatches


# --------------------------------------------------------------------------
# 10. CLI contract


REGRESSIONS = {
    "sl2-theta-corrupt": "A1",
    "q8-gamma-corrupt": "G11",
    "kz4-theta-corrupt": "B3",
    "kz4-varphi-corrupt": "B6",
    "kz4-cdcc-sigma-corrupt": "D6",
    "z4-not-a-group": "associativity",
}


def test_criterion_10_cli(criterion, tmp_path, capsys):
    data = Path(__file__).parent / "data"
    demos = {name: main(["demo", name]) for name in ("w1", "sl2", "z4", "kz4")}
    roundtrip = []
    for name, entry in CATALOG.items():
        text = dumps(to_document(entry.make()))
        roundtrip.append(dumps(to_document(loads(text))) == text)
    regressions = {}
    for name, axiom in REGRESSIONS.items():
        report = tmp_path / f"{name}.json"
        code = main(["verify", str(data / f"{name}.json"), "--report", str(report)])
        doc = json.loads(report.read_text(encoding="utf-8"))
        failed = {r["id"] for r in doc["results"] if not r["holds"]}
        regressions[name] = code == 1 and axiom in failed
    capsys.readouterr()
    ok = all(c == 0 for c in demos.values()) and all(roundtrip) and all(regressions.values())
    criterion(10, ok, f"demos {demos}, round trip {sum(roundtrip)}/{len(roundtrip)}, "
                      f"regressions {sum(regressions.values())}/{len(regressions)}")
    assert ok
