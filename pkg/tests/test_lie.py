import dataclasses
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bicross.fixtures import (
    LIE_ALGEBRAS,
    abelian,
    direct_sum_data,
    lie_splits,
    nonabelian2,
    sl2,
    sl2_split,
    w1_graded,
)
from bicross.kernel import BasedSpace, BilinearMapTensor, SingularMatrix, SubspacePair, zeros
from bicross.lie import (
    BicocycleSumData,
    IndexOutOfRange,
    LieAlgebra,
    adapted_algebra,
    build_bicocycle_sum,
    classify_specialization,
    decompose,
    graded_bracket,
    graded_verify,
    truncate,
    verify_lie_axioms,
    verify_matched_pair,
)

from lie_data import ALTERNATING, assemble, is_lie, maps_of, random_sum_data
from strategies import matrices

AXIOMS = [f"A{i}" for i in range(1, 10)]


def _with_bracket(L: LieAlgebra, coeffs) -> LieAlgebra:
    return LieAlgebra(L.space, BilinearMapTensor(L.space, L.space, L.space, coeffs))


# verify_lie_axioms


def test_abelian_and_sl2_are_lie():
    assert verify_lie_axioms(abelian(3)).ok
    assert verify_lie_axioms(sl2()).ok
    assert verify_lie_axioms(sl2())["jacobi"].checked == 27


def test_sl2_single_coefficient_corruption():
    L = sl2()
    c = L.bracket.coeffs.copy()
    c[0, 1, 2] = Fraction(2)  # [e,f] = 2h but [f,e] still -h
    report = verify_lie_axioms(_with_bracket(L, c))
    assert not report["jacobi"].holds
    assert ("e", "f", "h") in [v.tuple for v in report["jacobi"].violations]
    assert not is_lie(c)


def test_sl2_consistent_rescaling_is_still_lie():
    # changing [e,f] and [f,e] together only rescales h
    L = sl2()
    c = L.bracket.coeffs.copy()
    c[0, 1, 2], c[1, 0, 2] = Fraction(2), Fraction(-2)
    assert verify_lie_axioms(_with_bracket(L, c)).ok
    assert is_lie(c)


# build_bicocycle_sum


def test_direct_sum_is_block_diagonal():
    L = sl2()
    h = BasedSpace(["c0", "c1"])
    d = BicocycleSumData.from_arrays(L.space, h, phi=L.bracket.coeffs)
    c = build_bicocycle_sum(d).bracket.coeffs
    assert np.array_equal(c[:3, :3, :3], L.bracket.coeffs)
    c[:3, :3, :3] = zeros((3, 3, 3))
    assert not any(c.flat)


def test_direct_sum_fixture_passes():
    d = direct_sum_data(nonabelian2(), nonabelian2())
    assert verify_matched_pair(d).ok
    assert verify_lie_axioms(build_bicocycle_sum(d)).ok


def test_truncated_w1_bracket():
    # W1 on z_-1 .. z_8: [z_i, z_j] = (j - i) z_{i+j} whenever i + j <= 8
    d = truncate(w1_graded(), 8)
    L = build_bicocycle_sum(d)
    labels = L.space.basis_labels
    for a, la in enumerate(labels):
        for b, lb in enumerate(labels):
            i, j = int(la[1:]), int(lb[1:])
            if i + j > 8:
                continue
            expected = zeros(len(labels))
            if i + j >= -1 and i != j:
                expected[labels.index(f"z{i + j}")] = Fraction(j - i)
            assert np.array_equal(L.bracket.coeffs[a, b], expected), (la, lb)


def test_sl2_round_trip():
    L, pair, d = sl2_split()
    assert build_bicocycle_sum(d) == adapted_algebra(L, pair)
    assert np.array_equal(build_bicocycle_sum(d).bracket.coeffs, L.bracket.coeffs)


def test_shape_mismatch():
    m, h = BasedSpace(["x"]), BasedSpace(["z"])
    with pytest.raises(ValueError):
        BicocycleSumData.from_arrays(m, h, phi=zeros((2, 2, 2)))


def test_zero_dimensional_factor():
    L = sl2()
    d = BicocycleSumData.from_arrays(L.space, BasedSpace([]), phi=L.bracket.coeffs)
    assert verify_matched_pair(d).ok
    assert build_bicocycle_sum(d) == L


# verify_matched_pair


def test_zero_maps_pass():
    d = BicocycleSumData.zero(BasedSpace(["x0", "x1"]), BasedSpace(["z0", "z1"]))
    report = verify_matched_pair(d)
    assert report.ok and [r.axiom_id for r in report] == AXIOMS


def test_sl2_split_data_passes():
    _, _, d = sl2_split()
    report = verify_matched_pair(d)
    assert report.ok
    assert report.axiom_forms == "proof-derived"


def test_literal_a4_is_reported_alongside():
    _, _, d = sl2_split()
    report = verify_matched_pair(d, literal=True)
    assert "A4-literal" in report and report["A4"].holds


def test_w1_passes_to_20():
    report = graded_verify(w1_graded(), 20)
    assert report.ok
    assert set(AXIOMS) <= {r.axiom_id for r in report}


def test_violation_cap():
    _, _, d = sl2_split()
    bad = d.replace(theta=d.theta.coeffs * 0 + Fraction(1))
    report = verify_matched_pair(bad, max_violations=2)
    assert not report.ok
    assert all(len(r.violations) <= 2 for r in report)
    assert any(r.violation_count > 2 for r in report)


# decompose


@pytest.mark.parametrize("pair", lie_splits("abelian3"))
def test_abelian_decomposes_to_zero(pair):
    d = decompose(abelian(3), pair)
    assert all(getattr(d, k).is_zero() for k in ("phi", "theta", "mu", "gamma", "varphi", "psi"))


def test_sl2_decomposition_values():
    _, _, d = sl2_split()
    e, f = 0, 1
    assert d.theta.coeffs[e, f].tolist() == [1]
    assert d.varphi.coeffs[0, e].tolist() == [2, 0]
    assert d.varphi.coeffs[0, f].tolist() == [0, -2]
    for k in ("phi", "gamma", "mu", "psi"):
        assert getattr(d, k).is_zero()


def test_nonabelian2_noncoordinate_split():
    # u = a + b, v = b: [v, u] = [b, a] = -b = -v lies in h
    L = nonabelian2()
    pair = SubspacePair.from_vectors(L.space, [[1, 1]], [[0, 1]])
    d = decompose(L, pair)
    assert d.psi.coeffs[0, 0].tolist() == [-1]
    assert d.varphi.is_zero()
    assert d.theta.is_zero()  # alternating on a one-dimensional m
    assert verify_matched_pair(d).ok


def test_decompose_rejects_noncomplementary():
    with pytest.raises(SingularMatrix):
        SubspacePair.from_vectors(sl2().space, [[1, 0, 0], [0, 1, 0]], [[1, 1, 0]])


# classify_specialization


def test_classify_matched_pair():
    d = direct_sum_data(nonabelian2(), nonabelian2())
    s = classify_specialization(d)
    assert s.matched_pair and s.theta_trivial and s.gamma_trivial


def test_classify_sl2_right_unified():
    s = classify_specialization(sl2_split()[2])
    assert s.right_unified_product and not s.left_unified_product
    assert s.gamma_trivial and not s.theta_trivial


def test_classify_w1_has_no_unified_label():
    s = classify_specialization(truncate(w1_graded(), 8))
    assert not s.theta_trivial and not s.gamma_trivial
    assert not (s.matched_pair or s.left_unified_product or s.right_unified_product)


# graded


def test_graded_minimal_bound_is_vacuous():
    report = graded_verify(w1_graded(), -1)
    assert report.ok


def test_graded_bound_below_range():
    with pytest.raises(ValueError):
        graded_verify(w1_graded(), -2)


def test_w1_closed_form_values():
    g = w1_graded()
    assert g.varphi(-1, 1) == (2, 0)  # [z_-1, z_1] = 2 z_0
    assert g.gamma(-1, 2) == (3, 1)  # [z_-1, z_2] = 3 z_1
    assert not g.mu(-1, -1)
    assert g.theta(1, 5) == (4, 6)
    assert g.bracket_fn(-1, 0) == (1, -1)


def test_graded_index_out_of_range():
    g = w1_graded()
    broken = dataclasses.replace(g, phi=lambda i, j: (1, i + j + 1))
    with pytest.raises(IndexOutOfRange):
        graded_verify(broken, 6)


@pytest.mark.parametrize("i", range(-1, 12))
def test_w1_grading(i):
    g = w1_graded()
    for j in range(-1, 12):
        for name in ("phi", "theta", "mu", "gamma", "varphi", "psi"):
            hit = getattr(g, name)(i, j)
            if hit and hit[0]:
                assert hit[1] == i + j
        assert graded_bracket(g, i, j) == ({i + j: Fraction(j - i)} if i != j and i + j >= -1 else {})


# properties


@settings(max_examples=60)
@given(st.integers(0, 2**32 - 1))
def test_iff_with_oracle(seed):
    d = random_sum_data(random.Random(seed))
    built = verify_lie_axioms(build_bicocycle_sum(d)).ok
    assert built == verify_matched_pair(d).ok == is_lie(assemble(maps_of(d)))


@settings(max_examples=40)
@given(st.sampled_from(sorted(LIE_ALGEBRAS)), st.data())
def test_round_trip_random_split(name, data):
    L = LIE_ALGEBRAS[name]()
    n = L.dim
    P = data.draw(matrices(n, n))
    assume(sympy.Matrix(P.tolist()).det() != 0)
    k = data.draw(st.integers(0, n))
    pair = SubspacePair(L.space, P[:, :k], P[:, k:])
    d = decompose(L, pair)
    assert build_bicocycle_sum(d) == adapted_algebra(L, pair)
    assert verify_matched_pair(d).ok
    s = classify_specialization(d)
    if s.matched_pair:
        assert d.theta.is_zero() and d.gamma.is_zero()


@settings(max_examples=60)
@given(st.integers(0, 2**32 - 1))
def test_a1_implies_antisymmetric_tensors(seed):
    d = random_sum_data(random.Random(seed))
    if verify_matched_pair(d)["A1"].holds:
        for k in ALTERNATING:
            c = getattr(d, k).coeffs
            assert np.array_equal(c, -c.transpose(1, 0, 2))
