import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicross.fixtures import GROUPS, q8_split, s3_split, z2xz3_split, z4_group_split
from bicross.group import (
    BicocycleGroupData,
    BudgetExceeded,
    FiniteGroup,
    NormalizationViolated,
    NotAGroup,
    NotBijective,
    PointedSet,
    bicocycle_product_table,
    build_bicocycle_group,
    cyclic,
    direct_product,
    factor_group,
    inverse_via_formula,
    normalization_violations,
    search_factorizations,
    transported_table,
    verify_group_conditions,
    verify_group_table,
)

from group_data import all_factorizations, is_group, nontrivial_data, perturb, table_inverse

CONDITIONS = [f"G{i}" for i in range(1, 13)] + ["INV-R", "INV-L"]


def _trivial_data(M: FiniteGroup, H: FiniteGroup) -> BicocycleGroupData:
    nm, nh = M.order, H.order
    return BicocycleGroupData(
        PointedSet(M.elements, M.identity), PointedSet(H.elements, H.identity),
        varphi=np.tile(np.arange(nm), (nh, 1)),
        psi=np.tile(np.arange(nh)[:, None], (1, nm)),
        phi=M.cayley, theta=np.full((nm, nm), H.identity),
        mu=H.cayley, gamma=np.full((nh, nh), M.identity),
    )


def z4_data() -> BicocycleGroupData:
    """M = {0,2}, H = {0,1} in Z4, written out by hand."""
    return BicocycleGroupData(
        PointedSet(["0", "2"]), PointedSet(["0", "1"]),
        varphi=[[0, 1], [0, 1]], psi=[[0, 0], [1, 1]],
        phi=[[0, 1], [1, 0]], theta=[[0, 0], [0, 0]],
        mu=[[0, 1], [1, 0]], gamma=[[0, 0], [0, 1]],
    )


# finite groups


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_fixture_groups_verify(name):
    G = GROUPS[name]()
    assert verify_group_table(G.cayley, G.identity).ok


def test_non_group_table():
    table = cyclic(3).cayley.copy()
    table[1, 1] = 0
    report = verify_group_table(table, 0)
    assert not report.ok and "latin" in report.failed()
    with pytest.raises(NotAGroup):
        FiniteGroup.checked(["a", "b", "c"], table)


# build


def test_trivial_data_builds_direct_product():
    Z2, Z3 = cyclic(2), cyclic(3)
    d = _trivial_data(Z2, Z3)
    assert verify_group_conditions(d).ok
    G = build_bicocycle_group(d)
    assert np.array_equal(G.cayley, direct_product(Z2, Z3).cayley)


def test_z4_hand_data_rebuilds_z4():
    d = z4_data()
    assert verify_group_conditions(d).ok
    G = build_bicocycle_group(d)
    # (x,h) -> x + h with x in {0,2}, h in {0,1}
    value = [0, 1, 2, 3]
    for a in range(4):
        for b in range(4):
            assert value[G.cayley[a, b]] == (value[a] + value[b]) % 4


def test_s3_rebuilds_s3():
    G, (M, H), d = s3_split()
    assert np.array_equal(build_bicocycle_group(d).cayley, transported_table(G, M, H))
    assert (d.theta == d.one).all() and (d.gamma == d.e).all()


def test_normalization_violation():
    d = z4_data().replace(theta=np.array([[1, 0], [0, 0]]))
    assert normalization_violations(d)
    with pytest.raises(NormalizationViolated):
        build_bicocycle_group(d)


def test_not_a_group_carries_reports():
    d = z4_data().replace(varphi=np.array([[0, 1], [0, 0]]))
    assert not normalization_violations(d)
    with pytest.raises(NotAGroup) as info:
        build_bicocycle_group(d)
    assert not info.value.report.ok
    assert not info.value.conditions.ok


# conditions


def test_condition_ids_and_one_sided_notes():
    report = verify_group_conditions(z4_data())
    assert [r.axiom_id for r in report] == CONDITIONS
    assert report["G9"].note and report["G12"].note


def test_z4_gamma_to_identity_gives_klein_four():
    # gamma(1,1) = 0 makes (0,1) an involution: the result is Z2 x Z2, still a group
    d = z4_data().replace(gamma=np.array([[0, 0], [0, 0]]))
    assert verify_group_conditions(d).ok
    G = build_bicocycle_group(d)
    assert all(G.mul(a, a) == G.identity for a in range(4))


def test_q8_gamma_perturbation_detected():
    G, _, d = q8_split()
    j = d.H.elements.index("j")
    gamma = d.gamma.copy()
    gamma[j, j] = d.M.elements.index("i")  # j*j = i instead of -1
    bad = d.replace(gamma=gamma)
    report = verify_group_conditions(bad)
    assert "G11" in report.failed()
    assert report["G11"].first_violation() is not None
    table = verify_group_table(bicocycle_product_table(bad), bad.e * len(bad.H) + bad.one)
    assert "associativity" in table.failed()
    assert len(table["associativity"].first_violation().tuple) == 3


def test_literal_inverse_variants():
    _, _, d = q8_split()
    report = verify_group_conditions(d, literal=True)
    assert "INV-R-literal" in report and "INV-L-literal" in report
    assert report.axiom_forms == "literal"


# factor


def test_factor_direct_product_is_trivial():
    G, _, d = z2xz3_split()
    ref = _trivial_data(cyclic(2), cyclic(3))
    for name in ("theta", "gamma"):
        assert (getattr(d, name) == getattr(ref, name)).all()
    assert (d.varphi == ref.varphi).all() and (d.psi == ref.psi).all()


def test_factor_z4():
    _, _, d = z4_group_split()
    assert d.gamma[1, 1] == d.M.elements.index("2")
    assert d == z4_data()


def test_factor_q8_nontrivial():
    # M = <i> is normal, so h x = (h x h^-1) h and psi(h,x) = h; ji = -ij shows up in varphi
    _, _, d = q8_split()
    assert (d.psi == np.arange(len(d.H))[:, None]).all()
    j, i = d.H.elements.index("j"), d.M.elements.index("i")
    assert d.M.elements[d.varphi[j, i]] == "-i"
    assert d.M.elements[d.gamma[j, j]] == "-1"
    # with the roles swapped the right action is nontrivial: i j = j (-i)
    sw = factor_group(GROUPS["Q8"](), ["1", "j"], ["1", "-1", "i", "-i"])
    i, j = sw.H.elements.index("i"), sw.M.elements.index("j")
    assert sw.H.elements[sw.psi[i, j]] == "-i"


def test_factor_rejects_non_bijective():
    with pytest.raises(NotBijective):
        factor_group(cyclic(4), ["0", "1"], ["0", "3"])
    with pytest.raises(NotBijective):
        factor_group(cyclic(4), ["0", "1"], ["0"])
    with pytest.raises(ValueError):
        factor_group(cyclic(4), ["1", "3"], ["0", "2"])


# search


def test_search_examples():
    assert search_factorizations(cyclic(2), 2) == [((0, 1), (0,))]
    z4 = search_factorizations(cyclic(4), 2)
    assert ((0, 2), (0, 1)) in z4 and ((0, 1), (0, 2)) in z4
    S3 = GROUPS["S3"]()
    found = {(frozenset(S3.elements[i] for i in M), frozenset(S3.elements[i] for i in H))
             for M, H in search_factorizations(S3, 3)}
    assert (frozenset({"e", "(123)", "(132)"}), frozenset({"e", "(12)"})) in found


def test_search_budget():
    with pytest.raises(BudgetExceeded):
        search_factorizations(GROUPS["D4"](), 4, budget=10)
    with pytest.raises(ValueError):
        search_factorizations(cyclic(4), 3)


# properties


@pytest.mark.parametrize("case", all_factorizations(), ids=lambda c: f"{c[0]}-{len(c[1])}x{len(c[2])}")
def test_factor_build_round_trip(case):
    name, M, H = case
    G = GROUPS[name]()
    d = factor_group(G, M, H)
    assert verify_group_conditions(d).ok
    built = build_bicocycle_group(d)
    assert np.array_equal(built.cayley, transported_table(G, M, H))
    assert verify_group_table(built.cayley, built.identity)["latin"].holds
    nh = len(d.H)
    for x in range(len(d.M)):
        for h in range(nh):
            inv = inverse_via_formula(d, x, h)
            assert inv[0] * nh + inv[1] == table_inverse(built.cayley, built.identity, x * nh + h)


@settings(max_examples=150)
@given(st.integers(0, 2**32 - 1))
def test_perturbation_iff(seed):
    d = perturb(random.Random(seed))
    if d is None:
        return
    oracle = is_group(d)
    assert verify_group_conditions(d).ok == oracle
    table = verify_group_table(bicocycle_product_table(d), d.e * len(d.H) + d.one)
    assert table.ok == oracle


def test_printed_inverse_order_differs_somewhere():
    # the two factors of (x,h)^-1 do not commute in S3
    _, _, d = s3_split()
    differs = [
        (x, h) for x in range(len(d.M)) for h in range(len(d.H))
        if inverse_via_formula(d, x, h) != inverse_via_formula(d, x, h, printed_order=True)
    ]
    assert differs
    assert len(nontrivial_data()) > 0
