import pytest

import soldens.groups as gr
import soldens.partitions as pt


def test_cov_examples():
    c6 = gr.cyclic(6)
    assert pt.cov(c6, gr.subset(c6, [0, 1])) == (3, (0, 2, 4))
    assert pt.cov(c6, gr.subset(c6, range(6)))[0] == 1
    h = gr.subset(c6, [0, 3])
    assert pt.cov(c6, h)[0] == gr.index_of(c6, h)
    with pytest.raises(pt.PartitionError):
        pt.cov(c6, gr.subset(c6, []))


def test_pack_examples():
    c6 = gr.cyclic(6)
    assert pt.pack(c6, gr.subset(c6, [0, 1])) == (3, (0, 2, 4))
    assert pt.pack(c6, gr.subset(c6, range(6)))[0] == 1
    assert pt.pack(c6, gr.subset(c6, [2]))[0] == 6


def test_delta_ideal_matches_difference_set():
    c6 = gr.cyclic(6)
    a = gr.subset(c6, [0, 1])
    assert pt.delta_I_finite(c6, a).indices() == [0, 1, 5]
    assert pt.delta_I_finite(c6, a, ideal=lambda s: True).indices() == []


def test_prop122_chain_on_cyclic6():
    rep = pt.verify_prop122(gr.cyclic(6))
    assert rep["checked"] == 63
    assert any(a == [0, 1] for a, *_ in rep["tight"])
    with pytest.raises(pt.SizeGuardError):
        pt.verify_prop122(gr.direct_product(gr.cyclic(4), gr.cyclic(4)))


def test_thm139_bound_formula():
    assert [pt.thm139_bound(n) for n in (1, 2, 3, 4)] == [1, 2, 3, 7]


def test_partition_verifiers():
    c6 = gr.cyclic(6)
    v = pt.verify_thm137(c6, 2)
    assert v.passed and v.bound == 2
    v = pt.verify_thm139(gr.symmetric(3), 3)
    assert v.passed and v.bound == 3
    assert v.partitions_checked > 0
    with pytest.raises(pt.SizeGuardError):
        pt.verify_thm137(gr.cyclic(6), 5)


def test_protasov_search_finds_nothing_on_small_groups():
    assert pt.protasov_search(gr.cyclic(6), 2) is None
    assert pt.protasov_search(gr.symmetric(3), 2) is None
    assert pt.protasov_search(gr.cyclic(5), 1) is None


def test_odd_group_check():
    assert pt.odd_group_check(gr.cyclic(3))["odd"]
    rep = pt.odd_group_check(gr.cyclic(4))
    assert not rep["odd"] and rep["witness"] == ([0, 1], [2, 3])
    rep2 = pt.odd_group_check(gr.cyclic(2))
    assert not rep2["odd"] and rep2["witness"] == ([0], [1])


def test_difference_power_subgroup():
    c6 = gr.cyclic(6)
    sub, exponent, index = pt.difference_power_subgroup(c6, gr.subset(c6, [0, 2, 4]), 2)
    assert exponent == 1 and index == 2
    sub, exponent, index = pt.difference_power_subgroup(c6, gr.subset(c6, [0, 3]), 3)
    assert index == 3 and exponent == 1
    sub, exponent, index = pt.difference_power_subgroup(c6, gr.subset(c6, [0, 1, 2]), 2)
    assert index == 1 and exponent <= 4
    with pytest.raises(pt.PartitionError):
        pt.difference_power_subgroup(c6, gr.subset(c6, [0]), 2)


def test_thm43_search():
    c6 = gr.cyclic(6)
    rep = pt.thm43_search(c6, gr.subset(c6, [0, 1]))
    assert rep["size"] == 2 and rep["cap"] == 3
    c8 = gr.cyclic(8)
    rep = pt.thm43_search(c8, gr.subset(c8, [0, 4]))
    assert rep["size"] == 4 and rep["tight"]


def test_subadditivity_partition_consequence():
    # in any n-cell partition some cell has density at least 1/n
    from fractions import Fraction

    g = gr.dihedral(4)
    for cells in pt._partitions_into(g.order, 3):
        best = max(Fraction(len(c), g.order) for c in cells)
        assert best >= Fraction(1, len(cells))
