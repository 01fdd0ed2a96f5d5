"""Smoke tests against the compiled module (PYTHONPATH points at the build tree)."""

import capfusion


def test_build_and_order():
    g = capfusion.Group.build("SL(2,5)")
    assert g.order == 120
    assert g.center_order() == 2
    assert g.subgroup_count() == 76
    assert g.primes() == [2, 3, 5]


def test_identity_and_inverse():
    g = capfusion.Group.build("S4")
    assert g.mul(0, 5) == 5
    for x in range(g.order):
        assert g.mul(x, g.inv(x)) == 0
    assert g.element_order(0) == 1


def test_chief_factors():
    g = capfusion.Group.build("SL(2,5)")
    factors = g.chief_factor_orders()
    assert sorted(b // a for a, b in factors) == [2, 60]
    s4 = capfusion.Group.build("S4")
    assert sorted(b // a for a, b in s4.chief_factor_orders()) == [2, 3, 4]


def test_cap_verdicts():
    sl23 = capfusion.Group.build("SL(2,3)")
    # the C4s of SL(2,3) fail 2-CAP at the (C2, Q8) factor
    assert not sl23.cap_check(4, 0, "pcap:2")
    sl25 = capfusion.Group.build("SL(2,5)")
    assert not sl25.cap_check(4, 0, "strong-pcap:2")
    # normal subgroups are strong p-CAP
    assert sl25.cap_check(2, 0, "strong-pcap:2")
    assert sl25.cap_check(2, 0, "partial")


def test_classification():
    s4 = capfusion.Group.build("S4")
    assert s4.p_supersolvable(3)
    assert not s4.p_supersolvable(2)
    assert not s4.supersolvable()
    s3 = capfusion.Group.build("S3")
    assert s3.supersolvable()
    assert s3.p_nilpotent(2)
    assert not s3.p_nilpotent(3)


def test_fusion():
    a5 = capfusion.Group.build("A5")
    assert a5.fusion_supersolvable(5)
    assert a5.fusion_chain(5) == [1, 5]
    assert not a5.p_supersolvable(5)
    a4 = capfusion.Group.build("A4")
    assert not a4.fusion_supersolvable(2)
    assert a4.strongly_closed_orders(2) == [1, 4]


def test_verify_small_corpus():
    ids = capfusion.theorem_ids()
    assert len(ids) >= 15
    assert "T-1.5" in ids and "R-1.6" in ids
    out = capfusion.verify_corpus("R-1.6", 24)
    assert out["violations"] is False
    assert any(r["hyp"] and r["concl"] for r in out["rows"])


def test_corpus_names():
    names = capfusion.corpus_names(24)
    assert "SL(2,3)" in names
    assert "S4" in names
