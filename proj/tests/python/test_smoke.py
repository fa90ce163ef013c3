"""Smoke tests for the python bindings."""

import pytest

import permforms as pf


def test_group_construction():
    s3 = pf.group(3, ["(0 1 2)", "(0 1)"])
    assert s3.order == 6
    assert s3.degree == 3
    assert s3.contains("(1 2)")
    assert not pf.alternating(4).contains("(0 1)")
    assert pf.dicyclic(4).order == 16
    assert pf.direct_product([pf.symmetric(3), pf.symmetric(3)]).order == 36


def test_bad_input_raises():
    with pytest.raises(pf.InputError):
        pf.group(3, ["(0 1"])
    with pytest.raises(pf.InputError):
        pf.formation("Z")


def test_formations_and_residuals():
    s3 = pf.symmetric(3)
    n = pf.formation("N")
    na = pf.formation("NA")
    assert not pf.belongs(n, s3)
    assert pf.belongs(na, s3)
    assert pf.residual(n, s3).order == 3
    assert pf.formation_pi(pf.formation("A"), 10) == [2, 3, 5, 7]
    assert pf.pi_of_group(s3) == [2, 3]
    assert not pf.formation("NA").flags["superradical"]


def test_structure_operations():
    s4 = pf.symmetric(4)
    assert pf.derived_subgroup(s4).order == 12
    assert pf.fitting_subgroup(s4).order == 4
    assert pf.sylow_subgroup(s4, 2).order == 8
    assert pf.derived_series_orders(s4) == [24, 12, 4, 1]
    assert pf.is_soluble(s4)
    assert not pf.is_soluble(pf.alternating(5))
    v4 = pf.normal_subgroups(s4)[1]
    assert v4.order == 4
    assert pf.quotient(s4, v4).order == 6


def test_lattice_and_classification():
    s3 = pf.symmetric(3)
    classes = pf.subgroup_classes(s3)
    assert [c["order"] for c in classes] == [1, 2, 3, 6]
    n = pf.formation("N")
    c2 = pf.subgroup(s3, ["(0 1)"])
    assert pf.is_self_normalizing(s3, c2)
    ok, chain = pf.is_f_subnormal(n, s3, c2)
    assert not ok and chain is None
    a3 = pf.subgroup(s3, ["(0 1 2)"])
    ok, chain = pf.is_f_subnormal(n, s3, a3)
    assert ok
    assert [link.order for link in chain] == [3, 6]
    assert pf.is_f_abnormal(n, s3, c2)
    assert pf.is_schmidt_group(s3)
    carters = pf.carter_subgroups(s3)
    assert len(carters) == 1 and carters[0].order == 2


def test_verification():
    n = pf.formation("N")
    report = pf.verify_theorem(n, pf.symmetric(3), "s3")
    assert report["status"] == "VERIFIED"
    assert report["s1"] and report["s2"] and report["s3"]

    report_u = pf.verify_theorem(pf.formation("U"), pf.symmetric(3))
    assert report_u["status"] == "SKIPPED_FLAGS"

    report_a5 = pf.verify_corollary(n, pf.alternating(5))
    assert report_a5["status"] == "SKIPPED_INSOLUBLE"

    lemmas = pf.verify_lemmas(n, pf.symmetric(4))
    assert all(o["holds"] for o in lemmas if o["applicable"])


def test_corpus_and_isomorphism():
    small = pf.builtin_corpus(order_max=8)
    assert len(small) == 14  # 1+1+1+2+1+2+1+5 isomorphism types
    assert pf.isomorphic(pf.symmetric(3), pf.dihedral(3))
    assert not pf.isomorphic(pf.cyclic(4), pf.elementary_abelian(2, 2))


def test_example_864():
    ex = pf.build_example_864()
    g = ex["group"]
    assert g.order == 864
    na = pf.formation("NA")
    assert pf.residual(na, g).order == 36
    g3 = pf.sylow_subgroup(g, 3)
    assert g3.order == 27
    assert pf.is_f_subnormal(na, g, g3)[0]
    g2 = pf.sylow_subgroup(g, 2)
    assert pf.is_self_normalizing(g, g2)
    assert not pf.is_f_subnormal(na, g, g2)[0]
