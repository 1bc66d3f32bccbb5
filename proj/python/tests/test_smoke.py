from fractions import Fraction

import pytest

import bochert


def test_permutation_algebra():
    u = bochert.Permutation("(1,2,3)", 5)
    v = bochert.Permutation("(3,4,5)", 5)
    assert str(bochert.commutator(u, v)) == "(2,3,5)"
    assert (u * v)(1) == 3
    assert u.images == [1, 2, 0, 3, 4]
    assert (u * u.inverse()).is_identity()
    assert str(bochert.conjugate(bochert.Permutation("(1,2)", 3), bochert.Permutation("(1,3)", 3))) == "(2,3)"
    assert u.support() == [0, 1, 2]


def test_parse_errors():
    with pytest.raises(ValueError):
        bochert.Permutation("(1,2)(1,3)", 3)
    with pytest.raises(bochert.ParseError):
        bochert.Permutation("(1,9)", 3)


def test_group_basics():
    m11 = bochert.Group.catalog("M11")
    assert m11.order == 7920
    assert m11.transitivity_degree() == 4
    assert m11.pointwise_stabilizer([0, 1]).order == 72
    s4 = bochert.Group(4, ["(1,2)", "(1,2,3,4)"], "S4")
    assert s4.order == 24
    assert bochert.Permutation("(1,3)", 4) in s4
    g = s4.transporter([0, 1], [2, 3])
    assert g(0) == 2 and g(1) == 3


def test_min_degree():
    r = bochert.Group.catalog("M12").min_degree()
    assert r["m"] == 8
    assert len(r["witness"].support()) == 8
    assert bochert.Group.catalog("A6").min_degree(method="backtrack")["m"] == 3


def test_traces():
    t = bochert.trace(bochert.Group.catalog("M11"), "3.3")
    assert t["passed"] and t["conclusion_holds"]
    assert t["quantities"]["p(M)"] == Fraction(3409)
    j = bochert.trace(bochert.Group.catalog("M11"), "jordan")
    assert j["degenerate"] is not None


def test_verify_report():
    report = bochert.verify("catalog:PGL2_7", samples=50, seed=3)
    assert report["schema"] == 1
    assert report["order"] == "336"
    assert report["pass"] is True
    names = {s["name"] for s in report["suites"]}
    assert "laws" in names and "counts/fixes-point" in names


def test_catalog_labels():
    labels = bochert.catalog_labels(100000)
    assert "M12" in labels and "M23" not in labels
