import json

import heckelab as hl


def test_poly_arithmetic():
    u1 = hl.variable(2, "U1")
    u2 = hl.variable(2, "U2")
    assert str(u1 + u2) == "U1 + U2"
    assert str((u1 + u2) * (u1 - u2)) == "U1^2 - U2^2"
    assert (u1 * hl.variable(2, "U1", -1)).evaluate({}) == "1"
    s2 = hl.elementary_symmetric(3, 2)
    assert s2.evaluate({"U1": "1", "U2": "1", "U3": "1"}) == "3"
    assert s2.evaluate({"U1": "1/2", "U2": "2", "U3": "3"}) == "17/2"


def test_satake_images():
    assert hl.satake("gl", 3, 1, "T", 1) == "U1 + U2 + U3"
    assert hl.satake("gl", 3, 1, "Psi", 1) == "U3"
    assert hl.satake("gsp", 2, 0, "phi", 1) == "U1*V2 + U2*V1"
    assert hl.satake("gsp", 1, 0, "Tp") == "U1 + V1"


def test_levi_expansion():
    assert hl.levi_expand(2, 1, 1) == [(0, 0, 1), (0, 1, 0)]
    assert hl.levi_expand(3, 1, 2) == [(0, 0, 2), (-1, 1, 1)]
    assert hl.levi_expand(4, 1, 4) == [(-3, 1, 3)]


def test_duality():
    assert hl.dual(3, 1, "T", 1) == "T2"
    assert hl.dual(3, 1, "Phi", 1) == "Phi1*Psi1*Q^-1"


def test_hecke_charpoly():
    assert hl.hecke_charpoly_str(2, 1) == "X^2 - T1*X + Q*T2"
    data = json.loads(hl.hecke_charpoly(4, 2))
    assert data["degree"] == 6
    assert hl.charpoly_degree(4, 2) == 6
    ok, report = hl.langlands_check(3, 2, trials=25, seed=0)
    assert ok, report


def test_finite_geometry():
    assert hl.gaussian_binomial(1, 3) == "Q^2 + Q + 1"
    assert hl.gaussian_binomial(2, 4, q=2) == "35"
    assert hl.count_subspaces(4, 2, 2) == 35
    assert hl.count_lagrangian(2, 2) == 15
    assert hl.count_lagrangian(2, 3) == 40


def test_census():
    data = json.loads(hl.census("ordinary", 4, 2, 2, 2))
    assert data["all_match"]
    assert data["total"] == 35
    rows = {row["i"]: row for row in data["rows"]}
    assert rows[1]["classes"] == 9 and rows[1]["fiber"] == 2

    siegel = json.loads(hl.census("siegel", 2, 0, 2, 2))
    assert siegel["all_match"] and siegel["total"] == 15

    nonord = json.loads(hl.census("nonordinary", 3, 1, 1, 2))
    assert nonord["lines_in_d"] == 3
    assert nonord["conjectural"]

    unitary = json.loads(hl.census("unitary", 2, 1, 1, 2))
    assert unitary["all_match"] and unitary["q"] == 4


def test_degrees():
    assert hl.bidegree_profile("Psi", 1, 0, 4, 1) == ["1", "1", "1", "Q^3"]
    assert hl.degrees_consistent(5, 2)
    d1s, d1ns, d2s, d2ns = hl.siegel_degrees(2, 2, 2)
    assert (d1s, d1ns, d2s, d2ns) == ("1", "1", "1", "8")


def test_hodge_and_invariants():
    assert hl.siegel_hodge(2) == [1, 1, 1, 1]
    assert hl.unitary_hodge(4, 2) == [1, 1, 2, 1, 1]
    assert hl.enumerate_invariants(2, 1, 1) == [(1, [1, 1])]
    assert hl.hodge_pink_weights(2, [1, 0, 1]) == [0, -2]


def test_verify_suite():
    ok, report = hl.verify("poly", max_r=2, seed=0, trials=5)
    assert ok, report
