from fractions import Fraction

import pytest

import cspoly


def test_build_p648():
    pts = cspoly.build_p648()
    assert len(pts) == 48
    assert all(sum(x * x for x in p) == Fraction(50, 49) for p in pts)
    assert pts[24] == [-x for x in pts[0]]


def test_verify_rp5_defaults():
    report = cspoly.verify_rp5()
    assert report["verdict"] == "pass"
    checks = {c["name"]: c for c in report["checks"]}
    assert checks["f-vector"]["actual"].startswith("(48,552,2432,4776,4272,1424)")
    assert checks["chromatic-numbers"]["status"] == "skipped"


def test_invalid_parameters():
    with pytest.raises(cspoly.PreconditionError):
        cspoly.verify_rp5(alpha="1/2", beta="1/2")
    with pytest.raises(cspoly.ParseError):
        cspoly.verify_rp5(alpha="3/0")
    with pytest.raises(ValueError):
        cspoly.rationalize("/nonexistent/points.txt")


def test_projective_plane_homology():
    # Six-vertex RP^2.
    facets = [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5], [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5]]
    assert cspoly.f_vector(facets) == [6, 15, 10]
    assert cspoly.betti_mod2(facets) == [1, 1, 1]
    assert cspoly.integer_homology(facets) == "(Z, Z/2, 0)"


def test_chromatic_number_of_petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    r = cspoly.chromatic_number(10, outer + spokes + inner)
    assert r["exact"] and r["upper"] == 3


def test_threshold_rows():
    rows = cspoly.analyze(thresholds=["19/49", "17/49"])["thresholds"]
    assert [(r["regular_degree"], r["edges"], r["chromatic_upper"]) for r in rows] == [(10, 240, 4), (11, 264, 6)]


def test_best_rational():
    assert cspoly.best_rational(3.14159265358979, 1000) == Fraction(355, 113)


def test_pipeline(tmp_path):
    sparse = tmp_path / "sparse.txt"
    exact = tmp_path / "exact.txt"
    s = cspoly.sparsify(scramble=4, out=sparse)
    assert s["final_f"] <= 576 / 7 + 0.5
    r = cspoly.rationalize(sparse, max_den=7, out=exact)
    assert r["centrally_symmetric"]
    assert cspoly.verify_rp5(points=exact)["verdict"] == "pass"


def test_search_is_deterministic():
    a = cspoly.search(n=12, dim=3, seed=7, iterations=3000)
    b = cspoly.search(n=12, dim=3, seed=7, iterations=3000)
    assert a == b
    assert a["best_objective"] <= 5 ** -0.5 + 1e-9
