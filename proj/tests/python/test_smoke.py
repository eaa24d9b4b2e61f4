import pytest

import paley_clique as pc


def test_clique_numbers():
    assert pc.clique_number(5) == 2
    assert pc.clique_number(13) == 3
    assert pc.clique_number(17) == 3
    assert pc.clique_number(29) == 4
    assert pc.clique_number(9) == 3
    assert pc.clique_number(25) == 5


def test_max_clique_witness():
    s, witness = pc.max_clique(25)
    assert s == 5
    assert witness == [0, 1, 2, 3, 4]
    assert pc.is_clique(25, witness)
    assert not pc.is_clique(13, [0, 2])


def test_phi_profile():
    witness, phi = pc.phi_profile(5)
    assert witness == [0, 1]
    assert phi == [1, 1, 0, -2, 0]
    assert sum(phi) == 0
    assert sum(v * v for v in phi) == 2 * (5 - 2)


def test_analyze_row():
    row = pc.analyze(13)
    assert row["q"] == 13
    assert row["s_exact"] == 3
    assert row["n"] == 3
    assert row["theorem_bound"] == 3
    assert row["improved"] is False
    assert row["classification"] == "case_ii_exception"
    assert row["phi_min"] == -3
    assert row["r_best"] == 3
    assert row["lemma_bound"] == "3"

    square = pc.analyze(9)
    assert square["theorem_bound"] is None
    assert square["improved"] is None
    assert square["classification"] == ""


def test_verify_reports():
    for q in (5, 9, 13, 25):
        checks = pc.verify(q)
        assert checks, f"no checks ran for q={q}"
        failed = [c for c in checks if not c["pass"]]
        assert not failed, f"q={q}: {failed}"


def test_bounds_and_classification():
    assert pc.isqrt(24) == 4
    assert pc.isqrt(25) == 5
    assert pc.theorem_bound(29) == 4
    assert pc.theorem_bound(41) == 6
    assert pc.classify(13) == "case_ii_exception"
    assert pc.classify(17) == "case_i_improved"

    counts = pc.improvement_fraction(100)
    assert counts["total"] == 11
    assert counts["improved"] == 5

    big = pc.improvement_fraction(100000)
    assert 0.70 <= big["fraction"] <= 0.80


def test_admissible_orders():
    assert pc.admissible_orders(5, 40) == [5, 13, 17, 29, 37]
    assert pc.admissible_orders(5, 130, True) == [
        5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113, 125,
    ]
    assert pc.admissible_orders(5, 30, even_k=True) == [5, 9, 13, 17, 25, 29]


def test_errors_surface_as_python_exceptions():
    with pytest.raises(pc.PaleyError):
        pc.theorem_bound(9)  # square order
    with pytest.raises(pc.PaleyError):
        pc.clique_number(7)  # 3 mod 4
    with pytest.raises(pc.PaleyError):
        pc.classify(15)
