from fractions import Fraction

import pytest

import macp

M3 = "n=3;loops=;classes=[+1][+3][+2]"


def test_mu_and_covectors():
    om = macp.mu([[1, 0, 1], [0, 1, 1]])
    assert om.key == M3
    assert om == macp.mu([["2", "0", "2"], [Fraction(0), Fraction(1, 3), Fraction(1, 3)]])
    assert len(macp.covectors(om)) == 13
    assert macp.rank_h(om) == 2
    assert om.loops == []
    assert om.chi(0, 1) in (1, -1)
    assert macp.validate_covector_axioms(macp.covectors(om)) is None
    assert macp.validate_covector_axioms(["00", "++", "--", "+-"]) is not None


def test_enumeration_counts():
    assert [len(macp.enumerate_macp2(n)["elements"]) for n in (2, 3, 4)] == [1, 13, 146]
    assert len(macp.enumerate_macp12(3)["elements"]) == 60
    assert macp.enumerate_macp2(3)["f_vector"] == [3, 6, 4]


def test_cover_rules_and_order():
    om = macp.Rank2OM.parse(M3)
    coatoms = macp.coatoms_CR(om)
    assert len(coatoms) == 3
    assert all(macp.weak_leq(c, om) and macp.weak_leq_chirotope(c, om) for c in coatoms)


def test_sampling_round_trip():
    om = macp.Rank2OM.parse("n=4;loops=;classes=[+1 -3][+2][+4]")
    samples = macp.sample_cell(om, 5, seed=3)
    assert len(samples) == 5
    assert all(isinstance(v, Fraction) for row in samples[0] for v in row)
    assert all(macp.mu(x) == om for x in samples)
    assert samples == macp.sample_cell(om, 5, seed=3)
    assert macp.cell_dimension(om) == macp.rank_h(om)

    face = macp.coatoms_CR(om)[0]
    report = macp.sample_boundary(om, face, 2, seed=1)
    assert report["failures"] == 0 and report["perturbations"] == 20


def test_flags():
    flag = macp.nu([1, 0, 1], [[1, 0, 1], [0, 1, 1]])
    assert flag.z == "+0+"
    assert flag.key == "flag;z=+0+;M=" + M3
    assert macp.iota_embed(flag).key == "n=4;loops=;classes=[+1][+3][+2 +4]"
    for y, x in macp.sample_flag_cell(flag, 3, seed=2):
        assert macp.nu(y, x) == flag
    assert macp.flag_cell_dimension(flag) == macp.flag_rank(flag) == 2


def test_homology():
    assert macp.lower_interval_homology(macp.Rank2OM.parse(M3))["betti"] == [1, 1]
    assert macp.macp_homology(3)["betti"] == [1, 1, 1]
    assert macp.macp_homology(4, kind="macp1")["betti"] == [1, 1, 1, 1]


def test_suites():
    assert "covers" in macp.suite_names()
    report = macp.run_suite("covers", 3)
    assert report["passed"] and report["checked"] > 0


def test_errors():
    with pytest.raises(macp.MathError):
        macp.mu([[1, 2, 3], [2, 4, 6]])
    with pytest.raises(macp.MathError):
        macp.nu([1, 0, 0], [[1, 0, 1], [0, 1, 1]])
    with pytest.raises(macp.ParseError):
        macp.Rank2OM.parse("n=3;classes=[+1]")
    with pytest.raises(macp.ParseError):
        macp.mu([["1/0", 0, 1], [0, 1, 1]])
    with pytest.raises(macp.ResourceError):
        macp.enumerate_macp2(9)
    with pytest.raises(TypeError):
        macp.mu([[1.5, 0, 1], [0, 1, 1]])
    with pytest.raises(macp.MathError):
        macp.parallel_class(macp.Rank2OM.parse("n=3;loops=3;classes=[+1][+2]"), 2)
