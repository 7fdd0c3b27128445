import json

import pytest

import gpsw


def test_generation_paths_agree():
    assert gpsw.tbm_prefix(2, 2, 26) == "01101001100101101001011001"
    assert gpsw.phi_fixed_point_prefix(5, 3, 3000) == gpsw.tbm_prefix(5, 3, 3000)


def test_closure_examples():
    E = gpsw.parse_antimorphism("E", 2)
    assert gpsw.closure("0110110", E) == "011011001001"
    assert gpsw.longest_pal_suffix("0110110", E) == 2
    assert gpsw.is_fixed(gpsw.psi(0, 2), [0, 1, 1, 0, 1, 1, 0])
    assert gpsw.psi(2, 3)("01") == "12"


def test_gps_and_inference():
    steps = gpsw.gps_steps("delta=0(101); theta=(R E)", 2, 8)
    assert steps[-1] == "010110100101101010010110100101"
    assert gpsw.gps_prefix("delta=0(1); theta=(E R)", 2, 64) == gpsw.tbm_prefix(2, 2, 64)
    assert gpsw.canonical_directives(4, 2) == "delta=0(101); theta=(R E)"
    result = gpsw.infer_bisequence(gpsw.tbm_prefix(4, 2, 44), 2)
    assert result["max_coverage"] < 44


def test_analysis_and_verifier():
    assert gpsw.factor_complexity(gpsw.tbm_prefix(2, 2, 4096), 2, 4) == [2, 4, 6, 10]
    assert gpsw.palindrome_census("0110110", 2)["palindromes"] == 8
    assert gpsw.find_overlap(gpsw.tbm_prefix(2, 2, 512), 2) is None
    report = gpsw.verify_theorem(4, 2, 4096)
    assert report["verdict"] == "confirmed"
    assert report["witness_index"] == 18
    grid = gpsw.theorem_grid(4, 4, 1024)
    assert grid["iff_pattern_holds"]
    json.dumps(grid)


def test_errors():
    with pytest.raises(gpsw.Error):
        gpsw.parse_word("012", 2)
    with pytest.raises(ValueError):
        gpsw.psi(3, 3)
    assert gpsw.ancestors("010", 2, 2) == ["00", "11"]
    assert gpsw.order_q(7, 5) == 5
