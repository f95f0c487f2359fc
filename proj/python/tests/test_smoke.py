import math

import pytest

import finring


def test_salem_gf5():
    report = finring.salem("gf(5)", d=2, t="1")
    assert report["ring"] == "gf(5)"
    assert report["salem"] == pytest.approx(1.0, abs=1e-9)
    assert report["converged"]


def test_salem_f2_exact():
    assert finring.salem("gf(2)")["salem"] == pytest.approx(math.sqrt(0.5), abs=1e-12)


def test_all_units_agree():
    report = finring.salem("zmod(9)", t="all-units")
    assert len(report["reports"]) == 6
    assert report["units_equal"]


def test_info():
    info = finring.info("zmod(4)")
    assert info["size"] == 4
    assert info["radical_size"] == 2


def test_spec_strings():
    assert finring.canonical_spec("gf(9)") == finring.canonical_spec("gf(3,2)")
    assert finring.display_spec(" zmod( 6 ) ") == "zmod(6)"


def test_errors():
    with pytest.raises(finring.ArgumentError, match="6 is not a prime power"):
        finring.info("gf(6)")
    with pytest.raises(finring.ParseError) as caught:
        finring.info("mat(2,gf(2)")
    assert caught.value.position == 11
    with pytest.raises(finring.ParseError):
        finring.canonical_spec("mat(2,gf(2)")
    with pytest.raises(finring.ScaleError):
        finring.salem("zmod(300)", d=3)
    with pytest.raises(ValueError):
        finring.salem("zmod(4)", t="2")


def test_verify_suite():
    result = finring.verify("fields")
    assert result["failed"] == 0
    assert result["total"] > 0


def test_edot_and_graph():
    assert finring.edot("gf(5)")["failures"] == 0
    g = finring.graph("gf(3)")
    assert g["connected"]
    assert g["laplacian_gap"] >= 3 - math.sqrt(6) - 1e-6


def test_scan_family():
    rows = finring.scan(family="separation")["rows"]
    assert len(rows) == 5
    assert all(row["salem"] > math.sqrt(2) for row in rows)
