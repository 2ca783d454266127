"""Pair reports: dual-method agreement, predictions and failure capture."""

import pytest

from gelfand import (
    InvalidParameterError,
    ResourceLimitError,
    check_pair,
    report_record,
    scan_pairs,
)
from gelfand.reports import SKIPPED, format_report


def test_abelian_base_pair():
    r = check_pair("wr(Z2,3)", cache_dir=None)
    assert r.group_order == 48
    assert r.subgroup_order == 8
    assert r.base_abelian is True
    assert r.gelfand_hecke is True
    assert r.gelfand_character is True
    assert r.rank == 3
    assert r.predicted_rank == 3
    assert r.multiplicities == (1, 1, 1)
    assert r.consistent


def test_nonabelian_base_pair():
    r = check_pair("wr(S3,2)", cache_dir=None)
    assert r.base_abelian is False
    assert r.gelfand_hecke is False
    assert r.gelfand_character is False
    assert r.rank == 7
    assert r.multiplicities == (1, 1, 1, 2)
    assert r.predicted_term_count == 4
    assert r.consistent


def test_trivial_base_gives_symmetric_pair():
    r = check_pair("wr(Z1,4)", cache_dir=None)
    assert (r.group_order, r.subgroup_order) == (24, 6)
    assert r.rank == 2
    assert r.gelfand_hecke is True and r.gelfand_character is True
    assert r.consistent


def test_hecke_only_method():
    r = check_pair("wr(Z3,2)", method="hecke", cache_dir=None)
    assert r.gelfand_hecke is True
    assert r.gelfand_character is None
    assert r.multiplicities is None
    assert r.rank == r.predicted_rank == 4
    assert r.consistent


def test_character_only_method():
    r = check_pair("wr(Z3,2)", method="character", cache_dir=None)
    assert r.gelfand_hecke is None
    assert r.rank is None
    assert r.gelfand_character is True
    assert r.consistent


def test_character_skipped_when_over_limits():
    # class limit 3 is below the 10 classes of wr(Z2,3): method=both degrades
    r = check_pair("wr(Z2,3)", cache_dir=None, class_limit=3)
    assert r.gelfand_hecke is True
    assert r.gelfand_character == SKIPPED
    assert r.consistent
    # same degradation when the wreath order exceeds the order limit; the
    # base group (order 2) stays under it so the prediction still runs
    r = check_pair("wr(Z2,3)", cache_dir=None, order_limit=40)
    assert r.gelfand_character == SKIPPED
    assert r.rank == r.predicted_rank == 3
    assert r.consistent


def test_character_only_over_limit_raises():
    with pytest.raises(ResourceLimitError):
        check_pair("wr(Z2,3)", method="character", cache_dir=None, order_limit=40)


def test_seed_does_not_change_verdicts():
    a = report_record(check_pair("wr(S3,2)", cache_dir=None, seed=0))
    b = report_record(check_pair("wr(S3,2)", cache_dir=None, seed=123))
    assert a == b


def test_invalid_method_and_n():
    with pytest.raises(InvalidParameterError):
        check_pair("wr(Z2,2)", method="magic")
    with pytest.raises(InvalidParameterError):
        check_pair("wr(Z2,1)")


def test_scan_records_errors_per_row():
    reports = scan_pairs(["Z2", "Q8"], 2, cache_dir=None)
    assert reports[0].consistent
    assert reports[1].error is not None
    assert not reports[1].consistent


def test_report_record_shape():
    r = check_pair("wr(Z2,2)", cache_dir=None)
    record = report_record(r)
    assert record["schema_version"] == 1
    assert record["pair"] == "wr(Z2,2)"
    assert record["gelfand_hecke"] is True
    assert record["rank"] == 3
    assert "timings" not in record
    assert record["consistent"] is True


def test_format_report_mentions_verdict():
    text = format_report(check_pair("wr(S3,2)", cache_dir=None))
    assert "is NOT a Gelfand pair" in text
    text = format_report(check_pair("wr(Z2,2)", cache_dir=None))
    assert "IS a Gelfand pair" in text
