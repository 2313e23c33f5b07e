"""Tests for reports, checks and witnesses."""

import json
import logging

import pytest

from hopfkit.core import Tensor
from hopfkit.exceptions import CertificationError
from hopfkit.field import QQ, PrimeField
from hopfkit.identities import Identity
from hopfkit.report import Report, Verdict

pytestmark = pytest.mark.fast


def test_passing_check() -> None:
    report = Report("subject")
    t = Tensor.of(QQ, [[1, 0], [0, 1]])
    check = report.check_equal(Identity.UNIT, t, t, 1)
    assert check.passed and check.witness is None
    assert report.passed
    assert report.verdict_of(Identity.UNIT) is Verdict.PASS


def test_failing_check_carries_column_witness() -> None:
    report = Report("subject")
    lhs = Tensor.of(QQ, [[1, 0], [0, 1]])
    rhs = Tensor.of(QQ, [[1, 0], [0, 2]])
    check = report.check_equal(Identity.ASSOCIATIVITY, lhs, rhs, 1, scope="algebra")
    assert not report.passed
    assert check.witness == (1,)
    assert check.to_dict() == {
        "identity": "associativity",
        "verdict": "fail",
        "scope": "algebra",
        "witness": [1],
        "lhs": ["0/1", "1/1"],
        "rhs": ["0/1", "2/1"],
    }


def test_witness_is_first_input() -> None:
    report = Report("subject")
    lhs = Tensor.of(QQ, [[0, 0], [0, 0]])
    rhs = Tensor.of(QQ, [[0, 1], [1, 0]])
    # entry [0, 1] has input 1, entry [1, 0] has input 0
    assert report.check_equal(Identity.UNIT, lhs, rhs, 1).witness == (0,)


def test_constant_identity_witness_is_the_output_index() -> None:
    report = Report("subject")
    check = report.check_equal(Identity.COUNIT_UNIT, Tensor.of(QQ, [1, 2]), Tensor.of(QQ, [1, 3]), 1)
    assert check.witness == (1,)
    assert check.lhs == [2] and check.rhs == [3]


def test_prime_field_scalars_serialize_as_integers() -> None:
    F = PrimeField(5)
    report = Report("subject")
    check = report.check_equal(Identity.UNIT, Tensor.of(F, [[1]]), Tensor.of(F, [[4]]), 1)
    assert check.to_dict()["lhs"] == [1] and check.to_dict()["rhs"] == [4]


def test_record_and_not_applicable() -> None:
    report = Report("subject")
    report.record(Identity.ROUND_TRIP_BIJECTIVE, True, witness=(3,))
    report.not_applicable(Identity.SMASH_COACTION_CRITERION, note="no coaction")
    assert report.passed
    assert report.checks[0].witness is None
    assert report.verdict_of(Identity.SMASH_COACTION_CRITERION) is Verdict.NOT_APPLICABLE
    failed = report.record(Identity.DECOMPOSITION_BIJECTIVE, False, witness=(2,))
    assert failed.witness == (2,)
    assert report.failures == [failed]


def test_verdict_of_unknown_identity() -> None:
    with pytest.raises(KeyError):
        Report("subject").verdict_of(Identity.PENTAGON)


def test_extend_prefixes_scopes() -> None:
    inner = Report("inner")
    inner.record(Identity.UNIT, True)
    inner.record(Identity.ASSOCIATIVITY, True, scope="algebra")
    outer = Report("outer")
    outer.extend(inner, "hopf")
    assert [c.scope for c in outer.checks] == ["hopf", "hopf/algebra"]
    assert outer.find(Identity.ASSOCIATIVITY, "hopf/algebra")
    assert not outer.find(Identity.ASSOCIATIVITY, "algebra")


def test_require_raises_with_report(caplog: pytest.LogCaptureFixture) -> None:
    report = Report("subject")
    report.record(Identity.PENTAGON, False, witness=(0, 1, 0, 1))
    with caplog.at_level(logging.WARNING):
        with pytest.raises(CertificationError) as excinfo:
            report.require(CertificationError, "certificate")
    assert excinfo.value.report is report
    assert "pentagon" in str(excinfo.value)
    assert "pentagon" in caplog.text


def test_to_dict_is_json_and_timing_is_optional() -> None:
    report = Report("subject", elapsed=0.25)
    report.record(Identity.UNIT, True)
    plain = report.to_dict()
    assert "elapsed" not in plain
    assert plain == {
        "subject": "subject",
        "verdict": "pass",
        "identities": [],
        "checks": [{"identity": "unit", "verdict": "pass"}],
    }
    assert report.to_dict(timing=True)["elapsed"] == 0.25
    json.dumps(report.to_dict(timing=True))


def test_summary() -> None:
    report = Report("subject")
    report.record(Identity.UNIT, True)
    report.record(Identity.PENTAGON, False, witness=(1,))
    lines = report.summary().splitlines()
    assert lines[0] == "subject: FAIL (2 checks)"
    assert "pentagon" in lines[2] and "(1,)" in lines[2]


def test_report_attaches_tags_from_its_table() -> None:
    report = Report("subject", tags={Identity.PENTAGON: "q3", Identity.UNIT: "unitate"})
    t = Tensor.of(QQ, [1])
    assert report.check_equal(Identity.PENTAGON, t, t, 1).tag == "q3"
    assert report.record(Identity.ASSOCIATIVITY, True).tag is None
    assert report.check_equal(Identity.UNIT, t, t, 1, tag="own").tag == "own"
    assert report.checks[0].to_dict() == {"identity": "pentagon", "tag": "q3", "verdict": "pass"}
    assert "(q3)" in report.checks[0].describe()


def test_identities_group_checks_by_tag() -> None:
    tags = {Identity.COUNIT_LEFT: "q2", Identity.COUNIT_RIGHT: "q2", Identity.PENTAGON: "q3"}
    report = Report("subject", tags=tags)
    report.record(Identity.COUNIT_LEFT, True)
    report.record(Identity.PENTAGON, True)
    report.record(Identity.ASSOCIATIVITY, True)
    report.record(Identity.COUNIT_RIGHT, False, witness=(1,))
    entries = report.identities()
    assert [e["id"] for e in entries] == ["q2", "q3"]
    assert entries[0]["verdict"] == "fail"
    assert entries[0]["failure"]["identity"] == "counit-right"
    assert entries[0]["failure"]["witness"] == [1]
    assert entries[1] == {"id": "q3", "verdict": "pass"}
    assert report.verdict_of_tag("q2") is Verdict.FAIL
    assert report.verdict_of_tag("q3") is Verdict.PASS
    with pytest.raises(KeyError):
        report.verdict_of_tag("q1")


def test_tag_of_not_applicable_checks() -> None:
    report = Report("subject", tags={Identity.PENTAGON: "q3"})
    report.not_applicable(Identity.PENTAGON)
    assert report.identities() == [{"id": "q3", "verdict": "not-applicable"}]


def test_extend_keeps_tags() -> None:
    inner = Report("inner", tags={Identity.PENTAGON: "q3"})
    inner.record(Identity.PENTAGON, True)
    outer = Report("outer", tags={Identity.PENTAGON: "other"})
    outer.extend(inner, "hopf")
    assert outer.checks[0].tag == "q3" and outer.checks[0].scope == "hopf"
    assert inner.checks[0].scope == ""
